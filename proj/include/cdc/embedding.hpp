#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cdc/graph.hpp"
#include "cdc/walk.hpp"

namespace cdc {

/// Combinatorial embedding of a cubic graph: a rotation (cyclic order of the
/// three incident darts) per vertex and a +-1 signature per edge.
struct Embedding {
    std::vector<std::array<int, 3>> rotation;
    std::vector<std::int8_t> signature;

    int rot_next(int v, int d) const {
        const auto& r = rotation[v];
        return r[0] == d ? r[1] : r[1] == d ? r[2] : r[0];
    }
    int rot_prev(int v, int d) const {
        const auto& r = rotation[v];
        return r[0] == d ? r[2] : r[1] == d ? r[0] : r[1];
    }

    /// Ascending-dart rotations, all-positive signature.
    static Embedding trivial(const CubicGraph& g);

    /// Structural consistency with g; throws VerificationFailure.
    void validate(const CubicGraph& g) const;

    bool operator==(const Embedding&) const = default;
};

std::vector<FacialWalk> trace_facial_walks(const CubicGraph& g, const Embedding& emb);

/// Edges used twice by a single facial walk. Sorted.
std::vector<int> singular_edges(const std::vector<FacialWalk>& faces);

struct FdcReport {
    std::vector<FacialWalk> faces;
    std::vector<int> singular;
    int face_count = 0;
    int euler_characteristic = 0;
    bool orientable = false;
    int genus_like = 0;               // g with chi = 2-2g, or g~ with chi = 2-g~
    int bender_richmond_bound = 0;    // 6g-3 / 3g~-3; sphere 0, projective plane 1
};

FdcReport surface_stats(const CubicGraph& g, const Embedding& emb, std::vector<FacialWalk> faces);

/// Lightweight trace: face count and singular-edge count only, no walks.
/// Scratch buffers are reused across calls.
struct TraceScratch {
    std::vector<char> visited;
    std::vector<int> last_face;
};
struct TraceCounts {
    int faces = 0;
    int singular = 0;
};
TraceCounts trace_counts(const CubicGraph& g, const Embedding& emb, TraceScratch& scratch);

/// Stream all embeddings up to the standard normalization (signature fixed to
/// +1 on a BFS spanning tree): 2^n rotations x 2^(m-n+1) signatures. The
/// callback returns false to stop early. Throws TooLarge above the guard.
void enumerate_embeddings(const CubicGraph& g, const std::function<bool(const Embedding&)>& fn,
                          int guard = 14);

}  // namespace cdc
