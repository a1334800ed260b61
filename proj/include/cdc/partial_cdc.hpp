#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"
#include "cdc/walk.hpp"

namespace cdc {

/// Angle: an unordered pair of edges meeting at a vertex.
struct Angle {
    int v;
    int e_lo, e_hi;
    auto operator<=>(const Angle&) const = default;
};

struct Violation {
    enum class Kind {
        EdgeOverused,    // edge covered more than twice (C1)
        SameWalkEdge,    // edge covered twice by one walk (C1)
        DuplicateWalk,   // edge covered twice by two copies of the same walk identity (C1)
        AngleReused,     // angle used by two passages (C2)
    };
    Kind kind;
    int edge = -1;
    Angle angle{-1, -1, -1};
    std::vector<int> walk_indices;
    std::string message;
};

/// Per-vertex link graph: nodes are the three incident edges; each walk
/// passage e,v,f contributes the link {e,f}. Valid partial CDCs have max
/// degree 2 and no parallel links, so the graph embeds in a triangle.
struct LinkGraph {
    int vertex = -1;
    std::vector<std::pair<int, int>> links;  // (e_lo, e_hi) per passage
};

struct PartialCdc {
    std::vector<ClosedWalk> walks;
    std::vector<int> edge_usage;                // per edge: 0, 1, or 2
    std::map<Angle, std::vector<int>> angle_usage;  // angle -> walk indices using it

    /// Edges not covered by any walk; only these can end up singular.
    std::vector<int> uncovered_edges() const;
};

/// C1/C2 check. Walks are first validated against g (throws NotAWalk); walk
/// identity is the canonical key, so a reversed duplicate still counts as the
/// same walk.
std::optional<Violation> validate_partial_cdc(const CubicGraph& g,
                                              const std::vector<ClosedWalk>& walks);

/// Validates and packages; throws Error with the violation message if invalid.
PartialCdc make_partial_cdc(const CubicGraph& g, std::vector<ClosedWalk> walks);

LinkGraph link_graph(const CubicGraph& g, const std::vector<ClosedWalk>& walks, int v);

/// Extend a valid partial CDC to an embedding in which every walk is a facial
/// walk: complete each link graph to an oriented triangle (deterministically,
/// ascending edge ids), read the rotations off the arcs, then assign each
/// covered edge the signature forced by its walk passages; untouched edges get
/// +1. The result is re-traced and every input walk is checked to reappear.
/// InconsistentLambda is an internal soundness assertion and never fires on
/// validated input.
Embedding extend_to_embedding(const CubicGraph& g, const PartialCdc& pcdc);

/// Verifier: every angle of the embedding belongs to exactly one facial walk.
/// Returns angle -> face index; throws Error if an angle is missed or reused.
std::map<Angle, int> angle_coverage(const CubicGraph& g, const std::vector<FacialWalk>& faces);

}  // namespace cdc
