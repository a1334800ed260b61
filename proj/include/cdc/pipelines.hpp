#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"
#include "cdc/matching.hpp"
#include "cdc/partial_cdc.hpp"
#include "cdc/postman.hpp"
#include "cdc/tree_packing.hpp"

namespace cdc {

enum class Strategy { HalfN, TenthN, Over2k, Cyclic2k };

std::string_view strategy_name(Strategy s);  // "half-n", "tenth-n", "over-2k", "cyclic-2k"

struct PipelineWitness {
    std::optional<Matching> m1;       // the matching (M, or M1)
    std::optional<Matching> m2;       // M2 / M' when a second matching is used
    std::optional<PostmanSet> postman;
    std::optional<SpanningTree> tree_g;
    std::vector<int> tree_h_lifted;   // matching edges of the lifted T_H
    int k = 0;                        // connectivity parameter, when applicable
    std::vector<ClosedWalk> walks;    // the partial CDC
    int c1_walks = 0;                 // leading walks come from C1
};

struct PipelineResult {
    Strategy strategy{};
    int n = 0;
    long long bound_num = 0, bound_den = 1;  // claimed singular bound, exact
    Embedding embedding;
    FdcReport report;
    std::vector<int> covered_edges;          // edges covered by the partial CDC
    PipelineWitness witness;
    bool connectivity_trusted = false;       // precondition taken on faith (guard)
};

/// Any perfect matching M; the circuits of G - M form the partial CDC.
/// Singular edges lie in M, so at most n/2 of them.
PipelineResult embed_half_n(const CubicGraph& g);

/// M1 avoiding 3-cuts, M2 minimizing the overlap; C1 = G - M1 and
/// C2 = M1 ^ M2. Singular edges lie in M1 n M2, so at most n/10.
PipelineResult embed_tenth_n(const CubicGraph& g);

/// Any M and the overlap-minimizing M'; on a cyclically k-edge-connected
/// graph (k >= 3, auto-computed within the guard) the fractional
/// perfect-matching point certifies |M n M'| <= n/2k.
PipelineResult embed_over_2k(const CubicGraph& g, std::optional<int> k = std::nullopt,
                             int connectivity_guard = 64);

/// Contract G - M, pack k edge-disjoint spanning trees in H, lift the
/// smallest into a spanning tree of G, take its postman set J; C1 = G - J,
/// C2 = M ^ J leave at most |E(T_H)| <= n/2k uncovered edges.
PipelineResult pipeline_cyclically_2k(const CubicGraph& g, int k,
                                      std::optional<Matching> m = std::nullopt,
                                      int connectivity_guard = 64);

struct BenderRichmondComparison {
    int singular_count = 0;
    long long our_num = 0, our_den = 1;
    int br_bound = 0;
    std::string surface;  // e.g. "sphere", "orientable genus 2", "non-orientable genus 3"
    std::string smaller;  // "ours", "bender-richmond", or "equal"
};

/// Compare the pipeline's bound with the Euler-characteristic bound of the
/// achieved embedding (6g-3 orientable, 3g~-3 non-orientable; sphere 0,
/// projective plane 1).
BenderRichmondComparison compare_bender_richmond(const PipelineResult& result);

}  // namespace cdc
