#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

/// Exact minimum-weight perfect matching on a general loopless multigraph
/// (Edmonds' blossom algorithm, primal-dual form). Integer weights, integer
/// dual arithmetic; deterministic for fixed input. Returns matched edge ids,
/// sorted. Throws NoPerfectMatching when none exists.
std::vector<int> blossom_min_weight_perfect_matching(int n, std::span<const Edge> edges,
                                                     std::span<const std::int64_t> weights);

/// Cardinality-only convenience: minimum-weight with all-zero weights.
std::vector<int> blossom_perfect_matching(int n, std::span<const Edge> edges);

}  // namespace cdc
