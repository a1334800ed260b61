#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

/// Perfect matching: an edge set covering every vertex exactly once.
struct Matching {
    std::vector<int> edges;  // sorted edge ids

    bool contains(int e) const;
    void validate_perfect(const Multigraph& g) const;  // throws NoPerfectMatching
};

/// Any perfect matching, deterministic for fixed input.
Matching perfect_matching(const CubicGraph& g);

/// Minimum-weight perfect matching; among all optimal matchings, returns the
/// lexicographically smallest edge-id set (forced greedily, ascending ids).
Matching min_weight_perfect_matching(const CubicGraph& g, std::span<const std::int64_t> weights);

/// A perfect matching M1 containing no 3-edge cut, via a cutting-plane loop:
/// while some 3-cut lies inside the matching, re-solve a min-weight matching
/// whose weights count violated-cut memberships. iteration_cap < 0 means |E|.
Matching matching_avoiding_3cuts(const CubicGraph& g, int iteration_cap = -1);

/// M2 minimizing |M1 ^ M2| (min-weight matching under the indicator of M1);
/// asserts the Kaiser-Kral-Norine bound |M1 ^ M2| <= n/10.
Matching second_matching_kkn(const CubicGraph& g, const Matching& m1);

/// The fractional perfect-matching point: 1/k on matching edges, (k-1)/(2k)
/// elsewhere. Exact arithmetic: value(e) = numer[e] / (2k).
struct FractionalPmPoint {
    int k = 0;
    std::vector<std::int64_t> numer;
};

FractionalPmPoint fractional_point(const CubicGraph& g, const Matching& m, int k);

std::int64_t matching_weight(const Matching& m, std::span<const std::int64_t> weights);
std::vector<int> matching_intersection(const Matching& a, const Matching& b);

}  // namespace cdc
