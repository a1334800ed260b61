#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

/// Closed walk (v0, e0, v1, e1, ..., v_t = v0), stored as (v_i, e_i) pairs.
/// Edge e_i joins v_i to v_{i+1}.
struct ClosedWalk {
    std::vector<std::pair<int, int>> steps;

    int length() const { return static_cast<int>(steps.size()); }

    /// Lexicographically smallest rotation over the walk and its reversal;
    /// cyclic shifts and reversals of a walk are the same walk.
    std::vector<std::pair<int, int>> canonical_key() const;

    /// Checks the sequence is a closed walk of g (length >= 2, every edge
    /// joins its stated endpoints). Throws NotAWalk.
    void validate_in(const Multigraph& g) const;

    bool operator==(const ClosedWalk&) const = default;
};

/// A facial walk is a closed walk produced by the face-tracing successor rule.
using FacialWalk = ClosedWalk;

/// Decompose an edge subset in which every vertex has degree 0 or 2 into
/// circuits: repeatedly start at the smallest unused edge id and follow the
/// unique continuation. Throws InternalDegreeError on any odd/high degree.
std::vector<ClosedWalk> decompose_into_circuits(const Multigraph& g, std::span<const int> edge_set);

}  // namespace cdc
