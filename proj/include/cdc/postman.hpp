#pragma once

#include <span>
#include <vector>

#include "cdc/graph.hpp"
#include "cdc/matching.hpp"
#include "cdc/partial_cdc.hpp"
#include "cdc/walk.hpp"

namespace cdc {

struct SpanningTree {
    std::vector<int> edges;          // sorted edge ids, |edges| = n-1
    std::vector<int> parent_vertex;  // rooted at 0; parent_vertex[0] = -1
    std::vector<int> parent_edge;    // edge to parent; parent_edge[0] = -1

    bool contains(int e) const;
    void validate_spanning(const Multigraph& g) const;  // throws Error
};

/// Spanning tree containing required_edges: the required components are
/// contracted and completed by BFS from vertex 0 scanning edges in id order.
SpanningTree spanning_tree(const Multigraph& g, std::span<const int> required_edges = {});

/// Postman set: every vertex of a cubic graph has odd incidence (1 or 3).
struct PostmanSet {
    std::vector<int> edges;  // sorted

    bool contains(int e) const;
    void validate_postman(const CubicGraph& g) const;  // throws Error
};

/// Leaf-stripping with parity labels: all labels start 1 (cubic, odd degree);
/// peel leaves FIFO, taking the leaf edge into J iff the label is 1 and
/// flipping the neighbor's label. J is always inside the tree.
PostmanSet postman_from_tree(const CubicGraph& g, const SpanningTree& t);

/// The matching/postman partial CDC: C1 = circuits of G - J, C2 = circuits of
/// M ^ J (symmetric difference). Uncovered edges are exactly M n J.
struct MatchingPostmanCdc {
    PartialCdc pcdc;
    int c1_walks = 0;            // leading walks of pcdc.walks come from G - J
    std::vector<int> uncovered;  // = M n J, sorted
};

MatchingPostmanCdc partial_cdc_from_matching_postman(const CubicGraph& g, const Matching& m,
                                                     const PostmanSet& j);

}  // namespace cdc
