#pragma once

#include <vector>

#include "cdc/graph.hpp"
#include "cdc/matching.hpp"
#include "cdc/postman.hpp"

namespace cdc {

/// G with each component of G - M contracted to a vertex. Edges of h
/// correspond to matching edges; matching edges inside one component would
/// become loops and are dropped (recorded in loop_edges).
struct ContractedMultigraph {
    Multigraph h;
    std::vector<int> component_of;      // g-vertex -> h-vertex
    std::vector<int> h_edge_to_g_edge;  // h-edge id -> matching edge id
    std::vector<int> loop_edges;        // discarded matching edge ids
};

ContractedMultigraph contract_cycles(const CubicGraph& g, const Matching& m);

/// k pairwise edge-disjoint spanning trees of h (matroid-union augmentation).
/// Throws PackingInfeasible carrying a partition P of V(h) with fewer than
/// k(|P|-1) crossing edges (the Nash-Williams/Tutte certificate).
std::vector<SpanningTree> edge_disjoint_spanning_trees(const Multigraph& h, int k);

}  // namespace cdc
