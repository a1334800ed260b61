#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/errors.hpp"

namespace cdc {

struct Edge {
    int u = -1;
    int v = -1;
    bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with stable ordinal edge ids and a dart view.
/// Edge e yields darts 2e (at endpoint u) and 2e+1 (at endpoint v); parallel
/// edges are permitted, loops are not. Immutable after construction.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incident darts of v, in edge-id order.
    std::span<const int> darts_at(int v) const {
        return {darts_.data() + dart_off_[v],
                static_cast<std::size_t>(dart_off_[v + 1] - dart_off_[v])};
    }
    int degree(int v) const { return dart_off_[v + 1] - dart_off_[v]; }

    static int dart(int e, int end) { return 2 * e + end; }
    static int dart_edge(int d) { return d >> 1; }
    static int dart_end(int d) { return d & 1; }
    static int dart_mate(int d) { return d ^ 1; }
    int dart_vertex(int d) const {
        const Edge& e = edges_[d >> 1];
        return (d & 1) ? e.v : e.u;
    }
    int other_endpoint(int e, int v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }
    /// The dart of edge e at endpoint v (loops are excluded, so it is unique).
    int dart_at(int e, int v) const { return 2 * e + (edges_[e].u == v ? 0 : 1); }

    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> darts_;     // all darts grouped by vertex
    std::vector<int> dart_off_;  // per-vertex offsets into darts_
};

/// A connected cubic multigraph (every vertex has degree exactly 3, no loops).
class CubicGraph : public Multigraph {
public:
    CubicGraph() = default;
    explicit CubicGraph(Multigraph g);
    CubicGraph(int n, std::vector<Edge> edges) : CubicGraph(Multigraph(n, std::move(edges))) {}
};

enum class GraphFormat { graph6, edge_list };

// --- parsing / serialization ---

/// Parse a graph in the given format and validate it is cubic and connected.
CubicGraph parse_graph(std::string_view text, GraphFormat format);

Multigraph parse_edge_list(std::string_view text);
Multigraph parse_graph6(std::string_view text);
std::string write_edge_list(const Multigraph& g);
std::string write_graph6(const Multigraph& g);  // simple graphs only

// --- generators ---

CubicGraph generate_petersen();

/// Cubic inflation of K_n: each vertex becomes a circuit of length n-1 whose
/// i-th vertex carries the K_n edge to the i-th neighbor in a seed-shuffled
/// ascending order. n = 3 would expand to digons and is rejected.
CubicGraph generate_gn(int n, std::uint64_t seed);

/// Connected bridgeless cubic simple graph on n vertices via pairing-model
/// rejection sampling; deterministic for a fixed seed.
CubicGraph generate_random_cubic_bridgeless(int n, std::uint64_t seed);

// --- connectivity analysis ---

/// Edge ids of all bridges (one low-link DFS; parallel edges handled).
std::vector<int> find_bridges(const Multigraph& g);

int edge_connectivity(const CubicGraph& g);  // in {1,2,3} for cubic

/// Minimum size of an edge cut separating two cycle-containing subgraphs.
/// nullopt means Infinite: the graph has no two vertex-disjoint circuits.
std::optional<int> cyclic_edge_connectivity(const CubicGraph& g);

struct EdgeCut {
    std::vector<int> side;       // vertex subset U, sorted
    std::vector<int> cut_edges;  // edge ids of delta(U), sorted
    bool cyclic = false;         // both sides contain a cycle
};

/// All 3-edge cuts of a 3-edge-connected cubic graph, trivial vertex cuts
/// included; cyclic cuts flagged. Throws NotThreeEdgeConnected otherwise.
std::vector<EdgeCut> enumerate_3_edge_cuts(const CubicGraph& g);

}  // namespace cdc
