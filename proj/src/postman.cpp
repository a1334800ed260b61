#include "cdc/postman.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace cdc {

bool SpanningTree::contains(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

void SpanningTree::validate_spanning(const Multigraph& g) const {
    if (static_cast<int>(edges.size()) != g.vertex_count() - 1)
        throw Error("spanning tree has " + std::to_string(edges.size()) + " edges for n = " +
                    std::to_string(g.vertex_count()));
    std::vector<int> uf(g.vertex_count());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int e : edges) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) throw Error("spanning tree contains a cycle through edge " + std::to_string(e));
        uf[a] = b;
    }
}

bool PostmanSet::contains(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

void PostmanSet::validate_postman(const CubicGraph& g) const {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e : edges) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 1 && deg[v] != 3)
            throw Error("postman set has even incidence " + std::to_string(deg[v]) + " at vertex " +
                        std::to_string(v));
}

SpanningTree spanning_tree(const Multigraph& g, std::span<const int> required_edges) {
    int n = g.vertex_count();
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int e : required_edges) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) throw RequiredEdgesCyclic("required edges contain a cycle through edge " +
                                              std::to_string(e));
        uf[a] = b;
        in_tree[e] = 1;
    }
    // BFS over required-component supernodes from vertex 0, edges in id order.
    std::vector<int> comp_of(n);
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v) {
        comp_of[v] = find(v);
        members[comp_of[v]].push_back(v);
    }
    std::vector<char> comp_seen(n, 0);
    std::vector<int> frontier;
    auto absorb = [&](int v) {  // add v's whole required-component to the frontier
        for (int w : members[comp_of[v]])
            if (!comp_seen[w]) {
                comp_seen[w] = 1;
                frontier.push_back(w);
            }
    };
    absorb(0);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        int v = frontier[i];
        for (int d : g.darts_at(v)) {
            int e = Multigraph::dart_edge(d);
            int w = g.dart_vertex(Multigraph::dart_mate(d));
            if (comp_seen[w]) continue;
            in_tree[e] = 1;
            absorb(w);
        }
    }

    SpanningTree t;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_tree[e]) t.edges.push_back(e);
    t.validate_spanning(g);
    // parent arrays by BFS from 0 within the tree
    t.parent_vertex.assign(n, -1);
    t.parent_edge.assign(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.darts_at(v)) {
            int e = Multigraph::dart_edge(d);
            if (!in_tree[e]) continue;
            int w = g.dart_vertex(Multigraph::dart_mate(d));
            if (seen[w]) continue;
            seen[w] = 1;
            t.parent_vertex[w] = v;
            t.parent_edge[w] = e;
            q.push(w);
        }
    }
    return t;
}

PostmanSet postman_from_tree(const CubicGraph& g, const SpanningTree& t) {
    t.validate_spanning(g);
    int n = g.vertex_count();
    std::vector<std::vector<int>> tree_at(n);  // tree edge ids per vertex
    for (int e : t.edges) {
        tree_at[g.edge(e).u].push_back(e);
        tree_at[g.edge(e).v].push_back(e);
    }
    std::vector<int> tdeg(n);
    std::vector<char> label(n, 1);  // cubic: every degree is odd
    std::vector<char> removed_vertex(n, 0);
    std::vector<char> removed_edge(g.edge_count(), 0);
    std::queue<int> leaves;
    for (int v = 0; v < n; ++v) {
        tdeg[v] = static_cast<int>(tree_at[v].size());
        if (tdeg[v] == 1) leaves.push(v);
    }
    PostmanSet j;
    int processed = 0;
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        if (removed_vertex[v] || tdeg[v] != 1) continue;
        int e = -1;
        for (int cand : tree_at[v])
            if (!removed_edge[cand]) e = cand;
        removed_vertex[v] = 1;
        removed_edge[e] = 1;
        int u = g.other_endpoint(e, v);
        if (label[v]) {
            j.edges.push_back(e);
            label[u] ^= 1;
        }
        if (--tdeg[u] == 1) leaves.push(u);
        ++processed;
    }
    if (processed != n - 1) throw Error("internal: leaf stripping did not consume the tree");
    std::sort(j.edges.begin(), j.edges.end());
    j.validate_postman(g);
    return j;
}

MatchingPostmanCdc partial_cdc_from_matching_postman(const CubicGraph& g, const Matching& m,
                                                     const PostmanSet& j) {
    m.validate_perfect(g);
    j.validate_postman(g);
    std::vector<int> c1_edges, c2_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        bool in_m = m.contains(e), in_j = j.contains(e);
        if (!in_j) c1_edges.push_back(e);         // C1 = G - J
        if (in_m != in_j) c2_edges.push_back(e);  // C2 = M symmetric-difference J
    }
    MatchingPostmanCdc out;
    std::vector<ClosedWalk> walks = decompose_into_circuits(g, c1_edges);
    out.c1_walks = static_cast<int>(walks.size());
    for (ClosedWalk& w : decompose_into_circuits(g, c2_edges)) walks.push_back(std::move(w));
    out.pcdc = make_partial_cdc(g, std::move(walks));
    std::set_intersection(m.edges.begin(), m.edges.end(), j.edges.begin(), j.edges.end(),
                          std::back_inserter(out.uncovered));
    return out;
}

}  // namespace cdc
