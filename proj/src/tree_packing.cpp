#include "cdc/tree_packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace cdc {

ContractedMultigraph contract_cycles(const CubicGraph& g, const Matching& m) {
    m.validate_perfect(g);
    int n = g.vertex_count();
    ContractedMultigraph out;
    out.component_of.assign(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (out.component_of[s] != -1) continue;
        out.component_of[s] = comps;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.darts_at(v)) {
                int e = Multigraph::dart_edge(d);
                if (m.contains(e)) continue;
                int w = g.dart_vertex(Multigraph::dart_mate(d));
                if (out.component_of[w] == -1) {
                    out.component_of[w] = comps;
                    stack.push_back(w);
                }
            }
        }
        ++comps;
    }
    std::vector<Edge> h_edges;
    for (int e : m.edges) {
        int cu = out.component_of[g.edge(e).u], cv = out.component_of[g.edge(e).v];
        if (cu == cv) {
            out.loop_edges.push_back(e);
        } else {
            h_edges.push_back({cu, cv});
            out.h_edge_to_g_edge.push_back(e);
        }
    }
    out.h = Multigraph(comps, std::move(h_edges));
    return out;
}

namespace {

/// Path between u and v inside one forest (edge ids), or empty if none.
std::vector<int> forest_path(const Multigraph& h, const std::vector<std::vector<int>>& forest_at,
                             const std::vector<int>& color, int want, int u, int v) {
    int n = h.vertex_count();
    std::vector<int> via_edge(n, -1);
    std::vector<char> seen(n, 0);
    seen[u] = 1;
    std::queue<int> q;
    q.push(u);
    while (!q.empty() && !seen[v]) {
        int x = q.front();
        q.pop();
        for (int e : forest_at[x]) {
            if (color[e] != want) continue;
            int w = h.other_endpoint(e, x);
            if (seen[w]) continue;
            seen[w] = 1;
            via_edge[w] = e;
            q.push(w);
        }
    }
    if (!seen[v]) return {};
    std::vector<int> path;
    for (int x = v; x != u;) {
        int e = via_edge[x];
        path.push_back(e);
        x = h.other_endpoint(e, x);
    }
    return path;
}

SpanningTree tree_from_edges(const Multigraph& h, std::vector<int> edges) {
    SpanningTree t;
    std::sort(edges.begin(), edges.end());
    t.edges = std::move(edges);
    int n = h.vertex_count();
    t.parent_vertex.assign(n, -1);
    t.parent_edge.assign(n, -1);
    std::vector<char> in_tree(h.edge_count(), 0);
    for (int e : t.edges) in_tree[e] = 1;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : h.darts_at(v)) {
            int e = Multigraph::dart_edge(d);
            if (!in_tree[e]) continue;
            int w = h.dart_vertex(Multigraph::dart_mate(d));
            if (seen[w]) continue;
            seen[w] = 1;
            t.parent_vertex[w] = v;
            t.parent_edge[w] = e;
            q.push(w);
        }
    }
    t.validate_spanning(h);
    return t;
}

}  // namespace

std::vector<SpanningTree> edge_disjoint_spanning_trees(const Multigraph& h, int k) {
    if (k < 1) throw MalformedInput("tree packing requires k >= 1");
    if (!h.is_connected()) throw MalformedInput("tree packing requires a connected graph");
    int n = h.vertex_count(), m = h.edge_count();
    if (n == 1) {
        SpanningTree empty;
        empty.parent_vertex = {-1};
        empty.parent_edge = {-1};
        return std::vector<SpanningTree>(k, empty);
    }

    std::vector<int> color(m, -1);
    std::vector<std::vector<int>> incident(n);  // all edge ids per vertex
    for (int e = 0; e < m; ++e) {
        incident[h.edge(e).u].push_back(e);
        incident[h.edge(e).v].push_back(e);
    }

    // Edmonds matroid-partition augmentation: BFS over edges; an arc x -> y
    // (parent[y] = x) means freeing y's color slot lets x take it.
    std::vector<int> parent(m), labeled(m);
    auto try_insert = [&](int e0, std::vector<char>* reach) -> bool {
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(labeled.begin(), labeled.end(), 0);
        std::vector<int> queue{e0};
        labeled[e0] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int i = 0; i < k; ++i) {
                if (color[x] == i) continue;
                std::vector<int> cyc =
                    forest_path(h, incident, color, i, h.edge(x).u, h.edge(x).v);
                if (cyc.empty()) {
                    // forest i accepts x: recolor along the parent chain
                    int cur = x, slot = i;
                    while (cur != -1) {
                        int old = color[cur];
                        color[cur] = slot;
                        slot = old;
                        cur = parent[cur];
                    }
                    return true;
                }
                for (int y : cyc)
                    if (!labeled[y]) {
                        labeled[y] = 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
            }
        }
        if (reach)
            for (int e = 0; e < m; ++e)
                if (labeled[e]) (*reach)[e] = 1;
        return false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < m; ++e)
            if (color[e] == -1 && try_insert(e, nullptr)) progress = true;
    }

    int colored = 0;
    for (int e = 0; e < m; ++e) colored += color[e] != -1;
    if (colored < k * (n - 1)) {
        // Tutte certificate: the reach-closure A of the uncolored edges spans
        // vertex sets on which every forest is maximal; its components (plus
        // singletons) form a partition with too few crossing edges.
        std::vector<char> reach(m, 0);
        for (int e = 0; e < m; ++e)
            if (color[e] == -1) try_insert(e, &reach);
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int e = 0; e < m; ++e)
            if (reach[e]) uf[find(h.edge(e).u)] = find(h.edge(e).v);
        std::vector<int> part_of(n), remap(n, -1);
        int parts = 0;
        for (int v = 0; v < n; ++v) {
            int r = find(v);
            if (remap[r] == -1) remap[r] = parts++;
            part_of[v] = remap[r];
        }
        int cross = 0;
        for (int e = 0; e < m; ++e) cross += part_of[h.edge(e).u] != part_of[h.edge(e).v];
        if (cross >= k * (parts - 1))
            throw Error("internal: tree packing failed without a valid certificate");
        throw PackingInfeasible("only " + std::to_string(colored) + " of " +
                                    std::to_string(k * (n - 1)) +
                                    " forest edges exist; a partition into " +
                                    std::to_string(parts) + " parts has " + std::to_string(cross) +
                                    " crossing edges",
                                part_of, parts, cross);
    }

    std::vector<std::vector<int>> per_color(k);
    for (int e = 0; e < m; ++e)
        if (color[e] != -1) per_color[color[e]].push_back(e);
    std::vector<SpanningTree> trees;
    for (int i = 0; i < k; ++i) trees.push_back(tree_from_edges(h, std::move(per_color[i])));
    return trees;
}

}  // namespace cdc
