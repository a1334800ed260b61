#include "cdc/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cdc/rng.hpp"

namespace cdc {

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw MalformedInput("negative vertex count");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
            throw MalformedInput("edge " + std::to_string(e) + " references an invalid vertex");
        if (ed.u == ed.v)
            throw LoopEdge("edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(ed.u));
    }
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    dart_off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) dart_off_[v + 1] = dart_off_[v] + deg[v];
    darts_.resize(2 * edges_.size());
    std::vector<int> fill(dart_off_.begin(), dart_off_.end() - 1);
    for (int e = 0; e < edge_count(); ++e) {
        darts_[fill[edges_[e].u]++] = dart(e, 0);
        darts_[fill[edges_[e].v]++] = dart(e, 1);
    }
}

bool Multigraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : darts_at(v)) {
            int w = dart_vertex(dart_mate(d));
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

CubicGraph::CubicGraph(Multigraph g) : Multigraph(std::move(g)) {
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) != 3)
            throw NotCubic("vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)));
    if (!is_connected()) throw NotConnected("graph is not connected");
}

// --- formats ---

Multigraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw MalformedInput("edge_list: bad \"n m\" header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw MalformedInput("edge_list: expected " + std::to_string(m) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw MalformedInput("edge_list: vertex id out of range on edge " + std::to_string(i));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string rest;
    if (in >> rest) throw MalformedInput("edge_list: trailing data \"" + rest + "\"");
    return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace {
constexpr int kG6Lo = 63, kG6Hi = 126;

int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw MalformedInput("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < kG6Lo || c > kG6Hi) throw MalformedInput("graph6: invalid character");
    return c - kG6Lo;
}
}  // namespace

Multigraph parse_graph6(std::string_view text) {
    // One graph per line; parse the first line, optional ">>graph6<<" prefix.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (auto nl = text.find('\n'); nl != std::string_view::npos) text = text.substr(0, nl);
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
    if (text.empty()) throw MalformedInput("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (g6_byte(text, 0) == 63) {
        if (text.size() > 1 && g6_byte(text, 1) == 63)
            throw MalformedInput("graph6: 8-byte vertex counts not supported");
        n = (static_cast<long long>(g6_byte(text, 1)) << 12) | (g6_byte(text, 2) << 6) | g6_byte(text, 3);
        pos = 4;
    } else {
        n = g6_byte(text, 0);
        pos = 1;
    }
    long long bits = n * (n - 1) / 2;
    std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != pos + bytes) throw MalformedInput("graph6: wrong length for n=" + std::to_string(n));

    std::vector<Edge> edges;
    long long b = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++b) {
            int byte = g6_byte(text, pos + static_cast<std::size_t>(b / 6));
            if ((byte >> (5 - b % 6)) & 1) edges.push_back({i, j});
        }
    }
    return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Multigraph& g) {
    int n = g.vertex_count();
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) throw MalformedInput("graph6 cannot encode parallel edges");
        adj[e.u][e.v] = adj[e.v][e.u] = 1;
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Lo + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Lo + 63));
        out.push_back(static_cast<char>(kG6Lo + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Lo + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Lo + (n & 63)));
    } else {
        throw MalformedInput("graph6: n too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[i][j];
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kG6Lo + acc));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kG6Lo + (acc << (6 - nbits))));
    return out;
}

CubicGraph parse_graph(std::string_view text, GraphFormat format) {
    Multigraph g = format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
    return CubicGraph(std::move(g));
}

// --- generators ---

CubicGraph generate_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});              // outer circuit
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});      // inner pentagram
    for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});                    // spokes
    return CubicGraph(10, std::move(edges));
}

CubicGraph generate_gn(int n, std::uint64_t seed) {
    if (n < 3) throw MalformedInput("generate_gn requires n >= 3");
    if (n == 3) throw DegenerateExpansion("n = 3 expands vertices to digons");
    int c = n - 1;  // circuit length per cluster
    Rng rng(seed);
    std::vector<std::vector<int>> slot(n);  // slot[v][i] = neighbor on circuit position i
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w)
            if (w != v) slot[v].push_back(w);
        rng.shuffle(slot[v]);
    }
    std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < c; ++i) pos[v][slot[v][i]] = i;

    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < c; ++i) edges.push_back({v * c + i, v * c + (i + 1) % c});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u * c + pos[u][v], v * c + pos[v][u]});
    return CubicGraph(n * c, std::move(edges));
}

CubicGraph generate_random_cubic_bridgeless(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw GenerationFailure("n must be even and at least 4, got " + std::to_string(n));
    Rng rng(seed);
    std::vector<int> points(3 * static_cast<std::size_t>(n));
    constexpr int kRetries = 2000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::iota(points.begin(), points.end(), 0);
        rng.shuffle(points);
        std::vector<Edge> edges;
        edges.reserve(3 * static_cast<std::size_t>(n) / 2);
        bool ok = true;
        std::set<std::pair<int, int>> dedupe;
        for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
            int u = points[i] / 3, v = points[i + 1] / 3;
            if (u == v || !dedupe.insert(std::minmax(u, v)).second) {
                ok = false;
                break;
            }
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
        Multigraph g(n, std::move(edges));
        if (!g.is_connected() || !find_bridges(g).empty()) continue;
        return CubicGraph(std::move(g));
    }
    throw GenerationFailure("no simple bridgeless cubic graph found after " +
                            std::to_string(kRetries) + " attempts (n = " + std::to_string(n) + ")");
}

// --- connectivity ---

std::vector<int> find_bridges(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> bridges;
    struct Frame {
        int v;
        std::size_t i;
        int entry_edge;
    };
    int timer = 0;
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = timer++;
        stack.push_back({s, 0, -1});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto darts = g.darts_at(f.v);
            if (f.i < darts.size()) {
                int d = darts[f.i++];
                int e = Multigraph::dart_edge(d);
                if (e == f.entry_edge) continue;  // skip the entry edge once; parallels have other ids
                int w = g.dart_vertex(Multigraph::dart_mate(d));
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0, e});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p]) bridges.push_back(done.entry_edge);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

namespace {

/// Max number of edge-disjoint paths between vertex sets S and T (unit
/// capacities, undirected), capped at `limit`. BFS augmentation.
int edge_disjoint_path_count(const Multigraph& g, const std::vector<char>& in_s,
                             const std::vector<char>& in_t, int limit) {
    int m = g.edge_count();
    std::vector<int8_t> cap(2 * static_cast<std::size_t>(m), 1);
    int flow = 0;
    std::vector<int> from_dart(g.vertex_count());
    while (flow < limit) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<int> q;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (in_s[v]) {
                seen[v] = 1;
                q.push(v);
            }
        int hit = -1;
        while (!q.empty() && hit == -1) {
            int v = q.front();
            q.pop();
            for (int d : g.darts_at(v)) {
                if (!cap[d]) continue;
                int w = g.dart_vertex(Multigraph::dart_mate(d));
                if (seen[w] || in_s[w]) continue;
                seen[w] = 1;
                from_dart[w] = d;
                if (in_t[w]) {
                    hit = w;
                    break;
                }
                q.push(w);
            }
        }
        if (hit == -1) break;
        for (int v = hit; !in_s[v];) {
            int d = from_dart[v];
            cap[d] = 0;
            cap[Multigraph::dart_mate(d)] = 1;
            v = g.dart_vertex(d);
        }
        ++flow;
    }
    return flow;
}

/// Does the subgraph induced on {v : keep[v]} contain a cycle? Union-find;
/// a parallel pair counts as a cycle.
bool induced_has_cycle(const Multigraph& g, const std::vector<char>& keep) {
    std::vector<int> uf(g.vertex_count());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (!keep[e.u] || !keep[e.v]) continue;
        int a = find(e.u), b = find(e.v);
        if (a == b) return true;
        uf[a] = b;
    }
    return false;
}

/// Cubic graphs on more than 10 vertices always contain two vertex-disjoint
/// circuits: without them a feedback vertex set X of size <= 3 exists, and
/// removing X from a cubic graph leaves at least 3n/2 - 9 edges on n - |X|
/// vertices, a forest only when n <= 10. Small cases are checked directly.
bool has_two_disjoint_circuits(const CubicGraph& g) {
    int n = g.vertex_count();
    if (n > 10) return true;
    std::vector<char> a(n), b(n);
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        for (int v = 0; v < n; ++v) {
            a[v] = (mask >> v) & 1;
            b[v] = !a[v];
        }
        if (induced_has_cycle(g, a) && induced_has_cycle(g, b)) return true;
    }
    return false;
}

/// Length of a shortest circuit (girth); parallel edges give girth 2.
int girth(const Multigraph& g) {
    int n = g.vertex_count();
    int best = INT32_MAX;
    std::vector<int> dist(n), par_edge(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        par_edge[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.darts_at(v)) {
                int e = Multigraph::dart_edge(d);
                if (e == par_edge[v]) continue;
                int w = g.dart_vertex(Multigraph::dart_mate(d));
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par_edge[w] = e;
                    if (dist[w] * 2 < best) q.push(w);
                } else {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

struct CyclicCutSearch {
    const CubicGraph& g;
    int n;
    std::vector<int> order;  // branch order: BFS from vertex 0
    std::vector<char> in_s, in_t;
    int best;

    explicit CyclicCutSearch(const CubicGraph& graph, int upper)
        : g(graph), n(graph.vertex_count()), in_s(n, 0), in_t(n, 0), best(upper) {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int d : g.darts_at(v)) {
                int w = g.dart_vertex(Multigraph::dart_mate(d));
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
    }

    void run() {
        in_s[order[0] == 0 ? 0 : order[0]] = 1;  // first vertex pinned to S; cuts are symmetric
        descend(1);
    }

    void descend(std::size_t depth) {
        if (best <= 1) return;  // a connected graph has no 0-cut
        if (depth == order.size()) {
            int cut = 0;
            for (const Edge& e : g.edges()) cut += in_s[e.u] != in_s[e.v];
            if (cut < best && induced_has_cycle(g, in_s) && induced_has_cycle(g, in_t))
                best = cut;
            return;
        }
        bool any_t = std::find(in_t.begin(), in_t.end(), 1) != in_t.end();
        if (any_t && edge_disjoint_path_count(g, in_s, in_t, best) >= best) return;
        int v = order[depth];
        for (std::vector<char>* bucket : {&in_s, &in_t}) {
            (*bucket)[v] = 1;
            descend(depth + 1);
            (*bucket)[v] = 0;
        }
    }
};

}  // namespace

int edge_connectivity(const CubicGraph& g) {
    int n = g.vertex_count();
    if (n < 2) return 3;
    std::vector<char> s(n, 0), t(n, 0);
    s[0] = 1;
    int best = 3;  // cubic: lambda <= min degree
    for (int v = 1; v < n && best > 1; ++v) {
        t[v] = 1;
        best = std::min(best, edge_disjoint_path_count(g, s, t, best));
        t[v] = 0;
    }
    return best;
}

std::optional<int> cyclic_edge_connectivity(const CubicGraph& g) {
    if (!has_two_disjoint_circuits(g)) return std::nullopt;
    int n = g.vertex_count();
    // Upper bound: the cut around a shortest circuit. The circuit is chordless,
    // so it leaves exactly g edges, and for n >= 2g the complement is not a
    // forest. Small graphs are settled by the search alone.
    int gth = girth(g);
    int upper = n >= 2 * gth ? gth : 3 * n / 2;
    CyclicCutSearch search(g, upper + 1);
    search.run();
    // search.best stayed at upper+1 only if no cut beats the girth cut
    return std::min(search.best, upper);
}

std::vector<EdgeCut> enumerate_3_edge_cuts(const CubicGraph& g) {
    if (edge_connectivity(g) < 3) throw NotThreeEdgeConnected("graph has a cut of fewer than 3 edges");
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<EdgeCut> cuts;
    std::vector<int> comp(n);
    std::vector<char> removed(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                removed[a] = removed[b] = removed[c] = 1;
                std::fill(comp.begin(), comp.end(), -1);
                std::vector<int> stack{0};
                comp[0] = 0;
                int reached = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int d : g.darts_at(v)) {
                        if (removed[Multigraph::dart_edge(d)]) continue;
                        int w = g.dart_vertex(Multigraph::dart_mate(d));
                        if (comp[w] == -1) {
                            comp[w] = 0;
                            ++reached;
                            stack.push_back(w);
                        }
                    }
                }
                removed[a] = removed[b] = removed[c] = 0;
                if (reached == n) continue;
                // 3-edge-connected: a disconnecting triple is exactly delta(U)
                // for the unreached component; side stored as the smaller one.
                EdgeCut cut;
                cut.cut_edges = {a, b, c};
                std::vector<char> in_u(n, 0), in_rest(n, 0);
                std::vector<int> u_side, rest_side;
                for (int v = 0; v < n; ++v) {
                    if (comp[v] == -1) {
                        u_side.push_back(v);
                        in_u[v] = 1;
                    } else {
                        rest_side.push_back(v);
                        in_rest[v] = 1;
                    }
                }
                cut.side = u_side.size() <= rest_side.size() ? u_side : rest_side;
                cut.cyclic = induced_has_cycle(g, in_u) && induced_has_cycle(g, in_rest);
                cuts.push_back(std::move(cut));
            }
    return cuts;
}

}  // namespace cdc
