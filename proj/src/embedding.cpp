#include "cdc/embedding.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cdc {

Embedding Embedding::trivial(const CubicGraph& g) {
    Embedding emb;
    emb.rotation.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto d = g.darts_at(v);
        emb.rotation[v] = {d[0], d[1], d[2]};
    }
    emb.signature.assign(g.edge_count(), 1);
    return emb;
}

void Embedding::validate(const CubicGraph& g) const {
    if (static_cast<int>(rotation.size()) != g.vertex_count())
        throw VerificationFailure("embedding has " + std::to_string(rotation.size()) +
                                  " rotations for " + std::to_string(g.vertex_count()) + " vertices");
    if (static_cast<int>(signature.size()) != g.edge_count())
        throw VerificationFailure("embedding has " + std::to_string(signature.size()) +
                                  " signatures for " + std::to_string(g.edge_count()) + " edges");
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto expected = g.darts_at(v);
        std::array<int, 3> a = rotation[v], b = {expected[0], expected[1], expected[2]};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw VerificationFailure("rotation at vertex " + std::to_string(v) +
                                      " does not list the incident darts");
    }
    for (std::int8_t s : signature)
        if (s != 1 && s != -1) throw VerificationFailure("signature values must be +1 or -1");
}

namespace {

/// Face traversal: a state is (arrival dart, accumulated side). The next dart
/// out is the rotation successor when the side is positive, the predecessor
/// when negative; crossing an edge multiplies the side by its signature.
/// Each face is one orbit together with its reversal orbit
/// REV(d_in, s) = (d_out, -s); marking both yields every face exactly once.
template <typename BeginFace, typename Step, typename EndFace>
void trace_core(const CubicGraph& g, const Embedding& emb, std::vector<char>& visited,
                BeginFace&& begin_face, Step&& step, EndFace&& end_face) {
    int m = g.edge_count();
    visited.assign(4 * static_cast<std::size_t>(m), 0);
    for (int seed = 0; seed < 4 * m; ++seed) {
        if (visited[seed]) continue;
        const int d0 = seed >> 1;
        const int s0 = (seed & 1) ? -1 : 1;
        begin_face();
        int d = d0, s = s0;
        do {
            int w = g.dart_vertex(d);
            int d_out = s > 0 ? emb.rot_next(w, d) : emb.rot_prev(w, d);
            int e_out = Multigraph::dart_edge(d_out);
            visited[(d << 1) | (s > 0 ? 0 : 1)] = 1;
            visited[(d_out << 1) | (s > 0 ? 1 : 0)] = 1;
            step(w, e_out);
            s *= emb.signature[e_out];
            d = Multigraph::dart_mate(d_out);
        } while (d != d0 || s != s0);
        end_face();
    }
}

}  // namespace

std::vector<FacialWalk> trace_facial_walks(const CubicGraph& g, const Embedding& emb) {
    std::vector<FacialWalk> faces;
    std::vector<char> visited;
    trace_core(
        g, emb, visited, [&] { faces.emplace_back(); },
        [&](int v, int e) { faces.back().steps.emplace_back(v, e); }, [] {});
    std::size_t total = 0;
    for (const FacialWalk& f : faces) total += f.steps.size();
    if (total != 2 * static_cast<std::size_t>(g.edge_count()))
        throw Error("internal: facial walks cover " + std::to_string(total) + " edge slots, expected " +
                    std::to_string(2 * g.edge_count()));
    return faces;
}

TraceCounts trace_counts(const CubicGraph& g, const Embedding& emb, TraceScratch& scratch) {
    scratch.last_face.assign(g.edge_count(), -1);
    TraceCounts out;
    int face_id = -1;
    trace_core(
        g, emb, scratch.visited, [&] { ++face_id; },
        [&](int, int e) {
            if (scratch.last_face[e] == face_id) ++out.singular;
            scratch.last_face[e] = face_id;
        },
        [] {});
    out.faces = face_id + 1;
    return out;
}

std::vector<int> singular_edges(const std::vector<FacialWalk>& faces) {
    std::vector<int> singular;
    for (const FacialWalk& f : faces) {
        std::vector<int> seen;
        for (auto [v, e] : f.steps) {
            if (std::find(seen.begin(), seen.end(), e) != seen.end())
                singular.push_back(e);
            else
                seen.push_back(e);
        }
    }
    std::sort(singular.begin(), singular.end());
    singular.erase(std::unique(singular.begin(), singular.end()), singular.end());
    return singular;
}

FdcReport surface_stats(const CubicGraph& g, const Embedding& emb, std::vector<FacialWalk> faces) {
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<int> slots(m, 0);
    for (const FacialWalk& f : faces)
        for (auto [v, e] : f.steps) ++slots[e];
    for (int e = 0; e < m; ++e)
        if (slots[e] != 2)
            throw Error("internal: edge " + std::to_string(e) + " covered " + std::to_string(slots[e]) +
                        " times by the facial walks");

    FdcReport report;
    report.singular = singular_edges(faces);
    report.face_count = static_cast<int>(faces.size());
    report.euler_characteristic = n - m + report.face_count;

    // Orientable iff the signature can be made all-positive by vertex flips:
    // assign x with x_u * x_v = lambda(uv), fail on a conflict.
    std::vector<int> x(n, 0);
    report.orientable = true;
    x[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty() && report.orientable) {
        int v = q.front();
        q.pop();
        for (int d : g.darts_at(v)) {
            int e = Multigraph::dart_edge(d);
            int w = g.dart_vertex(Multigraph::dart_mate(d));
            int want = x[v] * emb.signature[e];
            if (x[w] == 0) {
                x[w] = want;
                q.push(w);
            } else if (x[w] != want) {
                report.orientable = false;
                break;
            }
        }
    }

    int chi = report.euler_characteristic;
    if (report.orientable) {
        if (chi % 2 != 0) throw Error("internal: orientable embedding with odd Euler characteristic");
        report.genus_like = (2 - chi) / 2;
        report.bender_richmond_bound = report.genus_like == 0 ? 0 : 6 * report.genus_like - 3;
    } else {
        report.genus_like = 2 - chi;
        if (report.genus_like < 1) throw Error("internal: non-orientable embedding with chi > 1");
        report.bender_richmond_bound = report.genus_like == 1 ? 1 : 3 * report.genus_like - 3;
    }
    report.faces = std::move(faces);
    return report;
}

void enumerate_embeddings(const CubicGraph& g, const std::function<bool(const Embedding&)>& fn,
                          int guard) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n > guard)
        throw TooLarge("enumeration guard is " + std::to_string(guard) + " vertices, graph has " +
                       std::to_string(n) + " (raise the guard to override)");

    // BFS spanning tree from vertex 0; signature normalized to +1 on it.
    std::vector<char> in_tree(m, 0), seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.darts_at(v)) {
            int w = g.dart_vertex(Multigraph::dart_mate(d));
            if (!seen[w]) {
                seen[w] = 1;
                in_tree[Multigraph::dart_edge(d)] = 1;
                q.push(w);
            }
        }
    }
    std::vector<int> free_edges;
    for (int e = 0; e < m; ++e)
        if (!in_tree[e]) free_edges.push_back(e);

    Embedding emb = Embedding::trivial(g);
    const std::uint64_t rot_total = std::uint64_t{1} << n;
    const std::uint64_t sig_total = std::uint64_t{1} << free_edges.size();
    for (std::uint64_t rmask = 0; rmask < rot_total; ++rmask) {
        for (int v = 0; v < n; ++v) {
            auto d = g.darts_at(v);
            emb.rotation[v] = {d[0], d[1], d[2]};
            if ((rmask >> v) & 1) std::swap(emb.rotation[v][1], emb.rotation[v][2]);
        }
        for (std::uint64_t smask = 0; smask < sig_total; ++smask) {
            for (std::size_t i = 0; i < free_edges.size(); ++i)
                emb.signature[free_edges[i]] = ((smask >> i) & 1) ? -1 : 1;
            if (!fn(emb)) return;
        }
    }
}

}  // namespace cdc
