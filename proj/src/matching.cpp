#include "cdc/matching.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cdc/blossom.hpp"

namespace cdc {

bool Matching::contains(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

void Matching::validate_perfect(const Multigraph& g) const {
    std::vector<int> cover(g.vertex_count(), 0);
    for (int e : edges) {
        ++cover[g.edge(e).u];
        ++cover[g.edge(e).v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cover[v] != 1)
            throw NoPerfectMatching("vertex " + std::to_string(v) + " covered " +
                                    std::to_string(cover[v]) + " times");
}

Matching perfect_matching(const CubicGraph& g) {
    Matching m{blossom_perfect_matching(g.vertex_count(), g.edges())};
    m.validate_perfect(g);
    return m;
}

namespace {

/// Optimal matchings extending `forced_in` on the graph without the covered
/// vertices; returns the weight or kNoMatching.
constexpr std::int64_t kNoMatching = std::numeric_limits<std::int64_t>::max();

std::int64_t reduced_optimum(const CubicGraph& g, std::span<const std::int64_t> weights,
                             const std::vector<char>& covered) {
    std::vector<int> vmap(g.vertex_count(), -1);
    int nv = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) vmap[v] = nv++;
    std::vector<Edge> redges;
    std::vector<std::int64_t> rweights;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (covered[ed.u] || covered[ed.v]) continue;
        redges.push_back({vmap[ed.u], vmap[ed.v]});
        rweights.push_back(weights[e]);
    }
    try {
        std::vector<int> ids = blossom_min_weight_perfect_matching(nv, redges, rweights);
        std::int64_t total = 0;
        for (int id : ids) total += rweights[id];
        return total;
    } catch (const NoPerfectMatching&) {
        return kNoMatching;
    }
}

}  // namespace

Matching min_weight_perfect_matching(const CubicGraph& g, std::span<const std::int64_t> weights) {
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw MalformedInput("one weight per edge required");
    std::vector<int> base = blossom_min_weight_perfect_matching(g.vertex_count(), g.edges(), weights);
    std::int64_t opt = 0;
    for (int e : base) opt += weights[e];

    // Lexicographic tie-break: force each edge, in ascending id order, whenever
    // an optimal matching containing the forced set still exists.
    Matching out;
    std::vector<char> covered(g.vertex_count(), 0);
    std::int64_t forced_weight = 0;
    for (int e = 0; e < g.edge_count() && 2 * static_cast<int>(out.edges.size()) < g.vertex_count();
         ++e) {
        const Edge& ed = g.edge(e);
        if (covered[ed.u] || covered[ed.v]) continue;
        covered[ed.u] = covered[ed.v] = 1;
        std::int64_t rest = reduced_optimum(g, weights, covered);
        if (rest != kNoMatching && forced_weight + weights[e] + rest == opt) {
            out.edges.push_back(e);
            forced_weight += weights[e];
        } else {
            covered[ed.u] = covered[ed.v] = 0;
        }
    }
    out.validate_perfect(g);
    if (matching_weight(out, weights) != opt)
        throw Error("internal: lexicographic refinement changed the optimal weight");
    return out;
}

Matching matching_avoiding_3cuts(const CubicGraph& g, int iteration_cap) {
    std::vector<EdgeCut> cuts = enumerate_3_edge_cuts(g);  // throws NotThreeEdgeConnected
    if (iteration_cap < 0) iteration_cap = g.edge_count();

    Matching m = perfect_matching(g);
    std::vector<char> violated(cuts.size(), 0);
    auto contained_in_m = [&](const EdgeCut& cut) {
        return std::all_of(cut.cut_edges.begin(), cut.cut_edges.end(),
                           [&](int e) { return m.contains(e); });
    };
    for (int round = 0; round <= iteration_cap; ++round) {
        bool any = false;
        for (std::size_t c = 0; c < cuts.size(); ++c)
            if (contained_in_m(cuts[c])) {
                violated[c] = 1;
                any = true;
            }
        if (!any) return m;
        // weight = number of violated cuts an edge lies on: a matching meeting
        // every violated cut exactly once has weight = #violated, which is
        // optimal, so the re-solve never re-contains an accumulated cut.
        std::vector<std::int64_t> w(g.edge_count(), 0);
        for (std::size_t c = 0; c < cuts.size(); ++c)
            if (violated[c])
                for (int e : cuts[c].cut_edges) ++w[e];
        m = min_weight_perfect_matching(g, w);
    }
    throw CutAvoidanceFailed("no 3-cut-free matching after " + std::to_string(iteration_cap) +
                             " rounds");
}

Matching second_matching_kkn(const CubicGraph& g, const Matching& m1) {
    m1.validate_perfect(g);
    std::vector<std::int64_t> w(g.edge_count(), 0);
    for (int e : m1.edges) w[e] = 1;
    Matching m2 = min_weight_perfect_matching(g, w);
    int inter = static_cast<int>(matching_intersection(m1, m2).size());
    if (10 * inter > g.vertex_count())
        throw BoundViolated("|M1 and M2| = " + std::to_string(inter) + " exceeds n/10 = " +
                            std::to_string(g.vertex_count()) + "/10");
    return m2;
}

FractionalPmPoint fractional_point(const CubicGraph& g, const Matching& m, int k) {
    if (k < 3) throw MalformedInput("fractional point requires k >= 3");
    m.validate_perfect(g);
    FractionalPmPoint f;
    f.k = k;
    f.numer.assign(g.edge_count(), k - 1);  // off-matching: (k-1)/(2k)
    for (int e : m.edges) f.numer[e] = 2;   // on-matching: 1/k
    return f;
}

std::int64_t matching_weight(const Matching& m, std::span<const std::int64_t> weights) {
    std::int64_t total = 0;
    for (int e : m.edges) total += weights[e];
    return total;
}

std::vector<int> matching_intersection(const Matching& a, const Matching& b) {
    std::vector<int> out;
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace cdc
