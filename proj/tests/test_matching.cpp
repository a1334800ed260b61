#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cdc/blossom.hpp"
#include "cdc/matching.hpp"
#include "corpus.hpp"

using namespace cdc;
using namespace cdc::test;

namespace {

std::int64_t weight_of(const std::vector<int>& edges, std::span<const std::int64_t> w) {
    std::int64_t total = 0;
    for (int e : edges) total += w[e];
    return total;
}

/// Brute-force optimum over all perfect matchings (oracle).
std::int64_t brute_min_weight(const Multigraph& g, std::span<const std::int64_t> w) {
    auto all = oracle_perfect_matchings(g);
    REQUIRE(!all.empty());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& m : all) best = std::min(best, weight_of(m, w));
    return best;
}

/// Random loopless multigraph on n vertices with m edges (may be disconnected).
Multigraph random_multigraph(int n, int m, Rng& rng) {
    std::vector<Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        edges.push_back({u, v});
    }
    return Multigraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("perfect matchings on the corpus") {
    CHECK(perfect_matching(make_k4()).edges.size() == 2);
    CHECK(perfect_matching(make_theta()).edges.size() == 1);
    Matching pm = perfect_matching(generate_petersen());
    CHECK(pm.edges.size() == 5);
    pm.validate_perfect(generate_petersen());
    // complement of a perfect matching in a cubic graph is a 2-factor
    CubicGraph g = generate_petersen();
    std::vector<int> deg(10, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (pm.contains(e)) continue;
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    for (int v = 0; v < 10; ++v) CHECK(deg[v] == 2);
}

TEST_CASE("petersen has exactly 6 perfect matchings, pairwise intersecting in 1 edge") {
    auto all = oracle_perfect_matchings(generate_petersen());
    CHECK(all.size() == 6);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(all[i].begin(), all[i].end(), all[j].begin(), all[j].end(),
                                  std::back_inserter(inter));
            CHECK(inter.size() == 1);
        }
}

TEST_CASE("blossom equals brute force on random small graphs") {
    Rng rng(2024);
    int solved = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + 2 * static_cast<int>(rng.below(5));  // 2..10
        int m = n + static_cast<int>(rng.below(2 * n + 1));
        Multigraph g = random_multigraph(n, m, rng);
        std::vector<std::int64_t> w(g.edge_count());
        for (auto& x : w) x = static_cast<std::int64_t>(rng.below(10));
        auto all = oracle_perfect_matchings(g);
        if (all.empty()) {
            CHECK_THROWS_AS(blossom_min_weight_perfect_matching(g.vertex_count(), g.edges(), w),
                            NoPerfectMatching);
            continue;
        }
        std::vector<int> got = blossom_min_weight_perfect_matching(g.vertex_count(), g.edges(), w);
        // perfection
        std::vector<int> cover(g.vertex_count(), 0);
        for (int e : got) {
            ++cover[g.edge(e).u];
            ++cover[g.edge(e).v];
        }
        for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(cover[v] == 1);
        CHECK(weight_of(got, w) == brute_min_weight(g, w));
        ++solved;
    }
    CHECK(solved > 100);
}

TEST_CASE("blossom on cubic corpus with assorted weights") {
    Rng rng(55);
    for (const CubicGraph& g : {make_k4(), make_theta(), make_prism(), make_k33(), make_cube(),
                                make_wagner(), make_dumbbell(), generate_petersen(),
                                generate_gn(4, 0)}) {
        for (int round = 0; round < 4; ++round) {
            std::vector<std::int64_t> w(g.edge_count());
            for (auto& x : w) x = static_cast<std::int64_t>(rng.below(7));
            Matching m = min_weight_perfect_matching(g, w);
            m.validate_perfect(g);
            CHECK(matching_weight(m, w) == brute_min_weight(g, w));
        }
    }
}

TEST_CASE("lexicographic tie-break") {
    // K4 edge ids (graph6 column order): 0:(0,1) 1:(0,2) 2:(1,2) 3:(0,3) 4:(1,3) 5:(2,3)
    CubicGraph g = make_k4();
    std::vector<std::int64_t> zero(6, 0);
    Matching m = min_weight_perfect_matching(g, zero);
    CHECK(m.edges == std::vector<int>{0, 5});  // lexicographically first disjoint pair
    // weights = indicator of {0,5}: the two other PMs have weight 0; lex-min is {1,4}
    std::vector<std::int64_t> w(6, 0);
    w[0] = w[5] = 1;
    Matching m2 = min_weight_perfect_matching(g, w);
    CHECK(matching_weight(m2, w) == 0);
    CHECK(m2.edges == std::vector<int>{1, 4});
}

TEST_CASE("min weight wrt a matching indicator on petersen is 1") {
    CubicGraph g = generate_petersen();
    Matching m1 = perfect_matching(g);
    std::vector<std::int64_t> w(g.edge_count(), 0);
    for (int e : m1.edges) w[e] = 1;
    Matching m2 = min_weight_perfect_matching(g, w);
    CHECK(matching_weight(m2, w) == 1);  // any two distinct PMs share exactly one edge
    CHECK(matching_intersection(m1, m2).size() == 1);
}

TEST_CASE("matching_avoiding_3cuts") {
    // any petersen PM qualifies: only trivial cuts
    CubicGraph p = generate_petersen();
    Matching m1 = matching_avoiding_3cuts(p);
    m1.validate_perfect(p);

    // prism: the rung matching contains the rung cut and must be avoided
    CubicGraph prism = make_prism();
    Matching mp = matching_avoiding_3cuts(prism);
    mp.validate_perfect(prism);
    CHECK(!(mp.contains(6) && mp.contains(7) && mp.contains(8)));

    CHECK_THROWS_AS(matching_avoiding_3cuts(make_dumbbell()), NotThreeEdgeConnected);
    matching_avoiding_3cuts(make_k4()).validate_perfect(make_k4());
    matching_avoiding_3cuts(make_theta()).validate_perfect(make_theta());
}

TEST_CASE("second_matching_kkn bound") {
    CubicGraph p = generate_petersen();
    Matching m1 = matching_avoiding_3cuts(p);
    Matching m2 = second_matching_kkn(p, m1);
    CHECK(matching_intersection(m1, m2).size() == 1);  // = floor(10/10)

    CubicGraph k4 = make_k4();
    Matching k1 = matching_avoiding_3cuts(k4);
    Matching k2 = second_matching_kkn(k4, k1);
    CHECK(matching_intersection(k1, k2).empty());  // floor(4/10) = 0

    CubicGraph prism = make_prism();
    Matching p1 = matching_avoiding_3cuts(prism);
    Matching p2 = second_matching_kkn(prism, p1);
    CHECK(matching_intersection(p1, p2).empty());
}

TEST_CASE("fractional point") {
    CubicGraph g = generate_petersen();
    Matching m = perfect_matching(g);
    FractionalPmPoint f = fractional_point(g, m, 5);
    for (int e = 0; e < g.edge_count(); ++e)
        CHECK(f.numer[e] == (m.contains(e) ? 2 : 4));  // 1/5 and 2/5 over denominator 10
    // vertex sums: 1/k + 2 (k-1)/(2k) = 1 for all k
    for (int k : {3, 5, 9}) {
        FractionalPmPoint fk = fractional_point(g, m, k);
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::int64_t sum = 0;
            for (int d : g.darts_at(v)) sum += fk.numer[Multigraph::dart_edge(d)];
            CHECK(sum == 2 * k);
        }
    }
    CHECK_THROWS_AS(fractional_point(g, m, 2), MalformedInput);
}

TEST_CASE("parity: perfect matchings meet odd 3-cuts in 1 or 3 edges") {
    for (const CubicGraph& g : {make_prism(), make_k4(), generate_petersen()}) {
        auto cuts = enumerate_3_edge_cuts(g);
        for (const auto& m : oracle_perfect_matchings(g)) {
            for (const EdgeCut& cut : cuts) {
                int inter = 0;
                for (int e : cut.cut_edges)
                    inter += std::binary_search(m.begin(), m.end(), e);
                CHECK((inter == 1 || inter == 3));
            }
        }
    }
}

TEST_CASE("no perfect matching on odd graphs") {
    CHECK_THROWS_AS(blossom_perfect_matching(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}),
                    NoPerfectMatching);
}
