#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdc/oracle.hpp"
#include "cdc/pipelines.hpp"
#include "corpus.hpp"

using namespace cdc;
using namespace cdc::test;

TEST_CASE("min singular: K4 and petersen reach zero") {
    MinSingularResult k4 = min_singular_exhaustive(make_k4());
    CHECK(k4.count == 0);
    CHECK(singular_edges(trace_facial_walks(make_k4(), k4.witness)).empty());

    MinSingularResult p = min_singular_exhaustive(generate_petersen());
    CHECK(p.count == 0);  // petersen has a CDC even though the 2-factor one fails

    CHECK(min_singular_exhaustive(make_theta()).count == 0);
    CHECK(min_singular_exhaustive(make_dumbbell()).count >= 1);  // bridge is always singular

    CHECK_THROWS_AS(min_singular_exhaustive(generate_gn(5, 0)), TooLarge);
}

TEST_CASE("perfect matching enumeration") {
    CHECK(enumerate_perfect_matchings(make_k4()).size() == 3);
    CHECK(enumerate_perfect_matchings(make_theta()).size() == 3);
    CHECK(enumerate_perfect_matchings(generate_petersen()).size() == 6);
    auto oracle = oracle_perfect_matchings(generate_petersen());
    auto lib = enumerate_perfect_matchings(generate_petersen());
    REQUIRE(oracle.size() == lib.size());
    for (std::size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].edges == oracle[i]);
    CHECK_THROWS_AS(enumerate_perfect_matchings(generate_gn(5, 0)), TooLarge);
}

TEST_CASE("edmonds point checks") {
    CubicGraph p = generate_petersen();
    Matching m = perfect_matching(p);
    CHECK(!check_edmonds_point(p, fractional_point(p, m, 5)).has_value());

    CubicGraph prism = make_prism();
    Matching mp = perfect_matching(prism);
    CHECK(!check_edmonds_point(prism, fractional_point(prism, mp, 3)).has_value());

    // tampering breaks a degree equality
    FractionalPmPoint bad = fractional_point(p, m, 5);
    bad.numer[0] = 0;
    auto v = check_edmonds_point(p, bad);
    REQUIRE(v.has_value());
    CHECK(v->kind == EdmondsViolation::Kind::DegreeSum);

    // with the rung matching, the triangle cut lies inside M entirely; its
    // value 3/k drops below 1 once k exceeds the cyclic connectivity 3
    Matching rungs;
    rungs.edges = {6, 7, 8};
    CHECK(!check_edmonds_point(prism, fractional_point(prism, rungs, 3)).has_value());
    auto v2 = check_edmonds_point(prism, fractional_point(prism, rungs, 9));
    REQUIRE(v2.has_value());
    CHECK(v2->kind == EdmondsViolation::Kind::OddCut);
    CHECK(v2->odd_set.size() == 3);

    // negative entries are caught
    FractionalPmPoint neg = fractional_point(p, m, 5);
    neg.numer[3] = -1;
    auto v3 = check_edmonds_point(p, neg);
    REQUIRE(v3.has_value());
    CHECK(v3->kind == EdmondsViolation::Kind::Negative);
}

TEST_CASE("petersen nonextension") {
    PetersenNonextensionReport r = check_petersen_nonextension();
    CHECK(r.embeddings_enumerated == 32768);  // 2^10 rotations x 2^5 spoke signs
    CHECK(r.min_singular == 1);
    CHECK(!r.cdc_extension_possible);
    CHECK(r.uncovered_slots == 20);
    // petersen has circuits of lengths 5,6,8,9 only
    CHECK(r.circuit_lengths == std::vector<int>{5, 6, 8, 9});
    // circuits avoiding the 2-factor's angles alternate and have length 8
    CHECK(r.alternating_circuit_lengths == std::vector<int>{8});
}

TEST_CASE("petersen nonextension full-filter cross-check") {
    PetersenNonextensionReport r = check_petersen_nonextension(true);
    CHECK(r.min_singular == 1);
}

TEST_CASE("pipelines never beat the exhaustive minimum") {
    for (const CubicGraph& g :
         {make_k4(), make_theta(), make_prism(), make_k33(), make_cube(), make_wagner()}) {
        int oracle = min_singular_exhaustive(g).count;
        CHECK(static_cast<int>(embed_half_n(g).report.singular.size()) >= oracle);
        try {
            CHECK(static_cast<int>(embed_tenth_n(g).report.singular.size()) >= oracle);
        } catch (const NotThreeEdgeConnected&) {
        }
    }
}
