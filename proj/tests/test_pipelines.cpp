#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdc/io.hpp"
#include "cdc/pipelines.hpp"
#include "corpus.hpp"

using namespace cdc;
using namespace cdc::test;

namespace {

void check_result_sane(const CubicGraph& g, const PipelineResult& r) {
    // claimed bound respected at integer granularity
    CHECK(static_cast<long long>(r.report.singular.size()) * r.bound_den <= r.bound_num);
    // singular edges only among uncovered ones
    for (int e : r.report.singular)
        CHECK(!std::binary_search(r.covered_edges.begin(), r.covered_edges.end(), e));
    // the embedding re-verifies
    VerifyReport v = verify_embedding(g, r.embedding);
    CHECK(v.singular == r.report.singular);
    CHECK(v.euler_characteristic == r.report.euler_characteristic);
}

}  // namespace

TEST_CASE("half-n bounds on the corpus") {
    for (const CubicGraph& g :
         {make_k4(), make_theta(), make_prism(), make_k33(), generate_petersen()}) {
        PipelineResult r = embed_half_n(g);
        CHECK(r.bound_num == g.vertex_count());
        CHECK(r.bound_den == 2);
        check_result_sane(g, r);
        // singular edges always lie in the matching
        for (int e : r.report.singular) CHECK(r.witness.m1->contains(e));
    }
}

TEST_CASE("half-n rejects bridged graphs") {
    CHECK_THROWS_AS(embed_half_n(make_dumbbell()), NotBridgeless);
}

TEST_CASE("tenth-n bounds") {
    CubicGraph p = generate_petersen();
    PipelineResult r = embed_tenth_n(p);
    CHECK(r.report.singular.size() <= 1);
    check_result_sane(p, r);

    CubicGraph k4 = make_k4();
    PipelineResult rk = embed_tenth_n(k4);
    CHECK(rk.report.singular.empty());  // floor(4/10) = 0: a genuine facial double cover
    check_result_sane(k4, rk);

    CubicGraph g5 = generate_gn(5, 0);
    PipelineResult r5 = embed_tenth_n(g5);
    CHECK(r5.report.singular.size() <= 2);
    check_result_sane(g5, r5);

    CHECK_THROWS_AS(embed_tenth_n(make_dumbbell()), Error);
}

TEST_CASE("over-2k bounds") {
    CubicGraph p = generate_petersen();
    PipelineResult r = embed_over_2k(p);  // auto k = 5
    CHECK(r.witness.k == 5);
    CHECK(r.report.singular.size() <= 1);
    check_result_sane(p, r);

    CubicGraph prism = make_prism();
    PipelineResult rp = embed_over_2k(prism);  // auto k = 3
    CHECK(rp.witness.k == 3);
    CHECK(rp.report.singular.size() <= 1);
    check_result_sane(prism, rp);

    // K4: infinite cyclic connectivity, the bound is not applicable as stated
    CHECK_THROWS_AS(embed_over_2k(make_k4()), CyclicConnectivityTooLow);
    // prism is not cyclically 9-edge-connected
    CHECK_THROWS_AS(embed_over_2k(make_prism(), 9), CyclicConnectivityTooLow);
}

TEST_CASE("cyclic-2k pipeline on petersen with the spoke matching") {
    CubicGraph p = generate_petersen();
    Matching spokes;
    spokes.edges = {10, 11, 12, 13, 14};
    PipelineResult r = pipeline_cyclically_2k(p, 2, spokes);
    CHECK(r.witness.tree_h_lifted.size() == 1);  // H = 2 vertices, 5 parallel edges
    CHECK(r.report.singular.size() <= 1);
    check_result_sane(p, r);

    PipelineResult rd = pipeline_cyclically_2k(p, 2);  // default matching
    CHECK(rd.report.singular.size() <= 2);             // floor(10/4)
    check_result_sane(p, rd);
}

TEST_CASE("cyclic-2k on K4: single-vertex H, empty tree, no singular edges") {
    PipelineResult r = pipeline_cyclically_2k(make_k4(), 2);
    CHECK(r.witness.tree_h_lifted.empty());
    CHECK(r.report.singular.empty());
    check_result_sane(make_k4(), r);
}

TEST_CASE("cyclic-2k with k=1 gives the plain half-n style bound") {
    CubicGraph g = make_prism();
    PipelineResult r = pipeline_cyclically_2k(g, 1);
    CHECK(r.bound_num == 6);
    CHECK(r.bound_den == 2);
    check_result_sane(g, r);
}

TEST_CASE("cyclic-2k connectivity precondition") {
    CHECK_THROWS_AS(pipeline_cyclically_2k(make_prism(), 2), CyclicConnectivityTooLow);
}

TEST_CASE("petersen guarantee ladder: half-n 5, tenth-n 1, over-2k(5) 1") {
    CubicGraph p = generate_petersen();
    CHECK(embed_half_n(p).bound_num / embed_half_n(p).bound_den == 5);
    PipelineResult t = embed_tenth_n(p);
    CHECK(t.bound_num / t.bound_den == 1);
    PipelineResult o = embed_over_2k(p, 5);
    CHECK(o.bound_num / o.bound_den == 1);
}

TEST_CASE("pipelines are deterministic down to the report bytes") {
    CubicGraph p = generate_petersen();
    CHECK(pipeline_report(p, embed_tenth_n(p)) == pipeline_report(p, embed_tenth_n(p)));
    CHECK(pipeline_report(p, embed_half_n(p)) == pipeline_report(p, embed_half_n(p)));
    CubicGraph g5 = generate_gn(5, 3);
    CHECK(pipeline_report(g5, embed_over_2k(g5)) == pipeline_report(g5, embed_over_2k(g5)));
}

TEST_CASE("bender-richmond comparison fields") {
    CubicGraph k4 = make_k4();
    PipelineResult r = embed_tenth_n(k4);
    BenderRichmondComparison br = compare_bender_richmond(r);
    CHECK(br.singular_count == 0);
    if (r.report.orientable && r.report.genus_like == 0) {
        CHECK(br.surface == "sphere");
        CHECK(br.br_bound == 0);
    }
}

TEST_CASE("random bridgeless graphs through half-n") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 8 + 2 * static_cast<int>(rng.below(10));
        CubicGraph g = generate_random_cubic_bridgeless(n, rng.next());
        PipelineResult r = embed_half_n(g);
        check_result_sane(g, r);
        CHECK(2 * static_cast<int>(r.report.singular.size()) <= n);
    }
}
