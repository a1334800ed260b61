#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cdc/matching.hpp"
#include "cdc/partial_cdc.hpp"
#include "corpus.hpp"

using namespace cdc;
using namespace cdc::test;

namespace {

ClosedWalk walk_from(std::initializer_list<std::pair<int, int>> steps) {
    ClosedWalk w;
    w.steps = steps;
    return w;
}

std::set<std::vector<std::pair<int, int>>> face_keys(const CubicGraph& g, const Embedding& emb) {
    std::set<std::vector<std::pair<int, int>>> keys;
    for (const FacialWalk& f : trace_facial_walks(g, emb)) keys.insert(f.canonical_key());
    return keys;
}

/// The two 5-circuits of the petersen 2-factor left by the spoke matching.
/// Inner edge ids: 5:(5,7) 6:(6,8) 7:(7,9) 8:(8,5) 9:(9,6).
std::vector<ClosedWalk> petersen_two_circuits() {
    ClosedWalk outer = walk_from({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
    ClosedWalk inner = walk_from({{5, 5}, {7, 7}, {9, 9}, {6, 6}, {8, 8}});
    return {outer, inner};
}

}  // namespace

TEST_CASE("petersen two-circuit 2-factor is a valid partial CDC") {
    CubicGraph g = generate_petersen();
    auto walks = petersen_two_circuits();
    for (const ClosedWalk& w : walks) w.validate_in(g);
    CHECK(!validate_partial_cdc(g, walks).has_value());
}

TEST_CASE("duplicated circuit violates C1") {
    CubicGraph g = generate_petersen();
    ClosedWalk outer = petersen_two_circuits()[0];
    ClosedWalk outer_reversed;
    std::size_t t = outer.steps.size();
    for (std::size_t i = 0; i < t; ++i)
        outer_reversed.steps.push_back(
            {outer.steps[(t - i) % t].first, outer.steps[(t - i - 1) % t].second});
    auto violation = validate_partial_cdc(g, {outer, outer});
    REQUIRE(violation.has_value());
    CHECK(violation->kind == Violation::Kind::DuplicateWalk);
    // a reversed copy is still the same walk identity
    violation = validate_partial_cdc(g, {outer, outer_reversed});
    REQUIRE(violation.has_value());
    CHECK(violation->kind == Violation::Kind::DuplicateWalk);
}

TEST_CASE("theta: an edge shared by two digons is fine") {
    CubicGraph g = make_theta();
    ClosedWalk d01 = walk_from({{0, 0}, {1, 1}});  // edges e0,e1
    ClosedWalk d12 = walk_from({{0, 1}, {1, 2}});  // edges e1,e2 (shares e1)
    CHECK(!validate_partial_cdc(g, {d01, d12}).has_value());
}

TEST_CASE("same-walk edge reuse is a C1 violation") {
    CubicGraph g = make_theta();
    // 0,e0,1,e1,0,e1,1,e2,0 revisits e1 within one walk
    ClosedWalk w = walk_from({{0, 0}, {1, 1}, {0, 1}, {1, 2}});
    w.validate_in(g);
    auto v = validate_partial_cdc(g, {w});
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::SameWalkEdge);
    CHECK(v->edge == 1);
}

TEST_CASE("angle reuse across walks is a C2 violation") {
    // prism edge ids: 0:(0,1) 1:(1,2) 2:(2,0) 3:(3,4) 4:(4,5) 5:(5,3)
    //                 6:(0,3) 7:(1,4) 8:(2,5)
    CubicGraph g = make_prism();
    ClosedWalk tri = walk_from({{0, 0}, {1, 1}, {2, 2}});
    ClosedWalk four = walk_from({{0, 0}, {1, 7}, {4, 3}, {3, 6}});
    four.validate_in(g);
    CHECK(!validate_partial_cdc(g, {tri, four}).has_value());

    // 0,e0,1,e1,2,e8,5,e5,3,e6,0 reuses the angle {e0,e1} at vertex 1
    ClosedWalk clash = walk_from({{0, 0}, {1, 1}, {2, 8}, {5, 5}, {3, 6}});
    clash.validate_in(g);
    auto v = validate_partial_cdc(g, {tri, clash});
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::AngleReused);
    CHECK(v->angle.v == 1);
    CHECK(v->angle.e_lo == 0);
    CHECK(v->angle.e_hi == 1);
}

TEST_CASE("link graphs of a valid partial CDC have degree <= 2 and no doubles") {
    CubicGraph g = generate_petersen();
    auto walks = petersen_two_circuits();
    for (int v = 0; v < g.vertex_count(); ++v) {
        LinkGraph d = link_graph(g, walks, v);
        CHECK(d.links.size() == 1);  // each vertex lies on exactly one circuit
    }
}

TEST_CASE("extend theta digons to the planar embedding") {
    CubicGraph g = make_theta();
    ClosedWalk d01 = walk_from({{0, 0}, {1, 1}});
    ClosedWalk d12 = walk_from({{0, 1}, {1, 2}});
    PartialCdc pcdc = make_partial_cdc(g, {d01, d12});
    Embedding emb = extend_to_embedding(g, pcdc);
    std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
    CHECK(faces.size() == 3);
    CHECK(singular_edges(faces).empty());
    auto keys = face_keys(g, emb);
    CHECK(keys.count(d01.canonical_key()) == 1);
    CHECK(keys.count(d12.canonical_key()) == 1);
}

TEST_CASE("extend petersen two-circuit partial CDC: both are faces, singular >= 1") {
    CubicGraph g = generate_petersen();
    auto walks = petersen_two_circuits();
    PartialCdc pcdc = make_partial_cdc(g, walks);
    Embedding emb = extend_to_embedding(g, pcdc);
    auto keys = face_keys(g, emb);
    for (const ClosedWalk& w : walks) CHECK(keys.count(w.canonical_key()) == 1);
    CHECK(singular_edges(trace_facial_walks(g, emb)).size() >= 1);
    // regularity: covered edges are never singular
    std::vector<int> singular = singular_edges(trace_facial_walks(g, emb));
    for (int e = 0; e < 10; ++e)  // the two circuits cover edges 0..9
        CHECK(!std::binary_search(singular.begin(), singular.end(), e));
}

TEST_CASE("empty partial CDC extends to some embedding") {
    for (const CubicGraph& g : {make_k4(), make_prism(), generate_petersen()}) {
        PartialCdc pcdc = make_partial_cdc(g, {});
        Embedding emb = extend_to_embedding(g, pcdc);
        trace_facial_walks(g, emb);  // conservation asserted inside
    }
}

TEST_CASE("extension determinism") {
    CubicGraph g = generate_petersen();
    PartialCdc pcdc = make_partial_cdc(g, petersen_two_circuits());
    CHECK(extend_to_embedding(g, pcdc) == extend_to_embedding(g, pcdc));
}

TEST_CASE("angle coverage is total on traced embeddings") {
    for (const CubicGraph& g : {make_k4(), make_theta(), generate_petersen()}) {
        Embedding emb = Embedding::trivial(g);
        auto cover = angle_coverage(g, trace_facial_walks(g, emb));
        CHECK(static_cast<int>(cover.size()) == 3 * g.vertex_count());
    }
}

TEST_CASE("walk file validation catches broken sequences") {
    CubicGraph g = make_prism();
    ClosedWalk broken = walk_from({{0, 0}, {1, 5}});
    CHECK_THROWS_AS(broken.validate_in(g), NotAWalk);
    ClosedWalk tiny = walk_from({{0, 0}});
    CHECK_THROWS_AS(tiny.validate_in(g), NotAWalk);
}
