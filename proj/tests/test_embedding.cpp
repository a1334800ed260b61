#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"
#include "corpus.hpp"

using namespace cdc;
using namespace cdc::test;

namespace {

std::vector<std::pair<int, int>> brute_canonical(const ClosedWalk& w) {
    // all rotations of the walk and of its reversal, minimum by comparison
    std::vector<std::vector<std::pair<int, int>>> cands;
    std::size_t t = w.steps.size();
    ClosedWalk rev;
    for (std::size_t i = 0; i < t; ++i)
        rev.steps.push_back({w.steps[(t - i) % t].first, w.steps[(t - i - 1) % t].second});
    for (const ClosedWalk* base : std::initializer_list<const ClosedWalk*>{&w, &rev})
        for (std::size_t s = 0; s < t; ++s) {
            std::vector<std::pair<int, int>> rot;
            for (std::size_t i = 0; i < t; ++i) rot.push_back(base->steps[(s + i) % t]);
            cands.push_back(rot);
        }
    return *std::min_element(cands.begin(), cands.end());
}

int count_with_flip_invariance(const CubicGraph& g, const Embedding& emb, int flip_vertex) {
    Embedding flipped = emb;
    std::swap(flipped.rotation[flip_vertex][1], flipped.rotation[flip_vertex][2]);
    for (int d : g.darts_at(flip_vertex))
        flipped.signature[Multigraph::dart_edge(d)] *= -1;
    std::multiset<std::vector<std::pair<int, int>>> keys_a, keys_b;
    for (const FacialWalk& f : trace_facial_walks(g, emb)) keys_a.insert(f.canonical_key());
    for (const FacialWalk& f : trace_facial_walks(g, flipped)) keys_b.insert(f.canonical_key());
    CHECK(keys_a == keys_b);
    return static_cast<int>(keys_a.size());
}

}  // namespace

TEST_CASE("canonical key: Booth matches brute force") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        ClosedWalk w;
        int t = 2 + static_cast<int>(rng.below(9));
        for (int i = 0; i < t; ++i)
            w.steps.push_back({static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4))});
        CHECK(w.canonical_key() == brute_canonical(w));
    }
}

TEST_CASE("trace conservation over full enumerations") {
    // every embedding of theta and K4: face lengths sum to 2|E|,
    // every edge covered exactly twice
    for (const CubicGraph& g : {make_theta(), make_k4()}) {
        int count = 0;
        enumerate_embeddings(g, [&](const Embedding& emb) {
            std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
            int total = 0;
            std::vector<int> slots(g.edge_count(), 0);
            for (const FacialWalk& f : faces) {
                total += f.length();
                for (auto [v, e] : f.steps) ++slots[e];
            }
            CHECK(total == 2 * g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e) CHECK(slots[e] == 2);
            ++count;
            return true;
        });
        int expected = g.vertex_count() == 2 ? 16 : 128;
        CHECK(count == expected);
    }
}

TEST_CASE("enumeration counts: petersen") {
    int count = 0;
    enumerate_embeddings(generate_petersen(), [&](const Embedding&) {
        ++count;
        return true;
    });
    CHECK(count == 65536);
    CHECK_THROWS_AS(enumerate_embeddings(generate_gn(5, 0), [](const Embedding&) { return true; }),
                    TooLarge);
}

TEST_CASE("planar K4: 4 triangle faces exist in the enumeration") {
    CubicGraph g = make_k4();
    bool found_planar = false;
    enumerate_embeddings(g, [&](const Embedding& emb) {
        std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
        if (faces.size() == 4) {
            for (const FacialWalk& f : faces) CHECK(f.length() == 3);
            FdcReport r = surface_stats(g, emb, faces);
            CHECK(r.euler_characteristic == 2);
            CHECK(r.orientable);
            CHECK(r.genus_like == 0);
            CHECK(r.bender_richmond_bound == 0);
            CHECK(r.singular.empty());
            found_planar = true;
            return false;
        }
        return true;
    });
    CHECK(found_planar);
}

TEST_CASE("theta with planar rotation gives three digon faces") {
    CubicGraph g = make_theta();
    bool found = false;
    enumerate_embeddings(g, [&](const Embedding& emb) {
        std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
        if (faces.size() == 3) {
            for (const FacialWalk& f : faces) CHECK(f.length() == 2);
            CHECK(surface_stats(g, emb, faces).euler_characteristic == 2);
            found = true;
            return false;
        }
        return true;
    });
    CHECK(found);
}

TEST_CASE("petersen face lengths always sum to 30") {
    CubicGraph g = generate_petersen();
    Embedding emb = Embedding::trivial(g);
    std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
    int total = 0;
    for (const FacialWalk& f : faces) total += f.length();
    CHECK(total == 30);
}

TEST_CASE("bridges are always singular") {
    CubicGraph g = make_dumbbell();
    int bridge = 14;
    int checked = 0;
    enumerate_embeddings(g, [&](const Embedding& emb) {
        std::vector<int> singular = singular_edges(trace_facial_walks(g, emb));
        CHECK(std::binary_search(singular.begin(), singular.end(), bridge));
        return ++checked < 500;
    });
    CHECK(checked == 500);
}

TEST_CASE("vertex flip leaves the face multiset unchanged") {
    for (const CubicGraph& g : {make_prism(), generate_petersen(), make_theta()}) {
        Embedding emb = Embedding::trivial(g);
        count_with_flip_invariance(g, emb, 0);
        count_with_flip_invariance(g, emb, g.vertex_count() - 1);
        // also from a scrambled embedding
        Embedding odd = emb;
        for (int e = 0; e < g.edge_count(); e += 2) odd.signature[e] = -1;
        std::swap(odd.rotation[1][1], odd.rotation[1][2]);
        count_with_flip_invariance(g, odd, 1);
    }
}

TEST_CASE("orientability and euler characteristic parity") {
    CubicGraph g = make_prism();
    enumerate_embeddings(g, [&](const Embedding& emb) {
        FdcReport r = surface_stats(g, emb, trace_facial_walks(g, emb));
        CHECK(r.euler_characteristic <= 2);
        if (r.orientable) {
            CHECK(r.euler_characteristic % 2 == 0);
            CHECK(r.euler_characteristic == 2 - 2 * r.genus_like);
        } else {
            CHECK(r.euler_characteristic == 2 - r.genus_like);
            CHECK(r.genus_like >= 1);
        }
        return true;
    });
}

TEST_CASE("bender-richmond bound values") {
    // orientable genus 2 -> 9; non-orientable genus 3 -> 6; sphere -> 0;
    // projective plane -> 1. Find witnesses in small enumerations.
    CubicGraph g = generate_petersen();
    std::set<std::pair<bool, int>> seen;
    std::map<std::pair<bool, int>, int> bound;
    int budget = 65536;
    enumerate_embeddings(g, [&](const Embedding& emb) {
        FdcReport r = surface_stats(g, emb, trace_facial_walks(g, emb));
        seen.insert({r.orientable, r.genus_like});
        bound[{r.orientable, r.genus_like}] = r.bender_richmond_bound;
        return --budget > 0;
    });
    if (bound.count({true, 2})) CHECK(bound[{true, 2}] == 9);
    if (bound.count({false, 3})) CHECK(bound[{false, 3}] == 6);
    if (bound.count({false, 1})) CHECK(bound[{false, 1}] == 1);
    CHECK(seen.size() >= 3);
}

TEST_CASE("trace_counts agrees with the full trace") {
    TraceScratch scratch;
    for (const CubicGraph& g : {make_prism(), make_wagner(), generate_petersen()}) {
        int budget = 2000;
        enumerate_embeddings(g, [&](const Embedding& emb) {
            std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
            TraceCounts c = trace_counts(g, emb, scratch);
            CHECK(c.faces == static_cast<int>(faces.size()));
            CHECK(c.singular == static_cast<int>(singular_edges(faces).size()));
            return --budget > 0;
        });
    }
}

TEST_CASE("embedding validate rejects mismatches") {
    CubicGraph g = make_prism();
    Embedding emb = Embedding::trivial(g);
    emb.validate(g);
    Embedding bad = emb;
    bad.rotation[0][0] = bad.rotation[0][1];
    CHECK_THROWS_AS(bad.validate(g), VerificationFailure);
    Embedding wrong_size = emb;
    wrong_size.signature.pop_back();
    CHECK_THROWS_AS(wrong_size.validate(g), VerificationFailure);
}
