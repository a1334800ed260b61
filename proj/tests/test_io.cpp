#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdc/io.hpp"
#include "corpus.hpp"

using namespace cdc;
using namespace cdc::test;

TEST_CASE("embedding text round trip") {
    for (const CubicGraph& g : {make_theta(), make_prism(), generate_petersen()}) {
        Embedding emb = Embedding::trivial(g);
        emb.signature[1] = -1;
        std::swap(emb.rotation[0][0], emb.rotation[0][2]);
        Embedding back = embedding_from_text(g, embedding_to_text(g, emb));
        CHECK(back == emb);
    }
}

TEST_CASE("embedding text error classes") {
    CubicGraph g = make_theta();
    Embedding emb = Embedding::trivial(g);
    std::string text = embedding_to_text(g, emb);

    // syntax damage: parse error
    std::string corrupt = text;
    corrupt.replace(corrupt.find("rotation 0:"), 11, "rotation x:");
    CHECK_THROWS_AS(embedding_from_text(g, corrupt), MalformedInput);

    // graph mismatch: verification failure
    CubicGraph bigger = make_prism();
    CHECK_THROWS_AS(embedding_from_text(bigger, text), VerificationFailure);

    // missing line
    std::string truncated = text.substr(0, text.rfind("signature"));
    CHECK_THROWS_AS(embedding_from_text(g, truncated), VerificationFailure);
}

TEST_CASE("walk file round trip") {
    CubicGraph g = generate_petersen();
    std::vector<ClosedWalk> walks(2);
    walks[0].steps = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
    walks[1].steps = {{5, 5}, {7, 7}, {9, 9}, {6, 6}, {8, 8}};
    std::vector<ClosedWalk> back = walks_from_text(walks_to_text(walks));
    REQUIRE(back.size() == 2);
    CHECK(back[0] == walks[0]);
    CHECK(back[1] == walks[1]);
    for (const ClosedWalk& w : back) w.validate_in(g);

    CHECK_THROWS_AS(walks_from_text("0 0 1\n"), MalformedInput);
    CHECK_THROWS_AS(walks_from_text("0 0 1 1 7\n"), MalformedInput);  // not closed
}

TEST_CASE("edge set round trip") {
    std::vector<int> edges{3, 1, 7};
    CHECK(edge_set_from_text(edge_set_to_text(edges)) == std::vector<int>{1, 3, 7});
    CHECK_THROWS_AS(edge_set_from_text("1 2 x"), MalformedInput);
}

TEST_CASE("verify_embedding accepts traced embeddings and reports stats") {
    CubicGraph g = generate_petersen();
    Embedding emb = Embedding::trivial(g);
    VerifyReport r = verify_embedding(g, emb);
    CHECK(r.faces >= 1);
    CHECK(r.text.find("euler-characteristic:") != std::string::npos);

    // wrong-size embedding is a verification failure
    CubicGraph theta = make_theta();
    CHECK_THROWS_AS(verify_embedding(theta, emb), VerificationFailure);
}
