#include "cdc/blossom.hpp"
#include "cdc/graph.hpp"
#include "cdc/rng.hpp"
#include <cstdio>
using namespace cdc;
int main(int argc, char** argv) {
    int start = argc > 1 ? atoi(argv[1]) : 0;
    Rng rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + 2 * (int)rng.below(5);
        int m = n + (int)rng.below(2 * n + 1);
        std::vector<Edge> edges;
        while ((int)edges.size() < m) {
            int u = (int)rng.below(n), v = (int)rng.below(n);
            if (u == v) continue;
            edges.push_back({u, v});
        }
        std::vector<std::int64_t> w(m);
        for (auto& x : w) x = (std::int64_t)rng.below(10);
        if (trial < start) continue;
        fprintf(stderr, "trial %d n=%d m=%d: ", trial, n, m);
        for (int e = 0; e < m; ++e) fprintf(stderr, "(%d,%d,w%d) ", edges[e].u, edges[e].v, (int)w[e]);
        fprintf(stderr, "... ");
        fflush(stderr);
        try {
            auto got = blossom_min_weight_perfect_matching(n, edges, w);
            fprintf(stderr, "ok size=%zu\n", got.size());
        } catch (const NoPerfectMatching&) {
            fprintf(stderr, "noPM\n");
        } catch (const Error& err) {
            fprintf(stderr, "ERROR %s\n", err.what());
        }
    }
    return 0;
}
