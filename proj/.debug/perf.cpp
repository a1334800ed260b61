#include "cdc/graph.hpp"
#include "cdc/matching.hpp"
#include <chrono>
#include <cstdio>
using namespace cdc;
int main() {
    for (int n : {10000, 20000}) {
        auto t0 = std::chrono::steady_clock::now();
        CubicGraph g = generate_random_cubic_bridgeless(n, 17);
        auto t1 = std::chrono::steady_clock::now();
        Matching m = perfect_matching(g);
        auto t2 = std::chrono::steady_clock::now();
        printf("n=%d gen=%.3fs matching=%.3fs (|M|=%zu)\n", n,
               std::chrono::duration<double>(t1 - t0).count(),
               std::chrono::duration<double>(t2 - t1).count(), m.edges.size());
    }
    return 0;
}
