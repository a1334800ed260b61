#include "cdc/blossom.hpp"
#include "cdc/graph.hpp"
#include <cstdio>
using namespace cdc;
int main() {
    std::vector<Edge> edges = {{6,1},{2,4},{5,0},{7,2},{7,1},{3,1},{9,2},{3,0},{0,4},{8,5},{6,8},{5,6},{8,7},{9,4},{3,9},{5,9},{3,1},{8,6},{8,9},{6,1},{3,5},{8,7},{1,8},{8,2},{1,7},{5,1},{0,8},{0,7},{0,7}};
    std::vector<std::int64_t> w = {9,1,8,9,0,5,5,1,6,2,1,6,5,7,3,3,0,1,3,4,1,0,7,0,7,8,1,7,8};
    auto got = blossom_min_weight_perfect_matching(10, edges, w);
    std::int64_t t=0; for (int e : got) t += w[e];
    printf("ok size=%zu weight=%lld\n", got.size(), (long long)t);
    return 0;
}
