#include "cdc/pipelines.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cdc {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::HalfN: return "half-n";
        case Strategy::TenthN: return "tenth-n";
        case Strategy::Over2k: return "over-2k";
        case Strategy::Cyclic2k: return "cyclic-2k";
    }
    return "?";
}

namespace {

void require_bridgeless(const CubicGraph& g) {
    std::vector<int> bridges = find_bridges(g);
    if (bridges.empty()) return;
    std::ostringstream msg;
    msg << "graph has bridge edges:";
    for (int e : bridges) msg << ' ' << e;
    throw NotBridgeless(msg.str());
}

/// Shared tail: extend the walks, trace, check regularity and the claimed
/// bound, package everything up.
PipelineResult finish(const CubicGraph& g, Strategy strategy, long long bound_num,
                      long long bound_den, std::vector<ClosedWalk> walks, int c1_walks,
                      PipelineWitness witness, bool trusted) {
    PartialCdc pcdc = make_partial_cdc(g, std::move(walks));
    PipelineResult out;
    out.strategy = strategy;
    out.n = g.vertex_count();
    out.bound_num = bound_num;
    out.bound_den = bound_den;
    out.embedding = extend_to_embedding(g, pcdc);
    out.report = surface_stats(g, out.embedding, trace_facial_walks(g, out.embedding));
    for (int e = 0; e < g.edge_count(); ++e)
        if (pcdc.edge_usage[e] > 0) out.covered_edges.push_back(e);
    out.witness = std::move(witness);
    out.witness.walks = std::move(pcdc.walks);
    out.witness.c1_walks = c1_walks;
    out.connectivity_trusted = trusted;

    for (int e : out.report.singular)
        if (std::binary_search(out.covered_edges.begin(), out.covered_edges.end(), e))
            throw BoundViolated("covered edge " + std::to_string(e) + " came out singular");
    long long singular = static_cast<long long>(out.report.singular.size());
    if (singular * bound_den > bound_num)
        throw BoundViolated(std::to_string(singular) + " singular edges exceed the bound " +
                            std::to_string(bound_num) + "/" + std::to_string(bound_den));
    return out;
}

}  // namespace

PipelineResult embed_half_n(const CubicGraph& g) {
    require_bridgeless(g);
    Matching m = perfect_matching(g);
    std::vector<int> rest;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!m.contains(e)) rest.push_back(e);
    std::vector<ClosedWalk> walks = decompose_into_circuits(g, rest);
    PipelineWitness w;
    w.m1 = m;
    int c1 = static_cast<int>(walks.size());
    return finish(g, Strategy::HalfN, g.vertex_count(), 2, std::move(walks), c1, std::move(w),
                  false);
}

PipelineResult embed_tenth_n(const CubicGraph& g) {
    require_bridgeless(g);
    Matching m1 = matching_avoiding_3cuts(g);  // NotThreeEdgeConnected on thin inputs
    Matching m2 = second_matching_kkn(g, m1);
    int n = g.vertex_count();
    int inter = static_cast<int>(matching_intersection(m1, m2).size());
    // |M1 u M2| = n - |M1 n M2| >= 9n/10, the reformulated union bound
    if (10LL * (n - inter) < 9LL * n)
        throw BoundViolated("matching union " + std::to_string(n - inter) +
                            " is below nine tenths of n");

    std::vector<int> c1_edges, c2_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        bool in1 = m1.contains(e), in2 = m2.contains(e);
        if (!in1) c1_edges.push_back(e);
        if (in1 != in2) c2_edges.push_back(e);
    }
    std::vector<ClosedWalk> walks = decompose_into_circuits(g, c1_edges);
    int c1 = static_cast<int>(walks.size());
    for (ClosedWalk& w : decompose_into_circuits(g, c2_edges)) walks.push_back(std::move(w));
    PipelineWitness w;
    w.m1 = std::move(m1);
    w.m2 = std::move(m2);
    return finish(g, Strategy::TenthN, n, 10, std::move(walks), c1, std::move(w), false);
}

PipelineResult embed_over_2k(const CubicGraph& g, std::optional<int> k, int connectivity_guard) {
    require_bridgeless(g);
    int n = g.vertex_count();
    bool trusted = false;
    int kk;
    if (n <= connectivity_guard) {
        std::optional<int> cc = cyclic_edge_connectivity(g);
        if (!cc)
            throw CyclicConnectivityTooLow(
                "cyclic edge connectivity is infinite; the bound does not apply as stated");
        if (k && *k > *cc)
            throw CyclicConnectivityTooLow("graph is not cyclically " + std::to_string(*k) +
                                           "-edge-connected (connectivity " + std::to_string(*cc) +
                                           ")");
        kk = k ? *k : *cc;
    } else {
        if (!k)
            throw TooLarge("graph exceeds the cyclic-connectivity guard (" +
                           std::to_string(connectivity_guard) + " vertices); supply k explicitly");
        kk = *k;
        trusted = true;
    }
    if (kk < 3)
        throw CyclicConnectivityTooLow("the bound requires cyclic connectivity at least 3, got " +
                                       std::to_string(kk));

    Matching m = perfect_matching(g);
    std::vector<std::int64_t> weights(g.edge_count(), 0);
    for (int e : m.edges) weights[e] = 1;
    Matching mp = min_weight_perfect_matching(g, weights);
    int inter = static_cast<int>(matching_intersection(m, mp).size());
    if (2LL * kk * inter > n)
        throw BoundViolated("|M n M'| = " + std::to_string(inter) + " exceeds n/2k");

    std::vector<int> c1_edges, c2_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        bool in1 = m.contains(e), in2 = mp.contains(e);
        if (!in1) c1_edges.push_back(e);
        if (in1 != in2) c2_edges.push_back(e);
    }
    std::vector<ClosedWalk> walks = decompose_into_circuits(g, c1_edges);
    int c1 = static_cast<int>(walks.size());
    for (ClosedWalk& w : decompose_into_circuits(g, c2_edges)) walks.push_back(std::move(w));
    PipelineWitness w;
    w.m1 = std::move(m);
    w.m2 = std::move(mp);
    w.k = kk;
    return finish(g, Strategy::Over2k, n, 2LL * kk, std::move(walks), c1, std::move(w), trusted);
}

PipelineResult pipeline_cyclically_2k(const CubicGraph& g, int k, std::optional<Matching> m,
                                      int connectivity_guard) {
    if (k < 1) throw MalformedInput("the tree-packing pipeline requires k >= 1");
    require_bridgeless(g);
    int n = g.vertex_count();
    bool trusted = false;
    if (n <= connectivity_guard) {
        std::optional<int> cc = cyclic_edge_connectivity(g);
        // infinite connectivity satisfies the precondition vacuously
        if (cc && *cc < 2 * k)
            throw CyclicConnectivityTooLow("graph is cyclically " + std::to_string(*cc) +
                                           "-edge-connected, needed " + std::to_string(2 * k));
    } else {
        trusted = true;
    }

    Matching matching = m ? std::move(*m) : perfect_matching(g);
    matching.validate_perfect(g);
    ContractedMultigraph cm = contract_cycles(g, matching);
    std::vector<SpanningTree> trees = edge_disjoint_spanning_trees(cm.h, k);
    std::size_t smallest = 0;
    for (std::size_t i = 1; i < trees.size(); ++i)
        if (trees[i].edges.size() < trees[smallest].edges.size()) smallest = i;
    const SpanningTree& tree_h = trees[smallest];
    if (2LL * k * static_cast<long long>(tree_h.edges.size()) > n)
        throw BoundViolated("the packed tree has " + std::to_string(tree_h.edges.size()) +
                            " edges, above n/2k");

    std::vector<int> lifted;
    for (int he : tree_h.edges) lifted.push_back(cm.h_edge_to_g_edge[he]);
    std::sort(lifted.begin(), lifted.end());
    // Extend the lifted tree with non-matching edges only: any further
    // matching edge in T_G could leak into J and past the |E(T_H)| bound.
    std::vector<int> required = lifted;
    {
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int e : lifted) uf[find(g.edge(e).u)] = find(g.edge(e).v);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (matching.contains(e)) continue;
            int a = find(g.edge(e).u), b = find(g.edge(e).v);
            if (a == b) continue;
            uf[a] = b;
            required.push_back(e);
        }
        std::sort(required.begin(), required.end());
    }
    SpanningTree tree_g = spanning_tree(g, required);
    PostmanSet j = postman_from_tree(g, tree_g);
    MatchingPostmanCdc mp = partial_cdc_from_matching_postman(g, matching, j);
    if (!std::includes(lifted.begin(), lifted.end(), mp.uncovered.begin(), mp.uncovered.end()))
        throw BoundViolated("uncovered edges escaped the lifted tree");

    PipelineWitness w;
    w.m1 = std::move(matching);
    w.postman = std::move(j);
    w.tree_g = std::move(tree_g);
    w.tree_h_lifted = std::move(lifted);
    w.k = k;
    int c1 = mp.c1_walks;
    return finish(g, Strategy::Cyclic2k, n, 2LL * k, std::move(mp.pcdc.walks), c1, std::move(w),
                  trusted);
}

BenderRichmondComparison compare_bender_richmond(const PipelineResult& result) {
    BenderRichmondComparison out;
    out.singular_count = static_cast<int>(result.report.singular.size());
    out.our_num = result.bound_num;
    out.our_den = result.bound_den;
    out.br_bound = result.report.bender_richmond_bound;
    const FdcReport& r = result.report;
    if (r.orientable && r.genus_like == 0)
        out.surface = "sphere";
    else if (!r.orientable && r.genus_like == 1)
        out.surface = "projective plane";
    else
        out.surface = (r.orientable ? "orientable genus " : "non-orientable genus ") +
                      std::to_string(r.genus_like);
    long long ours = out.our_num, theirs = static_cast<long long>(out.br_bound) * out.our_den;
    out.smaller = ours < theirs ? "ours" : ours > theirs ? "bender-richmond" : "equal";
    return out;
}

}  // namespace cdc
