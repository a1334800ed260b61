#include "cdc/walk.hpp"

#include <algorithm>
#include <string>

namespace cdc {

namespace {

/// Booth's least-rotation: index of the lexicographically smallest cyclic
/// rotation of s, in O(|s|).
std::size_t least_rotation(const std::vector<std::pair<int, int>>& s) {
    std::size_t n = s.size();
    auto at = [&](std::size_t i) -> const std::pair<int, int>& { return s[i % n]; };
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const auto& sj = at(j);
        std::ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && sj != at(k + i + 1)) {
            if (sj < at(k + i + 1)) k = j - i - 1;
            i = fail[i];
        }
        if (i == -1 && sj != at(k)) {
            if (sj < at(k)) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k;
}

std::vector<std::pair<int, int>> best_rotation(const std::vector<std::pair<int, int>>& s) {
    std::size_t k = least_rotation(s);
    std::vector<std::pair<int, int>> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[(k + i) % s.size()]);
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> ClosedWalk::canonical_key() const {
    if (steps.empty()) return {};
    // Reversal of (v0,e0,...,v_{t-1},e_{t-1}) is (v0,e_{t-1},v_{t-1},e_{t-2},...,v1,e0).
    std::vector<std::pair<int, int>> rev(steps.size());
    std::size_t t = steps.size();
    for (std::size_t i = 0; i < t; ++i)
        rev[i] = {steps[(t - i) % t].first, steps[(t - i - 1) % t].second};
    return std::min(best_rotation(steps), best_rotation(rev));
}

void ClosedWalk::validate_in(const Multigraph& g) const {
    if (steps.size() < 2) throw NotAWalk("closed walks in loopless graphs have length >= 2");
    std::size_t t = steps.size();
    for (std::size_t i = 0; i < t; ++i) {
        auto [v, e] = steps[i];
        int w = steps[(i + 1) % t].first;
        if (v < 0 || v >= g.vertex_count() || e < 0 || e >= g.edge_count())
            throw NotAWalk("walk references an invalid vertex or edge id");
        const Edge& ed = g.edge(e);
        bool fits = (ed.u == v && ed.v == w) || (ed.v == v && ed.u == w);
        if (!fits)
            throw NotAWalk("edge " + std::to_string(e) + " does not join vertices " +
                           std::to_string(v) + " and " + std::to_string(w));
    }
}

std::vector<ClosedWalk> decompose_into_circuits(const Multigraph& g, std::span<const int> edge_set) {
    std::vector<char> in_set(g.edge_count(), 0);
    for (int e : edge_set) in_set[e] = 1;
    std::vector<int> set_deg(g.vertex_count(), 0);
    for (int e : edge_set) {
        ++set_deg[g.edge(e).u];
        ++set_deg[g.edge(e).v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (set_deg[v] != 0 && set_deg[v] != 2)
            throw InternalDegreeError("vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(set_deg[v]) + " in the edge set");

    std::vector<int> ordered(edge_set.begin(), edge_set.end());
    std::sort(ordered.begin(), ordered.end());
    std::vector<char> used(g.edge_count(), 0);
    std::vector<ClosedWalk> circuits;
    for (int start : ordered) {
        if (used[start]) continue;
        ClosedWalk walk;
        int v = g.edge(start).u;
        int e = start;
        do {
            walk.steps.emplace_back(v, e);
            used[e] = 1;
            v = g.other_endpoint(e, v);
            e = -1;
            for (int d : g.darts_at(v)) {
                int cand = Multigraph::dart_edge(d);
                if (in_set[cand] && !used[cand]) {
                    e = cand;
                    break;
                }
            }
        } while (e != -1);
        circuits.push_back(std::move(walk));
    }
    return circuits;
}

}  // namespace cdc
