#include "cdc/partial_cdc.hpp"

#include <algorithm>
#include <set>

namespace cdc {

namespace {

Angle make_angle(int v, int e, int f) { return {v, std::min(e, f), std::max(e, f)}; }

/// Walk passages at each position i: predecessor edge, vertex, successor edge
/// (cyclic; position 0 pairs with the last edge).
template <typename Fn>
void for_each_passage(const ClosedWalk& w, Fn&& fn) {
    std::size_t t = w.steps.size();
    for (std::size_t i = 0; i < t; ++i) {
        int prev_edge = w.steps[(i + t - 1) % t].second;
        auto [v, next_edge] = w.steps[i];
        fn(prev_edge, v, next_edge);
    }
}

}  // namespace

std::vector<int> PartialCdc::uncovered_edges() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edge_usage.size(); ++e)
        if (edge_usage[e] == 0) out.push_back(static_cast<int>(e));
    return out;
}

LinkGraph link_graph(const CubicGraph& g, const std::vector<ClosedWalk>& walks, int v) {
    LinkGraph d;
    d.vertex = v;
    for (const ClosedWalk& w : walks)
        for_each_passage(w, [&](int e, int vertex, int f) {
            if (vertex == v) d.links.emplace_back(std::min(e, f), std::max(e, f));
        });
    (void)g;
    return d;
}

std::optional<Violation> validate_partial_cdc(const CubicGraph& g,
                                              const std::vector<ClosedWalk>& walks) {
    for (const ClosedWalk& w : walks) w.validate_in(g);

    std::vector<std::vector<std::pair<int, int>>> keys;
    keys.reserve(walks.size());
    for (const ClosedWalk& w : walks) keys.push_back(w.canonical_key());

    // C1: per-edge occurrences across all walks.
    std::vector<std::vector<int>> uses(g.edge_count());
    for (std::size_t i = 0; i < walks.size(); ++i)
        for (auto [v, e] : walks[i].steps) uses[e].push_back(static_cast<int>(i));
    for (int e = 0; e < g.edge_count(); ++e) {
        if (uses[e].size() > 2) {
            return Violation{Violation::Kind::EdgeOverused, e, {}, uses[e],
                             "edge " + std::to_string(e) + " is covered " +
                                 std::to_string(uses[e].size()) + " times"};
        }
        if (uses[e].size() == 2) {
            int a = uses[e][0], b = uses[e][1];
            if (a == b)
                return Violation{Violation::Kind::SameWalkEdge, e, {}, {a},
                                 "edge " + std::to_string(e) + " is covered twice by walk " +
                                     std::to_string(a)};
            if (keys[a] == keys[b])
                return Violation{Violation::Kind::DuplicateWalk, e, {}, {a, b},
                                 "edge " + std::to_string(e) + " is covered twice by walks " +
                                     std::to_string(a) + " and " + std::to_string(b) +
                                     ", which are the same walk"};
        }
    }

    // C2: every angle used by at most one passage.
    std::map<Angle, int> first_user;  // angle -> walk index of first passage
    for (std::size_t i = 0; i < walks.size(); ++i) {
        std::optional<Violation> bad;
        for_each_passage(walks[i], [&](int e, int v, int f) {
            if (bad) return;
            Angle a = make_angle(v, e, f);
            auto [it, inserted] = first_user.try_emplace(a, static_cast<int>(i));
            if (!inserted)
                bad = Violation{Violation::Kind::AngleReused, -1, a,
                                {it->second, static_cast<int>(i)},
                                "angle {" + std::to_string(a.e_lo) + "," + std::to_string(a.e_hi) +
                                    "} at vertex " + std::to_string(v) + " is used twice"};
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

PartialCdc make_partial_cdc(const CubicGraph& g, std::vector<ClosedWalk> walks) {
    if (auto violation = validate_partial_cdc(g, walks)) throw Error(violation->message);
    PartialCdc pcdc;
    pcdc.edge_usage.assign(g.edge_count(), 0);
    for (std::size_t i = 0; i < walks.size(); ++i) {
        for (auto [v, e] : walks[i].steps) ++pcdc.edge_usage[e];
        for_each_passage(walks[i], [&](int e, int v, int f) {
            pcdc.angle_usage[make_angle(v, e, f)].push_back(static_cast<int>(i));
        });
    }
    pcdc.walks = std::move(walks);
    return pcdc;
}

Embedding extend_to_embedding(const CubicGraph& g, const PartialCdc& pcdc) {
    // The link graphs of a valid partial CDC always complete to the triangle
    // on the three incident edges, and either orientation of that triangle is
    // consistent with the walks; the rotation is therefore the ascending
    // dart order, and all information from the walks goes into the signature.
    Embedding emb = Embedding::trivial(g);

    auto next_edge_at = [&](int v, int e) {
        return Multigraph::dart_edge(emb.rot_next(v, g.dart_at(e, v)));
    };

    std::vector<std::int8_t> lambda(g.edge_count(), 0);
    for (const ClosedWalk& w : pcdc.walks) {
        std::size_t t = w.steps.size();
        for (std::size_t i = 0; i < t; ++i) {
            auto [u, e] = w.steps[i];
            int v = w.steps[(i + 1) % t].first;
            int f = w.steps[(i + t - 1) % t].second;  // edge entering u
            int s = w.steps[(i + 1) % t].second;      // edge leaving v
            // At a cubic vertex the rotation is a 3-cycle on the incident
            // edges, so exactly one of pi_u(f) = e and pi_u^{-1}(f) = e holds.
            bool forward_u = next_edge_at(u, f) == e;
            bool forward_v = next_edge_at(v, e) == s;
            std::int8_t value = forward_u == forward_v ? 1 : -1;
            if (lambda[e] != 0 && lambda[e] != value)
                throw InconsistentLambda("walks force conflicting signatures on edge " +
                                         std::to_string(e));
            lambda[e] = value;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) emb.signature[e] = lambda[e] == 0 ? 1 : lambda[e];

    // Soundness: every walk of the partial CDC must reappear as a facial walk.
    std::vector<FacialWalk> faces = trace_facial_walks(g, emb);
    std::set<std::vector<std::pair<int, int>>> face_keys;
    for (const FacialWalk& f : faces) face_keys.insert(f.canonical_key());
    for (const ClosedWalk& w : pcdc.walks)
        if (!face_keys.count(w.canonical_key()))
            throw Error("internal: a partial CDC walk is not a facial walk of its extension");
    return emb;
}

std::map<Angle, int> angle_coverage(const CubicGraph& g, const std::vector<FacialWalk>& faces) {
    std::map<Angle, int> cover;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::optional<Angle> reused;
        for_each_passage(faces[i], [&](int e, int v, int f) {
            if (reused) return;
            Angle a = make_angle(v, e, f);
            if (!cover.try_emplace(a, static_cast<int>(i)).second) reused = a;
        });
        if (reused)
            throw Error("internal: angle {" + std::to_string(reused->e_lo) + "," +
                        std::to_string(reused->e_hi) + "} at vertex " + std::to_string(reused->v) +
                        " is used by two face passages");
    }
    std::size_t expected = 3 * static_cast<std::size_t>(g.vertex_count());
    if (cover.size() != expected)
        throw Error("internal: " + std::to_string(cover.size()) + " angles covered, expected " +
                    std::to_string(expected));
    return cover;
}

}  // namespace cdc
