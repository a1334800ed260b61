#include <cstdio>
#include <cstdlib>
#include "cdc/blossom.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cdc {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

enum Label : int8_t { FREE = 0, EVEN = 1, ODD = 2 };

/// Primal-dual blossom matcher. Weights are doubled internally; with a
/// uniform integer start all duals stay integral: every still-unmatched
/// vertex receives the same updates, so tree vertices agree with their root
/// modulo 2 along tight (even-weight) paths, making even-even slacks even.
class Matcher {
public:
    Matcher(int n, std::span<const Edge> edges, std::span<const std::int64_t> weights)
        : n_(n), edges_(edges.begin(), edges.end()) {
        w2_.reserve(edges.size());
        for (std::int64_t w : weights) w2_.push_back(2 * w);
        inc_.resize(n_);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (edges_[e].u == edges_[e].v) throw LoopEdge("matching on a graph with a loop");
            inc_[edges_[e].u].push_back(static_cast<int>(e));
            inc_[edges_[e].v].push_back(static_cast<int>(e));
        }
        slots_.resize(n_);
        std::int64_t w2min = 0;
        for (std::int64_t w : w2_) w2min = std::min(w2min, w);
        yhat_.assign(n_, w2min / 2);  // uniform: feasible and parity-safe
        match_v_.assign(n_, -1);
        match_e_.assign(n_, -1);
    }

    std::vector<int> solve() {
        if (n_ % 2 != 0) throw NoPerfectMatching("odd number of vertices");
        greedy_init();
        while (true) {
            int exposed = -1;
            for (int v = 0; v < n_; ++v)
                if (match_v_[v] == -1) {
                    exposed = v;
                    break;
                }
            if (exposed == -1) break;
            run_phase();
        }
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (match_v_[v] > v) out.push_back(match_e_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct CycleEdge {
        int eid, x, y;  // x lies in children[j], y in children[j+1]
    };
    struct Slot {
        int parent = -1;
        bool alive = true;
        std::vector<int> children;      // empty for original vertices
        std::vector<CycleEdge> cycle;   // cycle[j] joins children[j], children[j+1]
        std::int64_t z = 0;
        Label label = FREE;
        int root = -1;
        int pe_eid = -1, pe_in = -1, pe_out = -1;  // tree parent edge of an ODD node
    };

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> w2_;
    std::vector<std::vector<int>> inc_;
    std::vector<Slot> slots_;
    std::vector<int> free_slots_;
    std::vector<std::int64_t> yhat_;
    std::vector<int> match_v_, match_e_;
    std::vector<int> queue_;
    bool augmented_ = false;

    int other(int eid, int v) const { return edges_[eid].u == v ? edges_[eid].v : edges_[eid].u; }

    std::int64_t slack(int eid) const {
        return w2_[eid] - yhat_[edges_[eid].u] - yhat_[edges_[eid].v];
    }

    int outer(int v) const {
        int s = v;
        while (slots_[s].parent != -1) s = slots_[s].parent;
        return s;
    }

    int base_vertex(int s) const {
        while (!slots_[s].children.empty()) s = slots_[s].children[0];
        return s;
    }

    void collect_deep(int s, std::vector<int>& out) const {
        if (s < n_) {
            out.push_back(s);
            return;
        }
        for (int c : slots_[s].children) collect_deep(c, out);
    }

    void greedy_init() {
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            int u = edges_[e].u, v = edges_[e].v;
            if (match_v_[u] == -1 && match_v_[v] == -1 && slack(static_cast<int>(e)) == 0) {
                match_v_[u] = v;
                match_v_[v] = u;
                match_e_[u] = match_e_[v] = static_cast<int>(e);
            }
        }
    }

    std::vector<int> alive_outermost() const {
        std::vector<int> out;
        for (int s = 0; s < static_cast<int>(slots_.size()); ++s)
            if (slots_[s].alive && slots_[s].parent == -1) out.push_back(s);
        return out;
    }

    void run_phase() {
        for (int s : alive_outermost()) {
            slots_[s].label = FREE;
            slots_[s].root = -1;
        }
        queue_.clear();
        for (int s : alive_outermost()) {
            if (match_v_[base_vertex(s)] == -1) {
                slots_[s].label = EVEN;
                slots_[s].root = s;
                collect_deep(s, queue_);
            }
        }
        augmented_ = false;
        long long guard = 0;
        const long long guard_limit = 64LL * (n_ + 4) * (n_ + 4) + (1 << 20);
        while (!augmented_) {
            if (++guard > guard_limit) throw Error("internal: blossom matcher made no progress");
            int matched_before = 0; for (int v = 0; v < n_; ++v) matched_before += match_v_[v] != -1; scan(); if (getenv("BL_DBG")) fprintf(stderr, "it=%lld matched=%d queue=%zu slots=%zu\n", guard, matched_before, queue_.size(), slots_.size());
            if (augmented_) return;
            dual_update_and_expand();
        }
    }

    void scan() {
        if (getenv("BL_DBG")) fprintf(stderr, "  scan start q=%zu\n", queue_.size());
        for (std::size_t qi = 0; qi < queue_.size() && !augmented_; ++qi) {
            int u = queue_[qi];
            int us = outer(u);
            if (slots_[us].label != EVEN) continue;
            for (int eid : inc_[u]) {
                int v = other(eid, u);
                int vs = outer(v);
                if (us == vs) continue;
                if (slack(eid) != 0) continue;
                if (slots_[vs].label == EVEN) {
                    if (slots_[us].root != slots_[vs].root) {
                        augment(eid, u, v);
                        return;
                    }
                    if (getenv("BL_DBG")) fprintf(stderr, "  shrink u=%d v=%d\n", u, v);
                    shrink(eid, u, v);
                    us = outer(u);  // u may now live in the new blossom
                } else if (slots_[vs].label == FREE) {
                    grow(eid, u, v, vs);
                }
                if (slots_[us].label != EVEN) break;
            }
        }
    }

    void grow(int eid, int u, int v, int vs) {
        if (getenv("BL_DBG")) fprintf(stderr, "  grow u=%d v=%d vs=%d\n", u, v, vs);
        slots_[vs].label = ODD;
        slots_[vs].root = slots_[outer(u)].root;
        slots_[vs].pe_eid = eid;
        slots_[vs].pe_in = v;
        slots_[vs].pe_out = u;
        int b = base_vertex(vs);
        int q = match_v_[b];
        int ms = outer(q);
        slots_[ms].label = EVEN;
        slots_[ms].root = slots_[vs].root;
        collect_deep(ms, queue_);
    }

    /// Re-pair the matching inside slot s so that `expose` is the only vertex
    /// of s not matched within s; rotates the blossom cycle so the child
    /// containing `expose` becomes the base child.
    void rethread(int s, int expose) {
        if (s < n_) return;
        Slot& b = slots_[s];
        int idx = -1;
        for (std::size_t i = 0; i < b.children.size(); ++i) {
            int walk = expose;
            while (walk != -1 && walk != b.children[i]) walk = slots_[walk].parent;
            if (walk == b.children[i]) {
                idx = static_cast<int>(i);
                break;
            }
        }
        if (idx == -1) throw Error("internal: rethread vertex not inside blossom");
        std::rotate(b.children.begin(), b.children.begin() + idx, b.children.end());
        std::rotate(b.cycle.begin(), b.cycle.begin() + idx, b.cycle.end());
        rethread(b.children[0], expose);
        for (std::size_t j = 1; j + 1 < b.children.size(); j += 2) {
            const CycleEdge& ce = b.cycle[j];
            rethread(b.children[j], ce.x);
            rethread(b.children[j + 1], ce.y);
            match_v_[ce.x] = ce.y;
            match_v_[ce.y] = ce.x;
            match_e_[ce.x] = match_e_[ce.y] = ce.eid;
        }
    }

    /// Flip matched/unmatched along the tree path from `enter` (inside the
    /// even node xs) up to the root; afterwards `enter` is exposed.
    void augment_path(int xs, int enter) {
        int climb = 0;
        while (true) {
            if (getenv("BL_DBG")) fprintf(stderr, "  climb xs=%d enter=%d\n", xs, enter);
            if (++climb > 1000) { fprintf(stderr, "  CLIMB LOOP\n"); abort(); }
            int ob = base_vertex(xs);
            int q = match_v_[ob];
            rethread(xs, enter);
            if (q == -1) {
                match_v_[enter] = -1;
                match_e_[enter] = -1;
                return;
            }
            int ys = outer(q);
            int y_in = slots_[ys].pe_in, y_out = slots_[ys].pe_out, y_eid = slots_[ys].pe_eid;
            rethread(ys, y_in);
            match_v_[y_in] = y_out;
            match_v_[y_out] = y_in;
            match_e_[y_in] = match_e_[y_out] = y_eid;
            xs = outer(y_out);
            enter = y_out;
        }
    }

    void dump_state(const char* tag) {
        fprintf(stderr, "== %s\n", tag);
        for (int vtx = 0; vtx < n_; ++vtx)
            fprintf(stderr, "  v%d outer=%d match=%d(e%d) label=%d root=%d yhat=%lld\n", vtx,
                    outer(vtx), match_v_[vtx], match_e_[vtx], (int)slots_[outer(vtx)].label,
                    slots_[outer(vtx)].root, (long long)yhat_[vtx]);
        for (int s = n_; s < (int)slots_.size(); ++s)
            if (slots_[s].alive) fprintf(stderr, "  slot%d parent=%d z=%lld label=%d root=%d pe=(%d,%d,%d)\n",
                s, slots_[s].parent, (long long)slots_[s].z, (int)slots_[s].label, slots_[s].root,
                slots_[s].pe_eid, slots_[s].pe_in, slots_[s].pe_out);
        for (int s = 0; s < n_; ++s)
            fprintf(stderr, "  vslot%d label=%d root=%d pe=(%d,%d,%d)\n", s, (int)slots_[s].label,
                    slots_[s].root, slots_[s].pe_eid, slots_[s].pe_in, slots_[s].pe_out);
    }

    void augment(int eid, int u, int v) {
        if (getenv("BL_DBG")) { fprintf(stderr, "  AUGMENT eid=%d u=%d v=%d\n", eid, u, v); dump_state("pre-augment"); }
        augment_path(outer(u), u);
        augment_path(outer(v), v);
        match_v_[u] = v;
        match_v_[v] = u;
        match_e_[u] = match_e_[v] = eid;
        augmented_ = true;
    }

    struct TreePath {
        std::vector<int> nodes;      // nodes[0] = start, nodes.back() = root
        std::vector<CycleEdge> up;   // up[i] joins nodes[i] to nodes[i+1]; x in nodes[i]
    };

    TreePath path_to_root(int s) {
        TreePath p;
        p.nodes.push_back(s);
        while (true) {
            if (p.nodes.size() > 1000) { fprintf(stderr, "  PATH LOOP from %d:", s); for (size_t i=0;i<20;++i) fprintf(stderr, " %d", p.nodes[i]); fprintf(stderr, "\n"); abort(); }
            int cur = p.nodes.back();
            if (slots_[cur].label == EVEN) {
                int b = base_vertex(cur);
                int q = match_v_[b];
                if (q == -1) return p;
                p.up.push_back({match_e_[b], b, q});
                p.nodes.push_back(outer(q));
            } else {
                p.up.push_back({slots_[cur].pe_eid, slots_[cur].pe_in, slots_[cur].pe_out});
                p.nodes.push_back(outer(slots_[cur].pe_out));
            }
        }
    }

    int alloc_slot() {
        if (free_slots_.empty()) {
            slots_.emplace_back();
            return static_cast<int>(slots_.size()) - 1;
        }
        int bs = free_slots_.back();
        free_slots_.pop_back();
        slots_[bs] = Slot{};
        return bs;
    }

    void shrink(int eid, int u, int v) {
        TreePath pu = path_to_root(outer(u));
        TreePath pv = path_to_root(outer(v));
        std::vector<char> on_u(slots_.size(), 0);
        for (int s : pu.nodes) on_u[s] = 1;
        std::size_t vi = 0;
        while (vi < pv.nodes.size() && !on_u[pv.nodes[vi]]) ++vi;
        if (vi == pv.nodes.size()) throw Error("internal: shrink found no common tree ancestor");
        int lca = pv.nodes[vi];
        std::size_t ui = 0;
        while (pu.nodes[ui] != lca) ++ui;

        int bs = alloc_slot();
        Slot& b = slots_[bs];
        b.alive = true;
        b.children.push_back(lca);
        for (std::size_t i = ui; i-- > 0;) {  // lca down to outer(u), edges flipped
            b.cycle.push_back({pu.up[i].eid, pu.up[i].y, pu.up[i].x});
            b.children.push_back(pu.nodes[i]);
        }
        b.cycle.push_back({eid, u, v});
        for (std::size_t i = 0; i < vi; ++i) {  // outer(v) back up to lca
            b.children.push_back(pv.nodes[i]);
            b.cycle.push_back({pv.up[i].eid, pv.up[i].x, pv.up[i].y});
        }
        if (b.children.size() % 2 != 1 || b.cycle.size() != b.children.size())
            throw Error("internal: shrink built a malformed blossom");
        b.z = 0;
        b.label = EVEN;
        b.root = slots_[lca].root;
        for (int c : b.children) {
            slots_[c].parent = bs;
            if (slots_[c].label == ODD) collect_deep(c, queue_);
        }
    }

    void expand(int bs) {
        if (getenv("BL_DBG")) fprintf(stderr, "  expand %d\n", bs);
        Slot& b = slots_[bs];
        std::vector<int> children = b.children;
        std::vector<CycleEdge> cycle = b.cycle;
        int pe_eid = b.pe_eid, pe_in = b.pe_in, pe_out = b.pe_out;
        int root = b.root;
        for (int c : children) slots_[c].parent = -1;
        b.alive = false;
        b.children.clear();
        b.cycle.clear();
        free_slots_.push_back(bs);

        int jstar = -1;
        for (std::size_t i = 0; i < children.size(); ++i) {
            int walk = pe_in;
            while (walk != -1 && walk != children[i]) walk = slots_[walk].parent;
            if (walk == children[i]) {
                jstar = static_cast<int>(i);
                break;
            }
        }
        if (jstar == -1) throw Error("internal: expand lost the tree entry point");

        int k = static_cast<int>(children.size());
        for (int c : children) {
            slots_[c].label = FREE;
            slots_[c].root = -1;
        }
        // Tree path from the entry child to the base child; the first step
        // must follow the matched cycle edge, which fixes the direction.
        std::vector<int> path;
        std::vector<CycleEdge> path_edges;  // edge between path[i] and path[i+1]
        if (jstar == 0) {
            path = {children[0]};
        } else if (jstar % 2 == 1) {
            for (int j = jstar; j <= k - 1; ++j) {
                path.push_back(children[j]);
                path_edges.push_back(cycle[j]);  // joins children[j], children[j+1]
            }
            path.push_back(children[0]);
        } else {
            for (int j = jstar; j >= 1; --j) {
                path.push_back(children[j]);
                CycleEdge ce = cycle[j - 1];  // joins children[j-1], children[j]
                path_edges.push_back({ce.eid, ce.y, ce.x});
            }
            path.push_back(children[0]);
        }
        for (std::size_t i = 0; i < path.size(); ++i) {
            Slot& node = slots_[path[i]];
            node.root = root;
            if (i % 2 == 0) {
                node.label = ODD;
                if (i == 0) {
                    node.pe_eid = pe_eid;
                    node.pe_in = pe_in;
                    node.pe_out = pe_out;
                } else {
                    const CycleEdge& ce = path_edges[i - 1];  // path[i-1] -> path[i]
                    node.pe_eid = ce.eid;
                    node.pe_in = ce.y;
                    node.pe_out = ce.x;
                }
            } else {
                node.label = EVEN;
                collect_deep(path[i], queue_);
            }
        }
    }

    void dual_update_and_expand() {
        std::vector<int> outers = alive_outermost();
        std::int64_t d1 = kInf, d2 = kInf, d3 = kInf;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            int us = outer(edges_[e].u), vs = outer(edges_[e].v);
            if (us == vs) continue;
            Label lu = slots_[us].label, lv = slots_[vs].label;
            std::int64_t sl = slack(static_cast<int>(e));
            if ((lu == EVEN && lv == FREE) || (lu == FREE && lv == EVEN)) d1 = std::min(d1, sl);
            if (lu == EVEN && lv == EVEN) {
                if (sl % 2 != 0) throw Error("internal: odd even-even slack");
                d2 = std::min(d2, sl / 2);
            }
        }
        for (int s : outers)
            if (s >= n_ && slots_[s].label == ODD) d3 = std::min(d3, slots_[s].z);
        std::int64_t delta = std::min({d1, d2, d3}); if (getenv("BL_DBG")) fprintf(stderr, "  dual d1=%lld d2=%lld d3=%lld\n", (long long)d1, (long long)d2, (long long)d3);
        if (delta >= kInf) throw NoPerfectMatching("no perfect matching exists");
        if (delta > 0) {
            for (int s : outers) {
                if (slots_[s].label == FREE) continue;
                std::int64_t dir = slots_[s].label == EVEN ? delta : -delta;
                std::vector<int> deep;
                collect_deep(s, deep);
                for (int v : deep) yhat_[v] += dir;
                if (s >= n_) slots_[s].z += dir;
            }
        }
        // expand odd blossoms whose dual reached zero (may cascade)
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s : alive_outermost()) {
                if (s >= n_ && slots_[s].label == ODD && slots_[s].z == 0) {
                    expand(s);
                    changed = true;
                }
            }
        }
        // rescan everything even from scratch
        queue_.clear();
        for (int s : alive_outermost())
            if (slots_[s].label == EVEN) collect_deep(s, queue_);
    }
};

}  // namespace

std::vector<int> blossom_min_weight_perfect_matching(int n, std::span<const Edge> edges,
                                                     std::span<const std::int64_t> weights) {
    if (edges.size() != weights.size()) throw MalformedInput("one weight per edge required");
    if (n == 0) return {};
    Matcher m(n, edges, weights);
    return m.solve();
}

std::vector<int> blossom_perfect_matching(int n, std::span<const Edge> edges) {
    std::vector<std::int64_t> zero(edges.size(), 0);
    return blossom_min_weight_perfect_matching(n, edges, zero);
}

}  // namespace cdc
