/*
 * Copyright 2026 The finitary authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>

#include "finitary/condition.hpp"
#include "finitary/enumerate.hpp"
#include "finitary/memory.hpp"
#include "finitary/verify.hpp"

namespace finitary {

struct OracleBudget {
    std::size_t max_vertices = 64;
    int max_memory_states = 8;
    double max_strategy_space = 1e12;   // candidate-space cardinality guard
    std::size_t max_search_nodes = 50'000'000;  // backtracking step guard
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The oracle decides winners without any attractor or fixpoint machinery:
// it enumerates the protagonist's positional strategies over the relevant
// arena (the request-tracker product for the parity-like conditions, where
// positional strategies on the product are known to suffice) and checks each
// candidate by direct cycle analysis of the remaining one-player graph.
// Enumeration is lazy over the vertices the candidate actually reaches and
// prunes a candidate as soon as the decided part already contains a
// violating play (violations only persist as more moves get fixed).

namespace oracle_detail {

struct Graph {
    // adjacency over oracle nodes; colors/membership looked up via base[]
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::size_t> base;
    std::vector<Player> owner;
};

struct Analysis {
    const Arena* arena;
    Condition cond;
};

// --- generic helpers on a chosen-move subgraph -----------------------------

struct View {
    const Graph* g;
    // move[x] = chosen successor for Eve nodes (npos = undecided), Adam free
    const std::vector<std::size_t>* move;

    template <typename Fn>
    void each_succ(std::size_t x, Fn fn) const {
        if (g->owner[x] == Player::Eve) {
            std::size_t m = (*move)[x];
            if (m != Strategy::npos) fn(m);
        } else {
            for (auto t : g->succ[x]) fn(t);
        }
    }
};

inline std::vector<char> reachable(const View& v, std::size_t start) {
    std::vector<char> seen(v.g->succ.size(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        v.each_succ(x, [&](std::size_t t) {
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        });
    }
    return seen;
}

/// Does a cycle within `allowed` exist (restricted to reachable part)?
/// Simple iterative coloring DFS.
inline bool has_cycle(const View& v, const std::vector<char>& allowed) {
    std::size_t n = v.g->succ.size();
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    for (std::size_t r = 0; r < n; ++r) {
        if (!allowed[r] || color[r]) continue;
        std::vector<std::pair<std::size_t, std::size_t>> st{{r, 0}};
        color[r] = 1;
        while (!st.empty()) {
            auto& [x, i] = st.back();
            std::vector<std::size_t> succs;
            v.each_succ(x, [&](std::size_t t) { succs.push_back(t); });
            bool desc = false;
            while (i < succs.size()) {
                std::size_t t = succs[i++];
                if (!allowed[t]) continue;
                if (color[t] == 1) return true;
                if (color[t] == 0) {
                    color[t] = 1;
                    st.push_back({t, 0});
                    desc = true;
                    break;
                }
            }
            if (!desc) {
                color[x] = 2;
                st.pop_back();
            }
        }
    }
    return false;
}

/// Nodes on some cycle within `allowed`: repeated peeling of sink-free core.
inline std::vector<char> cycle_core(const View& v, const std::vector<char>& allowed) {
    std::size_t n = v.g->succ.size();
    std::vector<char> core = allowed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (!core[x]) continue;
            bool out = false, in = false;
            v.each_succ(x, [&](std::size_t t) { out |= bool(core[t]); });
            for (std::size_t y = 0; y < n && !in; ++y)
                if (core[y])
                    v.each_succ(y, [&](std::size_t t) { in |= (t == x); });
            if (!out || !in) {
                core[x] = 0;
                changed = true;
            }
        }
    }
    // core = nodes with in+out degree in the mutual part; a node is on a
    // cycle iff it can reach itself inside core
    std::vector<char> on(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (!core[x]) continue;
        // BFS from successors of x within core back to x
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack;
        v.each_succ(x, [&](std::size_t t) {
            if (core[t] && !seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        });
        while (!stack.empty() && !on[x]) {
            std::size_t y = stack.back();
            stack.pop_back();
            if (y == x) {
                on[x] = 1;
                break;
            }
            v.each_succ(y, [&](std::size_t t) {
                if (core[t] && !seen[t]) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
            });
        }
    }
    return on;
}

inline std::vector<char> backward(const View& v, const std::vector<char>& allowed,
                                  const std::vector<char>& targets) {
    std::size_t n = v.g->succ.size();
    std::vector<char> r = targets;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (!allowed[x] || r[x]) continue;
            bool hit = false;
            v.each_succ(x, [&](std::size_t t) { hit |= (allowed[t] && r[t]); });
            if (hit) {
                r[x] = 1;
                changed = true;
            }
        }
    }
    return r;
}

/// Violating-play existence in the (partial) strategy view from `start`.
/// Plays through undecided Eve vertices are not considered, so a positive
/// answer remains valid for every completion of the candidate.
inline bool violating_play_exists(const Analysis& an, const View& v, std::size_t start) {
    const Arena& a = *an.arena;
    const Graph& g = *v.g;
    std::size_t n = g.succ.size();
    std::vector<char> reach = reachable(v, start);

    auto color_of = [&](std::size_t x) { return a.color(g.base[x]); };
    auto in_set = [&](std::size_t x) { return an.cond.set.test(g.base[x]); };

    switch (an.cond.kind) {
        case ConditionKind::Safety: {
            for (std::size_t x = 0; x < n; ++x)
                if (reach[x] && !in_set(x)) return true;
            return false;
        }
        case ConditionKind::Buchi:
        case ConditionKind::FinitaryBuchi: {
            std::vector<char> avoid(n, 0);
            for (std::size_t x = 0; x < n; ++x) avoid[x] = reach[x] && !in_set(x);
            return has_cycle(v, avoid);
        }
        case ConditionKind::CoBuchi: {
            std::vector<char> all(reach);
            auto on = cycle_core(v, all);
            for (std::size_t x = 0; x < n; ++x)
                if (on[x] && in_set(x)) return true;
            return false;
        }
        case ConditionKind::Parity: {
            for (int o = 1; o <= a.max_color(); o += 2) {
                std::vector<char> high(n, 0);
                for (std::size_t x = 0; x < n; ++x)
                    high[x] = reach[x] && color_of(x) >= o;
                auto on = cycle_core(v, high);
                for (std::size_t x = 0; x < n; ++x)
                    if (on[x] && color_of(x) == o) return true;
            }
            return false;
        }
        case ConditionKind::BndUniformBuchi:
        case ConditionKind::UniformBuchi: {
            // gap annotation, cap N+1; value N+1 marks dist > N
            int cap = int(an.cond.bound) + 1;
            std::size_t m = n * std::size_t(cap + 1);
            std::vector<char> seen(m, 0);
            std::vector<std::size_t> stack;
            auto enc = [&](std::size_t x, int s) { return x * std::size_t(cap + 1) + s; };
            int s0 = in_set(start) ? 0 : std::min(1, cap);
            seen[enc(start, s0)] = 1;
            stack.push_back(enc(start, s0));
            std::vector<std::size_t> hits;
            while (!stack.empty()) {
                std::size_t e = stack.back();
                stack.pop_back();
                std::size_t x = e / std::size_t(cap + 1);
                int s = int(e % std::size_t(cap + 1));
                if (s == cap) {
                    if (an.cond.kind == ConditionKind::BndUniformBuchi) return true;
                    hits.push_back(e);
                }
                v.each_succ(x, [&](std::size_t t) {
                    int s2 = in_set(t) ? 0 : std::min(s + 1, cap);
                    if (!seen[enc(t, s2)]) {
                        seen[enc(t, s2)] = 1;
                        stack.push_back(enc(t, s2));
                    }
                });
            }
            if (an.cond.kind == ConditionKind::BndUniformBuchi) return false;
            if (hits.empty()) return false;
            // uniform: some annotated cycle must revisit value cap
            // build annotated view as an explicit graph and look for a cycle
            // through a hit node
            Graph ag;
            ag.succ.assign(m, {});
            ag.base.assign(m, 0);
            ag.owner.assign(m, Player::Adam);
            for (std::size_t e = 0; e < m; ++e) {
                if (!seen[e]) continue;
                std::size_t x = e / std::size_t(cap + 1);
                int s = int(e % std::size_t(cap + 1));
                v.each_succ(x, [&](std::size_t t) {
                    int s2 = in_set(t) ? 0 : std::min(s + 1, cap);
                    ag.succ[e].push_back(enc(t, s2));
                });
            }
            std::vector<std::size_t> nomove;
            View av{&ag, &nomove};
            std::vector<char> allowed(m, 0);
            for (std::size_t e = 0; e < m; ++e) allowed[e] = seen[e];
            auto on = cycle_core(av, allowed);
            for (auto e : hits)
                if (on[e]) return true;
            return false;
        }
        case ConditionKind::BndParity:
        case ConditionKind::BndUniformParity: {
            long bound = an.cond.kind == ConditionKind::BndParity
                             ? std::numeric_limits<long>::max()
                             : an.cond.bound;
            for (int o = 1; o <= a.max_color(); o += 2) {
                std::vector<char> h(n, 0);
                for (std::size_t x = 0; x < n; ++x) {
                    int c = color_of(x);
                    h[x] = reach[x] && !(c % 2 == 0 && c <= o);
                }
                auto on = cycle_core(v, h);
                auto inf = backward(v, h, on);
                if (bound == std::numeric_limits<long>::max()) {
                    for (std::size_t x = 0; x < n; ++x)
                        if (reach[x] && color_of(x) == o && inf[x]) return true;
                } else {
                    // longest h-path (edges) from each node, inf via `inf`
                    std::vector<long> lp(n, -2);
                    std::function<long(std::size_t)> go = [&](std::size_t x) -> long {
                        if (inf[x]) return std::numeric_limits<long>::max();
                        if (lp[x] != -2) return lp[x];
                        lp[x] = 0;
                        long best = 0;
                        v.each_succ(x, [&](std::size_t t) {
                            if (!h[t] || best == std::numeric_limits<long>::max()) return;
                            long lt = go(t);
                            if (lt == std::numeric_limits<long>::max())
                                best = lt;
                            else
                                best = std::max(best, 1 + lt);
                        });
                        return lp[x] = best;
                    };
                    for (std::size_t x = 0; x < n; ++x) {
                        if (!reach[x] || color_of(x) != o || !h[x]) continue;
                        // dist > N iff N further answer-free steps exist
                        long val = go(x);
                        if (val == std::numeric_limits<long>::max() || val >= bound) return true;
                    }
                }
            }
            return false;
        }
        case ConditionKind::FinitaryParity: {
            // within a strongly-connected part: a request with an answer-free
            // escape to an answer-free cycle (the return is free inside)
            for (int o = 1; o <= a.max_color(); o += 2) {
                std::vector<char> h(n, 0);
                for (std::size_t x = 0; x < n; ++x) {
                    int c = color_of(x);
                    h[x] = reach[x] && !(c % 2 == 0 && c <= o);
                }
                auto on = cycle_core(v, h);
                auto esc = backward(v, h, on);
                for (std::size_t x = 0; x < n; ++x) {
                    if (!reach[x] || color_of(x) != o || !esc[x]) continue;
                    // the escape cycle must reach x back (same SCC)
                    std::vector<char> fromx = [&] {
                        std::vector<char> seen(n, 0);
                        std::vector<std::size_t> stack{x};
                        seen[x] = 1;
                        while (!stack.empty()) {
                            std::size_t y = stack.back();
                            stack.pop_back();
                            v.each_succ(y, [&](std::size_t t) {
                                if (reach[t] && !seen[t]) {
                                    seen[t] = 1;
                                    stack.push_back(t);
                                }
                            });
                        }
                        return seen;
                    }();
                    // answer-free reachable cycle nodes from x that can return
                    std::vector<char> hx(n, 0);
                    for (std::size_t y = 0; y < n; ++y) hx[y] = h[y] && fromx[y];
                    auto onx = cycle_core(v, hx);
                    // restrict to escapes actually reachable from x within h
                    std::vector<char> seenh(n, 0);
                    std::vector<std::size_t> stack;
                    if (h[x]) {
                        seenh[x] = 1;
                        stack.push_back(x);
                    }
                    while (!stack.empty()) {
                        std::size_t y = stack.back();
                        stack.pop_back();
                        v.each_succ(y, [&](std::size_t t) {
                            if (h[t] && !seenh[t]) {
                                seenh[t] = 1;
                                stack.push_back(t);
                            }
                        });
                    }
                    for (std::size_t y = 0; y < n; ++y) {
                        if (!onx[y] || !seenh[y]) continue;
                        // can y return to x?
                        std::vector<char> seen2(n, 0);
                        std::vector<std::size_t> st2{y};
                        seen2[y] = 1;
                        bool ret = (y == x);
                        while (!st2.empty() && !ret) {
                            std::size_t z = st2.back();
                            st2.pop_back();
                            v.each_succ(z, [&](std::size_t t) {
                                if (t == x) ret = true;
                                if (reach[t] && !seen2[t]) {
                                    seen2[t] = 1;
                                    st2.push_back(t);
                                }
                            });
                        }
                        if (ret) return true;
                    }
                }
            }
            return false;
        }
    }
    return false;
}

} // namespace oracle_detail

/// Brute-force winning region of Eve, by lazy exhaustive search over her
/// positional strategies on the relevant arena. Never uses the fixpoint
/// solvers.
inline VertexSet oracle_region(const Arena& a, const Condition& cond,
                               const OracleBudget& budget = {}) {
    if (a.num_vertices() > budget.max_vertices)
        throw BudgetExceeded("arena exceeds the oracle vertex budget");
    if (cond.kind == ConditionKind::BndUniformParity)
        throw std::invalid_argument("oracle_region does not cover bnd-uniform-parity");

    // choose the candidate arena: the tracker product for the parity-like
    // conditions (positional strategies there are known to suffice), the
    // base arena otherwise
    oracle_detail::Graph g;
    std::vector<std::size_t> start_of(a.num_vertices());
    bool parity_like =
        cond.kind == ConditionKind::BndParity || cond.kind == ConditionKind::FinitaryParity;
    if (parity_like) {
        int d = a.max_color() % 2 == 0 ? a.max_color() : a.max_color() + 1;
        MemoryStructure tracker = request_tracker_memory(a, d);
        ProductArena p = product(a, tracker);
        g.succ.assign(p.arena.num_vertices(), {});
        g.base.resize(p.arena.num_vertices());
        g.owner.resize(p.arena.num_vertices());
        for (std::size_t x = 0; x < p.arena.num_vertices(); ++x) {
            g.base[x] = p.to_base[x];
            g.owner[x] = p.arena.owner(x);
            for (auto t : p.arena.successors(x)) g.succ[x].push_back(t);
        }
        for (std::size_t v = 0; v < a.num_vertices(); ++v)
            start_of[v] = p.initial_of(v, tracker);
    } else {
        g.succ.assign(a.num_vertices(), {});
        g.base.resize(a.num_vertices());
        g.owner.resize(a.num_vertices());
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            g.base[v] = v;
            g.owner[v] = a.owner(v);
            for (auto t : a.successors(v)) g.succ[v].push_back(t);
            start_of[v] = v;
        }
    }

    oracle_detail::Analysis an{&a, cond};
    std::size_t steps = 0;

    // space guard: product of Eve outdegrees over the candidate arena
    double space = 1;
    for (std::size_t x = 0; x < g.succ.size(); ++x)
        if (g.owner[x] == Player::Eve) space *= double(g.succ[x].size());
    if (space > budget.max_strategy_space)
        throw BudgetExceeded("positional strategy space exceeds the oracle budget");

    VertexSet region(a.num_vertices());
    std::vector<std::size_t> move(g.succ.size(), Strategy::npos);

    std::function<bool(std::size_t)> wins = [&](std::size_t start) -> bool {
        if (++steps > budget.max_search_nodes)
            throw BudgetExceeded("oracle search exceeded its node budget");
        oracle_detail::View view{&g, &move};
        if (oracle_detail::violating_play_exists(an, view, start)) return false;
        // find an undecided Eve vertex that the candidate reaches
        auto reach = oracle_detail::reachable(view, start);
        std::size_t open = Strategy::npos;
        for (std::size_t x = 0; x < g.succ.size(); ++x)
            if (reach[x] && g.owner[x] == Player::Eve && move[x] == Strategy::npos) {
                open = x;
                break;
            }
        if (open == Strategy::npos) return true;  // decided and violation-free
        for (auto t : g.succ[open]) {
            move[open] = t;
            if (wins(start)) {
                move[open] = Strategy::npos;
                return true;
            }
        }
        move[open] = Strategy::npos;
        return false;
    };

    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        std::fill(move.begin(), move.end(), Strategy::npos);
        if (wins(start_of[v])) region.set(v);
    }
    return region;
}

// ---------------------------------------------------------------------------
// Minimal memory search
// ---------------------------------------------------------------------------

namespace oracle_detail {

struct MachineSearch {
    const Arena* a;
    Player player;
    Condition cond;
    VertexSet from;
    int states;
    const OracleBudget* budget;
    std::size_t steps = 0;

    // tables under construction
    std::vector<std::size_t> nu;  // (v * states + m) -> successor (npos unset)
    std::vector<int> mu;          // (m * edges + slot) -> state (-1 unset)

    // Updates along forced corridors are normalized to the identity: any
    // composed state change can be concentrated on the corridor's last edge,
    // so the behavior space is unchanged while the table space shrinks.
    std::vector<char> identity_slot;

    void init_tables() {
        nu.assign(a->num_vertices() * std::size_t(states), Strategy::npos);
        mu.assign(std::size_t(states) * a->num_edges(), -1);
        identity_slot.assign(a->num_edges(), 0);
        for (std::size_t v = 0; v < a->num_vertices(); ++v) {
            if (a->outdegree(v) != 1) continue;
            std::size_t w = a->successors(v)[0];
            if (a->outdegree(w) == 1) identity_slot[a->edge_slot(v, 0)] = 1;
        }
        for (int m = 0; m < states; ++m)
            for (std::size_t e = 0; e < a->num_edges(); ++e)
                if (identity_slot[e]) mu[std::size_t(m) * a->num_edges() + e] = m;
    }

    Strategy materialize() const {
        MemoryStructure mem;
        mem.states = states;
        mem.num_edges = a->num_edges();
        mem.initial.assign(a->num_vertices(), 0);
        mem.update.assign(std::size_t(states) * mem.num_edges, 0);
        for (int m = 0; m < states; ++m)
            for (std::size_t e = 0; e < mem.num_edges; ++e)
                mem.update[std::size_t(m) * mem.num_edges + e] =
                    mu[std::size_t(m) * mem.num_edges + e] < 0
                        ? 0
                        : mu[std::size_t(m) * mem.num_edges + e];
        Strategy s = Strategy::make_finite_memory(player, a->num_vertices(), mem);
        for (std::size_t v = 0; v < a->num_vertices(); ++v)
            for (int m = 0; m < states; ++m) {
                std::size_t t = nu[v * std::size_t(states) + m];
                if (t == Strategy::npos && a->owner(v) == player)
                    t = a->successors(v)[0];  // unreachable entry, any move
                if (a->owner(v) == player) s.set_move(v, m, t);
            }
        return s;
    }

    /// The partial restricted graph: nodes (v, m); edges only where the
    /// needed table entries are decided. Undefined nodes stop exploration.
    StrategyGraph partial_graph() const {
        StrategyGraph gr;
        gr.states = states;
        gr.num_nodes = a->num_vertices() * std::size_t(states);
        gr.base.resize(gr.num_nodes);
        gr.mem.resize(gr.num_nodes);
        gr.undefined.assign(gr.num_nodes, 0);
        gr.offsets.assign(1, 0);
        for (std::size_t v = 0; v < a->num_vertices(); ++v) {
            for (int m = 0; m < states; ++m) {
                std::size_t x = v * std::size_t(states) + m;
                gr.base[x] = v;
                gr.mem[x] = m;
                if (a->owner(v) == player) {
                    std::size_t t = nu[x];
                    if (t == Strategy::npos) {
                        gr.undefined[x] = 1;
                    } else {
                        std::size_t slot = a->find_edge_slot(v, t);
                        int m2 = mu[std::size_t(m) * a->num_edges() + slot];
                        if (m2 < 0) {
                            gr.undefined[x] = 1;
                        } else {
                            gr.targets.push_back(t * std::size_t(states) + m2);
                            gr.arena_slot.push_back(slot);
                        }
                    }
                } else {
                    auto succ = a->successors(v);
                    bool all = true;
                    for (std::size_t k = 0; k < succ.size(); ++k) {
                        std::size_t slot = a->edge_slot(v, k);
                        if (mu[std::size_t(m) * a->num_edges() + slot] < 0) all = false;
                    }
                    if (!all) {
                        gr.undefined[x] = 1;  // only expand fully decided rows
                    } else {
                        for (std::size_t k = 0; k < succ.size(); ++k) {
                            std::size_t slot = a->edge_slot(v, k);
                            int m2 = mu[std::size_t(m) * a->num_edges() + slot];
                            gr.targets.push_back(succ[k] * std::size_t(states) + m2);
                            gr.arena_slot.push_back(slot);
                        }
                    }
                }
                gr.offsets.push_back(gr.targets.size());
            }
        }
        return gr;
    }

    /// Refuted: the decided part already contains a play that defeats the
    /// claim (satisfies the condition for an Adam machine; violates it for
    /// an Eve machine).
    bool refuted(const StrategyGraph& gr, const std::vector<std::size_t>& starts) const {
        VertexSet reach = detail::reachable(gr, starts);
        detail::Lasso l = player == Player::Eve
                              ? detail::violating_play(gr, *a, cond, reach, starts)
                              : detail::satisfying_play(gr, *a, cond, reach, starts);
        return l.found;
    }

    std::optional<Strategy> search() {
        if (++steps > budget->max_search_nodes)
            throw BudgetExceeded("memory search exceeded its node budget");
        StrategyGraph gr = partial_graph();
        std::vector<std::size_t> starts;
        for (std::size_t v = 0; v < a->num_vertices(); ++v)
            if (from.test(v)) starts.push_back(gr.node_of(v, 0));
        if (refuted(gr, starts)) return std::nullopt;

        // first undecided entry in play order: breadth-first from the starts
        std::size_t open = Strategy::npos;
        {
            std::deque<std::size_t> q;
            VertexSet seen(gr.num_nodes);
            for (auto s : starts)
                if (!seen.test(s)) { seen.set(s); q.push_back(s); }
            while (!q.empty() && open == Strategy::npos) {
                std::size_t x = q.front();
                q.pop_front();
                if (gr.undefined[x]) { open = x; break; }
                for (auto t : gr.succ(x))
                    if (!seen.test(t)) { seen.set(t); q.push_back(t); }
            }
        }
        if (open == Strategy::npos) {
            Strategy s = materialize();
            if (verify(*a, s, cond, from).holds) return s;
            return std::nullopt;
        }

        std::size_t v = gr.base[open];
        int m = gr.mem[open];
        if (a->owner(v) == player && nu[open] == Strategy::npos) {
            for (auto t : a->successors(v)) {
                nu[open] = t;
                auto r = search();
                if (r) {
                    nu[open] = Strategy::npos;
                    return r;
                }
            }
            nu[open] = Strategy::npos;
            return std::nullopt;
        }
        // otherwise an update entry is missing: branch canonically on the
        // first unset slot of this row
        auto succ = a->successors(v);
        std::size_t slot = Strategy::npos;
        if (a->owner(v) == player) {
            slot = a->find_edge_slot(v, nu[open]);
        } else {
            for (std::size_t k = 0; k < succ.size(); ++k)
                if (mu[std::size_t(m) * a->num_edges() + a->edge_slot(v, k)] < 0) {
                    slot = a->edge_slot(v, k);
                    break;
                }
        }
        int max_used = 0;
        for (std::size_t e = 0; e < a->num_edges(); ++e)
            if (!identity_slot[e])
                for (int mm = 0; mm < states; ++mm)
                    max_used = std::max(max_used, mu[std::size_t(mm) * a->num_edges() + e]);
        int limit = std::min(states - 1, max_used + 1);  // canonical state order
        for (int m2 = 0; m2 <= limit; ++m2) {
            mu[std::size_t(m) * a->num_edges() + slot] = m2;
            auto r = search();
            if (r) {
                mu[std::size_t(m) * a->num_edges() + slot] = -1;
                return r;
            }
        }
        mu[std::size_t(m) * a->num_edges() + slot] = -1;
        return std::nullopt;
    }
};

} // namespace oracle_detail

/// Least memory size <= cap admitting a winning strategy for the player from
/// `from`, judged by verify; nullopt if none exists up to the cap. The
/// search over machines is exhaustive up to behavioral equivalence: tables
/// are filled lazily along reached states only (unreached entries cannot
/// influence any play) and update targets are introduced in canonical order.
struct MinMemoryResult {
    int states;
    Strategy strategy;
};

inline std::optional<MinMemoryResult> oracle_min_memory(const Arena& a, Player player,
                                                        const Condition& cond,
                                                        const VertexSet& from, int cap,
                                                        const OracleBudget& budget = {}) {
    if (cap > budget.max_memory_states)
        throw BudgetExceeded("memory cap exceeds the oracle budget");
    for (int m = 1; m <= cap; ++m) {
        oracle_detail::MachineSearch ms;
        ms.a = &a;
        ms.player = player;
        ms.cond = cond;
        ms.from = from;
        ms.states = m;
        ms.budget = &budget;
        ms.init_tables();
        auto r = ms.search();
        if (r) return MinMemoryResult{m, std::move(*r)};
    }
    return std::nullopt;
}

} // namespace finitary
