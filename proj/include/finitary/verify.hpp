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

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "finitary/arena.hpp"
#include "finitary/condition.hpp"
#include "finitary/memory.hpp"
#include "finitary/strategy.hpp"

namespace finitary {

// ---------------------------------------------------------------------------
// Strategy-restricted graphs
// ---------------------------------------------------------------------------

/// The one-player graph obtained by fixing one player's strategy: nodes are
/// (vertex, memory-state) pairs, the strategy's player keeps exactly the
/// prescribed edge, the opponent keeps all edges. Nodes where the strategy is
/// undefined have no outgoing edge; verify flags them when reachable.
struct StrategyGraph {
    std::size_t num_nodes = 0;
    int states = 1;
    std::vector<std::size_t> offsets{0};
    std::vector<std::size_t> targets;
    std::vector<std::size_t> arena_slot;  // per edge: originating arena edge slot
    std::vector<std::size_t> base;        // node -> base vertex
    std::vector<int> mem;                 // node -> strategy memory state
    std::vector<char> undefined;          // strategy player's node lacking a move

    std::size_t node_of(std::size_t v, int m) const { return v * std::size_t(states) + m; }
    std::span<const std::size_t> succ(std::size_t x) const {
        return {targets.data() + offsets[x], targets.data() + offsets[x + 1]};
    }
};

inline StrategyGraph restrict_to_strategy(const Arena& a, const Strategy& s) {
    s.check_moves_legal(a);
    StrategyGraph g;
    g.states = s.states();
    g.num_nodes = a.num_vertices() * std::size_t(g.states);
    g.base.resize(g.num_nodes);
    g.mem.resize(g.num_nodes);
    g.undefined.assign(g.num_nodes, 0);
    g.offsets.assign(1, 0);
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        for (int m = 0; m < g.states; ++m) {
            std::size_t x = g.node_of(v, m);
            g.base[x] = v;
            g.mem[x] = m;
            if (a.owner(v) == s.player) {
                std::size_t t = s.move_at(v, m);
                if (t == Strategy::npos) {
                    g.undefined[x] = 1;
                } else {
                    std::size_t slot = a.find_edge_slot(v, t);
                    g.targets.push_back(g.node_of(t, s.update(m, slot)));
                    g.arena_slot.push_back(slot);
                }
            } else {
                auto succ = a.successors(v);
                for (std::size_t k = 0; k < succ.size(); ++k) {
                    std::size_t slot = a.edge_slot(v, k);
                    g.targets.push_back(g.node_of(succ[k], s.update(m, slot)));
                    g.arena_slot.push_back(slot);
                }
            }
            g.offsets.push_back(g.targets.size());
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Verdicts and lassos
// ---------------------------------------------------------------------------

struct Verdict {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    bool holds = true;
    std::vector<std::size_t> stem;   // base vertices; last stem vertex precedes cycle[0]
    std::vector<std::size_t> cycle;  // base vertices; nonempty on failure
    std::size_t witness_pos = npos;  // position in stem.cycle^w
    long witness_value = -1;         // offending dist, or the odd color on the cycle
};

namespace detail {

// Small digraph scratch used by the play analyses. Nodes carry an arbitrary
// payload index (into whatever space the analysis works in).
struct Scratch {
    const StrategyGraph* g;
    VertexSet reach;  // reachable node set
};

inline VertexSet reachable(const StrategyGraph& g, const std::vector<std::size_t>& starts,
                           bool* hit_undefined = nullptr, std::size_t* undef_node = nullptr) {
    VertexSet seen(g.num_nodes);
    std::vector<std::size_t> stack;
    for (auto s : starts)
        if (!seen.test(s)) { seen.set(s); stack.push_back(s); }
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (g.undefined[x]) {
            if (hit_undefined) *hit_undefined = true;
            if (undef_node) *undef_node = x;
            continue;
        }
        for (auto t : g.succ(x))
            if (!seen.test(t)) { seen.set(t); stack.push_back(t); }
    }
    return seen;
}

/// BFS path within `allowed` from any start to `goal`; returns node sequence
/// including both endpoints. Empty if unreachable (goal==start gives {start}).
inline std::vector<std::size_t> bfs_path(const StrategyGraph& g, const VertexSet& allowed,
                                         const std::vector<std::size_t>& starts,
                                         std::size_t goal) {
    std::vector<std::size_t> parent(g.num_nodes, Verdict::npos);
    std::deque<std::size_t> q;
    VertexSet seen(g.num_nodes);
    for (auto s : starts)
        if (allowed.test(s) && !seen.test(s)) { seen.set(s); q.push_back(s); }
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        if (x == goal) {
            std::vector<std::size_t> path{x};
            while (parent[x] != Verdict::npos) {
                x = parent[x];
                path.push_back(x);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto t : g.succ(x))
            if (allowed.test(t) && !seen.test(t)) {
                seen.set(t);
                parent[t] = x;
                q.push_back(t);
            }
    }
    return {};
}

/// Shortest cycle through `x` within `allowed` (x -> ... -> x). Returns the
/// cycle as x, n1, ..., nk (without the closing x). Empty if none.
inline std::vector<std::size_t> cycle_through(const StrategyGraph& g, const VertexSet& allowed,
                                              std::size_t x) {
    std::vector<std::size_t> parent(g.num_nodes, Verdict::npos);
    std::deque<std::size_t> q;
    VertexSet seen(g.num_nodes);
    // start from successors of x
    for (auto t : g.succ(x)) {
        if (!allowed.test(t)) continue;
        if (t == x) return {x};  // self-loop
        if (!seen.test(t)) {
            seen.set(t);
            parent[t] = x;
            q.push_back(t);
        }
    }
    while (!q.empty()) {
        std::size_t y = q.front();
        q.pop_front();
        for (auto t : g.succ(y)) {
            if (t == x) {
                std::vector<std::size_t> cyc{y};
                while (parent[y] != x) {
                    y = parent[y];
                    cyc.push_back(y);
                }
                cyc.push_back(x);
                std::reverse(cyc.begin(), cyc.end());
                return cyc;
            }
            if (allowed.test(t) && !seen.test(t)) {
                seen.set(t);
                parent[t] = y;
                q.push_back(t);
            }
        }
    }
    return {};
}

/// Iterative Tarjan SCC over the nodes of `allowed`. Returns component id per
/// node (npos outside) and the component count.
inline std::size_t scc_decompose(const StrategyGraph& g, const VertexSet& allowed,
                                 std::vector<std::size_t>& comp) {
    comp.assign(g.num_nodes, Verdict::npos);
    std::vector<std::size_t> low(g.num_nodes, 0), idx(g.num_nodes, Verdict::npos), stk;
    std::vector<char> on(g.num_nodes, 0);
    std::size_t counter = 0, ncomp = 0;

    struct Frame {
        std::size_t node;
        std::size_t child;
    };
    std::vector<Frame> frames;
    for (std::size_t root = 0; root < g.num_nodes; ++root) {
        if (!allowed.test(root) || idx[root] != Verdict::npos) continue;
        frames.push_back({root, 0});
        idx[root] = low[root] = counter++;
        stk.push_back(root);
        on[root] = 1;
        while (!frames.empty()) {
            auto& f = frames.back();
            auto succ = g.succ(f.node);
            bool descended = false;
            while (f.child < succ.size()) {
                std::size_t t = succ[f.child++];
                if (!allowed.test(t)) continue;
                if (idx[t] == Verdict::npos) {
                    idx[t] = low[t] = counter++;
                    stk.push_back(t);
                    on[t] = 1;
                    frames.push_back({t, 0});
                    descended = true;
                    break;
                }
                if (on[t]) low[f.node] = std::min(low[f.node], idx[t]);
            }
            if (descended) continue;
            if (low[f.node] == idx[f.node]) {
                while (true) {
                    std::size_t w = stk.back();
                    stk.pop_back();
                    on[w] = 0;
                    comp[w] = ncomp;
                    if (w == f.node) break;
                }
                ++ncomp;
            }
            std::size_t done = f.node;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().node] = std::min(low[frames.back().node], low[done]);
        }
    }
    return ncomp;
}

/// Nodes lying on some cycle within `allowed`: members of a nontrivial SCC,
/// or self-loops.
inline VertexSet cycle_nodes(const StrategyGraph& g, const VertexSet& allowed) {
    std::vector<std::size_t> comp;
    scc_decompose(g, allowed, comp);
    std::vector<std::size_t> size(g.num_nodes, 0);
    std::size_t maxc = 0;
    for (std::size_t x = 0; x < g.num_nodes; ++x)
        if (comp[x] != Verdict::npos) { ++size[comp[x]]; maxc = std::max(maxc, comp[x] + 1); }
    VertexSet r(g.num_nodes);
    for (std::size_t x = 0; x < g.num_nodes; ++x) {
        if (comp[x] == Verdict::npos) continue;
        if (size[comp[x]] > 1) { r.set(x); continue; }
        for (auto t : g.succ(x))
            if (t == x && allowed.test(x)) { r.set(x); break; }
    }
    return r;
}

/// Backward reachability within `allowed` from `targets`.
inline VertexSet backward_within(const StrategyGraph& g, const VertexSet& allowed,
                                 const VertexSet& targets) {
    // build reverse adjacency lazily: one pass over edges
    VertexSet r = targets;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < g.num_nodes; ++x) {
            if (!allowed.test(x) || r.test(x)) continue;
            for (auto t : g.succ(x))
                if (allowed.test(t) && r.test(t)) {
                    r.set(x);
                    changed = true;
                    break;
                }
        }
    }
    return r;
}

/// Cut loops out of a node path (keeps it a valid path).
inline void shorten_path(std::vector<std::size_t>& path) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto it = std::find(out.begin(), out.end(), path[i]);
        if (it != out.end()) out.erase(it + 1, out.end());
        else out.push_back(path[i]);
    }
    path = std::move(out);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Play-existence analyses on a strategy graph
// ---------------------------------------------------------------------------

namespace detail {

struct Lasso {
    std::vector<std::size_t> stem;   // graph nodes, may be empty
    std::vector<std::size_t> cycle;  // graph nodes, nonempty when found
    bool found = false;
};

/// Lasso whose cycle stays within `cycle_allowed` and passes through some
/// node of `via`, reachable from starts through `reach`.
inline Lasso lasso_with_cycle_via(const StrategyGraph& g, const VertexSet& reach,
                                  const VertexSet& cycle_allowed, const VertexSet& via,
                                  const std::vector<std::size_t>& starts) {
    Lasso l;
    VertexSet candidates = cycle_allowed & reach & cycle_nodes(g, cycle_allowed & reach);
    for (std::size_t x = 0; x < g.num_nodes; ++x) {
        if (!candidates.test(x) || !via.test(x)) continue;
        auto cyc = cycle_through(g, cycle_allowed & reach, x);
        if (cyc.empty()) continue;
        auto stem = bfs_path(g, reach, starts, x);
        if (stem.empty()) continue;
        stem.pop_back();  // cycle starts at x
        shorten_path(stem);
        l.stem = std::move(stem);
        l.cycle = std::move(cyc);
        l.found = true;
        return l;
    }
    return l;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Distances and lasso evaluation
// ---------------------------------------------------------------------------

/// dist_k over a finite color sequence; -1 encodes "no witness inside the
/// prefix" (censored infinity, never a confirmed one).
inline std::vector<long> distance_sequence(const std::vector<int>& colors) {
    std::vector<long> d(colors.size(), -1);
    for (std::size_t k = 0; k < colors.size(); ++k)
        for (std::size_t j = k; j < colors.size(); ++j)
            if (colors[j] % 2 == 0 && colors[j] <= colors[k]) {
                d[k] = long(j - k);
                break;
            }
    return d;
}

/// dist over the infinite play stem.cycle^w, for positions within stem plus
/// one cycle period. -1 encodes a genuine infinity here.
inline std::vector<long> lasso_distances(const std::vector<int>& stem_colors,
                                         const std::vector<int>& cycle_colors) {
    std::size_t len = stem_colors.size() + cycle_colors.size();
    std::vector<int> unrolled;
    unrolled.reserve(stem_colors.size() + 3 * cycle_colors.size());
    unrolled.insert(unrolled.end(), stem_colors.begin(), stem_colors.end());
    for (int rep = 0; rep < 3; ++rep)
        unrolled.insert(unrolled.end(), cycle_colors.begin(), cycle_colors.end());
    std::vector<long> d(len, -1);
    for (std::size_t k = 0; k < len; ++k) {
        // any answer shows up within two further periods
        for (std::size_t j = k; j < unrolled.size(); ++j)
            if (unrolled[j] % 2 == 0 && unrolled[j] <= unrolled[k]) {
                d[k] = long(j - k);
                break;
            }
    }
    return d;
}

/// Decide stem.cycle^w against a condition. Colors are the play's colors;
/// set membership is passed for the set-based kinds.
inline bool lasso_satisfies(const Condition& cond, const std::vector<int>& stem_colors,
                            const std::vector<int>& cycle_colors,
                            const std::vector<char>& stem_in_set,
                            const std::vector<char>& cycle_in_set) {
    switch (cond.kind) {
        case ConditionKind::Safety: {
            for (auto b : stem_in_set)
                if (!b) return false;
            for (auto b : cycle_in_set)
                if (!b) return false;
            return true;
        }
        case ConditionKind::Buchi: {
            for (auto b : cycle_in_set)
                if (b) return true;
            return false;
        }
        case ConditionKind::CoBuchi: {
            for (auto b : cycle_in_set)
                if (b) return false;
            return true;
        }
        case ConditionKind::Parity: {
            int m = cycle_colors.empty() ? 0 : *std::min_element(cycle_colors.begin(), cycle_colors.end());
            return m % 2 == 0;
        }
        case ConditionKind::BndUniformBuchi:
        case ConditionKind::UniformBuchi:
        case ConditionKind::FinitaryBuchi: {
            // distances to the set: treat set membership as color 0 / 1
            std::vector<int> sc(stem_in_set.size()), cc(cycle_in_set.size());
            for (std::size_t i = 0; i < sc.size(); ++i) sc[i] = stem_in_set[i] ? 0 : 1;
            for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = cycle_in_set[i] ? 0 : 1;
            auto d = lasso_distances(sc, cc);
            if (cond.kind == ConditionKind::BndUniformBuchi) {
                for (auto x : d)
                    if (x < 0 || x > cond.bound) return false;
                return true;
            }
            // limsup: only cycle positions recur
            long lim = 0;
            for (std::size_t i = sc.size(); i < d.size(); ++i) {
                if (d[i] < 0) return false;
                lim = std::max(lim, d[i]);
            }
            if (cond.kind == ConditionKind::UniformBuchi) return lim <= cond.bound;
            return true;  // FinitaryBuchi: all cycle distances finite
        }
        case ConditionKind::BndParity:
        case ConditionKind::BndUniformParity: {
            auto d = lasso_distances(stem_colors, cycle_colors);
            for (auto x : d) {
                if (x < 0) return false;
                if (cond.kind == ConditionKind::BndUniformParity && x > cond.bound) return false;
            }
            return true;
        }
        case ConditionKind::FinitaryParity: {
            auto d = lasso_distances(stem_colors, cycle_colors);
            for (std::size_t i = stem_colors.size(); i < d.size(); ++i)
                if (d[i] < 0) return false;
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace detail {

/// Existence of a play violating the condition in the strategy graph
/// (analysis used for the strategy player's own claims). Returns a witness.
inline Lasso violating_play(const StrategyGraph& g, const Arena& a, const Condition& cond,
                            const VertexSet& reach, const std::vector<std::size_t>& starts);

/// Existence of a play satisfying the condition (refutes the opponent-side
/// claim "every play violates").
inline Lasso satisfying_play(const StrategyGraph& g, const Arena& a, const Condition& cond,
                             const VertexSet& reach, const std::vector<std::size_t>& starts);

/// Forward walk from a node, following the first available edge, until a node
/// repeats; appends the tail to `stem` and fills `cycle`.
inline void close_lasso_greedily(const StrategyGraph& g, const VertexSet& reach,
                                 std::vector<std::size_t>& stem, std::vector<std::size_t>& cycle) {
    std::vector<std::size_t> order;
    std::vector<long> seen_at(g.num_nodes, -1);
    std::size_t x = stem.back();
    stem.pop_back();
    while (seen_at[x] < 0) {
        seen_at[x] = long(order.size());
        order.push_back(x);
        auto s = g.succ(x);
        if (s.empty()) break;  // frontier node of a partial graph
        x = s[0];
        (void)reach;
    }
    std::size_t cut = seen_at[x] < 0 ? order.size() - 1 : std::size_t(seen_at[x]);
    stem.insert(stem.end(), order.begin(), order.begin() + cut);
    cycle.assign(order.begin() + cut, order.end());
}

/// Gap-annotated expansion: nodes (x, s) with s counting consecutive non-F
/// positions, capped at `cap`. Returns the expansion as a StrategyGraph whose
/// payload maps back through `orig`.
struct GapExpansion {
    StrategyGraph g;
    std::vector<std::size_t> orig;  // expansion node -> original node
    std::vector<int> gap;           // expansion node -> counter value
    std::vector<std::size_t> starts;
};

inline GapExpansion expand_with_gap(const StrategyGraph& g, const Arena& a, const VertexSet& f,
                                    int cap, const std::vector<std::size_t>& starts) {
    GapExpansion e;
    int states = cap + 1;
    e.g.states = 1;
    e.g.num_nodes = g.num_nodes * std::size_t(states);
    e.g.base.resize(e.g.num_nodes);
    e.g.mem.assign(e.g.num_nodes, 0);
    e.g.undefined.assign(e.g.num_nodes, 0);
    e.orig.resize(e.g.num_nodes);
    e.gap.resize(e.g.num_nodes);
    e.g.offsets.assign(1, 0);
    auto id = [&](std::size_t x, int s) { return x * std::size_t(states) + s; };
    for (std::size_t x = 0; x < g.num_nodes; ++x) {
        for (int s = 0; s < states; ++s) {
            std::size_t n = id(x, s);
            e.g.base[n] = g.base[x];
            e.orig[n] = x;
            e.gap[n] = s;
            e.g.undefined[n] = g.undefined[x];
            for (auto t : g.succ(x)) {
                int s2 = f.test(g.base[t]) ? 0 : (s < cap ? s + 1 : cap);
                e.g.targets.push_back(id(t, s2));
                e.g.arena_slot.push_back(0);
            }
            e.g.offsets.push_back(e.g.targets.size());
        }
    }
    (void)a;
    for (auto s0 : starts) e.starts.push_back(id(s0, f.test(g.base[s0]) ? 0 : (cap >= 1 ? 1 : 0)));
    return e;
}

/// Request-tracker expansion of a strategy graph (memory over the play's own
/// colors, genuine initial states). Node payload keeps the original node and
/// the tracked color.
struct TrackerExpansion {
    StrategyGraph g;
    std::vector<std::size_t> orig;
    std::vector<int> tracked;  // tracked color, d = all answered
    std::vector<std::size_t> starts;
    int d = 0;
};

inline TrackerExpansion expand_with_tracker(const StrategyGraph& g, const Arena& a,
                                            const std::vector<std::size_t>& starts) {
    TrackerExpansion e;
    int d = a.max_color();
    if (d % 2 != 0) ++d;  // lift: d+1 is never used by any vertex
    e.d = d;
    int states = d / 2 + 1;
    e.g.states = 1;
    e.g.num_nodes = g.num_nodes * std::size_t(states);
    e.g.base.resize(e.g.num_nodes);
    e.g.mem.assign(e.g.num_nodes, 0);
    e.g.undefined.assign(e.g.num_nodes, 0);
    e.orig.resize(e.g.num_nodes);
    e.tracked.resize(e.g.num_nodes);
    e.g.offsets.assign(1, 0);
    auto id = [&](std::size_t x, int s) { return x * std::size_t(states) + s; };
    for (std::size_t x = 0; x < g.num_nodes; ++x) {
        for (int s = 0; s < states; ++s) {
            std::size_t n = id(x, s);
            e.g.base[n] = g.base[x];
            e.orig[n] = x;
            e.tracked[n] = tracker_color_of(s, d);
            e.g.undefined[n] = g.undefined[x];
            int cur = e.tracked[n];
            for (auto t : g.succ(x)) {
                int c = a.color(g.base[t]);
                int nxt;
                if (c >= cur) nxt = cur;
                else if (c % 2 == 1) nxt = c;
                else nxt = d;
                e.g.targets.push_back(id(t, tracker_state_of(nxt, d)));
                e.g.arena_slot.push_back(0);
            }
            e.g.offsets.push_back(e.g.targets.size());
        }
    }
    for (auto s0 : starts) {
        int c = a.color(g.base[s0]);
        e.starts.push_back(id(s0, tracker_state_of(c % 2 == 1 ? c : d, d)));
    }
    return e;
}

inline Lasso project_lasso(const Lasso& l, const std::vector<std::size_t>& orig) {
    Lasso r;
    r.found = l.found;
    for (auto x : l.stem) r.stem.push_back(orig[x]);
    for (auto x : l.cycle) r.cycle.push_back(orig[x]);
    return r;
}

inline Lasso violating_play(const StrategyGraph& g, const Arena& a, const Condition& cond,
                            const VertexSet& reach, const std::vector<std::size_t>& starts) {
    Lasso l;
    const std::size_t n = g.num_nodes;
    auto base_set = [&](const VertexSet& s) {
        VertexSet r(n);
        for (std::size_t x = 0; x < n; ++x)
            if (s.test(g.base[x])) r.set(x);
        return r;
    };
    switch (cond.kind) {
        case ConditionKind::Safety: {
            VertexSet bad = reach - base_set(cond.set);
            for (std::size_t x = 0; x < n; ++x) {
                if (!bad.test(x)) continue;
                auto stem = bfs_path(g, reach, starts, x);
                shorten_path(stem);
                close_lasso_greedily(g, reach, stem, l.cycle);
                l.stem = std::move(stem);
                l.found = true;
                return l;
            }
            return l;
        }
        case ConditionKind::Buchi:
        case ConditionKind::FinitaryBuchi: {
            // violation: a reachable cycle avoiding F
            VertexSet avoid = reach - base_set(cond.set);
            return lasso_with_cycle_via(g, reach, avoid, avoid, starts);
        }
        case ConditionKind::CoBuchi: {
            VertexSet via = reach & base_set(cond.set);
            return lasso_with_cycle_via(g, reach, reach, via, starts);
        }
        case ConditionKind::Parity: {
            // reachable cycle with odd minimal color: per odd color o, look for
            // a cycle through an o-vertex inside the subgraph of colors >= o
            int d = a.max_color();
            for (int o = 1; o <= d; o += 2) {
                VertexSet high(n);
                VertexSet via(n);
                for (std::size_t x = 0; x < n; ++x) {
                    if (!reach.test(x)) continue;
                    if (a.color(g.base[x]) >= o) high.set(x);
                    if (a.color(g.base[x]) == o) via.set(x);
                }
                auto r = lasso_with_cycle_via(g, reach, high, via, starts);
                if (r.found) return r;
            }
            return l;
        }
        case ConditionKind::BndUniformBuchi: {
            int cap = int(cond.bound) + 1;
            auto e = expand_with_gap(g, a, cond.set, cap, starts);
            VertexSet er = reachable(e.g, e.starts);
            for (std::size_t x = 0; x < e.g.num_nodes; ++x) {
                if (!er.test(x) || e.gap[x] != cap) continue;
                auto stem = bfs_path(e.g, er, e.starts, x);
                shorten_path(stem);
                Lasso el;
                close_lasso_greedily(e.g, er, stem, el.cycle);
                el.stem = std::move(stem);
                el.found = true;
                return project_lasso(el, e.orig);
            }
            return l;
        }
        case ConditionKind::UniformBuchi: {
            int cap = int(cond.bound) + 1;
            auto e = expand_with_gap(g, a, cond.set, cap, starts);
            VertexSet er = reachable(e.g, e.starts);
            VertexSet via(e.g.num_nodes);
            for (std::size_t x = 0; x < e.g.num_nodes; ++x)
                if (er.test(x) && e.gap[x] == cap) via.set(x);
            auto r = lasso_with_cycle_via(e.g, er, er, via, e.starts);
            if (r.found) return project_lasso(r, e.orig);
            return l;
        }
        case ConditionKind::BndParity:
        case ConditionKind::BndUniformParity: {
            // a request with an answer-free escape of length > N (or infinite)
            int d = a.max_color();
            long bound = cond.kind == ConditionKind::BndParity
                             ? std::numeric_limits<long>::max()
                             : cond.bound;
            for (int o = 1; o <= d; o += 2) {
                VertexSet h(n);  // not (even and <= o)
                for (std::size_t x = 0; x < n; ++x) {
                    if (!reach.test(x)) continue;
                    int c = a.color(g.base[x]);
                    if (!(c % 2 == 0 && c <= o)) h.set(x);
                }
                // longest answer-free path from each node of h (edges), inf if
                // a cycle of h is reachable within h
                VertexSet k = cycle_nodes(g, h);
                VertexSet infset = backward_within(g, h, k);
                // DP over the DAG part
                std::vector<long> longest(n, -2);  // -2 unknown
                std::vector<std::size_t> stack;
                std::function<long(std::size_t)> lp = [&](std::size_t x) -> long {
                    if (infset.test(x)) return std::numeric_limits<long>::max();
                    if (longest[x] != -2) return longest[x];
                    longest[x] = 0;
                    long best = 0;
                    for (auto t : g.succ(x))
                        if (h.test(t)) {
                            long lt = lp(t);
                            if (lt == std::numeric_limits<long>::max()) return longest[x] = lt;
                            best = std::max(best, 1 + lt);
                        }
                    return longest[x] = best;
                };
                for (std::size_t x = 0; x < n; ++x) {
                    if (!reach.test(x) || a.color(g.base[x]) != o) continue;
                    bool violated = false;
                    if (bound == std::numeric_limits<long>::max()) {
                        violated = h.test(x) && infset.test(x);
                    } else {
                        if (!h.test(x)) continue;
                        // dist > N iff N further answer-free steps exist
                        long v = lp(x);
                        violated = v == std::numeric_limits<long>::max() || v >= bound;
                    }
                    if (!violated) continue;
                    // witness: stem to x, then along the escape, then close
                    auto stem = bfs_path(g, reach, starts, x);
                    shorten_path(stem);
                    if (infset.test(x)) {
                        // extend within h to a cycle node, then cycle within h
                        for (std::size_t y = 0; y < n; ++y) {
                            if (!k.test(y)) continue;
                            auto pth = bfs_path(g, h, {x}, y);
                            if (pth.empty()) continue;
                            auto cyc = cycle_through(g, h, y);
                            if (cyc.empty()) continue;
                            pth.pop_back();
                            shorten_path(pth);
                            // splice: stem..x..path..cycle
                            stem.pop_back();
                            stem.insert(stem.end(), pth.begin(), pth.end());
                            l.stem = std::move(stem);
                            l.cycle = std::move(cyc);
                            l.found = true;
                            return l;
                        }
                    } else {
                        // realize a long-enough answer-free path before closing,
                        // so the reported lasso replays the violation
                        std::size_t cur = x;
                        long remaining = std::min<long>(lp(x), bound);
                        while (remaining > 0) {
                            for (auto t : g.succ(cur))
                                if (h.test(t) && lp(t) >= remaining - 1) {
                                    stem.push_back(t);
                                    cur = t;
                                    break;
                                }
                            --remaining;
                        }
                        close_lasso_greedily(g, reach, stem, l.cycle);
                        l.stem = std::move(stem);
                        l.found = true;
                        return l;
                    }
                }
            }
            return l;
        }
        case ConditionKind::FinitaryParity: {
            // within one SCC: a request, an answer-free cycle reachable
            // answer-freely from it; the SCC provides the return path
            std::vector<std::size_t> comp;
            std::size_t ncomp = scc_decompose(g, reach, comp);
            int d = a.max_color();
            for (std::size_t ci = 0; ci < ncomp; ++ci) {
                VertexSet members(n);
                for (std::size_t x = 0; x < n; ++x)
                    if (comp[x] == ci) members.set(x);
                for (int o = 1; o <= d; o += 2) {
                    VertexSet h(n);
                    bool has_request = false;
                    for (std::size_t x = 0; x < n; ++x) {
                        if (!members.test(x)) continue;
                        int c = a.color(g.base[x]);
                        if (!(c % 2 == 0 && c <= o)) h.set(x);
                        if (c == o) has_request = true;
                    }
                    if (!has_request) continue;
                    VertexSet k = cycle_nodes(g, h);
                    if (k.empty()) continue;
                    VertexSet escapes = backward_within(g, h, k);
                    for (std::size_t x = 0; x < n; ++x) {
                        if (!members.test(x) || a.color(g.base[x]) != o || !escapes.test(x))
                            continue;
                        // witness lasso: reach x, go answer-free to the cycle,
                        // loop it once, return to x; cycle = that whole tour
                        for (std::size_t y = 0; y < n; ++y) {
                            if (!k.test(y)) continue;
                            auto pth = bfs_path(g, h, {x}, y);
                            if (pth.empty()) continue;
                            auto cyc = cycle_through(g, h, y);  // y, n1..nk
                            if (cyc.empty()) continue;
                            auto back = bfs_path(g, members, {y}, x);
                            if (back.empty()) continue;
                            auto stem = bfs_path(g, reach, starts, x);
                            stem.pop_back();
                            shorten_path(stem);
                            // tour: x ..pth.. y, n1..nk, then y ..back.. x
                            std::vector<std::size_t> tour(pth.begin(), pth.end());
                            tour.insert(tour.end(), cyc.begin() + 1, cyc.end());
                            if (y != x) {
                                tour.push_back(y);
                                tour.insert(tour.end(), back.begin() + 1, back.end() - 1);
                            }
                            l.stem = std::move(stem);
                            l.cycle = std::move(tour);
                            l.found = true;
                            return l;
                        }
                    }
                }
            }
            return l;
        }
    }
    return l;
}

inline Lasso satisfying_play(const StrategyGraph& g, const Arena& a, const Condition& cond,
                             const VertexSet& reach, const std::vector<std::size_t>& starts) {
    Lasso l;
    const std::size_t n = g.num_nodes;
    auto base_set = [&](const VertexSet& s) {
        VertexSet r(n);
        for (std::size_t x = 0; x < n; ++x)
            if (s.test(g.base[x])) r.set(x);
        return r;
    };
    switch (cond.kind) {
        case ConditionKind::Safety: {
            VertexSet inside = reach & base_set(cond.set);
            // restrict reachability to inside
            std::vector<std::size_t> in_starts;
            for (auto s : starts)
                if (inside.test(s)) in_starts.push_back(s);
            return lasso_with_cycle_via(g, inside, inside, inside, in_starts);
        }
        case ConditionKind::Buchi:
        case ConditionKind::FinitaryBuchi: {
            VertexSet via = reach & base_set(cond.set);
            return lasso_with_cycle_via(g, reach, reach, via, starts);
        }
        case ConditionKind::CoBuchi: {
            VertexSet avoid = reach - base_set(cond.set);
            return lasso_with_cycle_via(g, reach, avoid, avoid, starts);
        }
        case ConditionKind::Parity:
        case ConditionKind::FinitaryParity: {
            // reachable cycle with even minimal color
            int d = a.max_color();
            for (int e = 0; e <= d; e += 2) {
                VertexSet high(n), via(n);
                for (std::size_t x = 0; x < n; ++x) {
                    if (!reach.test(x)) continue;
                    if (a.color(g.base[x]) >= e) high.set(x);
                    if (a.color(g.base[x]) == e) via.set(x);
                }
                auto r = lasso_with_cycle_via(g, reach, high, via, starts);
                if (r.found) return r;
            }
            return l;
        }
        case ConditionKind::BndUniformBuchi: {
            int cap = int(cond.bound) + 1;
            auto e = expand_with_gap(g, a, cond.set, cap, starts);
            VertexSet er = reachable(e.g, e.starts);
            VertexSet ok(e.g.num_nodes);
            for (std::size_t x = 0; x < e.g.num_nodes; ++x)
                if (er.test(x) && e.gap[x] < cap) ok.set(x);
            std::vector<std::size_t> oks;
            for (auto s : e.starts)
                if (ok.test(s)) oks.push_back(s);
            // need: entire play within ok
            auto r = lasso_with_cycle_via(e.g, ok, ok, ok, oks);
            if (r.found) return project_lasso(r, e.orig);
            return l;
        }
        case ConditionKind::UniformBuchi: {
            int cap = int(cond.bound) + 1;
            auto e = expand_with_gap(g, a, cond.set, cap, starts);
            VertexSet er = reachable(e.g, e.starts);
            VertexSet ok(e.g.num_nodes);
            for (std::size_t x = 0; x < e.g.num_nodes; ++x)
                if (er.test(x) && e.gap[x] < cap) ok.set(x);
            auto r = lasso_with_cycle_via(e.g, er, ok, ok, e.starts);
            if (r.found) return project_lasso(r, e.orig);
            return l;
        }
        case ConditionKind::BndParity: {
            auto e = expand_with_tracker(g, a, starts);
            VertexSet er = reachable(e.g, e.starts);
            VertexSet via(e.g.num_nodes);
            for (std::size_t x = 0; x < e.g.num_nodes; ++x)
                if (er.test(x) && e.tracked[x] == e.d) via.set(x);
            auto r = lasso_with_cycle_via(e.g, er, er, via, e.starts);
            if (r.found) return project_lasso(r, e.orig);
            return l;
        }
        case ConditionKind::BndUniformParity:
            throw std::logic_error("satisfying-play analysis for bnd-uniform-parity not supported");
    }
    return l;
}

} // namespace detail

/// Verify a strategy against a condition: for an Eve strategy, decides
/// whether all plays from `from` consistent with it satisfy the condition;
/// for an Adam strategy, whether all such plays violate it. On a negative
/// verdict a counterexample lasso is returned.
inline Verdict verify(const Arena& a, const Strategy& s, const Condition& cond,
                      const VertexSet& from) {
    StrategyGraph g = restrict_to_strategy(a, s);
    std::vector<std::size_t> starts;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (from.test(v)) starts.push_back(g.node_of(v, s.initial_state(v)));

    bool undef = false;
    std::size_t undef_node = 0;
    VertexSet reach = detail::reachable(g, starts, &undef, &undef_node);
    if (undef)
        throw InvalidStrategy("strategy undefined at reachable vertex " +
                              std::to_string(g.base[undef_node]));

    detail::Lasso bad = s.player == Player::Eve
                            ? detail::violating_play(g, a, cond, reach, starts)
                            : detail::satisfying_play(g, a, cond, reach, starts);

    Verdict v;
    v.holds = !bad.found;
    if (bad.found) {
        for (auto x : bad.stem) v.stem.push_back(g.base[x]);
        for (auto x : bad.cycle) v.cycle.push_back(g.base[x]);
        // witness: evaluate distances / colors on the reported lasso
        std::vector<int> sc, cc;
        for (auto x : v.stem) sc.push_back(a.color(x));
        for (auto x : v.cycle) cc.push_back(a.color(x));
        if (cond.kind == ConditionKind::Parity || cond.kind == ConditionKind::FinitaryParity) {
            int m = cc.empty() ? 0 : *std::min_element(cc.begin(), cc.end());
            v.witness_value = m;
            for (std::size_t i = 0; i < cc.size(); ++i)
                if (cc[i] == m) { v.witness_pos = sc.size() + i; break; }
        } else {
            // distance-style witness, using set-distances for the Büchi kinds
            std::vector<int> s2 = sc, c2 = cc;
            if (cond.uses_set()) {
                s2.clear(); c2.clear();
                for (auto x : v.stem) s2.push_back(cond.set.test(x) ? 0 : 1);
                for (auto x : v.cycle) c2.push_back(cond.set.test(x) ? 0 : 1);
            }
            auto d = lasso_distances(s2, c2);
            long worst = -2;
            for (std::size_t i = 0; i < d.size(); ++i) {
                long val = d[i] < 0 ? std::numeric_limits<long>::max() : d[i];
                if (worst == -2 || val > worst) { worst = val; v.witness_pos = i; }
            }
            v.witness_value = worst == std::numeric_limits<long>::max() ? -1 : worst;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

/// Per-odd-color counters of the deterministic automaton for the finitary
/// conditions: a counter is incremented while its request is open and reset
/// when the request is answered.
struct CounterProfile {
    std::vector<int> odd_colors;
    std::vector<std::vector<long>> values;   // [counter][position]
    std::vector<std::vector<char>> actions;  // 'e' (none), 'i', 'r'; per step
};

struct PlayRecord {
    std::vector<std::size_t> vertices;
    std::vector<int> colors;
    std::vector<long> dist;        // -1 with censored[k] set: prefix-limited
    std::vector<char> censored;
    CounterProfile counters;
};

/// The unique play of given length under two strategies.
inline PlayRecord simulate(const Arena& a, const Strategy& eve, const Strategy& adam,
                           std::size_t start, std::size_t horizon) {
    if (eve.player != Player::Eve || adam.player != Player::Adam)
        throw InvalidStrategy("simulate needs one strategy per player");
    eve.check_moves_legal(a);
    adam.check_moves_legal(a);

    PlayRecord rec;
    std::size_t v = start;
    int me = eve.initial_state(start), ma = adam.initial_state(start);
    for (std::size_t step = 0;; ++step) {
        rec.vertices.push_back(v);
        rec.colors.push_back(a.color(v));
        if (step + 1 >= horizon) break;
        const Strategy& turn = a.owner(v) == Player::Eve ? eve : adam;
        std::size_t t = turn.move_at(v, a.owner(v) == Player::Eve ? me : ma);
        if (t == Strategy::npos)
            throw InvalidStrategy("strategy undefined at vertex " + std::to_string(v));
        std::size_t slot = a.find_edge_slot(v, t);
        me = eve.update(me, slot);
        ma = adam.update(ma, slot);
        v = t;
    }

    rec.dist = distance_sequence(rec.colors);
    rec.censored.resize(rec.dist.size());
    for (std::size_t k = 0; k < rec.dist.size(); ++k) rec.censored[k] = rec.dist[k] < 0;

    // counters
    int d = a.max_color();
    for (int o = 1; o <= d; o += 2) rec.counters.odd_colors.push_back(o);
    std::size_t nc = rec.counters.odd_colors.size();
    rec.counters.values.assign(nc, {});
    rec.counters.actions.assign(nc, {});
    std::vector<char> open(nc, 0);
    std::vector<long> val(nc, 0);
    auto idx_of = [&](int o) { return std::size_t((o - 1) / 2); };
    if (!rec.colors.empty() && rec.colors[0] % 2 == 1) open[idx_of(rec.colors[0])] = 1;
    for (std::size_t i = 0; i < nc; ++i) rec.counters.values[i].push_back(val[i]);
    for (std::size_t k = 1; k < rec.colors.size(); ++k) {
        int c = rec.colors[k];
        for (std::size_t i = 0; i < nc; ++i) {
            char act = 'e';
            if (open[i]) {
                if (c % 2 == 0 && c <= rec.counters.odd_colors[i]) {
                    act = 'r';
                    val[i] = 0;
                    open[i] = 0;
                } else {
                    act = 'i';
                    ++val[i];
                }
            }
            rec.counters.actions[i].push_back(act);
        }
        if (c % 2 == 1) open[idx_of(c)] = 1;
        for (std::size_t i = 0; i < nc; ++i) rec.counters.values[i].push_back(val[i]);
    }
    return rec;
}

} // namespace finitary
