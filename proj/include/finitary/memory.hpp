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

#include <stdexcept>
#include <vector>

#include "finitary/arena.hpp"

namespace finitary {

struct OddMaxColor : std::runtime_error {
    OddMaxColor() : std::runtime_error("request tracker needs an even maximal color; lift first") {}
};

/// A finite automaton reading the edges of one arena. The initial state may
/// depend on the start vertex; the update function is total over M x E and is
/// keyed by edge slot (parallel edges share their value by construction).
struct MemoryStructure {
    int states = 1;
    std::vector<int> initial;  // per start vertex
    std::vector<int> update;   // [m * num_edges + slot]
    std::size_t num_edges = 0;

    static MemoryStructure trivial(const Arena& a) {
        MemoryStructure m;
        m.states = 1;
        m.initial.assign(a.num_vertices(), 0);
        m.update.assign(a.num_edges(), 0);
        m.num_edges = a.num_edges();
        return m;
    }

    int next(int m, std::size_t slot) const { return update[std::size_t(m) * num_edges + slot]; }
    int& at(int m, std::size_t slot) { return update[std::size_t(m) * num_edges + slot]; }
};

/// Counts steps since the last visit to F, saturating at N:
///   mu(i,(v,v')) = 0 when the edge touches F, i+1 while i < N, and N after.
/// Initial state 0 for every start vertex.
inline MemoryStructure step_counter_memory(const Arena& a, const VertexSet& f, int n) {
    MemoryStructure m;
    m.states = n + 1;
    m.initial.assign(a.num_vertices(), 0);
    m.num_edges = a.num_edges();
    m.update.assign(std::size_t(m.states) * m.num_edges, 0);
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        auto succ = a.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            std::size_t slot = a.edge_slot(v, k);
            bool touches_f = f.test(v) || f.test(succ[k]);
            for (int i = 0; i <= n; ++i)
                m.at(i, slot) = touches_f ? 0 : (i < n ? i + 1 : n);
        }
    }
    return m;
}

/// Counts consecutive non-F positions (the current one included), saturating
/// at cap. Value cap is reached exactly when some position had dist > cap-1,
/// which is what the verification product needs.
inline MemoryStructure gap_counter_memory(const Arena& a, const VertexSet& f, int cap) {
    MemoryStructure m;
    m.states = cap + 1;
    m.initial.resize(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        m.initial[v] = f.test(v) ? 0 : (cap >= 1 ? 1 : 0);
    m.num_edges = a.num_edges();
    m.update.assign(std::size_t(m.states) * m.num_edges, 0);
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        auto succ = a.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            std::size_t slot = a.edge_slot(v, k);
            bool target_f = f.test(succ[k]);
            for (int i = 0; i <= cap; ++i)
                m.at(i, slot) = target_f ? 0 : (i < cap ? i + 1 : cap);
        }
    }
    return m;
}

/// Index of the tracker state for color c in M = {1,3,...,d-1} u {d}:
/// odd colors first in increasing order, then d ("no pending request").
inline int tracker_state_of(int c, int d) {
    if (c == d) return d / 2;      // all requests answered
    return (c - 1) / 2;            // pending request with most important color c
}
inline int tracker_color_of(int state, int d) {
    if (state == d / 2) return d;
    return 2 * state + 1;
}

/// Keeps track of the most important pending request. Requires d even; the
/// state is the smallest pending odd color, or d when everything is answered.
///   mu(m,(v,v')) = m        if c(v') >= m
///                  c(v')    if c(v') < m and odd
///                  d        if c(v') < m and even
/// Initial state c(v0) when odd, d otherwise.
inline MemoryStructure request_tracker_memory(const Arena& a, int d) {
    if (d % 2 != 0) throw OddMaxColor();
    MemoryStructure m;
    m.states = d / 2 + 1;  // one per odd color, plus d
    m.initial.resize(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        int c = a.color(v);
        m.initial[v] = tracker_state_of(c % 2 == 1 ? c : d, d);
    }
    m.num_edges = a.num_edges();
    m.update.assign(std::size_t(m.states) * m.num_edges, 0);
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        auto succ = a.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            std::size_t slot = a.edge_slot(v, k);
            int c = a.color(succ[k]);
            for (int s = 0; s < m.states; ++s) {
                int cur = tracker_color_of(s, d);
                int nxt;
                if (c >= cur) nxt = cur;
                else if (c % 2 == 1) nxt = c;
                else nxt = d;
                m.at(s, slot) = tracker_state_of(nxt, d);
            }
        }
    }
    return m;
}

/// The expanded arena A x M. Product vertex (v,m) has index v*|M|+m; the
/// owner and color of (v,m) are those of v; the edge ((v,m),(v',m')) exists
/// iff (v,v') is an edge and mu(m,(v,v')) = m'. All |V|*|M| vertices are kept
/// unless pruned to the part reachable from the initial pairs.
struct ProductArena {
    Arena arena;
    int mem_states = 1;
    std::vector<std::size_t> to_base;   // product vertex -> base vertex
    std::vector<int> to_mem;            // product vertex -> memory state
    std::vector<std::size_t> index;     // (v*|M|+m) -> product vertex or npos
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t of(std::size_t v, int m) const { return index[v * std::size_t(mem_states) + m]; }
    std::size_t initial_of(std::size_t v, const MemoryStructure& mem) const {
        return of(v, mem.initial[v]);
    }
};

inline ProductArena product(const Arena& a, const MemoryStructure& mem, bool prune = false) {
    const std::size_t n = a.num_vertices();
    const int ms = mem.states;
    ProductArena p;
    p.mem_states = ms;
    p.index.assign(n * std::size_t(ms), ProductArena::npos);

    std::vector<char> keep(n * std::size_t(ms), 1);
    if (prune) {
        std::fill(keep.begin(), keep.end(), 0);
        std::vector<std::size_t> stack;
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t id = v * std::size_t(ms) + mem.initial[v];
            if (!keep[id]) { keep[id] = 1; stack.push_back(id); }
        }
        while (!stack.empty()) {
            std::size_t id = stack.back();
            stack.pop_back();
            std::size_t v = id / ms;
            int m = int(id % ms);
            auto succ = a.successors(v);
            for (std::size_t k = 0; k < succ.size(); ++k) {
                int m2 = mem.next(m, a.edge_slot(v, k));
                std::size_t id2 = succ[k] * std::size_t(ms) + m2;
                if (!keep[id2]) { keep[id2] = 1; stack.push_back(id2); }
            }
        }
    }

    Arena::Builder b(a.name() + "*M", a.max_color());
    for (std::size_t v = 0; v < n; ++v)
        for (int m = 0; m < ms; ++m) {
            std::size_t id = v * std::size_t(ms) + m;
            if (!keep[id]) continue;
            p.index[id] = p.to_base.size();
            p.to_base.push_back(v);
            p.to_mem.push_back(m);
            b.add_vertex(a.owner(v), a.color(v));
        }
    for (std::size_t v = 0; v < n; ++v)
        for (int m = 0; m < ms; ++m) {
            std::size_t id = v * std::size_t(ms) + m;
            if (!keep[id]) continue;
            auto succ = a.successors(v);
            for (std::size_t k = 0; k < succ.size(); ++k) {
                int m2 = mem.next(m, a.edge_slot(v, k));
                b.edge(p.index[id], p.index[succ[k] * std::size_t(ms) + m2]);
            }
        }
    p.arena = b.build();
    return p;
}

} // namespace finitary
