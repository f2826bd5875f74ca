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

#include <functional>
#include <stdexcept>

#include "finitary/strategy.hpp"

namespace finitary {

struct SpaceTooLarge : std::runtime_error {
    explicit SpaceTooLarge(double cardinality)
        : std::runtime_error("strategy space too large to enumerate"), cardinality(cardinality) {}
    double cardinality;
};

/// Number of positional strategies for a player: the product of the
/// outdegrees of the owned vertices.
inline double positional_strategy_count(const Arena& a, Player p) {
    double c = 1;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (a.owner(v) == p) c *= double(a.outdegree(v));
    return c;
}

/// Exhaustively enumerates positional strategies. The callback may return
/// false to stop early; returns whether enumeration ran to completion.
inline bool enumerate_positional(const Arena& a, Player p,
                                 const std::function<bool(const Strategy&)>& fn,
                                 double cap = 1e7) {
    double count = positional_strategy_count(a, p);
    if (count > cap) throw SpaceTooLarge(count);

    std::vector<std::size_t> owned;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (a.owner(v) == p) owned.push_back(v);
    std::vector<std::size_t> choice(owned.size(), 0);
    Strategy s = Strategy::make_positional(p, a.num_vertices());
    while (true) {
        for (std::size_t i = 0; i < owned.size(); ++i)
            s.move[owned[i]] = a.successors(owned[i])[choice[i]];
        if (!fn(s)) return false;
        std::size_t i = 0;
        for (; i < owned.size(); ++i) {
            if (++choice[i] < a.outdegree(owned[i])) break;
            choice[i] = 0;
        }
        if (i == owned.size()) return true;
    }
}

/// Exhaustively enumerates finite-memory strategies over a fixed state set
/// {0..m-1} with initial state 0: all next-move tables (owned vertices x M)
/// combined with all update tables (M x E). Intended for tiny instances; the
/// cardinality guard throws SpaceTooLarge otherwise.
inline bool enumerate_machines(const Arena& a, Player p, int m,
                               const std::function<bool(const Strategy&)>& fn,
                               double cap = 1e7) {
    if (m < 1) throw std::invalid_argument("memory size must be >= 1");
    if (m == 1) return enumerate_positional(a, p, fn, cap);

    std::vector<std::size_t> owned;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (a.owner(v) == p) owned.push_back(v);

    double count = 1;
    for (auto v : owned)
        for (int i = 0; i < m; ++i) count *= double(a.outdegree(v));
    for (std::size_t e = 0; e < a.num_edges() * std::size_t(m); ++e) count *= double(m);
    if (count > cap) throw SpaceTooLarge(count);

    std::vector<std::size_t> move_choice(owned.size() * std::size_t(m), 0);
    std::vector<int> upd_choice(a.num_edges() * std::size_t(m), 0);

    MemoryStructure mem;
    mem.states = m;
    mem.num_edges = a.num_edges();
    mem.initial.assign(a.num_vertices(), 0);
    while (true) {
        mem.update.assign(upd_choice.begin(), upd_choice.end());
        Strategy s = Strategy::make_finite_memory(p, a.num_vertices(), mem);
        for (std::size_t i = 0; i < owned.size(); ++i)
            for (int st = 0; st < m; ++st)
                s.set_move(owned[i], st,
                           a.successors(owned[i])[move_choice[i * std::size_t(m) + st]]);
        if (!fn(s)) return false;
        // odometer over moves, then updates
        std::size_t i = 0;
        for (; i < move_choice.size(); ++i) {
            if (++move_choice[i] < a.outdegree(owned[i / std::size_t(m)])) break;
            move_choice[i] = 0;
        }
        if (i < move_choice.size()) continue;
        std::size_t e = 0;
        for (; e < upd_choice.size(); ++e) {
            if (++upd_choice[e] < m) break;
            upd_choice[e] = 0;
        }
        if (e == upd_choice.size()) return true;
    }
}

/// enumerate_strategies per the library surface: positional when m = 1,
/// machine tables otherwise.
inline bool enumerate_strategies(const Arena& a, Player p, int memory_size,
                                 const std::function<bool(const Strategy&)>& fn,
                                 double cap = 1e7) {
    return enumerate_machines(a, p, memory_size, fn, cap);
}

} // namespace finitary
