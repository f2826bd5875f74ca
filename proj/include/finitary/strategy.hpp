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

#include "finitary/memory.hpp"

namespace finitary {

struct InvalidStrategy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A strategy for one player: either a positional map vertex -> successor, or
/// a memory structure plus a next-move function (vertex, state) -> successor.
/// Moves may be left undefined (npos) outside the region the strategy claims.
struct Strategy {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Player player = Player::Eve;
    bool positional = true;
    std::vector<std::size_t> move;       // positional: per vertex
    MemoryStructure memory;              // finite-memory kind only
    std::vector<std::size_t> next_move;  // [v * states + m]

    static Strategy make_positional(Player p, std::size_t num_vertices) {
        Strategy s;
        s.player = p;
        s.positional = true;
        s.move.assign(num_vertices, npos);
        return s;
    }

    static Strategy make_finite_memory(Player p, std::size_t num_vertices, MemoryStructure mem) {
        Strategy s;
        s.player = p;
        s.positional = false;
        s.memory = std::move(mem);
        s.next_move.assign(num_vertices * std::size_t(s.memory.states), npos);
        return s;
    }

    int states() const { return positional ? 1 : memory.states; }

    std::size_t move_at(std::size_t v, int m) const {
        return positional ? move[v] : next_move[v * std::size_t(memory.states) + m];
    }
    void set_move(std::size_t v, int m, std::size_t target) {
        if (positional) move[v] = target;
        else next_move[v * std::size_t(memory.states) + m] = target;
    }

    int initial_state(std::size_t v) const { return positional ? 0 : memory.initial[v]; }
    int update(int m, std::size_t edge_slot) const {
        return positional ? 0 : memory.next(m, edge_slot);
    }

    /// Every prescribed move must follow an existing edge.
    void check_moves_legal(const Arena& a) const {
        auto check = [&](std::size_t v, std::size_t target) {
            if (target == npos) return;
            if (v >= a.num_vertices() || !a.has_edge(v, target))
                throw InvalidStrategy("prescribed move " + std::to_string(v) + "->" +
                                      std::to_string(target) + " is not an edge");
        };
        if (positional) {
            for (std::size_t v = 0; v < move.size(); ++v) check(v, move[v]);
        } else {
            for (std::size_t v = 0; v < a.num_vertices(); ++v)
                for (int m = 0; m < memory.states; ++m) check(v, move_at(v, m));
        }
    }
};

} // namespace finitary
