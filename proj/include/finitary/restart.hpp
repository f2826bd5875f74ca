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

#include "finitary/pushdown.hpp"

namespace finitary {

struct EvenMaxColor : std::runtime_error {
    EvenMaxColor() : std::runtime_error("the restart gadget needs an odd maximal color") {}
};

/// The restart gadget: between every edge Eve may either follow it or
/// restart, visiting a color-0 state where Adam pushes fresh marker symbols
/// for as long as he wants, after which Eve pops them all at color d before
/// the edge completes. Restarting answers every pending request at the price
/// of an Adam-controlled delay, reducing finitary parity to bounded parity.
///
/// Each original transition gains three states: the Eve-owned choice state
/// (fresh even color d+1, so it neither raises nor answers anything), the
/// Adam-owned push loop (color 0) and the Eve-owned pop loop (color d).
inline PushdownProcess restart_gadget(const PushdownProcess& p) {
    if (p.max_color % 2 == 0) throw EvenMaxColor();
    const int d = p.max_color;

    PushdownProcess r;
    r.name = p.name + "~restart";
    r.max_color = d + 1;
    r.state_names = p.state_names;
    r.owner = p.owner;
    r.color = p.color;
    r.symbol_names = p.symbol_names;
    int marker = r.add_symbol("#");

    for (std::size_t i = 0; i < p.transitions.size(); ++i) {
        const PdTransition& t = p.transitions[i];
        std::string suffix = std::to_string(i);
        std::size_t choice = r.add_state("c" + suffix, Player::Eve, d + 1);
        std::size_t push_loop = r.add_state("g0_" + suffix, Player::Adam, 0);
        std::size_t pop_loop = r.add_state("gd_" + suffix, Player::Eve, d);

        // the original stack action leads to the choice state
        r.transitions.push_back({t.from, t.op, t.trigger, t.push_sym, choice});
        // (i) follow the edge
        r.skip_any(choice, t.to);
        // (ii) restart: Adam pushes markers, Eve pops them all before moving on
        r.skip_any(choice, push_loop);
        r.push_any(push_loop, marker, push_loop);
        r.skip_any(push_loop, pop_loop);
        r.pop(pop_loop, marker, pop_loop);
        for (int sym = kBottom; sym < int(p.symbol_names.size()); ++sym)
            r.skip(pop_loop, sym, t.to);  // exits only once no marker is on top
    }
    return r;
}

} // namespace finitary
