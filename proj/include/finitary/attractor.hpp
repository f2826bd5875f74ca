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

#include <limits>
#include <vector>

#include "finitary/arena.hpp"

namespace finitary {

constexpr std::size_t kNoRank = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Pre(X) for a player: vertices of that player with some successor in X,
/// plus opponent vertices whose successors all lie in X. When a mask is
/// given, everything is computed in the induced subarena.
inline VertexSet pre(const Arena& a, const VertexSet& x, Player p = Player::Eve,
                     const VertexSet* mask = nullptr) {
    VertexSet r(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (mask && !mask->test(v)) continue;
        bool in = a.owner(v) != p;  // for the opponent start from "all in"
        for (auto t : a.successors(v)) {
            if (mask && !mask->test(t)) continue;
            if (a.owner(v) == p) {
                if (x.test(t)) { in = true; break; }
            } else if (!x.test(t)) {
                in = false;
                break;
            }
        }
        if (in) r.set(v);
    }
    return r;
}

/// Attr^p_N(F) with per-vertex ranks and the positional attractor strategy:
/// rank(v) is the least k with v in Attr_k; from every attracted vertex of
/// the attracting player the strategy moves to the lowest-index successor of
/// strictly smaller rank ("ensures to reach F within the next N steps").
struct AttractorResult {
    VertexSet set;
    std::vector<std::size_t> rank;      // kNoRank outside the attractor
    std::vector<std::size_t> strategy;  // per vertex of p inside, else npos
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline AttractorResult attractor_for(const Arena& a, const VertexSet& f, Player p,
                                     std::size_t bound = kUnbounded,
                                     const VertexSet* mask = nullptr) {
    const std::size_t n = a.num_vertices();
    AttractorResult res;
    res.set = VertexSet(n);
    res.rank.assign(n, kNoRank);
    res.strategy.assign(n, AttractorResult::npos);

    std::vector<std::size_t> frontier;
    for (std::size_t v = 0; v < n; ++v) {
        if (!f.test(v) || (mask && !mask->test(v))) continue;
        res.set.set(v);
        res.rank[v] = 0;
        frontier.push_back(v);
    }

    // Remaining successors outside the attractor, for opponent vertices.
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (mask && !mask->test(v)) continue;
        for (auto t : a.successors(v))
            if (!mask || mask->test(t)) ++pending[v];
    }

    // Predecessor lists over the masked subarena.
    std::vector<std::size_t> pred_off(n + 1, 0), pred;
    for (std::size_t v = 0; v < n; ++v) {
        if (mask && !mask->test(v)) continue;
        for (auto t : a.successors(v))
            if (!mask || mask->test(t)) ++pred_off[t + 1];
    }
    for (std::size_t v = 0; v < n; ++v) pred_off[v + 1] += pred_off[v];
    pred.resize(pred_off[n]);
    {
        std::vector<std::size_t> cur(pred_off.begin(), pred_off.end() - 1);
        for (std::size_t v = 0; v < n; ++v) {
            if (mask && !mask->test(v)) continue;
            for (auto t : a.successors(v))
                if (!mask || mask->test(t)) pred[cur[t]++] = v;
        }
    }

    std::size_t level = 0;
    std::vector<std::size_t> next;
    while (!frontier.empty() && level < bound) {
        ++level;
        next.clear();
        for (auto w : frontier) {
            for (std::size_t i = pred_off[w]; i < pred_off[w + 1]; ++i) {
                std::size_t v = pred[i];
                if (res.rank[v] != kNoRank) continue;
                if (a.owner(v) == p) {
                    res.rank[v] = level;
                    next.push_back(v);
                } else if (--pending[v] == 0) {
                    res.rank[v] = level;
                    next.push_back(v);
                }
            }
        }
        for (auto v : next) res.set.set(v);
        frontier.swap(next);
    }

    // Deterministic strategy: lowest-index successor of strictly smaller rank.
    for (std::size_t v = 0; v < n; ++v) {
        if (res.rank[v] == kNoRank || res.rank[v] == 0 || a.owner(v) != p) continue;
        for (auto t : a.successors(v)) {
            if (mask && !mask->test(t)) continue;
            if (res.rank[t] != kNoRank && res.rank[t] < res.rank[v]) {
                res.strategy[v] = t;
                break;
            }
        }
    }
    return res;
}

inline AttractorResult attractor(const Arena& a, const VertexSet& f) {
    return attractor_for(a, f, Player::Eve);
}

/// Attr^E_N(F), the N-th element of the attractor sequence.
inline VertexSet bounded_attractor(const Arena& a, const VertexSet& f, std::size_t n,
                                   Player p = Player::Eve) {
    return attractor_for(a, f, p, n).set;
}

/// Dual attractor, swapping the roles of the two players.
inline AttractorResult adam_attractor(const Arena& a, const VertexSet& f) {
    return attractor_for(a, f, Player::Adam);
}

} // namespace finitary
