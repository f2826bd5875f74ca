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

#include <deque>
#include <map>
#include <optional>

#include "finitary/pushdown.hpp"
#include "finitary/solvers.hpp"

namespace finitary {

struct DeadEndConfiguration : std::runtime_error {
    explicit DeadEndConfiguration(std::string conf)
        : std::runtime_error("configuration has no applicable transition: " + conf) {}
};
struct EmptyUnfolding : std::runtime_error {
    EmptyUnfolding() : std::runtime_error("unfolding produced no vertices") {}
};

/// What happens to a push that would exceed the height bound.
enum class OverflowPolicy {
    LoseEve,   // redirect to an Adam-owned sink with the worst odd color
    LoseAdam,  // redirect to a color-0 sink
    Drop,      // remove the transition; dead ends become errors
};

/// Finite arena over the reachable configurations with stack height <= H.
struct UnfoldResult {
    Arena arena;
    std::vector<Configuration> configs;  // per vertex; sinks keep the last real config
    std::map<Configuration, std::size_t> index;
    std::vector<std::size_t> overflow_vertices;
    std::size_t start_vertex = 0;
    std::size_t height_bound = 0;
};

/// Pushes of symbols in `drop_symbols` are dropped at the height bound
/// regardless of the policy; used where a losing sink would let the pushing
/// player game the cap (marker loops of the restart gadget, credit pushes).
inline UnfoldResult unfold(const PushdownProcess& p, std::size_t h, const Configuration& start,
                           OverflowPolicy policy = OverflowPolicy::LoseEve,
                           const std::vector<int>& drop_symbols = {}) {
    if (start.height() > h)
        throw std::invalid_argument("height bound below the start configuration");

    UnfoldResult r;
    r.height_bound = h;
    std::deque<Configuration> queue{start};
    r.index[start] = 0;
    r.configs.push_back(start);

    struct Edge {
        std::size_t from, to;
    };
    std::vector<Edge> edges;
    std::size_t sink = Restriction::npos;
    auto ensure_sink = [&]() {
        if (sink == Restriction::npos) {
            sink = r.configs.size();
            r.configs.push_back(Configuration{0, {}});
            r.overflow_vertices.push_back(sink);
        }
        return sink;
    };

    while (!queue.empty()) {
        Configuration c = queue.front();
        queue.pop_front();
        std::size_t from = r.index.at(c);
        bool any = false;
        for (auto& t : p.transitions) {
            if (t.from != c.state || !applies(t, c)) continue;
            if (t.op == StackOp::Push && c.height() == h) {
                bool dropped = policy == OverflowPolicy::Drop;
                for (int s : drop_symbols) dropped |= (s == t.push_sym);
                if (dropped) continue;
                edges.push_back({from, ensure_sink()});
                any = true;
                continue;
            }
            Configuration d = apply(t, c);
            auto [it, fresh] = r.index.try_emplace(d, r.configs.size());
            if (fresh) {
                r.configs.push_back(d);
                queue.push_back(d);
            }
            edges.push_back({from, it->second});
            any = true;
        }
        if (!any) throw DeadEndConfiguration(config_to_string(p, c));
    }
    if (r.configs.empty()) throw EmptyUnfolding();

    Arena::Builder b(p.name + "@" + std::to_string(h), p.max_color);
    for (std::size_t v = 0; v < r.configs.size(); ++v) {
        if (sink != Restriction::npos && v == sink) {
            // the sink's color and owner encode the policy
            if (policy == OverflowPolicy::LoseEve)
                b.add_vertex(Player::Adam, 1);
            else
                b.add_vertex(Player::Eve, 0);
        } else {
            std::size_t q = r.configs[v].state;
            b.add_vertex(p.owner[q], p.color[q]);
        }
    }
    for (auto& e : edges) b.edge(e.from, e.to);
    if (sink != Restriction::npos) b.edge(sink, sink);
    r.arena = b.build();
    r.start_vertex = 0;
    return r;
}

/// Unfold with the LoseEve policy (exceeding the height bound is losing for
/// Eve, encoding stack boundedness at bound H) and solve the condition on
/// the finite arena. Set-based conditions use F = color^{-1}(0).
inline SolveResult solve_unfolded(const PushdownProcess& p, std::size_t h,
                                  const Configuration& start, ConditionKind kind, long n = -1,
                                  const SolveOptions& opts = {}) {
    UnfoldResult u = unfold(p, h, start, OverflowPolicy::LoseEve);
    Condition cond{kind, u.arena.buchi_set(), n};
    return solve(u.arena, cond, opts);
}

/// Evaluate a per-height verdict for increasing heights until it has been
/// stable for `window` consecutive heights. The evaluation gets the
/// unfolding; heights where it throws are reported as gaps and break runs.
template <typename T>
struct Stabilization {
    bool stabilized = false;
    std::size_t at_height = 0;  // first height of the stable window
    std::optional<T> value;
    std::vector<std::pair<std::size_t, std::optional<T>>> history;
};

template <typename T, typename Eval>
Stabilization<T> stabilize_over_heights(const PushdownProcess& p, const Configuration& start,
                                        Eval eval, std::size_t h_lo, std::size_t h_hi,
                                        std::size_t window = 3) {
    Stabilization<T> s;
    std::size_t run = 0;
    std::optional<T> last;
    for (std::size_t h = h_lo; h <= h_hi; ++h) {
        std::optional<T> val;
        try {
            UnfoldResult u = unfold(p, h, start, OverflowPolicy::LoseEve);
            val = eval(u);
        } catch (const DeadEndConfiguration&) {
            val = std::nullopt;
        }
        s.history.emplace_back(h, val);
        if (val.has_value() && last.has_value() && *val == *last) {
            ++run;
        } else {
            run = val.has_value() ? 1 : 0;
        }
        last = val;
        if (run >= window) {
            s.stabilized = true;
            s.at_height = h - window + 1;
            s.value = val;
            return s;
        }
    }
    return s;
}

} // namespace finitary
