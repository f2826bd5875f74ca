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
#include <stdexcept>

#include "finitary/attractor.hpp"
#include "finitary/condition.hpp"
#include "finitary/memory.hpp"
#include "finitary/strategy.hpp"
#include "finitary/verify.hpp"

namespace finitary {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(long cap)
        : std::runtime_error("bound search exceeded cap " + std::to_string(cap)), cap(cap) {}
    long cap;
};

struct SolveTrace {
    std::size_t fixpoint_iterations = 0;
    std::vector<std::size_t> slice_sizes;
};

struct SolveResult {
    Condition condition{ConditionKind::Safety, VertexSet(), -1};
    VertexSet eve_region;
    VertexSet adam_region;
    std::optional<Strategy> eve_strategy;
    std::optional<Strategy> adam_strategy;
    SolveTrace trace;
};

struct SolveOptions {
    bool strategies = true;  // extract strategies (regions are always computed)
    bool minimize = true;    // greedily merge memory states, re-verifying
};

// ---------------------------------------------------------------------------
// Strategy post-processing
// ---------------------------------------------------------------------------

namespace detail {

inline Strategy merge_memory_states(const Strategy& s, int keep, int drop) {
    MemoryStructure m;
    m.states = s.memory.states - 1;
    m.num_edges = s.memory.num_edges;
    auto remap = [&](int o) {
        if (o == drop) o = keep;
        return o > drop ? o - 1 : o;
    };
    m.initial.resize(s.memory.initial.size());
    for (std::size_t v = 0; v < m.initial.size(); ++v) m.initial[v] = remap(s.memory.initial[v]);
    m.update.assign(std::size_t(m.states) * m.num_edges, 0);
    for (int o = 0; o < s.memory.states; ++o) {
        if (o == drop) continue;
        for (std::size_t e = 0; e < m.num_edges; ++e)
            m.update[std::size_t(remap(o)) * m.num_edges + e] = remap(s.memory.next(o, e));
    }
    std::size_t nv = s.next_move.size() / std::size_t(s.memory.states);
    Strategy r = Strategy::make_finite_memory(s.player, nv, std::move(m));
    for (std::size_t v = 0; v < nv; ++v) {
        for (int o = 0; o < s.memory.states; ++o) {
            if (o == drop) continue;
            std::size_t mv = s.move_at(v, o);
            if (mv != Strategy::npos && r.move_at(v, remap(o)) == Strategy::npos)
                r.set_move(v, remap(o), mv);
        }
        // the dropped state's moves fill remaining holes of the kept state
        std::size_t mv = s.move_at(v, drop);
        if (mv != Strategy::npos && r.move_at(v, remap(drop)) == Strategy::npos)
            r.set_move(v, remap(drop), mv);
    }
    return r;
}

inline Strategy to_positional(const Strategy& s) {
    std::size_t nv = s.next_move.size();
    Strategy r = Strategy::make_positional(s.player, nv);
    for (std::size_t v = 0; v < nv; ++v) r.move[v] = s.move_at(v, 0);
    return r;
}

/// Greedy verified minimization: try merging memory-state pairs as long as
/// the merged strategy still verifies on the claimed region.
inline Strategy minimize_strategy(const Arena& a, Strategy s, const Condition& cond,
                                  const VertexSet& region) {
    if (s.positional || region.empty()) return s;
    if (a.num_vertices() * std::size_t(s.states()) > 20000) return s;
    bool merged = true;
    while (merged && s.memory.states > 1) {
        merged = false;
        for (int keep = 0; keep < s.memory.states && !merged; ++keep)
            for (int drop = keep + 1; drop < s.memory.states && !merged; ++drop) {
                Strategy cand = merge_memory_states(s, keep, drop);
                try {
                    if (verify(a, cand, cond, region).holds) {
                        s = std::move(cand);
                        merged = true;
                    }
                } catch (const InvalidStrategy&) {
                }
            }
    }
    if (s.memory.states == 1) return to_positional(s);
    return s;
}

/// Lift a positional product strategy to a finite-memory base strategy.
inline Strategy project_product_strategy(const ProductArena& p, const MemoryStructure& mem,
                                         const std::vector<std::size_t>& product_move,
                                         Player player, std::size_t base_vertices) {
    Strategy s = Strategy::make_finite_memory(player, base_vertices, mem);
    for (std::size_t x = 0; x < p.arena.num_vertices(); ++x) {
        std::size_t mv = product_move[x];
        if (mv == Strategy::npos) continue;
        s.set_move(p.to_base[x], p.to_mem[x], p.to_base[mv]);
    }
    return s;
}

/// Fill undefined moves of the given player with the first successor, so the
/// strategy stays total along post-victory plays.
inline void fill_defaults(const Arena& a, Player player, std::vector<std::size_t>& move) {
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (a.owner(v) == player && move[v] == Strategy::npos) move[v] = a.successors(v)[0];
}

} // namespace detail

// ---------------------------------------------------------------------------
// Safety
// ---------------------------------------------------------------------------

/// Eve wins iff she can stay in S forever: the complement of Adam's
/// attractor to V \ S. Both strategies are positional.
inline SolveResult solve_safety(const Arena& a, const VertexSet& s,
                                const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::safety(s);
    auto bad = attractor_for(a, s.complement(), Player::Adam);
    r.adam_region = bad.set;
    r.eve_region = bad.set.complement();
    r.trace.fixpoint_iterations = 1;
    if (opts.strategies) {
        Strategy eve = Strategy::make_positional(Player::Eve, a.num_vertices());
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            if (!r.eve_region.test(v) || a.owner(v) != Player::Eve) continue;
            for (auto t : a.successors(v))
                if (r.eve_region.test(t)) { eve.move[v] = t; break; }
        }
        Strategy adam = Strategy::make_positional(Player::Adam, a.num_vertices());
        for (std::size_t v = 0; v < a.num_vertices(); ++v)
            if (a.owner(v) == Player::Adam)
                adam.move[v] = bad.strategy[v] != AttractorResult::npos ? bad.strategy[v]
                                                                        : a.successors(v)[0];
        r.eve_strategy = std::move(eve);
        r.adam_strategy = std::move(adam);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Büchi / CoBüchi
// ---------------------------------------------------------------------------

namespace detail {

struct BuchiCore {
    VertexSet region;              // nu Z . Attr_N(F cap Pre(Z)), for the player
    VertexSet target;              // F cap Pre(Z) at the fixpoint
    AttractorResult attr;          // attractor to target (bounded by N)
    std::vector<std::size_t> drop_level;  // iteration at which a vertex left Z
    std::size_t iterations = 0;
};

/// Shared greatest fixpoint nu Z . Attr^p_N(F cap Pre(Z)); N = kUnbounded
/// gives the classical Büchi region, finite N the bounded uniform one.
inline BuchiCore buchi_core(const Arena& a, const VertexSet& f, Player p, std::size_t n,
                            const VertexSet* mask) {
    BuchiCore c;
    VertexSet z = mask ? *mask : a.full_set();
    c.drop_level.assign(a.num_vertices(), kNoRank);
    std::size_t iter = 0;
    while (true) {
        ++iter;
        VertexSet t = f & pre(a, z, p, mask);
        if (mask) t &= *mask;
        AttractorResult at = attractor_for(a, t, p, n, mask);
        VertexSet znew = at.set;
        for (std::size_t v = 0; v < a.num_vertices(); ++v)
            if (z.test(v) && !znew.test(v)) c.drop_level[v] = iter - 1;
        if (znew == z) {
            c.region = std::move(znew);
            c.target = std::move(t);
            c.attr = std::move(at);
            c.iterations = iter;
            return c;
        }
        z = std::move(znew);
    }
}

/// Eve's positional strategy on the nu-fixpoint: attractor moves toward the
/// target, and from the target a move back into Z (lowest index).
inline void buchi_eve_moves(const Arena& a, const BuchiCore& c, Player p, const VertexSet* mask,
                            std::vector<std::size_t>& move) {
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (!c.region.test(v) || a.owner(v) != p) continue;
        if (c.target.test(v)) {
            for (auto t : a.successors(v)) {
                if (mask && !mask->test(t)) continue;
                if (c.region.test(t)) { move[v] = t; break; }
            }
        } else if (c.attr.strategy[v] != AttractorResult::npos) {
            move[v] = c.attr.strategy[v];
        }
    }
}

/// Adam's positional co-Büchi strategy from the complement of the fixpoint:
/// always move to the successor with the smallest drop level. Levels never
/// increase along consistent plays and strictly decrease at F-visits.
inline void buchi_adam_moves(const Arena& a, const BuchiCore& c, Player p, const VertexSet* mask,
                             std::vector<std::size_t>& move) {
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (mask && !mask->test(v)) continue;
        if (c.region.test(v) || a.owner(v) == p) continue;
        std::size_t best = Strategy::npos, best_level = kNoRank;
        for (auto t : a.successors(v)) {
            if (mask && !mask->test(t)) continue;
            std::size_t lvl = c.region.test(t) ? kNoRank : c.drop_level[t];
            if (best == Strategy::npos || lvl < best_level) {
                best = t;
                best_level = lvl;
            }
        }
        move[v] = best;
    }
}

} // namespace detail

inline SolveResult solve_buchi(const Arena& a, const VertexSet& f, const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::buchi(f);
    auto core = detail::buchi_core(a, f, Player::Eve, kUnbounded, nullptr);
    r.eve_region = core.region;
    r.adam_region = core.region.complement();
    r.trace.fixpoint_iterations = core.iterations;
    if (opts.strategies) {
        Strategy eve = Strategy::make_positional(Player::Eve, a.num_vertices());
        detail::buchi_eve_moves(a, core, Player::Eve, nullptr, eve.move);
        Strategy adam = Strategy::make_positional(Player::Adam, a.num_vertices());
        detail::buchi_adam_moves(a, core, Player::Eve, nullptr, adam.move);
        detail::fill_defaults(a, Player::Adam, adam.move);
        r.eve_strategy = std::move(eve);
        r.adam_strategy = std::move(adam);
    }
    return r;
}

/// CoBüchi via the owner-swapped Büchi game: Eve's co-Büchi region is the
/// complement of the swapped game's Büchi region.
inline SolveResult solve_cobuchi(const Arena& a, const VertexSet& f,
                                 const SolveOptions& opts = {}) {
    SolveResult sw = solve_buchi(a.owner_swapped(), f, opts);
    SolveResult r;
    r.condition = Condition::cobuchi(f);
    r.eve_region = sw.adam_region;
    r.adam_region = sw.eve_region;
    r.trace = sw.trace;
    if (opts.strategies) {
        sw.adam_strategy->player = Player::Eve;
        sw.eve_strategy->player = Player::Adam;
        r.eve_strategy = std::move(sw.adam_strategy);
        r.adam_strategy = std::move(sw.eve_strategy);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Parity (Zielonka)
// ---------------------------------------------------------------------------

namespace detail {

struct ZielonkaState {
    const Arena* a;
    std::vector<std::size_t> eve_move, adam_move;
};

inline void zielonka(ZielonkaState& st, const VertexSet& mask, VertexSet& weve, VertexSet& wadam) {
    const Arena& a = *st.a;
    weve = VertexSet(a.num_vertices());
    wadam = VertexSet(a.num_vertices());
    if (mask.empty()) return;

    int p = -1;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (mask.test(v) && (p < 0 || a.color(v) < p)) p = a.color(v);
    Player i = (p % 2 == 0) ? Player::Eve : Player::Adam;
    auto& imove = i == Player::Eve ? st.eve_move : st.adam_move;
    auto& omove = i == Player::Eve ? st.adam_move : st.eve_move;

    VertexSet t(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (mask.test(v) && a.color(v) == p) t.set(v);

    auto at = attractor_for(a, t, i, kUnbounded, &mask);
    VertexSet rest = mask - at.set;
    VertexSet w1e, w1a;
    zielonka(st, rest, w1e, w1a);
    VertexSet& w1opp = i == Player::Eve ? w1a : w1e;

    if (w1opp.empty()) {
        if (i == Player::Eve) { weve = mask; } else { wadam = mask; }
        // attractor moves outside T, any in-mask move on T
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            if (!mask.test(v) || a.owner(v) != i) continue;
            if (t.test(v)) {
                for (auto s : a.successors(v))
                    if (mask.test(s)) { imove[v] = s; break; }
            } else if (at.strategy[v] != AttractorResult::npos && !rest.test(v)) {
                imove[v] = at.strategy[v];
            }
            // vertices of the recursive sub-win keep their recursive moves
        }
        return;
    }

    auto bt = attractor_for(a, w1opp, opponent(i), kUnbounded, &mask);
    // attractor moves for the opponent on the extension
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (!bt.set.test(v) || w1opp.test(v)) continue;
        if (a.owner(v) == opponent(i) && bt.strategy[v] != AttractorResult::npos)
            omove[v] = bt.strategy[v];
    }
    VertexSet rest2 = mask - bt.set;
    VertexSet w2e, w2a;
    zielonka(st, rest2, w2e, w2a);
    if (i == Player::Eve) {
        weve = w2e;
        wadam = w2a | bt.set;
    } else {
        wadam = w2a;
        weve = w2e | bt.set;
    }
}

} // namespace detail

inline SolveResult solve_parity(const Arena& a, const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::parity();
    detail::ZielonkaState st;
    st.a = &a;
    st.eve_move.assign(a.num_vertices(), Strategy::npos);
    st.adam_move.assign(a.num_vertices(), Strategy::npos);
    detail::zielonka(st, a.full_set(), r.eve_region, r.adam_region);
    if (opts.strategies) {
        Strategy eve = Strategy::make_positional(Player::Eve, a.num_vertices());
        Strategy adam = Strategy::make_positional(Player::Adam, a.num_vertices());
        eve.move = std::move(st.eve_move);
        adam.move = std::move(st.adam_move);
        r.eve_strategy = std::move(eve);
        r.adam_strategy = std::move(adam);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bounded uniform Büchi:  nu Z . Attr^E_N(F cap Pre(Z))
// ---------------------------------------------------------------------------

inline SolveResult solve_bnd_uniform_buchi(const Arena& a, const VertexSet& f, long n,
                                           const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::bnd_uniform_buchi(f, n);
    auto core = detail::buchi_core(a, f, Player::Eve, std::size_t(n), nullptr);
    r.eve_region = core.region;
    r.adam_region = core.region.complement();
    r.trace.fixpoint_iterations = core.iterations;
    if (!opts.strategies) return r;

    Strategy eve = Strategy::make_positional(Player::Eve, a.num_vertices());
    detail::buchi_eve_moves(a, core, Player::Eve, nullptr, eve.move);
    r.eve_strategy = std::move(eve);

    // Adam: reduction to safety on the product with the step counter; his
    // attractor to counter value N wins, and capping the counter one earlier
    // merges the state the winning strategy never needs.
    if (n == 0) {
        // BndBüchi(F,0) is Safety(F)
        auto sf = solve_safety(a, f, opts);
        r.adam_strategy = std::move(sf.adam_strategy);
        r.adam_strategy->player = Player::Adam;
    } else {
        MemoryStructure counter = step_counter_memory(a, f, int(n));
        ProductArena p = product(a, counter);
        VertexSet value_n(p.arena.num_vertices());
        for (std::size_t x = 0; x < p.arena.num_vertices(); ++x)
            if (p.to_mem[x] == int(n)) value_n.set(x);
        auto at = attractor_for(p.arena, value_n, Player::Adam);
        std::vector<std::size_t> pmove(p.arena.num_vertices(), Strategy::npos);
        for (std::size_t x = 0; x < p.arena.num_vertices(); ++x)
            if (p.arena.owner(x) == Player::Adam)
                pmove[x] = at.strategy[x] != AttractorResult::npos ? at.strategy[x]
                                                                   : p.arena.successors(x)[0];
        MemoryStructure merged = step_counter_memory(a, f, int(n) - 1);
        Strategy adam = Strategy::make_finite_memory(Player::Adam, a.num_vertices(), merged);
        for (std::size_t x = 0; x < p.arena.num_vertices(); ++x) {
            if (pmove[x] == Strategy::npos || p.to_mem[x] >= int(n)) continue;
            int m = std::min(p.to_mem[x], int(n) - 1);
            if (adam.move_at(p.to_base[x], m) == Strategy::npos)
                adam.set_move(p.to_base[x], m, p.to_base[pmove[x]]);
        }
        if (opts.minimize)
            adam = detail::minimize_strategy(a, std::move(adam), r.condition, r.adam_region);
        r.adam_strategy = std::move(adam);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Uniform Büchi: slice iteration with Xi(A') = W_E(A', BndBüchi(F,N))
// ---------------------------------------------------------------------------

inline SolveResult solve_uniform_buchi(const Arena& a, const VertexSet& f, long n,
                                       const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::uniform_buchi(f, n);
    r.eve_region = VertexSet(a.num_vertices());
    Strategy eve = Strategy::make_positional(Player::Eve, a.num_vertices());

    VertexSet mask = a.full_set();
    while (true) {
        auto core = detail::buchi_core(a, f, Player::Eve, std::size_t(n), &mask);
        r.trace.fixpoint_iterations += core.iterations;
        if (core.region.empty()) break;
        auto glue = attractor_for(a, core.region, Player::Eve, kUnbounded, &mask);
        if (opts.strategies) {
            detail::buchi_eve_moves(a, core, Player::Eve, &mask, eve.move);
            for (std::size_t v = 0; v < a.num_vertices(); ++v)
                if (glue.set.test(v) && !core.region.test(v) && a.owner(v) == Player::Eve &&
                    glue.strategy[v] != AttractorResult::npos)
                    eve.move[v] = glue.strategy[v];
        }
        r.trace.slice_sizes.push_back(glue.set.count());
        r.eve_region |= glue.set;
        mask -= glue.set;
        if (mask.empty()) break;
    }
    r.adam_region = r.eve_region.complement();
    if (!opts.strategies) return r;
    r.eve_strategy = std::move(eve);

    // Adam: CoBüchi reduction over the step-counter product; visiting counter
    // value N infinitely often spoils the limsup bound.
    if (n == 0) {
        // Büchi(F,0): eventually only F, so Adam plays Büchi(V \ F)
        auto sw = solve_buchi(a.owner_swapped(), f.complement(), opts);
        sw.eve_strategy->player = Player::Adam;
        r.adam_strategy = std::move(sw.eve_strategy);
    } else {
        MemoryStructure counter = step_counter_memory(a, f, int(n));
        ProductArena p = product(a, counter);
        VertexSet value_n(p.arena.num_vertices());
        for (std::size_t x = 0; x < p.arena.num_vertices(); ++x)
            if (p.to_mem[x] == int(n)) value_n.set(x);
        auto sw = solve_buchi(p.arena.owner_swapped(), value_n, opts);
        Strategy adam = detail::project_product_strategy(p, counter, sw.eve_strategy->move,
                                                         Player::Adam, a.num_vertices());
        for (std::size_t v = 0; v < a.num_vertices(); ++v)
            if (a.owner(v) == Player::Adam)
                for (int m = 0; m < counter.states; ++m)
                    if (adam.move_at(v, m) == Strategy::npos)
                        adam.set_move(v, m, a.successors(v)[0]);
        if (opts.minimize)
            adam = detail::minimize_strategy(a, std::move(adam), r.condition, r.adam_region);
        r.adam_strategy = std::move(adam);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Finitary Büchi: slice iteration; on a finite arena the union over N of the
// uniform regions equals the single region at N = |A'| by monotonicity.
// ---------------------------------------------------------------------------

inline SolveResult solve_finitary_buchi(const Arena& a, const VertexSet& f,
                                        const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::finitary_buchi(f);
    r.eve_region = VertexSet(a.num_vertices());
    Strategy eve = Strategy::make_positional(Player::Eve, a.num_vertices());

    VertexSet mask = a.full_set();
    while (true) {
        std::size_t nmax = mask.count();  // W_E(Büchi(F,N)) is constant from N = |A'| on
        VertexSet sub_region(a.num_vertices());
        {
            VertexSet m2 = mask;
            while (true) {
                auto core = detail::buchi_core(a, f, Player::Eve, nmax, &m2);
                r.trace.fixpoint_iterations += core.iterations;
                if (core.region.empty()) break;
                auto glue = attractor_for(a, core.region, Player::Eve, kUnbounded, &m2);
                if (opts.strategies) {
                    detail::buchi_eve_moves(a, core, Player::Eve, &m2, eve.move);
                    for (std::size_t v = 0; v < a.num_vertices(); ++v)
                        if (glue.set.test(v) && !core.region.test(v) &&
                            a.owner(v) == Player::Eve &&
                            glue.strategy[v] != AttractorResult::npos)
                            eve.move[v] = glue.strategy[v];
                }
                sub_region |= glue.set;
                m2 -= glue.set;
                if (m2.empty()) break;
            }
        }
        if (sub_region.empty()) break;
        auto glue = attractor_for(a, sub_region, Player::Eve, kUnbounded, &mask);
        if (opts.strategies)
            for (std::size_t v = 0; v < a.num_vertices(); ++v)
                if (glue.set.test(v) && !sub_region.test(v) && a.owner(v) == Player::Eve &&
                    glue.strategy[v] != AttractorResult::npos)
                    eve.move[v] = glue.strategy[v];
        r.trace.slice_sizes.push_back(glue.set.count());
        r.eve_region |= glue.set;
        mask -= glue.set;
        if (mask.empty()) break;
    }
    r.adam_region = r.eve_region.complement();
    if (!opts.strategies) return r;
    r.eve_strategy = std::move(eve);

    // Adam: winning finitary-Büchi strategies need infinite memory on general
    // arenas; on a finite arena his positional Büchi-complement strategy
    // keeps F out of every reachable cycle, which spoils the limsup.
    auto bu = solve_buchi(a, f, opts);
    r.adam_strategy = std::move(bu.adam_strategy);
    return r;
}

// ---------------------------------------------------------------------------
// Bounded parity: request-tracker product, then the bounded(=finitary) Büchi
// game on the all-requests-answered set.
// ---------------------------------------------------------------------------

namespace detail {

struct ParityProduct {
    int d = 0;  // even maximal color used by the tracker
    MemoryStructure tracker;
    ProductArena prod;
    VertexSet answered;  // F = {(v,d) | c(v) even}
};

inline ParityProduct parity_product(const Arena& a) {
    ParityProduct pp;
    pp.d = a.max_color();
    if (pp.d % 2 != 0) ++pp.d;  // lift: the extra color is simply never used
    pp.tracker = request_tracker_memory(a, pp.d);
    pp.prod = product(a, pp.tracker);
    pp.answered = VertexSet(pp.prod.arena.num_vertices());
    int dstate = tracker_state_of(pp.d, pp.d);
    for (std::size_t x = 0; x < pp.prod.arena.num_vertices(); ++x)
        if (pp.prod.to_mem[x] == dstate && a.color(pp.prod.to_base[x]) % 2 == 0)
            pp.answered.set(x);
    return pp;
}

} // namespace detail

inline SolveResult solve_bnd_parity(const Arena& a, const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::bnd_parity();
    auto pp = detail::parity_product(a);
    // BndBüchi(F) = FinBüchi(F), and on the finite product the finitary
    // region coincides with the classical Büchi region; the attractor-based
    // strategy bounds every gap by the product size.
    auto bu = solve_buchi(pp.prod.arena, pp.answered, opts);
    r.trace = bu.trace;
    r.eve_region = VertexSet(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (bu.eve_region.test(pp.prod.initial_of(v, pp.tracker))) r.eve_region.set(v);
    r.adam_region = r.eve_region.complement();
    if (!opts.strategies) return r;

    Strategy eve = detail::project_product_strategy(pp.prod, pp.tracker, bu.eve_strategy->move,
                                                    Player::Eve, a.num_vertices());
    if (opts.minimize)
        eve = detail::minimize_strategy(a, std::move(eve), r.condition, r.eve_region);
    r.eve_strategy = std::move(eve);

    Strategy adam = detail::project_product_strategy(pp.prod, pp.tracker, bu.adam_strategy->move,
                                                     Player::Adam, a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (a.owner(v) == Player::Adam)
            for (int m = 0; m < pp.tracker.states; ++m)
                if (adam.move_at(v, m) == Strategy::npos) adam.set_move(v, m, a.successors(v)[0]);
    if (opts.minimize)
        adam = detail::minimize_strategy(a, std::move(adam), r.condition, r.adam_region);
    r.adam_strategy = std::move(adam);
    return r;
}

// ---------------------------------------------------------------------------
// Finitary parity.
//
// The limsup condition forgives any finite prefix, in particular requests
// that are never answered at all, so winning cannot be captured by chasing
// the all-answered set of the plain tracker product: a pending request can
// pin the tracker below every later activity. Instead the tracker product is
// augmented with an Eve-controlled "forget" move that resets the tracker to
// the current vertex's fresh state at the price of one odd color. A play
// wins the augmented parity game (colors: forget 1, all-answered 2, other 3)
// iff it forgets finitely often and is answered-with-bounded-gaps afterwards,
// which over the finite product is exactly the finitary parity condition.
// ---------------------------------------------------------------------------

namespace detail {

struct FinParityAug {
    ParityProduct pp;
    Arena aug;
    std::vector<std::size_t> gate_of;   // product vertex -> gate node
    std::vector<std::size_t> main_of;   // product vertex -> main node
    std::vector<std::size_t> reset_of;  // base vertex -> reset node
};

inline FinParityAug finitary_parity_aug(const Arena& a) {
    FinParityAug fa;
    fa.pp = parity_product(a);
    const Arena& pa = fa.pp.prod.arena;
    const std::size_t pn = pa.num_vertices();
    Arena::Builder b(a.name() + "~finpar", 3);
    fa.gate_of.resize(pn);
    fa.main_of.resize(pn);
    fa.reset_of.resize(a.num_vertices());
    for (std::size_t x = 0; x < pn; ++x) {
        fa.gate_of[x] = b.add_vertex(Player::Eve, 3);
        fa.main_of[x] = b.add_vertex(pa.owner(x), fa.pp.answered.test(x) ? 2 : 3);
    }
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        fa.reset_of[v] = b.add_vertex(Player::Eve, 1);
    for (std::size_t x = 0; x < pn; ++x) {
        std::size_t v = fa.pp.prod.to_base[x];
        std::size_t fresh = fa.pp.prod.initial_of(v, fa.pp.tracker);
        b.edge(fa.gate_of[x], fa.main_of[x]);
        if (fresh != x) b.edge(fa.gate_of[x], fa.reset_of[v]);
        for (auto y : pa.successors(x)) b.edge(fa.main_of[x], fa.gate_of[y]);
    }
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        b.edge(fa.reset_of[v], fa.main_of[fa.pp.prod.initial_of(v, fa.pp.tracker)]);
    fa.aug = b.build();
    return fa;
}

} // namespace detail

inline SolveResult solve_finitary_parity(const Arena& a, const SolveOptions& opts = {}) {
    SolveResult r;
    r.condition = Condition::finitary_parity();
    auto fa = detail::finitary_parity_aug(a);
    auto pg = solve_parity(fa.aug, opts);
    r.trace = pg.trace;

    r.eve_region = VertexSet(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        std::size_t fresh = fa.pp.prod.initial_of(v, fa.pp.tracker);
        if (pg.eve_region.test(fa.gate_of[fresh])) r.eve_region.set(v);
    }
    r.adam_region = r.eve_region.complement();
    if (!opts.strategies) return r;

    // project: the memory is the tracker state sampled before the gate; the
    // strategy's own update bakes in the chosen forgets
    const auto& aug_move = pg.eve_strategy->move;
    const ProductArena& prod = fa.pp.prod;
    auto gate_resets = [&](std::size_t x) {
        std::size_t mv = aug_move[fa.gate_of[x]];
        return mv != Strategy::npos && mv == fa.reset_of[prod.to_base[x]];
    };
    auto effective = [&](std::size_t x) {
        return gate_resets(x) ? prod.initial_of(prod.to_base[x], fa.pp.tracker) : x;
    };

    MemoryStructure mem;
    mem.states = fa.pp.tracker.states;
    mem.num_edges = a.num_edges();
    mem.initial = fa.pp.tracker.initial;
    mem.update.assign(std::size_t(mem.states) * mem.num_edges, 0);
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
        auto succ = a.successors(u);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            std::size_t slot = a.edge_slot(u, k);
            for (int m = 0; m < mem.states; ++m) {
                std::size_t x = prod.of(u, m);
                int m2 = prod.to_mem[effective(x)];
                mem.update[std::size_t(m) * mem.num_edges + slot] =
                    fa.pp.tracker.next(m2, slot);
            }
        }
    }
    Strategy eve = Strategy::make_finite_memory(Player::Eve, a.num_vertices(), mem);
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) != Player::Eve) continue;
        for (int m = 0; m < mem.states; ++m) {
            std::size_t x = effective(prod.of(u, m));
            std::size_t mv = aug_move[fa.main_of[x]];
            if (mv == Strategy::npos) continue;
            // the main node's move targets a gate; recover the base vertex
            for (auto y : prod.arena.successors(x))
                if (fa.gate_of[y] == mv) {
                    eve.set_move(u, m, prod.to_base[y]);
                    break;
                }
        }
    }
    if (opts.minimize)
        eve = detail::minimize_strategy(a, std::move(eve), r.condition, r.eve_region);
    r.eve_strategy = std::move(eve);
    // Adam may require infinite memory for finitary parity even on finite
    // arenas (growing detours), so no Adam strategy is emitted here.
    return r;
}

// ---------------------------------------------------------------------------
// Condition dispatcher and the minimal uniform bound search
// ---------------------------------------------------------------------------

inline SolveResult solve(const Arena& a, const Condition& cond, const SolveOptions& opts = {}) {
    switch (cond.kind) {
        case ConditionKind::Safety: return solve_safety(a, cond.set, opts);
        case ConditionKind::Buchi: return solve_buchi(a, cond.set, opts);
        case ConditionKind::CoBuchi: return solve_cobuchi(a, cond.set, opts);
        case ConditionKind::Parity: return solve_parity(a, opts);
        case ConditionKind::BndUniformBuchi:
            return solve_bnd_uniform_buchi(a, cond.set, cond.bound, opts);
        case ConditionKind::UniformBuchi: return solve_uniform_buchi(a, cond.set, cond.bound, opts);
        case ConditionKind::FinitaryBuchi: return solve_finitary_buchi(a, cond.set, opts);
        case ConditionKind::BndParity: return solve_bnd_parity(a, opts);
        case ConditionKind::FinitaryParity: return solve_finitary_parity(a, opts);
        case ConditionKind::BndUniformParity:
            throw std::logic_error("bnd-uniform-parity has no region solver");
    }
    throw std::logic_error("unknown condition");
}

/// Smallest N <= cap with start in W_E(Büchi(F,N)), by exponential then
/// binary search. Returns nullopt when no bound can ever work (the start is
/// not even Büchi-winning); throws CapExceeded when a bound exists but lies
/// beyond the cap.
inline std::optional<long> minimal_uniform_bound(const Arena& a, const VertexSet& f,
                                                 std::size_t start, long cap = 1 << 20) {
    SolveOptions region_only;
    region_only.strategies = false;
    auto wins = [&](long n) {
        return solve_uniform_buchi(a, f, n, region_only).eve_region.test(start);
    };
    if (!solve_buchi(a, f, region_only).eve_region.test(start)) return std::nullopt;
    if (wins(0)) return 0;
    long lo = 0, hi = 1;  // lo always failing, hi candidate
    while (hi <= cap && !wins(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > cap) {
        if (!wins(cap)) throw CapExceeded(cap);
        hi = cap;
    }
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (wins(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

} // namespace finitary
