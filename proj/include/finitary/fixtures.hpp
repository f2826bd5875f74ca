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

#include <map>
#include <string>
#include <variant>

#include "finitary/arena.hpp"
#include "finitary/pushdown.hpp"

namespace finitary {

struct UnknownExample : std::runtime_error {
    explicit UnknownExample(const std::string& n) : std::runtime_error("unknown example: " + n) {}
};
struct BadParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A machine-readable statement of what the fixture demonstrates; the test
/// suites turn these into executable checks.
struct Claim {
    std::string condition;  // condition name, possibly with a bound
    long bound = -1;
    std::string start;      // vertex id or configuration
    std::string expect;     // e.g. "eve-wins", "no-positional-eve", "min-bound>=6"
};

struct Fixture {
    std::string name;
    std::variant<Arena, PushdownProcess> object;
    std::string start;  // canonical start vertex / configuration
    std::vector<Claim> claims;

    bool is_arena() const { return std::holds_alternative<Arena>(object); }
    const Arena& arena() const { return std::get<Arena>(object); }
    const PushdownProcess& process() const { return std::get<PushdownProcess>(object); }
};

struct FixtureInfo {
    std::string name;
    std::string params;      // parameter schema with defaults
    std::string kind;        // "arena" or "pushdown"
    std::string provenance;  // source figure and ownership/truncation choices
};

using Params = std::map<std::string, long>;

inline long param(const Params& ps, const std::string& key, long dflt) {
    auto it = ps.find(key);
    if (it == ps.end()) return dflt;
    return it->second;
}

inline unsigned long long nth_primorial(int n) {
    // product of the first n primes
    std::vector<int> primes;
    for (int x = 2; int(primes.size()) < n; ++x) {
        bool prime = true;
        for (int p : primes) prime &= (x % p != 0);
        if (prime) primes.push_back(x);
    }
    unsigned long long q = 1;
    for (int p : primes) q *= (unsigned long long)(p);
    return q;
}

inline std::vector<int> first_primes(int n) {
    std::vector<int> primes;
    for (int x = 2; int(primes.size()) < n; ++x) {
        bool prime = true;
        for (int p : primes) prime &= (x % p != 0);
        if (prime) primes.push_back(x);
    }
    return primes;
}

namespace fixtures {

/// Three vertices, all Adam's (the figure draws diamonds; the all-Adam
/// reading makes the caption's strict inclusion true): F = {v0, v2},
/// v0 loops or moves on, v1 is forced into v2's loop.
inline Fixture fig3(const Params&) {
    Arena::Builder b("fig3", 1);
    b.add_vertex(Player::Adam, 0);
    b.add_vertex(Player::Adam, 1);
    b.add_vertex(Player::Adam, 0);
    b.edge(0, 0).edge(0, 1).edge(1, 2).edge(2, 2);
    Fixture f;
    f.name = "fig3";
    f.object = b.build();
    f.start = "0";
    f.claims = {{"bnd-uniform-buchi", 0, "0", "region={2}"},
                {"uniform-buchi", 0, "0", "region={0,1,2}"}};
    return f;
}

/// One Adam-owned pushdown state pushing while in F, then a popping state
/// outside F: Adam loses Büchi but wins finitary Büchi on the infinite
/// unfolding by describing longer and longer excursions.
inline Fixture round_robin(const Params&) {
    PushdownProcess p;
    p.name = "round-robin";
    p.max_color = 1;
    int a = p.add_symbol("a");
    std::size_t top = p.add_state("p", Player::Adam, 0);
    std::size_t down = p.add_state("r", Player::Adam, 1);
    p.push_any(top, a, top);
    p.skip_any(top, down);
    p.pop(down, a, down);
    p.skip(down, kBottom, top);
    Fixture f;
    f.name = "round-robin";
    f.object = std::move(p);
    f.start = "p:\u22a5";
    f.claims = {{"buchi", -1, "p:\u22a5", "adam-loses"},
                {"finitary-buchi", -1, "p:\u22a5", "adam-wins-on-unbounded-unfolding"}};
    return f;
}

/// Adam repeatedly forbids an index i, Eve picks j != i and runs a corridor
/// of length N whose j-th vertex is the only Büchi one. Copying Eve's last
/// choice needs N memory states and beats the bound N+1; any smaller
/// machine leaves some index Adam never forbids.
inline Fixture adam_memory(const Params& ps) {
    long n = param(ps, "n", 3);
    if (n < 2) throw BadParams("adam-memory needs n >= 2");
    Arena::Builder b("adam-memory", 1);
    std::size_t c = b.add_vertex(Player::Adam, 1);
    std::vector<std::size_t> pick(n + 1);
    for (long i = 1; i <= n; ++i) pick[i] = b.add_vertex(Player::Eve, 1);
    std::vector<std::vector<std::size_t>> row(n + 1);
    for (long j = 1; j <= n; ++j) {
        row[j].resize(n + 1);
        for (long t = 1; t <= n; ++t)
            row[j][t] = b.add_vertex(Player::Adam, t == j ? 0 : 1);
    }
    for (long i = 1; i <= n; ++i) b.edge(c, pick[i]);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            if (j != i) b.edge(pick[i], row[j][1]);
    for (long j = 1; j <= n; ++j) {
        for (long t = 1; t < n; ++t) b.edge(row[j][t], row[j][t + 1]);
        b.edge(row[j][n], c);
    }
    Fixture f;
    f.name = "adam-memory";
    f.object = b.build();
    f.start = "0";
    f.claims = {{"bnd-uniform-buchi", n + 1, "0", "no-positional-adam"},
                {"bnd-uniform-buchi", n + 1, "0", "adam-min-memory-in-{" + std::to_string(n - 1) +
                                                      ".." + std::to_string(n) + "}"}};
    return f;
}

/// Truncation of the infinite one-player arena where Eve wins finitary
/// Büchi but can announce no bound: branch i ends in a loop of length i+1
/// visiting F once, so the limsup in branch i is exactly i. Truncated to n
/// branches (flagged): for every N < n Adam escapes the bound by dropping
/// into branch N+1.
inline Fixture boundunknown(const Params& ps) {
    long n = param(ps, "n", 4);
    if (n < 2) throw BadParams("boundunknown needs n >= 2");
    Arena::Builder b("boundunknown", 1);
    std::vector<std::size_t> top(n + 1);
    for (long j = 1; j <= n; ++j) top[j] = b.add_vertex(Player::Adam, 0);
    for (long j = 1; j < n; ++j) b.edge(top[j], top[j + 1]);
    for (long j = 1; j <= n; ++j) {
        std::size_t entry = b.add_vertex(Player::Adam, 0);
        std::size_t prev = entry;
        for (long t = 1; t <= j; ++t) {
            std::size_t u = b.add_vertex(Player::Adam, 1);
            b.edge(prev, u);
            prev = u;
        }
        b.edge(prev, entry);
        b.edge(top[j], entry);
    }
    Fixture f;
    f.name = "boundunknown";
    f.object = b.build();
    f.start = "0";
    f.claims = {{"finitary-buchi", -1, "0", "eve-wins"},
                {"uniform-buchi", n - 1, "0", "eve-loses-every-bound-below-n"}};
    return f;
}

/// Rounds of requests: Adam opens 1 or 3, Eve either answers through the
/// 0-path (one step longer) and continues, or stops in the 2-loop. The
/// 3-request of round t travels a corridor of length t, so under the bound
/// n+2 every positional choice at some stop vertex loses while tracking the
/// pending request with two states wins. Truncated to n rounds (flagged);
/// the last round repeats.
inline Fixture bndparity_rounds(const Params& ps) {
    long n = param(ps, "n", 3);
    if (n < 1) throw BadParams("bndparity-rounds needs n >= 1");
    Arena::Builder b("bndparity-rounds", 4);
    std::vector<std::size_t> v(n + 2);
    for (long t = 1; t <= n; ++t) v[t] = b.add_vertex(Player::Adam, 4);
    v[n + 1] = v[n];  // last round repeats
    for (long t = 1; t <= n; ++t) {
        std::size_t r1 = b.add_vertex(Player::Adam, 1);
        std::size_t r3 = b.add_vertex(Player::Adam, 3);
        std::size_t cur = r3;
        for (long i = 0; i < t; ++i) {
            std::size_t w = b.add_vertex(Player::Adam, 4);
            b.edge(cur, w);
            cur = w;
        }
        std::size_t choice = b.add_vertex(Player::Eve, 4);
        std::size_t stop = b.add_vertex(Player::Adam, 2);
        std::size_t x = b.add_vertex(Player::Adam, 4);
        std::size_t z = b.add_vertex(Player::Adam, 0);
        b.edge(v[t], r1).edge(v[t], r3);
        b.edge(r1, choice).edge(cur, choice);
        b.edge(choice, stop).edge(choice, x);
        b.edge(stop, stop);
        b.edge(x, z).edge(z, v[t + 1]);
    }
    Fixture f;
    f.name = "bndparity-rounds";
    f.object = b.build();
    f.start = "0";
    f.claims = {{"bnd-uniform-parity", n + 2, "0", "no-positional-eve"},
                {"bnd-uniform-parity", n + 2, "0", "eve-min-memory=2"}};
    return f;
}

/// The eight-vertex arena where Eve needs memory for the uniform parity
/// bound: Adam raises 1 or 3, both funnel into one Eve choice; the 2-answer
/// is one step closer than the 0-answer but does not answer 1. On this
/// transcription the smallest achievable uniform bound is 3 (the drawn
/// corridor lengths make 2 unachievable), and it needs two memory states.
inline Fixture uniparity(const Params&) {
    Arena::Builder b("uniparity", 4);
    std::size_t v0 = b.add_vertex(Player::Adam, 4);
    std::size_t r3 = b.add_vertex(Player::Adam, 3);
    std::size_t w = b.add_vertex(Player::Adam, 4);
    std::size_t r1 = b.add_vertex(Player::Adam, 1);
    std::size_t m = b.add_vertex(Player::Eve, 4);
    std::size_t a2 = b.add_vertex(Player::Adam, 2);
    std::size_t x = b.add_vertex(Player::Adam, 4);
    std::size_t a0 = b.add_vertex(Player::Adam, 0);
    b.edge(v0, r3).edge(v0, r1);
    b.edge(r3, w).edge(w, m).edge(r1, m);
    b.edge(m, a2).edge(m, x);
    b.edge(x, a0);
    b.edge(a2, a2).edge(a0, a0);
    Fixture f;
    f.name = "uniparity";
    f.object = b.build();
    f.start = "0";
    f.claims = {{"bnd-uniform-parity", 3, "0", "no-positional-eve"},
                {"bnd-uniform-parity", 3, "0", "eve-min-memory=2"},
                {"parity", -1, "0", "region=all"},
                {"finitary-parity", -1, "0", "region=all"}};
    return f;
}

/// The credit game: Adam buys a stock of a's while in F, then each credit
/// pays for one excursion that pushes and pops b's outside F. Eve wins the
/// uniform bound 0 in the limit but loses every bounded-uniform condition.
inline Fixture credit(const Params&) {
    PushdownProcess p;
    p.name = "credit";
    p.max_color = 1;
    int a = p.add_symbol("a");
    int bsym = p.add_symbol("b");
    std::size_t q0 = p.add_state("q0", Player::Adam, 0);
    std::size_t q1 = p.add_state("q1", Player::Adam, 1);
    std::size_t q2 = p.add_state("q2", Player::Adam, 0);
    std::size_t q3 = p.add_state("q3", Player::Adam, 1);
    std::size_t q4 = p.add_state("q4", Player::Adam, 0);
    p.push_any(q0, a, q0);
    p.skip_any(q0, q1);
    p.pop(q1, a, q2);
    p.skip_any(q1, q4);
    p.push_any(q2, bsym, q2);
    p.skip_any(q2, q3);
    p.pop(q3, bsym, q3);
    p.skip(q3, a, q1);
    p.skip(q3, kBottom, q1);
    p.skip_any(q4, q4);
    Fixture f;
    f.name = "credit";
    f.object = std::move(p);
    f.start = "q0:\u22a5";
    f.claims = {{"uniform-buchi", 0, "q0:\u22a5", "eve-wins-stabilized"},
                {"bnd-uniform-buchi", -1, "q0:\u22a5", "eve-loses-every-bound"}};
    return f;
}

/// The switch game: Eve may pop credits before visiting F, Adam then either
/// banks one more credit or spends the stock to stay away from F. Keeping
/// the stack low is forced; Eve wins exactly the uniform bound 2.
inline Fixture switch_game(const Params&) {
    PushdownProcess p;
    p.name = "switch";
    p.max_color = 1;
    int a = p.add_symbol("a");
    std::size_t q = p.add_state("q", Player::Eve, 1);
    std::size_t fst = p.add_state("f", Player::Adam, 0);
    std::size_t pp = p.add_state("p", Player::Adam, 1);
    p.pop(q, a, q);
    p.skip_any(q, fst);
    p.push_any(fst, a, q);
    p.skip_any(fst, pp);
    p.pop(pp, a, pp);
    p.skip_any(pp, fst);
    Fixture f;
    f.name = "switch";
    f.object = std::move(p);
    f.start = "q:\u22a5";
    f.claims = {{"uniform-buchi", 2, "q:\u22a5", "min-bound=2"}};
    return f;
}

/// Deterministic base-k counter: init pushes 0^n, then the number on the
/// stack is incremented forever; every rollover empties the stack and visits
/// the single Büchi state. The gap between Büchi visits grows as k^n.
inline Fixture bincounter(const Params& ps) {
    long n = param(ps, "n", 3);
    long k = param(ps, "k", 2);
    if (n < 2 || k < 2) throw BadParams("bincounter needs n >= 2 and k >= 2");
    PushdownProcess p;
    p.name = "bincounter";
    p.max_color = 1;
    std::vector<int> digit(k);
    for (long d = 0; d < k; ++d) digit[d] = p.add_symbol(std::string(1, char('0' + d)));
    std::size_t fst = p.add_state("F", Player::Adam, 0);
    std::vector<std::size_t> q(n + 1);
    for (long i = 1; i <= n; ++i) q[i] = p.add_state("q" + std::to_string(i), Player::Adam, 1);
    // init: push n zeros
    p.push_any(fst, digit[0], q[1]);
    for (long i = 1; i < n; ++i) p.push_any(q[i], digit[0], q[i + 1]);
    // p_i: i trailing (k-1)-digits popped so far
    std::vector<std::size_t> carry(n);
    for (long i = 1; i < n; ++i)
        carry[i] = p.add_state("p" + std::to_string(i), Player::Adam, 1);
    auto bump_target = [&](long i) {
        // after popping i trailing max-digits and the digit below, push the
        // bumped digit and i zeros, then return to q[n]
        return i;
    };
    (void)bump_target;
    // bump states: r_{i,d} pushes digit d+1 then i zeros
    for (long i = 0; i < n; ++i) {
        for (long d = 0; d + 1 < k; ++d) {
            std::size_t r =
                p.add_state("r" + std::to_string(i) + "_" + std::to_string(d), Player::Adam, 1);
            std::size_t from = i == 0 ? q[n] : carry[i];
            p.pop(from, digit[d], r);
            // push the bumped digit, then i zeros via a chain
            std::size_t cur = r;
            std::size_t next;
            if (i == 0) {
                p.push_any(r, digit[d + 1], q[n]);
            } else {
                next = p.add_state("s" + std::to_string(i) + "_" + std::to_string(d) + "_0",
                                   Player::Adam, 1);
                p.push_any(cur, digit[d + 1], next);
                cur = next;
                for (long z = 1; z < i; ++z) {
                    next = p.add_state(
                        "s" + std::to_string(i) + "_" + std::to_string(d) + "_" + std::to_string(z),
                        Player::Adam, 1);
                    p.push_any(cur, digit[0], next);
                    cur = next;
                }
                p.push_any(cur, digit[0], q[n]);
            }
        }
    }
    // carry chain on trailing max digits; full rollover reaches F
    if (n >= 2) p.pop(q[n], digit[k - 1], carry[1]);
    for (long i = 1; i + 1 < n; ++i) p.pop(carry[i], digit[k - 1], carry[i + 1]);
    p.pop(carry[n - 1], digit[k - 1], fst);
    Fixture f;
    f.name = "bincounter";
    f.object = std::move(p);
    f.start = "F:\u22a5";
    f.claims = {{"deterministic-gap", -1, "F:\u22a5", "sup-gap-grows-as-k^n"}};
    return f;
}

/// The one-counter game: Eve banks a's, Adam picks a prime up to the n-th
/// and checks divisibility through a popping loop; a wrong count strands the
/// loop outside its exit and Eve loses. The smallest securable uniform bound
/// is governed by the primorial q_n.
inline Fixture onecounter(const Params& ps) {
    long n = param(ps, "n", 2);
    if (n < 1) throw BadParams("onecounter needs n >= 1");
    auto primes = first_primes(int(n));
    PushdownProcess p;
    p.name = "onecounter";
    p.max_color = 1;
    int a = p.add_symbol("a");
    std::size_t eve = p.add_state("i", Player::Eve, 1);
    std::size_t c = p.add_state("c", Player::Adam, 1);
    std::size_t fst = p.add_state("F", Player::Adam, 0);
    std::size_t sink = p.add_state("X", Player::Adam, 1);
    p.push_any(eve, a, eve);
    p.skip(eve, a, c);
    p.skip_any(sink, sink);
    p.skip_any(fst, eve);
    for (int prime : primes) {
        std::vector<std::size_t> loop(prime);
        for (int j = 0; j < prime; ++j)
            loop[j] = p.add_state("l" + std::to_string(prime) + "_" + std::to_string(j),
                                  Player::Adam, 1);
        p.pop(c, a, loop[1 % prime]);
        for (int j = 0; j < prime; ++j) p.pop(loop[j], a, loop[(j + 1) % prime]);
        p.skip(loop[0], kBottom, fst);
        for (int j = 1; j < prime; ++j) p.skip(loop[j], kBottom, sink);
    }
    Fixture f;
    f.name = "onecounter";
    f.object = std::move(p);
    f.start = "i:\u22a5";
    f.claims = {{"uniform-buchi", long(nth_primorial(int(n))), "i:\u22a5",
                 "min-bound>=" + std::to_string(nth_primorial(int(n)))}};
    return f;
}

/// Doubly-exponential variant: the stack holds a binary number whose length
/// Adam can check to be a multiple of the primorial; each full count between
/// rollovers separates Büchi visits by about 2^(q_n) steps.
inline Fixture doubleexp(const Params& ps) {
    long n = param(ps, "n", 2);
    if (n < 1) throw BadParams("doubleexp needs n >= 1");
    auto primes = first_primes(int(n));
    PushdownProcess p;
    p.name = "doubleexp";
    p.max_color = 1;
    int d0 = p.add_symbol("0");
    int d1 = p.add_symbol("1");
    std::size_t eve = p.add_state("i", Player::Eve, 1);
    std::size_t choix = p.add_state("x", Player::Adam, 1);
    std::size_t s = p.add_state("s", Player::Adam, 1);
    std::size_t inter = p.add_state("t", Player::Adam, 1);
    std::size_t c2 = p.add_state("c", Player::Eve, 1);
    std::size_t fst = p.add_state("F", Player::Adam, 0);
    std::size_t sink = p.add_state("X", Player::Adam, 1);
    p.push_any(eve, d0, eve);
    p.skip(eve, d0, choix);
    p.skip_any(choix, s);
    p.pop(s, d1, s);
    p.pop(s, d0, inter);
    p.skip(s, kBottom, fst);  // all ones popped: rollover, restart
    p.push_any(inter, d1, c2);
    p.push_any(c2, d0, c2);
    p.skip_any(c2, choix);
    p.skip_any(fst, eve);
    p.skip_any(sink, sink);
    for (int prime : primes) {
        std::vector<std::size_t> loop(prime);
        for (int j = 0; j < prime; ++j)
            loop[j] = p.add_state("k" + std::to_string(prime) + "_" + std::to_string(j),
                                  Player::Adam, 1);
        p.skip_any(choix, loop[0]);
        for (int j = 0; j < prime; ++j) {
            p.pop(loop[j], d0, loop[(j + 1) % prime]);
            p.pop(loop[j], d1, loop[(j + 1) % prime]);
        }
        p.skip(loop[0], kBottom, fst);
        for (int j = 1; j < prime; ++j) p.skip(loop[j], kBottom, sink);
    }
    Fixture f;
    f.name = "doubleexp";
    f.object = std::move(p);
    f.start = "i:\u22a5";
    f.claims = {{"uniform-buchi", -1, "i:\u22a5", "min-bound-doubly-exponential (measured trend)"}};
    return f;
}

/// Sketch-based nested counter over k digit pairs separated by markers; the
/// wiring fills the construction's gaps (per-block divisibility checks, the
/// carry hand-off popping a marker) and is flagged as sketch-derived.
inline Fixture nested(const Params& ps) {
    long n = param(ps, "n", 1);
    long k = param(ps, "k", 2);
    if (n < 1 || k < 1) throw BadParams("nested needs n >= 1 and k >= 1");
    auto primes = first_primes(int(n));
    PushdownProcess p;
    p.name = "nested";
    p.max_color = 1;
    std::vector<int> asym(k + 1), bsym(k + 1);
    for (long i = 1; i <= k; ++i) {
        asym[i] = p.add_symbol(std::string(1, char('a' + 2 * (i - 1))));
        bsym[i] = p.add_symbol(std::string(1, char('b' + 2 * (i - 1))));
    }
    int marker = p.add_symbol("#");
    std::size_t fst = p.add_state("F", Player::Adam, 0);
    std::size_t sink = p.add_state("X", Player::Adam, 1);
    p.skip_any(sink, sink);
    std::vector<std::size_t> push_phase(k + 1), gate(k + 1), inc(k + 1), inter(k + 1),
        refill(k + 1), gate2(k + 1);
    for (long i = 1; i <= k; ++i) {
        push_phase[i] = p.add_state("P" + std::to_string(i), Player::Eve, 1);
        gate[i] = p.add_state("G" + std::to_string(i), Player::Adam, 1);
        inc[i] = p.add_state("s" + std::to_string(i), Player::Adam, 1);
        inter[i] = p.add_state("t" + std::to_string(i), Player::Adam, 1);
        refill[i] = p.add_state("c" + std::to_string(i), Player::Eve, 1);
        gate2[i] = p.add_state("H" + std::to_string(i), Player::Adam, 1);
    }
    p.skip_any(fst, push_phase[1]);
    for (long i = 1; i <= k; ++i) {
        // Eve fills block i with a_i's, then Adam checks or increments
        p.push_any(push_phase[i], asym[i], push_phase[i]);
        p.skip(push_phase[i], asym[i], gate[i]);
        p.skip_any(gate[i], inc[i]);
        // increment block i: pop b's, flip the first a, refill with a's
        p.pop(inc[i], bsym[i], inc[i]);
        p.pop(inc[i], asym[i], inter[i]);
        p.push_any(inter[i], bsym[i], refill[i]);
        p.push_any(refill[i], asym[i], refill[i]);
        p.skip_any(refill[i], gate2[i]);
        // block exhausted: hand the carry to the block below, or restart
        if (i > 1)
            p.pop(inc[i], marker, inc[i - 1]);
        else
            p.skip(inc[i], kBottom, fst);
        // after an increment Adam either checks, restarts the level above
        // with a fresh marker, or (at the top) increments again
        if (i < k)
            p.push_any(gate2[i], marker, push_phase[i + 1]);
        else
            p.skip_any(gate2[i], inc[i]);
        // divisibility checks on block i
        for (int prime : primes) {
            std::vector<std::size_t> loop(prime);
            for (int j = 0; j < prime; ++j)
                loop[j] = p.add_state("m" + std::to_string(i) + "_" + std::to_string(prime) + "_" +
                                          std::to_string(j),
                                      Player::Adam, 1);
            p.skip_any(gate[i], loop[0]);
            p.skip_any(gate2[i], loop[0]);
            for (int j = 0; j < prime; ++j) {
                p.pop(loop[j], asym[i], loop[(j + 1) % prime]);
                p.pop(loop[j], bsym[i], loop[(j + 1) % prime]);
            }
            // a full block must end at the marker (or bottom for block 1)
            if (i > 1) {
                p.skip(loop[0], marker, fst);
            } else {
                p.skip(loop[0], kBottom, fst);
                p.skip(loop[0], marker, sink);  // a stray marker is malformed
            }
            for (int j = 0; j < prime; ++j) {
                if (j != 0) {
                    p.skip(loop[j], marker, sink);
                    p.skip(loop[j], kBottom, sink);
                }
                // digits of other blocks under a misplaced marker: losing
                for (long o = 1; o <= k; ++o)
                    if (o != i) {
                        p.skip(loop[j], asym[o], sink);
                        p.skip(loop[j], bsym[o], sink);
                    }
            }
            if (i > 1) p.skip(loop[0], kBottom, sink);
        }
    }
    // stuck increments: wrong digits on top are losing for Eve
    for (long i = 1; i <= k; ++i)
        for (long o = 1; o <= k; ++o)
            if (o != i) {
                p.skip(inc[i], asym[o], sink);
                p.skip(inc[i], bsym[o], sink);
            }
    if (k >= 1)
        for (long i = 2; i <= k; ++i) p.skip(inc[i], kBottom, sink);
    p.skip(inc[1], marker, sink);
    Fixture f;
    f.name = "nested";
    f.object = std::move(p);
    f.start = "P1:\u22a5";
    f.claims = {{"finitary-buchi", -1, "P1:\u22a5", "sketch: measured trend only"}};
    return f;
}

} // namespace fixtures

inline std::vector<FixtureInfo> list_examples() {
    return {
        {"fig3", "", "arena",
         "strict-inclusion figure; diamond vertices read as all-Adam to make the caption true"},
        {"round-robin", "", "pushdown", "intro figure: Büchi lost, finitary Büchi won by Adam"},
        {"adam-memory", "n (default 3)", "arena",
         "bounded uniform Büchi lower-bound figure; corridor rows forced, hence Adam-owned"},
        {"boundunknown", "n (default 4)", "arena",
         "unpredictable-bound figure, truncated to n branches; loop i has period i+1"},
        {"bndparity-rounds", "n (default 3)", "arena",
         "bounded-parity memory figure, truncated to n rounds; check uses the uniform bound n+2"},
        {"uniparity", "", "arena",
         "uniform-parity memory figure; transcription admits bound 3 as the smallest"},
        {"credit", "", "pushdown", "credit-game figure; all states Adam's"},
        {"switch", "", "pushdown", "switch-game figure; q is Eve's, f and p Adam's"},
        {"bincounter", "n (default 3), k (default 2)", "pushdown",
         "deterministic counter figure, generalized to base k"},
        {"onecounter", "n (default 2)", "pushdown",
         "one-counter prime game; wrong counts strand the loops into a losing sink"},
        {"doubleexp", "n (default 2)", "pushdown",
         "doubly-exponential game; rollover detected at the emptied stack"},
        {"nested", "n (default 1), k (default 2)", "pushdown",
         "nested-alphabet game; sketch-derived wiring, flagged"},
    };
}

inline Fixture build_example(const std::string& name, const Params& ps = {}) {
    if (name == "fig3") return fixtures::fig3(ps);
    if (name == "round-robin") return fixtures::round_robin(ps);
    if (name == "adam-memory") return fixtures::adam_memory(ps);
    if (name == "boundunknown") return fixtures::boundunknown(ps);
    if (name == "bndparity-rounds") return fixtures::bndparity_rounds(ps);
    if (name == "uniparity") return fixtures::uniparity(ps);
    if (name == "credit") return fixtures::credit(ps);
    if (name == "switch") return fixtures::switch_game(ps);
    if (name == "bincounter") return fixtures::bincounter(ps);
    if (name == "onecounter") return fixtures::onecounter(ps);
    if (name == "doubleexp") return fixtures::doubleexp(ps);
    if (name == "nested") return fixtures::nested(ps);
    throw UnknownExample(name);
}

} // namespace finitary
