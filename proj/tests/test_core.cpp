#include "doctest.h"

#include <random>
#include <sstream>

#include "finitary/arena.hpp"
#include "finitary/attractor.hpp"
#include "finitary/io.hpp"
#include "finitary/memory.hpp"

using namespace finitary;

namespace {

// The three-vertex arena of the strict-inclusion figure: all vertices
// Adam's, F = {v0, v2}, v0 loops or moves on, v1 forced into v2's loop.
Arena fig3_like() {
    Arena::Builder b("fig3", 1);
    b.add_vertex(Player::Adam, 0);
    b.add_vertex(Player::Adam, 1);
    b.add_vertex(Player::Adam, 0);
    b.edge(0, 0).edge(0, 1).edge(1, 2).edge(2, 2);
    return b.build();
}

Arena random_arena(unsigned seed, std::size_t n, int maxcolor) {
    std::mt19937 rng(seed);
    Arena::Builder b("rnd" + std::to_string(seed), maxcolor);
    std::uniform_int_distribution<int> color(0, maxcolor);
    std::uniform_int_distribution<int> owner(0, 1);
    std::uniform_int_distribution<std::size_t> target(0, n - 1);
    std::uniform_int_distribution<int> deg(1, 3);
    for (std::size_t v = 0; v < n; ++v)
        b.add_vertex(owner(rng) ? Player::Adam : Player::Eve, color(rng));
    for (std::size_t v = 0; v < n; ++v) {
        int d = deg(rng);
        for (int k = 0; k < d; ++k) b.edge(v, target(rng));
    }
    return b.build();
}

} // namespace

TEST_CASE("validate: minimal legal arena and dead-end reporting") {
    Arena::Builder b("one", 1);
    b.add_vertex(Player::Eve, 0);
    b.edge(0, 0);
    CHECK(validate(b.build()).ok());

    Arena::Builder b2("deadend", 1);
    b2.add_vertex(Player::Eve, 0);
    b2.add_vertex(Player::Adam, 1);
    b2.edge(0, 1);
    auto rep = validate(b2.build());
    CHECK(!rep.ok());
    CHECK(rep.dead_ends() == std::vector<std::size_t>{1});

    CHECK(validate(fig3_like()).ok());
}

TEST_CASE("restrict: self-loop singleton, non-subarena, identity") {
    Arena a = fig3_like();
    auto r = restrict_to(a, VertexSet::of(3, {2}));
    CHECK(r.arena.num_vertices() == 1);
    CHECK(r.arena.successors(0)[0] == 0);

    CHECK_THROWS_AS(restrict_to(a, VertexSet::of(3, {1})), NotASubarena);

    auto full = restrict_to(a, a.full_set());
    CHECK(full.arena.num_vertices() == 3);
    CHECK(full.arena.num_edges() == 4);
}

TEST_CASE("pre: figure values and trivial sets") {
    Arena a = fig3_like();
    CHECK(pre(a, VertexSet::of(3, {2})) == VertexSet::of(3, {1, 2}));
    CHECK(pre(a, a.empty_set()) == a.empty_set());
    CHECK(pre(a, a.full_set()) == a.full_set());
}

TEST_CASE("attractor: ranks, bounded prefix, duality") {
    Arena a = fig3_like();
    auto at = attractor(a, VertexSet::of(3, {2}));
    CHECK(at.set == VertexSet::of(3, {1, 2}));
    CHECK(at.rank[2] == 0);
    CHECK(at.rank[1] == 1);
    CHECK(at.rank[0] == kNoRank);

    CHECK(attractor(a, a.full_set()).set == a.full_set());
    CHECK(attractor(a, a.empty_set()).set.empty());

    CHECK(bounded_attractor(a, VertexSet::of(3, {2}), 0) == VertexSet::of(3, {2}));
    CHECK(bounded_attractor(a, VertexSet::of(3, {2}), 1) == VertexSet::of(3, {1, 2}));

    CHECK(adam_attractor(a, VertexSet::of(3, {0})).set == VertexSet::of(3, {0}));
    CHECK(adam_attractor(a, a.full_set()).set == a.full_set());
    CHECK(adam_attractor(a, a.empty_set()).set.empty());
}

TEST_CASE("attractor properties on random arenas") {
    for (unsigned seed = 1; seed <= 25; ++seed) {
        Arena a = random_arena(seed, 2 + seed % 5, 1);
        VertexSet f = a.buchi_set();
        // monotone pre
        VertexSet x = VertexSet::of(a.num_vertices(), {0});
        CHECK(pre(a, x).subset_of(pre(a, a.full_set())));
        // attractor contains F, bounded prefix is below the limit
        auto at = attractor(a, f);
        CHECK(f.subset_of(at.set));
        CHECK(bounded_attractor(a, f, 2).subset_of(at.set));
        // stabilizes within |V| steps
        CHECK(bounded_attractor(a, f, a.num_vertices()) == at.set);
        // duality smoke: Eve attractor equals Adam attractor on swapped arena
        CHECK(attractor_for(a, f, Player::Eve).set ==
              attractor_for(a.owner_swapped(), f, Player::Adam).set);
        // attractor strategy reaches F within rank steps
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            if (at.rank[v] == kNoRank || at.rank[v] == 0) continue;
            if (a.owner(v) == Player::Eve) {
                REQUIRE(at.strategy[v] != AttractorResult::npos);
                CHECK(at.rank[at.strategy[v]] < at.rank[v]);
            } else {
                for (auto t : a.successors(v)) CHECK(at.rank[t] < at.rank[v]);
            }
        }
    }
}

TEST_CASE("step counter: update rows from the safety reduction") {
    Arena a = fig3_like();
    VertexSet f = a.buchi_set();  // {0, 2}
    auto m = step_counter_memory(a, f, 2);
    CHECK(m.states == 3);
    // edge (v0,v1): v0 in F, resets
    CHECK(m.next(0, a.find_edge_slot(0, 1)) == 0);
    CHECK(m.next(1, a.find_edge_slot(0, 1)) == 0);
    // edge (v1,v2): target in F, resets
    CHECK(m.next(1, a.find_edge_slot(1, 2)) == 0);
    // a non-F edge saturates at N
    Arena::Builder b("line", 1);
    b.add_vertex(Player::Eve, 1);
    b.add_vertex(Player::Eve, 1);
    b.edge(0, 1).edge(1, 0);
    Arena line = b.build();
    auto m2 = step_counter_memory(line, line.buchi_set(), 2);
    CHECK(m2.next(0, 0) == 1);
    CHECK(m2.next(1, 0) == 2);
    CHECK(m2.next(2, 0) == 2);
}

TEST_CASE("request tracker: the two displayed update rules") {
    Arena::Builder b("colors", 4);
    b.add_vertex(Player::Eve, 4);  // v0 neutral
    b.add_vertex(Player::Eve, 1);  // v1 raises 1
    b.add_vertex(Player::Eve, 0);  // v2 answers everything
    b.add_vertex(Player::Eve, 3);  // v3 raises 3
    b.edge(0, 1).edge(1, 2).edge(2, 3).edge(3, 0);
    Arena a = b.build();
    auto m = request_tracker_memory(a, 4);
    CHECK(m.states == 3);  // {1, 3, 4}
    // tracked 3, reading color 1 (odd, smaller): becomes 1
    CHECK(m.next(tracker_state_of(3, 4), a.find_edge_slot(0, 1)) == tracker_state_of(1, 4));
    // tracked 1, reading color 0 (even, smaller): all answered
    CHECK(m.next(tracker_state_of(1, 4), a.find_edge_slot(1, 2)) == tracker_state_of(4, 4));
    // tracked 3, reading color 3 (not smaller): stays
    CHECK(m.next(tracker_state_of(3, 4), a.find_edge_slot(2, 3)) == tracker_state_of(3, 4));
    // odd maximal color must be lifted by the caller
    CHECK_THROWS_AS(request_tracker_memory(a, 3), OddMaxColor);
}

TEST_CASE("product: singleton memory, counter product, outdegrees") {
    Arena a = fig3_like();
    auto triv = product(a, MemoryStructure::trivial(a));
    CHECK(triv.arena.num_vertices() == a.num_vertices());
    CHECK(triv.arena.num_edges() == a.num_edges());

    auto p = product(a, step_counter_memory(a, a.buchi_set(), 1));
    CHECK(p.arena.num_vertices() == 6);
    for (std::size_t x = 0; x < p.arena.num_vertices(); ++x) {
        CHECK(p.arena.outdegree(x) == a.outdegree(p.to_base[x]));
        CHECK(p.arena.owner(x) == a.owner(p.to_base[x]));
    }
    // no dead ends introduced
    CHECK(validate(p.arena).ok());

    auto pruned = product(a, step_counter_memory(a, a.buchi_set(), 1), true);
    CHECK(pruned.arena.num_vertices() <= 6);
    CHECK(validate(pruned.arena).ok());
}

TEST_CASE("arena text format round-trips") {
    Arena a = fig3_like();
    std::string text = arena_to_string(a);
    Arena back = parse_arena(text);
    CHECK(arena_to_string(back) == text);
    CHECK(back.num_vertices() == 3);
    CHECK(back.owner(1) == Player::Adam);
    CHECK(back.color(1) == 1);

    CHECK_THROWS_AS(parse_arena("arena x maxcolor 1\n0 E 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arena("0 E 0 0\n"), ParseError);
}

TEST_CASE("dot export mentions shapes") {
    Arena a = fig3_like();
    std::ostringstream os;
    print_dot(os, a);
    auto s = os.str();
    CHECK(s.find("shape=box") != std::string::npos);
    CHECK(s.find("peripheries=2") != std::string::npos);
}

TEST_CASE("format round-trips on random arenas") {
    for (unsigned seed = 1; seed <= 30; ++seed) {
        Arena a = random_arena(seed, seed % 5 + 4, 3);
        std::string text = arena_to_string(a);
        Arena back = parse_arena(text);
        CHECK(arena_to_string(back) == text);
        CHECK(back.num_vertices() == a.num_vertices());
        CHECK(back.num_edges() == a.num_edges());
    }
    // corrupt inputs are rejected, not misread
    CHECK_THROWS_AS(parse_arena("arena x maxcolor 0\n0 E 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arena("arena x maxcolor 1\n0 Q 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arena("arena x maxcolor 1\n0 E 0 0\n2 E 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_arena("arena x maxcolor 1\n0 E 0 7\n"), ParseError);
}

TEST_CASE("vertex sets across word boundaries") {
    for (std::size_t n : {63u, 64u, 65u, 128u, 130u}) {
        VertexSet s(n);
        s.set(0);
        s.set(n - 1);
        CHECK(s.count() == 2);
        VertexSet c = s.complement();
        CHECK(c.count() == n - 2);
        CHECK(!c.test(n - 1));
        c.set_all();
        CHECK(c.count() == n);
        CHECK((s & c) == s);
        CHECK(s.subset_of(c));
        CHECK((c - s).count() == n - 2);
        CHECK(s.elements().back() == n - 1);
    }
}

TEST_CASE("attractors on arenas beyond one word") {
    // a long Eve chain into a Büchi loop: every vertex is attracted with
    // rank equal to its distance
    const std::size_t n = 100;
    Arena::Builder b("chain", 1);
    for (std::size_t v = 0; v + 1 < n; ++v) b.add_vertex(Player::Eve, 1);
    b.add_vertex(Player::Eve, 0);
    for (std::size_t v = 0; v + 1 < n; ++v) b.edge(v, v + 1);
    b.edge(n - 1, n - 1);
    Arena a = b.build();
    auto at = attractor(a, a.buchi_set());
    CHECK(at.set == a.full_set());
    for (std::size_t v = 0; v < n; ++v) CHECK(at.rank[v] == n - 1 - v);
    CHECK(bounded_attractor(a, a.buchi_set(), 10).count() == 11);
}
