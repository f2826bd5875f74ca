#include "doctest.h"

#include "finitary/collapse.hpp"
#include "finitary/enumerate.hpp"
#include "finitary/fixtures.hpp"
#include "finitary/oracle.hpp"
#include "finitary/solvers.hpp"
#include "finitary/unfold.hpp"

using namespace finitary;

TEST_CASE("catalog: listing and default builds") {
    auto infos = list_examples();
    CHECK(infos.size() >= 12);
    for (auto& info : infos) {
        CHECK(!info.provenance.empty());
        Fixture f = build_example(info.name);
        if (f.is_arena()) {
            CHECK(validate(f.arena()).ok());
        } else {
            CHECK(f.process().num_states() >= 1);
        }
        CHECK(!f.claims.empty());
    }
    CHECK_THROWS_AS(build_example("nonesuch"), UnknownExample);
    CHECK_THROWS_AS(build_example("adam-memory", {{"n", 0}}), BadParams);
}

TEST_CASE("fig3 transcription") {
    Fixture f = build_example("fig3");
    const Arena& a = f.arena();
    CHECK(a.num_vertices() == 3);
    CHECK(a.num_edges() == 4);
    CHECK(a.buchi_set() == VertexSet::of(3, {0, 2}));
}

TEST_CASE("adam-memory(3): fan-out and corridor length") {
    Fixture f = build_example("adam-memory", {{"n", 3}});
    const Arena& a = f.arena();
    CHECK(a.num_vertices() == 1 + 3 + 9);
    CHECK(a.outdegree(0) == 3);  // Adam's choice fan-out
    // Eve's pick vertices see two rows each
    for (std::size_t v = 1; v <= 3; ++v) CHECK(a.outdegree(v) == 2);
    CHECK(a.buchi_set().count() == 3);  // one Büchi vertex per row
}

TEST_CASE("boundunknown(n): the bound cannot be announced") {
    Fixture f = build_example("boundunknown", {{"n", 4}});
    const Arena& a = f.arena();
    SolveOptions ro;
    ro.strategies = false;
    VertexSet fset = a.buchi_set();
    CHECK(solve_finitary_buchi(a, fset, ro).eve_region.test(0));
    for (long nbound = 0; nbound < 4; ++nbound)
        CHECK(!solve_uniform_buchi(a, fset, nbound, ro).eve_region.test(0));
    CHECK(solve_uniform_buchi(a, fset, 4, ro).eve_region.test(0));
}

TEST_CASE("uniparity: memory is needed and two states suffice") {
    Fixture f = build_example("uniparity");
    const Arena& a = f.arena();
    Condition check = Condition::bnd_uniform_parity(3);
    VertexSet from = VertexSet::of(a.num_vertices(), {0});

    bool some_positional_wins = false;
    enumerate_positional(a, Player::Eve, [&](const Strategy& s) {
        if (verify(a, s, check, from).holds) some_positional_wins = true;
        return !some_positional_wins;
    });
    CHECK(!some_positional_wins);

    auto mm = oracle_min_memory(a, Player::Eve, check, from, 2);
    REQUIRE(mm.has_value());
    CHECK(mm->states == 2);
    CHECK(verify(a, mm->strategy, check, from).holds);

    // plain parity and finitary parity are won everywhere here
    CHECK(solve_parity(a).eve_region == a.full_set());
    CHECK(solve_finitary_parity(a).eve_region == a.full_set());
}

TEST_CASE("bndparity-rounds(3): no positional strategy meets the bound") {
    Fixture f = build_example("bndparity-rounds", {{"n", 3}});
    const Arena& a = f.arena();
    Condition check = Condition::bnd_uniform_parity(5);
    VertexSet from = VertexSet::of(a.num_vertices(), {0});

    bool some_positional_wins = false;
    enumerate_positional(a, Player::Eve, [&](const Strategy& s) {
        if (verify(a, s, check, from).holds) some_positional_wins = true;
        return !some_positional_wins;
    });
    CHECK(!some_positional_wins);

    auto mm = oracle_min_memory(a, Player::Eve, check, from, 2);
    REQUIRE(mm.has_value());
    CHECK(mm->states == 2);
}

TEST_CASE("onecounter(2): the primorial bound shows up in the unfolding") {
    Fixture f = build_example("onecounter", {{"n", 2}});
    const PushdownProcess& p = f.process();
    auto u = unfold(p, 16, parse_config(p, "i:\u22a5"), OverflowPolicy::LoseEve);
    CHECK(validate(u.arena).ok());
    auto bound = minimal_uniform_bound(u.arena, u.arena.buchi_set(), u.start_vertex, 1 << 12);
    REQUIRE(bound.has_value());
    CHECK(*bound >= 6);
}

TEST_CASE("bincounter(3): a deterministic process with one Büchi state") {
    Fixture f = build_example("bincounter", {{"n", 3}});
    const PushdownProcess& p = f.process();
    std::size_t fcount = 0;
    for (std::size_t q = 0; q < p.num_states(); ++q) fcount += p.color[q] == 0;
    CHECK(fcount == 1);
    auto run = simulate_deterministic(p, Configuration{0, {}});
    CHECK(run.flat_cycle);
    CHECK(run.sup_gap > 0);
}

TEST_CASE("nested: sketch-derived process builds and unfolds") {
    Fixture f = build_example("nested", {{"n", 1}, {"k", 2}});
    const PushdownProcess& p = f.process();
    auto u = unfold(p, 6, parse_config(p, "P1:\u22a5"), OverflowPolicy::LoseEve);
    CHECK(validate(u.arena).ok());
}

TEST_CASE("adam-memory(4): solver strategy within four states, no positional") {
    Fixture f = build_example("adam-memory", {{"n", 4}});
    const Arena& a = f.arena();
    VertexSet fset = a.buchi_set();
    Condition cond = Condition::bnd_uniform_buchi(fset, 5);

    bool positional_wins = false;
    enumerate_positional(a, Player::Adam, [&](const Strategy& s) {
        if (verify(a, s, cond, a.full_set()).holds) positional_wins = true;
        return !positional_wins;
    });
    CHECK(!positional_wins);

    auto r = solve_bnd_uniform_buchi(a, fset, 5);
    REQUIRE(r.adam_strategy.has_value());
    CHECK(r.adam_strategy->states() <= 4);
    CHECK(r.adam_region.test(0));
    CHECK(verify(a, *r.adam_strategy, cond, r.adam_region).holds);
}

TEST_CASE("doubleexp(1): the measured bound clears two to the primorial") {
    Fixture f = build_example("doubleexp", {{"n", 1}});
    const PushdownProcess& p = f.process();
    auto u = unfold(p, 6, parse_config(p, "i:\u22a5"), OverflowPolicy::LoseEve);
    auto bound = minimal_uniform_bound(u.arena, u.arena.buchi_set(), u.start_vertex, 1 << 12);
    REQUIRE(bound.has_value());
    CHECK(*bound >= (1L << nth_primorial(1)));
}
