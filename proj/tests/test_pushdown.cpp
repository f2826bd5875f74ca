#include "doctest.h"

#include "finitary/collapse.hpp"
#include "finitary/fixtures.hpp"
#include "finitary/restart.hpp"
#include "finitary/unfold.hpp"

using namespace finitary;

TEST_CASE("successors follow the transition semantics") {
    PushdownProcess p;
    p.name = "tiny";
    p.max_color = 1;
    int a = p.add_symbol("a");
    std::size_t s0 = p.add_state("p", Player::Eve, 0);
    std::size_t s1 = p.add_state("q", Player::Eve, 1);
    p.push(s0, kBottom, a, s1);
    p.pop(s1, a, s0);

    Configuration c0{s0, {}};
    auto succ = successors(p, c0);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].state == s1);
    CHECK(succ[0].stack == std::vector<int>{a});

    auto succ1 = successors(p, Configuration{s1, {a}});
    REQUIRE(succ1.size() == 1);
    CHECK(succ1[0].state == s0);
    CHECK(succ1[0].stack.empty());

    // a pop requires the matching top symbol
    PushdownProcess q = p;
    int b = q.add_symbol("b");
    CHECK(successors(q, Configuration{s1, {b}}).empty());
}

TEST_CASE("pushdown text format round-trips") {
    Fixture f = build_example("credit");
    std::string text = pushdown_to_string(f.process());
    PushdownProcess back = parse_pushdown(text);
    CHECK(pushdown_to_string(back) == text);
    CHECK(back.num_states() == 5);
    // configurations print top-left with the bottom marker
    Configuration c = parse_config(back, "q0:ab\u22a5");
    CHECK(config_to_string(back, c) == "q0:ab\u22a5");
    CHECK(c.top() == back.symbol("a"));
}

TEST_CASE("unfold: round-robin size, skip-only isomorphism, dead ends") {
    Fixture rr = build_example("round-robin");
    auto u = unfold(rr.process(), 3, parse_config(rr.process(), "p:\u22a5"),
                    OverflowPolicy::Drop);
    CHECK(validate(u.arena).ok());
    CHECK(u.arena.num_vertices() <= 2 * (3 + 1) * 1);

    // a skip-only process unfolds to its control graph at height 0
    PushdownProcess skips;
    skips.name = "skips";
    skips.max_color = 1;
    std::size_t s0 = skips.add_state("u", Player::Eve, 0);
    std::size_t s1 = skips.add_state("v", Player::Adam, 1);
    skips.skip(s0, kBottom, s1);
    skips.skip(s1, kBottom, s0);
    auto u0 = unfold(skips, 0, Configuration{s0, {}});
    CHECK(u0.arena.num_vertices() == 2);
    CHECK(u0.arena.num_edges() == 2);

    // stuck configurations are rejected with a diagnostic
    PushdownProcess stuck;
    stuck.max_color = 1;
    int a = stuck.add_symbol("a");
    std::size_t t0 = stuck.add_state("w", Player::Eve, 0);
    stuck.pop(t0, a, t0);
    CHECK_THROWS_AS(unfold(stuck, 2, Configuration{t0, {}}), DeadEndConfiguration);
}

TEST_CASE("unfold: overflow policies") {
    Fixture rr = build_example("round-robin");
    auto lose = unfold(rr.process(), 2, Configuration{0, {}}, OverflowPolicy::LoseEve);
    REQUIRE(lose.overflow_vertices.size() == 1);
    std::size_t sink = lose.overflow_vertices[0];
    CHECK(lose.arena.color(sink) == 1);
    CHECK(lose.arena.owner(sink) == Player::Adam);

    auto drop = unfold(rr.process(), 2, Configuration{0, {}}, OverflowPolicy::Drop);
    CHECK(drop.overflow_vertices.empty());
    CHECK(drop.arena.num_vertices() < lose.arena.num_vertices());
}

TEST_CASE("collapse bound: exact small values") {
    CHECK(collapse_bound_upper(1, 1) == 1);
    CHECK(collapse_bound_upper(2, 1) == 4);
    CHECK(collapse_bound_upper(2, 2) == 128);
    CHECK_THROWS_AS(collapse_bound_upper(40, 40), Overflow);
}

TEST_CASE("deterministic simulation: all-F loop and the counter") {
    PushdownProcess p;
    p.max_color = 1;
    std::size_t s0 = p.add_state("f", Player::Eve, 0);
    p.skip(s0, kBottom, s0);
    auto run = simulate_deterministic(p, Configuration{s0, {}});
    CHECK(run.flat_cycle);
    CHECK(run.sup_gap == 0);

    for (long n = 2; n <= 6; ++n) {
        Fixture bc = build_example("bincounter", {{"n", n}});
        auto r = simulate_deterministic(bc.process(), Configuration{0, {}});
        REQUIRE(r.sup_gap >= 0);
        CHECK((unsigned long long)(r.sup_gap) <=
              collapse_bound_upper_saturated(bc.process().num_states(), bc.process().alphabet_size()));
        if (n >= 3) {
            Fixture prev = build_example("bincounter", {{"n", n - 1}});
            auto rp = simulate_deterministic(prev.process(), Configuration{0, {}});
            double ratio = double(r.sup_gap) / double(rp.sup_gap);
            CHECK(ratio > 1.5);
            CHECK(ratio < 2.5);
        }
    }

    // nondeterminism is reported
    Fixture credit = build_example("credit");
    CHECK_THROWS_AS(simulate_deterministic(credit.process(), Configuration{0, {}}),
                    Nondeterministic);
}

TEST_CASE("deterministic simulation: increasing-height run") {
    // one state pushing forever in F: a growing stack, gap 0
    PushdownProcess p;
    p.max_color = 1;
    int a = p.add_symbol("a");
    std::size_t s0 = p.add_state("f", Player::Eve, 0);
    p.push_any(s0, a, s0);
    auto run = simulate_deterministic(p, Configuration{s0, {}});
    CHECK(!run.flat_cycle);
    CHECK(run.sup_gap == 0);

    // pushing outside F forever: the gap is infinite
    PushdownProcess q;
    q.max_color = 1;
    int b = q.add_symbol("b");
    std::size_t t0 = q.add_state("g", Player::Eve, 1);
    q.push_any(t0, b, t0);
    auto run2 = simulate_deterministic(q, Configuration{t0, {}});
    CHECK(run2.sup_gap == -1);
}

TEST_CASE("restart gadget: shape and neutrality") {
    PushdownProcess p;
    p.name = "one-edge";
    p.max_color = 3;
    std::size_t s0 = p.add_state("u", Player::Eve, 1);
    std::size_t s1 = p.add_state("v", Player::Adam, 2);
    p.skip(s0, kBottom, s1);
    p.skip(s1, kBottom, s0);

    PushdownProcess g = restart_gadget(p);
    // three gadget states per original transition
    CHECK(g.num_states() == p.num_states() + 3 * p.transitions.size());
    CHECK(g.max_color == 4);
    CHECK(g.symbol("#") != kBottom);

    // never restarting reproduces the original plays modulo the choice states
    auto u = unfold(g, 2, Configuration{s0, {}}, OverflowPolicy::Drop);
    CHECK(validate(u.arena).ok());

    PushdownProcess even;
    even.max_color = 2;
    std::size_t e0 = even.add_state("w", Player::Eve, 0);
    even.skip(e0, kBottom, e0);
    CHECK_THROWS_AS(restart_gadget(even), EvenMaxColor);
}

TEST_CASE("credit game verdicts at a fixed height") {
    Fixture credit = build_example("credit");
    const PushdownProcess& p = credit.process();
    Configuration start = parse_config(p, "q0:\u22a5");
    // pushes must be dropped at the cap: a losing sink would hand Adam an
    // artificial overflow win
    auto u = unfold(p, 5, start, OverflowPolicy::Drop);
    SolveOptions ro;
    ro.strategies = false;
    VertexSet f = u.arena.buchi_set();
    CHECK(solve_uniform_buchi(u.arena, f, 0, ro).eve_region.test(u.start_vertex));
    CHECK(!solve_bnd_uniform_buchi(u.arena, f, 1, ro).eve_region.test(u.start_vertex));
}

TEST_CASE("stabilization over heights") {
    Fixture sw = build_example("switch");
    const PushdownProcess& p = sw.process();
    Configuration start = parse_config(p, "q:\u22a5");
    auto st = stabilize_over_heights<long>(
        p, start,
        [&](const UnfoldResult& u) -> std::optional<long> {
            auto b = minimal_uniform_bound(u.arena, u.arena.buchi_set(), u.start_vertex, 1 << 12);
            return b ? std::optional<long>(*b) : std::nullopt;
        },
        1, 10, 3);
    REQUIRE(st.stabilized);
    CHECK(*st.value == 2);
}

TEST_CASE("unfolding soundness: arena edges mirror configuration successors") {
    for (const char* name : {"round-robin", "credit", "switch"}) {
        Fixture fx = build_example(name);
        const PushdownProcess& p = fx.process();
        auto u = unfold(p, 4, parse_config(p, fx.start), OverflowPolicy::Drop);
        for (std::size_t v = 0; v < u.arena.num_vertices(); ++v) {
            auto expected = successors(p, u.configs[v]);
            std::vector<Configuration> in_range;
            for (auto& d : expected)
                if (d.height() <= 4) in_range.push_back(d);
            auto succ = u.arena.successors(v);
            REQUIRE(succ.size() == in_range.size());
            for (std::size_t k = 0; k < succ.size(); ++k)
                CHECK(u.configs[succ[k]] == in_range[k]);
        }
    }
}

TEST_CASE("monotone refinement of LoseEve unfoldings") {
    for (const char* name : {"round-robin", "switch", "onecounter"}) {
        Fixture fx = build_example(name);
        const PushdownProcess& p = fx.process();
        SolveOptions ro;
        ro.strategies = false;
        std::map<std::string, bool> prev;
        for (std::size_t h = 1; h <= 5; ++h) {
            UnfoldResult u = unfold(p, h, parse_config(p, fx.start), OverflowPolicy::LoseEve);
            auto r = solve_buchi(u.arena, u.arena.buchi_set(), ro);
            std::map<std::string, bool> cur;
            for (std::size_t v = 0; v < u.arena.num_vertices(); ++v) {
                bool overflow = false;
                for (auto o : u.overflow_vertices) overflow |= (o == v);
                if (!overflow) cur[config_to_string(p, u.configs[v])] = r.eve_region.test(v);
            }
            for (auto& [conf, winning] : prev)
                if (winning && cur.count(conf)) CHECK(cur[conf]);
            prev = std::move(cur);
        }
    }
}

TEST_CASE("solve_unfolded wraps unfolding and solving") {
    Fixture fx = build_example("switch");
    const PushdownProcess& p = fx.process();
    Configuration start = parse_config(p, fx.start);
    auto r = solve_unfolded(p, 5, start, ConditionKind::UniformBuchi, 2);
    CHECK(r.eve_region.test(0));
    auto r0 = solve_unfolded(p, 5, start, ConditionKind::UniformBuchi, 1);
    CHECK(!r0.eve_region.test(0));
    auto rb = solve_unfolded(p, 5, start, ConditionKind::Buchi);
    CHECK(rb.eve_region.test(0));
}
