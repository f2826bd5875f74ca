#include "doctest.h"

#include "finitary/solvers.hpp"
#include "test_util.hpp"

using namespace finitary;
using testutil::fig3_like;
using testutil::random_arena;

namespace {

void check_strategies(const Arena& a, const SolveResult& r) {
    if (r.eve_strategy && r.eve_region.any()) {
        auto v = verify(a, *r.eve_strategy, r.condition, r.eve_region);
        CHECK_MESSAGE(v.holds, "eve strategy fails for ", condition_name(r.condition.kind), " on ",
                      a.name());
    }
    if (r.adam_strategy && r.adam_region.any()) {
        auto v = verify(a, *r.adam_strategy, r.condition, r.adam_region);
        CHECK_MESSAGE(v.holds, "adam strategy fails for ", condition_name(r.condition.kind),
                      " on ", a.name());
    }
}

} // namespace

TEST_CASE("safety: figure values and trivial sets") {
    Arena a = fig3_like();
    auto r = solve_safety(a, VertexSet::of(3, {0, 2}));
    CHECK(r.eve_region == VertexSet::of(3, {2}));
    CHECK(solve_safety(a, a.full_set()).eve_region == a.full_set());
    CHECK(solve_safety(a, a.empty_set()).eve_region.empty());
    check_strategies(a, r);
}

TEST_CASE("buchi and cobuchi") {
    Arena a = fig3_like();
    VertexSet f = a.buchi_set();
    auto r = solve_buchi(a, f);
    CHECK(r.eve_region == a.full_set());
    CHECK(solve_buchi(a, a.full_set()).eve_region == a.full_set());
    check_strategies(a, r);

    // cobuchi equals owner-swapped buchi complement
    for (unsigned seed = 1; seed <= 20; ++seed) {
        Arena b = random_arena(seed, 1);
        VertexSet fb = b.buchi_set();
        auto cb = solve_cobuchi(b, fb);
        auto sw = solve_buchi(b.owner_swapped(), fb);
        CHECK(cb.eve_region == sw.adam_region);
        check_strategies(b, cb);
    }
}

TEST_CASE("parity: constant-parity colorings") {
    Arena::Builder b("evens", 2);
    b.add_vertex(Player::Adam, 0);
    b.add_vertex(Player::Eve, 2);
    b.edge(0, 1).edge(1, 0);
    Arena a = b.build();
    CHECK(solve_parity(a).eve_region == a.full_set());

    Arena::Builder c("odds", 1);
    c.add_vertex(Player::Adam, 1);
    c.add_vertex(Player::Eve, 1);
    c.edge(0, 1).edge(1, 0);
    Arena ao = c.build();
    CHECK(solve_parity(ao).eve_region.empty());
}

TEST_CASE("parity strategies verify on random arenas") {
    for (unsigned seed = 1; seed <= 30; ++seed) {
        Arena a = random_arena(seed, 3);
        auto r = solve_parity(a);
        CHECK((r.eve_region & r.adam_region).empty());
        CHECK((r.eve_region | r.adam_region) == a.full_set());
        check_strategies(a, r);
    }
}

TEST_CASE("bounded uniform buchi: figure value, trivial cases, strategies") {
    Arena a = fig3_like();
    VertexSet f = a.buchi_set();
    auto r = solve_bnd_uniform_buchi(a, f, 0);
    CHECK(r.eve_region == VertexSet::of(3, {2}));
    check_strategies(a, r);

    CHECK(solve_bnd_uniform_buchi(a, a.full_set(), 0).eve_region == a.full_set());
    CHECK(solve_bnd_uniform_buchi(a, a.full_set(), 3).eve_region == a.full_set());

    auto r2 = solve_bnd_uniform_buchi(a, f, 2);
    check_strategies(a, r2);
}

TEST_CASE("uniform buchi: figure region, attractor inclusion, empty F") {
    Arena a = fig3_like();
    VertexSet f = a.buchi_set();
    auto r = solve_uniform_buchi(a, f, 0);
    CHECK(r.eve_region == a.full_set());
    check_strategies(a, r);

    auto bnd = solve_bnd_uniform_buchi(a, f, 0);
    CHECK(attractor(a, bnd.eve_region).set.subset_of(r.eve_region));
    // strict-inclusion witness from the figure
    CHECK(attractor(a, bnd.eve_region).set == VertexSet::of(3, {1, 2}));

    CHECK(solve_uniform_buchi(a, a.empty_set(), 0).eve_region.empty());
    CHECK(solve_uniform_buchi(a, a.empty_set(), 4).eve_region.empty());
}

TEST_CASE("finitary buchi: collapse to buchi on finite arenas") {
    Arena a = fig3_like();
    VertexSet f = a.buchi_set();
    auto r = solve_finitary_buchi(a, f);
    CHECK(r.eve_region == a.full_set());
    CHECK(solve_finitary_buchi(a, a.full_set()).eve_region == a.full_set());
    check_strategies(a, r);

    for (unsigned seed = 1; seed <= 25; ++seed) {
        Arena b = random_arena(seed, 1);
        VertexSet fb = b.buchi_set();
        auto fin = solve_finitary_buchi(b, fb);
        auto bu = solve_buchi(b, fb);
        CHECK(fin.eve_region == bu.eve_region);
        check_strategies(b, fin);
        CHECK(fin.eve_strategy->positional);
    }
}

TEST_CASE("monotonicity in N and the sandwich property") {
    SolveOptions ro;
    ro.strategies = false;
    for (unsigned seed = 1; seed <= 25; ++seed) {
        Arena a = random_arena(seed, 1);
        VertexSet f = a.buchi_set();
        VertexSet prev_bnd = solve_bnd_uniform_buchi(a, f, 0, ro).eve_region;
        VertexSet prev_uni = solve_uniform_buchi(a, f, 0, ro).eve_region;
        for (long n = 1; n <= 3; ++n) {
            VertexSet bnd = solve_bnd_uniform_buchi(a, f, n, ro).eve_region;
            VertexSet uni = solve_uniform_buchi(a, f, n, ro).eve_region;
            CHECK(prev_bnd.subset_of(bnd));
            CHECK(prev_uni.subset_of(uni));
            prev_bnd = bnd;
            prev_uni = uni;
        }
        VertexSet fin = solve_finitary_buchi(a, f, ro).eve_region;
        VertexSet bu = solve_buchi(a, f, ro).eve_region;
        for (long n = 0; n <= 3; ++n) {
            VertexSet bnd = solve_bnd_uniform_buchi(a, f, n, ro).eve_region;
            VertexSet uni = solve_uniform_buchi(a, f, n, ro).eve_region;
            CHECK(bnd.subset_of(uni));
            CHECK(uni.subset_of(fin));
            CHECK(fin.subset_of(bu));
            // if the uniform region is non-empty, so is the bounded one
            if (uni.any()) CHECK(bnd.any());
        }
    }
}

TEST_CASE("uniform and bounded-uniform strategies verify on random arenas") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        Arena a = random_arena(seed, 1);
        VertexSet f = a.buchi_set();
        for (long n = 0; n <= 2; ++n) {
            auto rb = solve_bnd_uniform_buchi(a, f, n);
            check_strategies(a, rb);
            CHECK(rb.eve_strategy->positional);
            if (rb.adam_strategy && !rb.adam_strategy->positional)
                CHECK(rb.adam_strategy->states() <= std::max<long>(n, 1));
            auto ru = solve_uniform_buchi(a, f, n);
            check_strategies(a, ru);
            CHECK(ru.eve_strategy->positional);
            if (ru.adam_strategy && !ru.adam_strategy->positional)
                CHECK(ru.adam_strategy->states() <= n + 1);
        }
    }
}

TEST_CASE("bounded and finitary parity: trivial colorings and the buchi case") {
    Arena::Builder b("evens", 2);
    b.add_vertex(Player::Adam, 0);
    b.add_vertex(Player::Eve, 2);
    b.edge(0, 1).edge(1, 0);
    Arena a = b.build();
    CHECK(solve_bnd_parity(a).eve_region == a.full_set());
    CHECK(solve_finitary_parity(a).eve_region == a.full_set());

    for (unsigned seed = 1; seed <= 20; ++seed) {
        Arena c = random_arena(seed, 1);
        auto bp = solve_bnd_parity(c);
        auto fb = solve_finitary_buchi(c, c.buchi_set());
        CHECK(bp.eve_region == fb.eve_region);
        auto fp = solve_finitary_parity(c);
        CHECK(fp.eve_region == fb.eve_region);
    }
}

TEST_CASE("parity-family strategies verify and respect the memory bound") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        Arena a = random_arena(seed, 3);
        int ell = 2;  // odd colors 1 and 3
        auto bp = solve_bnd_parity(a);
        check_strategies(a, bp);
        CHECK(bp.eve_strategy->states() <= ell + 1);
        auto fp = solve_finitary_parity(a);
        if (fp.eve_strategy && fp.eve_region.any()) {
            CHECK(fp.eve_strategy->states() <= ell + 1);
            CHECK(verify(a, *fp.eve_strategy, fp.condition, fp.eve_region).holds);
        }
    }
}

TEST_CASE("minimal uniform bound") {
    Arena a = fig3_like();
    VertexSet f = a.buchi_set();
    CHECK(minimal_uniform_bound(a, f, 0) == 0);

    // start in F with an Eve-owned self-loop
    Arena::Builder b("loop", 1);
    b.add_vertex(Player::Eve, 0);
    b.edge(0, 0);
    Arena al = b.build();
    CHECK(minimal_uniform_bound(al, al.buchi_set(), 0) == 0);

    // F unreachable
    Arena::Builder c("unreach", 1);
    c.add_vertex(Player::Eve, 1);
    c.add_vertex(Player::Eve, 0);
    c.edge(0, 0).edge(1, 1);
    Arena au = c.build();
    CHECK(!minimal_uniform_bound(au, au.buchi_set(), 0).has_value());
}

TEST_CASE("determinacy partition for every solver on random arenas") {
    SolveOptions ro;
    ro.strategies = false;
    for (unsigned seed = 1; seed <= 15; ++seed) {
        Arena a = random_arena(seed, 3);
        VertexSet f = a.color_set(0) | a.color_set(2);
        std::vector<SolveResult> results;
        results.push_back(solve_safety(a, f, ro));
        results.push_back(solve_buchi(a, f, ro));
        results.push_back(solve_cobuchi(a, f, ro));
        results.push_back(solve_parity(a, ro));
        results.push_back(solve_bnd_uniform_buchi(a, f, 2, ro));
        results.push_back(solve_uniform_buchi(a, f, 2, ro));
        results.push_back(solve_finitary_buchi(a, f, ro));
        results.push_back(solve_bnd_parity(a, ro));
        results.push_back(solve_finitary_parity(a, ro));
        for (auto& r : results) {
            CHECK((r.eve_region & r.adam_region).empty());
            CHECK((r.eve_region | r.adam_region) == a.full_set());
        }
    }
}

TEST_CASE("minimal uniform bound: cap handling") {
    // a two-vertex cycle with one Büchi vertex needs bound 1
    Arena::Builder b("cycle2", 1);
    b.add_vertex(Player::Eve, 1);
    b.add_vertex(Player::Eve, 0);
    b.edge(0, 1).edge(1, 0);
    Arena a = b.build();
    CHECK(minimal_uniform_bound(a, a.buchi_set(), 0) == 1);
    CHECK_THROWS_AS(minimal_uniform_bound(a, a.buchi_set(), 0, 0), CapExceeded);
}

TEST_CASE("bounded uniform region reaches the Büchi region at N = |V|") {
    SolveOptions ro;
    ro.strategies = false;
    for (unsigned seed = 1; seed <= 30; ++seed) {
        Arena a = random_arena(seed, 1);
        VertexSet f = a.buchi_set();
        if (solve_buchi(a, f, ro).eve_region != a.full_set()) continue;
        if (attractor(a, f).set != a.full_set()) continue;
        CHECK(solve_bnd_uniform_buchi(a, f, long(a.num_vertices()), ro).eve_region ==
              a.full_set());
    }
}
