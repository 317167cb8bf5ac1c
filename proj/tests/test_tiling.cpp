#include <doctest.h>

#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"
#include "rrg/tiling.hpp"

using namespace rrg;

TEST_SUITE_BEGIN("tiling");

TEST_CASE("base case: two heptagons sharing an edge") {
    TilingGraph t = base_tiling(7);
    CHECK(t.graph.n() == 12);
    CHECK(t.graph.edge_count() == 13);
    CHECK(t.faces.size() == 2);
    CHECK(t.border.size() == 12);
    CHECK_NOTHROW(validate_tiling(t));
    CHECK_THROWS_AS(base_tiling(8), std::invalid_argument);
    CHECK_THROWS_AS(base_tiling(5), std::invalid_argument);
}

TEST_CASE("growth steps stay valid") {
    TilingGraph t = base_tiling(7);
    for (int i = 2; i <= 6; ++i) {
        t = tiling_step(t);
        CHECK(t.generation == i);
        CHECK_NOTHROW(validate_tiling(t));
    }
    CHECK(build_tiling(7, 3).graph.n() == 36);

    // distances between old vertices are preserved by a step (convexity)
    TilingGraph a = build_tiling(7, 3);
    TilingGraph b = tiling_step(a);
    for (int u = 0; u < a.graph.n(); u += 5)
        for (int v = 0; v < a.graph.n(); v += 7)
            CHECK(dist(a.graph, u, v) == dist(b.graph, u, v));
}

TEST_CASE("antipode is a fixed-point-free border-halving involution") {
    TilingGraph t = build_tiling(7, 4);
    for (int v : t.border) {
        CHECK(t.antipode[std::size_t(t.antipode[std::size_t(v)])] == v);
        CHECK(t.antipode[std::size_t(v)] != v);
    }
}

TEST_CASE("automorphism group has order 4 for small generations") {
    for (int i = 1; i <= 4; ++i) {
        TilingGraph t = build_tiling(7, i);
        HomOptions o;
        o.bijective = true;
        CHECK(search_homs(t.graph, t.graph, o).maps.size() == 4);
    }
}

TEST_CASE("find_u fails on the tiny generations") {
    TilingGraph t = base_tiling(7);
    CHECK(!find_u(t, 5).has_value());
    CHECK_THROWS_AS(find_u(t, 4), std::invalid_argument);
}

TEST_CASE("the first accepting generation at g=7") {
    AcceptedTiling acc = first_accepting_tiling(7);
    // pinned: found by incremental search, recorded as a regression value
    CHECK(acc.generation == 5);
    CHECK(acc.tiling.graph.n() == 112);
    CHECK(acc.factor.h == 5);
    CHECK(acc.factor.u.size() == 10);

    const TilingFactor& f = acc.factor;
    CHECK(is_regular(f.t_prime, 3));
    CHECK(is_regular(f.t.with_edges({{f.u[0], f.u[1]}}), 3));
    CHECK(f.t.degree(f.u[0]) == 2);
    CHECK(f.t.degree(f.u[1]) == 2);

    // |E(T')| - |E(G)| is half the number of degree-2 vertices
    long long deg2 = 0;
    for (int v = 0; v < f.base.n(); ++v)
        if (f.base.degree(v) == 2) ++deg2;
    CHECK(f.t_prime.edge_count() - f.base.edge_count() == deg2 / 2);

    // distance conditions of the accepted tiling
    for (int v : acc.tiling.border) {
        auto d = dist(acc.tiling.graph, v, acc.tiling.antipode[std::size_t(v)]);
        REQUIRE(d.has_value());
        CHECK(*d >= 7);
    }
    for (std::size_t i = 0; i < f.u.size(); ++i)
        for (std::size_t j = i + 1; j < f.u.size(); ++j) {
            auto d = dist(f.base, f.u[i], f.u[j]);
            REQUIRE(d.has_value());
            CHECK(*d >= 7);
        }

    CHECK(u_spread_check(f));
    CHECK(odd_girth(f.t_bar) == 7);
    // removing the straight edges leaves the odd girth at g: the base
    // graph's own cycles survive
    CHECK(odd_girth(f.t_bar.without_edges(f.straight_edges())) == 7);

    // rigidity of the factor
    CHECK(is_rigid(f.t));
    CHECK(!hom_exists(f.t, f.t_prime));
    CHECK(!hom_exists(f.t_prime, f.t));
}

TEST_CASE("factor construction rejects bad U") {
    AcceptedTiling acc = first_accepting_tiling(7);
    std::vector<int> u = acc.factor.u;
    std::swap(u[0], u[1 + u.size() / 2]);  // breaks the antipodal pairing
    CHECK_THROWS_AS(build_factor(acc.tiling, u), std::invalid_argument);
}

TEST_SUITE_END();
