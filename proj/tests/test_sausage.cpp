#include <doctest.h>

#include <random>

#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"
#include "rrg/sausage.hpp"

using namespace rrg;

namespace {

bool every_vertex_on_underlying_triangle(const Digraph& d) {
    Graph u = d.underlying();
    for (int v = 0; v < u.n(); ++v) {
        bool on = false;
        u.neighbours(v).for_each([&](int a) {
            if (on) return;
            u.neighbours(v).for_each([&](int b) {
                if (a < b && u.adjacent(a, b)) on = true;
            });
        });
        if (!on) return false;
    }
    return true;
}

} // namespace

TEST_SUITE_BEGIN("sausage");

TEST_CASE("fmap basics") {
    FMap f(4, 3, "--+00-");
    CHECK(f.at(1, 3) == FMap::Minus);
    CHECK(f.at(1, 2) == FMap::Minus);
    CHECK(f.at(2, 3) == FMap::Plus);
    CHECK(f.at(2, 2) == FMap::Zero);
    CHECK(f.at(3, 3) == FMap::Zero);
    CHECK(f.at(3, 2) == FMap::Minus);
    CHECK(f.text() == "--+00-");
}

TEST_CASE("fmap order and involution") {
    // f == 0 is below everything
    for (const auto& g : FMap::all(3, 2)) CHECK(FMap::constant(3, 2, FMap::Zero).leq(g));

    CHECK(FMap::constant(3, 1, FMap::Plus).inv() == FMap::constant(3, 1, FMap::Minus));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        int d = 3 + int(rng() % 3), l = 1 + int(rng() % 3);
        FMap f(d, l);
        for (int i = 1; i <= l; ++i)
            for (int j = 2; j <= d - 1; ++j)
                f.set(i, j, FMap::Sign(int(rng() % 3) - 1));
        CHECK(f.inv().inv() == f);
        CHECK(f.leq(f));
    }

    CHECK_THROWS_AS(FMap(3, 1).leq(FMap(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(FMap(3, 1, "++"), std::invalid_argument);
}

TEST_CASE("sausage shape") {
    Sausage s = build_sausage(3, 1, FMap::constant(3, 1, FMap::Plus));
    CHECK(s.digraph.n() == 14);  // 2*1*3 + 2*2 + 4
    CHECK(is_connected(s.digraph));
    CHECK(s.digraph.is_oriented());

    // S(4,3,f) of the f above: 34 vertices, degree profile from the 0-cells
    Sausage t = build_sausage(4, 3, FMap(4, 3, "--+00-"));
    CHECK(t.digraph.n() == 34);
    int deg3 = 0;
    for (int v = 0; v < t.digraph.n(); ++v) {
        int deg = t.digraph.total_degree(v);
        CHECK((deg == 4 || deg == 3));
        if (deg == 3) ++deg3;
    }
    CHECK(deg3 == 4);  // two 0-cells, two endpoints each
    CHECK(t.digraph.total_degree(t.t_plus[1][1]) == 3);   // v_2(T_+^2), f(2,2) = 0
    CHECK(t.digraph.total_degree(t.t_minus[1][2]) == 3);  // v_3(T_-^2)
    CHECK(t.digraph.total_degree(t.t_plus[2][2]) == 3);   // v_3(T_+^3), f(3,3) = 0
    CHECK(t.digraph.total_degree(t.t_minus[2][1]) == 3);  // v_2(T_-^3)
    CHECK(t.name_of(t.t_plus[1][1]) == "v2(T+^2)");

    // every vertex lies on an oriented triangle and on an oriented odd cycle
    // of length exactly 3
    CHECK(every_vertex_on_underlying_triangle(s.digraph));
    CHECK(every_vertex_on_underlying_triangle(t.digraph));
    CHECK(odd_girth(s.digraph) == 3);
}

TEST_CASE("degree law on random shapes") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        int d = 3 + int(rng() % 5);  // up to 7
        int l = 1 + int(rng() % 4);
        FMap f(d, l);
        int zeros = 0;
        for (int i = 1; i <= l; ++i)
            for (int j = 2; j <= d - 1; ++j) {
                FMap::Sign s = FMap::Sign(int(rng() % 3) - 1);
                f.set(i, j, s);
                if (s == FMap::Zero) ++zeros;
            }
        Sausage s = build_sausage(d, l, f);
        CHECK(s.digraph.n() == 2 * l * d + 2 * (d - 1) + 4);
        int deficient = 0;
        for (int v = 0; v < s.digraph.n(); ++v)
            if (s.digraph.total_degree(v) == d - 1) ++deficient;
        CHECK(deficient == 2 * zeros);
    }
}

TEST_CASE("hom-count formula matches the engine exhaustively for d=3") {
    for (int l = 1; l <= 2; ++l)
        for (int lp = 1; lp <= 2; ++lp) {
            auto fs = FMap::all(3, l);
            auto gs = FMap::all(3, lp);
            for (const auto& f : fs)
                for (const auto& g : gs) {
                    Sausage a = build_sausage(3, l, f);
                    Sausage b = build_sausage(3, lp, g);
                    long long engine = hom_count(a.digraph, b.digraph);
                    int formula = f.l() == g.l() ? hom_count_formula(f, g) : 0;
                    CAPTURE(f.text());
                    CAPTURE(g.text());
                    CHECK(engine == formula);
                }
        }
}

TEST_CASE("specific hom counts from the formula") {
    FMap plus1 = FMap::constant(3, 1, FMap::Plus);
    FMap zero1 = FMap::constant(3, 1, FMap::Zero);
    CHECK(hom_count_formula(plus1, plus1) == 1);  // S(3,1,+) is rigid
    CHECK(hom_count_formula(zero1, plus1) == 2);
    Sausage sp = build_sausage(3, 1, plus1);
    CHECK(is_rigid(sp.digraph));

    // different l gives no homomorphisms at all
    Sausage sp2 = build_sausage(3, 2, FMap::constant(3, 2, FMap::Plus));
    CHECK(!hom_exists(sp.digraph, sp2.digraph));
    CHECK(!hom_exists(sp2.digraph, sp.digraph));
}

TEST_CASE("families F1 and F2") {
    for (int d = 3; d <= 4; ++d) {
        Sausage f1 = family_f1(d, 1);
        for (int v = 0; v < f1.digraph.n(); ++v) CHECK(f1.digraph.total_degree(v) == d);

        SausageIndicator f2 = family_f2(d, 2);
        int low = 0;
        for (int v = 0; v < f2.sausage.digraph.n(); ++v) {
            int deg = f2.sausage.digraph.total_degree(v);
            if (deg == d - 1) ++low;
        }
        CHECK(low == 2);
        CHECK(f2.sausage.digraph.total_degree(f2.u) == d - 1);
        CHECK(f2.sausage.digraph.total_degree(f2.v) == d - 1);

        // any oriented path between u and v has length >= 3
        auto dd = dist(f2.sausage.digraph, f2.u, f2.v);
        REQUIRE(dd.has_value());
        CHECK(*dd >= 3);
    }

    // mutual rigidity of the first members
    std::vector<Digraph> f1s;
    for (int l = 1; l <= 3; ++l) f1s.push_back(family_f1(3, l).digraph);
    CHECK(mutually_rigid(f1s));

    CHECK_THROWS_AS(family_f2(3, 1), std::invalid_argument);
}

TEST_SUITE_END();
