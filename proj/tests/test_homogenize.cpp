#include <doctest.h>

#include "rrg/homogenize.hpp"
#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"

using namespace rrg;

namespace {

Monoid two_nongroup() { return Monoid({{0, 1}, {1, 1}}, 0); }

} // namespace

TEST_SUITE_BEGIN("homogenize");

TEST_CASE("stage D1") {
    StagedSystem d1 = stage_d1(two_nongroup());
    CHECK(d1.system.n() == 2);
    CHECK(d1.endos.size() == 2);
    CHECK(verify_end_transport(d1));
    CHECK(d1.poset.class_count() == 2);
    CHECK(!d1.degree_constant());
}

TEST_CASE("step1 on the order-2 non-group with k = 1") {
    Monoid m = two_nongroup();
    StagedSystem d1 = stage_d1(m);
    std::map<int, int> k{{0, 1}, {1, 1}};
    StagedSystem d2 = step1(d1, m, k);
    CHECK(d2.system.n() == 4);  // e, a, one pad vertex, z
    CHECK(d2.endos.size() == 2);
    CHECK(verify_end_transport(d2));

    // degree law: new non-z vertex has degree |units| + 1 = 2
    CHECK(d2.system.total_degree(2) == 2);
    CHECK(d2.degree_constant_per_class());
    CHECK(d2.has_increasing_degree_property());

    CHECK_THROWS_AS(step1(d1, m, std::map<int, int>{{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(step1(stage_d1(Monoid({{0, 1}, {1, 0}}, 0)), Monoid({{0, 1}, {1, 0}}, 0), k),
                    std::invalid_argument);
}

TEST_CASE("step2 on a staged system") {
    Monoid m = two_nongroup();
    StagedSystem d2 = step1(stage_d1(m), m, choose_step1_k(stage_d1(m), m));

    // raise the ideal of minimum-degree classes on the component of vertex 0
    int lowest = d2.poset.end_class[0];
    StagedSystem d2b = step2(d2, {lowest}, 2, "s2#t");
    CHECK(verify_end_transport(d2b));
    CHECK(d2b.endos.size() == 2);
    // ideal classes gain 2k, the rest gain k+1
    CHECK(d2b.system.total_degree(0) == d2.system.total_degree(0) + 4);
    CHECK(d2b.system.total_degree(1) == d2.system.total_degree(1) + 3);
    // pad sizes: k for ideal classes, 1 otherwise
    CHECK(d2b.system.n() == d2.system.n() + 2 + (d2.system.n() - 1));

    // colour p includes the loops (v_i, v_i)
    int pc = d2b.system.colour_index("s2#t:p");
    REQUIRE(pc >= 0);
    bool loop_found = false;
    for (auto [u, v] : d2b.system.arcs(pc))
        if (u == v) loop_found = true;
    CHECK(loop_found);

    CHECK_THROWS_AS(step2(d2, {d2.poset.end_class[1]}, 2, "x"), std::invalid_argument);  // not an ideal
}

TEST_CASE("step3 doubles and equalizes") {
    // already-regular input: output degree delta+1, single new colour
    Monoid z2({{0, 1}, {1, 0}}, 0);
    StagedSystem d1 = stage_d1(z2);
    REQUIRE(d1.degree_constant());
    StagedSystem d4 = step3(d1);
    CHECK(d4.system.n() == 2 * d1.system.n());
    CHECK(d4.degree_constant());
    CHECK(d4.system.total_degree(0) == d1.system.total_degree(0) + 1);
    CHECK(d4.system.colour_count() == d1.system.colour_count() + 1);
    CHECK(verify_end_transport(d4));
}

TEST_CASE("full pipeline for the trivial monoid and groups") {
    Monoid trivial({{0}}, 0);
    StagedSystem out = homogenize(trivial);
    CHECK(out.stage == Stage::D1);
    CHECK(out.system.n() == 1);
    CHECK(out.endos.size() == 1);

    Monoid z2({{0, 1}, {1, 0}}, 0);
    StagedSystem g = homogenize(z2);
    CHECK(g.stage == Stage::D1);
    CHECK(g.degree_constant());
    CHECK(g.system.total_degree(0) == 2);
}

TEST_CASE("full pipeline for the order-2 non-group") {
    HomogenizeTrace tr;
    StagedSystem d4 = homogenize(two_nongroup(), &tr);
    CHECK(d4.stage == Stage::D4);
    CHECK(d4.degree_constant());
    CHECK(d4.endos.size() == 2);
    CHECK(verify_end_transport(d4));
    auto em = end_monoid_from_maps(d4.endos);
    Monoid end_m(em.table, em.identity);
    CHECK(monoid_iso(end_m, two_nongroup()).has_value());
    CHECK(!tr.lines.empty());
}

TEST_CASE("every stage keeps |End| = |M| on all monoids of order <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& m : all_monoid_tables(n)) {
            StagedSystem d4 = homogenize(m);
            CHECK(d4.degree_constant());
            CHECK(d4.endos.size() == std::size_t(m.size()));
            CHECK(verify_end_transport(d4));
        }
}

TEST_CASE("poset embeds through the stages") {
    Monoid m = two_nongroup();
    StagedSystem d1 = stage_d1(m);
    StagedSystem d2 = step1(d1, m, choose_step1_k(d1, m));
    // the old vertices keep their ids, and their classes keep their order
    for (int v = 0; v < d1.system.n(); ++v)
        for (int w = 0; w < d1.system.n(); ++w) {
            bool before = d1.poset.leq[std::size_t(d1.poset.end_class[std::size_t(v)])]
                                      [std::size_t(d1.poset.end_class[std::size_t(w)])];
            bool after = d2.poset.leq[std::size_t(d2.poset.end_class[std::size_t(v)])]
                                     [std::size_t(d2.poset.end_class[std::size_t(w)])];
            CHECK(before == after);
        }
}

TEST_SUITE_END();
