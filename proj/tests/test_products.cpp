#include <doctest.h>

#include <random>

#include "rrg/homsearch.hpp"
#include "rrg/indicator.hpp"
#include "rrg/metrics.hpp"
#include "rrg/products.hpp"

using namespace rrg;

namespace {

Indicator path_indicator() {
    // in = 0 - 1 - 2 = out
    return Indicator(path_graph(3), 0, 2);
}

} // namespace

TEST_SUITE_BEGIN("products");

TEST_CASE("sip on a single arc unrolls the definition") {
    RelSystem d(2, {"0"}, {{"0", {{0, 1}}}});
    SipGraph p = sip(d, path_indicator());
    CHECK(p.graph.n() == 5);
    CHECK(p.graph.adjacent(0, 2));      // x - in
    CHECK(p.graph.adjacent(4, 1));      // out - y
    CHECK(p.graph.adjacent(2, 3));
    CHECK(p.graph.adjacent(3, 4));
    CHECK(p.graph.edge_count() == 4);
    REQUIRE(p.copies.size() == 1);
    CHECK(p.copies[0].first_vertex == 2);
    CHECK(p.copies[0].size == 3);
}

TEST_CASE("sip_vec on a loop avoids output loops") {
    RelSystem d(1, {"0"}, {{"0", {{0, 0}}}});
    Digraph oriented_path(3, {{0, 1}, {1, 2}});
    SipDigraph p = sip_vec(d, Indicator(oriented_path, 0, 2));
    CHECK(p.digraph.n() == 4);
    CHECK(p.digraph.has_arc(0, 1));  // v -> in
    CHECK(p.digraph.has_arc(3, 0));  // out -> v
    CHECK(!p.digraph.has_arc(0, 0));
    CHECK(p.digraph.is_oriented());
}

TEST_CASE("sip kind checks") {
    RelSystem d(2, {"0"}, {{"0", {{0, 1}}}});
    Digraph oriented_path(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(sip(d, Indicator(oriented_path, 0, 2)), std::invalid_argument);
    CHECK_THROWS_AS(sip_vec(d, path_indicator()), std::invalid_argument);
    CHECK_THROWS_AS(sip(d, IndicatorTuple{}), std::invalid_argument);
}

TEST_CASE("gadget copies partition the non-base vertices") {
    std::mt19937_64 rng(808);
    Indicator s = path_indicator();
    for (int t = 0; t < 20; ++t) {
        int n = 2 + int(rng() % 3);
        std::vector<Arc> as;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) as.emplace_back(u, v);
        RelSystem d = RelSystem::from_digraph(Digraph(n, as, true), "0");
        SipGraph p = sip(d, s);
        CHECK(p.graph.n() == d.n() + d.arc_count() * 3);
        std::vector<bool> covered(std::size_t(p.graph.n()), false);
        for (int v = 0; v < p.base_n; ++v) covered[std::size_t(v)] = true;
        for (const auto& c : p.copies)
            for (int i = 0; i < c.size; ++i) {
                CHECK(!covered[std::size_t(c.first_vertex + i)]);
                covered[std::size_t(c.first_vertex + i)] = true;
            }
        for (int v = 0; v < p.graph.n(); ++v) CHECK(covered[std::size_t(v)]);
    }
}

TEST_CASE("degree law of the undirected sip product") {
    // total degree d in D becomes plain degree d in D*S
    Indicator s = build_indicator(3, 7);
    Digraph d3 = directed_cycle(3);
    SipGraph p = sip(RelSystem::from_digraph(d3), s);
    CHECK(is_regular(p.graph, 3));
    CHECK(odd_girth(p.graph) == 7);
}

TEST_CASE("cartesian products") {
    Graph c4 = cycle_graph(4);
    Graph p3 = path_graph(3);
    Graph prod = cartesian(c4, p3);
    CHECK(prod.n() == 12);
    // degrees add across factors
    for (int x = 0; x < 4; ++x)
        for (int u = 0; u < 3; ++u)
            CHECK(prod.degree(product_vertex(x, u, 3)) == c4.degree(x) + p3.degree(u));

    // the variant collapses to the plain product when both factors agree
    std::vector<int> f{1, 2, 1};
    CHECK(cartesian_variant(c4, c4, f, p3) == prod);

    CHECK_THROWS_AS(cartesian_variant(c4, path_graph(5), f, p3), std::invalid_argument);
    CHECK_THROWS_AS(cartesian_variant(c4, c4, {1, 2}, p3), std::invalid_argument);
    CHECK_THROWS_AS(cartesian_variant(c4, c4, {1, 2, 3}, p3), std::invalid_argument);
}

TEST_CASE("variant degree law on random instances") {
    std::mt19937_64 rng(171717);
    auto random_graph = [&](int n, double p) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((rng() % 1000) / 1000.0 < p) es.emplace_back(u, v);
        return Graph(n, es);
    };
    for (int t = 0; t < 30; ++t) {
        int n = 2 + int(rng() % 5), m = 2 + int(rng() % 4);
        Graph g1 = random_graph(n, 0.5), g2 = random_graph(n, 0.5), h = random_graph(m, 0.5);
        std::vector<int> f;
        for (int u = 0; u < m; ++u) f.push_back(1 + int(rng() % 2));
        Graph prod = cartesian_variant(g1, g2, f, h);
        for (int x = 0; x < n; ++x)
            for (int u = 0; u < m; ++u) {
                const Graph& layer = f[std::size_t(u)] == 1 ? g1 : g2;
                CHECK(prod.degree(product_vertex(x, u, m)) == h.degree(u) + layer.degree(x));
            }
    }
}

TEST_CASE("hom transport across the sip product") {
    Indicator s = build_indicator(3, 7);

    // the one-vertex looped system transports |End| = 1
    RelSystem loop = RelSystem::from_digraph(Digraph(1, {{0, 0}}, true), "0");
    auto rep = hom_transport_check(loop, loop, {s});
    CHECK(rep.hom_count_base == 1);
    CHECK(rep.hom_count_product == 1);
    CHECK(rep.ok());

    // directed 2-cycle into directed 3-cycle: no homomorphisms either side
    RelSystem c2 = RelSystem::from_digraph(directed_cycle(2), "0");
    RelSystem c3 = RelSystem::from_digraph(directed_cycle(3), "0");
    auto rep23 = hom_transport_check(c2, c3, {s});
    CHECK(rep23.hom_count_base == 0);
    CHECK(rep23.hom_count_product == 0);
    CHECK(rep23.ok());

    // End of a directed 3-cycle transports with count 3
    auto rep33 = hom_transport_check(c3, c3, {s});
    CHECK(rep33.hom_count_base == 3);
    CHECK(rep33.hom_count_product == 3);
    CHECK(rep33.ok());

    // systems with an in/out-degree-0 vertex are rejected
    RelSystem bad = RelSystem::from_digraph(Digraph(2, {{0, 1}}), "0");
    CHECK_THROWS_AS(hom_transport_check(bad, bad, {s}), std::invalid_argument);

    // indicator tuples failing the hypotheses are rejected distinctly
    CHECK_THROWS_AS(hom_transport_check(loop, loop, {Indicator(cycle_graph(5), 0, 1)}),
                    std::invalid_argument);
}

TEST_CASE("odd cycle bound of the sip product") {
    Indicator s = build_indicator(3, 7);
    std::mt19937_64 rng(5150);
    int done = 0;
    while (done < 8) {
        int n = 1 + int(rng() % 3);
        std::vector<Arc> as;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) as.emplace_back(u, v);
        Digraph d(n, as, true);
        if (d.arc_count() == 0) continue;
        SipGraph p = sip(RelSystem::from_digraph(d, "0"), s);
        auto og = odd_girth(p.graph);
        // min{oddgirth(S), 2 + odddist(in, out)}
        auto odd_io = min_odd_path(s.graph(), s.in, s.out);
        REQUIRE(odd_io.has_value());
        int bound = std::min(7, 2 + *odd_io);
        if (og) CHECK(*og >= bound);
        ++done;
    }
}

TEST_SUITE_END();
