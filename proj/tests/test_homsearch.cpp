#include <doctest.h>

#include <random>

#include "rrg/codec.hpp"
#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"

using namespace rrg;

namespace {

/// All structure-preserving maps by brute force over every |V'|^|V| map.
std::vector<std::vector<int>> naive_homs(const SystemView& a, const SystemView& b) {
    std::vector<std::vector<int>> out;
    if (a.n == 0) return {{}};
    if (b.n == 0) return {};
    std::vector<int> colour_map(a.colours.size(), -1);
    for (std::size_t c = 0; c < a.colours.size(); ++c)
        for (std::size_t d = 0; d < b.colours.size(); ++d)
            if (a.colours[c] == b.colours[d]) colour_map[c] = int(d);

    std::vector<int> f(std::size_t(a.n), 0);
    while (true) {
        bool ok = true;
        for (std::size_t c = 0; c < a.colours.size() && ok; ++c)
            for (int u = 0; u < a.n && ok; ++u)
                a.out[c][std::size_t(u)].for_each([&](int v) {
                    if (!ok) return;
                    if (colour_map[c] < 0 ||
                        !b.out[std::size_t(colour_map[c])][std::size_t(f[std::size_t(u)])].test(
                            f[std::size_t(v)]))
                        ok = false;
                });
        if (ok) out.push_back(f);
        int i = 0;
        while (i < a.n && ++f[std::size_t(i)] == b.n) f[std::size_t(i++)] = 0;
        if (i == a.n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) es.emplace_back(u, v);
    return Graph(n, es);
}

Digraph random_digraph(std::mt19937_64& rng, int n, double p, bool loops) {
    std::vector<Arc> as;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !loops) continue;
            if (coin(rng) < p) as.emplace_back(u, v);
        }
    return Digraph(n, as, loops);
}

RelSystem random_system(std::mt19937_64& rng, int n, int k, double p) {
    std::vector<std::string> colours;
    std::map<std::string, std::vector<Arc>> arcs;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int c = 0; c < k; ++c) {
        std::string name(1, char('a' + c));
        colours.push_back(name);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (coin(rng) < p) arcs[name].emplace_back(u, v);
    }
    return RelSystem(n, colours, arcs);
}

} // namespace

TEST_SUITE_BEGIN("homsearch");

TEST_CASE("tiny homomorphism sets") {
    Graph k2 = path_graph(2);
    auto maps = enumerate_homs(k2, k2);
    CHECK(maps == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    // no homomorphism from an odd cycle into an edge
    CHECK(enumerate_homs(cycle_graph(5), k2).empty());

    // empty source has exactly the empty map
    CHECK(enumerate_homs(Graph(0, {}), k2).size() == 1);
}

TEST_CASE("engine equals naive enumeration on random pairs") {
    std::mt19937_64 rng(0xC0FFEE);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        int kind = int(rng() % 3);
        int na = 1 + int(rng() % 5), nb = 1 + int(rng() % 5);
        SystemView a, b;
        if (kind == 0) {
            a = SystemView::of(random_graph(rng, na, 0.4));
            b = SystemView::of(random_graph(rng, nb, 0.4));
        } else if (kind == 1) {
            a = SystemView::of(random_digraph(rng, na, 0.3, true));
            b = SystemView::of(random_digraph(rng, nb, 0.3, true));
        } else {
            a = SystemView::of(random_system(rng, na, 1 + int(rng() % 2), 0.3));
            b = SystemView::of(random_system(rng, nb, 1 + int(rng() % 2), 0.3));
        }
        HomOptions o;
        CHECK(search_homs(a, b, o).maps == naive_homs(a, b));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("pruning toggles never change the solution set") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 120; ++i) {
        Graph a = random_graph(rng, 2 + int(rng() % 5), 0.45);
        Graph b = random_graph(rng, 2 + int(rng() % 5), 0.45);
        HomOptions base;
        auto expect = search_homs(a, b, base).maps;
        for (int mask = 0; mask < 8; ++mask) {
            HomOptions o;
            o.prune_forward = mask & 1;
            o.prune_parity = mask & 2;
            o.prune_distance2 = mask & 4;
            CHECK(search_homs(a, b, o).maps == expect);
        }
        // bijective searches, with and without the degree filter
        HomOptions auto_on, auto_off;
        auto_on.bijective = auto_off.bijective = true;
        auto_off.prune_degree = false;
        CHECK(search_homs(a, a, auto_on).maps == search_homs(a, a, auto_off).maps);
    }
}

TEST_CASE("results are independent of the number of jobs") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 20; ++i) {
        Graph a = random_graph(rng, 5, 0.5);
        Graph b = random_graph(rng, 6, 0.5);
        HomOptions o1, o4;
        o4.jobs = 4;
        CHECK(search_homs(a, b, o1).maps == search_homs(a, b, o4).maps);
    }
    Graph g = parse_g6("MCHY@e??KOCBOC?g_");
    HomOptions o4;
    o4.jobs = 4;
    o4.mode = HomMode::FindNonIdentity;
    CHECK(!search_homs(g, g, o4).found());
}

TEST_CASE("limit is respected") {
    Graph k3 = complete_graph(3);
    HomOptions o;
    o.limit = 4;
    auto r = search_homs(k3, k3, o);
    CHECK(r.maps.size() == 4);
    CHECK(!r.complete);
}

TEST_CASE("rigidity, asymmetry, cores") {
    Graph g = parse_g6("MCHY@e??KOCBOC?g_");
    CHECK(is_rigid(g));

    Graph k2 = path_graph(2);
    CHECK(!is_rigid(k2));
    CHECK(!is_asymmetric(k2));

    Graph c7 = cycle_graph(7);
    CHECK(is_core(c7));
    CHECK(!is_rigid(c7));
    auto end_c7 = end_monoid(c7);
    CHECK(end_c7.size() == 14);
    for (const auto& m : end_c7.elements) CHECK(is_bijective_map(m));

    // a path has a non-bijective endomorphism (fold), so it is not a core
    CHECK(!is_core(path_graph(3)));
}

TEST_CASE("early-exit soundness of find_nonidentity") {
    std::mt19937_64 rng(31007);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 2 + int(rng() % 5), 0.5);
        bool rigid = is_rigid(g);
        auto all = enumerate_homs(g, g);
        bool only_identity = all.size() == 1 && is_identity_map(all[0]);
        CHECK(rigid == only_identity);
    }
}

TEST_CASE("mutually_rigid") {
    std::vector<Graph> twice = {path_graph(2), path_graph(2)};
    CHECK(!mutually_rigid(twice));
    CHECK_THROWS_AS(mutually_rigid(std::vector<Graph>{path_graph(2)}), std::invalid_argument);
}

TEST_CASE("end monoid composition closure") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, 2 + int(rng() % 4), 0.5);
        auto em = end_monoid(g);
        REQUIRE(em.identity >= 0);
        for (int a = 0; a < em.size(); ++a) {
            CHECK(em.table[std::size_t(em.identity)][std::size_t(a)] == a);
            CHECK(em.table[std::size_t(a)][std::size_t(em.identity)] == a);
            for (int b = 0; b < em.size(); ++b) {
                int ab = em.table[std::size_t(a)][std::size_t(b)];
                CHECK(em.elements[std::size_t(ab)] ==
                      compose_maps(em.elements[std::size_t(a)], em.elements[std::size_t(b)]));
            }
        }
    }
}

TEST_CASE("deadline reporting") {
    // a complete-bipartite self-search has a huge End; the deadline must cut
    // it off and the result must say so
    std::vector<Edge> es;
    for (int u = 0; u < 13; ++u)
        for (int v = 13; v < 26; ++v) es.emplace_back(u, v);
    Graph kb(26, es);
    HomOptions o;
    o.mode = HomMode::Count;
    o.time_limit_s = 0.05;
    auto r = search_homs(kb, kb, o);
    if (!r.complete) CHECK(r.count >= 0);
}

TEST_SUITE_END();
