#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rrg/codec.hpp"
#include "rrg/metrics.hpp"

using namespace rrg;

namespace {

// Brute-force shortest odd cycle by enumerating simple cycles.
std::optional<int> odd_girth_brute(const Graph& g) {
    for (int len = 3; len <= g.n(); len += 2)
        if (!cycles_of_length(g, len).empty()) return len;
    return std::nullopt;
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

} // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("g6 codes from the literature decode to the stated graphs") {
    // 14-vertex 3-regular rigid graph
    Graph g = parse_g6("MCHY@e??KOCBOC?g_");
    CHECK(g.n() == 14);
    CHECK(is_regular(g, 3));
    CHECK(is_connected(g));
    CHECK(emit_g6(g) == "MCHY@e??KOCBOC?g_");

    // 10-vertex 4-regular rigid graph
    Graph h = parse_g6("I}hP?sM@w");
    CHECK(h.n() == 10);
    CHECK(is_regular(h, 4));

    // optional format header
    Graph g2 = parse_g6(">>graph6<<MCHY@e??KOCBOC?g_");
    CHECK(g2 == g);
}

TEST_CASE("g6 corner cases and errors") {
    Graph one(1, {});
    CHECK(emit_g6(one) == "@");
    CHECK(parse_g6("@").n() == 1);

    CHECK(emit_g6(Graph(0, {})) == "?");

    CHECK_THROWS_AS(parse_g6(""), ParseError);
    CHECK_THROWS_AS(parse_g6("M"), ParseError);           // truncated payload
    CHECK_THROWS_AS(parse_g6("@@"), ParseError);          // trailing garbage
    CHECK_THROWS_AS(parse_g6("B\x1f"), ParseError);       // byte below range
    CHECK_THROWS_AS(parse_g6("I}hP?sM@w@"), ParseError);  // trailing garbage

    try {
        parse_g6("I}hP?sM@w@");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::TrailingGarbage);
    }

    // long-form order header (n = 63 needs the '~' form)
    Graph big(63, {{0, 62}});
    Graph back = parse_g6(emit_g6(big));
    CHECK(back.n() == 63);
    CHECK(back.adjacent(0, 62));
}

TEST_CASE("d6 round trip including loops") {
    Digraph d(3, {{0, 1}, {1, 0}, {2, 2}}, true);
    Digraph back = parse_d6(emit_d6(d));
    CHECK(back.n() == 3);
    CHECK(back.has_arc(0, 1));
    CHECK(back.has_arc(1, 0));
    CHECK(back.has_arc(2, 2));
    CHECK(emit_d6(parse_d6(emit_d6(d))) == emit_d6(d));
    CHECK_THROWS_AS(parse_d6("I}hP?sM@w"), ParseError);  // missing '&'
}

TEST_CASE("system JSON round trip") {
    RelSystem empty(3, {}, {});
    CHECK(emit_system(empty) == R"({"arcs":{},"colours":[],"n":3})");

    RelSystem looped(2, {"a"}, {{"a", {{0, 0}, {0, 1}}}});
    RelSystem back = parse_system(emit_system(looped));
    CHECK(back == looped);

    // serialize-parse-serialize fixpoint
    CHECK(emit_system(back) == emit_system(looped));

    CHECK_THROWS_AS(parse_system("{"), ParseError);
    CHECK_THROWS_AS(parse_system(R"({"n":2,"colours":["a"],"arcs":{"b":[[0,1]]}})"),
                    std::invalid_argument);
}

TEST_CASE("random codec round trips") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 500; ++i) {
        int n = 1 + int(rng() % 20);
        Graph g = random_graph(rng, n, 0.3);
        CHECK(parse_g6(emit_g6(g)) == g);

        Digraph d = random_digraph(rng, 1 + int(rng() % 10), 0.3, (i % 2) == 0);
        CHECK(parse_d6(emit_d6(d)) == d);

        RelSystem s = RelSystem::from_digraph(d, "c");
        CHECK(parse_system(emit_system(s)) == s);
    }
}

TEST_CASE("odd girth basics") {
    CHECK(odd_girth(cycle_graph(7)) == 7);
    CHECK(!odd_girth(path_graph(2)).has_value());  // K2 is bipartite

    // Petersen graph
    std::vector<Edge> pet;
    for (int i = 0; i < 5; ++i) {
        pet.emplace_back(i, (i + 1) % 5);
        pet.emplace_back(i, i + 5);
        pet.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    Graph petersen(10, pet);
    CHECK(odd_girth(petersen) == 5);
    CHECK(girth(petersen) == 5);
}

TEST_CASE("odd girth agrees with brute force on random graphs") {
    std::mt19937_64 rng(987);
    for (int i = 0; i < 1000; ++i) {
        int n = 3 + int(rng() % 5);
        Graph g = random_graph(rng, n, 0.4);
        CHECK(odd_girth(g) == odd_girth_brute(g));
    }
}

TEST_CASE("oriented odd cycles of digraphs") {
    CHECK(odd_girth(directed_cycle(3)) == 3);
    CHECK(!odd_girth(directed_cycle(4)).has_value());

    std::mt19937_64 rng(555);
    for (int i = 0; i < 500; ++i) {
        int n = 3 + int(rng() % 5);
        Digraph d = random_digraph(rng, n, 0.3, true);
        CHECK(odd_girth(d) == odd_girth_brute(d.underlying()));
    }
}

TEST_CASE("degree sums") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 2 + int(rng() % 10), 0.5);
        long long sum = 0;
        for (int d : degrees(g)) sum += d;
        CHECK(sum == 2 * g.edge_count());

        Digraph d = random_digraph(rng, 2 + int(rng() % 8), 0.4, true);
        long long in = 0, out = 0;
        for (int v = 0; v < d.n(); ++v) {
            in += d.in_degree(v);
            out += d.out_degree(v);
        }
        CHECK(in == d.arc_count());
        CHECK(out == d.arc_count());
    }

    Digraph loop(1, {{0, 0}}, true);
    CHECK(degrees(loop)[0] == 2);
}

TEST_CASE("components, dist, complement") {
    Graph two(4, {{0, 1}, {2, 3}});
    auto comp = components(two);
    CHECK(comp[0] == comp[1]);
    CHECK(comp[2] == comp[3]);
    CHECK(comp[0] != comp[2]);
    CHECK(!dist(two, 0, 3).has_value());
    CHECK(dist(two, 0, 1) == 1);

    Graph c5 = cycle_graph(5);
    CHECK(complement(c5) == Graph(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
    Graph k4 = complete_graph(4);
    CHECK(is_regular(complement(k4), 0));
}

TEST_CASE("cycle enumeration and odd paths") {
    Graph c7 = cycle_graph(7);
    CHECK(cycles_of_length(c7, 7).size() == 1);
    CHECK(cycles_of_length(c7, 5).empty());

    Graph k4 = complete_graph(4);
    CHECK(cycles_of_length(k4, 3).size() == 4);

    CHECK(min_odd_path(c7, 0, 1) == 1);
    CHECK(min_odd_path(path_graph(4), 0, 2) == std::nullopt);  // only the even path exists
    CHECK(min_odd_path(c7, 0, 2, 3) == std::nullopt);          // the odd path has length 5
    CHECK(min_odd_path(c7, 0, 2) == 5);
}

TEST_SUITE_END();
