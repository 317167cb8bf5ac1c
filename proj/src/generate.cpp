#include "rrg/generate.hpp"

#include <algorithm>
#include <set>

#include "rrg/canon.hpp"
#include "rrg/codec.hpp"
#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"

namespace rrg {

namespace {

/// Completion-order enumerator: vertices are finished smallest-first, each
/// missing neighbour set is chosen among touched vertices plus the next
/// fresh labels, so every isomorphism class appears with a manageable
/// number of labellings; exact isomorph rejection happens at the leaves via
/// canonical forms.
struct Generator {
    int n, d, min_girth;
    std::vector<Bitset> adj;
    std::vector<int> deg;
    int touched = 0;  // labels below this have been used
    std::set<std::string> seen;
    const std::function<bool(const Graph&)>* sink = nullptr;
    bool stopped = false;
    long long emitted = 0;

    Generator(int n, int d, int g)
        : n(n), d(d), min_girth(g), adj(std::size_t(n), Bitset(n)), deg(std::size_t(n), 0) {}

    /// True when u and v are farther apart than `limit` (bounded BFS).
    bool farther_than(int from, int to, int limit) const {
        if (from == to) return limit < 0;
        std::vector<int> dist(std::size_t(n), -1);
        std::vector<int> frontier{from};
        dist[std::size_t(from)] = 0;
        for (int depth = 0; depth < limit; ++depth) {
            std::vector<int> next;
            for (int v : frontier)
                adj[std::size_t(v)].for_each([&](int u) {
                    if (dist[std::size_t(u)] == -1) {
                        dist[std::size_t(u)] = depth + 1;
                        next.push_back(u);
                    }
                });
            if (dist[std::size_t(to)] != -1) return false;
            frontier = std::move(next);
        }
        return true;
    }

    bool edge_allowed(int u, int v) const {
        if (min_girth <= 3) return true;
        // adding {u,v} closes a cycle of length dist(u,v)+1
        return farther_than(u, v, min_girth - 2);
    }

    void add_edge(int u, int v) {
        adj[std::size_t(u)].set(v);
        adj[std::size_t(v)].set(u);
        ++deg[std::size_t(u)];
        ++deg[std::size_t(v)];
    }

    void remove_edge(int u, int v) {
        adj[std::size_t(u)].reset(v);
        adj[std::size_t(v)].reset(u);
        --deg[std::size_t(u)];
        --deg[std::size_t(v)];
    }

    void leaf() {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            adj[std::size_t(u)].for_each([&](int v) {
                if (u < v) edges.emplace_back(u, v);
            });
        Graph g(n, edges);
        if (!is_connected(g)) return;
        auto canon = canonical_form(g);
        if (!seen.insert(canon.canonical_g6).second) return;
        ++emitted;
        if (!(*sink)(parse_g6(canon.canonical_g6))) stopped = true;
    }

    void extend() {
        if (stopped) return;
        int v = -1;
        for (int x = 0; x < n; ++x)
            if (deg[std::size_t(x)] < d) {
                v = x;
                break;
            }
        if (v == -1) {
            leaf();
            return;
        }
        // all labels below v are complete; an untouched v would start a
        // second component
        if (deg[std::size_t(v)] == 0 && v > 0) return;

        int missing = d - deg[std::size_t(v)];
        int first_fresh = std::max(touched, v + 1);
        std::vector<int> pool;
        for (int u = v + 1; u < first_fresh; ++u)
            if (deg[std::size_t(u)] < d && !adj[std::size_t(v)].test(u)) pool.push_back(u);
        int fresh_available = std::min(n - first_fresh, missing);
        for (int i = 0; i < fresh_available; ++i) pool.push_back(first_fresh + i);

        std::vector<int> chosen;
        choose(v, missing, pool, 0, chosen, first_fresh);
    }

    void choose(int v, int missing, const std::vector<int>& pool, std::size_t from,
                std::vector<int>& chosen, int first_fresh) {
        if (stopped) return;
        if (missing == 0) {
            int old_touched = touched;
            for (int u : chosen) touched = std::max(touched, u + 1);
            touched = std::max(touched, v + 1);
            extend();
            touched = old_touched;
            return;
        }
        if (pool.size() - from < std::size_t(missing)) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            int u = pool[i];
            // fresh labels are interchangeable; only the leftmost unused run
            // may be taken
            if (u > first_fresh && deg[std::size_t(u - 1)] == 0 && u - 1 >= first_fresh &&
                std::find(chosen.begin(), chosen.end(), u - 1) == chosen.end())
                continue;
            if (!edge_allowed(v, u)) continue;
            add_edge(v, u);
            chosen.push_back(u);
            choose(v, missing - 1, pool, i + 1, chosen, first_fresh);
            chosen.pop_back();
            remove_edge(v, u);
            if (stopped) return;
        }
    }
};

} // namespace

long long generate_regular(int n, const SearchSpec& spec,
                           const std::function<bool(const Graph&)>& sink) {
    if (spec.degree < 3) throw std::invalid_argument("generate_regular: degree >= 3");
    if (n < spec.degree + 1 || (n * spec.degree) % 2 != 0) return 0;
    Generator gen(n, spec.degree, spec.min_girth);
    gen.sink = &sink;
    if (n > 0) gen.touched = 1;  // vertex 0 anchors the single component
    gen.extend();
    return gen.emitted;
}

std::vector<Graph> generate_regular_all(int n, const SearchSpec& spec) {
    std::vector<std::pair<std::string, Graph>> got;
    generate_regular(n, spec, [&](const Graph& g) {
        got.emplace_back(canonical_form(g).canonical_g6, g);
        return true;
    });
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(got.size());
    for (auto& [c, g] : got) out.push_back(std::move(g));
    return out;
}

std::vector<OrderVerdict> scan_orders(int degree, int min_n, int max_n, int min_girth,
                                      bool rigid_predicate, bool stop_at_first_hit, int jobs) {
    std::vector<OrderVerdict> out;
    HomOptions opts;
    opts.jobs = jobs;
    for (int n = min_n; n <= max_n; ++n) {
        if (n < degree + 1 || (n * degree) % 2 != 0) continue;
        OrderVerdict verdict;
        verdict.n = n;
        SearchSpec spec;
        spec.degree = degree;
        spec.min_girth = min_girth;
        verdict.graph_count = generate_regular(n, spec, [&](const Graph& g) {
            bool hit = rigid_predicate ? is_rigid(g, opts) : is_asymmetric(g, opts);
            if (hit && !verdict.found) {
                verdict.found = true;
                verdict.witness_g6 = canonical_form(g).canonical_g6;
                if (stop_at_first_hit) return false;
            }
            return true;
        });
        bool found = verdict.found;
        out.push_back(std::move(verdict));
        if (found && stop_at_first_hit) break;
    }
    return out;
}

} // namespace rrg
