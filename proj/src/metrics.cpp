#include "rrg/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace rrg {

namespace {

std::vector<int> components_of_adjacency(int n, const std::vector<Bitset>& adj) {
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            adj[std::size_t(v)].for_each([&](int u) {
                if (comp[u] == -1) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            });
        }
        ++next;
    }
    return comp;
}

std::vector<Bitset> underlying_rows(const Digraph& d) {
    std::vector<Bitset> rows(d.n(), Bitset(d.n()));
    for (int v = 0; v < d.n(); ++v) {
        rows[v] = d.out_neighbours(v);
        rows[v].or_with(d.in_neighbours(v));
        rows[v].reset(v);
    }
    return rows;
}

std::vector<Bitset> underlying_rows(const RelSystem& s) {
    std::vector<Bitset> rows(s.n(), Bitset(s.n()));
    for (int v = 0; v < s.n(); ++v) {
        for (int c = 0; c < s.colour_count(); ++c) {
            rows[v].or_with(s.out_neighbours(c, v));
            rows[v].or_with(s.in_neighbours(c, v));
        }
        rows[v].reset(v);
    }
    return rows;
}

std::vector<int> bfs_on_rows(const std::vector<Bitset>& rows, int src) {
    std::vector<int> d(rows.size(), -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        rows[std::size_t(v)].for_each([&](int u) {
            if (d[u] == -1) {
                d[u] = d[v] + 1;
                q.push_back(u);
            }
        });
    }
    return d;
}

/// Shortest odd cycle over simple-graph adjacency rows.
std::optional<int> odd_girth_rows(int n, const std::vector<Bitset>& rows) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> d(n);
    for (int r = 0; r < n; ++r) {
        std::fill(d.begin(), d.end(), -1);
        std::deque<int> q{r};
        d[r] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (2 * d[v] + 1 >= best) break;
            rows[std::size_t(v)].for_each([&](int u) {
                if (d[u] == -1) {
                    d[u] = d[v] + 1;
                    q.push_back(u);
                } else if (d[u] == d[v]) {
                    best = std::min(best, d[u] + d[v] + 1);
                }
            });
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace

std::vector<int> degrees(const Graph& g) {
    std::vector<int> out(g.n());
    for (int v = 0; v < g.n(); ++v) out[v] = g.degree(v);
    return out;
}

std::vector<int> degrees(const Digraph& d) {
    std::vector<int> out(d.n());
    for (int v = 0; v < d.n(); ++v) out[v] = d.total_degree(v);
    return out;
}

std::vector<int> degrees(const RelSystem& s) {
    std::vector<int> out(s.n());
    for (int v = 0; v < s.n(); ++v) out[v] = s.total_degree(v);
    return out;
}

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

std::vector<int> components(const Graph& g) {
    std::vector<Bitset> rows(g.n(), Bitset(g.n()));
    for (int v = 0; v < g.n(); ++v) rows[v] = g.neighbours(v);
    return components_of_adjacency(g.n(), rows);
}

std::vector<int> components(const Digraph& d) {
    return components_of_adjacency(d.n(), underlying_rows(d));
}

std::vector<int> components(const RelSystem& s) {
    return components_of_adjacency(s.n(), underlying_rows(s));
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto c = components(g);
    return *std::max_element(c.begin(), c.end()) == 0;
}

bool is_connected(const Digraph& d) {
    if (d.n() == 0) return true;
    auto c = components(d);
    return *std::max_element(c.begin(), c.end()) == 0;
}

bool is_connected(const RelSystem& s) {
    if (s.n() == 0) return true;
    auto c = components(s);
    return *std::max_element(c.begin(), c.end()) == 0;
}

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<Bitset> rows(g.n(), Bitset(g.n()));
    for (int v = 0; v < g.n(); ++v) rows[v] = g.neighbours(v);
    return bfs_on_rows(rows, src);
}

std::optional<int> dist(const Graph& g, int u, int v) {
    int d = bfs_dist(g, u)[std::size_t(v)];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> dist(const Digraph& dg, int u, int v) {
    int d = bfs_on_rows(underlying_rows(dg), u)[std::size_t(v)];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> dist(const RelSystem& s, int u, int v) {
    int d = bfs_on_rows(underlying_rows(s), u)[std::size_t(v)];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> odd_girth(const Graph& g) {
    std::vector<Bitset> rows(g.n(), Bitset(g.n()));
    for (int v = 0; v < g.n(); ++v) rows[v] = g.neighbours(v);
    return odd_girth_rows(g.n(), rows);
}

std::optional<int> odd_girth(const Digraph& d) {
    return odd_girth_rows(d.n(), underlying_rows(d));
}

std::optional<int> girth(const Graph& g) {
    // BFS from every root; a non-tree edge at depth d closes a cycle of
    // length d(x)+d(y)+1. The minimum over roots is exact.
    int best = std::numeric_limits<int>::max();
    std::vector<int> d(g.n()), parent(g.n());
    for (int r = 0; r < g.n(); ++r) {
        std::fill(d.begin(), d.end(), -1);
        std::deque<int> q{r};
        d[r] = 0;
        parent[r] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (2 * d[v] >= best) break;
            g.neighbours(v).for_each([&](int u) {
                if (u == parent[v]) return;
                if (d[u] == -1) {
                    d[u] = d[v] + 1;
                    parent[u] = v;
                    q.push_back(u);
                } else {
                    best = std::min(best, d[u] + d[v] + 1);
                }
            });
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbours(u).intersects(g.neighbours(v))) return false;
    return true;
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph(g.n(), es);
}

namespace {

void cycle_dfs(const Graph& g, int len, std::vector<int>& path, Bitset& on_path,
               const std::vector<int>& dist_to_start, std::vector<std::vector<int>>& out) {
    int cur = path.back();
    int remaining = len - int(path.size());
    if (remaining == 0) {
        if (g.adjacent(cur, path[0]) && path[1] < path.back()) out.push_back(path);
        return;
    }
    g.neighbours(cur).for_each([&](int u) {
        if (u <= path[0] || on_path.test(u)) return;
        if (dist_to_start[u] < 0 || dist_to_start[u] > remaining) return;
        path.push_back(u);
        on_path.set(u);
        cycle_dfs(g, len, path, on_path, dist_to_start, out);
        on_path.reset(u);
        path.pop_back();
    });
}

} // namespace

std::vector<std::vector<int>> cycles_of_length(const Graph& g, int len) {
    std::vector<std::vector<int>> out;
    if (len < 3) return out;
    for (int s = 0; s < g.n(); ++s) {
        auto dist_to_start = bfs_dist(g, s);
        std::vector<int> path{s};
        Bitset on_path(g.n());
        on_path.set(s);
        cycle_dfs(g, len, path, on_path, dist_to_start, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void odd_path_dfs(const Graph& g, int t, std::vector<int>& path, Bitset& on_path,
                  const std::vector<int>& dist_to_t, int& best) {
    int cur = path.back();
    int len = int(path.size()) - 1;
    if (cur == t) {
        if (len % 2 == 1) best = std::min(best, len);
        return;
    }
    g.neighbours(cur).for_each([&](int u) {
        if (on_path.test(u)) return;
        if (dist_to_t[u] < 0 || len + 1 + dist_to_t[u] >= best) return;
        path.push_back(u);
        on_path.set(u);
        odd_path_dfs(g, t, path, on_path, dist_to_t, best);
        on_path.reset(u);
        path.pop_back();
    });
}

} // namespace

std::optional<int> min_odd_path(const Graph& g, int s, int t, int bound) {
    int best = bound < 0 ? std::numeric_limits<int>::max() : bound;
    auto dist_to_t = bfs_dist(g, t);
    if (dist_to_t[std::size_t(s)] < 0) return std::nullopt;
    std::vector<int> path{s};
    Bitset on_path(g.n());
    on_path.set(s);
    odd_path_dfs(g, t, path, on_path, dist_to_t, best);
    if (best == (bound < 0 ? std::numeric_limits<int>::max() : bound)) return std::nullopt;
    return best;
}

std::optional<int> directed_dist(const Digraph& d, int s, int t) {
    std::vector<int> dd(d.n(), -1);
    std::deque<int> q{s};
    dd[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        d.out_neighbours(v).for_each([&](int u) {
            if (dd[u] == -1) {
                dd[u] = dd[v] + 1;
                q.push_back(u);
            }
        });
    }
    if (dd[std::size_t(t)] < 0) return std::nullopt;
    return dd[std::size_t(t)];
}

Graph cycle_graph(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    if (k < 3) throw std::invalid_argument("cycle_graph: k < 3");
    return Graph(k, es);
}

Graph path_graph(int k) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return Graph(k, es);
}

Graph complete_graph(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph(k, es);
}

Digraph directed_cycle(int k) {
    if (k < 2) throw std::invalid_argument("directed_cycle: k < 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
    return Digraph(k, arcs);
}

Digraph transitive_tournament(int k) {
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) arcs.emplace_back(i, j);
    return Digraph(k, arcs);
}

} // namespace rrg
