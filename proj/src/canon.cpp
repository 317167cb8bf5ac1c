#include "rrg/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "rrg/codec.hpp"

namespace rrg {

namespace {

using Row = std::uint64_t;

struct CanonSearch {
    int n;
    std::vector<Row> adj;

    std::vector<Row> best_cert;
    std::vector<int> best_perm;  // old -> new
    bool have_best = false;

    // union-find over vertices for automorphism orbit pruning at the root
    std::vector<int> orbit;

    int find(int x) { return orbit[std::size_t(x)] == x ? x : orbit[std::size_t(x)] = find(orbit[std::size_t(x)]); }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) orbit[std::size_t(std::max(a, b))] = std::min(a, b);
    }

    int count_in(Row mask, int v) const { return __builtin_popcountll(adj[std::size_t(v)] & mask); }

    /// Equitable refinement; cells kept in a deterministic order.
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                Row splitter = 0;
                for (int v : cells[s]) splitter |= Row{1} << v;
                for (std::size_t d = 0; d < cells.size() && !changed; ++d) {
                    if (cells[d].size() <= 1) continue;
                    auto& cell = cells[d];
                    std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
                        return count_in(splitter, a) < count_in(splitter, b);
                    });
                    std::vector<std::vector<int>> parts;
                    for (int v : cell) {
                        if (parts.empty() ||
                            count_in(splitter, parts.back().front()) != count_in(splitter, v))
                            parts.emplace_back();
                        parts.back().push_back(v);
                    }
                    if (parts.size() > 1) {
                        cells.erase(cells.begin() + long(d));
                        cells.insert(cells.begin() + long(d), parts.begin(), parts.end());
                        changed = true;
                    }
                }
            }
        }
    }

    std::vector<Row> certificate(const std::vector<int>& perm) const {
        std::vector<Row> cert(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            Row row = adj[std::size_t(v)];
            while (row) {
                int u = __builtin_ctzll(row);
                row &= row - 1;
                cert[std::size_t(perm[std::size_t(v)])] |= Row{1} << perm[std::size_t(u)];
            }
        }
        return cert;
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cells.size(); ++i) perm[std::size_t(cells[i][0])] = int(i);
        auto cert = certificate(perm);
        if (!have_best || cert > best_cert) {
            best_cert = cert;
            best_perm = perm;
            have_best = true;
        } else if (cert == best_cert) {
            // perm and best_perm induce the same labelled graph, so
            // best_perm^-1 . perm is an automorphism
            std::vector<int> inv(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) inv[std::size_t(best_perm[std::size_t(v)])] = v;
            for (int v = 0; v < n; ++v) unite(v, inv[std::size_t(perm[std::size_t(v)])]);
        }
    }

    void search(std::vector<std::vector<int>> cells, bool at_root) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> branch = cells[target];
        std::sort(branch.begin(), branch.end());
        std::vector<int> tried;
        for (int v : branch) {
            if (at_root) {
                bool skip = false;
                for (int u : tried)
                    if (find(u) == find(v)) skip = true;
                if (skip) continue;
                tried.push_back(v);
            }
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[i])
                        if (u != v) rest.push_back(u);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[i]);
                }
            }
            search(std::move(next), false);
        }
    }
};

} // namespace

CanonResult canonical_form(const Graph& g) {
    if (g.n() > 64) throw std::invalid_argument("canonical_form: more than 64 vertices");
    CanonSearch cs;
    cs.n = g.n();
    cs.adj.assign(std::size_t(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        cs.adj[std::size_t(u)] |= Row{1} << v;
        cs.adj[std::size_t(v)] |= Row{1} << u;
    }
    cs.orbit.resize(std::size_t(g.n()));
    std::iota(cs.orbit.begin(), cs.orbit.end(), 0);

    if (g.n() == 0) return {{}, emit_g6(g)};

    // seed cells by degree (ascending)
    std::vector<int> order(std::size_t(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<std::vector<int>> cells;
    for (int v : order) {
        if (cells.empty() || g.degree(cells.back().front()) != g.degree(v)) cells.emplace_back();
        cells.back().push_back(v);
    }

    cs.search(std::move(cells), true);

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = cs.best_perm[std::size_t(u)], b = cs.best_perm[std::size_t(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    CanonResult res;
    res.labelling = cs.best_perm;
    res.canonical_g6 = emit_g6(Graph(g.n(), edges));
    return res;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).canonical_g6 == canonical_form(b).canonical_g6;
}

} // namespace rrg
