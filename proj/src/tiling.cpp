#include "rrg/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"

namespace rrg {

namespace {

std::logic_error tiling_error(const std::string& what) {
    return std::logic_error("tiling: " + what);
}

} // namespace

bool TilingGraph::is_border(int v) const {
    return std::find(border.begin(), border.end(), v) != border.end();
}

std::vector<int> TilingGraph::interior_vertices() const {
    std::vector<bool> on_border(std::size_t(graph.n()), false);
    for (int v : border) on_border[std::size_t(v)] = true;
    std::vector<int> out;
    for (int v = 0; v < graph.n(); ++v)
        if (!on_border[std::size_t(v)]) out.push_back(v);
    return out;
}

TilingGraph base_tiling(int g) {
    if (g < 7 || g % 2 == 0) throw std::invalid_argument("base_tiling: need odd g >= 7");
    TilingGraph t;
    t.g = g;
    t.generation = 1;
    int p = 0, q = 1;
    auto a = [&](int j) { return 1 + j; };            // a_1..a_{g-2} = 2..g-1
    auto b = [&](int j) { return g - 1 + j; };        // b_1..b_{g-2} = g..2g-3
    int n = 2 * g - 2;

    std::vector<Edge> edges{{p, q}};
    edges.emplace_back(p, a(1));
    edges.emplace_back(p, b(1));
    for (int j = 1; j < g - 2; ++j) {
        edges.emplace_back(a(j), a(j + 1));
        edges.emplace_back(b(j), b(j + 1));
    }
    edges.emplace_back(a(g - 2), q);
    edges.emplace_back(b(g - 2), q);
    t.graph = Graph(n, edges);

    std::vector<int> face_a{p}, face_b{p};
    for (int j = 1; j <= g - 2; ++j) face_a.push_back(a(j));
    for (int j = 1; j <= g - 2; ++j) face_b.push_back(b(j));
    face_a.push_back(q);
    face_b.push_back(q);
    t.faces = {face_a, face_b};

    t.border.push_back(p);
    for (int j = 1; j <= g - 2; ++j) t.border.push_back(a(j));
    t.border.push_back(q);
    for (int j = g - 2; j >= 1; --j) t.border.push_back(b(j));

    int m = int(t.border.size());
    t.antipode.assign(std::size_t(n), -1);
    for (int i = 0; i < m; ++i)
        t.antipode[std::size_t(t.border[std::size_t(i)])] = t.border[std::size_t((i + m / 2) % m)];
    return t;
}

TilingGraph tiling_step(const TilingGraph& t) {
    const Graph& g0 = t.graph;
    int g = t.g;
    int m = int(t.border.size());
    auto deg = [&](int v) { return g0.degree(v); };
    auto bv = [&](int pos) { return t.border[std::size_t(((pos % m) + m) % m)]; };

    // maximal runs of degree-3 border vertices, by cyclic start position
    std::vector<std::pair<int, int>> runs;  // (start position, length)
    {
        int start2 = -1;
        for (int i = 0; i < m; ++i)
            if (deg(bv(i)) == 2) {
                start2 = i;
                break;
            }
        if (start2 < 0) throw tiling_error("border has no degree-2 vertex");
        int i = start2;
        while (i < start2 + m) {
            if (deg(bv(i)) == 3) {
                int len = 0;
                while (deg(bv(i + len)) == 3) ++len;
                runs.emplace_back(((i % m) + m) % m, len);
                i += len;
            } else {
                ++i;
            }
        }
    }
    if (runs.empty()) throw tiling_error("border has no degree-3 vertex");

    int next = g0.n();
    std::vector<Edge> new_edges;
    std::map<int, int> ell;  // flank vertex -> its new pendant vertex
    auto ell_of = [&](int x) {
        auto it = ell.find(x);
        if (it != ell.end()) return it->second;
        int id = next++;
        ell.emplace(x, id);
        new_edges.emplace_back(x, id);
        return id;
    };

    int r = int(runs.size());
    std::vector<int> flank_before(static_cast<std::size_t>(r));
    std::vector<int> flank_after(static_cast<std::size_t>(r));
    std::vector<std::vector<int>> chain(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        auto [start, len] = runs[std::size_t(k)];
        flank_before[std::size_t(k)] = bv(start - 1);
        flank_after[std::size_t(k)] = bv(start + len);
        int subdivisions = g - len - 4;
        if (subdivisions < 0) throw tiling_error("degree-3 run too long for a new g-gon");
        int lx = ell_of(flank_before[std::size_t(k)]);
        int ly = ell_of(flank_after[std::size_t(k)]);
        int prev = lx;
        for (int s = 0; s < subdivisions; ++s) {
            int c = next++;
            chain[std::size_t(k)].push_back(c);
            new_edges.emplace_back(prev, c);
            prev = c;
        }
        new_edges.emplace_back(prev, ly);
    }

    TilingGraph out;
    out.g = g;
    out.generation = t.generation + 1;
    out.graph = Graph(next, g0.edges()).with_edges(new_edges);
    out.faces = t.faces;
    for (int k = 0; k < r; ++k) {
        auto [start, len] = runs[std::size_t(k)];
        std::vector<int> face{flank_before[std::size_t(k)]};
        for (int i = 0; i < len; ++i) face.push_back(bv(start + i));
        face.push_back(flank_after[std::size_t(k)]);
        face.push_back(ell.at(flank_after[std::size_t(k)]));
        for (auto it = chain[std::size_t(k)].rbegin(); it != chain[std::size_t(k)].rend(); ++it)
            face.push_back(*it);
        face.push_back(ell.at(flank_before[std::size_t(k)]));
        if (int(face.size()) != g) throw tiling_error("new face is not a g-gon");
        out.faces.push_back(std::move(face));
    }

    // new border: per run, the hung path, then the surviving degree-2 gap
    for (int k = 0; k < r; ++k) {
        auto [start, len] = runs[std::size_t(k)];
        int y = flank_after[std::size_t(k)];
        int x_next = flank_before[std::size_t((k + 1) % r)];
        if (flank_before[std::size_t(k)] != flank_after[std::size_t((k + r - 1) % r)])
            out.border.push_back(ell.at(flank_before[std::size_t(k)]));
        for (int c : chain[std::size_t(k)]) out.border.push_back(c);
        out.border.push_back(ell.at(y));
        if (y != x_next) {
            // gap of surviving border vertices from y to x_next inclusive
            int pos = start + len;
            while (true) {
                out.border.push_back(bv(pos));
                if (bv(pos) == x_next) break;
                ++pos;
                if (pos > start + len + m) throw tiling_error("border walk lost");
            }
        }
    }

    // antipode: the involution is a border rotation, so runs map to runs
    // preserving direction; pendants follow their anchors, chains follow
    // their runs index-by-index
    out.antipode.assign(std::size_t(next), -1);
    for (int v = 0; v < g0.n(); ++v) out.antipode[std::size_t(v)] = t.antipode[std::size_t(v)];
    for (auto [x, lx] : ell) out.antipode[std::size_t(lx)] = ell.at(t.antipode[std::size_t(x)]);
    for (int k = 0; k < r; ++k) {
        int xk = flank_before[std::size_t(k)];
        int anti_xk = t.antipode[std::size_t(xk)];
        int k2 = -1;
        for (int j = 0; j < r; ++j)
            if (flank_before[std::size_t(j)] == anti_xk) k2 = j;
        if (k2 < 0) throw tiling_error("antipodal run not found");
        if (chain[std::size_t(k)].size() != chain[std::size_t(k2)].size())
            throw tiling_error("antipodal runs have different chain lengths");
        for (std::size_t i = 0; i < chain[std::size_t(k)].size(); ++i)
            out.antipode[std::size_t(chain[std::size_t(k)][i])] = chain[std::size_t(k2)][i];
    }
    return out;
}

TilingGraph build_tiling(int g, int generation) {
    if (generation < 1) throw std::invalid_argument("build_tiling: generation >= 1");
    TilingGraph t = base_tiling(g);
    for (int i = 1; i < generation; ++i) t = tiling_step(t);
    return t;
}

void validate_tiling(const TilingGraph& t, bool check_girth_cycles) {
    const Graph& g0 = t.graph;
    int g = t.g, n = g0.n(), m = int(t.border.size());

    std::vector<bool> on_border(std::size_t(n), false);
    for (int v : t.border) {
        if (on_border[std::size_t(v)]) throw tiling_error("border repeats vertex " + std::to_string(v));
        on_border[std::size_t(v)] = true;
    }
    if (m % 2 != 0) throw tiling_error("border length is odd");
    for (int i = 0; i < m; ++i)
        if (!g0.adjacent(t.border[std::size_t(i)], t.border[std::size_t((i + 1) % m)]))
            throw tiling_error("border is not a cycle at position " + std::to_string(i));

    for (int v = 0; v < n; ++v) {
        int d = g0.degree(v);
        if (on_border[std::size_t(v)]) {
            if (d != 2 && d != 3)
                throw tiling_error("border vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        } else if (d != 3) {
            throw tiling_error("interior vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        }
    }

    long long face_size_sum = 0;
    for (std::size_t fi = 0; fi < t.faces.size(); ++fi) {
        const auto& f = t.faces[fi];
        if (int(f.size()) != g) throw tiling_error("face " + std::to_string(fi) + " is not a g-gon");
        std::set<int> distinct(f.begin(), f.end());
        if (int(distinct.size()) != g) throw tiling_error("face " + std::to_string(fi) + " repeats a vertex");
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!g0.adjacent(f[i], f[(i + 1) % f.size()]))
                throw tiling_error("face " + std::to_string(fi) + " is not a cycle");
        face_size_sum += int(f.size());
    }
    // every edge on two faces: total face incidences = bounded + border
    if (face_size_sum + m != 2 * g0.edge_count())
        throw tiling_error("face incidence count off (an edge is not on two faces)");
    if (n - g0.edge_count() + static_cast<long long>(t.faces.size()) + 1 != 2)
        throw tiling_error("Euler's formula fails");
    // double count of Observation-style face bookkeeping
    long long n2 = 0;
    for (int v = 0; v < n; ++v)
        if (g0.degree(v) == 2) ++n2;
    if (3LL * n - n2 != 2 * g0.edge_count())
        throw tiling_error("degree double-count fails");

    // antipode: involutive automorphism rotating the border by half
    if (int(t.antipode.size()) != n) throw tiling_error("antipode is not total");
    for (int v = 0; v < n; ++v) {
        int w = t.antipode[std::size_t(v)];
        if (w < 0 || w >= n || t.antipode[std::size_t(w)] != v)
            throw tiling_error("antipode is not an involution at " + std::to_string(v));
    }
    for (auto [u, v] : g0.edges())
        if (!g0.adjacent(t.antipode[std::size_t(u)], t.antipode[std::size_t(v)]))
            throw tiling_error("antipode is not an automorphism");
    for (int i = 0; i < m; ++i) {
        int v = t.border[std::size_t(i)];
        if (t.antipode[std::size_t(v)] != t.border[std::size_t((i + m / 2) % m)])
            throw tiling_error("antipode does not halve the border");
    }

    // every degree-3 border vertex has a degree-2 neighbour that has a
    // degree-2 neighbour
    for (int i = 0; i < m; ++i) {
        int v = t.border[std::size_t(i)];
        if (g0.degree(v) != 3) continue;
        bool ok = false;
        g0.neighbours(v).for_each([&](int u) {
            if (ok || g0.degree(u) != 2) return;
            g0.neighbours(u).for_each([&](int w) {
                if (w != v && g0.degree(w) == 2) ok = true;
            });
        });
        if (!ok)
            throw tiling_error("degree-3 border vertex " + std::to_string(v) +
                               " lacks a degree-2 neighbour with a degree-2 neighbour");
    }

    if (check_girth_cycles) {
        auto gir = girth(g0);
        if (!gir || *gir != g) throw tiling_error("girth is not g");
        auto cycles = cycles_of_length(g0, g);
        if (cycles.size() != t.faces.size())
            throw tiling_error("number of g-cycles differs from number of bounded faces");
        std::set<std::vector<int>> face_sets;
        for (const auto& f : t.faces) {
            std::vector<int> s(f.begin(), f.end());
            std::sort(s.begin(), s.end());
            face_sets.insert(std::move(s));
        }
        for (const auto& c : cycles) {
            std::vector<int> s(c.begin(), c.end());
            std::sort(s.begin(), s.end());
            if (!face_sets.count(s)) throw tiling_error("a g-cycle is not a bounded face");
        }
    }
}

std::optional<std::vector<int>> find_u(const TilingGraph& t, int h) {
    if (h % 2 == 0 || h < 1) throw std::invalid_argument("find_u: h must be odd");
    const Graph& g0 = t.graph;
    int g = t.g;

    std::vector<int> candidates;
    for (int v : t.border)
        if (g0.degree(v) == 2) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end());
    if (int(candidates.size()) < 2 * h) return std::nullopt;

    std::map<int, std::vector<int>> dist_from;
    for (int c : candidates) dist_from[c] = bfs_dist(g0, c);
    auto far = [&](int a, int b) {
        int d = dist_from.at(a)[std::size_t(b)];
        return d < 0 || d >= g;
    };

    // (vi): precompute which pairs are fixed setwise by a non-identity
    // automorphism
    HomOptions aut_opts;
    aut_opts.bijective = true;
    auto auts = search_homs(g0, g0, aut_opts).maps;
    auto pair_ok = [&](int a, int b) {
        for (const auto& f : auts) {
            if (is_identity_map(f)) continue;
            int fa = f[std::size_t(a)], fb = f[std::size_t(b)];
            if ((fa == a && fb == b) || (fa == b && fb == a)) return false;
        }
        return true;
    };

    // choose u_0..u_{h-1}; the second half is forced as the antipodes
    std::vector<int> chosen;
    auto feasible = [&](int v) {
        for (int c : chosen) {
            if (!far(c, v) || !far(c, t.antipode[std::size_t(v)])) return false;
        }
        if (!far(v, t.antipode[std::size_t(v)])) return false;
        return true;
    };
    std::function<bool(std::size_t)> grow = [&](std::size_t from) {
        if (int(chosen.size()) == h) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            int v = candidates[i];
            if (!feasible(v)) continue;
            if (chosen.size() == 1 && !pair_ok(chosen[0], v)) continue;
            chosen.push_back(v);
            if (grow(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!grow(0)) return std::nullopt;

    std::vector<int> u = chosen;
    for (int i = 0; i < h; ++i) u.push_back(t.antipode[std::size_t(chosen[std::size_t(i)])]);
    return u;
}

std::vector<Edge> TilingFactor::straight_edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < base.n(); ++v) {
        int w = antipode[std::size_t(v)];
        if (base.degree(v) == 2 && v < w) out.emplace_back(v, w);
    }
    return out;
}

std::vector<Edge> TilingFactor::twisted_edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < h; ++i) {
        int a = u[std::size_t(2 * i)], b = u[std::size_t(2 * i + 1)];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

TilingFactor build_factor(const TilingGraph& t, const std::vector<int>& u) {
    int h = int(u.size()) / 2;
    if (int(u.size()) != 2 * h || h % 2 == 0)
        throw std::invalid_argument("build_factor: |U| must be 2h with h odd");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (t.graph.degree(u[i]) != 2 || !t.is_border(u[i]))
            throw std::invalid_argument("build_factor: U must consist of degree-2 border vertices");
        if (std::size_t(i) < std::size_t(h) &&
            t.antipode[std::size_t(u[i])] != u[i + std::size_t(h)])
            throw std::invalid_argument("build_factor: u_{i+h} must be the antipode of u_i");
    }

    TilingFactor f;
    f.base = t.graph;
    f.g = t.g;
    f.h = h;
    f.u = u;
    f.antipode = t.antipode;

    std::set<int> in_u(u.begin(), u.end());
    std::vector<Edge> straight_off_u, straight_all;
    for (int v = 0; v < t.graph.n(); ++v) {
        if (t.graph.degree(v) != 2) continue;
        int w = t.antipode[std::size_t(v)];
        if (v >= w) continue;
        straight_all.emplace_back(v, w);
        if (!in_u.count(v)) straight_off_u.emplace_back(v, w);
    }
    std::vector<Edge> twisted_off_first, twisted_all;
    for (int i = 0; i < h; ++i) {
        Edge e{std::min(u[std::size_t(2 * i)], u[std::size_t(2 * i + 1)]),
               std::max(u[std::size_t(2 * i)], u[std::size_t(2 * i + 1)])};
        twisted_all.push_back(e);
        if (i >= 1) twisted_off_first.push_back(e);
    }

    f.t = t.graph.with_edges(straight_off_u).with_edges(twisted_off_first);
    f.t_prime = t.graph.with_edges(straight_all);
    f.t_bar = f.t_prime.with_edges(twisted_all);

    // the factor invariants
    if (!is_regular(f.t_prime, 3)) throw tiling_error("T' is not cubic");
    Graph t_plus = f.t.with_edges({{u[0], u[1]}});
    if (!is_regular(t_plus, 3)) throw tiling_error("T + {u0,u1} is not cubic");
    int deg2 = 0;
    for (int v = 0; v < f.t.n(); ++v)
        if (f.t.degree(v) == 2) ++deg2;
    if (deg2 != 2 || f.t.degree(u[0]) != 2 || f.t.degree(u[1]) != 2)
        throw tiling_error("T must have exactly u0, u1 of degree 2");
    return f;
}

bool u_spread_check(const TilingFactor& f) {
    // each twisted edge is a >= g detour otherwise
    for (auto [a, b] : f.twisted_edges()) {
        Graph cut = f.t_bar.without_edges({{a, b}});
        auto d = dist(cut, a, b);
        if (d && *d < f.g) return false;
    }
    auto og = odd_girth(f.t_bar);
    if (!og || *og != f.g) return false;
    for (const auto& c : cycles_of_length(f.t_bar, f.g))
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!f.base.adjacent(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

TilingConditionReport check_tiling_conditions(const TilingGraph& t) {
    TilingConditionReport r;
    r.border_even = t.border.size() % 2 == 0;
    r.antipode_ok = true;
    for (auto [u, v] : t.graph.edges())
        if (!t.graph.adjacent(t.antipode[std::size_t(u)], t.antipode[std::size_t(v)]))
            r.antipode_ok = false;

    r.antipodal_distance = true;
    for (int v : t.border) {
        auto d = dist(t.graph, v, t.antipode[std::size_t(v)]);
        if (d && *d < t.g) {
            r.antipodal_distance = false;
            break;
        }
    }

    if (r.antipodal_distance) {
        r.u = find_u(t, default_h(t.g));
        r.u_found = r.u.has_value();
    }

    auto interior = t.interior_vertices();
    std::vector<bool> is_interior(std::size_t(t.graph.n()), false);
    for (int v : interior) is_interior[std::size_t(v)] = true;
    r.faces_have_interior = !t.faces.empty();
    for (const auto& face : t.faces) {
        bool has = false;
        for (int v : face)
            if (is_interior[std::size_t(v)]) has = true;
        if (!has) r.faces_have_interior = false;
    }

    if (!interior.empty()) {
        // connectivity of the induced interior subgraph
        std::vector<int> stack{interior[0]};
        std::set<int> seen{interior[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            t.graph.neighbours(v).for_each([&](int w) {
                if (is_interior[std::size_t(w)] && seen.insert(w).second) stack.push_back(w);
            });
        }
        r.interior_connected = seen.size() == interior.size();
    }
    return r;
}

AcceptedTiling first_accepting_tiling(int g, int max_generation) {
    TilingGraph t = base_tiling(g);
    for (int i = 1; i <= max_generation; ++i) {
        validate_tiling(t);
        auto report = check_tiling_conditions(t);
        if (report.accept()) {
            AcceptedTiling out;
            out.generation = i;
            out.factor = build_factor(t, *report.u);
            out.tiling = std::move(t);
            if (!u_spread_check(out.factor)) throw tiling_error("accepted factor fails the spread check");
            return out;
        }
        t = tiling_step(t);
    }
    throw tiling_error("no accepting generation up to the bound");
}

} // namespace rrg
