#include "rrg/indicator.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>

#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"
#include "rrg/sausage.hpp"

namespace rrg {

namespace {

Graph underlying_of(const Indicator& s) {
    return s.is_graph() ? s.graph() : s.digraph().underlying();
}

/// Is v on a cycle of exactly the given length?
bool on_cycle_of_length(const Graph& g, int v, int len) {
    auto dist_back = bfs_dist(g, v);
    std::vector<int> path{v};
    Bitset on_path(g.n());
    on_path.set(v);
    std::function<bool()> dfs = [&]() {
        int cur = path.back();
        int remaining = len - int(path.size());
        if (remaining == 0) return g.adjacent(cur, v);
        bool found = false;
        g.neighbours(cur).for_each([&](int u) {
            if (found || on_path.test(u)) return;
            if (dist_back[std::size_t(u)] < 0 || dist_back[std::size_t(u)] > remaining) return;
            path.push_back(u);
            on_path.set(u);
            found = dfs();
            on_path.reset(u);
            path.pop_back();
        });
        return found;
    };
    return dfs();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

bool IndicatorReport::pass() const {
    return connected.pass && rigidity.known && rigidity.pass && odd_girth_is_g.pass &&
           cycle_cover.pass && inout_gap.pass && odd_path_gap.pass;
}

bool IndicatorReport::pass_except_rigidity() const {
    return connected.pass && odd_girth_is_g.pass && cycle_cover.pass && inout_gap.pass &&
           odd_path_gap.pass;
}

std::string IndicatorReport::summary() const {
    auto line = [](const char* name, const HypothesisCheck& c) {
        std::string s = std::string(name) + "=" + (!c.known ? "unknown" : c.pass ? "pass" : "FAIL");
        if (!c.note.empty()) s += " (" + c.note + ")";
        return s;
    };
    return line("connected", connected) + ", " + line("rigidity", rigidity) + ", " +
           line("odd_girth", odd_girth_is_g) + ", " + line("cycle_cover", cycle_cover) + ", " +
           line("inout_gap", inout_gap) + ", " + line("odd_path_gap", odd_path_gap);
}

IndicatorReport indicator_hypotheses(const IndicatorTuple& s, std::optional<int> expected_g,
                                     double rigidity_budget_s, int jobs) {
    if (s.empty()) throw std::invalid_argument("indicator_hypotheses: empty tuple");
    bool graphs = s.front().is_graph();
    for (const auto& ind : s) {
        if (ind.is_graph() != graphs)
            throw std::invalid_argument("indicator_hypotheses: mixed indicator kinds");
        if (!graphs && !ind.digraph().is_oriented())
            throw std::invalid_argument("indicator_hypotheses: directed indicators must be oriented");
    }

    IndicatorReport rep;

    rep.connected.pass = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Graph u = underlying_of(s[i]);
        if (!is_connected(u)) {
            rep.connected.pass = false;
            rep.connected.note = "member " + std::to_string(i);
        }
    }

    rep.odd_girth_is_g.pass = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto og = odd_girth(underlying_of(s[i]));
        if (!og) {
            rep.odd_girth_is_g.pass = false;
            rep.odd_girth_is_g.note = "member " + std::to_string(i) + " is bipartite";
            break;
        }
        if (i == 0) rep.g = *og;
        if (*og != rep.g) {
            rep.odd_girth_is_g.pass = false;
            rep.odd_girth_is_g.note = "odd girths differ across the tuple";
        }
    }
    if (rep.odd_girth_is_g.pass && expected_g && rep.g != *expected_g) {
        rep.odd_girth_is_g.pass = false;
        rep.odd_girth_is_g.note = "odd girth " + std::to_string(rep.g) + " instead of " +
                                  std::to_string(*expected_g);
    }

    rep.cycle_cover.pass = rep.odd_girth_is_g.pass;
    if (rep.cycle_cover.pass)
        for (std::size_t i = 0; i < s.size() && rep.cycle_cover.pass; ++i) {
            Graph u = underlying_of(s[i]);
            for (int v = 0; v < u.n(); ++v)
                if (!on_cycle_of_length(u, v, rep.g)) {
                    rep.cycle_cover.pass = false;
                    rep.cycle_cover.note =
                        "member " + std::to_string(i) + " vertex " + std::to_string(v);
                    break;
                }
        }

    rep.inout_gap.pass = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool ok;
        if (graphs) {
            auto d = dist(s[i].graph(), s[i].in, s[i].out);
            ok = !d || *d >= 3;
        } else {
            auto d = directed_dist(s[i].digraph(), s[i].out, s[i].in);
            ok = !d || *d >= 3;
        }
        if (!ok) {
            rep.inout_gap.pass = false;
            rep.inout_gap.note = "member " + std::to_string(i);
        }
    }

    rep.odd_path_gap.pass = rep.odd_girth_is_g.pass;
    if (rep.odd_path_gap.pass)
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto short_odd = min_odd_path(underlying_of(s[i]), s[i].in, s[i].out, rep.g);
            if (short_odd) {
                rep.odd_path_gap.pass = false;
                rep.odd_path_gap.note = "member " + std::to_string(i) + " has an odd path of length " +
                                        std::to_string(*short_odd);
            }
        }

    // rigidity / mutual rigidity, optionally under a wall-clock budget
    auto t0 = std::chrono::steady_clock::now();
    auto remaining = [&]() -> std::optional<double> {
        if (rigidity_budget_s < 0) return std::nullopt;
        return std::max(0.01, rigidity_budget_s - seconds_since(t0));
    };
    rep.rigidity.pass = true;
    auto run_rigid = [&](const Indicator& ind) -> std::optional<bool> {
        HomOptions o;
        o.mode = HomMode::FindNonIdentity;
        o.jobs = jobs;
        o.time_limit_s = remaining();
        HomResult r = ind.is_graph() ? search_homs(ind.graph(), ind.graph(), o)
                                     : search_homs(ind.digraph(), ind.digraph(), o);
        if (r.found()) return false;
        if (!r.complete) return std::nullopt;
        return true;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto ok = run_rigid(s[i]);
        if (!ok.has_value()) {
            rep.rigidity.known = false;
            rep.rigidity.note = "budget exhausted on member " + std::to_string(i);
            break;
        }
        if (!*ok) {
            rep.rigidity.pass = false;
            rep.rigidity.note = "member " + std::to_string(i) + " is not rigid";
            break;
        }
    }
    if (rep.rigidity.known && rep.rigidity.pass)
        for (std::size_t i = 0; i < s.size() && rep.rigidity.known && rep.rigidity.pass; ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (i == j) continue;
                HomOptions o;
                o.mode = HomMode::FindFirst;
                o.jobs = jobs;
                o.time_limit_s = remaining();
                HomResult r = graphs ? search_homs(s[i].graph(), s[j].graph(), o)
                                     : search_homs(s[i].digraph(), s[j].digraph(), o);
                if (r.found()) {
                    rep.rigidity.pass = false;
                    rep.rigidity.note = "homomorphism from member " + std::to_string(i) + " to " +
                                        std::to_string(j);
                    break;
                }
                if (!r.complete) {
                    rep.rigidity.known = false;
                    rep.rigidity.note = "budget exhausted on cross pair";
                    break;
                }
            }
    return rep;
}

const AcceptedTiling& tiling_factor_for(int g) {
    static std::mutex mu;
    static std::map<int, AcceptedTiling> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, first_accepting_tiling(g)).first;
    return it->second;
}

long long indicator_size_estimate(int d, int g) {
    if (d < 3 || g < 7 || g % 2 == 0)
        throw std::invalid_argument("indicator: need d >= 3 and odd g >= 7");
    long long t_size = tiling_factor_for(g).factor.t.n();
    if (d == 3) return t_size;
    if (d == 4) return 2 * t_size;
    if (d == 5) return (2LL * g + 1) * t_size;
    long long inner = indicator_size_estimate(d - 3, g + 2);
    long long f1_n = 2LL * (d - 3) + 2 * (d - 4) + 4;
    long long f1_arcs = f1_n * (d - 3) / 2;
    long long h_size = f1_n + f1_arcs * inner;
    return t_size * h_size;
}

namespace {

IndicatorBuild with_pair_law_checked(IndicatorBuild b) {
    if (!indicator_degree_law(b.indicator, b.d))
        throw std::logic_error("build_indicator: degree law violated");
    return b;
}

} // namespace

bool indicator_degree_law(const Indicator& s, int d) {
    const Graph& g = s.graph();
    for (int v = 0; v < g.n(); ++v) {
        int expect = (v == s.in || v == s.out) ? d - 1 : d;
        if (g.degree(v) != expect) return false;
    }
    return true;
}

IndicatorBuild build_indicator_full(int d, int g, long long vertex_cap) {
    long long estimate = indicator_size_estimate(d, g);
    if (estimate > vertex_cap) throw SizeCapError(estimate, vertex_cap);

    const AcceptedTiling& acc = tiling_factor_for(g);
    const TilingFactor& f = acc.factor;
    int u0 = f.u[0], u1 = f.u[1];

    IndicatorBuild out;
    out.d = d;
    out.g = g;
    out.t = f.t;
    out.t_prime = f.t_prime;
    out.u = f.u;

    if (d == 3) {
        out.indicator = Indicator(f.t, u0, u1);
        return with_pair_law_checked(std::move(out));
    }
    if (d == 4) {
        Graph k2 = path_graph(2);
        std::vector<int> fmap{1, 2};
        Graph p = cartesian_variant(f.t, f.t_prime, fmap, k2);
        out.layers = 2;
        out.indicator = Indicator(p, product_vertex(u0, 0, 2), product_vertex(u1, 0, 2));
        return with_pair_law_checked(std::move(out));
    }
    if (d == 5) {
        int layers = 2 * g + 1;
        Graph c = cycle_graph(layers);
        std::vector<int> fmap(std::size_t(layers), 2);
        fmap[0] = 1;
        fmap[std::size_t(g)] = 1;  // the two special layers sit at distance g
        Graph p = cartesian_variant(f.t, f.t_prime, fmap, c);
        p = p.with_edges({{product_vertex(u1, 0, layers), product_vertex(u0, g, layers)}});
        out.layers = layers;
        out.indicator =
            Indicator(p, product_vertex(u0, 0, layers), product_vertex(u1, g, layers));
        return with_pair_law_checked(std::move(out));
    }

    // d >= 6: layer graph H = D * S(d-3, g+2) for a constant-degree rigid
    // gadget digraph D
    IndicatorBuild inner = build_indicator_full(d - 3, g + 2, vertex_cap);
    Sausage d_gadget = family_f1(d - 3, 1);
    SipGraph h = sip(RelSystem::from_digraph(d_gadget.digraph), inner.indicator);
    int layers = h.graph.n();
    std::vector<int> fmap(std::size_t(layers), 2);
    fmap[0] = 1;
    Graph p = cartesian_variant(f.t, f.t_prime, fmap, h.graph);
    out.layers = layers;
    out.indicator = Indicator(p, product_vertex(u0, 0, layers), product_vertex(u1, 0, layers));
    return with_pair_law_checked(std::move(out));
}

Indicator build_indicator(int d, int g, long long vertex_cap) {
    return build_indicator_full(d, g, vertex_cap).indicator;
}

std::vector<Graph> rigid_family(int d, int g, int count, long long vertex_cap) {
    if (count < 1) throw std::invalid_argument("rigid_family: count >= 1");
    Indicator s = build_indicator(d, g, vertex_cap);
    std::vector<Graph> out;
    for (int l = 1; l <= count; ++l) {
        Sausage member = family_f1(d, l);
        long long estimate =
            member.digraph.n() + member.digraph.arc_count() * static_cast<long long>(s.n());
        if (estimate > vertex_cap) throw SizeCapError(estimate, vertex_cap);
        out.push_back(sip(RelSystem::from_digraph(member.digraph), s).graph);
    }
    return out;
}

} // namespace rrg
