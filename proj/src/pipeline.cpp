#include "rrg/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "rrg/canon.hpp"
#include "rrg/codec.hpp"
#include "rrg/homsearch.hpp"
#include "rrg/indicator.hpp"
#include "rrg/metrics.hpp"
#include "rrg/products.hpp"
#include "rrg/sausage.hpp"

namespace rrg {

namespace {

struct PublishedCode {
    const char* g6;
    int n;
    int d;
    bool rigid_witness;  // else: quartic family seed (asymmetric, triangle-free)
};

// the computer-found minimum-order rigid graphs and the quartic family seeds
const PublishedCode kPublished[] = {
    {"MCHY@e??KOCBOC?g_", 14, 3, true},
    {"I}hP?sM@w", 10, 4, true},
    {"I}qr@s]Bw", 10, 5, true},
    {"J~zcqgjDw^_", 11, 6, true},
    {"K~~edXUHwv`~", 12, 7, true},
    {"K~~vUefRxzb~", 12, 8, true},
    {"Ms`rQ_gC?Q_e?b?[_", 14, 4, false},
    {"Os`raOgCOW?O?O?L_Do?{", 16, 4, false},
    {"Qs`raOgE?I?S?O?I?Ao?e?AK?FG", 18, 4, false},
    {"Ss`raOgE?J?W?G?C_A??Q?@g?Co?D_?A[", 20, 4, false},
    {"Us`AA?cG`AA_CgCS@`?S?AO??_O?gW?W_?AH??XG", 22, 4, false},
    {"Ws`AA?cG`AA_CgCO@_?S?AW??S??_O?WC?GS??h??BD??II", 24, 4, false},
};

void add_line(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.lines.push_back({name, pass, detail});
}

bool edge_on_c4(const Graph& g, int a, int b) {
    bool found = false;
    g.neighbours(a).for_each([&](int ap) {
        if (found || ap == b) return;
        g.neighbours(b).for_each([&](int bp) {
            if (found || bp == a || bp == ap) return;
            if (g.adjacent(ap, bp)) found = true;
        });
    });
    return found;
}

} // namespace

SuiteReport verify_published_codes(int jobs) {
    SuiteReport rep;
    HomOptions opts;
    opts.jobs = jobs;
    for (const auto& item : kPublished) {
        std::string name = std::string("code ") + item.g6;
        try {
            Graph g = parse_g6(item.g6);
            bool ok = g.n() == item.n && is_regular(g, item.d) && is_connected(g);
            std::string detail;
            if (!ok) detail = "order or regularity mismatch";
            if (ok) {
                if (item.rigid_witness) {
                    ok = is_rigid(g, opts);
                    if (!ok) detail = "not rigid";
                } else {
                    ok = is_asymmetric(g, opts) && !is_bipartite(g) && is_triangle_free(g);
                    if (!ok) detail = "family seed conditions fail";
                }
            }
            add_line(rep, name, ok, detail);
        } catch (const std::exception& e) {
            add_line(rep, name, false, e.what());
        }
    }
    return rep;
}

Graph cubic_family_member(int r) {
    if (r < 0) throw std::invalid_argument("cubic_family_member: r >= 0");
    Graph g = parse_g6("MCHY@e??KOCBOC?g_");
    int a_prev = 1, b_prev = 12;  // the two marked vertices of the base drawing
    for (int step = 1; step <= r; ++step) {
        int a_new = g.n();
        int b_new = g.n() + 1;
        g = Graph(g.n() + 2, g.edges())
                .without_edges({{std::min(a_prev, 6), std::max(a_prev, 6)},
                                {std::min(b_prev, 13), std::max(b_prev, 13)}})
                .with_edges({{a_prev, a_new}, {a_new, 6}, {b_prev, b_new}, {b_new, 13},
                             {a_new, b_new}});
        a_prev = a_new;
        b_prev = b_new;
    }
    return g;
}

SuiteReport verify_cubic_family(int max_r, int jobs) {
    SuiteReport rep;
    HomOptions opts;
    opts.jobs = jobs;
    for (int r = 0; r <= max_r; ++r) {
        Graph g = cubic_family_member(r);
        bool ok = g.n() == 14 + 2 * r && is_connected(g) && is_regular(g, 3) &&
                  !is_bipartite(g) && is_triangle_free(g) && is_asymmetric(g, opts);
        add_line(rep, "cubic family r=" + std::to_string(r), ok);
    }
    return rep;
}

namespace {

/// The quartic seed with its chosen induced matching; the choice is the
/// lexicographically first one whose splice passes the four-edge test.
struct QuarticSeed {
    Graph graph;
    Edge e, f;
};

Graph splice(const Graph& seed, Edge e, Edge f, int k) {
    auto [u, v] = e;
    auto [w, z] = f;
    int base = seed.n();
    auto hv = [&](int c, int p) { return base + product_vertex(c - 1, p - 1, k); };  // c in 1..4, p in 1..k

    std::vector<Edge> edges = seed.without_edges({e, f}).edges();
    for (int p = 1; p <= k; ++p) {
        // C4 layer 1-2-3-4
        edges.emplace_back(hv(1, p), hv(2, p));
        edges.emplace_back(hv(2, p), hv(3, p));
        edges.emplace_back(hv(3, p), hv(4, p));
        edges.emplace_back(hv(4, p), hv(1, p));
    }
    for (int p = 1; p < k; ++p)
        for (int c = 1; c <= 4; ++c) edges.emplace_back(hv(c, p), hv(c, p + 1));
    edges.emplace_back(hv(2, 1), hv(3, k));
    edges.emplace_back(hv(3, 1), hv(2, k));
    edges.emplace_back(u, hv(1, 1));
    edges.emplace_back(v, hv(4, 1));
    edges.emplace_back(w, hv(1, k));
    edges.emplace_back(z, hv(4, k));
    return Graph(base + 4 * k, edges);
}

QuarticSeed quartic_seed(int seed_index) {
    if (seed_index < 0 || seed_index > 1)
        throw std::invalid_argument("quartic seed index must be 0 or 1");
    Graph g = parse_g6(seed_index == 0 ? "Ms`rQ_gC?Q_e?b?[_" : "Os`raOgCOW?O?O?L_Do?{");
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [u, v] = edges[i];
            auto [w, z] = edges[j];
            std::set<int> ends{u, v, w, z};
            if (ends.size() != 4) continue;
            // induced: exactly the two matching edges inside {u,v,w,z}
            int inside = 0;
            std::vector<int> e4(ends.begin(), ends.end());
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b)
                    if (g.adjacent(e4[a], e4[b])) ++inside;
            if (inside != 2) continue;

            // the four splice edges must avoid every 4-cycle while the rest
            // of the spliced graph keeps each edge on one
            Graph probe = splice(g, edges[i], edges[j], 3);
            int base = g.n();
            auto hv = [&](int c, int p) { return base + product_vertex(c - 1, p - 1, 3); };
            std::vector<Edge> splice_edges{{u, hv(1, 1)}, {v, hv(4, 1)}, {w, hv(1, 3)}, {z, hv(4, 3)}};
            bool ok = true;
            for (auto [a, b] : splice_edges)
                if (edge_on_c4(probe, a, b)) ok = false;
            for (auto [a, b] : probe.edges()) {
                bool is_splice = false;
                for (auto [c, d] : splice_edges)
                    if (std::min(a, b) == std::min(c, d) && std::max(a, b) == std::max(c, d))
                        is_splice = true;
                if (!is_splice && !edge_on_c4(probe, a, b)) ok = false;
            }
            if (ok) return {g, edges[i], edges[j]};
        }
    throw std::logic_error("quartic seed: no usable induced matching found");
}

} // namespace

Graph quartic_family_member(int k, int seed_index) {
    if (k < 3) throw std::invalid_argument("quartic_family_member: k >= 3");
    QuarticSeed s = quartic_seed(seed_index);
    return splice(s.graph, s.e, s.f, k);
}

SuiteReport verify_quartic_family(int min_k, int max_k, int jobs) {
    SuiteReport rep;
    HomOptions opts;
    opts.jobs = jobs;
    for (int k = min_k; k <= max_k; ++k) {
        Graph g = quartic_family_member(k);
        bool ok = g.n() == 14 + 4 * k && is_connected(g) && is_regular(g, 4) &&
                  !is_bipartite(g) && is_triangle_free(g) && is_asymmetric(g, opts);
        add_line(rep, "quartic family k=" + std::to_string(k), ok);
    }
    return rep;
}

SuiteReport verify_complement_rigidity(int jobs) {
    SuiteReport rep;
    HomOptions opts;
    opts.jobs = jobs;
    auto check = [&](const std::string& name, const Graph& g, int d) {
        Graph co = complement(g);
        bool ok = is_regular(co, g.n() - d - 1) && is_rigid(co, opts);
        add_line(rep, "complement of " + name, ok);
    };
    check("cubic family r=0", cubic_family_member(0), 3);
    check("cubic family r=1", cubic_family_member(1), 3);
    check("quartic seed n=14", parse_g6("Ms`rQ_gC?Q_e?b?[_"), 4);
    return rep;
}

SuiteReport section3_suite(int max_r, int max_k, int jobs) {
    SuiteReport rep;
    for (auto part : {verify_published_codes(jobs), verify_cubic_family(max_r, jobs),
                      verify_quartic_family(3, max_k, jobs), verify_complement_rigidity(jobs)})
        for (auto& line : part.lines) rep.lines.push_back(std::move(line));
    return rep;
}

RepresentationResult represent(const Monoid& m, int g, long long vertex_cap, double end_budget_s,
                               int jobs) {
    if (g < 7 || g % 2 == 0) throw std::invalid_argument("represent: need odd g >= 7");
    RepresentationResult out;
    out.g = g;

    StagedSystem staged = homogenize(m);
    RelSystem star = staged.system;
    out.log.push_back("degree-constant system: n=" + std::to_string(star.n()) + ", colours=" +
                      std::to_string(star.colour_count()));

    // pad with loop colours until the system sits inside the min-in/out-1
    // world with total degree at least 3
    {
        int min_in = star.n() ? star.in_degree(0) : 0, min_out = star.n() ? star.out_degree(0) : 0;
        for (int v = 0; v < star.n(); ++v) {
            min_in = std::min(min_in, star.in_degree(v));
            min_out = std::min(min_out, star.out_degree(v));
        }
        int total = star.n() ? star.total_degree(0) : 0;
        int pads = 0;
        while ((min_in + pads == 0) || (min_out + pads == 0) || (total + 2 * pads < 3)) ++pads;
        if (pads > 0) {
            std::vector<std::string> colours = star.colours();
            std::map<std::string, std::vector<Arc>> arcs;
            for (int c = 0; c < star.colour_count(); ++c) arcs[colours[std::size_t(c)]] = star.arcs(c);
            for (int p = 0; p < pads; ++p) {
                std::string name = "pad:" + std::to_string(p);
                colours.push_back(name);
                auto& list = arcs[name];
                for (int v = 0; v < star.n(); ++v) list.emplace_back(v, v);
            }
            star = RelSystem(star.n(), colours, arcs);
            out.log.push_back("added " + std::to_string(pads) + " loop colour(s)");
        }
    }
    out.system_vertices = star.n();
    out.d = star.n() ? star.total_degree(0) : 0;
    for (int v = 0; v < star.n(); ++v)
        if (star.total_degree(v) != out.d)
            throw std::logic_error("represent: padded system is not degree-constant");
    int d = out.d;
    int k = star.colour_count();
    out.log.push_back("common total degree d=" + std::to_string(d) + ", k=" + std::to_string(k));

    // one oriented gadget per colour
    IndicatorTuple tuple;
    long long d_size = star.n();
    for (int c = 0; c < k; ++c) {
        int ell = 2 + c;
        long long gadget = 2LL * ell * d + 2 * (d - 1) + 4;
        d_size += star.arc_count(c) * gadget;
        if (d_size > vertex_cap) throw SizeCapError(d_size, vertex_cap);
    }
    for (int c = 0; c < k; ++c) tuple.push_back(family_f2(d, 2 + c).indicator);
    {
        IndicatorReport rep = indicator_hypotheses(tuple, 3, -1.0, jobs);
        if (!rep.pass())
            throw std::logic_error("represent: oriented gadget tuple fails its hypotheses: " +
                                   rep.summary());
    }
    SipDigraph dig = sip_vec(star, tuple);
    out.digraph_vertices = dig.digraph.n();
    out.log.push_back("oriented gadget pass: n=" + std::to_string(dig.digraph.n()));
    for (int v = 0; v < dig.digraph.n(); ++v)
        if (dig.digraph.total_degree(v) != d)
            throw std::logic_error("represent: gadget digraph is not degree-d");

    long long s_size = indicator_size_estimate(d, g);
    long long g_size = dig.digraph.n() + dig.digraph.arc_count() * s_size;
    if (g_size > vertex_cap) throw SizeCapError(g_size, vertex_cap);

    Indicator s = build_indicator(d, g, vertex_cap);
    SipGraph product = sip(RelSystem::from_digraph(dig.digraph), s);
    out.graph = product.graph;
    out.log.push_back("final graph: n=" + std::to_string(out.graph.n()));

    if (!is_regular(out.graph, d)) throw std::logic_error("represent: output graph is not d-regular");
    auto og = odd_girth(out.graph);
    if (!og || *og != g) throw std::logic_error("represent: output graph has the wrong odd girth");

    if (end_budget_s >= 0) {
        out.end_certificate_attempted = true;
        HomOptions o;
        o.jobs = jobs;
        o.time_limit_s = end_budget_s;
        o.limit = m.size() + 1;
        HomResult r = search_homs(out.graph, out.graph, o);
        out.end_certificate_complete = r.complete;
        if (r.complete && static_cast<long long>(r.maps.size()) == m.size()) {
            auto em = end_monoid_from_maps(r.maps);
            Monoid end_m(em.table, em.identity);
            out.end_certificate_ok = monoid_iso(end_m, m).has_value();
        }
        out.log.push_back(std::string("End certificate: ") +
                          (out.end_certificate_complete ? (out.end_certificate_ok ? "ok" : "FAILED")
                                                        : "budget exhausted"));
    }
    return out;
}

NuReport search_nu(int degree, int max_n, bool rigid_predicate, int min_girth, int jobs) {
    NuReport rep;
    rep.degree = degree;
    rep.rigid_predicate = rigid_predicate;
    rep.verdicts = scan_orders(degree, degree + 1, max_n, min_girth, rigid_predicate,
                               /*stop_at_first_hit=*/true, jobs);
    // a disconnected witness needs every component to be a smaller witness
    // itself (rigid: mutually rigid components; asymmetric: pairwise
    // non-isomorphic asymmetric components), so the connected minimum is the
    // overall minimum
    for (const auto& v : rep.verdicts)
        if (v.found && !rep.minimum_order) rep.minimum_order = v.n;
    return rep;
}

std::vector<Table1Cell> table1_rows(double budget_s, int jobs) {
    struct Want {
        int d, girth, max_n;
    };
    const Want cells[] = {{3, 4, 16}, {3, 5, 18}, {4, 4, 15}};
    std::vector<Table1Cell> out;
    for (const auto& want : cells) {
        Table1Cell cell;
        cell.degree = want.d;
        cell.girth = want.girth;
        auto started = std::chrono::steady_clock::now();
        auto elapsed = [&]() {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        };
        try {
            for (int rigid = 0; rigid <= 1; ++rigid) {
                NuReport rep = search_nu(want.d, want.max_n, rigid == 1, want.girth, jobs);
                if (rigid)
                    cell.smallest_rigid = rep.minimum_order;
                else
                    cell.smallest_asymmetric = rep.minimum_order;
                if (budget_s > 0 && elapsed() > budget_s) {
                    cell.skipped = true;
                    break;
                }
            }
        } catch (const std::exception&) {
            cell.skipped = true;
        }
        out.push_back(cell);
    }
    return out;
}

} // namespace rrg
