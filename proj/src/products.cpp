#include "rrg/products.hpp"

#include <algorithm>
#include <stdexcept>

#include "rrg/homsearch.hpp"
#include "rrg/indicator.hpp"
#include "rrg/metrics.hpp"

namespace rrg {

namespace {

/// Layout shared by both sip variants: base vertices first, then gadget
/// copies per (colour, arc-lex) order.
template <typename AddAttach, typename AddInner>
std::pair<int, std::vector<GadgetCopy>> lay_out(const RelSystem& d, const IndicatorTuple& s,
                                                AddAttach&& attach, AddInner&& inner) {
    if (int(s.size()) != d.colour_count())
        throw std::invalid_argument("sip: tuple length must match the colour count");
    int next = d.n();
    std::vector<GadgetCopy> copies;
    for (int c = 0; c < d.colour_count(); ++c) {
        const Indicator& ind = s[std::size_t(c)];
        int gn = ind.n();
        for (auto [x, y] : d.arcs(c)) {
            GadgetCopy copy{c, {x, y}, next, gn};
            inner(ind, next);
            attach(x, next + ind.in, next + ind.out, y);
            next += gn;
            copies.push_back(copy);
        }
    }
    return {next, std::move(copies)};
}

} // namespace

SipGraph sip(const RelSystem& d, const IndicatorTuple& s) {
    for (const auto& ind : s)
        if (!ind.is_graph()) throw std::invalid_argument("sip: indicators must be graphs");
    std::vector<Edge> edges;
    auto [n, copies] = lay_out(
        d, s,
        [&](int x, int in_v, int out_v, int y) {
            edges.emplace_back(x, in_v);
            edges.emplace_back(out_v, y);
        },
        [&](const Indicator& ind, int base) {
            for (auto [a, b] : ind.graph().edges()) edges.emplace_back(base + a, base + b);
        });
    SipGraph out;
    out.base_n = d.n();
    out.copies = std::move(copies);
    out.graph = Graph(n, edges);
    return out;
}

SipGraph sip(const RelSystem& d, const Indicator& s) {
    return sip(d, IndicatorTuple(std::size_t(d.colour_count()), s));
}

SipDigraph sip_vec(const RelSystem& d, const IndicatorTuple& s) {
    for (const auto& ind : s)
        if (ind.is_graph() || !ind.digraph().is_oriented())
            throw std::invalid_argument("sip_vec: indicators must be oriented digraphs");
    std::vector<Arc> arcs;
    auto [n, copies] = lay_out(
        d, s,
        [&](int x, int in_v, int out_v, int y) {
            arcs.emplace_back(x, in_v);
            arcs.emplace_back(out_v, y);
        },
        [&](const Indicator& ind, int base) {
            for (auto [a, b] : ind.digraph().arcs()) arcs.emplace_back(base + a, base + b);
        });
    SipDigraph out;
    out.base_n = d.n();
    out.copies = std::move(copies);
    out.digraph = Digraph(n, arcs);
    return out;
}

SipDigraph sip_vec(const RelSystem& d, const Indicator& s) {
    return sip_vec(d, IndicatorTuple(std::size_t(d.colour_count()), s));
}

Graph cartesian(const Graph& g, const Graph& h) {
    return cartesian_variant(g, g, std::vector<int>(std::size_t(h.n()), 1), h);
}

Graph cartesian_variant(const Graph& g1, const Graph& g2, const std::vector<int>& f,
                        const Graph& h) {
    if (g1.n() != g2.n())
        throw std::invalid_argument("cartesian_variant: factors must share a vertex set");
    if (int(f.size()) != h.n())
        throw std::invalid_argument("cartesian_variant: f must be total on V(h)");
    for (int x : f)
        if (x != 1 && x != 2) throw std::invalid_argument("cartesian_variant: f maps into {1,2}");
    int layers = h.n();
    std::vector<Edge> edges;
    for (int x = 0; x < g1.n(); ++x)
        for (auto [u, v] : h.edges())
            edges.emplace_back(product_vertex(x, u, layers), product_vertex(x, v, layers));
    for (int u = 0; u < h.n(); ++u) {
        const Graph& layer = f[std::size_t(u)] == 1 ? g1 : g2;
        for (auto [x, y] : layer.edges())
            edges.emplace_back(product_vertex(x, u, layers), product_vertex(y, u, layers));
    }
    return Graph(g1.n() * layers, edges);
}

std::vector<int> transport_map(const SipGraph& prod, const SipGraph& prod_image,
                               const RelSystem& d, const std::vector<int>& phi) {
    std::vector<int> out(std::size_t(prod.graph.n()), -1);
    for (int x = 0; x < prod.base_n; ++x) out[std::size_t(x)] = phi[std::size_t(x)];
    for (const auto& copy : prod.copies) {
        Arc image{phi[std::size_t(copy.arc.first)], phi[std::size_t(copy.arc.second)]};
        const GadgetCopy* target = nullptr;
        for (const auto& cand : prod_image.copies)
            if (cand.colour == copy.colour && cand.arc == image) {
                target = &cand;
                break;
            }
        if (!target) throw std::logic_error("transport_map: image arc has no gadget copy");
        for (int k = 0; k < copy.size; ++k)
            out[std::size_t(copy.first_vertex + k)] = target->first_vertex + k;
    }
    return out;
}

TransportReport hom_transport_check(const RelSystem& d, const RelSystem& d_prime,
                                    const IndicatorTuple& s, int jobs) {
    for (const RelSystem* sys : {&d, &d_prime})
        for (int v = 0; v < sys->n(); ++v)
            if (sys->in_degree(v) == 0 || sys->out_degree(v) == 0)
                throw std::invalid_argument(
                    "hom_transport_check: systems must have min in/out degree >= 1");
    IndicatorReport rep = indicator_hypotheses(s);
    if (!rep.pass())
        throw std::invalid_argument("hom_transport_check: indicator hypotheses fail: " +
                                    rep.summary());

    SipGraph left = sip(d, s);
    SipGraph right = sip(d_prime, s);

    HomOptions o;
    o.jobs = jobs;
    auto base_homs = enumerate_homs(d, d_prime, o);
    auto prod_homs = enumerate_homs(left.graph, right.graph, o);

    TransportReport out;
    out.hom_count_base = static_cast<long long>(base_homs.size());
    out.hom_count_product = static_cast<long long>(prod_homs.size());

    std::vector<std::vector<int>> transported;
    transported.reserve(base_homs.size());
    for (const auto& phi : base_homs) transported.push_back(transport_map(left, right, d, phi));
    std::sort(transported.begin(), transported.end());

    out.transported_all_valid = true;
    for (const auto& m : transported)
        if (!std::binary_search(prod_homs.begin(), prod_homs.end(), m)) {
            out.transported_all_valid = false;
            break;
        }
    out.covers_product_homs = transported == prod_homs;
    return out;
}

} // namespace rrg
