#pragma once

#include <string>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// One indicator per colour of the system it multiplies.
using IndicatorTuple = std::vector<Indicator>;

/// Where the gadget copy for one arc landed in the product.
struct GadgetCopy {
    int colour;       // colour index in the multiplied system
    Arc arc;          // the replaced arc
    int first_vertex; // copies occupy [first_vertex, first_vertex + size)
    int size;
};

struct SipGraph {
    Graph graph;
    std::vector<GadgetCopy> copies;
    int base_n = 0;  // vertices of the multiplied system come first
};

struct SipDigraph {
    Digraph digraph;
    std::vector<GadgetCopy> copies;
    int base_n = 0;
};

/// Undirected sip product D * S: every i-arc (x, y) is replaced by a fresh
/// copy of S_i attached by the undirected pairs {x, in} and {out, y}. All
/// indicators must be graphs.
SipGraph sip(const RelSystem& d, const IndicatorTuple& s);
SipGraph sip(const RelSystem& d, const Indicator& s);

/// Oriented sip product: arcs (x, in) and (out, y) only; indicators must be
/// oriented digraphs.
SipDigraph sip_vec(const RelSystem& d, const IndicatorTuple& s);
SipDigraph sip_vec(const RelSystem& d, const Indicator& s);

Graph cartesian(const Graph& g, const Graph& h);

/// Layered Cartesian product of the pair (g1, g2) with h: layer u uses
/// g_{f(u)} where f maps V(h) to {1, 2}.
Graph cartesian_variant(const Graph& g1, const Graph& g2, const std::vector<int>& f,
                        const Graph& h);

/// Vertex (x, u) of a product with |V(h)| layers.
inline int product_vertex(int x, int u, int layers) { return x * layers + u; }

/// Verifies the hom-set transport across the sip product: the maps
/// phi |-> phi * S must be exactly Hom(D*S, D'*S).
struct TransportReport {
    long long hom_count_base = 0;
    long long hom_count_product = 0;
    bool transported_all_valid = false;
    bool covers_product_homs = false;
    bool ok() const { return transported_all_valid && covers_product_homs; }
};

TransportReport hom_transport_check(const RelSystem& d, const RelSystem& d_prime,
                                    const IndicatorTuple& s, int jobs = 1);

/// phi * S on vertex maps: base vertices by phi, gadget copies to the copy
/// over the image arc.
std::vector<int> transport_map(const SipGraph& prod, const SipGraph& prod_image,
                               const RelSystem& d, const std::vector<int>& phi);

} // namespace rrg
