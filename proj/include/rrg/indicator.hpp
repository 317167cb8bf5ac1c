#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrg/graph.hpp"
#include "rrg/products.hpp"
#include "rrg/tiling.hpp"

namespace rrg {

/// One gadget-replacement hypothesis, with a short witness on failure and a
/// known flag for budgeted checks.
struct HypothesisCheck {
    bool known = true;
    bool pass = false;
    std::string note;
};

struct IndicatorReport {
    int g = 0;  // common oriented odd girth of the tuple
    HypothesisCheck connected;      // every indicator connected
    HypothesisCheck rigidity;       // rigid / mutually rigid (may be budgeted)
    HypothesisCheck odd_girth_is_g; // oriented odd girth exactly g, all members
    HypothesisCheck cycle_cover;    // a g-cycle through every vertex
    HypothesisCheck inout_gap;      // (iv) / (iv'): in-out separation >= 3
    HypothesisCheck odd_path_gap;   // no odd in-out path shorter than g

    bool pass() const;
    /// Everything except possibly-budgeted rigidity passes.
    bool pass_except_rigidity() const;
    bool partial() const { return !rigidity.known; }
    std::string summary() const;
};

/// Checks the gadget-replacement hypotheses for a tuple of indicators (all
/// graphs, or all oriented digraphs, in which case the directed-path form
/// of the separation condition applies). rigidity_budget_s < 0 means
/// unlimited.
IndicatorReport indicator_hypotheses(const IndicatorTuple& s,
                                     std::optional<int> expected_g = std::nullopt,
                                     double rigidity_budget_s = -1.0, int jobs = 1);

class SizeCapError : public std::runtime_error {
public:
    SizeCapError(long long estimate, long long cap)
        : std::runtime_error("construction would have about " + std::to_string(estimate) +
                             " vertices, over the cap of " + std::to_string(cap)),
          estimate_(estimate), cap_(cap) {}

    long long estimate() const { return estimate_; }
    long long cap() const { return cap_; }

private:
    long long estimate_, cap_;
};

/// Predicted vertex count of the order-d odd-girth-g indicator.
long long indicator_size_estimate(int d, int g);

struct IndicatorBuild {
    Indicator indicator;  // graph kind, degree d-1 at the pair, d elsewhere
    int d = 0;
    int g = 0;
    Graph t, t_prime;     // the tiling factor pair at this level
    std::vector<int> u;   // its U
    int layers = 0;       // |V(H)| of the layered product (0 when d = 3)
};

IndicatorBuild build_indicator_full(int d, int g, long long vertex_cap = 1'000'000);
Indicator build_indicator(int d, int g, long long vertex_cap = 1'000'000);

/// The cached accepted tiling factor for odd girth g.
const AcceptedTiling& tiling_factor_for(int g);

/// d-regular odd-girth-g mutually rigid family members: the first `count`
/// constant-degree gadget digraphs with each arc replaced by the order-d
/// indicator.
std::vector<Graph> rigid_family(int d, int g, int count, long long vertex_cap = 1'000'000);

/// Degree law of a d-indicator: d-1 at the pair, d elsewhere.
bool indicator_degree_law(const Indicator& s, int d);

} // namespace rrg
