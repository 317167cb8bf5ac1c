#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrg/generate.hpp"
#include "rrg/graph.hpp"
#include "rrg/homogenize.hpp"
#include "rrg/monoid.hpp"

namespace rrg {

/// End product of the monoid-to-regular-graph pipeline, with the
/// always-on structural certificates and the optional End(G) one.
struct RepresentationResult {
    Graph graph;
    int d = 0;
    int g = 0;
    long long system_vertices = 0;   // |V| of the degree-constant system
    long long digraph_vertices = 0;  // |V| after the oriented gadget pass
    bool end_certificate_attempted = false;
    bool end_certificate_complete = false;
    bool end_certificate_ok = false;
    std::vector<std::string> log;
};

/// Monoid -> d-regular graph of odd girth g with End(G) = M. The End
/// certificate search runs under the given wall-clock budget (<0 disables
/// it). Throws SizeCapError when the construction would exceed vertex_cap.
RepresentationResult represent(const Monoid& m, int g, long long vertex_cap = 1'000'000,
                               double end_budget_s = -1.0, int jobs = 1);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckLine> lines;
    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

/// The published g6 codes: stated order and regularity, rigidity for the
/// minimum-order witnesses, and the connected/asymmetric/4-regular/
/// non-bipartite/triangle-free list for the quartic family seeds.
SuiteReport verify_published_codes(int jobs = 1);

/// The subdivision family G_r: connected, asymmetric, 3-regular,
/// non-bipartite, triangle-free on 14 + 2r vertices.
Graph cubic_family_member(int r);
SuiteReport verify_cubic_family(int max_r, int jobs = 1);

/// The quartic splice family G_k built from C4 x P_k plus two twisted
/// edges, spliced into a seed graph over an induced matching.
Graph quartic_family_member(int k, int seed_index = 0);
SuiteReport verify_quartic_family(int min_k, int max_k, int jobs = 1);

/// Complements of the asymmetric triangle-free family members are rigid.
SuiteReport verify_complement_rigidity(int jobs = 1);

/// All published-code checks plus both families and the complements.
SuiteReport section3_suite(int max_r, int max_k, int jobs = 1);

/// Minimum orders: exhaustive scan for the smallest rigid (nu) or
/// asymmetric (mu) connected d-regular graph, plus the verdict list. The
/// composition rule for disconnected graphs is applied to the report:
/// a disconnected rigid d-regular graph needs mutually rigid components of
/// smaller order, so per-order verdicts compose from the connected scan.
struct NuReport {
    int degree = 0;
    bool rigid_predicate = true;
    std::vector<OrderVerdict> verdicts;
    std::optional<int> minimum_order;  // over all graphs, via composition
};

NuReport search_nu(int degree, int max_n, bool rigid_predicate, int min_girth = 3, int jobs = 1);

struct Table1Cell {
    int degree = 0;
    int girth = 0;
    std::optional<int> smallest_asymmetric;
    std::optional<int> smallest_rigid;
    bool skipped = false;
};

/// Desk-scale cells of the cage/asymmetric/rigid table; per-cell budget in
/// seconds (exhaustion marks the cell skipped, never failed).
std::vector<Table1Cell> table1_rows(double budget_s, int jobs = 1);

} // namespace rrg
