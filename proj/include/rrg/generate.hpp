#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

struct SearchSpec {
    int degree = 3;
    int min_girth = 3;        // only graphs of girth >= this
    bool connected = true;    // currently always true; kept for the report
};

/// Streams exactly one representative per isomorphism class of connected
/// d-regular graphs on n vertices (girth-constrained), in canonical-g6
/// order. Returns the number of classes; the callback may stop the stream
/// by returning false.
long long generate_regular(int n, const SearchSpec& spec,
                           const std::function<bool(const Graph&)>& sink);

/// Convenience: all of them, sorted by canonical g6.
std::vector<Graph> generate_regular_all(int n, const SearchSpec& spec);

struct OrderVerdict {
    int n = 0;
    long long graph_count = 0;
    bool found = false;
    std::string witness_g6;  // canonical form of the first hit
};

/// For each feasible order n in [min_n, max_n], whether a rigid (or merely
/// asymmetric) connected d-regular graph of the given girth bound exists.
/// Stops early when stop_at_first_hit is set and a witness appears.
std::vector<OrderVerdict> scan_orders(int degree, int min_n, int max_n, int min_girth,
                                      bool rigid_predicate, bool stop_at_first_hit = true,
                                      int jobs = 1);

} // namespace rrg
