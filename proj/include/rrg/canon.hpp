#pragma once

#include <string>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// Canonical labelling of an undirected graph by individualization and
/// refinement (n <= 64). Two graphs are isomorphic iff their canonical g6
/// strings agree.
struct CanonResult {
    std::vector<int> labelling;  // old vertex -> canonical index
    std::string canonical_g6;
};

CanonResult canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace rrg
