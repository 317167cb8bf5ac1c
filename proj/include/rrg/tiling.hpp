#pragma once

#include <optional>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// Combinatorial plane graph whose bounded faces are g-gons: border and
/// face lists are maintained through the growth steps, no geometric
/// embedding. The antipodal involution is constructed alongside.
struct TilingGraph {
    Graph graph;
    int g = 0;
    int generation = 1;                   // index i of the graph in its series
    std::vector<int> border;              // circular vertex order of the unbounded face
    std::vector<std::vector<int>> faces;  // bounded faces as vertex cycles
    std::vector<int> antipode;

    bool is_border(int v) const;
    std::vector<int> interior_vertices() const;
};

/// Two g-gons sharing an edge.
TilingGraph base_tiling(int g);

/// One growth step: hang a new g-gonal face over every maximal run of
/// degree-3 border vertices.
TilingGraph tiling_step(const TilingGraph& t);

TilingGraph build_tiling(int g, int generation);

/// Structural validation; throws std::logic_error naming the failing
/// vertex or face. check_girth_cycles additionally certifies that the
/// minimum-length cycles are exactly the bounded faces.
void validate_tiling(const TilingGraph& t, bool check_girth_cycles = true);

/// U = (u_0 .. u_{2h-1}): degree-2 border vertices with u_{i+h} = -u_i and
/// pairwise distance >= g, where the only automorphism fixing {u_0, u_1}
/// setwise is the identity. Greedy ascending search with backtracking;
/// nullopt when the graph admits none.
std::optional<std::vector<int>> find_u(const TilingGraph& t, int h);

inline int default_h(int g) {
    int h = (g + 1) / 2;
    return h % 2 == 1 ? h : h + 1;
}

struct TilingFactor {
    Graph t;        // straight edges off U, twisted edges except {u0, u1}
    Graph t_prime;  // all straight edges
    Graph t_bar;    // everything: t + {u0,u1} + straight edges on U
    Graph base;     // the bare tiling graph
    int g = 0;
    int h = 0;
    std::vector<int> u;
    std::vector<int> antipode;

    std::vector<Edge> straight_edges() const;  // {x, -x} pairs present in t_bar
    std::vector<Edge> twisted_edges() const;   // {u_2i, u_2i+1} pairs
};

TilingFactor build_factor(const TilingGraph& t, const std::vector<int>& u);

/// Detour lengths around twisted edges and the location of the shortest odd
/// cycles of t_bar: every twisted edge's endpoints must be >= g apart
/// without it, the odd girth of t_bar must be g, and every length-g cycle
/// must lie inside the base graph.
bool u_spread_check(const TilingFactor& f);

struct TilingConditionReport {
    bool border_even = false;          // even border cycle
    bool antipode_ok = false;          // involutive border-halving automorphism
    bool antipodal_distance = false;   // dist(x, -x) >= g on the border
    bool u_found = false;              // a valid U exists
    bool faces_have_interior = false;  // every bounded face meets the interior
    bool interior_connected = false;   // interior induces a connected nonempty graph
    std::optional<std::vector<int>> u;

    bool accept() const {
        return border_even && antipode_ok && antipodal_distance && u_found &&
               faces_have_interior && interior_connected;
    }
};

TilingConditionReport check_tiling_conditions(const TilingGraph& t);

struct AcceptedTiling {
    TilingGraph tiling;
    TilingFactor factor;
    int generation = 0;
};

/// Grows the series until every condition holds, then builds the factor.
AcceptedTiling first_accepting_tiling(int g, int max_generation = 48);

} // namespace rrg
