#pragma once

#include <optional>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

// Per-vertex total degrees (in + out for directed kinds; loops count twice).
std::vector<int> degrees(const Graph& g);
std::vector<int> degrees(const Digraph& d);
std::vector<int> degrees(const RelSystem& s);

bool is_regular(const Graph& g, int d);

// Connected-component ids, numbered 0.. in order of smallest member
// (underlying graph for the directed kinds).
std::vector<int> components(const Graph& g);
std::vector<int> components(const Digraph& d);
std::vector<int> components(const RelSystem& s);

bool is_connected(const Graph& g);
bool is_connected(const Digraph& d);
bool is_connected(const RelSystem& s);

// BFS distances from src; -1 where unreachable.
std::vector<int> bfs_dist(const Graph& g, int src);

std::optional<int> dist(const Graph& g, int u, int v);
std::optional<int> dist(const Digraph& d, int u, int v);
std::optional<int> dist(const RelSystem& s, int u, int v);

/// Shortest odd cycle length; nullopt iff bipartite.
std::optional<int> odd_girth(const Graph& g);

/// Shortest oriented odd cycle of a digraph, i.e. the odd girth of its
/// underlying graph (an oriented cycle may use arcs in either direction).
std::optional<int> odd_girth(const Digraph& d);

/// Shortest cycle length; nullopt iff acyclic (forest).
std::optional<int> girth(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);

Graph complement(const Graph& g);

/// All cycles of exactly the given length, each listed once, as vertex
/// sequences starting at their minimum vertex with the smaller neighbour
/// second.
std::vector<std::vector<int>> cycles_of_length(const Graph& g, int len);

/// Minimum length of an odd simple path between s and t that is < bound;
/// nullopt if none. bound < 0 means unbounded.
std::optional<int> min_odd_path(const Graph& g, int s, int t, int bound = -1);

/// Shortest directed path length from s to t, nullopt if unreachable.
std::optional<int> directed_dist(const Digraph& d, int s, int t);

// Small standard graphs.
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph complete_graph(int k);
Digraph directed_cycle(int k);

/// Transitive tournament on k vertices: arc (i, j) for every i < j, so
/// vertex 0 is the source of the underlying path.
Digraph transitive_tournament(int k);

} // namespace rrg
