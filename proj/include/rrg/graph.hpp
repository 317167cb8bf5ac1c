#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rrg/bitset.hpp"

namespace rrg {

using Edge = std::pair<int, int>;
using Arc = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1, adjacency kept as bitset rows.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), rows_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
        recount();
    }

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    /// Edges as sorted (u < v) pairs, lexicographic.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(std::size_t(m_));
        for (int u = 0; u < n_; ++u)
            rows_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    /// Copy with extra edges.
    Graph with_edges(const std::vector<Edge>& extra) const {
        Graph g = *this;
        for (auto [u, v] : extra) g.add_edge_internal(u, v);
        g.recount();
        return g;
    }

    Graph without_edges(const std::vector<Edge>& gone) const {
        Graph g = *this;
        for (auto [u, v] : gone) {
            if (!g.adjacent(u, v)) throw std::invalid_argument("Graph: removing absent edge");
            g.rows_[u].reset(v);
            g.rows_[v].reset(u);
        }
        g.recount();
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    void recount() {
        long long deg_sum = 0;
        for (int v = 0; v < n_; ++v) deg_sum += degree(v);
        m_ = deg_sum / 2;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> rows_;
};

/// Directed graph as an arc relation on 0..n-1. Anti-parallel arcs are fine,
/// parallel duplicates are not representable; loops only if allowed.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(int n, bool allow_loops = false)
        : n_(n), allow_loops_(allow_loops), out_(n, Bitset(n)), in_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    }

    Digraph(int n, const std::vector<Arc>& arcs, bool allow_loops = false)
        : Digraph(n, allow_loops) {
        for (auto [u, v] : arcs) add_arc_internal(u, v);
        recount();
    }

    int n() const { return n_; }
    bool loops_allowed() const { return allow_loops_; }
    long long arc_count() const { return m_; }

    bool has_arc(int u, int v) const { return out_[u].test(v); }
    const Bitset& out_neighbours(int v) const { return out_[v]; }
    const Bitset& in_neighbours(int v) const { return in_[v]; }
    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }
    int total_degree(int v) const { return out_degree(v) + in_degree(v); }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(std::size_t(m_));
        for (int u = 0; u < n_; ++u)
            out_[u].for_each([&](int v) { out.emplace_back(u, v); });
        return out;
    }

    /// Underlying simple graph: u ~ v iff some arc joins them (loops dropped).
    Graph underlying() const {
        std::vector<Edge> es;
        for (int u = 0; u < n_; ++u)
            out_[u].for_each([&](int v) {
                if (u != v) es.emplace_back(std::min(u, v), std::max(u, v));
            });
        return Graph(n_, es);
    }

    bool is_oriented() const {
        for (int u = 0; u < n_; ++u) {
            if (out_[u].test(u)) return false;
            if (out_[u].intersects(in_[u])) {
                bool bad = false;
                out_[u].for_each([&](int v) {
                    if (v != u && out_[v].test(u)) bad = true;
                });
                if (bad) return false;
            }
        }
        return true;
    }

    /// Equality of the arc relation; the loops-allowed flag is a
    /// construction-time validation switch, not content.
    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    void add_arc_internal(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("Digraph: vertex out of range");
        if (u == v && !allow_loops_) throw std::invalid_argument("Digraph: loop not allowed");
        out_[u].set(v);
        in_[v].set(u);
    }

    void recount() {
        long long c = 0;
        for (int v = 0; v < n_; ++v) c += out_degree(v);
        m_ = c;
    }

    int n_ = 0;
    bool allow_loops_ = false;
    long long m_ = 0;
    std::vector<Bitset> out_, in_;
};

/// Binary I-system: one arc relation per colour, over a shared vertex set.
class RelSystem {
public:
    RelSystem() = default;

    RelSystem(int n, std::vector<std::string> colours,
              const std::map<std::string, std::vector<Arc>>& arcs)
        : n_(n), colours_(std::move(colours)) {
        if (n < 0) throw std::invalid_argument("RelSystem: negative vertex count");
        for (std::size_t i = 0; i < colours_.size(); ++i)
            for (std::size_t j = i + 1; j < colours_.size(); ++j)
                if (colours_[i] == colours_[j])
                    throw std::invalid_argument("RelSystem: duplicate colour " + colours_[i]);
        out_.assign(colours_.size(), {});
        in_.assign(colours_.size(), {});
        for (std::size_t c = 0; c < colours_.size(); ++c) {
            out_[c].assign(n_, Bitset(n_));
            in_[c].assign(n_, Bitset(n_));
        }
        for (const auto& [colour, list] : arcs) {
            int c = colour_index(colour);
            if (c < 0) throw std::invalid_argument("RelSystem: arcs for unknown colour " + colour);
            for (auto [u, v] : list) {
                if (u < 0 || u >= n_ || v < 0 || v >= n_)
                    throw std::out_of_range("RelSystem: vertex out of range");
                out_[std::size_t(c)][u].set(v);
                in_[std::size_t(c)][v].set(u);
            }
        }
    }

    int n() const { return n_; }
    int colour_count() const { return int(colours_.size()); }
    const std::vector<std::string>& colours() const { return colours_; }

    int colour_index(const std::string& c) const {
        for (std::size_t i = 0; i < colours_.size(); ++i)
            if (colours_[i] == c) return int(i);
        return -1;
    }

    bool has_arc(int c, int u, int v) const { return out_[c][u].test(v); }
    const Bitset& out_neighbours(int c, int v) const { return out_[c][v]; }
    const Bitset& in_neighbours(int c, int v) const { return in_[c][v]; }

    long long arc_count(int c) const {
        long long s = 0;
        for (int v = 0; v < n_; ++v) s += out_[c][v].count();
        return s;
    }

    long long arc_count() const {
        long long s = 0;
        for (int c = 0; c < colour_count(); ++c) s += arc_count(c);
        return s;
    }

    std::vector<Arc> arcs(int c) const {
        std::vector<Arc> out;
        for (int u = 0; u < n_; ++u)
            out_[c][u].for_each([&](int v) { out.emplace_back(u, v); });
        return out;
    }

    int in_degree(int v) const {
        int s = 0;
        for (int c = 0; c < colour_count(); ++c) s += in_[c][v].count();
        return s;
    }

    int out_degree(int v) const {
        int s = 0;
        for (int c = 0; c < colour_count(); ++c) s += out_[c][v].count();
        return s;
    }

    int total_degree(int v) const { return in_degree(v) + out_degree(v); }

    /// Single-colour view of a digraph.
    static RelSystem from_digraph(const Digraph& d, const std::string& colour = "0") {
        return RelSystem(d.n(), {colour}, {{colour, d.arcs()}});
    }

    friend bool operator==(const RelSystem& a, const RelSystem& b) {
        return a.n_ == b.n_ && a.colours_ == b.colours_ && a.out_ == b.out_;
    }

private:
    int n_ = 0;
    std::vector<std::string> colours_;
    std::vector<std::vector<Bitset>> out_, in_; // [colour][vertex]
};

/// A graph or digraph with a distinguished (in, out) vertex pair.
struct Indicator {
    std::variant<Graph, Digraph> carrier;
    int in = 0;
    int out = 1;

    Indicator() = default;

    Indicator(Graph g, int in_v, int out_v) : carrier(std::move(g)), in(in_v), out(out_v) {
        validate();
    }

    Indicator(Digraph d, int in_v, int out_v) : carrier(std::move(d)), in(in_v), out(out_v) {
        validate();
    }

    bool is_graph() const { return std::holds_alternative<Graph>(carrier); }
    const Graph& graph() const { return std::get<Graph>(carrier); }
    const Digraph& digraph() const { return std::get<Digraph>(carrier); }

    int n() const { return is_graph() ? graph().n() : digraph().n(); }

private:
    void validate() const {
        if (in == out) throw std::invalid_argument("Indicator: in == out");
        if (in < 0 || out < 0 || in >= n() || out >= n())
            throw std::out_of_range("Indicator: distinguished vertex out of range");
    }
};

} // namespace rrg
