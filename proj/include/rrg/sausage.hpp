#pragma once

#include <map>
#include <string>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// Sign table f : [l] x {2..d-1} -> {+,0,-} steering the cross arcs of a
/// sausage digraph. Serialized as a string over "+0-", rows i = 1..l, and
/// within a row columns j = d-1 down to 2.
class FMap {
public:
    enum Sign : int { Minus = -1, Zero = 0, Plus = 1 };

    FMap(int d, int l);
    FMap(int d, int l, const std::string& text);

    static FMap constant(int d, int l, Sign s);

    /// The F2 map: + everywhere except 0 at (1, d-1).
    static FMap plus_prime(int d, int l);

    int d() const { return d_; }
    int l() const { return l_; }

    Sign at(int i, int j) const;          // i in [1..l], j in [2..d-1]
    void set(int i, int j, Sign s);

    std::string text() const;

    /// f <= f' iff every entry of f is 0 or agrees with f'.
    bool leq(const FMap& other) const;

    /// (inv f)(i,j) = -f(l+1-i, d+1-j).
    FMap inv() const;

    /// All 3^(l*(d-2)) maps for the given shape, in lexicographic text order.
    static std::vector<FMap> all(int d, int l);

    friend bool operator==(const FMap& a, const FMap& b) {
        return a.d_ == b.d_ && a.l_ == b.l_ && a.values_ == b.values_;
    }

private:
    int index(int i, int j) const;

    int d_, l_;
    std::vector<int> values_;
};

/// The digraph S(d,l,f): 2l transitive tournaments of order d in a directed
/// ring with two order-(d-1) tournaments and four link vertices, plus the
/// cross arcs selected by f. The name table keeps the construction labels.
struct Sausage {
    Digraph digraph;
    int d = 0;
    int l = 0;
    FMap f{3, 1};

    // name tables, all indices into digraph
    std::vector<std::vector<int>> t_plus;   // t_plus[i-1][j-1] = v_j(T_+^i)
    std::vector<std::vector<int>> t_minus;  // t_minus[i-1][j-1] = v_j(T_-^i)
    std::vector<int> t_l, t_r;              // tournaments of order d-1
    int s_l = -1, t_l_sink = -1, s_r = -1, t_r_sink = -1;

    /// Human-readable vertex name, e.g. "v2(T+^1)" or "s_l".
    std::string name_of(int v) const;
};

Sausage build_sausage(int d, int l, const FMap& f);

/// |Hom(S(d,l,f), S(d,l',f'))| by the closed formula: 2 when l = l', f <= f'
/// and inv f <= f'; 1 when l = l' and exactly one of those holds; else 0.
int hom_count_formula(const FMap& f, const FMap& f_prime);

/// F1(d): S(d,l,+) for l >= 1, constant total degree d.
Sausage family_f1(int d, int l);

/// F2(d): S(d,l,+') for l >= 2, exactly two vertices of total degree d-1.
/// Returned with the oriented indicator pair chosen per the directed-path
/// check (see indicator hypotheses).
struct SausageIndicator {
    Sausage sausage;
    Indicator indicator;
    int u = -1, v = -1;  // the two total-degree-(d-1) vertices
};

SausageIndicator family_f2(int d, int l);

} // namespace rrg
