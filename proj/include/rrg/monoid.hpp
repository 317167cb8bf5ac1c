#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// Finite monoid given by its multiplication table. Validated on
/// construction: associativity is checked exhaustively, the identity laws
/// must hold, and an explicit generator set must generate.
class Monoid {
public:
    Monoid(std::vector<std::vector<int>> table, int identity,
           std::optional<std::vector<int>> generators = std::nullopt);

    int size() const { return n_; }
    int identity() const { return identity_; }
    int product(int a, int b) const { return table_[std::size_t(a)][std::size_t(b)]; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::optional<std::vector<int>>& generators() const { return generators_; }

    bool is_unit(int x) const { return unit_[std::size_t(x)]; }
    bool is_group() const;

    /// Default generating set: M \ {e}, or {e} for the trivial monoid.
    std::vector<int> default_generators() const;

    /// Left ideal Mx as a sorted list.
    std::vector<int> left_ideal(int x) const;

private:
    int n_;
    int identity_;
    std::vector<std::vector<int>> table_;
    std::optional<std::vector<int>> generators_;
    std::vector<bool> unit_;
};

/// Endomorphism / automorphism classes of the vertices of Cay_col(M, C),
/// computed algebraically from M: v ~ w iff Mv = Mw, v ~~ w iff w = gv for
/// a unit g, and [v] <= [w] iff w lies in Mv.
struct ClassStructure {
    std::vector<int> end_class;                 // element -> end class id
    std::vector<int> aut_class;                 // element -> aut class id
    std::vector<std::vector<int>> end_members;  // per end class, sorted
    std::vector<std::vector<int>> aut_members;  // per aut class, sorted
    std::vector<std::vector<bool>> leq;         // leq[a][b]: end class a <= b
    std::vector<int> component;                 // end class -> comparability component
    int unit_end_class = -1;
    int unit_aut_class = -1;

    int end_class_count() const { return int(end_members.size()); }
    int aut_class_count() const { return int(aut_members.size()); }
};

ClassStructure class_structure(const Monoid& m);

/// Coloured Cayley graph Cay_col(M, C): one colour per generator c, arcs
/// (u, uc). Colour identifiers are the decimal element indices.
RelSystem cayley_col(const Monoid& m, const std::vector<int>& generators);
RelSystem cayley_col(const Monoid& m);

/// A multiplication- and identity-preserving bijection, or nullopt.
std::optional<std::vector<int>> monoid_iso(const Monoid& a, const Monoid& b);

/// Every associative table with an identity on {0..n-1}; each returned
/// monoid carries no generator set.
std::vector<Monoid> all_monoid_tables(int n);

// Monoid JSON: {"n": int, "identity": int, "table": [[int...]...],
//               "generators": [int...]?}
std::string emit_monoid(const Monoid& m);
Monoid parse_monoid(const std::string& text);

} // namespace rrg
