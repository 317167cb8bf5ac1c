#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

enum class HomMode { Enumerate, Count, FindFirst, FindNonIdentity };

struct HomOptions {
    HomMode mode = HomMode::Enumerate;
    std::optional<long long> limit;  // cap on solutions for Enumerate/Count
    bool bijective = false;          // automorphism-style search
    bool prune_forward = true;       // per-colour forward arc consistency
    bool prune_parity = true;        // odd-closed-walk length filter
    bool prune_distance2 = true;     // radius-2 ball filter on the underlying graph
    bool prune_degree = true;        // exact degree filter; bijective searches only
    int jobs = 1;
    std::optional<double> time_limit_s;
};

struct HomResult {
    std::vector<std::vector<int>> maps;       // Enumerate: lex-sorted solutions
    long long count = 0;                      // solutions seen (after trimming)
    std::optional<std::vector<int>> witness;  // FindFirst / FindNonIdentity
    bool complete = true;                     // false if limit or deadline cut in
    long long nodes = 0;                      // search-tree nodes explored
    long long roots_done = 0;                 // root images fully refuted or solved
    long long roots_total = 0;

    bool found() const { return witness.has_value(); }
};

/// Uniform coloured-arc view shared by Graph, Digraph and RelSystem, the
/// shape the search engine actually runs on.
struct SystemView {
    int n = 0;
    std::vector<std::string> colours;
    std::vector<std::vector<Bitset>> out, in;  // [colour][vertex]
    std::vector<Bitset> out_union, in_union;   // colour-blind adjacency

    static SystemView of(const Graph& g);
    static SystemView of(const Digraph& d);
    static SystemView of(const RelSystem& s);
};

HomResult search_homs(const SystemView& src, const SystemView& tgt, const HomOptions& opts = {});

template <typename A, typename B>
HomResult search_homs(const A& a, const B& b, const HomOptions& opts = {}) {
    return search_homs(SystemView::of(a), SystemView::of(b), opts);
}

/// All homomorphisms a -> b, lexicographically sorted.
template <typename A, typename B>
std::vector<std::vector<int>> enumerate_homs(const A& a, const B& b, const HomOptions& base = {}) {
    HomOptions o = base;
    o.mode = HomMode::Enumerate;
    return search_homs(a, b, o).maps;
}

template <typename A, typename B>
long long hom_count(const A& a, const B& b, int jobs = 1) {
    HomOptions o;
    o.mode = HomMode::Count;
    o.jobs = jobs;
    return search_homs(a, b, o).count;
}

template <typename A, typename B>
bool hom_exists(const A& a, const B& b) {
    HomOptions o;
    o.mode = HomMode::FindFirst;
    return search_homs(a, b, o).found();
}

template <typename T>
bool is_rigid(const T& x, const HomOptions& base = {}) {
    HomOptions o = base;
    o.mode = HomMode::FindNonIdentity;
    return !search_homs(x, x, o).found();
}

template <typename T>
bool is_asymmetric(const T& x, const HomOptions& base = {}) {
    HomOptions o = base;
    o.mode = HomMode::FindNonIdentity;
    o.bijective = true;
    return !search_homs(x, x, o).found();
}

/// Rigidity probe that can time out: true/false when decided, nullopt when
/// the deadline was hit first.
template <typename T>
std::optional<bool> is_rigid_within(const T& x, double seconds, int jobs = 1) {
    HomOptions o;
    o.mode = HomMode::FindNonIdentity;
    o.time_limit_s = seconds;
    o.jobs = jobs;
    HomResult r = search_homs(x, x, o);
    if (r.found()) return false;
    if (!r.complete) return std::nullopt;
    return true;
}

bool is_core(const Graph& g);

/// True iff every member is rigid and no homomorphism joins two distinct
/// members.
template <typename T>
bool mutually_rigid(const std::vector<T>& family, int jobs = 1) {
    if (family.size() < 2) throw std::invalid_argument("mutually_rigid: need at least 2 members");
    HomOptions o;
    o.jobs = jobs;
    for (const auto& x : family)
        if (!is_rigid(x, o)) return false;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (i != j && hom_exists(family[i], family[j])) return false;
    return true;
}

/// The endomorphism monoid of a Graph/Digraph/RelSystem: every endomorphism
/// as a vertex map, plus the composition table over element indices.
struct EndMonoid {
    std::vector<std::vector<int>> elements;  // lex-sorted vertex maps
    std::vector<std::vector<int>> table;     // table[i][j] = index of elements[i] o elements[j]
    int identity = -1;

    int size() const { return int(elements.size()); }
};

EndMonoid end_monoid_from_maps(std::vector<std::vector<int>> maps);

template <typename T>
EndMonoid end_monoid(const T& x, int jobs = 1) {
    HomOptions o;
    o.jobs = jobs;
    return end_monoid_from_maps(enumerate_homs(x, x, o));
}

std::vector<int> compose_maps(const std::vector<int>& f, const std::vector<int>& g);
bool is_identity_map(const std::vector<int>& f);
bool is_bijective_map(const std::vector<int>& f);

} // namespace rrg
