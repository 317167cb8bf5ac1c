#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrg/graph.hpp"
#include "rrg/monoid.hpp"

namespace rrg {

/// Vertex-class bookkeeping for a staged system: endomorphism classes, the
/// order between them, comparability components, and per-class degrees.
struct StagePoset {
    std::vector<int> end_class;          // vertex -> class id
    std::vector<std::vector<int>> members;
    std::vector<std::vector<bool>> leq;  // class order
    std::vector<int> component;
    std::vector<int> degree;             // per class; -1 when not constant

    int class_count() const { return int(members.size()); }
};

enum class Stage { D1, D2, D3, D4 };

/// One step of the degree-homogenization chain. end_transport maps each
/// endomorphism of the previous stage's system to its unique extension.
struct StagedSystem {
    RelSystem system;
    Stage stage = Stage::D1;
    std::vector<std::vector<int>> endos;  // full End, transported from D1
    StagePoset poset;

    bool degree_constant_per_class() const;
    bool degree_constant_per_component() const;
    bool degree_constant() const;
    bool has_increasing_degree_property() const;
};

/// D1 = Cay_col(M, C) with its endomorphisms (left multiplications) and the
/// algebraic class structure.
StagedSystem stage_d1(const Monoid& m, const std::vector<int>& generators);
StagedSystem stage_d1(const Monoid& m);

/// Step making the total degree constant on every endomorphism class. The
/// per-aut-class multiplicities k must be positive; fails when M is a group.
StagedSystem step1(const StagedSystem& d1, const Monoid& m, const std::map<int, int>& k);

/// The deterministic k-selection used by the driver.
std::map<int, int> choose_step1_k(const StagedSystem& d1, const Monoid& m);

/// Step raising an ideal I (given by class ids) of the poset by k, making
/// degrees on I plus its minimal cover class equal. The tag namespaces the
/// new colours so repeated applications compose.
StagedSystem step2(const StagedSystem& d, const std::vector<int>& ideal_classes, int k,
                   const std::string& tag = "s2");

/// Doubling step making the total degree globally constant.
StagedSystem step3(const StagedSystem& d3);

struct HomogenizeTrace {
    std::vector<std::string> lines;
};

/// Full chain: groups return D1 directly; otherwise step1, then step2 per
/// component until degrees are component-constant, then step3.
StagedSystem homogenize(const Monoid& m, HomogenizeTrace* trace = nullptr);

/// Engine verification that |End(system)| = |M| and the transported maps
/// are exactly the endomorphisms.
bool verify_end_transport(const StagedSystem& s, int jobs = 1);

} // namespace rrg
