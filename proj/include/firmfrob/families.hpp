#ifndef FIRMFROB_FAMILIES_HPP
#define FIRMFROB_FAMILIES_HPP

#include <functional>

#include "firmfrob/suite.hpp"

namespace firmfrob {

/// Finite group as a multiplication table (order <= 64), validated on
/// construction: Latin square, two-sided identity, associativity.
struct GroupTable {
  int order = 0;
  std::vector<int> table;  // row-major, table[g*order + h] = g·h
  int identity = 0;

  int at(int g, int h) const { return table[static_cast<std::size_t>(g * order + h)]; }
  int inverse(int g) const;

  static GroupTable cyclic(int n);
  static GroupTable from_rows(const std::vector<std::vector<int>>& rows);
};

struct GeneratedBundle {
  FrobeniusBundle bundle;
  LocalUnitFamily units;
};

/// Grouplike family: μ(p_g⊗p_h) = δ_{gh} p_g, Δ(p_g) = p_g⊗p_g, ε(p_g) = 1.
/// The local-unit family is the nonempty partial sums Σ_{g∈F} p_g
/// (all subsets when the order allows, singletons plus the full sum
/// otherwise).
GeneratedBundle gen_grouplike(const GroupTable& g, FieldSpec field);

/// Truncated polynomials k[x]/(x²) with ε(1) = 0, ε(x) = 1,
/// Δ(1) = 1⊗x + x⊗1, Δ(x) = x⊗x. The classical unital baseline.
GeneratedBundle gen_trunc_poly(FieldSpec field);

/// Comatrix coalgebra: basis e_ij, Δ(e_ij) = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij.
CoalgebraData gen_comatrix(int n, FieldSpec field);

/// One-dimensional x with x² = 0 — degenerate and not firm.
AlgebraData nil_algebra(FieldSpec field);

/// Rule-based bundle with a countable basis; every claim about it is checked
/// on finite nested windows only.
struct LocallyFiniteBundle {
  enum class LabelKind { Integers, FiniteGroupTable };
  using Expansion = std::vector<std::pair<std::string, Scalar>>;
  using PairExpansion = std::vector<std::pair<std::pair<std::string, std::string>, Scalar>>;

  LabelKind label_kind = LabelKind::Integers;
  FieldSpec field;
  std::string family;
  std::function<std::vector<std::string>(int)> window_labels;  // nested, exhaustive
  std::function<Expansion(const std::string&, const std::string&)> mul_rule;
  std::function<PairExpansion(const std::string&)> comul_rule;
  std::function<Scalar(const std::string&)> counit_rule;
  /// Local-unit candidates for a window, as label-coefficient expansions.
  std::function<std::vector<Expansion>(const std::vector<std::string>&)> window_units;
};

/// The integers-grouplike bundle: basis {p_g : g ∈ Z}, windows {−w..w},
/// per-window unit candidate Σ_{|g|<=w} p_g. No global unit exists.
LocallyFiniteBundle grouplike_integers(FieldSpec field);

struct WindowBundle {
  FrobeniusBundle bundle;
  LocalUnitFamily units;
  int w = 0;
};

/// Materializes the window as a finite bundle after checking that no rule
/// output escapes the window's label set.
OpResult<WindowBundle> materialize_window(const LocallyFiniteBundle& lf, int w);

/// Runs the named checks on the window; passing verdicts are re-tagged
/// window-verified with the window size recorded.
std::vector<CheckReport> window_check(const LocallyFiniteBundle& lf, int w,
                                      const std::vector<std::string>& suite,
                                      const SuiteOptions& opts);

/// Unital algebra graded by a finite group; structure constants must respect
/// the grading and the unit must live in the neutral degree.
struct GradedAlgebraData {
  AlgebraData algebra;
  GroupTable group;
  std::vector<int> grading;  // degree of each basis element
};

CheckReport check_graded_algebra(const GradedAlgebraData& a);

/// The group algebra k[G] graded by itself.
GradedAlgebraData group_algebra_self_graded(const GroupTable& g, FieldSpec field);

/// Smash-product algebra on basis {a_i⊗p_g} with
/// (a⊗p_g)(b⊗p_h) = a·b_{g⁻¹h} ⊗ p_h; non-unital for |G| > 1 but carries
/// local units Σ_{g∈F} 1⊗p_g.
struct SmashAlgebra {
  AlgebraData algebra;
  LocalUnitFamily units;
  int a_dim = 0;
  int group_order = 0;
  Vec a_unit;  // the unit of A in its basis

  SmashAlgebra() : a_unit(FieldSpec::rationals(), 0) {}
  int index(int i, int g) const { return i * group_order + g; }
};

OpResult<SmashAlgebra> gen_graded_smash(const GradedAlgebraData& a);

/// Graded right module over the graded algebra: basis-aligned grading,
/// unital associative action respecting degrees.
struct GradedModuleData {
  int dim = 0;
  std::vector<int> grading;
  LinMap action;  // dim·dim_A -> dim
  GradedModuleData() : action(FieldSpec::rationals(), 0, 0) {}
  GradedModuleData(int d, std::vector<int> g, LinMap a)
      : dim(d), grading(std::move(g)), action(std::move(a)) {}
};

CheckReport check_graded_module(const GradedAlgebraData& a, const GradedModuleData& m);

/// gr-A -> firm modules over the smash algebra: m_g · (a_j⊗p_h) =
/// [deg(m)·deg(a_j) = h] · m·a_j.
ModuleData to_smash_module(const GradedAlgebraData& a, const SmashAlgebra& s,
                           const GradedModuleData& m);

/// Inverse converter. Recovers the grading from the orthogonal projectors
/// n ↦ n·(1⊗p_g); refuses when the module basis is not homogeneous or the
/// module is not firm over the smash algebra.
OpResult<GradedModuleData> from_smash_module(const GradedAlgebraData& a, const SmashAlgebra& s,
                                             const ModuleData& n);

/// The regular graded module with its grading translated by a group element.
GradedModuleData shifted_regular_graded_module(const GradedAlgebraData& a, int shift);

GradedModuleData direct_sum_graded(const GradedAlgebraData& a, const GradedModuleData& x,
                                   const GradedModuleData& y);

/// Random graded module: direct sum of shifted regulars conjugated by a
/// degree-preserving invertible map.
GradedModuleData random_graded_module(const GradedAlgebraData& a, Rng& rng, int max_dim);

}  // namespace firmfrob

#endif
