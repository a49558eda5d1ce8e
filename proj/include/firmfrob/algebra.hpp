#ifndef FIRMFROB_ALGEBRA_HPP
#define FIRMFROB_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "firmfrob/quotient.hpp"
#include "firmfrob/report.hpp"

namespace firmfrob {

/// b_i · b_j = Σ_k c · b_k
struct MulTriple {
  int i, j, k;
  Scalar c;
};

/// Non-unital associative algebra given by sparse structure constants.
struct AlgebraData {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<MulTriple> mul;

  /// Flattened multiplication R⊗R -> R; column (i, j) = i·dim + j.
  LinMap multiplication() const;
  std::string label(int i) const;
};

/// Validates index ranges, per-(i,j,k) uniqueness and label uniqueness.
AlgebraData make_algebra(FieldSpec field, std::vector<std::string> basis_labels,
                         std::vector<MulTriple> mul);

/// Reads the structure constants back off a flattened multiplication map.
AlgebraData algebra_from_map(FieldSpec field, std::vector<std::string> basis_labels,
                             const LinMap& mu);

/// Product of two elements written in the basis.
Vec alg_mul(const AlgebraData& r, const Vec& a, const Vec& b);

/// (b_i b_j) b_k = b_i (b_j b_k) over all basis triples; the witness is the
/// lexicographically first violating (i, j, k).
CheckReport check_associativity(const AlgebraData& r);

/// Passes iff both annihilator kernels vanish: r ↦ (s ↦ s·r) and
/// r ↦ (s ↦ r·s) are injective.
CheckReport check_nondegenerate(const AlgebraData& r);

struct FirmnessResult {
  CheckReport report;
  QuotientSpace quotient;   // R ⊗_R R
  LinMap induced;           // the projected multiplication, quotient -> R
};

/// Builds R⊗_R R as the quotient of R⊗R by (b_i b_j)⊗b_k − b_i⊗(b_j b_k)
/// and tests that the induced multiplication is bijective.
FirmnessResult check_firm_algebra(const AlgebraData& r);

/// Candidate idempotent elements; subset certificates are bounded by
/// max_subset_size (a certificate, not a proof for all finite subsets).
struct LocalUnitFamily {
  std::vector<Vec> elements;
  int max_subset_size = 2;
};

/// Each e ∈ E must be idempotent; then every subset S of the test set with
/// |S| ≤ max_subset_size needs some e with e·r = r = r·e for all r ∈ S.
/// An empty test set defaults to the basis.
CheckReport verify_local_units(const AlgebraData& r, const LocalUnitFamily& e,
                               const std::vector<Vec>& test_set = {});

/// Two-sided unit found by exact solving, when one exists.
std::optional<Vec> find_global_unit(const AlgebraData& r);

}  // namespace firmfrob

#endif
