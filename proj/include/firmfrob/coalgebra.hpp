#ifndef FIRMFROB_COALGEBRA_HPP
#define FIRMFROB_COALGEBRA_HPP

#include "firmfrob/algebra.hpp"

namespace firmfrob {

/// Δ(b_i) = Σ c · b_j ⊗ b_k
struct ComulTriple {
  int i, j, k;
  Scalar c;
};

/// Counital coalgebra by sparse structure constants plus the counit
/// functional ε(b_i).
struct CoalgebraData {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<ComulTriple> comul;
  Vec counit;

  CoalgebraData() : counit(FieldSpec::rationals(), 0) {}

  /// Flattened comultiplication R -> R⊗R; row (j, k) = j·dim + k.
  LinMap comultiplication() const;
  /// ε as a 1×dim map.
  LinMap counit_map() const;
  std::string label(int i) const;
};

CoalgebraData make_coalgebra(FieldSpec field, std::vector<std::string> basis_labels,
                             std::vector<ComulTriple> comul, Vec counit);

/// Reads structure constants back off a flattened comultiplication map.
CoalgebraData coalgebra_from_map(FieldSpec field, std::vector<std::string> basis_labels,
                                 const LinMap& delta, Vec counit);

/// Coassociativity and both counit laws, exactly.
CheckReport check_coalgebra(const CoalgebraData& c);

template <typename T>
struct OpResult {
  std::optional<T> value;
  CheckReport report;
  bool ok() const { return value.has_value(); }
};

/// Convolution dual: unital algebra on the dual basis with structure
/// constants transposed from the comultiplication; the unit is ε.
OpResult<AlgebraData> dual_convolution(const CoalgebraData& c);

}  // namespace firmfrob

#endif
