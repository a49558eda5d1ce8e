#ifndef FIRMFROB_SOLVE_HPP
#define FIRMFROB_SOLVE_HPP

#include <optional>
#include <vector>

#include "firmfrob/linalg.hpp"

namespace firmfrob {

/// Incremental exact Gaussian elimination in reduced row-echelon form.
/// Equations are fed one at a time; the pivot of each row is its leftmost
/// nonzero column (lowest index first), so the reduced basis, the solution
/// and the kernel are canonical for the row space regardless of input order.
class LinearSystem {
 public:
  LinearSystem(FieldSpec f, int unknowns);

  void add_equation(const Vec& coeffs, const Scalar& rhs);
  void add_equation(const std::vector<std::pair<int, Scalar>>& coeffs, const Scalar& rhs);

  int unknowns() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool consistent() const { return consistent_; }
  /// Consistent with no free unknowns.
  bool determined() const { return consistent_ && rank() == n_; }

  /// One exact solution with all free unknowns set to zero, or nullopt
  /// when the system is inconsistent.
  std::optional<Vec> solve() const;

  /// Canonical basis of the homogeneous solution space, ordered by the
  /// ascending free-column index.
  std::vector<Vec> kernel() const;

 private:
  struct Row {
    std::vector<std::pair<int, Scalar>> coeffs;  // sorted by column, pivot first
    Scalar rhs;
    int pivot;
  };
  void axpy_into_dense(std::vector<Scalar>& dense, Scalar& rhs, const Row& row,
                       Scalar factor) const;

  FieldSpec field_;
  int n_;
  bool consistent_ = true;
  std::vector<Row> rows_;        // kept in ascending pivot order
  std::vector<int> pivot_row_;   // column -> index into rows_, or -1
};

/// A·x = b exactly, or nullopt when inconsistent. Deterministic: equations
/// are the rows of A in order, free unknowns are zero.
std::optional<Vec> solve(const LinMap& a, const Vec& b);

/// Canonical basis of { x : A·x = 0 }; empty means injective.
std::vector<Vec> kernel(const LinMap& a);

int rank(const LinMap& a);

/// Exact inverse of a square map, or nullopt when singular.
std::optional<LinMap> inverse(const LinMap& a);

bool is_bijective(const LinMap& a);

}  // namespace firmfrob

#endif
