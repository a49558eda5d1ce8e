#ifndef FIRMFROB_QUOTIENT_HPP
#define FIRMFROB_QUOTIENT_HPP

#include <vector>

#include "firmfrob/solve.hpp"

namespace firmfrob {

/// A quotient of k^ambient by the span of a relation set, with a chosen
/// exact section. Invariants (all exact): projection ∘ section = id on the
/// quotient, projection annihilates every relation vector, and
/// quotient_dim = ambient_dim − rank(relations).
struct QuotientSpace {
  int ambient_dim = 0;
  std::vector<Vec> relations_basis;  // reduced basis of the span quotiented out
  int quotient_dim = 0;
  LinMap projection;  // ambient -> quotient
  LinMap section;     // quotient -> ambient

  QuotientSpace(FieldSpec f)
      : projection(f, 0, 0), section(f, 0, 0) {}
};

/// Quotient coordinates are the free columns of the relations' reduced
/// row-echelon form, in ascending order; the section picks the representative
/// with zero pivot coordinates. Deterministic pivoting throughout.
QuotientSpace quotient_by_span(FieldSpec f, int ambient_dim, const std::vector<Vec>& relations);

}  // namespace firmfrob

#endif
