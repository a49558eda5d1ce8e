#ifndef FIRMFROB_COFROBENIUS_HPP
#define FIRMFROB_COFROBENIUS_HPP

#include "firmfrob/frobenius.hpp"

namespace firmfrob {

/// The canonical comparison maps into the convolution dual:
/// θ_R(c) = ε(c·−) and θ_L(c) = ε(−·c), written on the dual basis.
struct CoFrobeniusMaps {
  LinMap theta_right;
  LinMap theta_left;
  bool right_injective = false;
  bool left_injective = false;
  std::vector<Vec> right_kernel;
  std::vector<Vec> left_kernel;
};

/// Requires the bundle to pass the algebra, coalgebra and Frobenius checks
/// (degenerate multiplication is allowed — it shows up as a nonzero kernel).
/// The report verifies that θ_R is a right C*-module map and θ_L a left
/// C*-module map on all basis triples; injectivity is reported via kernels.
OpResult<CoFrobeniusMaps> cofrobenius_maps(const FrobeniusBundle& b);

/// ε(c d₁) ε(c′ d₂) = ε(c′ c d) over all basis triples (c, c′, d).
CheckReport anti_multiplicativity_check(const FrobeniusBundle& b);

}  // namespace firmfrob

#endif
