#ifndef FIRMFROB_SUITE_HPP
#define FIRMFROB_SUITE_HPP

#include "firmfrob/cofrobenius.hpp"
#include "firmfrob/samples.hpp"

namespace firmfrob {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_subset = 2;
  bool parallel = true;  // must never change any verdict
  int random_samples = 20;
  int max_sample_dim = 6;
  int morphism_samples = 20;
};

/// What a bundle file actually carries; checks that need a missing part are
/// refused when named explicitly and omitted from the default suite.
struct BundleParts {
  std::optional<AlgebraData> algebra;
  std::optional<CoalgebraData> coalgebra;
  std::optional<LocalUnitFamily> units;
};

/// Check names: associativity, nondegeneracy, firmness, local-units,
/// coalgebra, frobenius, casimir, section, roundtrip, morphisms,
/// cofrobenius, induced-compat. "all" expands to the default suite.
std::vector<std::string> default_suite_names(const BundleParts& parts);

std::vector<CheckReport> run_suite(const BundleParts& parts, const std::vector<std::string>& names,
                                   const SuiteOptions& opts);

/// The Casimir pipeline as reports: construction + multiplier law, then the
/// bit-exact round trips Δ → e → Δ′ = Δ and e → Δ′ → e′ = e.
std::vector<CheckReport> casimir_suite(const FrobeniusBundle& b, bool parallel);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace firmfrob

#endif
