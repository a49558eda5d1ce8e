#ifndef FIRMFROB_SAMPLES_HPP
#define FIRMFROB_SAMPLES_HPP

#include <random>

#include "firmfrob/modcomod.hpp"

namespace firmfrob {

using Rng = std::mt19937_64;

// Seeded generation helpers. All draws go through rng() directly (no
// distribution objects), so the streams are reproducible across platforms.
Scalar random_scalar(const FieldSpec& f, Rng& rng);          // small, zero-biased
Scalar random_nonzero_scalar(const FieldSpec& f, Rng& rng);
LinMap random_linmap(FieldSpec f, int rows, int cols, Rng& rng);
LinMap random_invertible(FieldSpec f, int n, Rng& rng);  // L·D·U, exactly invertible

/// Indices i with Δ(b_i) = b_i⊗b_i and ε(b_i) = 1; each spans a
/// one-dimensional comodule v ↦ v⊗b_i.
std::vector<int> basis_grouplikes(const CoalgebraData& c);

/// Indices i whose dual functional b_i* is an algebra character
/// (c_{ab}^i = δ_{ai} δ_{bi}); each gives the module v·b_j = δ_{ij} v.
std::vector<int> basis_characters(const AlgebraData& r);

ComoduleData one_dim_comodule(const FrobeniusBundle& b, int grouplike_index);
ModuleData one_dim_module(const FrobeniusBundle& b, int character_index);

ModuleData direct_sum_module(const FrobeniusBundle& b, const ModuleData& x, const ModuleData& y);
ComoduleData direct_sum_comodule(const FrobeniusBundle& b, const ComoduleData& x,
                                 const ComoduleData& y);

/// Isomorphic twist: α' = T∘α∘(T⁻¹⊗id), ρ' = (T⊗id)∘ρ∘T⁻¹.
ModuleData conjugate_module(const FrobeniusBundle& b, const ModuleData& m, const LinMap& t);
ComoduleData conjugate_comodule(const FrobeniusBundle& b, const ComoduleData& n, const LinMap& t);

/// Random valid samples: direct sums of the regular and one-dimensional
/// building blocks, conjugated by a random invertible map.
ComoduleData random_comodule(const FrobeniusBundle& b, Rng& rng, int max_dim);
ModuleData random_module(const FrobeniusBundle& b, Rng& rng, int max_dim);

struct SampleOptions {
  std::uint64_t seed = 0;
  int random_count = 20;
  int max_dim = 6;
};

/// The default round-trip sample set: regular module, regular comodule, all
/// one-dimensional (co)modules on basis grouplikes / dual-basis characters,
/// plus seeded random samples.
SampleSet default_samples(const FrobeniusBundle& b, const SampleOptions& opts = {});

/// Runs morphism transport on `count` seeded morphisms (a mix of random
/// linear maps, identities and equivariant multiplications); passes iff
/// every single transport check passes.
CheckReport morphism_transport_suite(const FrobeniusBundle& b, std::uint64_t seed, int count);

}  // namespace firmfrob

#endif
