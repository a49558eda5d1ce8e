#ifndef FIRMFROB_MODCOMOD_HPP
#define FIRMFROB_MODCOMOD_HPP

#include "firmfrob/frobenius.hpp"

namespace firmfrob {

/// Right module: action α : A⊗R -> A, column index (a, r) = a·dim_R + r.
struct ModuleData {
  int dim = 0;
  LinMap action;
  ModuleData() : action(FieldSpec::rationals(), 0, 0) {}
  ModuleData(int d, LinMap a) : dim(d), action(std::move(a)) {}
};

/// Right comodule: coaction ρ : N -> N⊗R, row index (n, r) = n·dim_R + r.
struct ComoduleData {
  int dim = 0;
  LinMap coaction;
  ComoduleData() : coaction(FieldSpec::rationals(), 0, 0) {}
  ComoduleData(int d, LinMap c) : dim(d), coaction(std::move(c)) {}
};

ModuleData regular_module(const FrobeniusBundle& b);      // A = R, α = μ
ComoduleData regular_comodule(const FrobeniusBundle& b);  // N = R, ρ = Δ

/// α∘(α⊗id_R) = α∘(id_A⊗μ), exactly. Only the algebra is involved, so
/// module checks also come in an algebra-level flavor.
CheckReport check_module(const AlgebraData& r, const ModuleData& m);
CheckReport check_module(const FrobeniusBundle& b, const ModuleData& m);

struct ModuleFirmness {
  CheckReport report;
  QuotientSpace quotient;  // A ⊗_R R
  LinMap induced;          // projected action, quotient -> A
};

/// Builds A⊗_R R from the relations (a·r)⊗s − a⊗(r s) and tests that the
/// induced action is bijective.
ModuleFirmness check_firm_module(const AlgebraData& r, const ModuleData& m);
ModuleFirmness check_firm_module(const FrobeniusBundle& b, const ModuleData& m);

/// (ρ⊗id_R)∘ρ = (id_N⊗Δ)∘ρ and (id_N⊗ε)∘ρ = id, exactly.
CheckReport check_comodule(const FrobeniusBundle& b, const ComoduleData& n);

/// The action n·r := n₀ ε(n₁ r), i.e. (id⊗ε)∘(id⊗μ)∘(ρ⊗id); the module
/// associativity is re-verified before returning.
OpResult<ModuleData> induced_action(const FrobeniusBundle& b, const ComoduleData& n);

/// Picks an exact linear section σ of the action from the firmness quotient,
/// sets ρ := (α⊗id)∘(id⊗Δ)∘σ and certifies the defining identity
/// ρ∘α = (α⊗id)∘(id⊗Δ) (which also proves independence of σ) plus the
/// comodule laws. Non-firm modules are rejected.
OpResult<ComoduleData> induced_coaction(const FrobeniusBundle& b, const ModuleData& m);

/// (id_N⊗μ)∘(ρ⊗id) = ρ∘ᾱ  and  ρ∘ᾱ = (ᾱ⊗id)∘(id_N⊗Δ), exactly.
CheckReport induced_compat_check(const FrobeniusBundle& b, const ComoduleData& n);

struct SampleSet {
  std::vector<std::pair<std::string, ModuleData>> modules;
  std::vector<std::pair<std::string, ComoduleData>> comodules;
};

/// Both functor composites must be bit-exact identities on every sample.
CheckReport verify_roundtrips(const FrobeniusBundle& b, const SampleSet& samples);

/// f is a module morphism src -> dst iff the same f is a comodule morphism
/// between the transported structures (and conversely for comodule inputs).
CheckReport morphism_transport_check(const FrobeniusBundle& b, const LinMap& f,
                                     const ModuleData& src, const ModuleData& dst);
CheckReport morphism_transport_check(const FrobeniusBundle& b, const LinMap& f,
                                     const ComoduleData& src, const ComoduleData& dst);

bool is_module_morphism(const FrobeniusBundle& b, const LinMap& f, const ModuleData& src,
                        const ModuleData& dst);
bool is_comodule_morphism(const FrobeniusBundle& b, const LinMap& f, const ComoduleData& src,
                          const ComoduleData& dst);

}  // namespace firmfrob

#endif
