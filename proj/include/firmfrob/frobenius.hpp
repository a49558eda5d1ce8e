#ifndef FIRMFROB_FROBENIUS_HPP
#define FIRMFROB_FROBENIUS_HPP

#include "firmfrob/coalgebra.hpp"

namespace firmfrob {

/// One basis carrying both an algebra and a coalgebra structure — a
/// candidate for the firm Frobenius axioms. Construction only validates
/// shape agreement; the mathematical checks are separate operations.
struct FrobeniusBundle {
  AlgebraData algebra;
  CoalgebraData coalgebra;
};

FrobeniusBundle make_bundle(AlgebraData algebra, CoalgebraData coalgebra);

/// The compatibility square: (μ⊗id)∘(id⊗Δ) = Δ∘μ = (id⊗μ)∘(Δ⊗id) as maps
/// R⊗R -> R⊗R, both equalities exact. Witness is the lexicographically
/// first basis pair where any of the three composites disagree.
CheckReport check_frobenius(const FrobeniusBundle& b);

/// Solves ν∘Δ = id, (id⊗ν)∘(Δ⊗id) = Δ∘ν = (ν⊗id)∘(id⊗Δ) for a bicomodule
/// retraction ν : C⊗C -> C. Returns one deterministic solution (free
/// coordinates zero), or nullopt when no retraction exists.
std::optional<LinMap> cosep_solve(const CoalgebraData& c);

/// The three retraction identities for a given candidate ν.
CheckReport verify_retraction(const CoalgebraData& c, const LinMap& nu);

/// Uses a verified retraction as the multiplication: μ := ν.
OpResult<FrobeniusBundle> build_from_cosep(const CoalgebraData& c, const LinMap& nu);

/// A multiplier of R⊗R represented extensionally: λ is right action by the
/// element, ρ is left action; invariant ρ(x)·y = x·λ(y) on all basis pairs.
struct MultiplierPair {
  LinMap lambda;
  LinMap rho;
};

/// Product in the algebra R⊗R: (a⊗b)(c⊗d) = ac ⊗ bd extended bilinearly.
Vec square_mul(const AlgebraData& r, const Vec& a, const Vec& b);

/// The multiplier law on all (dim²)² basis pairs; `parallel` splits the scan
/// over hardware threads without changing the reported witness.
CheckReport verify_multiplier_pair(const AlgebraData& r, const MultiplierPair& m,
                                   bool parallel = false);

/// The Casimir multiplier e = Δ̃(1): λ(s⊗r) = Σ r₍₁₎s ⊗ r₍₂₎ and
/// ρ(s⊗r) = Σ s₍₁₎ ⊗ r s₍₂₎. Refuses unless the Frobenius square holds and
/// the multiplication is non-degenerate; verifies the multiplier law before
/// returning.
OpResult<MultiplierPair> casimir_from_delta(const FrobeniusBundle& b, bool parallel = false);

enum class Side { Left, Right };

/// Solves (r⊗1)·e (Left) resp. e·(1⊗r) (Right) as an element of R⊗R:
/// t with t·x = (r⊗1)·λ(x) for every basis x, resp. x·t = ρ(x)·(1⊗r).
/// Returns nullopt when inconsistent; throws InternalError when the system
/// is underdetermined (only possible if non-degeneracy was violated).
std::optional<Vec> multiplier_to_element(const AlgebraData& r, const MultiplierPair& m,
                                         int basis_index, Side side);

struct DeltaReconstruction {
  std::optional<CoalgebraData> coalgebra;
  CheckReport report;
};

/// Δ(b_i) := (b_i⊗1)e, checked against e(1⊗b_i), both counit laws, the
/// bimodule (Frobenius) compatibility and coassociativity.
DeltaReconstruction delta_from_casimir(const AlgebraData& r, const MultiplierPair& m,
                                       const Vec& counit);

/// μ∘n = id and n(b_i b_j) = (b_i⊗1)·n(b_j) for all basis pairs — the
/// elementwise form of a natural section of the multiplication.
CheckReport section_check(const FrobeniusBundle& b, const LinMap& n);

/// Simultaneous base change by an invertible map: μ' = T∘μ∘(T⁻¹⊗T⁻¹),
/// Δ' = (T⊗T)∘Δ∘T⁻¹, ε' = ε∘T⁻¹. Preserves every verdict.
FrobeniusBundle conjugate_bundle(const FrobeniusBundle& b, const LinMap& t);

}  // namespace firmfrob

#endif
