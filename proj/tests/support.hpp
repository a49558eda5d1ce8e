#ifndef FIRMFROB_TESTS_SUPPORT_HPP
#define FIRMFROB_TESTS_SUPPORT_HPP

#include "firmfrob/families.hpp"

namespace fftest {

using namespace firmfrob;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec F(std::uint32_t p) { return FieldSpec::prime(p); }

inline Scalar qs(long num, long den = 1) {
  return Scalar::from_long(Q(), num) / Scalar::from_long(Q(), den);
}

inline Vec vec(const FieldSpec& f, const std::vector<long>& entries) {
  Vec v(f, static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    v.set(static_cast<int>(i), Scalar::from_long(f, entries[i]));
  return v;
}

// grouplike on Z/2 over Q: mu(p_g ⊗ p_h) = δ_{gh} p_g, Δ(p_g) = p_g⊗p_g
inline GeneratedBundle g2q() { return gen_grouplike(GroupTable::cyclic(2), Q()); }

// truncated polynomials k[x]/(x²)
inline GeneratedBundle dual2() { return gen_trunc_poly(Q()); }

// the non-associative 2-dim example: a·a = b, a·b = a, all else zero
inline AlgebraData non_assoc() {
  return make_algebra(Q(), {"a", "b"},
                      {MulTriple{0, 0, 1, qs(1)}, MulTriple{0, 1, 0, qs(1)}});
}

// grouplike Z/2 extended by a nil element x with Δ(x) = x⊗x, ε(x) = 1:
// passes the coalgebra and Frobenius checks but the multiplication is
// degenerate (x annihilates everything)
inline FrobeniusBundle nil_extended() {
  FieldSpec f = Q();
  std::vector<std::string> labels{"p0", "p1", "x"};
  Scalar one = Scalar::one(f);
  std::vector<MulTriple> mul{{0, 0, 0, one}, {1, 1, 1, one}};
  std::vector<ComulTriple> comul{{0, 0, 0, one}, {1, 1, 1, one}, {2, 2, 2, one}};
  Vec counit = vec(f, {1, 1, 1});
  return make_bundle(make_algebra(f, labels, std::move(mul)),
                     make_coalgebra(f, labels, std::move(comul), std::move(counit)));
}

// label-compatible mismatch: the DUAL2 multiplication with the grouplike
// comultiplication; structurally valid on both sides, Frobenius square fails
inline FrobeniusBundle mixed_invalid() {
  FieldSpec f = Q();
  std::vector<std::string> labels{"b0", "b1"};
  Scalar one = Scalar::one(f);
  std::vector<MulTriple> mul{{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}};
  std::vector<ComulTriple> comul{{0, 0, 0, one}, {1, 1, 1, one}};
  Vec counit = vec(f, {1, 1});
  return make_bundle(make_algebra(f, labels, std::move(mul)),
                     make_coalgebra(f, labels, std::move(comul), std::move(counit)));
}

inline FrobeniusBundle mc2_built() {
  CoalgebraData c = gen_comatrix(2, Q());
  auto nu = cosep_solve(c);
  auto built = build_from_cosep(c, *nu);
  return *built.value;
}

struct Mutation {
  FrobeniusBundle bundle;
  std::string description;
};

// adds a random nonzero delta to one randomly chosen structure constant
// (multiplication or comultiplication)
inline Mutation mutate_bundle(const FrobeniusBundle& b, Rng& rng) {
  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  int i = static_cast<int>(rng() % d), j = static_cast<int>(rng() % d),
      k = static_cast<int>(rng() % d);
  Scalar delta = random_nonzero_scalar(f, rng);
  Mutation out{b, ""};
  if (rng() % 2 == 0) {
    LinMap mu = b.algebra.multiplication();
    mu.add_at(k, i * d + j, delta);
    out.bundle.algebra = algebra_from_map(f, b.algebra.basis_labels, mu);
    out.description = "mul[" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "] += " + delta.str();
  } else {
    LinMap dl = b.coalgebra.comultiplication();
    dl.add_at(j * d + k, i, delta);
    out.bundle.coalgebra =
        coalgebra_from_map(f, b.coalgebra.basis_labels, dl, b.coalgebra.counit);
    out.description = "comul[" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "] += " + delta.str();
  }
  return out;
}

}  // namespace fftest

#endif
