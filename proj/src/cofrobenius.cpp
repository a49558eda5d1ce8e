#include "firmfrob/cofrobenius.hpp"

namespace firmfrob {

OpResult<CoFrobeniusMaps> cofrobenius_maps(const FrobeniusBundle& b) {
  Stopwatch sw;
  {
    CheckReport a = check_associativity(b.algebra);
    CheckReport c = check_coalgebra(b.coalgebra);
    CheckReport fr = check_frobenius(b);
    for (const CheckReport* pre : {&a, &c, &fr})
      if (!pre->passed()) {
        CheckReport r =
            refused_report("cofrobenius", "bundle fails the " + pre->name + " precondition");
        r.witness = pre->witness;
        return {std::nullopt, timed(std::move(r), sw)};
      }
  }

  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  LinMap mu = b.algebra.multiplication();
  LinMap delta = b.coalgebra.comultiplication();
  const Vec& eps = b.coalgebra.counit;

  // pairing ε(b_i b_j)
  auto eps_of = [&](const Vec& v) {
    Scalar s = Scalar::zero(f);
    for (int t = 0; t < d; ++t)
      if (!v[t].is_zero()) s = s + eps[t] * v[t];
    return s;
  };
  std::vector<Scalar> pair(static_cast<std::size_t>(d) * d, Scalar::zero(f));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      pair[static_cast<std::size_t>(i * d + j)] = eps_of(mu.column(i * d + j));

  CoFrobeniusMaps maps{LinMap(f, d, d), LinMap(f, d, d), false, false, {}, {}};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      maps.theta_right.set(j, i, pair[static_cast<std::size_t>(i * d + j)]);  // ε(b_i b_j)
      maps.theta_left.set(j, i, pair[static_cast<std::size_t>(j * d + i)]);   // ε(b_j b_i)
    }

  // module-map identities on all basis triples (c = b_i, d = b_j, φ = b_k*)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Scalar lhs_r = Scalar::zero(f), rhs_r = Scalar::zero(f);
        Scalar lhs_l = Scalar::zero(f), rhs_l = Scalar::zero(f);
        for (int t = 0; t < d; ++t) {
          Scalar dik = delta.entry(k * d + t, i);  // Δ(b_i) coefficient at b_k ⊗ b_t
          if (!dik.is_zero()) lhs_r = lhs_r + dik * pair[static_cast<std::size_t>(t * d + j)];
          Scalar djk = delta.entry(t * d + k, j);  // Δ(b_j) coefficient at b_t ⊗ b_k
          if (!djk.is_zero()) rhs_r = rhs_r + djk * pair[static_cast<std::size_t>(i * d + t)];
          Scalar dika = delta.entry(t * d + k, i);  // Δ(b_i) at b_t ⊗ b_k
          if (!dika.is_zero()) lhs_l = lhs_l + dika * pair[static_cast<std::size_t>(j * d + t)];
          Scalar djkb = delta.entry(k * d + t, j);  // Δ(b_j) at b_k ⊗ b_t
          if (!djkb.is_zero()) rhs_l = rhs_l + djkb * pair[static_cast<std::size_t>(t * d + i)];
        }
        if (lhs_r != rhs_r || lhs_l != rhs_l) {
          Witness w;
          w.indices = {i, j, k};
          w.detail = lhs_r != rhs_r
                         ? "theta_R is not a right C*-module map at this basis triple"
                         : "theta_L is not a left C*-module map at this basis triple";
          return {std::nullopt, timed(fail_report("cofrobenius", std::move(w)), sw)};
        }
      }

  maps.right_kernel = kernel(maps.theta_right);
  maps.left_kernel = kernel(maps.theta_left);
  maps.right_injective = maps.right_kernel.empty();
  maps.left_injective = maps.left_kernel.empty();
  return {std::move(maps), timed(pass_report("cofrobenius"), sw)};
}

CheckReport anti_multiplicativity_check(const FrobeniusBundle& b) {
  Stopwatch sw;
  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  LinMap mu = b.algebra.multiplication();
  LinMap delta = b.coalgebra.comultiplication();
  const Vec& eps = b.coalgebra.counit;

  auto eps_of = [&](const Vec& v) {
    Scalar s = Scalar::zero(f);
    for (int t = 0; t < d; ++t)
      if (!v[t].is_zero()) s = s + eps[t] * v[t];
    return s;
  };

  for (int i = 0; i < d; ++i)        // c
    for (int ip = 0; ip < d; ++ip)   // c'
      for (int j = 0; j < d; ++j) {  // d
        Scalar lhs = Scalar::zero(f);
        Vec dj = delta.column(j);
        for (int a = 0; a < d; ++a)
          for (int bb = 0; bb < d; ++bb) {
            const Scalar& coeff = dj[a * d + bb];
            if (coeff.is_zero()) continue;
            lhs = lhs + coeff * eps_of(mu.column(i * d + a)) * eps_of(mu.column(ip * d + bb));
          }
        Vec cc = mu.column(ip * d + i);  // c'·c
        Vec ccd(f, d);
        for (int t = 0; t < d; ++t) {
          if (cc[t].is_zero()) continue;
          Vec part = mu.column(t * d + j);
          for (int u = 0; u < d; ++u)
            if (!part[u].is_zero()) ccd.add_at(u, cc[t] * part[u]);
        }
        Scalar rhs = eps_of(ccd);
        if (lhs != rhs) {
          Witness w;
          w.indices = {i, ip, j};
          w.detail = "ε(c d₁)ε(c′ d₂) != ε(c′ c d) at this basis triple";
          return timed(fail_report("anti-multiplicativity", std::move(w)), sw);
        }
      }
  return timed(pass_report("anti-multiplicativity"), sw);
}

}  // namespace firmfrob
