#include "firmfrob/algebra.hpp"

#include <set>

namespace firmfrob {

LinMap AlgebraData::multiplication() const {
  LinMap m(field, dim, dim * dim);
  for (const auto& t : mul) m.add_at(t.k, t.i * dim + t.j, t.c);
  return m;
}

std::string AlgebraData::label(int i) const {
  if (i >= 0 && i < static_cast<int>(basis_labels.size())) return basis_labels[i];
  return "b" + std::to_string(i);
}

AlgebraData make_algebra(FieldSpec field, std::vector<std::string> basis_labels,
                         std::vector<MulTriple> mul) {
  AlgebraData r;
  r.field = field;
  r.dim = static_cast<int>(basis_labels.size());
  std::set<std::string> seen_labels(basis_labels.begin(), basis_labels.end());
  if (static_cast<int>(seen_labels.size()) != r.dim)
    throw UsageError("duplicate basis labels");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& t : mul) {
    if (t.i < 0 || t.i >= r.dim || t.j < 0 || t.j >= r.dim || t.k < 0 || t.k >= r.dim)
      throw UsageError("multiplication triple index out of range");
    if (!(t.c.field() == field)) throw UsageError("multiplication constant field mismatch");
    if (!seen.insert({t.i, t.j, t.k}).second)
      throw UsageError("duplicate multiplication triple (i,j,k)");
  }
  r.basis_labels = std::move(basis_labels);
  for (auto& t : mul)
    if (!t.c.is_zero()) r.mul.push_back(std::move(t));
  return r;
}

AlgebraData algebra_from_map(FieldSpec field, std::vector<std::string> basis_labels,
                             const LinMap& mu) {
  const int d = static_cast<int>(basis_labels.size());
  if (mu.codomain_dim() != d || mu.domain_dim() != d * d)
    throw UsageError("multiplication map has wrong shape");
  std::vector<MulTriple> triples;
  for (const auto& [rc, v] : mu.entries())
    triples.push_back(MulTriple{rc.second / d, rc.second % d, rc.first, v});
  return make_algebra(field, std::move(basis_labels), std::move(triples));
}

Vec alg_mul(const AlgebraData& r, const Vec& a, const Vec& b) {
  return r.multiplication().apply(tensor(a, b));
}

CheckReport check_associativity(const AlgebraData& r) {
  Stopwatch sw;
  LinMap mu = r.multiplication();
  LinMap id = LinMap::identity(r.field, r.dim);
  // (μ ∘ (μ⊗id)) vs (μ ∘ (id⊗μ)) on R⊗R⊗R
  LinMap left = mu.compose(tensor(mu, id));
  LinMap right = mu.compose(tensor(id, mu));
  if (left == right) return timed(pass_report("associativity"), sw);
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j)
      for (int k = 0; k < r.dim; ++k) {
        int col = (i * r.dim + j) * r.dim + k;
        Vec l = left.column(col), rr = right.column(col);
        if (l != rr) {
          Witness w;
          w.indices = {i, j, k};
          w.expected = l;
          w.actual = rr;
          w.detail = "(" + r.label(i) + " " + r.label(j) + ") " + r.label(k) +
                     " != " + r.label(i) + " (" + r.label(j) + " " + r.label(k) + ")";
          return timed(fail_report("associativity", std::move(w)), sw);
        }
      }
  throw InternalError("associativity: maps differ but no witness column found");
}

CheckReport check_nondegenerate(const AlgebraData& r) {
  Stopwatch sw;
  LinMap mu = r.multiplication();
  // left annihilator: x with s·x = 0 for all s — stack the rows of μ over s
  LinMap left(r.field, r.dim * r.dim, r.dim);   // (s, out) x in
  LinMap right(r.field, r.dim * r.dim, r.dim);  // (s, out) x in
  for (const auto& [rc, v] : mu.entries()) {
    int i = rc.second / r.dim, j = rc.second % r.dim, k = rc.first;
    // b_i b_j = ... b_k: contributes to left map at x = j (s = i) and to
    // right map at x = i (s = j)
    left.add_at(i * r.dim + k, j, v);
    right.add_at(j * r.dim + k, i, v);
  }
  std::vector<Vec> lk = kernel(left);
  if (!lk.empty()) {
    Witness w;
    w.actual = lk.front();
    w.detail = "nonzero element annihilated by left multiplication by every basis element";
    return timed(fail_report("nondegeneracy", std::move(w)), sw);
  }
  std::vector<Vec> rk = kernel(right);
  if (!rk.empty()) {
    Witness w;
    w.actual = rk.front();
    w.detail = "nonzero element annihilated by right multiplication by every basis element";
    return timed(fail_report("nondegeneracy", std::move(w)), sw);
  }
  return timed(pass_report("nondegeneracy"), sw);
}

FirmnessResult check_firm_algebra(const AlgebraData& r) {
  Stopwatch sw;
  LinMap mu = r.multiplication();
  const int d = r.dim;
  std::vector<Vec> relations;
  relations.reserve(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec pij = mu.column(i * d + j);  // b_i b_j in R
      for (int k = 0; k < d; ++k) {
        Vec pjk = mu.column(j * d + k);  // b_j b_k in R
        // (b_i b_j) ⊗ b_k − b_i ⊗ (b_j b_k) in R⊗R
        Vec rel(r.field, d * d);
        for (int t = 0; t < d; ++t) {
          if (!pij[t].is_zero()) rel.add_at(t * d + k, pij[t]);
          if (!pjk[t].is_zero()) rel.add_at(i * d + t, -pjk[t]);
        }
        if (!rel.is_zero()) relations.push_back(std::move(rel));
      }
    }

  QuotientSpace q = quotient_by_span(r.field, d * d, relations);
  LinMap induced = mu.compose(q.section);

  FirmnessResult out{pass_report("firmness"), q, induced};
  if (mu != induced.compose(q.projection)) {
    Witness w;
    w.detail = "multiplication does not descend to R tensor_R R (algebra is not associative)";
    out.report = fail_report("firmness", std::move(w));
    out.report.seconds = sw.seconds();
    return out;
  }
  if (q.quotient_dim != d) {
    Witness w;
    w.detail = "R tensor_R R has dimension " + std::to_string(q.quotient_dim) +
               ", expected " + std::to_string(d) +
               (q.quotient_dim > d ? "; mu-bar not injective" : "; mu-bar not surjective");
    out.report = fail_report("firmness", std::move(w));
    out.report.seconds = sw.seconds();
    return out;
  }
  if (!is_bijective(induced)) {
    Witness w;
    std::vector<Vec> k = kernel(induced);
    if (!k.empty()) w.actual = k.front();
    w.detail = rank(induced) < d ? "mu-bar not surjective" : "mu-bar not injective";
    out.report = fail_report("firmness", std::move(w));
    out.report.seconds = sw.seconds();
    return out;
  }
  out.report.seconds = sw.seconds();
  return out;
}

CheckReport verify_local_units(const AlgebraData& r, const LocalUnitFamily& e,
                               const std::vector<Vec>& test_set) {
  Stopwatch sw;
  std::vector<Vec> tests = test_set;
  if (tests.empty())
    for (int i = 0; i < r.dim; ++i) tests.push_back(Vec::unit(r.field, r.dim, i));

  for (std::size_t idx = 0; idx < e.elements.size(); ++idx) {
    const Vec& u = e.elements[idx];
    if (u.dim() != r.dim || !(u.field() == r.field))
      throw UsageError("local-unit candidate has wrong shape");
    Vec uu = alg_mul(r, u, u);
    if (uu != u) {
      Witness w;
      w.indices = {static_cast<int>(idx)};
      w.expected = u;
      w.actual = uu;
      w.detail = "candidate local unit is not idempotent";
      return timed(fail_report("local-units", std::move(w)), sw);
    }
  }

  auto serves = [&](const Vec& u, const std::vector<int>& subset) {
    for (int t : subset) {
      const Vec& x = tests[static_cast<std::size_t>(t)];
      if (alg_mul(r, u, x) != x) return false;
      if (alg_mul(r, x, u) != x) return false;
    }
    return true;
  };

  int bound = std::min<int>(e.max_subset_size, static_cast<int>(tests.size()));
  std::vector<int> subset;
  // lexicographic enumeration of subsets of each size 1..bound
  auto search = [&](auto&& self, int start, int remaining) -> std::optional<std::vector<int>> {
    if (remaining == 0) {
      for (const Vec& u : e.elements)
        if (serves(u, subset)) return std::nullopt;
      return subset;
    }
    for (int t = start; t < static_cast<int>(tests.size()); ++t) {
      subset.push_back(t);
      auto bad = self(self, t + 1, remaining - 1);
      subset.pop_back();
      if (bad) return bad;
    }
    return std::nullopt;
  };
  for (int size = 1; size <= bound; ++size) {
    auto bad = search(search, 0, size);
    if (bad) {
      Witness w;
      w.indices = *bad;
      w.detail = "no family member is a two-sided unit for this subset of the test set";
      return timed(fail_report("local-units", std::move(w)), sw);
    }
  }
  CheckReport ok = pass_report("local-units");
  ok.note = "verified up to subset size " + std::to_string(bound);
  return timed(std::move(ok), sw);
}

std::optional<Vec> find_global_unit(const AlgebraData& r) {
  // u with u·b_i = b_i = b_i·u for all i: 2·dim² linear equations on u
  LinearSystem sys(r.field, r.dim);
  LinMap mu = r.multiplication();
  const int d = r.dim;
  for (int i = 0; i < d; ++i) {
    for (int out = 0; out < d; ++out) {
      // Σ_t u_t (b_t b_i)_out = δ_{out,i}   and   Σ_t u_t (b_i b_t)_out = δ_{out,i}
      Vec lhs_left(r.field, d), lhs_right(r.field, d);
      for (int t = 0; t < d; ++t) {
        lhs_left.add_at(t, mu.entry(out, t * d + i));
        lhs_right.add_at(t, mu.entry(out, i * d + t));
      }
      Scalar rhs = out == i ? Scalar::one(r.field) : Scalar::zero(r.field);
      sys.add_equation(lhs_left, rhs);
      sys.add_equation(lhs_right, rhs);
    }
  }
  return sys.solve();
}

}  // namespace firmfrob
