#include "firmfrob/frobenius.hpp"

#include <thread>

namespace firmfrob {

namespace {

// basis products b_u · b_s as dense vectors, indexed u*dim + s
std::vector<Vec> basis_products(const AlgebraData& r) {
  LinMap mu = r.multiplication();
  std::vector<Vec> prod;
  prod.reserve(static_cast<std::size_t>(r.dim) * r.dim);
  for (int u = 0; u < r.dim; ++u)
    for (int s = 0; s < r.dim; ++s) prod.push_back(mu.column(u * r.dim + s));
  return prod;
}

}  // namespace

FrobeniusBundle make_bundle(AlgebraData algebra, CoalgebraData coalgebra) {
  if (!(algebra.field == coalgebra.field)) throw UsageError("bundle field mismatch");
  if (algebra.dim != coalgebra.dim) throw UsageError("bundle dimension mismatch");
  if (algebra.basis_labels != coalgebra.basis_labels)
    throw UsageError("bundle basis labels disagree");
  return FrobeniusBundle{std::move(algebra), std::move(coalgebra)};
}

CheckReport check_frobenius(const FrobeniusBundle& b) {
  Stopwatch sw;
  const int d = b.algebra.dim;
  LinMap mu = b.algebra.multiplication();
  LinMap delta = b.coalgebra.comultiplication();
  LinMap id = LinMap::identity(b.algebra.field, d);

  LinMap lhs = tensor(mu, id).compose(tensor(id, delta));   // (μ⊗id)∘(id⊗Δ)
  LinMap mid = delta.compose(mu);                           // Δ∘μ
  LinMap rhs = tensor(id, mu).compose(tensor(delta, id));   // (id⊗μ)∘(Δ⊗id)

  if (lhs == mid && mid == rhs) return timed(pass_report("frobenius"), sw);

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int col = i * d + j;
      Vec l = lhs.column(col), m = mid.column(col), r = rhs.column(col);
      if (l != m || m != r) {
        Witness w;
        w.indices = {i, j};
        w.expected = m;
        w.actual = (l != m) ? l : r;
        w.detail = "Frobenius square violated at (" + b.algebra.label(i) + ", " +
                   b.algebra.label(j) + ")";
        return timed(fail_report("frobenius", std::move(w)), sw);
      }
    }
  throw InternalError("frobenius: maps differ but no witness column found");
}

std::optional<LinMap> cosep_solve(const CoalgebraData& c) {
  const int d = c.dim;
  const FieldSpec f = c.field;
  LinMap delta = c.comultiplication();
  // unknowns: nu[r][col], flattened r*d*d + col
  LinearSystem sys(f, d * d * d);
  auto unknown = [d](int r, int col) { return r * d * d + col; };
  Scalar zero = Scalar::zero(f);
  Scalar one = Scalar::one(f);

  // nu ∘ Δ = id
  for (int i = 0; i < d; ++i) {
    Vec dcol = delta.column(i);
    for (int r = 0; r < d; ++r) {
      std::vector<std::pair<int, Scalar>> eq;
      for (int col = 0; col < d * d; ++col)
        if (!dcol[col].is_zero()) eq.emplace_back(unknown(r, col), dcol[col]);
      sys.add_equation(eq, r == i ? one : zero);
    }
  }

  // (id⊗nu)∘(Δ⊗id) = Δ∘nu  and  Δ∘nu = (nu⊗id)∘(id⊗Δ)
  for (int a = 0; a < d; ++a) {
    Vec da = delta.column(a);
    for (int bcol = 0; bcol < d; ++bcol) {
      Vec db = delta.column(bcol);
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) {
          {
            std::vector<std::pair<int, Scalar>> eq;
            for (int w = 0; w < d; ++w) {
              const Scalar& duw = da[u * d + w];
              if (!duw.is_zero()) eq.emplace_back(unknown(v, w * d + bcol), duw);
            }
            for (int r = 0; r < d; ++r) {
              Scalar drv = delta.entry(u * d + v, r);
              if (!drv.is_zero()) eq.emplace_back(unknown(r, a * d + bcol), -drv);
            }
            sys.add_equation(eq, zero);
          }
          {
            std::vector<std::pair<int, Scalar>> eq;
            for (int r = 0; r < d; ++r) {
              Scalar drv = delta.entry(u * d + v, r);
              if (!drv.is_zero()) eq.emplace_back(unknown(r, a * d + bcol), drv);
            }
            for (int w = 0; w < d; ++w) {
              const Scalar& dwv = db[w * d + v];
              if (!dwv.is_zero()) eq.emplace_back(unknown(u, a * d + w), -dwv);
            }
            sys.add_equation(eq, zero);
          }
        }
    }
  }

  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  LinMap nu(f, d, d * d);
  for (int r = 0; r < d; ++r)
    for (int col = 0; col < d * d; ++col) {
      const Scalar& s = (*sol)[unknown(r, col)];
      if (!s.is_zero()) nu.set(r, col, s);
    }
  return nu;
}

CheckReport verify_retraction(const CoalgebraData& c, const LinMap& nu) {
  Stopwatch sw;
  const int d = c.dim;
  if (nu.codomain_dim() != d || nu.domain_dim() != d * d)
    throw UsageError("retraction candidate has wrong shape");
  LinMap delta = c.comultiplication();
  LinMap id = LinMap::identity(c.field, d);

  if (nu.compose(delta) != id) {
    for (int i = 0; i < d; ++i) {
      Vec got = nu.apply(delta.column(i));
      Vec want = Vec::unit(c.field, d, i);
      if (got != want) {
        Witness w;
        w.indices = {i};
        w.expected = want;
        w.actual = got;
        w.detail = "nu∘Δ != id at " + c.label(i);
        return timed(fail_report("retraction", std::move(w)), sw);
      }
    }
  }
  LinMap left = tensor(id, nu).compose(tensor(delta, id));
  LinMap mid = delta.compose(nu);
  LinMap right = tensor(nu, id).compose(tensor(id, delta));
  if (left != mid || mid != right) {
    for (int a = 0; a < d; ++a)
      for (int bb = 0; bb < d; ++bb) {
        int col = a * d + bb;
        Vec l = left.column(col), m = mid.column(col), r = right.column(col);
        if (l != m || m != r) {
          Witness w;
          w.indices = {a, bb};
          w.expected = m;
          w.actual = (l != m) ? l : r;
          w.detail = "bicomodule law fails at (" + c.label(a) + ", " + c.label(bb) + ")";
          return timed(fail_report("retraction", std::move(w)), sw);
        }
      }
    throw InternalError("retraction: maps differ but no witness column found");
  }
  return timed(pass_report("retraction"), sw);
}

OpResult<FrobeniusBundle> build_from_cosep(const CoalgebraData& c, const LinMap& nu) {
  CheckReport v = verify_retraction(c, nu);
  if (!v.passed()) {
    CheckReport r = refused_report("build-from-cosep", "candidate is not a bicomodule retraction");
    r.witness = v.witness;
    return {std::nullopt, std::move(r)};
  }
  AlgebraData alg = algebra_from_map(c.field, c.basis_labels, nu);
  return {make_bundle(std::move(alg), c), pass_report("build-from-cosep")};
}

Vec square_mul(const AlgebraData& r, const Vec& a, const Vec& b) {
  const int d = r.dim;
  if (a.dim() != d * d || b.dim() != d * d) throw UsageError("square_mul operands not in R⊗R");
  std::vector<Vec> prod = basis_products(r);
  Vec out(r.field, d * d);
  for (int uv = 0; uv < d * d; ++uv) {
    if (a[uv].is_zero()) continue;
    int u = uv / d, v = uv % d;
    for (int st = 0; st < d * d; ++st) {
      if (b[st].is_zero()) continue;
      int s = st / d, t = st % d;
      Scalar coeff = a[uv] * b[st];
      const Vec& us = prod[static_cast<std::size_t>(u * d + s)];
      const Vec& vt = prod[static_cast<std::size_t>(v * d + t)];
      for (int p = 0; p < d; ++p) {
        if (us[p].is_zero()) continue;
        for (int q = 0; q < d; ++q)
          if (!vt[q].is_zero()) out.add_at(p * d + q, coeff * us[p] * vt[q]);
      }
    }
  }
  return out;
}

namespace {

// product x·y in R⊗R with precomputed basis products
Vec square_mul_with(const std::vector<Vec>& prod, int d, const FieldSpec& f, const Vec& a,
                    const Vec& b) {
  Vec out(f, d * d);
  for (int uv = 0; uv < d * d; ++uv) {
    if (a[uv].is_zero()) continue;
    int u = uv / d, v = uv % d;
    for (int st = 0; st < d * d; ++st) {
      if (b[st].is_zero()) continue;
      int s = st / d, t = st % d;
      Scalar coeff = a[uv] * b[st];
      const Vec& us = prod[static_cast<std::size_t>(u * d + s)];
      const Vec& vt = prod[static_cast<std::size_t>(v * d + t)];
      for (int p = 0; p < d; ++p) {
        if (us[p].is_zero()) continue;
        for (int q = 0; q < d; ++q)
          if (!vt[q].is_zero()) out.add_at(p * d + q, coeff * us[p] * vt[q]);
      }
    }
  }
  return out;
}

}  // namespace

CheckReport verify_multiplier_pair(const AlgebraData& r, const MultiplierPair& m, bool parallel) {
  Stopwatch sw;
  const int d = r.dim;
  const int dd = d * d;
  if (m.lambda.domain_dim() != dd || m.lambda.codomain_dim() != dd ||
      m.rho.domain_dim() != dd || m.rho.codomain_dim() != dd)
    throw UsageError("multiplier pair has wrong shape");

  std::vector<Vec> prod = basis_products(r);
  std::vector<Vec> lam_cols, rho_cols;
  lam_cols.reserve(static_cast<std::size_t>(dd));
  rho_cols.reserve(static_cast<std::size_t>(dd));
  for (int i = 0; i < dd; ++i) {
    lam_cols.push_back(m.lambda.column(i));
    rho_cols.push_back(m.rho.column(i));
  }

  // first violation in lexicographic (x, y) order within a range of x
  auto scan = [&](int x_begin, int x_end) -> std::optional<std::tuple<int, int, Vec, Vec>> {
    for (int x = x_begin; x < x_end; ++x) {
      Vec ex = Vec::unit(r.field, dd, x);
      for (int y = 0; y < dd; ++y) {
        Vec lhs = square_mul_with(prod, d, r.field, rho_cols[static_cast<std::size_t>(x)],
                                  Vec::unit(r.field, dd, y));
        Vec rhs = square_mul_with(prod, d, r.field, ex, lam_cols[static_cast<std::size_t>(y)]);
        if (lhs != rhs) return std::make_tuple(x, y, lhs, rhs);
      }
    }
    return std::nullopt;
  };

  std::optional<std::tuple<int, int, Vec, Vec>> violation;
  unsigned threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (threads <= 1 || dd < 4) {
    violation = scan(0, dd);
  } else {
    int chunk = (dd + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    std::vector<std::optional<std::tuple<int, int, Vec, Vec>>> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      int lo = static_cast<int>(t) * chunk;
      int hi = std::min(dd, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, t, lo, hi] { partial[t] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial)
      if (p && (!violation || std::get<0>(*p) < std::get<0>(*violation) ||
                (std::get<0>(*p) == std::get<0>(*violation) &&
                 std::get<1>(*p) < std::get<1>(*violation))))
        violation = p;
  }

  if (!violation) return timed(pass_report("multiplier-law"), sw);
  auto [x, y, lhs, rhs] = *violation;
  Witness w;
  w.indices = {x, y};
  w.expected = rhs;
  w.actual = lhs;
  w.detail = "rho(x)·y != x·lambda(y) at basis pair of R⊗R";
  return timed(fail_report("multiplier-law", std::move(w)), sw);
}

OpResult<MultiplierPair> casimir_from_delta(const FrobeniusBundle& b, bool parallel) {
  CheckReport frob = check_frobenius(b);
  if (!frob.passed()) {
    CheckReport r = refused_report("casimir", "Frobenius compatibility fails");
    r.witness = frob.witness;
    return {std::nullopt, std::move(r)};
  }
  CheckReport nd = check_nondegenerate(b.algebra);
  if (!nd.passed()) {
    CheckReport r = refused_report("casimir", "multiplication is degenerate");
    r.witness = nd.witness;
    return {std::nullopt, std::move(r)};
  }

  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  std::vector<Vec> prod = basis_products(b.algebra);
  LinMap lambda(f, d * d, d * d), rho(f, d * d, d * d);
  // λ(b_i⊗b_j) = Σ (b_j)₍₁₎ b_i ⊗ (b_j)₍₂₎ ; ρ(b_i⊗b_j) = Σ (b_i)₍₁₎ ⊗ b_j (b_i)₍₂₎
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int col = i * d + j;
      for (const auto& t : b.coalgebra.comul) {
        if (t.i == j) {
          // Δ(b_j) ∋ c · b_{t.j} ⊗ b_{t.k}: contributes c · (b_{t.j} b_i) ⊗ b_{t.k}
          const Vec& p = prod[static_cast<std::size_t>(t.j * d + i)];
          for (int q = 0; q < d; ++q)
            if (!p[q].is_zero()) lambda.add_at(q * d + t.k, col, t.c * p[q]);
        }
        if (t.i == i) {
          // Δ(b_i) ∋ c · b_{t.j} ⊗ b_{t.k}: contributes c · b_{t.j} ⊗ (b_j b_{t.k})
          const Vec& p = prod[static_cast<std::size_t>(j * d + t.k)];
          for (int q = 0; q < d; ++q)
            if (!p[q].is_zero()) rho.add_at(t.j * d + q, col, t.c * p[q]);
        }
      }
    }

  MultiplierPair pair{std::move(lambda), std::move(rho)};
  CheckReport law = verify_multiplier_pair(b.algebra, pair, parallel);
  if (!law.passed()) {
    CheckReport r = refused_report("casimir", "constructed pair violates the multiplier law");
    r.witness = law.witness;
    return {std::nullopt, std::move(r)};
  }
  return {std::move(pair), pass_report("casimir")};
}

std::optional<Vec> multiplier_to_element(const AlgebraData& r, const MultiplierPair& m,
                                         int basis_index, Side side) {
  const int d = r.dim;
  const int dd = d * d;
  const FieldSpec f = r.field;
  if (basis_index < 0 || basis_index >= d) throw UsageError("basis index out of range");
  std::vector<Vec> prod = basis_products(r);

  LinearSystem sys(f, dd);
  for (int x = 0; x < dd; ++x) {
    int xs = x / d, xt = x % d;
    // rhs element of R⊗R for this x
    Vec rhs(f, dd);
    if (side == Side::Left) {
      Vec lam = m.lambda.column(x);
      for (int ab = 0; ab < dd; ++ab) {
        if (lam[ab].is_zero()) continue;
        int a = ab / d, bb = ab % d;
        const Vec& ra = prod[static_cast<std::size_t>(basis_index * d + a)];
        for (int p = 0; p < d; ++p)
          if (!ra[p].is_zero()) rhs.add_at(p * d + bb, lam[ab] * ra[p]);
      }
    } else {
      Vec rh = m.rho.column(x);
      for (int ab = 0; ab < dd; ++ab) {
        if (rh[ab].is_zero()) continue;
        int a = ab / d, bb = ab % d;
        const Vec& br = prod[static_cast<std::size_t>(bb * d + basis_index)];
        for (int q = 0; q < d; ++q)
          if (!br[q].is_zero()) rhs.add_at(a * d + q, rh[ab] * br[q]);
      }
    }
    // equations per output coordinate (p, q)
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        std::vector<std::pair<int, Scalar>> eq;
        for (int uv = 0; uv < dd; ++uv) {
          int u = uv / d, v = uv % d;
          Scalar coeff = side == Side::Left
                             ? prod[static_cast<std::size_t>(u * d + xs)][p] *
                                   prod[static_cast<std::size_t>(v * d + xt)][q]
                             : prod[static_cast<std::size_t>(xs * d + u)][p] *
                                   prod[static_cast<std::size_t>(xt * d + v)][q];
          if (!coeff.is_zero()) eq.emplace_back(uv, coeff);
        }
        sys.add_equation(eq, rhs[p * d + q]);
      }
  }
  if (!sys.consistent()) return std::nullopt;
  if (!sys.determined())
    throw InternalError(
        "multiplier element system is underdetermined: non-degeneracy precondition leaked");
  return sys.solve();
}

DeltaReconstruction delta_from_casimir(const AlgebraData& r, const MultiplierPair& m,
                                       const Vec& counit) {
  Stopwatch sw;
  const int d = r.dim;
  const FieldSpec f = r.field;
  if (counit.dim() != d || !(counit.field() == f))
    throw UsageError("counit vector has wrong shape");

  FirmnessResult firm = check_firm_algebra(r);
  if (!firm.report.passed()) {
    CheckReport rep = refused_report("delta-from-casimir", "algebra is not firm");
    rep.witness = firm.report.witness;
    return {std::nullopt, timed(std::move(rep), sw)};
  }
  CheckReport nd = check_nondegenerate(r);
  if (!nd.passed()) {
    CheckReport rep = refused_report("delta-from-casimir", "multiplication is degenerate");
    rep.witness = nd.witness;
    return {std::nullopt, timed(std::move(rep), sw)};
  }

  LinMap delta(f, d * d, d);
  for (int i = 0; i < d; ++i) {
    std::optional<Vec> left = multiplier_to_element(r, m, i, Side::Left);
    if (!left) {
      CheckReport rep = refused_report(
          "delta-from-casimir", "e not in the ideal R⊗R at r = " + r.label(i));
      return {std::nullopt, timed(std::move(rep), sw)};
    }
    std::optional<Vec> right = multiplier_to_element(r, m, i, Side::Right);
    if (!right) {
      CheckReport rep = refused_report(
          "delta-from-casimir", "e not in the ideal R⊗R at r = " + r.label(i));
      return {std::nullopt, timed(std::move(rep), sw)};
    }
    if (*left != *right) {
      Witness w;
      w.indices = {i};
      w.expected = *left;
      w.actual = *right;
      w.detail = "(r⊗1)e != e(1⊗r) at r = " + r.label(i);
      return {std::nullopt, timed(fail_report("delta-from-casimir", std::move(w)), sw)};
    }
    for (int q = 0; q < d * d; ++q)
      if (!(*left)[q].is_zero()) delta.set(q, i, (*left)[q]);
  }

  // counit laws on the reconstructed elements
  for (int i = 0; i < d; ++i) {
    Vec col = delta.column(i);
    Vec lhs(f, d), rhs(f, d);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const Scalar& v = col[p * d + q];
        if (v.is_zero()) continue;
        lhs.add_at(q, counit[p] * v);  // (ε⊗id)
        rhs.add_at(p, counit[q] * v);  // (id⊗ε)
      }
    Vec want = Vec::unit(f, d, i);
    if (lhs != want || rhs != want) {
      Witness w;
      w.indices = {i};
      w.expected = want;
      w.actual = (lhs != want) ? lhs : rhs;
      w.detail = "counit law fails on the reconstructed comultiplication at " + r.label(i);
      return {std::nullopt, timed(fail_report("delta-from-casimir", std::move(w)), sw)};
    }
  }

  CoalgebraData c = coalgebra_from_map(f, r.basis_labels, delta, counit);
  CheckReport claws = check_coalgebra(c);
  if (!claws.passed()) {
    CheckReport rep = fail_report("delta-from-casimir", *claws.witness);
    rep.witness->detail = "internal consistency failure: " + rep.witness->detail;
    return {std::nullopt, timed(std::move(rep), sw)};
  }
  CheckReport compat = check_frobenius(FrobeniusBundle{r, c});
  if (!compat.passed()) {
    CheckReport rep = fail_report("delta-from-casimir", *compat.witness);
    rep.witness->detail =
        "reconstructed comultiplication is not a bimodule map: " + rep.witness->detail;
    return {std::nullopt, timed(std::move(rep), sw)};
  }
  return {std::move(c), timed(pass_report("delta-from-casimir"), sw)};
}

CheckReport section_check(const FrobeniusBundle& b, const LinMap& n) {
  Stopwatch sw;
  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  if (n.domain_dim() != d || n.codomain_dim() != d * d)
    throw UsageError("section candidate has wrong shape");
  LinMap mu = b.algebra.multiplication();
  if (mu.compose(n) != LinMap::identity(f, d)) {
    for (int i = 0; i < d; ++i) {
      Vec got = mu.apply(n.column(i));
      Vec want = Vec::unit(f, d, i);
      if (got != want) {
        Witness w;
        w.indices = {i};
        w.expected = want;
        w.actual = got;
        w.detail = "μ∘n != id at " + b.algebra.label(i);
        return timed(fail_report("section", std::move(w)), sw);
      }
    }
  }
  std::vector<Vec> prod = basis_products(b.algebra);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lhs = n.apply(prod[static_cast<std::size_t>(i * d + j)]);  // n(b_i b_j)
      Vec nj = n.column(j);
      Vec rhs(f, d * d);  // (b_i ⊗ 1) · n(b_j)
      for (int ab = 0; ab < d * d; ++ab) {
        if (nj[ab].is_zero()) continue;
        int a = ab / d, bb = ab % d;
        const Vec& ia = prod[static_cast<std::size_t>(i * d + a)];
        for (int p = 0; p < d; ++p)
          if (!ia[p].is_zero()) rhs.add_at(p * d + bb, nj[ab] * ia[p]);
      }
      if (lhs != rhs) {
        Witness w;
        w.indices = {i, j};
        w.expected = rhs;
        w.actual = lhs;
        w.detail = "n(b_i b_j) != (b_i⊗1)·n(b_j) at (" + b.algebra.label(i) + ", " +
                   b.algebra.label(j) + ")";
        return timed(fail_report("section", std::move(w)), sw);
      }
    }
  return timed(pass_report("section"), sw);
}

FrobeniusBundle conjugate_bundle(const FrobeniusBundle& b, const LinMap& t) {
  const int d = b.algebra.dim;
  auto tinv_opt = inverse(t);
  if (!tinv_opt) throw UsageError("base change must be invertible");
  const LinMap& tinv = *tinv_opt;
  LinMap mu = t.compose(b.algebra.multiplication()).compose(tensor(tinv, tinv));
  LinMap delta = tensor(t, t).compose(b.coalgebra.comultiplication()).compose(tinv);
  LinMap eps = b.coalgebra.counit_map().compose(tinv);
  Vec counit(b.algebra.field, d);
  for (int i = 0; i < d; ++i) counit.set(i, eps.entry(0, i));
  AlgebraData alg = algebra_from_map(b.algebra.field, b.algebra.basis_labels, mu);
  CoalgebraData coa =
      coalgebra_from_map(b.algebra.field, b.algebra.basis_labels, delta, std::move(counit));
  return FrobeniusBundle{std::move(alg), std::move(coa)};
}

}  // namespace firmfrob
