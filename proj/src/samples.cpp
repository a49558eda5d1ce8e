#include "firmfrob/samples.hpp"

namespace firmfrob {

Scalar random_scalar(const FieldSpec& f, Rng& rng) {
  if (f.kind == FieldSpec::Kind::Rationals) {
    // zero-biased small fractions keep the elimination well exercised
    switch (rng() % 8) {
      case 0:
      case 1:
      case 2:
        return Scalar::zero(f);
      case 3:
        return Scalar::from_long(f, 1);
      case 4:
        return Scalar::from_long(f, -1);
      case 5:
        return Scalar::from_long(f, 2);
      case 6:
        return Scalar::from_long(f, static_cast<long>(rng() % 5) - 2);
      default:
        return Scalar::from_long(f, static_cast<long>(rng() % 3) + 1) /
               Scalar::from_long(f, 2);
    }
  }
  return Scalar::from_long(f, static_cast<long>(rng() % f.p));
}

Scalar random_nonzero_scalar(const FieldSpec& f, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

LinMap random_linmap(FieldSpec f, int rows, int cols, Rng& rng) {
  LinMap m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Scalar s = random_scalar(f, rng);
      if (!s.is_zero()) m.set(r, c, s);
    }
  return m;
}

LinMap random_invertible(FieldSpec f, int n, Rng& rng) {
  LinMap l = LinMap::identity(f, n), u = LinMap::identity(f, n), d(f, n, n);
  for (int r = 0; r < n; ++r) {
    d.set(r, r, random_nonzero_scalar(f, rng));
    for (int c = 0; c < r; ++c) {
      Scalar s = random_scalar(f, rng);
      if (!s.is_zero()) l.set(r, c, s);
    }
    for (int c = r + 1; c < n; ++c) {
      Scalar s = random_scalar(f, rng);
      if (!s.is_zero()) u.set(r, c, s);
    }
  }
  return l.compose(d).compose(u);
}

std::vector<int> basis_grouplikes(const CoalgebraData& c) {
  std::vector<int> out;
  LinMap delta = c.comultiplication();
  for (int i = 0; i < c.dim; ++i) {
    if (!c.counit[i].is_one()) continue;
    Vec want(c.field, c.dim * c.dim);
    want.set(i * c.dim + i, Scalar::one(c.field));
    if (delta.column(i) == want) out.push_back(i);
  }
  return out;
}

std::vector<int> basis_characters(const AlgebraData& r) {
  std::vector<int> out;
  LinMap mu = r.multiplication();
  for (int i = 0; i < r.dim; ++i) {
    bool ok = true;
    for (int a = 0; a < r.dim && ok; ++a)
      for (int b = 0; b < r.dim && ok; ++b) {
        Scalar got = mu.entry(i, a * r.dim + b);
        Scalar want = (a == i && b == i) ? Scalar::one(r.field) : Scalar::zero(r.field);
        if (got != want) ok = false;
      }
    if (ok) out.push_back(i);
  }
  return out;
}

ComoduleData one_dim_comodule(const FrobeniusBundle& b, int grouplike_index) {
  const int d = b.algebra.dim;
  LinMap rho(b.algebra.field, d, 1);
  rho.set(grouplike_index, 0, Scalar::one(b.algebra.field));
  return ComoduleData(1, std::move(rho));
}

ModuleData one_dim_module(const FrobeniusBundle& b, int character_index) {
  const int d = b.algebra.dim;
  LinMap alpha(b.algebra.field, 1, d);
  alpha.set(0, character_index, Scalar::one(b.algebra.field));
  return ModuleData(1, std::move(alpha));
}

ModuleData direct_sum_module(const FrobeniusBundle& b, const ModuleData& x, const ModuleData& y) {
  const int d = b.algebra.dim;
  const int dim = x.dim + y.dim;
  LinMap action(b.algebra.field, dim, dim * d);
  for (const auto& [rc, v] : x.action.entries()) action.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : y.action.entries()) {
    int a = rc.second / d, j = rc.second % d;
    action.set(x.dim + rc.first, (x.dim + a) * d + j, v);
  }
  return ModuleData(dim, std::move(action));
}

ComoduleData direct_sum_comodule(const FrobeniusBundle& b, const ComoduleData& x,
                                 const ComoduleData& y) {
  const int d = b.algebra.dim;
  const int dim = x.dim + y.dim;
  LinMap coaction(b.algebra.field, dim * d, dim);
  for (const auto& [rc, v] : x.coaction.entries()) coaction.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : y.coaction.entries()) {
    int n = rc.first / d, j = rc.first % d;
    coaction.set((x.dim + n) * d + j, x.dim + rc.second, v);
  }
  return ComoduleData(dim, std::move(coaction));
}

ModuleData conjugate_module(const FrobeniusBundle& b, const ModuleData& m, const LinMap& t) {
  auto tinv = inverse(t);
  if (!tinv) throw UsageError("module twist must be invertible");
  LinMap idr = LinMap::identity(b.algebra.field, b.algebra.dim);
  return ModuleData(m.dim, t.compose(m.action).compose(tensor(*tinv, idr)));
}

ComoduleData conjugate_comodule(const FrobeniusBundle& b, const ComoduleData& n, const LinMap& t) {
  auto tinv = inverse(t);
  if (!tinv) throw UsageError("comodule twist must be invertible");
  LinMap idr = LinMap::identity(b.algebra.field, b.algebra.dim);
  return ComoduleData(n.dim, tensor(t, idr).compose(n.coaction).compose(*tinv));
}

namespace {

template <typename Data, typename MakeOne, typename MakeRegular, typename Sum, typename Twist>
Data random_sample(const FrobeniusBundle& b, Rng& rng, int max_dim, int regular_dim,
                   const std::vector<int>& one_dims, MakeOne make_one, MakeRegular make_regular,
                   Sum sum, Twist twist) {
  std::vector<Data> blocks;
  int total = 0;
  for (;;) {
    bool regular_fits = regular_dim > 0 && total + regular_dim <= max_dim;
    bool one_fits = !one_dims.empty() && total + 1 <= max_dim;
    if (!regular_fits && !one_fits) break;
    if (total > 0 && rng() % 3 == 0) break;
    if (regular_fits && (!one_fits || rng() % 2 == 0)) {
      blocks.push_back(make_regular());
      total += regular_dim;
    } else {
      blocks.push_back(make_one(one_dims[rng() % one_dims.size()]));
      total += 1;
    }
  }
  if (blocks.empty()) return Data(0, LinMap(b.algebra.field, 0, 0));
  Data acc = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) acc = sum(acc, blocks[i]);
  LinMap t = random_invertible(b.algebra.field, total, rng);
  return twist(acc, t);
}

}  // namespace

ComoduleData random_comodule(const FrobeniusBundle& b, Rng& rng, int max_dim) {
  std::vector<int> ones = basis_grouplikes(b.coalgebra);
  return random_sample<ComoduleData>(
      b, rng, max_dim, b.algebra.dim <= max_dim ? b.algebra.dim : 0, ones,
      [&](int g) { return one_dim_comodule(b, g); }, [&] { return regular_comodule(b); },
      [&](const ComoduleData& x, const ComoduleData& y) { return direct_sum_comodule(b, x, y); },
      [&](const ComoduleData& n, const LinMap& t) { return conjugate_comodule(b, n, t); });
}

ModuleData random_module(const FrobeniusBundle& b, Rng& rng, int max_dim) {
  std::vector<int> ones;
  for (int i : basis_characters(b.algebra))
    if (check_firm_module(b, one_dim_module(b, i)).report.passed()) ones.push_back(i);
  return random_sample<ModuleData>(
      b, rng, max_dim, b.algebra.dim <= max_dim ? b.algebra.dim : 0, ones,
      [&](int i) { return one_dim_module(b, i); }, [&] { return regular_module(b); },
      [&](const ModuleData& x, const ModuleData& y) { return direct_sum_module(b, x, y); },
      [&](const ModuleData& m, const LinMap& t) { return conjugate_module(b, m, t); });
}

SampleSet default_samples(const FrobeniusBundle& b, const SampleOptions& opts) {
  SampleSet s;
  // module samples must be firm: the module -> comodule functor is partial
  // on non-firm inputs, so only firm modules can round-trip at all
  {
    ModuleData reg = regular_module(b);
    if (check_firm_module(b, reg).report.passed()) s.modules.emplace_back("regular", std::move(reg));
  }
  for (int i : basis_characters(b.algebra)) {
    ModuleData m = one_dim_module(b, i);
    if (check_firm_module(b, m).report.passed())
      s.modules.emplace_back("one-dim[" + b.algebra.label(i) + "]", std::move(m));
  }
  s.comodules.emplace_back("regular", regular_comodule(b));
  for (int g : basis_grouplikes(b.coalgebra))
    s.comodules.emplace_back("one-dim[" + b.coalgebra.label(g) + "]", one_dim_comodule(b, g));
  Rng rng(opts.seed);
  for (int t = 0; t < opts.random_count; ++t) {
    ModuleData m = random_module(b, rng, opts.max_dim);
    if (m.dim > 0) s.modules.emplace_back("random-module[" + std::to_string(t) + "]", std::move(m));
    ComoduleData n = random_comodule(b, rng, opts.max_dim);
    if (n.dim > 0)
      s.comodules.emplace_back("random-comodule[" + std::to_string(t) + "]", std::move(n));
  }
  return s;
}

CheckReport morphism_transport_suite(const FrobeniusBundle& b, std::uint64_t seed, int count) {
  Stopwatch sw;
  Rng rng(seed);
  std::vector<ModuleData> mods;
  {
    ModuleData reg = regular_module(b);
    if (check_firm_module(b, reg).report.passed()) mods.push_back(std::move(reg));
    for (int i : basis_characters(b.algebra)) {
      ModuleData m = one_dim_module(b, i);
      if (check_firm_module(b, m).report.passed()) mods.push_back(std::move(m));
    }
    for (int t = 0; t < 2; ++t) {
      ModuleData m = random_module(b, rng, 4);
      if (m.dim > 0) mods.push_back(std::move(m));
    }
  }
  if (mods.empty())
    return timed(refused_report("morphism-transport-suite", "no firm module samples available"),
                 sw);

  LinMap mu = b.algebra.multiplication();
  for (int t = 0; t < count; ++t) {
    const ModuleData& src = mods[rng() % mods.size()];
    const ModuleData& dst = mods[rng() % mods.size()];
    LinMap f(b.algebra.field, dst.dim, src.dim);
    switch (rng() % 3) {
      case 0:
        f = random_linmap(b.algebra.field, dst.dim, src.dim, rng);
        break;
      case 1:
        if (src.dim == dst.dim && &src == &dst) {
          f = LinMap::identity(b.algebra.field, src.dim);
        } else {
          f = random_linmap(b.algebra.field, dst.dim, src.dim, rng);
        }
        break;
      default:
        if (&src == &dst && src.dim == b.algebra.dim && src.action == mu) {
          // left multiplication by a random element is equivariant on the
          // regular module
          Vec z(b.algebra.field, b.algebra.dim);
          for (int i = 0; i < b.algebra.dim; ++i) z.set(i, random_scalar(b.algebra.field, rng));
          for (int r = 0; r < b.algebra.dim; ++r) {
            Vec col = mu.apply(tensor(z, Vec::unit(b.algebra.field, b.algebra.dim, r)));
            for (int q = 0; q < b.algebra.dim; ++q)
              if (!col[q].is_zero()) f.set(q, r, col[q]);
          }
        } else {
          f = random_linmap(b.algebra.field, dst.dim, src.dim, rng);
        }
        break;
    }
    CheckReport rep = morphism_transport_check(b, f, src, dst);
    if (!rep.passed()) {
      CheckReport out = rep;
      out.name = "morphism-transport-suite";
      if (out.witness)
        out.witness->detail =
            "seeded morphism " + std::to_string(t) + ": " + out.witness->detail;
      return timed(std::move(out), sw);
    }
  }
  CheckReport ok = pass_report("morphism-transport-suite");
  ok.note = std::to_string(count) + " seeded morphisms";
  return timed(std::move(ok), sw);
}

}  // namespace firmfrob
