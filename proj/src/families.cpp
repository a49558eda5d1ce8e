#include "firmfrob/families.hpp"

#include <map>

namespace firmfrob {

int GroupTable::inverse(int g) const {
  for (int h = 0; h < order; ++h)
    if (at(g, h) == identity) return h;
  throw InternalError("group element without inverse");
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1 || n > 64) throw UsageError("group order must be in [1, 64]");
  GroupTable g;
  g.order = n;
  g.identity = 0;
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return g;
}

GroupTable GroupTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1 || n > 64) throw UsageError("group order must be in [1, 64]");
  GroupTable g;
  g.order = n;
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[static_cast<std::size_t>(a)].size()) != n)
      throw UsageError("group table is not square");
    for (int b = 0; b < n; ++b) {
      int v = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) throw UsageError("group table entry out of range");
      g.table[static_cast<std::size_t>(a * n + b)] = v;
    }
  }
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(static_cast<std::size_t>(n)), col(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
      if (row[static_cast<std::size_t>(g.at(a, b))] || col[static_cast<std::size_t>(g.at(b, a))])
        throw UsageError("group table is not a Latin square");
      row[static_cast<std::size_t>(g.at(a, b))] = true;
      col[static_cast<std::size_t>(g.at(b, a))] = true;
    }
  }
  // two-sided identity
  g.identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.at(e, a) == a && g.at(a, e) == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw UsageError("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          throw UsageError("group table is not associative");
  return g;
}

namespace {

// nonempty subset sums of the idempotents p_g (all subsets when feasible)
std::vector<Vec> subset_sums(FieldSpec f, int dim, int count,
                             const std::function<Vec(int)>& elem) {
  std::vector<Vec> out;
  if (count <= 8) {
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
      Vec v(f, dim);
      for (int g = 0; g < count; ++g)
        if (mask & (1u << g)) v = v + elem(g);
      out.push_back(std::move(v));
    }
  } else {
    for (int g = 0; g < count; ++g) out.push_back(elem(g));
    Vec full(f, dim);
    for (int g = 0; g < count; ++g) full = full + elem(g);
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace

GeneratedBundle gen_grouplike(const GroupTable& g, FieldSpec field) {
  const int n = g.order;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  Scalar one = Scalar::one(field);
  std::vector<MulTriple> mul;
  std::vector<ComulTriple> comul;
  Vec counit(field, n);
  for (int i = 0; i < n; ++i) {
    mul.push_back(MulTriple{i, i, i, one});
    comul.push_back(ComulTriple{i, i, i, one});
    counit.set(i, one);
  }
  FrobeniusBundle b = make_bundle(make_algebra(field, labels, std::move(mul)),
                                  make_coalgebra(field, labels, std::move(comul), counit));
  LocalUnitFamily units;
  units.elements = subset_sums(field, n, n, [&](int i) { return Vec::unit(field, n, i); });
  return GeneratedBundle{std::move(b), std::move(units)};
}

GeneratedBundle gen_trunc_poly(FieldSpec field) {
  std::vector<std::string> labels{"1", "x"};
  Scalar one = Scalar::one(field);
  std::vector<MulTriple> mul{{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}};
  std::vector<ComulTriple> comul{{0, 0, 1, one}, {0, 1, 0, one}, {1, 1, 1, one}};
  Vec counit(field, 2);
  counit.set(1, one);
  FrobeniusBundle b = make_bundle(make_algebra(field, labels, std::move(mul)),
                                  make_coalgebra(field, labels, std::move(comul), counit));
  LocalUnitFamily units;
  units.elements.push_back(Vec::unit(field, 2, 0));
  return GeneratedBundle{std::move(b), std::move(units)};
}

CoalgebraData gen_comatrix(int n, FieldSpec field) {
  if (n < 1) throw UsageError("comatrix size must be >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      labels.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
  auto idx = [n](int i, int j) { return i * n + j; };
  Scalar one = Scalar::one(field);
  std::vector<ComulTriple> comul;
  Vec counit(field, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) comul.push_back(ComulTriple{idx(i, j), idx(i, k), idx(k, j), one});
      if (i == j) counit.set(idx(i, j), one);
    }
  return make_coalgebra(field, std::move(labels), std::move(comul), std::move(counit));
}

AlgebraData nil_algebra(FieldSpec field) {
  return make_algebra(field, {"x"}, {});
}

LocallyFiniteBundle grouplike_integers(FieldSpec field) {
  LocallyFiniteBundle lf;
  lf.label_kind = LocallyFiniteBundle::LabelKind::Integers;
  lf.field = field;
  lf.family = "grouplike-integers";
  auto label = [](int g) { return "p" + std::to_string(g); };
  lf.window_labels = [label](int w) {
    std::vector<std::string> out;
    for (int g = -w; g <= w; ++g) out.push_back(label(g));
    return out;
  };
  Scalar one = Scalar::one(field);
  lf.mul_rule = [one](const std::string& a, const std::string& b) {
    LocallyFiniteBundle::Expansion out;
    if (a == b) out.emplace_back(a, one);
    return out;
  };
  lf.comul_rule = [one](const std::string& a) {
    LocallyFiniteBundle::PairExpansion out;
    out.emplace_back(std::make_pair(a, a), one);
    return out;
  };
  lf.counit_rule = [one](const std::string&) { return one; };
  lf.window_units = [one](const std::vector<std::string>& labels) {
    LocallyFiniteBundle::Expansion full;
    for (const auto& l : labels) full.emplace_back(l, one);
    return std::vector<LocallyFiniteBundle::Expansion>{full};
  };
  return lf;
}

OpResult<WindowBundle> materialize_window(const LocallyFiniteBundle& lf, int w) {
  if (w < 0) throw UsageError("window size must be non-negative");
  std::vector<std::string> labels = lf.window_labels(w);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  const int n = static_cast<int>(labels.size());

  std::vector<MulTriple> mul;
  std::vector<ComulTriple> comul;
  Vec counit(lf.field, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (const auto& [l, c] : lf.mul_rule(labels[i], labels[j])) {
        auto it = index.find(l);
        if (it == index.end())
          return {std::nullopt, refused_report("window", "window not closed; enlarge")};
        mul.push_back(MulTriple{i, j, it->second, c});
      }
    for (const auto& [pair, c] : lf.comul_rule(labels[i])) {
      auto jt = index.find(pair.first);
      auto kt = index.find(pair.second);
      if (jt == index.end() || kt == index.end())
        return {std::nullopt, refused_report("window", "window not closed; enlarge")};
      comul.push_back(ComulTriple{i, jt->second, kt->second, c});
    }
    counit.set(i, lf.counit_rule(labels[i]));
  }

  WindowBundle out;
  out.w = w;
  out.bundle = make_bundle(make_algebra(lf.field, labels, std::move(mul)),
                           make_coalgebra(lf.field, labels, std::move(comul), std::move(counit)));
  if (lf.window_units) {
    for (const auto& expansion : lf.window_units(labels)) {
      Vec v(lf.field, n);
      for (const auto& [l, c] : expansion) {
        auto it = index.find(l);
        if (it == index.end())
          return {std::nullopt, refused_report("window", "window not closed; enlarge")};
        v.add_at(it->second, c);
      }
      out.units.elements.push_back(std::move(v));
    }
  }
  return {std::move(out), pass_report("window")};
}

std::vector<CheckReport> window_check(const LocallyFiniteBundle& lf, int w,
                                      const std::vector<std::string>& suite,
                                      const SuiteOptions& opts) {
  OpResult<WindowBundle> mat = materialize_window(lf, w);
  if (!mat.ok()) {
    CheckReport r = mat.report;
    r.window = w;
    return {std::move(r)};
  }
  BundleParts parts;
  parts.algebra = mat.value->bundle.algebra;
  parts.coalgebra = mat.value->bundle.coalgebra;
  if (!mat.value->units.elements.empty()) parts.units = mat.value->units;
  std::vector<CheckReport> reports = run_suite(parts, suite, opts);
  for (auto& r : reports) {
    r.window = w;
    if (r.verdict == Verdict::Pass) {
      r.verdict = Verdict::WindowVerified;
      r.note = r.note.empty() ? ("w = " + std::to_string(w))
                              : r.note + "; w = " + std::to_string(w);
    }
  }
  return reports;
}

CheckReport check_graded_algebra(const GradedAlgebraData& a) {
  Stopwatch sw;
  if (static_cast<int>(a.grading.size()) != a.algebra.dim)
    throw UsageError("grading assignment has wrong length");
  for (int d : a.grading)
    if (d < 0 || d >= a.group.order) throw UsageError("grading degree out of range");

  for (const auto& t : a.algebra.mul) {
    int want = a.group.at(a.grading[static_cast<std::size_t>(t.i)],
                          a.grading[static_cast<std::size_t>(t.j)]);
    if (a.grading[static_cast<std::size_t>(t.k)] != want) {
      Witness w;
      w.indices = {t.i, t.j, t.k};
      w.detail = "structure constant leaves the expected degree component";
      return timed(fail_report("graded-algebra", std::move(w)), sw);
    }
  }
  std::optional<Vec> unit = find_global_unit(a.algebra);
  if (!unit) {
    Witness w;
    w.detail = "graded algebra has no unit";
    return timed(fail_report("graded-algebra", std::move(w)), sw);
  }
  for (int i = 0; i < a.algebra.dim; ++i)
    if (!(*unit)[i].is_zero() && a.grading[static_cast<std::size_t>(i)] != a.group.identity) {
      Witness w;
      w.indices = {i};
      w.actual = *unit;
      w.detail = "unit has support outside the neutral degree";
      return timed(fail_report("graded-algebra", std::move(w)), sw);
    }
  return timed(pass_report("graded-algebra"), sw);
}

GradedAlgebraData group_algebra_self_graded(const GroupTable& g, FieldSpec field) {
  std::vector<std::string> labels;
  for (int i = 0; i < g.order; ++i) labels.push_back("u" + std::to_string(i));
  Scalar one = Scalar::one(field);
  std::vector<MulTriple> mul;
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) mul.push_back(MulTriple{i, j, g.at(i, j), one});
  GradedAlgebraData out;
  out.algebra = make_algebra(field, std::move(labels), std::move(mul));
  out.group = g;
  out.grading.resize(static_cast<std::size_t>(g.order));
  for (int i = 0; i < g.order; ++i) out.grading[static_cast<std::size_t>(i)] = i;
  return out;
}

OpResult<SmashAlgebra> gen_graded_smash(const GradedAlgebraData& a) {
  CheckReport pre = check_graded_algebra(a);
  if (!pre.passed()) {
    CheckReport r = refused_report("smash", "grading violation in the input algebra");
    r.witness = pre.witness;
    return {std::nullopt, std::move(r)};
  }
  const int da = a.algebra.dim;
  const int n = a.group.order;
  const FieldSpec f = a.algebra.field;

  SmashAlgebra s;
  s.a_dim = da;
  s.group_order = n;
  s.a_unit = *find_global_unit(a.algebra);

  std::vector<std::string> labels;
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < n; ++g) labels.push_back(a.algebra.label(i) + "#p" + std::to_string(g));

  // (a_i⊗p_g)(a_j⊗p_h) = [h = g·deg(a_j)] (a_i a_j)⊗p_h
  std::vector<MulTriple> mul;
  for (const auto& t : a.algebra.mul) {
    int dj = a.grading[static_cast<std::size_t>(t.j)];
    for (int g = 0; g < n; ++g) {
      int h = a.group.at(g, dj);
      mul.push_back(MulTriple{s.index(t.i, g), s.index(t.j, h), s.index(t.k, h), t.c});
    }
  }
  s.algebra = make_algebra(f, std::move(labels), std::move(mul));

  const int dim = da * n;
  auto unit_over = [&](int g) {
    Vec v(f, dim);
    for (int i = 0; i < da; ++i)
      if (!s.a_unit[i].is_zero()) v.set(s.index(i, g), s.a_unit[i]);
    return v;
  };
  s.units.elements = subset_sums(f, dim, n, unit_over);
  return {std::move(s), pass_report("smash")};
}

CheckReport check_graded_module(const GradedAlgebraData& a, const GradedModuleData& m) {
  Stopwatch sw;
  const int da = a.algebra.dim;
  if (static_cast<int>(m.grading.size()) != m.dim)
    throw UsageError("module grading has wrong length");
  if (m.action.codomain_dim() != m.dim || m.action.domain_dim() != m.dim * da)
    throw UsageError("graded module action has wrong shape");

  // associativity over A
  {
    LinMap ida = LinMap::identity(a.algebra.field, da);
    LinMap idm = LinMap::identity(a.algebra.field, m.dim);
    LinMap lhs = m.action.compose(tensor(m.action, ida));
    LinMap rhs = m.action.compose(tensor(idm, a.algebra.multiplication()));
    if (lhs != rhs) {
      Witness w;
      w.detail = "module law over the graded algebra fails";
      return timed(fail_report("graded-module", std::move(w)), sw);
    }
  }
  // unital
  Vec unit = *find_global_unit(a.algebra);
  for (int b = 0; b < m.dim; ++b) {
    Vec eb = Vec::unit(a.algebra.field, m.dim, b);
    if (m.action.apply(tensor(eb, unit)) != eb) {
      Witness w;
      w.indices = {b};
      w.detail = "module is not unital";
      return timed(fail_report("graded-module", std::move(w)), sw);
    }
  }
  // grading compatibility on basis pairs
  for (int b = 0; b < m.dim; ++b)
    for (int j = 0; j < da; ++j) {
      Vec out = m.action.column(b * da + j);
      int want = a.group.at(m.grading[static_cast<std::size_t>(b)],
                            a.grading[static_cast<std::size_t>(j)]);
      for (int t = 0; t < m.dim; ++t)
        if (!out[t].is_zero() && m.grading[static_cast<std::size_t>(t)] != want) {
          Witness w;
          w.indices = {b, j, t};
          w.detail = "action leaves the expected degree component";
          return timed(fail_report("graded-module", std::move(w)), sw);
        }
    }
  return timed(pass_report("graded-module"), sw);
}

ModuleData to_smash_module(const GradedAlgebraData& a, const SmashAlgebra& s,
                           const GradedModuleData& m) {
  const int da = a.algebra.dim;
  const int dim_s = s.algebra.dim;
  LinMap action(a.algebra.field, m.dim, m.dim * dim_s);
  for (const auto& [rc, v] : m.action.entries()) {
    int b = rc.second / da, j = rc.second % da;
    int h = a.group.at(m.grading[static_cast<std::size_t>(b)],
                       a.grading[static_cast<std::size_t>(j)]);
    action.set(rc.first, b * dim_s + s.index(j, h), v);
  }
  return ModuleData(m.dim, std::move(action));
}

OpResult<GradedModuleData> from_smash_module(const GradedAlgebraData& a, const SmashAlgebra& s,
                                             const ModuleData& n) {
  const int da = a.algebra.dim;
  const int dim_s = s.algebra.dim;
  const FieldSpec f = a.algebra.field;
  if (n.action.codomain_dim() != n.dim || n.action.domain_dim() != n.dim * dim_s)
    throw UsageError("smash module action has wrong shape");

  // projectors P_g = action by (1⊗p_g)
  std::vector<LinMap> projector;
  for (int g = 0; g < s.group_order; ++g) {
    LinMap p(f, n.dim, n.dim);
    for (int b = 0; b < n.dim; ++b) {
      Vec col(f, n.dim);
      for (int i = 0; i < da; ++i) {
        if (s.a_unit[i].is_zero()) continue;
        Vec part = n.action.column(b * dim_s + s.index(i, g));
        for (int t = 0; t < n.dim; ++t)
          if (!part[t].is_zero()) col.add_at(t, s.a_unit[i] * part[t]);
      }
      for (int t = 0; t < n.dim; ++t)
        if (!col[t].is_zero()) p.set(t, b, col[t]);
    }
    projector.push_back(std::move(p));
  }

  std::vector<int> grading(static_cast<std::size_t>(n.dim), -1);
  for (int b = 0; b < n.dim; ++b) {
    Vec eb = Vec::unit(f, n.dim, b);
    for (int g = 0; g < s.group_order; ++g) {
      Vec pg = projector[static_cast<std::size_t>(g)].column(b);
      if (pg == eb) {
        if (grading[static_cast<std::size_t>(b)] >= 0)
          return {std::nullopt,
                  refused_report("from-smash", "basis vector fixed by two grading projectors")};
        grading[static_cast<std::size_t>(b)] = g;
      } else if (!pg.is_zero()) {
        return {std::nullopt,
                refused_report("from-smash",
                               "module basis is not homogeneous for the grading projectors")};
      }
    }
    if (grading[static_cast<std::size_t>(b)] < 0)
      return {std::nullopt,
              refused_report("from-smash",
                             "basis vector annihilated by every grading projector "
                             "(module is not firm over the smash algebra)")};
  }

  LinMap action(f, n.dim, n.dim * da);
  for (int b = 0; b < n.dim; ++b)
    for (int j = 0; j < da; ++j) {
      int h = a.group.at(grading[static_cast<std::size_t>(b)],
                         a.grading[static_cast<std::size_t>(j)]);
      Vec col = n.action.column(b * dim_s + s.index(j, h));
      for (int t = 0; t < n.dim; ++t)
        if (!col[t].is_zero()) action.set(t, b * da + j, col[t]);
    }
  GradedModuleData out(n.dim, std::move(grading), std::move(action));
  CheckReport laws = check_graded_module(a, out);
  if (!laws.passed()) {
    CheckReport r = refused_report("from-smash", "recovered action is not a graded module");
    r.witness = laws.witness;
    return {std::nullopt, std::move(r)};
  }
  return {std::move(out), pass_report("from-smash")};
}

GradedModuleData shifted_regular_graded_module(const GradedAlgebraData& a, int shift) {
  if (shift < 0 || shift >= a.group.order) throw UsageError("shift out of range");
  std::vector<int> grading(static_cast<std::size_t>(a.algebra.dim));
  for (int i = 0; i < a.algebra.dim; ++i)
    grading[static_cast<std::size_t>(i)] = a.group.at(shift, a.grading[static_cast<std::size_t>(i)]);
  return GradedModuleData(a.algebra.dim, std::move(grading), a.algebra.multiplication());
}

GradedModuleData direct_sum_graded(const GradedAlgebraData& a, const GradedModuleData& x,
                                   const GradedModuleData& y) {
  const int da = a.algebra.dim;
  const int dim = x.dim + y.dim;
  std::vector<int> grading = x.grading;
  grading.insert(grading.end(), y.grading.begin(), y.grading.end());
  LinMap action(a.algebra.field, dim, dim * da);
  for (const auto& [rc, v] : x.action.entries()) action.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : y.action.entries()) {
    int b = rc.second / da, j = rc.second % da;
    action.set(x.dim + rc.first, (x.dim + b) * da + j, v);
  }
  return GradedModuleData(dim, std::move(grading), std::move(action));
}

GradedModuleData random_graded_module(const GradedAlgebraData& a, Rng& rng, int max_dim) {
  const int da = a.algebra.dim;
  if (da > max_dim) throw UsageError("graded algebra too large for the requested module bound");
  GradedModuleData acc = shifted_regular_graded_module(a, static_cast<int>(rng() % a.group.order));
  while (acc.dim + da <= max_dim && rng() % 2 == 0)
    acc = direct_sum_graded(
        a, acc, shifted_regular_graded_module(a, static_cast<int>(rng() % a.group.order)));

  // degree-preserving twist: block-diagonal over the degree classes
  const FieldSpec f = a.algebra.field;
  LinMap t(f, acc.dim, acc.dim);
  for (int g = 0; g < a.group.order; ++g) {
    std::vector<int> members;
    for (int b = 0; b < acc.dim; ++b)
      if (acc.grading[static_cast<std::size_t>(b)] == g) members.push_back(b);
    if (members.empty()) continue;
    LinMap block = random_invertible(f, static_cast<int>(members.size()), rng);
    for (const auto& [rc, v] : block.entries())
      t.set(members[static_cast<std::size_t>(rc.first)],
            members[static_cast<std::size_t>(rc.second)], v);
  }
  auto tinv = inverse(t);
  LinMap ida = LinMap::identity(f, da);
  LinMap action = t.compose(acc.action).compose(tensor(*tinv, ida));
  return GradedModuleData(acc.dim, acc.grading, std::move(action));
}

}  // namespace firmfrob
