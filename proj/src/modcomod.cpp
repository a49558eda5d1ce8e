#include "firmfrob/modcomod.hpp"

namespace firmfrob {

ModuleData regular_module(const FrobeniusBundle& b) {
  return ModuleData(b.algebra.dim, b.algebra.multiplication());
}

ComoduleData regular_comodule(const FrobeniusBundle& b) {
  return ComoduleData(b.algebra.dim, b.coalgebra.comultiplication());
}

namespace {

void check_module_shape(const AlgebraData& r, const ModuleData& m) {
  if (m.action.codomain_dim() != m.dim || m.action.domain_dim() != m.dim * r.dim ||
      !(m.action.field() == r.field))
    throw UsageError("module action has wrong shape");
}

void check_comodule_shape(const FrobeniusBundle& b, const ComoduleData& n) {
  if (n.coaction.domain_dim() != n.dim ||
      n.coaction.codomain_dim() != n.dim * b.algebra.dim ||
      !(n.coaction.field() == b.algebra.field))
    throw UsageError("comodule coaction has wrong shape");
}

// ᾱ = (id_N⊗ε)∘(id_N⊗μ)∘(ρ⊗id_R) : N⊗R -> N
LinMap alpha_bar(const FrobeniusBundle& b, const ComoduleData& n) {
  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  LinMap idn = LinMap::identity(f, n.dim);
  LinMap step1 = tensor(n.coaction, LinMap::identity(f, d));           // N⊗R -> N⊗R⊗R
  LinMap step2 = tensor(idn, b.algebra.multiplication());              // -> N⊗R
  LinMap step3 = tensor(idn, b.coalgebra.counit_map());                // -> N (·1)
  return step3.compose(step2).compose(step1);
}

}  // namespace

CheckReport check_module(const AlgebraData& r, const ModuleData& m) {
  Stopwatch sw;
  check_module_shape(r, m);
  const int d = r.dim;
  const FieldSpec f = r.field;
  LinMap idr = LinMap::identity(f, d);
  LinMap idm = LinMap::identity(f, m.dim);
  LinMap lhs = m.action.compose(tensor(m.action, idr));           // α∘(α⊗id)
  LinMap rhs = m.action.compose(tensor(idm, r.multiplication()));  // α∘(id⊗μ)
  if (lhs == rhs) return timed(pass_report("module"), sw);
  for (int a = 0; a < m.dim; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int col = (a * d + i) * d + j;
        Vec l = lhs.column(col), r = rhs.column(col);
        if (l != r) {
          Witness w;
          w.indices = {a, i, j};
          w.expected = r;
          w.actual = l;
          w.detail = "module associativity fails at this (module, algebra, algebra) triple";
          return timed(fail_report("module", std::move(w)), sw);
        }
      }
  throw InternalError("module: maps differ but no witness column found");
}

CheckReport check_module(const FrobeniusBundle& b, const ModuleData& m) {
  return check_module(b.algebra, m);
}

ModuleFirmness check_firm_module(const AlgebraData& r, const ModuleData& m) {
  Stopwatch sw;
  check_module_shape(r, m);
  const int d = r.dim;
  const FieldSpec f = r.field;
  const int ambient = m.dim * d;
  LinMap mu = r.multiplication();

  std::vector<Vec> relations;
  relations.reserve(static_cast<std::size_t>(m.dim) * d * d);
  for (int a = 0; a < m.dim; ++a)
    for (int i = 0; i < d; ++i) {
      Vec ai = m.action.column(a * d + i);  // a · b_i in A
      for (int j = 0; j < d; ++j) {
        Vec rel(f, ambient);
        for (int t = 0; t < m.dim; ++t)
          if (!ai[t].is_zero()) rel.add_at(t * d + j, ai[t]);  // (a·b_i) ⊗ b_j
        Vec ij = mu.column(i * d + j);
        for (int t = 0; t < d; ++t)
          if (!ij[t].is_zero()) rel.add_at(a * d + t, -ij[t]);  // − a ⊗ (b_i b_j)
        if (!rel.is_zero()) relations.push_back(std::move(rel));
      }
    }

  QuotientSpace q = quotient_by_span(f, ambient, relations);
  LinMap induced = m.action.compose(q.section);
  ModuleFirmness out{pass_report("module-firmness"), q, induced};
  if (m.action != induced.compose(q.projection)) {
    Witness w;
    w.detail = "action does not descend to A tensor_R R (module law violated)";
    out.report = fail_report("module-firmness", std::move(w));
    out.report.seconds = sw.seconds();
    return out;
  }
  if (q.quotient_dim != m.dim || !is_bijective(induced)) {
    Witness w;
    if (q.quotient_dim != m.dim || rank(induced) < q.quotient_dim) {
      std::vector<Vec> k = kernel(induced);
      if (q.quotient_dim == m.dim && !k.empty()) {
        w.actual = k.front();
        w.detail = "induced action not injective";
      } else {
        w.detail = "induced action not bijective: A tensor_R R has dimension " +
                   std::to_string(q.quotient_dim) + ", module has " + std::to_string(m.dim);
        if (q.quotient_dim < m.dim) w.detail += "; induced action not surjective";
      }
    }
    out.report = fail_report("module-firmness", std::move(w));
    out.report.seconds = sw.seconds();
    return out;
  }
  out.report.seconds = sw.seconds();
  return out;
}

ModuleFirmness check_firm_module(const FrobeniusBundle& b, const ModuleData& m) {
  return check_firm_module(b.algebra, m);
}

CheckReport check_comodule(const FrobeniusBundle& b, const ComoduleData& n) {
  Stopwatch sw;
  check_comodule_shape(b, n);
  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  LinMap idr = LinMap::identity(f, d);
  LinMap idn = LinMap::identity(f, n.dim);
  LinMap lhs = tensor(n.coaction, idr).compose(n.coaction);                   // (ρ⊗id)∘ρ
  LinMap rhs = tensor(idn, b.coalgebra.comultiplication()).compose(n.coaction);  // (id⊗Δ)∘ρ
  if (lhs != rhs) {
    for (int i = 0; i < n.dim; ++i) {
      Vec l = lhs.column(i), r = rhs.column(i);
      if (l != r) {
        Witness w;
        w.indices = {i};
        w.expected = r;
        w.actual = l;
        w.detail = "coaction coassociativity fails";
        return timed(fail_report("comodule", std::move(w)), sw);
      }
    }
  }
  LinMap counit_leg = tensor(idn, b.coalgebra.counit_map()).compose(n.coaction);
  if (counit_leg != idn) {
    for (int i = 0; i < n.dim; ++i) {
      Vec got = counit_leg.column(i), want = Vec::unit(f, n.dim, i);
      if (got != want) {
        Witness w;
        w.indices = {i};
        w.expected = want;
        w.actual = got;
        w.detail = "coaction counit law fails";
        return timed(fail_report("comodule", std::move(w)), sw);
      }
    }
  }
  return timed(pass_report("comodule"), sw);
}

OpResult<ModuleData> induced_action(const FrobeniusBundle& b, const ComoduleData& n) {
  Stopwatch sw;
  CheckReport pre = check_comodule(b, n);
  if (!pre.passed()) {
    CheckReport r = refused_report("induced-action", "input is not a comodule");
    r.witness = pre.witness;
    return {std::nullopt, timed(std::move(r), sw)};
  }
  ModuleData m(n.dim, alpha_bar(b, n));
  CheckReport assoc = check_module(b, m);
  if (!assoc.passed()) {
    CheckReport r = fail_report("induced-action", *assoc.witness);
    r.witness->detail = "induced action is not associative: " + r.witness->detail;
    return {std::nullopt, timed(std::move(r), sw)};
  }
  return {std::move(m), timed(pass_report("induced-action"), sw)};
}

OpResult<ComoduleData> induced_coaction(const FrobeniusBundle& b, const ModuleData& m) {
  Stopwatch sw;
  CheckReport mod = check_module(b, m);
  if (!mod.passed()) {
    CheckReport r = refused_report("induced-coaction", "input is not a module");
    r.witness = mod.witness;
    return {std::nullopt, timed(std::move(r), sw)};
  }
  ModuleFirmness firm = check_firm_module(b, m);
  if (!firm.report.passed()) {
    CheckReport r = refused_report("induced-coaction", "module is not firm");
    r.witness = firm.report.witness;
    return {std::nullopt, timed(std::move(r), sw)};
  }

  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  // σ := section ∘ (induced action)⁻¹ is an exact linear section of α
  auto inv = inverse(firm.induced);
  if (!inv) throw InternalError("firm module with non-invertible induced action");
  LinMap sigma = firm.quotient.section.compose(*inv);  // A -> A⊗R, α∘σ = id

  LinMap idm = LinMap::identity(f, m.dim);
  LinMap step = tensor(m.action, LinMap::identity(f, d))
                    .compose(tensor(idm, b.coalgebra.comultiplication()));  // (α⊗id)∘(id⊗Δ)
  LinMap rho = step.compose(sigma);

  // defining identity ρ∘α = (α⊗id)∘(id⊗Δ); this certifies independence of σ
  LinMap lhs = rho.compose(m.action);
  if (lhs != step) {
    for (int col = 0; col < m.dim * d; ++col) {
      Vec l = lhs.column(col), r = step.column(col);
      if (l != r) {
        Witness w;
        w.indices = {col / d, col % d};
        w.expected = r;
        w.actual = l;
        w.detail = "not induced-coactionable: the defining identity fails";
        return {std::nullopt, timed(fail_report("induced-coaction", std::move(w)), sw)};
      }
    }
  }
  ComoduleData n(m.dim, std::move(rho));
  CheckReport laws = check_comodule(b, n);
  if (!laws.passed()) {
    CheckReport r = fail_report("induced-coaction", *laws.witness);
    r.witness->detail = "not induced-coactionable: " + r.witness->detail;
    return {std::nullopt, timed(std::move(r), sw)};
  }
  return {std::move(n), timed(pass_report("induced-coaction"), sw)};
}

CheckReport induced_compat_check(const FrobeniusBundle& b, const ComoduleData& n) {
  Stopwatch sw;
  CheckReport pre = check_comodule(b, n);
  if (!pre.passed()) {
    CheckReport r = refused_report("induced-compat", "input is not a comodule");
    r.witness = pre.witness;
    return timed(std::move(r), sw);
  }
  const int d = b.algebra.dim;
  const FieldSpec f = b.algebra.field;
  LinMap idr = LinMap::identity(f, d);
  LinMap idn = LinMap::identity(f, n.dim);
  LinMap bar = alpha_bar(b, n);

  LinMap one_l = tensor(idn, b.algebra.multiplication()).compose(tensor(n.coaction, idr));
  LinMap one_r = n.coaction.compose(bar);
  if (one_l != one_r) {
    for (int col = 0; col < n.dim * d; ++col) {
      Vec l = one_l.column(col), r = one_r.column(col);
      if (l != r) {
        Witness w;
        w.indices = {col / d, col % d};
        w.expected = r;
        w.actual = l;
        w.detail = "identity (id⊗μ)∘(ρ⊗id) = ρ∘ᾱ fails";
        return timed(fail_report("induced-compat", std::move(w)), sw);
      }
    }
  }
  LinMap two_r = tensor(bar, idr).compose(tensor(idn, b.coalgebra.comultiplication()));
  if (one_r != two_r) {
    for (int col = 0; col < n.dim * d; ++col) {
      Vec l = one_r.column(col), r = two_r.column(col);
      if (l != r) {
        Witness w;
        w.indices = {col / d, col % d};
        w.expected = r;
        w.actual = l;
        w.detail = "identity ρ∘ᾱ = (ᾱ⊗id)∘(id⊗Δ) fails";
        return timed(fail_report("induced-compat", std::move(w)), sw);
      }
    }
  }
  return timed(pass_report("induced-compat"), sw);
}

CheckReport verify_roundtrips(const FrobeniusBundle& b, const SampleSet& samples) {
  Stopwatch sw;
  int done = 0;
  for (const auto& [name, n] : samples.comodules) {
    OpResult<ModuleData> m = induced_action(b, n);
    if (!m.ok()) {
      CheckReport r = refused_report("roundtrip", "sample '" + name + "' " +
                                                      m.report.witness->detail);
      r.witness->indices = m.report.witness->indices;
      return timed(std::move(r), sw);
    }
    OpResult<ComoduleData> back = induced_coaction(b, *m.value);
    if (!back.ok()) {
      CheckReport r = refused_report(
          "roundtrip", "sample '" + name + "': induced module rejected on the way back (" +
                           back.report.witness->detail + ")");
      return timed(std::move(r), sw);
    }
    if (back.value->coaction != n.coaction) {
      Witness w;
      w.detail = "comodule sample '" + name + "' does not round-trip bit-exactly";
      return timed(fail_report("roundtrip", std::move(w)), sw);
    }
    ++done;
  }
  for (const auto& [name, m] : samples.modules) {
    OpResult<ComoduleData> n = induced_coaction(b, m);
    if (!n.ok()) {
      CheckReport r = refused_report("roundtrip", "sample '" + name + "' " +
                                                      n.report.witness->detail);
      return timed(std::move(r), sw);
    }
    OpResult<ModuleData> back = induced_action(b, *n.value);
    if (!back.ok()) {
      CheckReport r = refused_report(
          "roundtrip", "sample '" + name + "': induced comodule rejected on the way back (" +
                           back.report.witness->detail + ")");
      return timed(std::move(r), sw);
    }
    if (back.value->action != m.action) {
      Witness w;
      w.detail = "module sample '" + name + "' does not round-trip bit-exactly";
      return timed(fail_report("roundtrip", std::move(w)), sw);
    }
    ++done;
  }
  CheckReport ok = pass_report("roundtrip");
  ok.note = "verified on sample set (" + std::to_string(done) + " samples)";
  return timed(std::move(ok), sw);
}

bool is_module_morphism(const FrobeniusBundle& b, const LinMap& f, const ModuleData& src,
                        const ModuleData& dst) {
  LinMap idr = LinMap::identity(b.algebra.field, b.algebra.dim);
  return f.compose(src.action) == dst.action.compose(tensor(f, idr));
}

bool is_comodule_morphism(const FrobeniusBundle& b, const LinMap& f, const ComoduleData& src,
                          const ComoduleData& dst) {
  LinMap idr = LinMap::identity(b.algebra.field, b.algebra.dim);
  return dst.coaction.compose(f) == tensor(f, idr).compose(src.coaction);
}

CheckReport morphism_transport_check(const FrobeniusBundle& b, const LinMap& f,
                                     const ModuleData& src, const ModuleData& dst) {
  Stopwatch sw;
  OpResult<ComoduleData> ns = induced_coaction(b, src);
  OpResult<ComoduleData> nd = induced_coaction(b, dst);
  if (!ns.ok() || !nd.ok()) {
    CheckReport r = refused_report("morphism-transport", "an endpoint is not a firm module");
    r.witness = (!ns.ok() ? ns.report : nd.report).witness;
    return timed(std::move(r), sw);
  }
  bool as_mod = is_module_morphism(b, f, src, dst);
  bool as_comod = is_comodule_morphism(b, f, *ns.value, *nd.value);
  if (as_mod == as_comod) {
    CheckReport ok = pass_report("morphism-transport");
    ok.note = as_mod ? "equivariant on both sides" : "non-equivariant on both sides";
    return timed(std::move(ok), sw);
  }
  Witness w;
  w.detail = as_mod ? "module morphism fails to be a comodule morphism after transport"
                    : "comodule morphism after transport but not a module morphism";
  return timed(fail_report("morphism-transport", std::move(w)), sw);
}

CheckReport morphism_transport_check(const FrobeniusBundle& b, const LinMap& f,
                                     const ComoduleData& src, const ComoduleData& dst) {
  Stopwatch sw;
  OpResult<ModuleData> ms = induced_action(b, src);
  OpResult<ModuleData> md = induced_action(b, dst);
  if (!ms.ok() || !md.ok()) {
    CheckReport r = refused_report("morphism-transport", "an endpoint is not a comodule");
    r.witness = (!ms.ok() ? ms.report : md.report).witness;
    return timed(std::move(r), sw);
  }
  bool as_comod = is_comodule_morphism(b, f, src, dst);
  bool as_mod = is_module_morphism(b, f, *ms.value, *md.value);
  if (as_mod == as_comod) {
    CheckReport ok = pass_report("morphism-transport");
    ok.note = as_mod ? "equivariant on both sides" : "non-equivariant on both sides";
    return timed(std::move(ok), sw);
  }
  Witness w;
  w.detail = as_comod ? "comodule morphism fails to be a module morphism after transport"
                      : "module morphism after transport but not a comodule morphism";
  return timed(fail_report("morphism-transport", std::move(w)), sw);
}

}  // namespace firmfrob
