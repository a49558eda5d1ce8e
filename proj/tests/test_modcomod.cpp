#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fftest;

namespace {

// one-dimensional comodule concentrated at the grouplike p_g
ComoduleData graded_line(const FrobeniusBundle& b, int g) { return one_dim_comodule(b, g); }

}  // namespace

TEST_CASE("module law: regular and zero actions pass, a perturbed action fails") {
  GeneratedBundle g = g2q();
  CHECK(check_module(g.bundle, regular_module(g.bundle)).verdict == Verdict::Pass);

  ModuleData zero(3, LinMap(Q(), 3, 6));
  CHECK(check_module(g.bundle, zero).verdict == Verdict::Pass);

  LinMap perturbed = g.bundle.algebra.multiplication();
  perturbed.add_at(1, 0, qs(1));  // p0·p0 gains a p1 component in the action only
  CheckReport r = check_module(g.bundle, ModuleData(2, perturbed));
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness->indices.size() == 3);
}

TEST_CASE("module firmness on the grouplike bundle") {
  GeneratedBundle g = g2q();
  ModuleFirmness reg = check_firm_module(g.bundle, regular_module(g.bundle));
  CHECK(reg.report.verdict == Verdict::Pass);
  CHECK(reg.quotient.quotient_dim == 2);

  ModuleData zero(1, LinMap(Q(), 1, 2));
  CheckReport z = check_firm_module(g.bundle, zero).report;
  REQUIRE(z.verdict == Verdict::Fail);
  CHECK(z.witness->detail.find("not surjective") != std::string::npos);

  // v·p0 = v, v·p1 = 0
  ModuleData line = one_dim_module(g.bundle, 0);
  CHECK(check_firm_module(g.bundle, line).report.verdict == Verdict::Pass);
}

TEST_CASE("comodule law checks") {
  GeneratedBundle g = g2q();
  CHECK(check_comodule(g.bundle, graded_line(g.bundle, 0)).verdict == Verdict::Pass);
  CHECK(check_comodule(g.bundle, graded_line(g.bundle, 1)).verdict == Verdict::Pass);
  CHECK(check_comodule(g.bundle, regular_comodule(g.bundle)).verdict == Verdict::Pass);

  // the zero coaction is coassociative but violates exactly the counit law
  CheckReport r = check_comodule(g.bundle, ComoduleData(1, LinMap(Q(), 2, 1)));
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness->detail.find("counit") != std::string::npos);

  // a rescaled coaction already fails coassociativity
  LinMap rho(Q(), 2, 1);
  rho.set(0, 0, qs(2));
  CheckReport r2 = check_comodule(g.bundle, ComoduleData(1, rho));
  REQUIRE(r2.verdict == Verdict::Fail);
  CHECK(r2.witness->detail.find("coassociativity") != std::string::npos);
}

TEST_CASE("induced action of the graded line is the delta action") {
  GeneratedBundle g = g2q();
  for (int gl = 0; gl < 2; ++gl) {
    OpResult<ModuleData> m = induced_action(g.bundle, graded_line(g.bundle, gl));
    REQUIRE(m.ok());
    // v·p_h = δ_{g,h} v
    LinMap want(Q(), 1, 2);
    want.set(0, gl, qs(1));
    CHECK(m.value->action == want);
  }
}

TEST_CASE("induced action of the regular comodule is the multiplication") {
  for (const GeneratedBundle& g : {g2q(), dual2()}) {
    OpResult<ModuleData> m = induced_action(g.bundle, regular_comodule(g.bundle));
    REQUIRE(m.ok());
    CHECK(m.value->action == g.bundle.algebra.multiplication());
  }
}

TEST_CASE("induced coaction of the regular module is the comultiplication") {
  for (const GeneratedBundle& g : {g2q(), dual2()}) {
    OpResult<ComoduleData> n = induced_coaction(g.bundle, regular_module(g.bundle));
    REQUIRE(n.ok());
    CHECK(n.value->coaction == g.bundle.coalgebra.comultiplication());
  }
}

TEST_CASE("induced coaction of the one-dimensional firm module") {
  GeneratedBundle g = g2q();
  OpResult<ComoduleData> n = induced_coaction(g.bundle, one_dim_module(g.bundle, 0));
  REQUIRE(n.ok());
  LinMap want(Q(), 2, 1);
  want.set(0, 0, qs(1));  // ρ(v) = v⊗p0
  CHECK(n.value->coaction == want);
}

TEST_CASE("the induced coaction does not depend on the chosen section") {
  // recompute ρ with a second exact section of the regular action and
  // compare against the library's choice
  GeneratedBundle g = g2q();
  FrobeniusBundle b = g.bundle;
  ModuleData reg = regular_module(b);
  ModuleFirmness firm = check_firm_module(b, reg);
  REQUIRE(firm.report.verdict == Verdict::Pass);
  LinMap sigma1 = firm.quotient.section.compose(*inverse(firm.induced));

  // σ2 = σ1 + (correction in ker α): α(p0⊗p1) = 0, add v ↦ v_0·(p0⊗p1)
  LinMap correction(Q(), 4, 2);
  correction.set(0 * 2 + 1, 0, qs(1));
  LinMap sigma2 = sigma1 + correction;
  REQUIRE(reg.action.compose(sigma1) == LinMap::identity(Q(), 2));
  REQUIRE(reg.action.compose(sigma2) == LinMap::identity(Q(), 2));
  REQUIRE(sigma1 != sigma2);

  LinMap step = tensor(reg.action, LinMap::identity(Q(), 2))
                    .compose(tensor(LinMap::identity(Q(), 2), b.coalgebra.comultiplication()));
  CHECK(step.compose(sigma1) == step.compose(sigma2));

  OpResult<ComoduleData> n = induced_coaction(b, reg);
  REQUIRE(n.ok());
  CHECK(n.value->coaction == step.compose(sigma2));
}

TEST_CASE("round trips on the default samples are bit-exact") {
  SampleOptions opts;
  opts.random_count = 5;
  for (const FrobeniusBundle& b : {g2q().bundle, dual2().bundle, mc2_built()}) {
    CheckReport r = verify_roundtrips(b, default_samples(b, opts));
    CHECK(r.verdict == Verdict::Pass);
  }
}

TEST_CASE("round trips on the cyclic modules of the truncated polynomials") {
  GeneratedBundle d = dual2();
  SampleSet s;
  s.modules.emplace_back("regular", regular_module(d.bundle));
  s.modules.emplace_back("char", one_dim_module(d.bundle, 0));  // x ↦ 0 character
  CHECK(verify_roundtrips(d.bundle, s).verdict == Verdict::Pass);
}

TEST_CASE("induced-compat identities hold on comodules of valid bundles") {
  GeneratedBundle g = g2q();
  CHECK(induced_compat_check(g.bundle, regular_comodule(g.bundle)).verdict == Verdict::Pass);
  CHECK(induced_compat_check(g.bundle, graded_line(g.bundle, 1)).verdict == Verdict::Pass);
  CHECK(induced_compat_check(dual2().bundle, regular_comodule(dual2().bundle)).verdict ==
        Verdict::Pass);
}

TEST_CASE("induced-compat fails with a witness when the Frobenius condition is broken") {
  FrobeniusBundle bad = mixed_invalid();
  // the coalgebra side alone is fine, so the regular comodule is valid
  REQUIRE(check_comodule(bad, regular_comodule(bad)).verdict == Verdict::Pass);
  CheckReport r = induced_compat_check(bad, regular_comodule(bad));
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness.has_value());
}

TEST_CASE("morphism transport: equivariant and non-equivariant maps agree on both sides") {
  GeneratedBundle g = g2q();
  ModuleData reg = regular_module(g.bundle);

  CheckReport id_rep =
      morphism_transport_check(g.bundle, LinMap::identity(Q(), 2), reg, reg);
  CHECK(id_rep.verdict == Verdict::Pass);
  CHECK(id_rep.note == "equivariant on both sides");

  // action by p0: r ↦ p0·r is a right-module morphism of the regular module
  LinMap by_p0(Q(), 2, 2);
  by_p0.set(0, 0, qs(1));
  CheckReport p0_rep = morphism_transport_check(g.bundle, by_p0, reg, reg);
  CHECK(p0_rep.verdict == Verdict::Pass);
  CHECK(p0_rep.note == "equivariant on both sides");

  // a random non-equivariant map must fail on both sides together
  LinMap skew(Q(), 2, 2);
  skew.set(0, 1, qs(1));
  skew.set(1, 0, qs(3));
  skew.set(0, 0, qs(1));
  CheckReport skew_rep = morphism_transport_check(g.bundle, skew, reg, reg);
  CHECK(skew_rep.verdict == Verdict::Pass);
  CHECK(skew_rep.note == "non-equivariant on both sides");

  // comodule-side variant
  ComoduleData regc = regular_comodule(g.bundle);
  CHECK(morphism_transport_check(g.bundle, by_p0, regc, regc).verdict == Verdict::Pass);
}

TEST_CASE("firm algebra implies firm regular module") {
  for (const FrobeniusBundle& b : {g2q().bundle, dual2().bundle, mc2_built()}) {
    REQUIRE(check_firm_algebra(b.algebra).report.verdict == Verdict::Pass);
    CHECK(check_firm_module(b, regular_module(b)).report.verdict == Verdict::Pass);
  }
}

TEST_CASE("triangle echo: counit leg of the regular induced coaction is the identity") {
  GeneratedBundle g = g2q();
  OpResult<ComoduleData> n = induced_coaction(g.bundle, regular_module(g.bundle));
  REQUIRE(n.ok());
  LinMap counit_leg = tensor(LinMap::identity(Q(), 2), g.bundle.coalgebra.counit_map())
                          .compose(n.value->coaction);
  CHECK(counit_leg == LinMap::identity(Q(), 2));
}

TEST_CASE("induced actions are surjective when local units cover the coaction support") {
  GeneratedBundle g = g2q();
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    ComoduleData n = random_comodule(g.bundle, rng, 6);
    if (n.dim == 0) continue;
    OpResult<ModuleData> m = induced_action(g.bundle, n);
    REQUIRE(m.ok());
    CHECK(rank(m.value->action) == m.value->dim);
  }
}

TEST_CASE("zero-dimensional samples are handled") {
  GeneratedBundle g = g2q();
  ModuleData zero(0, LinMap(Q(), 0, 0));
  CHECK(check_module(g.bundle, zero).verdict == Verdict::Pass);
  CHECK(check_firm_module(g.bundle, zero).report.verdict == Verdict::Pass);
  OpResult<ComoduleData> n = induced_coaction(g.bundle, zero);
  CHECK(n.ok());
}
