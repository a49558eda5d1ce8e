#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fftest;

TEST_CASE("Frobenius square holds on the fixtures") {
  CHECK(check_frobenius(g2q().bundle).verdict == Verdict::Pass);
  CHECK(check_frobenius(dual2().bundle).verdict == Verdict::Pass);
  CHECK(check_frobenius(nil_extended()).verdict == Verdict::Pass);
}

TEST_CASE("redirecting Δ(p0) to p0⊗p1 breaks the square at the first pair") {
  FieldSpec f = Q();
  Scalar one = qs(1);
  CoalgebraData broken = make_coalgebra(f, {"p0", "p1"},
                                        {ComulTriple{0, 0, 1, one}, ComulTriple{1, 1, 1, one}},
                                        vec(f, {1, 1}));
  FrobeniusBundle b = make_bundle(g2q().bundle.algebra, broken);
  CheckReport r = check_frobenius(b);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness->indices == std::vector<int>{0, 0});
}

TEST_CASE("the mixed fixture fails the square exactly at (b0, b1)") {
  CheckReport r = check_frobenius(mixed_invalid());
  REQUIRE(r.verdict == Verdict::Fail);
  // hand expansion: Δ(b0·b1) = Δ(b1) = b1⊗b1 while the third composite gives
  // (id⊗μ)(b0⊗b0⊗b1) = b0⊗b1; the pair (0,0) satisfies all three
  CHECK(r.witness->indices == std::vector<int>{0, 1});
}

TEST_CASE("grouplike retraction is found and is the diagonal map") {
  GeneratedBundle g = g2q();
  auto nu = cosep_solve(g.bundle.coalgebra);
  REQUIRE(nu.has_value());
  // uniqueness: the bicomodule conditions force all off-diagonal values to 0
  CHECK(*nu == g.bundle.algebra.multiplication());
  CHECK(verify_retraction(g.bundle.coalgebra, *nu).verdict == Verdict::Pass);
}

TEST_CASE("comatrix coalgebras admit verified retractions, over Q and F2") {
  for (FieldSpec f : {Q(), F(2)}) {
    CoalgebraData c = gen_comatrix(2, f);
    auto nu = cosep_solve(c);
    REQUIRE(nu.has_value());
    CHECK(verify_retraction(c, *nu).verdict == Verdict::Pass);
  }
}

TEST_CASE("the truncated-polynomial coalgebra is not coseparable") {
  CHECK_FALSE(cosep_solve(dual2().bundle.coalgebra).has_value());
}

TEST_CASE("building from the grouplike retraction reproduces the fixture") {
  GeneratedBundle g = g2q();
  auto nu = cosep_solve(g.bundle.coalgebra);
  OpResult<FrobeniusBundle> built = build_from_cosep(g.bundle.coalgebra, *nu);
  REQUIRE(built.ok());
  CHECK(built.value->algebra.multiplication() == g.bundle.algebra.multiplication());
  CHECK(built.value->coalgebra.comultiplication() == g.bundle.coalgebra.comultiplication());
}

TEST_CASE("the zero map is refused as a retraction") {
  GeneratedBundle g = g2q();
  OpResult<FrobeniusBundle> built =
      build_from_cosep(g.bundle.coalgebra, LinMap(Q(), 2, 4));
  CHECK_FALSE(built.ok());
  CHECK(built.report.verdict == Verdict::Refused);
}

TEST_CASE("Casimir pair of the grouplike bundle: frozen columns") {
  OpResult<MultiplierPair> m = casimir_from_delta(g2q().bundle);
  REQUIRE(m.ok());
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h) {
      Vec want(Q(), 4);
      if (g == h) want.set(g * 2 + g, qs(1));
      CHECK(m.value->lambda.column(g * 2 + h) == want);
      CHECK(m.value->rho.column(g * 2 + h) == want);
    }
}

TEST_CASE("Casimir pair of the truncated polynomials: frozen 4-column table") {
  // λ(1⊗1) = ρ(1⊗1) = 1⊗x + x⊗1; λ, ρ send 1⊗x and x⊗1 to x⊗x and kill x⊗x
  OpResult<MultiplierPair> m = casimir_from_delta(dual2().bundle);
  REQUIRE(m.ok());
  Vec mixed(Q(), 4);
  mixed.set(1, qs(1));
  mixed.set(2, qs(1));
  Vec xx = Vec::unit(Q(), 4, 3);
  for (const LinMap* map : {&m.value->lambda, &m.value->rho}) {
    CHECK(map->column(0) == mixed);
    CHECK(map->column(1) == xx);
    CHECK(map->column(2) == xx);
    CHECK(map->column(3) == Vec(Q(), 4));
  }
}

TEST_CASE("multiplier law verification is deterministic across parallel modes") {
  OpResult<MultiplierPair> m = casimir_from_delta(dual2().bundle);
  REQUIRE(m.ok());
  CHECK(verify_multiplier_pair(dual2().bundle.algebra, *m.value, false).verdict == Verdict::Pass);
  CHECK(verify_multiplier_pair(dual2().bundle.algebra, *m.value, true).verdict == Verdict::Pass);

  // a corrupted pair fails with the same first witness either way
  MultiplierPair bad = *m.value;
  bad.lambda.add_at(0, 0, qs(1));
  CheckReport serial = verify_multiplier_pair(dual2().bundle.algebra, bad, false);
  CheckReport parallel = verify_multiplier_pair(dual2().bundle.algebra, bad, true);
  REQUIRE(serial.verdict == Verdict::Fail);
  REQUIRE(parallel.verdict == Verdict::Fail);
  CHECK(serial.witness->indices == parallel.witness->indices);
}

TEST_CASE("the zero algebra is refused by the Casimir constructor") {
  FieldSpec f = Q();
  AlgebraData zero = make_algebra(f, {"x"}, {});
  CoalgebraData c =
      make_coalgebra(f, {"x"}, {ComulTriple{0, 0, 0, qs(1)}}, vec(f, {1}));
  OpResult<MultiplierPair> m = casimir_from_delta(make_bundle(zero, c));
  CHECK_FALSE(m.ok());
  CHECK(m.report.verdict == Verdict::Refused);
}

TEST_CASE("multiplier elements recover the comultiplication on both sides") {
  GeneratedBundle g = g2q();
  OpResult<MultiplierPair> m = casimir_from_delta(g.bundle);
  REQUIRE(m.ok());
  for (int r = 0; r < 2; ++r) {
    auto left = multiplier_to_element(g.bundle.algebra, *m.value, r, Side::Left);
    auto right = multiplier_to_element(g.bundle.algebra, *m.value, r, Side::Right);
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    CHECK(*left == *right);
    CHECK(*left == g.bundle.coalgebra.comultiplication().column(r));
  }
}

TEST_CASE("the zero multiplier pair yields the zero element") {
  GeneratedBundle g = g2q();
  MultiplierPair zero{LinMap(Q(), 4, 4), LinMap(Q(), 4, 4)};
  auto e = multiplier_to_element(g.bundle.algebra, zero, 0, Side::Left);
  REQUIRE(e.has_value());
  CHECK(e->is_zero());
}

TEST_CASE("Δ → e → Δ′ and e → Δ′ → e′ are bit-exact on both fixtures") {
  for (const FrobeniusBundle& b : {g2q().bundle, dual2().bundle}) {
    std::vector<CheckReport> reports = casimir_suite(b, false);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].verdict == Verdict::Pass);
    CHECK(reports[1].verdict == Verdict::Pass);
  }
}

TEST_CASE("a zero counit fails the reconstruction with a witness") {
  GeneratedBundle g = g2q();
  OpResult<MultiplierPair> m = casimir_from_delta(g.bundle);
  REQUIRE(m.ok());
  DeltaReconstruction rec = delta_from_casimir(g.bundle.algebra, *m.value, Vec(Q(), 2));
  CHECK_FALSE(rec.coalgebra.has_value());
  REQUIRE(rec.report.witness.has_value());
  CHECK(rec.report.witness->detail.find("counit") != std::string::npos);
}

TEST_CASE("section check: Δ is a section for coseparably built bundles") {
  GeneratedBundle g = g2q();
  CHECK(section_check(g.bundle, g.bundle.coalgebra.comultiplication()).verdict == Verdict::Pass);

  FrobeniusBundle mc2 = mc2_built();
  CHECK(section_check(mc2, mc2.coalgebra.comultiplication()).verdict == Verdict::Pass);

  CheckReport zero = section_check(g.bundle, LinMap(Q(), 4, 2));
  REQUIRE(zero.verdict == Verdict::Fail);
  CHECK(zero.witness->detail.find("id") != std::string::npos);

  // DUAL2's comultiplication is not a section: μ∘Δ(1) = 2x ≠ 1
  GeneratedBundle d = dual2();
  CHECK(section_check(d.bundle, d.bundle.coalgebra.comultiplication()).verdict == Verdict::Fail);
}

TEST_CASE("verdicts are invariant under simultaneous base change") {
  Rng rng(57);
  for (int t = 0; t < 5; ++t) {
    LinMap good_t = random_invertible(Q(), 2, rng);
    FrobeniusBundle twisted = conjugate_bundle(g2q().bundle, good_t);
    CHECK(check_frobenius(twisted).verdict == Verdict::Pass);
    CHECK(check_associativity(twisted.algebra).verdict == Verdict::Pass);
    CHECK(check_coalgebra(twisted.coalgebra).verdict == Verdict::Pass);

    FrobeniusBundle broken = conjugate_bundle(mixed_invalid(), good_t);
    CHECK(check_frobenius(broken).verdict == Verdict::Fail);
  }
}
