#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fftest;

TEST_CASE("solving against the identity returns the right-hand side") {
  FieldSpec f = Q();
  Vec b = vec(f, {3, -1, 7});
  auto x = solve(LinMap::identity(f, 3), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
}

TEST_CASE("zero map with nonzero rhs is inconsistent") {
  FieldSpec f = Q();
  CHECK_FALSE(solve(LinMap(f, 2, 3), vec(f, {1, 0})).has_value());
  CHECK(solve(LinMap(f, 2, 3), Vec(f, 2)).has_value());  // zero rhs is fine
}

TEST_CASE("flattened grouplike multiplication: frozen preimage of p0") {
  // μ♭ of G2Q has rank 2; the deterministic solution of μ♭·x = p0 puts the
  // free coordinates to zero, leaving exactly p0⊗p0
  GeneratedBundle g = g2q();
  LinMap mu = g.bundle.algebra.multiplication();
  CHECK(rank(mu) == 2);
  Vec p0 = Vec::unit(Q(), 2, 0);
  auto x = solve(mu, p0);
  REQUIRE(x.has_value());
  CHECK(*x == vec(Q(), {1, 0, 0, 0}));
  CHECK(mu.apply(*x) == p0);
}

TEST_CASE("kernel of identity and zero maps") {
  FieldSpec f = Q();
  CHECK(kernel(LinMap::identity(f, 4)).empty());
  std::vector<Vec> k = kernel(LinMap(f, 2, 3));
  REQUIRE(k.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(k[static_cast<std::size_t>(i)] == Vec::unit(f, 3, i));
}

TEST_CASE("left annihilator of the nil algebra is spanned by x") {
  AlgebraData nil = nil_algebra(Q());
  LinMap mu = nil.multiplication();
  // s ↦ s·x stacked over basis s: the 1×1 zero map
  LinMap left(Q(), 1, 1);
  for (const auto& [rc, v] : mu.entries()) left.add_at(rc.first, rc.second % 1, v);
  std::vector<Vec> k = kernel(left);
  REQUIRE(k.size() == 1);
  CHECK(k.front() == Vec::unit(Q(), 1, 0));
}

TEST_CASE("seeded systems: substitution is bit-exact, rank-nullity holds") {
  for (FieldSpec f : {Q(), F(5)}) {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
      int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 5);
      LinMap a = random_linmap(f, rows, cols, rng);
      Vec x0(f, cols);
      for (int i = 0; i < cols; ++i) x0.set(i, random_scalar(f, rng));
      Vec b = a.apply(x0);
      auto x = solve(a, b);
      REQUIRE(x.has_value());
      CHECK(a.apply(*x) == b);
      std::vector<Vec> k = kernel(a);
      CHECK(rank(a) + static_cast<int>(k.size()) == cols);
      for (const auto& v : k) CHECK(a.apply(v).is_zero());
    }
  }
}

TEST_CASE("solution is canonical under equation reordering") {
  FieldSpec f = Q();
  Rng rng(23);
  LinMap a = random_linmap(f, 5, 5, rng);
  Vec x0(f, 5);
  for (int i = 0; i < 5; ++i) x0.set(i, random_scalar(f, rng));
  Vec b = a.apply(x0);

  LinearSystem fwd(f, 5), bwd(f, 5);
  for (int r = 0; r < 5; ++r) fwd.add_equation(a.row(r), b[r]);
  for (int r = 4; r >= 0; --r) bwd.add_equation(a.row(r), b[r]);
  auto xf = fwd.solve(), xb = bwd.solve();
  REQUIRE(xf.has_value());
  REQUIRE(xb.has_value());
  CHECK(*xf == *xb);
  CHECK(fwd.kernel().size() == bwd.kernel().size());
  for (std::size_t i = 0; i < fwd.kernel().size(); ++i)
    CHECK(fwd.kernel()[i] == bwd.kernel()[i]);
}

TEST_CASE("determined and inconsistent flags") {
  FieldSpec f = Q();
  LinearSystem sys(f, 2);
  sys.add_equation(vec(f, {1, 1}), qs(2));
  CHECK(sys.consistent());
  CHECK_FALSE(sys.determined());
  sys.add_equation(vec(f, {1, -1}), qs(0));
  CHECK(sys.determined());
  CHECK(*sys.solve() == vec(f, {1, 1}));
  sys.add_equation(vec(f, {2, 0}), qs(5));  // contradicts x = 1
  CHECK_FALSE(sys.consistent());
  CHECK_FALSE(sys.solve().has_value());
}

TEST_CASE("exact inverse of seeded invertible maps") {
  for (FieldSpec f : {Q(), F(3)}) {
    Rng rng(29);
    for (int t = 0; t < 15; ++t) {
      int n = 1 + static_cast<int>(rng() % 5);
      LinMap m = random_invertible(f, n, rng);
      auto inv = inverse(m);
      REQUIRE(inv.has_value());
      CHECK(m.compose(*inv) == LinMap::identity(f, n));
      CHECK(inv->compose(m) == LinMap::identity(f, n));
    }
  }
  CHECK_FALSE(inverse(LinMap(Q(), 2, 2)).has_value());
  CHECK_FALSE(inverse(LinMap(Q(), 2, 3)).has_value());
}
