#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fftest;

TEST_CASE("vector tensor index convention is row-major") {
  FieldSpec f = Q();
  Vec a = Vec::unit(f, 2, 0), b = Vec::unit(f, 3, 1);
  Vec t = tensor(a, b);
  CHECK(t.dim() == 6);
  CHECK(t == Vec::unit(f, 6, 0 * 3 + 1));
}

TEST_CASE("identity tensor identity is the identity") {
  FieldSpec f = Q();
  CHECK(tensor(LinMap::identity(f, 3), LinMap::identity(f, 4)) == LinMap::identity(f, 12));
}

TEST_CASE("tensor with the zero map is zero") {
  Rng rng(3);
  FieldSpec f = Q();
  LinMap g = random_linmap(f, 3, 2, rng);
  LinMap z(f, 2, 2);
  CHECK(tensor(g, z).is_zero());
  CHECK(tensor(z, g).is_zero());
}

TEST_CASE("grouplike comultiplication tensored with the identity") {
  // (Δ of G2Q) ⊗ id₂ sends p0⊗p1 to p0⊗p0⊗p1
  GeneratedBundle g = g2q();
  FieldSpec f = Q();
  LinMap delta = g.bundle.coalgebra.comultiplication();
  LinMap t = tensor(delta, LinMap::identity(f, 2));
  Vec in = tensor(Vec::unit(f, 2, 0), Vec::unit(f, 2, 1));
  Vec out = t.apply(in);
  CHECK(out == Vec::unit(f, 8, (0 * 2 + 0) * 2 + 1));
}

TEST_CASE("tensor is functorial on seeded random maps") {
  for (FieldSpec f : {Q(), F(5)}) {
    Rng rng(11);
    for (int t = 0; t < 25; ++t) {
      LinMap fp = random_linmap(f, 2, 4, rng);  // f': 4 -> 2
      LinMap fo = random_linmap(f, 3, 2, rng);  // f : 2 -> 3
      LinMap gp = random_linmap(f, 3, 2, rng);  // g': 2 -> 3
      LinMap go = random_linmap(f, 2, 3, rng);  // g : 3 -> 2
      CHECK(tensor(fo.compose(fp), go.compose(gp)) ==
            tensor(fo, go).compose(tensor(fp, gp)));
    }
  }
}

TEST_CASE("apply agrees with column extraction and composition") {
  Rng rng(5);
  FieldSpec f = F(7);
  LinMap a = random_linmap(f, 4, 3, rng);
  LinMap b = random_linmap(f, 3, 5, rng);
  LinMap ab = a.compose(b);
  for (int j = 0; j < 5; ++j) {
    Vec e = Vec::unit(f, 5, j);
    CHECK(ab.apply(e) == a.apply(b.apply(e)));
    CHECK(ab.column(j) == ab.apply(e));
  }
}

TEST_CASE("swap map braids pure tensors") {
  FieldSpec f = Q();
  LinMap s = swap_map(f, 2, 3);
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    Vec a(f, 2), b(f, 3);
    for (int i = 0; i < 2; ++i) a.set(i, random_scalar(f, rng));
    for (int i = 0; i < 3; ++i) b.set(i, random_scalar(f, rng));
    CHECK(s.apply(tensor(a, b)) == tensor(b, a));
  }
}

TEST_CASE("map arithmetic keeps the canonical sparse form") {
  Rng rng(13);
  FieldSpec f = Q();
  LinMap a = random_linmap(f, 4, 4, rng);
  CHECK((a - a).is_zero());
  CHECK((a - a).nnz() == 0);
  CHECK(a.transpose().transpose() == a);
  LinMap sum = a + a;
  for (const auto& [rc, v] : sum.entries()) CHECK(v == a.entry(rc.first, rc.second) + a.entry(rc.first, rc.second));
}

TEST_CASE("shape and field mismatches throw usage errors") {
  FieldSpec f = Q();
  LinMap a(f, 2, 3), b(f, 2, 3);
  CHECK_THROWS_AS(a.compose(b), UsageError);
  CHECK_THROWS_AS(a.apply(Vec(f, 2)), UsageError);
  CHECK_THROWS_AS((void)tensor(a, LinMap(F(5), 1, 1)), UsageError);
  CHECK_THROWS_AS(a.set(0, 0, Scalar::one(F(5))), UsageError);
}
