#include "firmfrob/coalgebra.hpp"

#include <set>

namespace firmfrob {

LinMap CoalgebraData::comultiplication() const {
  LinMap m(field, dim * dim, dim);
  for (const auto& t : comul) m.add_at(t.j * dim + t.k, t.i, t.c);
  return m;
}

LinMap CoalgebraData::counit_map() const {
  LinMap m(field, 1, dim);
  for (int i = 0; i < dim; ++i) m.set(0, i, counit[i]);
  return m;
}

std::string CoalgebraData::label(int i) const {
  if (i >= 0 && i < static_cast<int>(basis_labels.size())) return basis_labels[i];
  return "b" + std::to_string(i);
}

CoalgebraData make_coalgebra(FieldSpec field, std::vector<std::string> basis_labels,
                             std::vector<ComulTriple> comul, Vec counit) {
  CoalgebraData c;
  c.field = field;
  c.dim = static_cast<int>(basis_labels.size());
  std::set<std::string> seen_labels(basis_labels.begin(), basis_labels.end());
  if (static_cast<int>(seen_labels.size()) != c.dim) throw UsageError("duplicate basis labels");
  if (counit.dim() != c.dim || !(counit.field() == field))
    throw UsageError("counit vector has wrong shape");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& t : comul) {
    if (t.i < 0 || t.i >= c.dim || t.j < 0 || t.j >= c.dim || t.k < 0 || t.k >= c.dim)
      throw UsageError("comultiplication triple index out of range");
    if (!(t.c.field() == field)) throw UsageError("comultiplication constant field mismatch");
    if (!seen.insert({t.i, t.j, t.k}).second)
      throw UsageError("duplicate comultiplication triple (i,j,k)");
  }
  c.basis_labels = std::move(basis_labels);
  for (auto& t : comul)
    if (!t.c.is_zero()) c.comul.push_back(std::move(t));
  c.counit = std::move(counit);
  return c;
}

CoalgebraData coalgebra_from_map(FieldSpec field, std::vector<std::string> basis_labels,
                                 const LinMap& delta, Vec counit) {
  const int d = static_cast<int>(basis_labels.size());
  if (delta.codomain_dim() != d * d || delta.domain_dim() != d)
    throw UsageError("comultiplication map has wrong shape");
  std::vector<ComulTriple> triples;
  for (const auto& [rc, v] : delta.entries())
    triples.push_back(ComulTriple{rc.second, rc.first / d, rc.first % d, v});
  return make_coalgebra(field, std::move(basis_labels), std::move(triples), std::move(counit));
}

CheckReport check_coalgebra(const CoalgebraData& c) {
  Stopwatch sw;
  LinMap delta = c.comultiplication();
  LinMap eps = c.counit_map();
  LinMap id = LinMap::identity(c.field, c.dim);

  LinMap coassoc_l = tensor(delta, id).compose(delta);  // (Δ⊗id)∘Δ
  LinMap coassoc_r = tensor(id, delta).compose(delta);  // (id⊗Δ)∘Δ
  if (coassoc_l != coassoc_r) {
    for (int i = 0; i < c.dim; ++i) {
      Vec l = coassoc_l.column(i), r = coassoc_r.column(i);
      if (l != r) {
        Witness w;
        w.indices = {i};
        w.expected = l;
        w.actual = r;
        w.detail = "comultiplication is not coassociative at " + c.label(i);
        return timed(fail_report("coalgebra", std::move(w)), sw);
      }
    }
  }

  // (ε⊗id)∘Δ = id = (id⊗ε)∘Δ; the 1-dim counit leg is dropped via the
  // canonical identifications k⊗R = R = R⊗k
  LinMap left = tensor(eps, id).compose(delta);
  LinMap right = tensor(id, eps).compose(delta);
  // both land in dim·1 resp. 1·dim = dim coordinates, directly comparable
  if (left != id || right != id) {
    for (int i = 0; i < c.dim; ++i) {
      Vec l = left.column(i), r = right.column(i), e = Vec::unit(c.field, c.dim, i);
      if (l != e || r != e) {
        Witness w;
        w.indices = {i};
        w.expected = e;
        w.actual = (l != e) ? l : r;
        w.detail = "counit law fails at " + c.label(i);
        return timed(fail_report("coalgebra", std::move(w)), sw);
      }
    }
  }
  return timed(pass_report("coalgebra"), sw);
}

OpResult<AlgebraData> dual_convolution(const CoalgebraData& c) {
  CheckReport pre = check_coalgebra(c);
  if (!pre.passed()) {
    CheckReport r = refused_report("dual-convolution", "input is not a valid coalgebra");
    r.witness = pre.witness;
    return {std::nullopt, std::move(r)};
  }
  std::vector<std::string> labels;
  labels.reserve(c.basis_labels.size());
  for (const auto& l : c.basis_labels) labels.push_back(l + "*");
  std::vector<MulTriple> mul;
  mul.reserve(c.comul.size());
  for (const auto& t : c.comul) mul.push_back(MulTriple{t.j, t.k, t.i, t.c});
  AlgebraData dual = make_algebra(c.field, std::move(labels), std::move(mul));
  return {std::move(dual), pass_report("dual-convolution")};
}

}  // namespace firmfrob
