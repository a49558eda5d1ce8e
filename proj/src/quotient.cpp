#include "firmfrob/quotient.hpp"

namespace firmfrob {

namespace {

struct RrefRow {
  std::vector<std::pair<int, Scalar>> coeffs;  // pivot first, then free columns
  int pivot = -1;
};

// Reduced row-echelon basis of the span; rows carry entries only at their
// pivot and at free columns.
std::vector<RrefRow> rref_of_span(FieldSpec f, int width, const std::vector<Vec>& vectors,
                                  std::vector<int>& pivot_row) {
  std::vector<RrefRow> rref;
  pivot_row.assign(static_cast<std::size_t>(width), -1);
  for (const auto& vec : vectors) {
    if (vec.dim() != width) throw UsageError("relation vector has wrong dimension");
    std::vector<Scalar> dense(static_cast<std::size_t>(width), Scalar::zero(f));
    for (int c = 0; c < width; ++c) dense[c] = vec[c];
    int new_pivot = -1;
    for (int c = 0; c < width; ++c) {
      if (dense[c].is_zero()) continue;
      int pr = pivot_row[c];
      if (pr >= 0) {
        Scalar fct = dense[c];
        for (const auto& [cc, v] : rref[static_cast<std::size_t>(pr)].coeffs)
          dense[cc] = dense[cc] - fct * v;
      } else if (new_pivot < 0) {
        new_pivot = c;
      }
    }
    if (new_pivot < 0) continue;
    Scalar inv = dense[new_pivot].inverse();
    RrefRow row;
    row.pivot = new_pivot;
    for (int c = new_pivot; c < width; ++c)
      if (!dense[c].is_zero()) row.coeffs.emplace_back(c, dense[c] * inv);
    for (auto& ex : rref) {
      Scalar hit = Scalar::zero(f);
      for (const auto& [cc, v] : ex.coeffs)
        if (cc == new_pivot) hit = v;
      if (hit.is_zero()) continue;
      std::vector<std::pair<int, Scalar>> merged;
      auto a = ex.coeffs.begin();
      auto b = row.coeffs.begin();
      while (a != ex.coeffs.end() || b != row.coeffs.end()) {
        if (b == row.coeffs.end() || (a != ex.coeffs.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ex.coeffs.end() || b->first < a->first) {
          Scalar v = -(hit * b->second);
          if (!v.is_zero()) merged.emplace_back(b->first, v);
          ++b;
        } else {
          Scalar v = a->second - hit * b->second;
          if (!v.is_zero()) merged.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      ex.coeffs = std::move(merged);
    }
    std::size_t at = rref.size();
    rref.push_back(std::move(row));
    while (at > 0 && rref[at - 1].pivot > rref[at].pivot) {
      std::swap(rref[at - 1], rref[at]);
      --at;
    }
    for (std::size_t i = at; i < rref.size(); ++i)
      pivot_row[rref[i].pivot] = static_cast<int>(i);
  }
  return rref;
}

}  // namespace

QuotientSpace quotient_by_span(FieldSpec f, int ambient_dim, const std::vector<Vec>& relations) {
  std::vector<int> pivot_row;
  std::vector<RrefRow> rref = rref_of_span(f, ambient_dim, relations, pivot_row);

  std::vector<int> free_cols;
  std::vector<int> free_index(static_cast<std::size_t>(ambient_dim), -1);
  for (int c = 0; c < ambient_dim; ++c)
    if (pivot_row[static_cast<std::size_t>(c)] < 0) {
      free_index[static_cast<std::size_t>(c)] = static_cast<int>(free_cols.size());
      free_cols.push_back(c);
    }

  QuotientSpace q(f);
  q.ambient_dim = ambient_dim;
  q.quotient_dim = static_cast<int>(free_cols.size());
  for (const auto& row : rref) {
    Vec v(f, ambient_dim);
    for (const auto& [c, s] : row.coeffs) v.set(c, s);
    q.relations_basis.push_back(std::move(v));
  }

  // projection: reduce e_j modulo the span and keep the free coordinates.
  // A free e_j maps to its own coordinate; a pivot e_j of row r (which reads
  // e_j + sum over free columns) is congruent to minus that free part.
  LinMap proj(f, q.quotient_dim, ambient_dim);
  for (int j = 0; j < ambient_dim; ++j) {
    int fi = free_index[static_cast<std::size_t>(j)];
    if (fi >= 0) {
      proj.set(fi, j, Scalar::one(f));
      continue;
    }
    const RrefRow& row = rref[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(j)])];
    for (const auto& [c, s] : row.coeffs) {
      if (c == j) continue;
      proj.set(free_index[static_cast<std::size_t>(c)], j, -s);
    }
  }

  LinMap sect(f, ambient_dim, q.quotient_dim);
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    sect.set(free_cols[k], static_cast<int>(k), Scalar::one(f));

  q.projection = std::move(proj);
  q.section = std::move(sect);
  return q;
}

}  // namespace firmfrob
