#include "firmfrob/solve.hpp"

#include <algorithm>

namespace firmfrob {

LinearSystem::LinearSystem(FieldSpec f, int unknowns) : field_(f), n_(unknowns) {
  if (unknowns < 0) throw UsageError("negative unknown count");
  pivot_row_.assign(static_cast<std::size_t>(unknowns), -1);
}

void LinearSystem::axpy_into_dense(std::vector<Scalar>& dense, Scalar& rhs, const Row& row,
                                   Scalar factor) const {
  // factor is taken by value: it usually aliases dense[row.pivot], which the
  // first update below zeroes
  for (const auto& [c, v] : row.coeffs) dense[c] = dense[c] - factor * v;
  rhs = rhs - factor * row.rhs;
}

void LinearSystem::add_equation(const std::vector<std::pair<int, Scalar>>& coeffs,
                                const Scalar& rhs) {
  Vec v(field_, n_);
  for (const auto& [c, s] : coeffs) v.add_at(c, s);
  add_equation(v, rhs);
}

void LinearSystem::add_equation(const Vec& coeffs, const Scalar& rhs) {
  if (coeffs.dim() != n_) throw UsageError("equation width mismatch");
  if (!(coeffs.field() == field_) || !(rhs.field() == field_))
    throw UsageError("equation field mismatch");

  std::vector<Scalar> dense(static_cast<std::size_t>(n_), Scalar::zero(field_));
  for (int c = 0; c < n_; ++c) dense[c] = coeffs[c];
  Scalar r = rhs;

  int new_pivot = -1;
  for (int c = 0; c < n_; ++c) {
    if (dense[c].is_zero()) continue;
    int pr = pivot_row_[c];
    if (pr >= 0) {
      axpy_into_dense(dense, r, rows_[static_cast<std::size_t>(pr)], dense[c]);
    } else if (new_pivot < 0) {
      new_pivot = c;
    }
    // entries at columns > c may have changed; the sweep continues there
  }

  if (new_pivot < 0) {
    if (!r.is_zero()) consistent_ = false;
    return;
  }

  Scalar lead_inv = dense[new_pivot].inverse();
  Row row;
  row.pivot = new_pivot;
  row.rhs = r * lead_inv;
  for (int c = new_pivot; c < n_; ++c)
    if (!dense[c].is_zero()) row.coeffs.emplace_back(c, dense[c] * lead_inv);

  // eliminate the new pivot column from every existing row (RREF upkeep)
  for (auto& existing : rows_) {
    auto it = std::lower_bound(existing.coeffs.begin(), existing.coeffs.end(), new_pivot,
                               [](const auto& p, int c) { return p.first < c; });
    if (it == existing.coeffs.end() || it->first != new_pivot) continue;
    Scalar f = it->second;
    std::vector<std::pair<int, Scalar>> merged;
    merged.reserve(existing.coeffs.size() + row.coeffs.size());
    auto a = existing.coeffs.begin();
    auto b = row.coeffs.begin();
    while (a != existing.coeffs.end() || b != row.coeffs.end()) {
      if (b == row.coeffs.end() || (a != existing.coeffs.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == existing.coeffs.end() || b->first < a->first) {
        Scalar v = -(f * b->second);
        if (!v.is_zero()) merged.emplace_back(b->first, v);
        ++b;
      } else {
        Scalar v = a->second - f * b->second;
        if (!v.is_zero()) merged.emplace_back(a->first, v);
        ++a;
        ++b;
      }
    }
    existing.coeffs = std::move(merged);
    existing.rhs = existing.rhs - f * row.rhs;
  }

  std::size_t at = rows_.size();
  rows_.push_back(std::move(row));
  // keep rows sorted by pivot column
  while (at > 0 && rows_[at - 1].pivot > rows_[at].pivot) {
    std::swap(rows_[at - 1], rows_[at]);
    --at;
  }
  for (std::size_t i = at; i < rows_.size(); ++i) pivot_row_[rows_[i].pivot] = static_cast<int>(i);
}

std::optional<Vec> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  Vec x(field_, n_);
  for (const auto& row : rows_) x.set(row.pivot, row.rhs);
  return x;
}

std::vector<Vec> LinearSystem::kernel() const {
  std::vector<Vec> basis;
  for (int c = 0; c < n_; ++c) {
    if (pivot_row_[c] >= 0) continue;
    Vec v(field_, n_);
    v.set(c, Scalar::one(field_));
    for (const auto& row : rows_) {
      auto it = std::lower_bound(row.coeffs.begin(), row.coeffs.end(), c,
                                 [](const auto& p, int col) { return p.first < col; });
      if (it != row.coeffs.end() && it->first == c) v.set(row.pivot, -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const LinMap& a, const Vec& b) {
  if (b.dim() != a.codomain_dim()) throw UsageError("solve: rhs dimension mismatch");
  if (!(b.field() == a.field())) throw UsageError("solve: field mismatch");
  LinearSystem sys(a.field(), a.domain_dim());
  for (int r = 0; r < a.codomain_dim(); ++r) sys.add_equation(a.row(r), b[r]);
  return sys.solve();
}

std::vector<Vec> kernel(const LinMap& a) {
  LinearSystem sys(a.field(), a.domain_dim());
  Scalar z = Scalar::zero(a.field());
  for (int r = 0; r < a.codomain_dim(); ++r) sys.add_equation(a.row(r), z);
  return sys.kernel();
}

int rank(const LinMap& a) {
  LinearSystem sys(a.field(), a.domain_dim());
  Scalar z = Scalar::zero(a.field());
  for (int r = 0; r < a.codomain_dim(); ++r) sys.add_equation(a.row(r), z);
  return sys.rank();
}

std::optional<LinMap> inverse(const LinMap& a) {
  if (a.domain_dim() != a.codomain_dim()) return std::nullopt;
  const int n = a.domain_dim();
  // dense Gauss-Jordan on [A | I], lowest-index pivot row per column
  std::vector<std::vector<Scalar>> m(
      static_cast<std::size_t>(n),
      std::vector<Scalar>(static_cast<std::size_t>(2 * n), Scalar::zero(a.field())));
  for (const auto& [rc, v] : a.entries()) m[rc.first][rc.second] = v;
  for (int i = 0; i < n; ++i) m[i][n + i] = Scalar::one(a.field());

  int done = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = done; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[done], m[pivot]);
    Scalar inv = m[done][col].inverse();
    for (int c = col; c < 2 * n; ++c) m[done][c] = m[done][c] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == done || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = col; c < 2 * n; ++c) m[r][c] = m[r][c] - f * m[done][c];
    }
    ++done;
  }
  LinMap out(a.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!m[r][n + c].is_zero()) out.set(r, c, m[r][n + c]);
  return out;
}

bool is_bijective(const LinMap& a) {
  return a.domain_dim() == a.codomain_dim() && rank(a) == a.domain_dim();
}

}  // namespace firmfrob
