#include "firmfrob/linalg.hpp"

#include <sstream>

namespace firmfrob {

Vec::Vec(FieldSpec f, int dim) : field_(f) {
  if (dim < 0) throw UsageError("negative vector dimension");
  entries_.assign(static_cast<std::size_t>(dim), Scalar::zero(f));
}

Vec Vec::unit(FieldSpec f, int dim, int i) {
  Vec v(f, dim);
  v.set(i, Scalar::one(f));
  return v;
}

void Vec::set(int i, Scalar s) {
  if (!(s.field() == field_)) throw UsageError("vector/scalar field mismatch");
  entries_.at(static_cast<std::size_t>(i)) = std::move(s);
}

void Vec::add_at(int i, const Scalar& s) {
  auto& e = entries_.at(static_cast<std::size_t>(i));
  e = e + s;
}

void Vec::require_compatible(const Vec& o) const {
  if (!(field_ == o.field_)) throw UsageError("vector field mismatch");
  if (entries_.size() != o.entries_.size()) throw UsageError("vector dimension mismatch");
}

Vec Vec::operator+(const Vec& o) const {
  require_compatible(o);
  Vec r(field_, dim());
  for (int i = 0; i < dim(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require_compatible(o);
  Vec r(field_, dim());
  for (int i = 0; i < dim(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec r(field_, dim());
  for (int i = 0; i < dim(); ++i) r.entries_[i] = entries_[i] * s;
  return r;
}

bool Vec::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Vec::operator==(const Vec& o) const {
  require_compatible(o);
  for (int i = 0; i < dim(); ++i)
    if (entries_[i] != o.entries_[i]) return false;
  return true;
}

std::vector<std::string> Vec::str_entries() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.str());
  return out;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << entries_[i].str();
  }
  os << ")";
  return os.str();
}

Vec tensor(const Vec& a, const Vec& b) {
  if (!(a.field() == b.field())) throw UsageError("tensor: field mismatch");
  Vec r(a.field(), a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < b.dim(); ++j) {
      if (b[j].is_zero()) continue;
      r.set(i * b.dim() + j, a[i] * b[j]);
    }
  }
  return r;
}

LinMap::LinMap(FieldSpec f, int codomain_dim, int domain_dim)
    : field_(f), rows_(codomain_dim), cols_(domain_dim) {
  if (rows_ < 0 || cols_ < 0) throw UsageError("negative map dimension");
}

LinMap LinMap::identity(FieldSpec f, int n) {
  LinMap m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

void LinMap::check_index(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw UsageError("linear map index out of range");
}

void LinMap::add_at(int row, int col, const Scalar& s) {
  check_index(row, col);
  if (!(s.field() == field_)) throw UsageError("map/scalar field mismatch");
  auto it = ent_.find({row, col});
  if (it == ent_.end()) {
    if (!s.is_zero()) ent_.emplace(std::make_pair(row, col), s);
    return;
  }
  Scalar sum = it->second + s;
  if (sum.is_zero())
    ent_.erase(it);
  else
    it->second = std::move(sum);
}

void LinMap::set(int row, int col, Scalar s) {
  check_index(row, col);
  if (!(s.field() == field_)) throw UsageError("map/scalar field mismatch");
  if (s.is_zero())
    ent_.erase({row, col});
  else
    ent_.insert_or_assign({row, col}, std::move(s));
}

Scalar LinMap::entry(int row, int col) const {
  check_index(row, col);
  auto it = ent_.find({row, col});
  return it == ent_.end() ? Scalar::zero(field_) : it->second;
}

Vec LinMap::apply(const Vec& x) const {
  if (!(x.field() == field_)) throw UsageError("apply: field mismatch");
  if (x.dim() != cols_) throw UsageError("apply: dimension mismatch");
  Vec y(field_, rows_);
  for (const auto& [rc, v] : ent_) {
    const Scalar& xe = x[rc.second];
    if (!xe.is_zero()) y.add_at(rc.first, v * xe);
  }
  return y;
}

Vec LinMap::column(int j) const {
  if (j < 0 || j >= cols_) throw UsageError("column index out of range");
  Vec y(field_, rows_);
  // entries are (row, col)-ordered; scan is fine at our scales
  for (const auto& [rc, v] : ent_)
    if (rc.second == j) y.set(rc.first, v);
  return y;
}

Vec LinMap::row(int i) const {
  if (i < 0 || i >= rows_) throw UsageError("row index out of range");
  Vec y(field_, cols_);
  auto it = ent_.lower_bound({i, 0});
  for (; it != ent_.end() && it->first.first == i; ++it) y.set(it->first.second, it->second);
  return y;
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (!(field_ == inner.field_)) throw UsageError("compose: field mismatch");
  if (cols_ != inner.rows_) throw UsageError("compose: dimension mismatch");
  LinMap out(field_, rows_, inner.cols_);
  for (const auto& [rc, a] : ent_) {
    auto it = inner.ent_.lower_bound({rc.second, 0});
    for (; it != inner.ent_.end() && it->first.first == rc.second; ++it)
      out.add_at(rc.first, it->first.second, a * it->second);
  }
  return out;
}

LinMap LinMap::transpose() const {
  LinMap out(field_, cols_, rows_);
  for (const auto& [rc, v] : ent_) out.set(rc.second, rc.first, v);
  return out;
}

LinMap LinMap::operator+(const LinMap& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw UsageError("map addition shape mismatch");
  LinMap out = *this;
  for (const auto& [rc, v] : o.ent_) out.add_at(rc.first, rc.second, v);
  return out;
}

LinMap LinMap::operator-(const LinMap& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw UsageError("map subtraction shape mismatch");
  LinMap out = *this;
  for (const auto& [rc, v] : o.ent_) out.add_at(rc.first, rc.second, -v);
  return out;
}

bool LinMap::operator==(const LinMap& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (ent_.size() != o.ent_.size()) return false;
  auto it = ent_.begin();
  auto jt = o.ent_.begin();
  for (; it != ent_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second != jt->second) return false;
  }
  return true;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw UsageError("tensor: field mismatch");
  LinMap out(f.field(), f.codomain_dim() * g.codomain_dim(), f.domain_dim() * g.domain_dim());
  for (const auto& [rcf, a] : f.entries())
    for (const auto& [rcg, b] : g.entries())
      out.set(rcf.first * g.codomain_dim() + rcg.first, rcf.second * g.domain_dim() + rcg.second,
              a * b);
  return out;
}

LinMap swap_map(FieldSpec f, int dim_a, int dim_b) {
  LinMap out(f, dim_a * dim_b, dim_a * dim_b);
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b) out.set(b * dim_a + a, a * dim_b + b, Scalar::one(f));
  return out;
}

}  // namespace firmfrob
