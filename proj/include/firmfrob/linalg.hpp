#ifndef FIRMFROB_LINALG_HPP
#define FIRMFROB_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "firmfrob/field.hpp"

namespace firmfrob {

/// Dense exact vector over a fixed field.
class Vec {
 public:
  Vec(FieldSpec f, int dim);
  static Vec unit(FieldSpec f, int dim, int i);

  const FieldSpec& field() const { return field_; }
  int dim() const { return static_cast<int>(entries_.size()); }

  const Scalar& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  void set(int i, Scalar s);
  void add_at(int i, const Scalar& s);

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(const Scalar& s) const;
  bool is_zero() const;
  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  std::vector<std::string> str_entries() const;
  std::string str() const;  // "(a, b, ...)" for witnesses and messages

 private:
  void require_compatible(const Vec& o) const;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Tensor of vectors; index convention (i, j) -> i * b.dim() + j
/// (first factor most significant, used consistently everywhere).
Vec tensor(const Vec& a, const Vec& b);

/// Sparse exact linear map, stored as (row, col) -> scalar triples with
/// no explicit zeros; equality is entrywise equality of the canonical form.
class LinMap {
 public:
  LinMap(FieldSpec f, int codomain_dim, int domain_dim);
  static LinMap identity(FieldSpec f, int n);

  const FieldSpec& field() const { return field_; }
  int domain_dim() const { return cols_; }
  int codomain_dim() const { return rows_; }

  /// Adds s to the (row, col) entry, dropping it if the sum is zero.
  void add_at(int row, int col, const Scalar& s);
  void set(int row, int col, Scalar s);
  Scalar entry(int row, int col) const;

  const std::map<std::pair<int, int>, Scalar>& entries() const { return ent_; }
  std::size_t nnz() const { return ent_.size(); }
  bool is_zero() const { return ent_.empty(); }

  Vec apply(const Vec& x) const;
  Vec column(int j) const;
  Vec row(int i) const;

  /// this ∘ inner (matrix product: this * inner).
  LinMap compose(const LinMap& inner) const;
  LinMap transpose() const;
  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

 private:
  void check_index(int row, int col) const;
  FieldSpec field_;
  int rows_, cols_;
  std::map<std::pair<int, int>, Scalar> ent_;
};

/// Kronecker product acting as (f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y); indices follow
/// the Vec tensor convention on both sides.
LinMap tensor(const LinMap& f, const LinMap& g);

/// The braiding A⊗B -> B⊗A on basis vectors, as a permutation matrix.
LinMap swap_map(FieldSpec f, int dim_a, int dim_b);

}  // namespace firmfrob

#endif
