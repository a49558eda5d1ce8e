#ifndef FIRMFROB_FIELD_HPP
#define FIRMFROB_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace firmfrob {

/// Wrong-usage error (mismatched fields, bad dimensions, invalid parameters).
/// Maps to exit code 2 at the CLI boundary.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or scalar string. Also exit code 2.
struct ParseError : UsageError {
  using UsageError::UsageError;
};

/// A solver invariant was violated (e.g. a system that must be determined
/// turned out underdetermined). Indicates a bug or a precondition leak.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exact scalar domain: the rationals or a prime field F_p, 2 <= p < 2^31.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);  // validates primality and range

  bool operator==(const FieldSpec&) const = default;
  std::string describe() const;  // "Q" or "F<p>"
};

bool is_prime_u32(std::uint32_t n);

/// One exact scalar, tagged with its field. Arithmetic is total and exact:
/// rationals stay reduced with positive denominator, F_p residues stay in
/// [0, p). Mixing scalars from different fields throws UsageError.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_long(const FieldSpec& f, long n);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);  // Rationals only

  /// Parses the canonical string form: "a/b" or "a" over Q, decimal digits
  /// (optionally signed) over F_p. "a/0" and garbage throw ParseError.
  static Scalar parse(const FieldSpec& f, std::string_view s);

  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // UsageError on zero
  Scalar operator/(const Scalar& o) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical serialization: always "a/b" over Q (b >= 1), residue digits
  /// over F_p. parse() round-trips this exactly.
  std::string str() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

 private:
  Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}
  Scalar(FieldSpec f, std::uint64_t r) : field_(f), v_(r) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> v_;
};

}  // namespace firmfrob

#endif
