#include "firmfrob/field.hpp"

#include <cctype>

namespace firmfrob {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw UsageError("prime field modulus must be a prime in [2, 2^31): got " +
                     std::to_string(p));
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::describe() const {
  return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p);
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw UsageError("element has no inverse mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::Rationals) return Scalar(f, mpq_class(0));
  return Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::Rationals) return Scalar(f, mpq_class(1));
  return Scalar(f, std::uint64_t{1 % f.p});
}

Scalar Scalar::from_long(const FieldSpec& f, long n) {
  if (f.kind == FieldSpec::Kind::Rationals) return Scalar(f, mpq_class(n));
  long long m = static_cast<long long>(n) % static_cast<long long>(f.p);
  if (m < 0) m += f.p;
  return Scalar(f, static_cast<std::uint64_t>(m));
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
  if (f.kind != FieldSpec::Kind::Rationals)
    throw UsageError("rational scalar requested over a prime field");
  mpq_class c = q;
  c.canonicalize();
  return Scalar(f, std::move(c));
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view s) {
  if (s.empty()) throw ParseError("empty scalar string");
  bool neg = false;
  std::string_view body = s;
  if (body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  if (f.kind == FieldSpec::Kind::Rationals) {
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    if (!all_digits(num)) throw ParseError("malformed rational scalar: " + std::string(s));
    mpz_class n(std::string(num), 10), d(1);
    if (slash != std::string_view::npos) {
      std::string_view den = body.substr(slash + 1);
      if (!all_digits(den)) throw ParseError("malformed rational scalar: " + std::string(s));
      d = mpz_class(std::string(den), 10);
      if (d == 0) throw ParseError("zero denominator in scalar: " + std::string(s));
    }
    mpq_class q(neg ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Scalar(f, std::move(q));
  }
  if (!all_digits(body)) throw ParseError("malformed prime-field scalar: " + std::string(s));
  std::uint64_t v = 0;
  for (char c : body) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % f.p;
  if (neg && v != 0) v = f.p - v;
  return Scalar(f, v);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw UsageError("scalar field mismatch: " + field_.describe() + " vs " +
                     o.field_.describe());
}

bool Scalar::is_zero() const {
  if (field_.kind == FieldSpec::Kind::Rationals) return std::get<mpq_class>(v_) == 0;
  return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.kind == FieldSpec::Kind::Rationals) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint64_t>(v_) == 1 % field_.p;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rationals)
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
  return Scalar(field_, (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % field_.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rationals)
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
  return Scalar(field_, (std::get<std::uint64_t>(v_) + field_.p - std::get<std::uint64_t>(o.v_)) %
                            field_.p);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rationals)
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
  return Scalar(field_, (std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_)) % field_.p);
}

Scalar Scalar::operator-() const {
  if (field_.kind == FieldSpec::Kind::Rationals)
    return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
  std::uint64_t v = std::get<std::uint64_t>(v_);
  return Scalar(field_, v == 0 ? 0 : field_.p - v);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero");
  if (field_.kind == FieldSpec::Kind::Rationals)
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
  return Scalar(field_, mod_inverse(std::get<std::uint64_t>(v_), field_.p));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rationals)
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
  return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

std::string Scalar::str() const {
  if (field_.kind == FieldSpec::Kind::Rationals) {
    const mpq_class& q = std::get<mpq_class>(v_);
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::to_string(std::get<std::uint64_t>(v_));
}

const mpq_class& Scalar::rational() const {
  if (field_.kind != FieldSpec::Kind::Rationals)
    throw UsageError("scalar is not rational");
  return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue() const {
  if (field_.kind != FieldSpec::Kind::PrimeField)
    throw UsageError("scalar is not a prime-field residue");
  return std::get<std::uint64_t>(v_);
}

}  // namespace firmfrob
