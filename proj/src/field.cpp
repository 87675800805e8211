#include "linstrand/field.hpp"

#include <stdexcept>

#include "linstrand/error.hpp"

namespace linstrand {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not an odd prime below 2^31");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "rat" || text == "QQ") return rational();
  if (text == "fp") return prime();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw InvalidInput("malformed field descriptor '" + text + "'");
    const auto p = std::stoull(digits);
    if (p >= (1ull << 31)) throw InvalidInput("field characteristic too large: " + digits);
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("unknown field descriptor '" + text + "' (expected rat or fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rat") : "fp:" + std::to_string(p_);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

Scalar::Scalar(const Field& field, long long value) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  else
    value_ = reduce_mod(value, field.characteristic());
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const auto p = field.characteristic();
  std::uint32_t den = reduce_mod(value.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  std::uint64_t num = reduce_mod(value.get_num(), p);
  value_ = static_cast<std::uint32_t>(num * mod_inverse(den, p) % p);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("rational value requested from " + field_.to_string());
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("residue requested from rational scalar");
  return std::get<std::uint32_t>(value_);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalar arithmetic across fields " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>((std::uint64_t{v} + std::get<std::uint32_t>(o.value_)) % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(std::uint64_t{v} * std::get<std::uint32_t>(o.value_) % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    const auto p = field_.characteristic();
    v = static_cast<std::uint32_t>(std::uint64_t{v} * mod_inverse(std::get<std::uint32_t>(o.value_), p) % p);
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

}  // namespace linstrand
