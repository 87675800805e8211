#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace linstrand {

/// Coefficient field: the rationals, or F_p for an odd prime p < 2^31.
class Field {
public:
  enum class Kind { Rational, Prime };

  static constexpr std::uint32_t kDefaultPrime = 32003;

  Field() = default;
  static Field rational() { return {}; }
  /// Throws InvalidInput unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p = kDefaultPrime);
  /// Accepts "rat" or "fp:<p>" (also "fp" for the default prime).
  static Field parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

private:
  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Modular helpers on canonical residues in [0, p).
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce_mod(long long v, std::uint32_t p);
std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p);

/// Exact field element. Rationals are kept in lowest terms by GMP.
class Scalar {
public:
  Scalar() : Scalar(Field::rational(), 0) {}
  Scalar(const Field& field, long long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; requires a rational field.
  const mpq_class& rational() const;
  /// Canonical residue; requires a prime field.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;

  std::string to_string() const;

private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace linstrand
