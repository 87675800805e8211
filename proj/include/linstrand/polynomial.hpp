#pragma once

// Sparse polynomials in the entries x_{l j} of a generic m x n matrix.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linstrand/field.hpp"

namespace linstrand {

/// Indeterminate x_{row, col}; both indices 1-based.
struct Variable {
  int row = 1;
  int col = 1;
  auto operator<=>(const Variable&) const = default;
  std::string to_string() const;
};

class Monomial {
public:
  using Term = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);
  /// Entries may come in any order; zero exponents are dropped, repeats are merged.
  explicit Monomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(Variable v) const;
  bool is_one() const noexcept { return terms_.empty(); }

  Monomial operator*(const Monomial& o) const;

  /// Canonical order: ascending total degree, then descending exponent vectors
  /// compared lexicographically with variables in row-major (row, col) order.
  /// In degree one this lists x11, x12, ..., x1n, x21, ...
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

  std::string to_string() const;

private:
  std::vector<Term> terms_;  // ascending variables, positive exponents
  std::uint32_t degree_ = 0;
};

class Polynomial {
public:
  explicit Polynomial(Field field = Field::rational()) : field_(field) {}
  static Polynomial constant(const Scalar& c);
  static Polynomial variable(const Field& field, Variable v);
  static Polynomial term(const Scalar& c, Monomial mono);

  const Field& field() const noexcept { return field_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  Scalar coefficient(const Monomial& mono) const;

  void add_term(const Scalar& c, const Monomial& mono);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  Scalar evaluate(const std::function<Scalar(Variable)>& value) const;

  std::string to_string() const;

private:
  Field field_;
  std::map<Monomial, Scalar> terms_;  // no zero coefficients
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Scalar& c);

/// Determinant of the m x m submatrix of the generic m x n matrix on the given
/// ascending columns, by cofactor expansion along the first row. n = 0 skips the
/// upper range check on columns.
Polynomial maximal_minor(int m, std::span<const int> columns, const Field& field = Field::rational(), int n = 0);

/// All monomials of total degree d in the m*n variables, in canonical order.
std::vector<Monomial> monomials_of_degree(int m, int n, int d);

/// Monomials whose exponent matrix has the given row and column sums (its
/// multidegree), in canonical order. Empty if the sums are inconsistent.
std::vector<Monomial> monomials_of_multidegree(std::span<const int> row_sums, std::span<const int> col_sums);

class PolyMatrix {
public:
  PolyMatrix(std::size_t rows, std::size_t cols, Field field = Field::rational())
      : rows_(rows), cols_(cols), field_(field) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  const std::map<std::pair<std::size_t, std::size_t>, Polynomial>& entries() const noexcept { return entries_; }
  Polynomial at(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Polynomial& value);

  bool is_zero() const noexcept { return entries_.empty(); }

  /// Matrix product (*this) * rhs.
  PolyMatrix operator*(const PolyMatrix& rhs) const;

private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries_;
};

}  // namespace linstrand
