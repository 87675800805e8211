#include "linstrand/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "linstrand/error.hpp"

namespace linstrand {

std::string Variable::to_string() const {
  std::ostringstream os;
  os << 'x' << row << '_' << col;
  return os.str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) {
    terms_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (const auto& t : terms) {
    if (t.second == 0) continue;
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(t);
    degree_ += t.second;
  }
}

std::uint32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, const Variable& x) { return t.first < x; });
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      r.terms_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first)
      // The monomial carrying the earlier variable has the larger exponent there.
      return a->first < b->first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a->second != b->second)
      return a->second > b->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a != terms_.end()) return std::strong_ordering::less;
  if (b != o.terms_.end()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << '*';
    os << terms_[k].first.to_string();
    if (terms_[k].second > 1) os << '^' << terms_[k].second;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Scalar& c) { return term(c, Monomial{}); }

Polynomial Polynomial::variable(const Field& field, Variable v) {
  return term(Scalar::one(field), Monomial(v));
}

Polynomial Polynomial::term(const Scalar& c, Monomial mono) {
  Polynomial p(c.field());
  p.add_term(c, mono);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

Scalar Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Scalar& c, const Monomial& mono) {
  if (!(c.field() == field_))
    throw FieldMismatch("term over " + c.field().to_string() + " added to polynomial over " + field_.to_string());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!(field_ == o.field_))
    throw FieldMismatch("polynomial addition across " + field_.to_string() + " and " + o.field_.to_string());
  for (const auto& [mono, c] : o.terms_) add_term(c, mono);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_))
    throw FieldMismatch("polynomial product across " + a.field_.to_string() + " and " + b.field_.to_string());
  Polynomial r(a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
  return r;
}

Scalar Polynomial::evaluate(const std::function<Scalar(Variable)>& value) const {
  Scalar sum = Scalar::zero(field_);
  for (const auto& [mono, c] : terms_) {
    Scalar t = c;
    for (const auto& [v, e] : mono.terms()) {
      const Scalar x = value(v);
      for (std::uint32_t k = 0; k < e; ++k) t *= x;
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (mono.is_one())
      os << cs;
    else if (cs == "1")
      os << mono.to_string();
    else
      os << cs << '*' << mono.to_string();
    first = false;
  }
  return os.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial poly_scale(const Polynomial& a, const Scalar& c) {
  if (!(a.field() == c.field()))
    throw FieldMismatch("scaling polynomial over " + a.field().to_string() + " by " + c.field().to_string());
  Polynomial r(a.field());
  for (const auto& [mono, coeff] : a.terms()) r.add_term(coeff * c, mono);
  return r;
}

// ---------------------------------------------------------------------------
// Minors and monomial bases

namespace {

Polynomial cofactor_expand(int row, int m, std::vector<int>& cols, const Field& field) {
  if (row > m) return Polynomial::constant(Scalar::one(field));
  Polynomial det(field);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial minor = cofactor_expand(row + 1, m, cols, field);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    Polynomial t = Polynomial::variable(field, {row, col}) * minor;
    if (k % 2 == 0)
      det += t;
    else
      det -= t;
  }
  return det;
}

void monomials_rec(int m, int n, int var, int remaining, std::vector<Monomial::Term>& acc,
                   std::vector<Monomial>& out) {
  const int total = m * n;
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (var == total) return;
  const Variable v{var / n + 1, var % n + 1};
  for (int e = remaining; e >= 0; --e) {
    if (e > 0) acc.emplace_back(v, static_cast<std::uint32_t>(e));
    monomials_rec(m, n, var + 1, remaining - e, acc, out);
    if (e > 0) acc.pop_back();
  }
}

void margins_rec(std::size_t cell, std::vector<int>& rows, std::vector<int>& cols,
                 std::vector<Monomial::Term>& acc, std::vector<Monomial>& out) {
  const std::size_t m = rows.size(), n = cols.size();
  if (cell == m * n) {
    out.emplace_back(acc);
    return;
  }
  const std::size_t l = cell / n, j = cell % n;
  // The last cell of a row must absorb the remaining row sum.
  const int hi = std::min(rows[l], cols[j]);
  const int lo = (j + 1 == n) ? rows[l] : 0;
  if (lo > hi) return;
  for (int e = hi; e >= lo; --e) {
    rows[l] -= e;
    cols[j] -= e;
    if (e > 0) acc.emplace_back(Variable{static_cast<int>(l) + 1, static_cast<int>(j) + 1}, static_cast<std::uint32_t>(e));
    margins_rec(cell + 1, rows, cols, acc, out);
    if (e > 0) acc.pop_back();
    rows[l] += e;
    cols[j] += e;
  }
}

}  // namespace

std::vector<Monomial> monomials_of_multidegree(std::span<const int> row_sums, std::span<const int> col_sums) {
  long long rs = 0, cs = 0;
  for (int r : row_sums) {
    if (r < 0) return {};
    rs += r;
  }
  for (int c : col_sums) {
    if (c < 0) return {};
    cs += c;
  }
  if (rs != cs || row_sums.empty() || col_sums.empty()) return {};
  std::vector<int> rows(row_sums.begin(), row_sums.end()), cols(col_sums.begin(), col_sums.end());
  std::vector<Monomial> out;
  std::vector<Monomial::Term> acc;
  margins_rec(0, rows, cols, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial maximal_minor(int m, std::span<const int> columns, const Field& field, int n) {
  if (m < 1) throw InvalidInput("minor size must be positive");
  if (static_cast<int>(columns.size()) != m)
    throw InvalidInput("maximal minor needs exactly " + std::to_string(m) + " columns, got " +
                       std::to_string(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] < 1 || (n > 0 && columns[k] > n))
      throw InvalidInput("column " + std::to_string(columns[k]) + " out of range");
    if (k > 0 && columns[k - 1] >= columns[k]) throw InvalidInput("minor columns must be strictly ascending");
  }
  std::vector<int> cols(columns.begin(), columns.end());
  return cofactor_expand(1, m, cols, field);
}

std::vector<Monomial> monomials_of_degree(int m, int n, int d) {
  if (m < 1 || n < 1 || d < 0) throw InvalidInput("monomial basis needs m, n >= 1 and d >= 0");
  std::vector<Monomial> out;
  std::vector<Monomial::Term> acc;
  monomials_rec(m, n, 0, d, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PolyMatrix

Polynomial PolyMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Polynomial(field_) : it->second;
}

void PolyMatrix::add(std::size_t r, std::size_t c, const Polynomial& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("PolyMatrix shape mismatch");
  if (!(field_ == rhs.field_)) throw FieldMismatch("PolyMatrix product across fields");
  // Bucket rhs entries by row for a sparse product.
  std::vector<std::vector<std::pair<std::size_t, const Polynomial*>>> by_row(rhs.rows_);
  for (const auto& [rc, p] : rhs.entries_) by_row[rc.first].emplace_back(rc.second, &p);
  PolyMatrix out(rows_, rhs.cols_, field_);
  for (const auto& [rc, p] : entries_)
    for (const auto& [c, q] : by_row[rc.second]) out.add(rc.first, c, p * *q);
  return out;
}

}  // namespace linstrand
