#include <doctest.h>

#include <map>
#include <random>

#include "linstrand/error.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/polynomial.hpp"
#include "oracles.hpp"

using namespace linstrand;

namespace {

const Field QQ = Field::rational();

Polynomial x(int l, int j) { return Polynomial::variable(QQ, {l, j}); }

std::vector<std::vector<mpq_class>> dense(const ScalarMatrix& a) {
  std::vector<std::vector<mpq_class>> d(a.rows(), std::vector<mpq_class>(a.cols(), 0));
  for (const auto& [rc, v] : a.entries()) d[rc.first][rc.second] = v.rational();
  return d;
}

ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& f, int density_pct) {
  ScalarMatrix a(r, c, f);
  std::uniform_int_distribution<int> pct(0, 99), val(-5, 5);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) < density_pct) a.set(i, j, Scalar(f, val(rng)));
  return a;
}

ScalarMatrix reduce(const ScalarMatrix& a, const Field& f) {
  ScalarMatrix out(a.rows(), a.cols(), f);
  for (const auto& [rc, v] : a.entries()) {
    const mpq_class q = v.rational();
    const std::uint32_t p = f.characteristic();
    out.set(rc.first, rc.second,
            Scalar(f, static_cast<long long>(reduce_mod(mpz_class(q.get_num()), p)) *
                          mod_inverse(reduce_mod(mpz_class(q.get_den()), p), p) % p));
  }
  return out;
}

// Matrix of {x_v * m_tau} for the path clutter, rows = generators, cols = degree-3 monomials.
ScalarMatrix path_multiples() {
  const auto monos = monomials_of_degree(2, 3, 3);
  std::map<Monomial, std::size_t> idx;
  for (std::size_t k = 0; k < monos.size(); ++k) idx[monos[k]] = k;
  std::vector<Polynomial> gens;
  const int taus[2][2] = {{1, 2}, {2, 3}};
  for (const auto& t : taus) {
    const Polynomial minor = maximal_minor(2, std::vector<int>{t[0], t[1]}, QQ, 3);
    for (const auto& v : monomials_of_degree(2, 3, 1)) gens.push_back(minor * Polynomial::term(Scalar::one(QQ), v));
  }
  ScalarMatrix a(gens.size(), monos.size(), QQ);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& [mono, c] : gens[r].terms()) a.set(r, idx.at(mono), c);
  return a;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  const Field F = Field::prime(7);
  CHECK((Scalar(F, 3) * Scalar(F, 5)).residue() == 1);
  CHECK((Scalar(F, 3) / Scalar(F, 5)).residue() == 2);
  CHECK((Scalar(F, -1)).residue() == 6);
  CHECK((Scalar(QQ, mpq_class(2, 4))).rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(Scalar(QQ, 1) / Scalar(QQ, 0), std::domain_error);
  CHECK_THROWS_AS(Scalar(QQ, 1) + Scalar(F, 1), FieldMismatch);
  CHECK_THROWS_AS(Field::prime(15), InvalidInput);
  CHECK_THROWS_AS(Field::prime(2), InvalidInput);
  CHECK(Field::parse("fp:7") == F);
  CHECK(Field::parse("fp") == Field::prime(32003));
  CHECK(Field::parse("rat") == QQ);
  CHECK_THROWS_AS(Field::parse("gf4"), InvalidInput);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1);
  CHECK(p + Polynomial(QQ) == p);
  const Polynomial q = x(1, 1) * x(2, 2);
  CHECK(q.size() == 1);
  CHECK(q.coefficient(Monomial({{Variable{1, 1}, 1u}, {Variable{2, 2}, 1u}})).is_one());
  const Polynomial prod = p * (x(1, 2) * x(2, 3) - x(1, 3) * x(2, 2));
  CHECK(prod.size() == 4);
  CHECK(prod.degree() == 4);
  CHECK((p - p).is_zero());
  CHECK(poly_scale(p, Scalar(QQ, 0)).is_zero());
  CHECK_THROWS_AS(poly_add(p, Polynomial::variable(Field::prime(), {1, 1})), FieldMismatch);
}

TEST_CASE("monomial canonical order") {
  const auto one = monomials_of_degree(2, 3, 1);
  REQUIRE(one.size() == 6);
  const Variable order[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};
  for (int k = 0; k < 6; ++k) CHECK(one[k] == Monomial(order[k]));
  CHECK(monomials_of_degree(2, 3, 0) == std::vector<Monomial>{Monomial()});
  CHECK(monomials_of_degree(2, 3, 2).size() == 21);
  CHECK(monomials_of_degree(3, 3, 3).size() == binomial(11, 3));
  const auto two = monomials_of_degree(2, 3, 2);
  CHECK(std::is_sorted(two.begin(), two.end()));
}

TEST_CASE("maximal minors") {
  CHECK(maximal_minor(1, std::vector<int>{5}) == x(1, 5));
  CHECK(maximal_minor(2, std::vector<int>{1, 2}) == x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1));
  CHECK(maximal_minor(3, std::vector<int>{1, 2, 3}).size() == 6);
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> cols;
    for (int k = 0; k < m; ++k) cols.push_back(2 * k + 1);
    CHECK(maximal_minor(m, cols, QQ) == oracle::leibniz_minor(m, cols));
  }
  CHECK_THROWS_AS(maximal_minor(2, std::vector<int>{1}), InvalidInput);
  CHECK_THROWS_AS(maximal_minor(2, std::vector<int>{2, 1}), InvalidInput);
  CHECK_THROWS_AS(maximal_minor(2, std::vector<int>{1, 4}, QQ, 3), InvalidInput);
}

TEST_CASE("maximal minors evaluate to numeric determinants") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int m = 1; m <= 4; ++m)
    for (int trial = 0; trial < 10; ++trial) {
      const int n = m + 2;
      std::vector<std::vector<long long>> mat(m, std::vector<long long>(n));
      for (auto& row : mat)
        for (auto& v : row) v = val(rng);
      std::vector<int> cols;
      for (int j = 1; j <= n && static_cast<int>(cols.size()) < m; ++j)
        if (rng() % 3 != 0 || n - j < m - static_cast<int>(cols.size())) cols.push_back(j);
      auto value = [&](Variable v) { return Scalar(QQ, mat[v.row - 1][v.col - 1]); };
      std::vector<std::vector<mpq_class>> sub(m, std::vector<mpq_class>(m));
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sub[r][c] = static_cast<long>(mat[r][cols[c] - 1]);
      const mpq_class det = oracle::det(sub);
      CHECK(maximal_minor(m, cols).evaluate(value).rational() == det);
      // Swapping two columns of the submatrix negates the determinant.
      if (m >= 2) {
        for (auto& row : sub) std::swap(row[0], row[1]);
        CHECK(oracle::det(sub) == -det);
      }
    }
}

TEST_CASE("rank and kernel basics") {
  for (std::size_t k : {1u, 4u, 9u}) {
    const auto id = ScalarMatrix::identity(k);
    CHECK(rank(id) == k);
    CHECK(kernel_basis(id).empty());
  }
  const ScalarMatrix zero(3, 5);
  CHECK(rank(zero) == 0);
  CHECK(kernel_basis(zero).size() == 5);
}

TEST_CASE("path multiples have full rank") {
  const ScalarMatrix a = path_multiples();
  CHECK(a.rows() == 12);
  CHECK(rank(a) == 12);
  CHECK(oracle::rank(dense(a)) == 12);
  CHECK(rank(reduce(a, Field::prime())) == 12);
}

TEST_CASE("rank agrees with a dense Gaussian oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    ScalarMatrix a = random_matrix(rng, r, c, QQ, 20 + static_cast<int>(rng() % 60));
    // Force some dependence.
    if (r >= 3)
      for (std::size_t j = 0; j < c; ++j) a.set(r - 1, j, a.at(0, j) * Scalar(QQ, 3) - a.at(1, j));
    const auto expected = oracle::rank(dense(a));
    CHECK(rank(a) == expected);
    const Field F = Field::prime();
    CHECK(rank(reduce(a, F)) == expected);

    IntegerMatrix im(r, c);
    for (const auto& [rc, v] : a.entries()) im.add(rc.first, rc.second, v.rational().get_num().get_si());
    CHECK(rank(im, QQ) == expected);
    CHECK(rank(im, F) == expected);
  }
}

TEST_CASE("rank mod a small prime matches a scalar oracle") {
  std::mt19937_64 rng(99);
  const Field F = Field::prime(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
    const ScalarMatrix a = random_matrix(rng, r, c, F, 50);
    std::vector<std::vector<long long>> d(r, std::vector<long long>(c, 0));
    for (const auto& [rc, v] : a.entries()) d[rc.first][rc.second] = v.residue();
    CHECK(rank(a) == oracle::rank_mod(d, 5));
  }
}

TEST_CASE("kernel vectors are annihilated and have the right count") {
  std::mt19937_64 rng(3);
  for (const Field& f : {QQ, Field::prime()}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 10;
      const ScalarMatrix a = random_matrix(rng, r, c, f, 40);
      const auto ker = kernel_basis(a);
      CHECK(ker.size() == c - rank(a));
      for (const auto& v : ker) {
        const auto av = a.apply(v);
        for (const auto& s : av) CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("reduced row echelon form") {
  ScalarMatrix a(3, 4);
  a.set(0, 1, Scalar(QQ, 2));
  a.set(0, 3, Scalar(QQ, 4));
  a.set(1, 0, Scalar(QQ, 1));
  a.set(1, 1, Scalar(QQ, 1));
  a.set(2, 0, Scalar(QQ, 2));
  a.set(2, 1, Scalar(QQ, 4));
  a.set(2, 3, Scalar(QQ, 4));
  const RowEchelon e = reduced_row_echelon(a);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.rows.at(0, 0).is_one());
  CHECK(e.rows.at(0, 1).is_zero());
  CHECK(e.rows.at(1, 1).is_one());
  CHECK(e.rows.at(1, 3).rational() == 2);
  CHECK(e.rows.at(0, 3).rational() == -2);
}
