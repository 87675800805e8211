#include <doctest.h>

#include "linstrand/betti.hpp"
#include "linstrand/error.hpp"
#include "oracles.hpp"

using namespace linstrand;

namespace {

Clutter path() { return Clutter(3, 2, {{1, 2}, {2, 3}}); }
Clutter three_clutter() {
  return Clutter(6, 3, {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}

}  // namespace

TEST_CASE("ideal pieces") {
  CHECK(ideal_piece(Clutter::complete(3, 2), 2).dimension == 3);
  CHECK(ideal_piece(path(), 2).dimension == 2);
  CHECK(ideal_piece(path(), 1).dimension == 0);
  CHECK(ideal_piece(three_clutter(), 2).dimension == 0);
  // Two coprime quadrics: dim J_3 = 12 (no linear relation), J_4 = 2*21 - 1.
  CHECK(ideal_piece(path(), 3).dimension == 12);
  CHECK(ideal_piece(path(), 4).dimension == 41);
  CHECK(ideal_piece(path(), 4, Field::prime()).dimension == 41);
}

TEST_CASE("Koszul Betti numbers of small clutters") {
  const Clutter k3 = Clutter::complete(3, 2);
  CHECK(betti_koszul(k3, 0, 2) == 3);
  CHECK(betti_koszul(k3, 1, 3) == 2);
  CHECK(betti_koszul(k3, 1, 4) == 0);
  CHECK(betti_koszul(path(), 1, 4) == 1);
  CHECK(betti_koszul(path(), 1, 3) == 0);
  CHECK(betti_koszul(path(), 0, 2) == 2);
  CHECK(betti_koszul(path(), 2, 3) == 0);
  CHECK_THROWS_AS(betti_koszul(path(), -1, 3), InvalidInput);
}

TEST_CASE("Koszul oracle matches a dense total-degree computation") {
  for (const Clutter& c : {path(), Clutter::complete(3, 2), Clutter(3, 2, {{1, 2}, {1, 3}})}) {
    BettiOracle oracle(c);
    for (int i = 0; i <= 2; ++i)
      for (int j = 2; j <= 5; ++j) {
        CAPTURE(c.to_string());
        CAPTURE(i);
        CAPTURE(j);
        CHECK(oracle.koszul(i, j) == oracle::naive_betti(c, i, j));
      }
  }
}

TEST_CASE("row symmetry does not change the answer") {
  for (const Clutter& c : {path(), Clutter::complete(4, 2), Clutter::complete(3, 3), three_clutter()}) {
    OracleOptions plain;
    plain.row_symmetry = false;
    BettiOracle a(c), b(c, plain);
    const int m = c.m();
    for (int i = 0; i <= 2; ++i)
      for (int j = i + m; j <= i + m + 1; ++j) CHECK(a.koszul(i, j) == b.koszul(i, j));
    for (int j = m; j <= m + 2; ++j) CHECK(a.first_syzygy(j) == b.first_syzygy(j));
  }
}

TEST_CASE("multigraded values sum to the graded value") {
  BettiOracle oracle(Clutter::complete(4, 2));
  std::size_t total = 0;
  for (const auto& [deg, weight] : oracle.strand_degrees(3)) total += weight * oracle.koszul_at(1, deg);
  CHECK(total == 8);
  OracleOptions plain;
  plain.row_symmetry = false;
  BettiOracle unsym(Clutter::complete(4, 2), plain);
  for (const auto& [deg, weight] : unsym.strand_degrees(3)) CHECK(weight == 1);
}

TEST_CASE("first syzygy oracle") {
  CHECK(betti_first_syzygy(Clutter::complete(3, 2), 4) == 0);
  CHECK(betti_first_syzygy(Clutter::complete(3, 2), 3) == 2);
  CHECK(betti_first_syzygy(path(), 4) == 1);
  for (const Clutter& c : {path(), Clutter::complete(4, 2), three_clutter()})
    CHECK(betti_first_syzygy(c, c.m()) == 0);
}

TEST_CASE("strand formula and length") {
  CHECK(strand_betti_formula(Clutter::complete(3, 2), 1) == 2);
  CHECK(strand_betti_formula(three_clutter(), 0) == 7);
  CHECK(strand_betti_formula(three_clutter(), 1) == 3);
  CHECK(strand_betti_formula(three_clutter(), 2) == 0);
  CHECK(strand_betti_formula(path(), 5) == 0);
  CHECK(strand_length(Clutter::complete(4, 2)) == 2);
  CHECK(strand_length(three_clutter()) == 1);
  CHECK(strand_length(path()) == 0);
}

TEST_CASE("default window") {
  CHECK(default_window(path()) == BettiWindow{1, 5});
  CHECK(default_window(Clutter::complete(4, 2)) == BettiWindow{2, 6});
  CHECK(default_window(three_clutter()) == BettiWindow{3, 8});
}

TEST_CASE("Betti tables") {
  const BettiTable t = betti_table(Clutter::complete(4, 2), 2, 5);
  CHECK(t.window == BettiWindow{2, 5});
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 5; ++j) {
      const std::size_t linear[] = {6, 8, 3};
      const std::size_t expected = j == i + 2 ? linear[i] : 0;
      CHECK(t.at(i, j) == expected);
    }
  CHECK_THROWS_AS(t.at(3, 5), std::out_of_range);

  const BettiTable p = betti_table(path(), 1, 4);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 4; ++j) {
      const bool nz = (i == 0 && j == 2) || (i == 1 && j == 4);
      CHECK(p.at(i, j) == (nz ? (i == 0 ? 2u : 1u) : 0u));
    }

  const BettiTable g = betti_table(three_clutter(), 0, 5);
  for (int j = 0; j <= 5; ++j) CHECK(g.at(0, j) == (j == 3 ? 7u : 0u));

  OracleOptions fp;
  fp.field = Field::prime();
  fp.jobs = 3;
  const BettiTable q = betti_table(Clutter::complete(4, 2), 2, 5, fp);
  CHECK(q.cells == t.cells);
  CHECK(q.field == Field::prime());
}

TEST_CASE("complete clutters follow the binomial formula") {
  for (int n = 2; n <= 5; ++n) {
    const Clutter c = Clutter::complete(n, 2);
    BettiOracle oracle(c);
    for (int i = 0; i <= n - 2; ++i)
      CHECK(oracle.koszul(i, i + 2) == binomial(n, 2 + i) * binomial(1 + i, 1));
  }
}

TEST_CASE("resource cap") {
  OracleOptions tiny;
  tiny.entry_cap = 10;
  CHECK_THROWS_AS(betti_koszul(Clutter::complete(4, 2), 1, 5, tiny), ResourceCapExceeded);
  CHECK_THROWS_AS(betti_first_syzygy(Clutter::complete(4, 2), 4, tiny), ResourceCapExceeded);
}
