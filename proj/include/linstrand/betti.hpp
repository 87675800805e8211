#pragma once

// Graded Betti numbers of determinantal facet ideals J_C.
//
// beta_{i,j}(J_C) is computed as the homology at position i of the degree-j
// strand of the Koszul complex on all m*n variables with coefficients in J_C:
//
//   e_T (x) f  ->  sum_k (-1)^{k+1} x_{t_k} e_{T \ t_k} (x) f.
//
// J_C is Z^m x Z^n graded, so each strand splits into multigraded pieces that
// are solved independently. Both the Koszul complex and J_C are stable under
// permuting the rows of the generic matrix (minors change by a sign), so by
// default only pieces whose Z^m part is nonincreasing are solved, each weighted
// by the number of its distinct row permutations.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linstrand/combinatorics.hpp"
#include "linstrand/encomplex.hpp"
#include "linstrand/field.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/polynomial.hpp"

namespace linstrand {

inline constexpr std::size_t kDefaultEntryCap = 2'000'000;

struct OracleOptions {
  Field field = Field::rational();
  int jobs = 1;
  /// Maximum nonzero entries of any single matrix; exceeding it throws ResourceCapExceeded.
  std::size_t entry_cap = kDefaultEntryCap;
  /// Solve one representative per row-permutation orbit of multidegrees.
  bool row_symmetry = true;
};

/// (J_C)_d inside the coordinate space of all degree-d monomials.
struct IdealPiece {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<Monomial> monomials;  // coordinate order
  RowEchelon basis;                 // rows span (J_C)_d
};

/// Echelon basis of (J_C)_d. Dense in the monomial basis, so meant for small m*n and d.
IdealPiece ideal_piece(const Clutter& clutter, int d, const Field& field = Field::rational());

class BettiOracle {
public:
  explicit BettiOracle(const Clutter& clutter, OracleOptions options = {});
  ~BettiOracle();
  BettiOracle(const BettiOracle&) = delete;
  BettiOracle& operator=(const BettiOracle&) = delete;

  const Clutter& clutter() const noexcept { return clutter_; }
  const OracleOptions& options() const noexcept { return options_; }

  /// beta_{i,j} by Koszul homology.
  std::size_t koszul(int i, int j);
  /// Multigraded Koszul Betti number beta_{i,D}.
  std::size_t koszul_at(int i, const Multidegree& degree);
  /// beta_{1,j} as minimal generators of the first syzygy module in degree j.
  std::size_t first_syzygy(int j);
  std::size_t first_syzygy_at(const Multidegree& degree);

  /// dim (J_C)_E for a multidegree E.
  std::size_t ideal_dim(const Multidegree& degree);

  /// Multidegrees of total degree j solved for a strand, with the weight each
  /// contributes (1 unless row symmetry is on).
  std::vector<std::pair<Multidegree, std::uint64_t>> strand_degrees(int j) const;

  struct Impl;

private:
  Clutter clutter_;
  OracleOptions options_;
  std::unique_ptr<Impl> impl_;
};

std::size_t betti_koszul(const Clutter& clutter, int i, int j, const OracleOptions& options = {});
std::size_t betti_first_syzygy(const Clutter& clutter, int j, const OracleOptions& options = {});

/// C(m+i-1, m-1) * f_{m+i-1}(clique complex).
std::uint64_t strand_betti_formula(const Clutter& clutter, int i);
/// dim(clique complex) - m + 1.
int strand_length(const Clutter& clutter);

struct BettiWindow {
  int i_max = 0;
  int j_max = 0;
  bool operator==(const BettiWindow&) const = default;
};

/// i_max = min(n - m, dim(clique complex) - m + 3), j_max = i_max + m + 2.
BettiWindow default_window(const Clutter& clutter);

struct BettiTable {
  Field field = Field::rational();
  int m = 1;
  BettiWindow window;
  std::map<std::pair<int, int>, std::size_t> cells;  // every (i, j) in the window

  std::size_t at(int i, int j) const;
  bool operator==(const BettiTable&) const = default;
};

/// Fills 0 <= i <= i_max, 0 <= j <= j_max. Cells with j < i + m are zero for
/// degree reasons and are not computed.
BettiTable betti_table(const Clutter& clutter, int i_max, int j_max, const OracleOptions& options = {});
BettiTable betti_table(BettiOracle& oracle, int i_max, int j_max);

}  // namespace linstrand
