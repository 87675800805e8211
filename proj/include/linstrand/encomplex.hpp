#pragma once

// The generalized Eagon-Northcott complex C(Delta; X) of a simplicial complex
// Delta and the generic m x n matrix X.
//
// Component i has basis b(sigma; a) with sigma a face of Delta of cardinality
// m + i and a in Z^m_{>=0} with |a| = i. The differential is
//
//   d b(sigma; a) = sum_{k=1}^{m+i} sum_{l : a_l > 0} (-1)^{k+1} x_{l, j_k} b(sigma \ j_k; a - e_l)
//
// with sigma = {j_1 < ... < j_{m+i}}. The complex is Z^m x Z^n graded by
// mdeg x_{l j} = (e_l, eps_j) and mdeg b(sigma; a) = (a + 1, indicator of sigma).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linstrand/combinatorics.hpp"
#include "linstrand/field.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/polynomial.hpp"

namespace linstrand {

struct BasisElement {
  Face sigma;
  std::vector<int> a;

  /// Homological index |a|.
  int index() const;
  /// sigma first (shortlex), then a lexicographically.
  auto operator<=>(const BasisElement&) const = default;
  std::string to_string() const;
};

struct Multidegree {
  std::vector<int> u;      // Z^m part
  std::vector<int> gamma;  // Z^n part

  int total() const;  // |u|; equals |gamma| for every homogeneous element
  bool nonnegative() const;
  auto operator<=>(const Multidegree&) const = default;
  Multidegree& operator+=(const Multidegree& o);
  Multidegree& operator-=(const Multidegree& o);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }

  /// "(u1,..,um;g1,..,gn)"
  std::string to_string() const;
  /// Inverse of to_string; also accepts "u1,..,um;g1,..,gn". Throws InvalidInput.
  static Multidegree parse(const std::string& text, int m, int n);
};

Multidegree mdeg(const BasisElement& b, int n);
Multidegree mdeg(Variable v, int m, int n);
Multidegree mdeg(const Monomial& mono, int m, int n);

/// One differential matrix entry: sign * x_{row_var, col_var} at (row, col).
struct DiffEntry {
  std::size_t row;
  std::size_t col;
  int sign;
  Variable variable;
};

class GENComplex {
public:
  GENComplex(const SimplicialComplex& delta, int m);

  int m() const noexcept { return m_; }
  int n() const noexcept { return delta_.n(); }
  const SimplicialComplex& delta() const noexcept { return delta_; }

  /// Largest index with a nonzero component; -1 for the zero complex.
  int top() const noexcept { return static_cast<int>(bases_.size()) - 1; }
  bool empty() const noexcept { return bases_.empty(); }

  /// Basis of component i in canonical order (empty outside 0..top).
  const std::vector<BasisElement>& basis(int i) const;
  std::size_t rank(int i) const { return basis(i).size(); }
  std::vector<std::size_t> ranks() const;
  std::optional<std::size_t> index_of(const BasisElement& b) const;

  /// Entries of d_i : C_i -> C_{i-1}, sorted by column. Requires 1 <= i <= top.
  const std::vector<DiffEntry>& entries(int i) const;
  /// Offsets into entries(i): column c occupies [offsets[c], offsets[c+1]).
  const std::vector<std::size_t>& column_offsets(int i) const;

private:
  SimplicialComplex delta_;
  int m_;
  std::vector<std::vector<BasisElement>> bases_;
  std::vector<std::map<BasisElement, std::size_t>> index_;
  std::vector<std::vector<DiffEntry>> diffs_;  // diffs_[i] for i >= 1
  std::vector<std::vector<std::size_t>> offsets_;
};

GENComplex build(const SimplicialComplex& delta, int m);

/// d_i as a polynomial matrix from C_i (columns) to C_{i-1} (rows).
/// Throws std::out_of_range unless 1 <= i <= top.
PolyMatrix differential(const GENComplex& complex, int i, const Field& field = Field::rational());

struct SymbolicCheck {
  bool ok = true;
  std::optional<std::string> offending;
};

/// Composes consecutive differentials over the polynomial ring.
SymbolicCheck d_squared_zero(const GENComplex& complex);
/// Checks psi o d_1 = 0 where psi(b(sigma; 0)) is the maximal minor on sigma.
SymbolicCheck augmentation_check(const GENComplex& complex);

/// (basis element, monomial) pair spanning the degree-d piece of a component.
struct PieceElement {
  std::size_t basis_index;
  Monomial monomial;
  bool operator==(const PieceElement&) const = default;
};

std::vector<PieceElement> graded_piece(const GENComplex& complex, int i, const Multidegree& d);

/// d_i restricted to degree d, graded_piece bases on both sides.
ScalarMatrix scalar_differential(const GENComplex& complex, int i, const Multidegree& d,
                                 const Field& field = Field::rational());

std::size_t homology_dim(const GENComplex& complex, int i, const Multidegree& d,
                         const Field& field = Field::rational());

/// Degrees mdeg(b) + (shift variable degrees) for b in component i, sorted.
/// shift is 0 or 1.
std::vector<Multidegree> reachable_degrees(const GENComplex& complex, int i, int shift);

struct HomologyWitness {
  int i;
  int shift;
  Multidegree degree;
  std::size_t dim;
};

struct VanishingReport {
  bool vanishes = true;
  std::optional<HomologyWitness> witness;
  std::size_t degrees_checked = 0;
};

/// H_i(C)_d = 0 for every 1 <= i <= n - m and every reachable d with internal
/// degree i + m + shift.
VanishingReport vanishing_in_shift(const GENComplex& complex, int shift, const Field& field = Field::rational(),
                                   int jobs = 1);

/// Both shifts 0 and 1: the linear-strand criterion.
VanishingReport vanishing_check(const SimplicialComplex& delta, int m, const Field& field = Field::rational(),
                                int jobs = 1);

}  // namespace linstrand
