#pragma once

// Exact rank and null space computations.
//
// Over F_p the engine is dense Gaussian elimination whose row updates run
// through the runtime-dispatched kernels in kernels.hpp. Over the rationals
// rows are scaled to integers and reduced by sparse fraction-free elimination:
// every row stays an integer vector and is divided by its content after each
// update. Pivots are chosen deterministically: columns left to right, and the
// smallest remaining row index holding a nonzero in the current column.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "linstrand/field.hpp"
#include "linstrand/kernels.hpp"

namespace linstrand {

/// Sparse integer matrix assembled entry by entry; duplicate positions accumulate.
class IntegerMatrix {
public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  void add(std::size_t row, std::size_t col, long long value);
  /// Merges duplicates and drops zeros; called implicitly by the rank routines.
  void compress();

  std::size_t nonzeros() const;
  const std::vector<std::pair<std::uint32_t, long long>>& column(std::size_t c) const { return columns_[c]; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> columns_;
};

class ScalarMatrix {
public:
  ScalarMatrix(std::size_t rows, std::size_t cols, Field field = Field::rational())
      : rows_(rows), cols_(cols), field_(field) {}
  ScalarMatrix(const IntegerMatrix& m, const Field& field);

  static ScalarMatrix identity(std::size_t k, const Field& field = Field::rational());

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const noexcept { return entries_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);

  /// A * v.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

std::size_t rank(const ScalarMatrix& a);
std::size_t rank(const IntegerMatrix& a, const Field& field);

struct RowEchelon {
  std::vector<std::size_t> pivots;  // pivot column of each row
  ScalarMatrix rows{0, 0};          // nonzero rows, pivot entries equal to 1
};

/// Reduced row echelon form with the deterministic pivot rule above.
RowEchelon reduced_row_echelon(const ScalarMatrix& a);

/// Basis of {v : A v = 0}; one vector per non-pivot column of the reduced
/// echelon form, with a 1 in that column.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& a);

namespace detail {

/// Dense row-major residues; entries are overwritten.
std::size_t rank_mod_p_dense(std::vector<std::uint32_t>& data, std::size_t rows, std::size_t cols,
                             std::uint32_t p, kernels::Isa isa = kernels::active_isa());

/// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> rref_mod_p_dense(std::vector<std::uint32_t>& data, std::size_t rows, std::size_t cols,
                                          std::uint32_t p, kernels::Isa isa = kernels::active_isa());

/// Sparse rows of (column, value), columns ascending, values nonzero.
using SparseIntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;
std::size_t rank_fraction_free(std::vector<SparseIntRow> rows);

}  // namespace detail

}  // namespace linstrand
