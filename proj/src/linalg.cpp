#include "linstrand/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace linstrand {

// ---------------------------------------------------------------------------
// Matrix containers

void IntegerMatrix::add(std::size_t row, std::size_t col, long long value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("IntegerMatrix index out of range");
  if (value != 0) columns_[col].emplace_back(static_cast<std::uint32_t>(row), value);
}

void IntegerMatrix::compress() {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < col.size();) {
      auto row = col[k].first;
      long long sum = 0;
      for (; k < col.size() && col[k].first == row; ++k) sum += col[k].second;
      if (sum != 0) col[out++] = {row, sum};
    }
    col.resize(out);
  }
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

ScalarMatrix::ScalarMatrix(const IntegerMatrix& m, const Field& field)
    : rows_(m.rows()), cols_(m.cols()), field_(field) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) add(r, c, Scalar(field, v));
}

ScalarMatrix ScalarMatrix::identity(std::size_t k, const Field& field) {
  ScalarMatrix id(k, k, field);
  for (std::size_t i = 0; i < k; ++i) id.set(i, i, Scalar::one(field));
  return id;
}

Scalar ScalarMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void ScalarMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ScalarMatrix index out of range");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_.insert_or_assign({r, c}, v);
}

void ScalarMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ScalarMatrix index out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (const auto& [rc, x] : entries_) out[rc.first] += x * v[rc.second];
  return out;
}

// ---------------------------------------------------------------------------
// Engines

namespace detail {

std::size_t rank_mod_p_dense(std::vector<std::uint32_t>& data, std::size_t rows, std::size_t cols,
                             std::uint32_t p, kernels::Isa isa) {
  const auto axpy = kernels::select_axpy(p, isa);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (data[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       data.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       data.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const std::uint32_t* prow = data.data() + rank * cols;
    const std::uint64_t inv = mod_inverse(prow[col], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = data.data() + r * cols;
      if (row[col] == 0) continue;
      const auto factor = static_cast<std::uint32_t>(row[col] * inv % p);
      axpy(row + col, prow + col, p - factor, cols - col, p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> rref_mod_p_dense(std::vector<std::uint32_t>& data, std::size_t rows, std::size_t cols,
                                          std::uint32_t p, kernels::Isa isa) {
  const auto axpy = kernels::select_axpy(p, isa);
  const auto scale = kernels::select_scale(p, isa);
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (data[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       data.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       data.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    std::uint32_t* prow = data.data() + rank * cols;
    scale(prow + col, mod_inverse(prow[col], p), cols - col, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint32_t* row = data.data() + r * cols;
      if (row[col] == 0) continue;
      axpy(row + col, prow + col, p - row[col], cols - col, p);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

namespace {

void make_primitive(SparseIntRow& row) {
  if (row.empty()) return;
  mpz_class g = abs(row.front().second);
  for (std::size_t k = 1; k < row.size() && g != 1; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[k].second.get_mpz_t());
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target = a * target - b * pivot, where a = pivot lead, b = target lead; the
// leading entry cancels.
SparseIntRow eliminate(const SparseIntRow& target, const SparseIntRow& pivot) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), target.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  const mpz_class a = pivot.front().second / g;
  const mpz_class b = target.front().second / g;
  SparseIntRow out;
  out.reserve(target.size() + pivot.size());
  auto t = target.begin() + 1, q = pivot.begin() + 1;
  mpz_class v;
  while (t != target.end() || q != pivot.end()) {
    if (q == pivot.end() || (t != target.end() && t->first < q->first)) {
      out.emplace_back(t->first, a * t->second);
      ++t;
    } else if (t == target.end() || q->first < t->first) {
      out.emplace_back(q->first, -b * q->second);
      ++q;
    } else {
      v = a * t->second - b * q->second;
      if (v != 0) out.emplace_back(t->first, v);
      ++t;
      ++q;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

std::size_t rank_fraction_free(std::vector<SparseIntRow> rows) {
  // Bucket rows by leading column; process columns left to right.
  std::map<std::uint32_t, std::vector<std::size_t>> by_lead;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    make_primitive(rows[r]);
    by_lead[rows[r].front().first].push_back(r);
  }
  std::size_t rank = 0;
  while (!by_lead.empty()) {
    auto node = by_lead.extract(by_lead.begin());
    auto& bucket = node.mapped();
    std::sort(bucket.begin(), bucket.end());
    const std::size_t pivot = bucket.front();
    ++rank;
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      auto& row = rows[bucket[k]];
      row = eliminate(row, rows[pivot]);
      if (!row.empty()) by_lead[row.front().first].push_back(bucket[k]);
    }
    rows[pivot].clear();
    rows[pivot].shrink_to_fit();
  }
  return rank;
}

}  // namespace detail

namespace {

std::vector<std::uint32_t> dense_residues(const ScalarMatrix& a) {
  std::vector<std::uint32_t> data(a.rows() * a.cols(), 0);
  for (const auto& [rc, v] : a.entries()) data[rc.first * a.cols() + rc.second] = v.residue();
  return data;
}

std::vector<detail::SparseIntRow> integer_rows(const ScalarMatrix& a) {
  // Row scaling by the lcm of denominators preserves rank.
  std::vector<std::vector<std::pair<std::uint32_t, const mpq_class*>>> rows(a.rows());
  for (const auto& [rc, v] : a.entries()) rows[rc.first].emplace_back(static_cast<std::uint32_t>(rc.second), &v.rational());
  std::vector<detail::SparseIntRow> out(a.rows());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    mpz_class l = 1;
    for (const auto& [c, q] : rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
    for (const auto& [c, q] : rows[r]) out[r].emplace_back(c, q->get_num() * (l / q->get_den()));
  }
  return out;
}

}  // namespace

std::size_t rank(const ScalarMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0 || a.nonzeros() == 0) return 0;
  if (a.field().is_rational()) return detail::rank_fraction_free(integer_rows(a));
  auto data = dense_residues(a);
  return detail::rank_mod_p_dense(data, a.rows(), a.cols(), a.field().characteristic());
}

std::size_t rank(const IntegerMatrix& input, const Field& field) {
  if (input.rows() == 0 || input.cols() == 0) return 0;
  IntegerMatrix a = input;
  a.compress();
  if (a.nonzeros() == 0) return 0;
  if (field.is_rational()) {
    // Eliminate along the shorter dimension; rows here are matrix columns.
    std::vector<detail::SparseIntRow> rows(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (const auto& [r, v] : a.column(c)) rows[c].emplace_back(r, mpz_class(static_cast<long>(v)));
    return detail::rank_fraction_free(std::move(rows));
  }
  const auto p = field.characteristic();
  // Dense storage with the smaller dimension as row count.
  const bool transpose = a.cols() < a.rows();
  const std::size_t rows = transpose ? a.cols() : a.rows();
  const std::size_t cols = transpose ? a.rows() : a.cols();
  std::vector<std::uint32_t> data(rows * cols, 0);
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (const auto& [r, v] : a.column(c)) {
      const std::size_t idx = transpose ? c * cols + r : static_cast<std::size_t>(r) * cols + c;
      data[idx] = reduce_mod(v, p);
    }
  return detail::rank_mod_p_dense(data, rows, cols, p);
}

RowEchelon reduced_row_echelon(const ScalarMatrix& a) {
  const Field& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  RowEchelon out{{}, ScalarMatrix(0, cols, f)};
  if (!f.is_rational()) {
    auto data = dense_residues(a);
    out.pivots = rows ? detail::rref_mod_p_dense(data, rows, cols, f.characteristic()) : std::vector<std::size_t>{};
    out.rows = ScalarMatrix(out.pivots.size(), cols, f);
    for (std::size_t k = 0; k < out.pivots.size(); ++k)
      for (std::size_t c = 0; c < cols; ++c)
        if (const auto x = data[k * cols + c]) out.rows.set(k, c, Scalar(f, static_cast<long long>(x)));
    return out;
  }

  // Rational reduced echelon form on sparse rows of mpq.
  using Row = std::map<std::size_t, mpq_class>;
  std::vector<Row> m(rows);
  for (const auto& [rc, v] : a.entries()) m[rc.first][rc.second] = v.rational();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r].count(col)) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const mpq_class inv = 1 / m[rank][col];
    for (auto& [c, v] : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto it = m[r].find(col);
      if (it == m[r].end()) continue;
      const mpq_class factor = it->second;
      for (const auto& [c, v] : m[rank]) {
        auto& t = m[r][c];
        t -= factor * v;
        if (sgn(t) == 0) m[r].erase(c);
      }
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.rows = ScalarMatrix(rank, cols, f);
  for (std::size_t k = 0; k < rank; ++k)
    for (const auto& [c, v] : m[k]) out.rows.set(k, c, Scalar(f, v));
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& a) {
  const Field& f = a.field();
  const std::size_t cols = a.cols();
  const RowEchelon e = reduced_row_echelon(a);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col(cols);
  for (const auto& [rc, v] : e.rows.entries()) by_col[rc.second].emplace_back(rc.first, v);
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (const auto& [k, x] : by_col[free]) v[e.pivots[k]] = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linstrand
