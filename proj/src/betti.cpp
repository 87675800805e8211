#include "linstrand/betti.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "linstrand/error.hpp"
#include "linstrand/parallel.hpp"

namespace linstrand {

namespace {

// Monomials are packed four bits per variable; variable v = l * n + j (0-based).
using Key = unsigned __int128;

constexpr int kBitsPerVar = 4;
constexpr int kMaxPackedVars = 32;
constexpr int kMaxDegree = 15;

inline Key var_key(int v) { return Key{1} << (kBitsPerVar * v); }

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

struct RowKey {
  std::uint32_t mask;
  Key mono;
  bool operator==(const RowKey&) const = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& r) const noexcept { return KeyHash{}(r.mono) ^ (r.mask * 0x94D049BB133111EBull); }
};

// Sparse integer columns with rows assigned on first use.
template <class RowId, class Hash>
class ColumnBuilder {
public:
  explicit ColumnBuilder(std::size_t cap, std::string where) : cap_(cap), where_(std::move(where)) {}

  void begin_column() { cols_.emplace_back(); }
  void add(const RowId& id, long long value) {
    auto [it, inserted] = rows_.try_emplace(id, static_cast<std::uint32_t>(rows_.size()));
    cols_.back().emplace_back(it->second, value);
    if (++entries_ > cap_) throw ResourceCapExceeded(where_, entries_, cap_);
  }
  std::size_t cols() const { return cols_.size(); }

  std::size_t rank(const Field& field) const {
    if (cols_.empty() || rows_.empty()) return 0;
    IntegerMatrix mat(rows_.size(), cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, v] : cols_[c]) mat.add(r, c, v);
    return linstrand::rank(mat, field);
  }

  const std::unordered_map<RowId, std::uint32_t, Hash>& row_ids() const { return rows_; }
  const std::vector<std::vector<std::pair<std::uint32_t, long long>>>& columns() const { return cols_; }

private:
  std::size_t cap_;
  std::string where_;
  std::size_t entries_ = 0;
  std::unordered_map<RowId, std::uint32_t, Hash> rows_;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> cols_;
};

// Appends every packed monomial with exponent-matrix margins (rows, cols).
void packed_margins(std::size_t cell, int n, std::vector<int>& rows, std::vector<int>& cols, Key acc,
                    std::vector<Key>& out) {
  const std::size_t m = rows.size();
  if (cell == m * static_cast<std::size_t>(n)) {
    out.push_back(acc);
    return;
  }
  const std::size_t l = cell / n, j = cell % n;
  const int hi = std::min(rows[l], cols[j]);
  const int lo = (j + 1 == static_cast<std::size_t>(n)) ? rows[l] : 0;
  for (int e = hi; e >= lo; --e) {
    rows[l] -= e;
    cols[j] -= e;
    packed_margins(cell + 1, n, rows, cols, acc + static_cast<Key>(e) * var_key(static_cast<int>(cell)), out);
    rows[l] += e;
    cols[j] += e;
  }
}

std::vector<Key> packed_monomials(const std::vector<int>& u, const std::vector<int>& gamma) {
  std::vector<Key> out;
  int su = 0, sg = 0;
  for (int v : u) {
    if (v < 0) return out;
    su += v;
  }
  for (int v : gamma) {
    if (v < 0) return out;
    sg += v;
  }
  if (su != sg) return out;
  std::vector<int> rows = u, cols = gamma;
  packed_margins(0, static_cast<int>(gamma.size()), rows, cols, 0, out);
  return out;
}

std::vector<int> degree_key(const Multidegree& d) {
  std::vector<int> k = d.u;
  k.insert(k.end(), d.gamma.begin(), d.gamma.end());
  return k;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int t = 2; t <= k; ++t) f *= static_cast<std::uint64_t>(t);
  return f;
}

// Distinct permutations of a vector.
std::uint64_t orbit_size(const std::vector<int>& u) {
  std::map<int, int> mult;
  for (int v : u) ++mult[v];
  std::uint64_t r = factorial(static_cast<int>(u.size()));
  for (const auto& [v, c] : mult) r /= factorial(c);
  return r;
}

void partitions_rec(int parts, int total, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const int left = parts - static_cast<int>(cur.size());
  for (int v = std::min(cap, total - (left - 1)); v >= 1; --v) {
    if (v * left < total) break;
    cur.push_back(v);
    partitions_rec(parts, total - v, v, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int parts, int total, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    if (total >= lo) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = lo; v <= total; ++v) {
    cur.push_back(v);
    compositions_rec(parts, total - v, lo, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int parts, int total, int lo) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (parts >= 1) compositions_rec(parts, total, lo, cur, out);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracle state

struct BettiOracle::Impl {
  int m = 0;
  int n = 0;
  struct Minor {
    std::vector<int> gamma;                     // indicator of the circuit
    std::vector<std::pair<int, Key>> terms;     // (sign, monomial)
  };
  std::vector<Minor> minors;

  std::mutex mutex;
  std::map<std::vector<int>, std::size_t> ideal_dims;

  struct Syzygies {
    std::vector<std::pair<std::size_t, Key>> basis;  // F_0 basis: (circuit index, monomial)
    std::size_t generator_count = 0;               // = basis.size()
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> kernel;
  };
  std::map<std::vector<int>, std::shared_ptr<const Syzygies>> syzygies;
  std::map<std::pair<int, int>, std::size_t> koszul_cells;
  std::map<int, std::size_t> syzygy_cells;
};

BettiOracle::BettiOracle(const Clutter& clutter, OracleOptions options)
    : clutter_(clutter), options_(std::move(options)), impl_(std::make_unique<Impl>()) {
  impl_->m = clutter_.m();
  impl_->n = clutter_.n();
  if (impl_->m * impl_->n > kMaxPackedVars)
    throw InvalidInput("Betti oracle supports at most " + std::to_string(kMaxPackedVars) + " variables");
  for (const auto& tau : clutter_.circuits()) {
    Impl::Minor minor;
    minor.gamma.assign(impl_->n, 0);
    for (int j : tau) minor.gamma[j - 1] = 1;
    const Polynomial p = maximal_minor(impl_->m, tau.vertices(), Field::rational(), impl_->n);
    for (const auto& [mono, c] : p.terms()) {
      Key k = 0;
      for (const auto& [v, e] : mono.terms()) k += static_cast<Key>(e) * var_key((v.row - 1) * impl_->n + v.col - 1);
      minor.terms.emplace_back(c.rational() > 0 ? 1 : -1, k);
    }
    impl_->minors.push_back(std::move(minor));
  }
}

BettiOracle::~BettiOracle() = default;

namespace {

bool fits(const std::vector<int>& small, const std::vector<int>& big) {
  for (std::size_t k = 0; k < small.size(); ++k)
    if (small[k] > big[k]) return false;
  return true;
}

// Generators mono * m_tau of (J_C)_E, as (circuit index, mono).
template <class F>
void for_each_generator(const BettiOracle::Impl& impl, const Multidegree& e, F&& f) {
  std::vector<int> u = e.u;
  for (int& v : u) --v;
  if (std::any_of(u.begin(), u.end(), [](int v) { return v < 0; })) return;
  for (std::size_t t = 0; t < impl.minors.size(); ++t) {
    const auto& g = impl.minors[t].gamma;
    if (!fits(g, e.gamma)) continue;
    std::vector<int> rest(e.gamma.size());
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = e.gamma[j] - g[j];
    for (Key mono : packed_monomials(u, rest)) f(t, mono);
  }
}

bool has_generator(const BettiOracle::Impl& impl, const Multidegree& e) {
  if (std::any_of(e.u.begin(), e.u.end(), [](int v) { return v < 1; })) return false;
  return std::any_of(impl.minors.begin(), impl.minors.end(), [&](const auto& mn) { return fits(mn.gamma, e.gamma); });
}

// Visits the ascending variable subsets T of size k with E = D - mdeg(T) able to
// hold a generator (every u-entry of E at least 1).
template <class F>
void for_each_subset(int m, int n, int k, const Multidegree& d, F&& f) {
  const int total = m * n;
  std::vector<int> vars;
  Multidegree e = d;
  std::uint32_t mask = 0;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(vars.size()) == k) {
      f(mask, vars, e);
      return;
    }
    for (int v = start; v <= total - (k - static_cast<int>(vars.size())); ++v) {
      const int l = v / n, j = v % n;
      if (e.u[l] <= 1 || e.gamma[j] <= 0) continue;
      --e.u[l];
      --e.gamma[j];
      vars.push_back(v);
      mask |= 1u << v;
      self(self, v + 1);
      mask &= ~(1u << v);
      vars.pop_back();
      ++e.u[l];
      ++e.gamma[j];
    }
  };
  rec(rec, 0);
}

}  // namespace

std::size_t BettiOracle::ideal_dim(const Multidegree& e) {
  if (!has_generator(*impl_, e)) return 0;
  const auto key = degree_key(e);
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->ideal_dims.find(key); it != impl_->ideal_dims.end()) return it->second;
  }
  ColumnBuilder<Key, KeyHash> b(options_.entry_cap, "ideal piece " + e.to_string());
  for_each_generator(*impl_, e, [&](std::size_t t, Key mono) {
    b.begin_column();
    for (const auto& [s, term] : impl_->minors[t].terms) b.add(mono + term, s);
  });
  const std::size_t dim = b.rank(options_.field);
  std::lock_guard lock(impl_->mutex);
  impl_->ideal_dims.emplace(key, dim);
  return dim;
}

std::size_t BettiOracle::koszul_at(int i, const Multidegree& d) {
  if (i < 0) return 0;
  const int m = impl_->m, n = impl_->n;
  if (static_cast<int>(d.u.size()) != m || static_cast<int>(d.gamma.size()) != n)
    throw InvalidInput("multidegree shape does not match the clutter");
  if (!d.nonnegative() || d.total() > kMaxDegree) {
    if (d.total() > kMaxDegree) throw InvalidInput("degree above " + std::to_string(kMaxDegree) + " unsupported");
    return 0;
  }
  const int total = d.total();
  if (total - i < m) return 0;

  std::size_t dim_here = 0;
  for_each_subset(m, n, i, d, [&](std::uint32_t, const std::vector<int>&, const Multidegree& e) {
    dim_here += ideal_dim(e);
  });
  if (dim_here == 0) return 0;

  // rank of the Koszul differential out of position k, built on spanning sets.
  auto koszul_rank = [&](int k) -> std::size_t {
    if (k < 1 || total - k < m) return 0;
    ColumnBuilder<RowKey, RowKeyHash> b(options_.entry_cap, "Koszul piece i=" + std::to_string(k) + " " + d.to_string());
    for_each_subset(m, n, k, d, [&](std::uint32_t mask, const std::vector<int>& vars, const Multidegree& e) {
      for_each_generator(*impl_, e, [&](std::size_t t, Key mono) {
        b.begin_column();
        for (std::size_t p = 0; p < vars.size(); ++p) {
          const int sign = (p % 2 == 0) ? 1 : -1;
          const std::uint32_t rest = mask & ~(1u << vars[p]);
          const Key shifted = mono + var_key(vars[p]);
          for (const auto& [s, term] : impl_->minors[t].terms) b.add(RowKey{rest, shifted + term}, sign * s);
        }
      });
    });
    return b.rank(options_.field);
  };

  const std::size_t out = koszul_rank(i);
  const std::size_t in = koszul_rank(i + 1);
  return dim_here - out - in;
}

std::vector<std::pair<Multidegree, std::uint64_t>> BettiOracle::strand_degrees(int j) const {
  const int m = impl_->m, n = impl_->n;
  std::vector<std::pair<Multidegree, std::uint64_t>> out;
  if (j < m) return out;
  std::vector<std::vector<int>> us;
  if (options_.row_symmetry) {
    std::vector<int> cur;
    partitions_rec(m, j, j, cur, us);
  } else {
    us = compositions(m, j, 1);
  }
  const auto gammas = compositions(n, j, 0);
  for (const auto& u : us) {
    const std::uint64_t w = options_.row_symmetry ? orbit_size(u) : 1;
    for (const auto& g : gammas) {
      Multidegree d{u, g};
      if (!has_generator(*impl_, d)) continue;
      out.emplace_back(std::move(d), w);
    }
  }
  return out;
}

std::size_t BettiOracle::koszul(int i, int j) {
  if (i < 0 || j < 0) throw InvalidInput("Betti indices must be nonnegative");
  if (j > kMaxDegree) throw InvalidInput("degree above " + std::to_string(kMaxDegree) + " unsupported");
  if (j < i + clutter_.m()) return 0;
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->koszul_cells.find({i, j}); it != impl_->koszul_cells.end()) return it->second;
  }
  const auto degrees = strand_degrees(j);
  std::vector<std::size_t> values(degrees.size(), 0);
  parallel_for(degrees.size(), options_.jobs, [&](std::size_t k) { values[k] = koszul_at(i, degrees[k].first); });
  std::size_t sum = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) sum += values[k] * degrees[k].second;
  std::lock_guard lock(impl_->mutex);
  impl_->koszul_cells.emplace(std::make_pair(i, j), sum);
  return sum;
}

// ---------------------------------------------------------------------------
// First syzygies

namespace {

std::shared_ptr<const BettiOracle::Impl::Syzygies> compute_syzygies(const BettiOracle::Impl& impl,
                                                                     const Multidegree& e, const Field& field,
                                                                     std::size_t cap) {
  auto z = std::make_shared<BettiOracle::Impl::Syzygies>();
  ColumnBuilder<Key, KeyHash> b(cap, "syzygy piece " + e.to_string());
  for_each_generator(impl, e, [&](std::size_t t, Key mono) {
    z->basis.emplace_back(t, mono);
    b.begin_column();
    for (const auto& [s, term] : impl.minors[t].terms) b.add(mono + term, s);
  });
  z->generator_count = z->basis.size();
  if (z->basis.empty()) return z;
  IntegerMatrix mat(b.row_ids().size(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [r, v] : b.columns()[c]) mat.add(r, c, v);
  mat.compress();
  for (auto& vec : kernel_basis(ScalarMatrix(mat, field))) {
    std::vector<std::pair<std::size_t, Scalar>> sparse;
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (!vec[k].is_zero()) sparse.emplace_back(k, vec[k]);
    z->kernel.push_back(std::move(sparse));
  }
  return z;
}

}  // namespace

std::size_t BettiOracle::first_syzygy_at(const Multidegree& d) {
  const int m = impl_->m, n = impl_->n;
  if (static_cast<int>(d.u.size()) != m || static_cast<int>(d.gamma.size()) != n)
    throw InvalidInput("multidegree shape does not match the clutter");
  if (!d.nonnegative() || d.total() <= m) return 0;
  if (d.total() > kMaxDegree) throw InvalidInput("degree above " + std::to_string(kMaxDegree) + " unsupported");

  auto syz = [&](const Multidegree& e) {
    const auto key = degree_key(e);
    {
      std::lock_guard lock(impl_->mutex);
      if (auto it = impl_->syzygies.find(key); it != impl_->syzygies.end()) return it->second;
    }
    auto z = compute_syzygies(*impl_, e, options_.field, options_.entry_cap);
    std::lock_guard lock(impl_->mutex);
    return impl_->syzygies.emplace(key, std::move(z)).first->second;
  };

  const auto here = syz(d);
  if (here->kernel.empty()) return 0;
  std::map<std::pair<std::size_t, Key>, std::size_t> index;
  for (std::size_t k = 0; k < here->basis.size(); ++k) index.emplace(here->basis[k], k);

  // Span of x_v * Z_{D - mdeg x_v} inside F_0 in degree D.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> products;
  std::size_t entries = 0;
  for (int v = 0; v < m * n; ++v) {
    const int l = v / n, j = v % n;
    Multidegree e = d;
    if (--e.u[l] < 0 || --e.gamma[j] < 0) continue;
    const auto lower = syz(e);
    for (const auto& z : lower->kernel) {
      std::vector<std::pair<std::size_t, Scalar>> row;
      for (const auto& [k, c] : z) {
        const auto& [t, mono] = lower->basis[k];
        row.emplace_back(index.at({t, mono + var_key(v)}), c);
      }
      entries += row.size();
      if (entries > options_.entry_cap) throw ResourceCapExceeded("syzygy products " + d.to_string(), entries, options_.entry_cap);
      products.push_back(std::move(row));
    }
  }
  ScalarMatrix mat(products.size(), here->basis.size(), options_.field);
  for (std::size_t r = 0; r < products.size(); ++r)
    for (const auto& [c, v] : products[r]) mat.set(r, c, v);
  return here->kernel.size() - rank(mat);
}

std::size_t BettiOracle::first_syzygy(int j) {
  if (j < 0) throw InvalidInput("degree must be nonnegative");
  if (j > kMaxDegree) throw InvalidInput("degree above " + std::to_string(kMaxDegree) + " unsupported");
  if (j <= clutter_.m()) return 0;
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->syzygy_cells.find(j); it != impl_->syzygy_cells.end()) return it->second;
  }
  const auto degrees = strand_degrees(j);
  std::vector<std::size_t> values(degrees.size(), 0);
  parallel_for(degrees.size(), options_.jobs, [&](std::size_t k) { values[k] = first_syzygy_at(degrees[k].first); });
  std::size_t sum = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) sum += values[k] * degrees[k].second;
  std::lock_guard lock(impl_->mutex);
  impl_->syzygy_cells.emplace(j, sum);
  return sum;
}

// ---------------------------------------------------------------------------
// Free functions

IdealPiece ideal_piece(const Clutter& clutter, int d, const Field& field) {
  if (d < 0) throw InvalidInput("degree must be nonnegative");
  const int m = clutter.m(), n = clutter.n();
  IdealPiece piece;
  piece.degree = d;
  piece.monomials = monomials_of_degree(m, n, d);
  piece.basis = RowEchelon{{}, ScalarMatrix(0, piece.monomials.size(), field)};
  if (d < m) return piece;
  std::map<Monomial, std::size_t> col;
  for (std::size_t k = 0; k < piece.monomials.size(); ++k) col.emplace(piece.monomials[k], k);
  const auto multipliers = monomials_of_degree(m, n, d - m);
  ScalarMatrix gens(clutter.circuits().size() * multipliers.size(), piece.monomials.size(), field);
  std::size_t r = 0;
  for (const auto& tau : clutter.circuits()) {
    const Polynomial minor = maximal_minor(m, tau.vertices(), field, n);
    for (const auto& u : multipliers) {
      for (const auto& [mono, c] : minor.terms()) gens.add(r, col.at(u * mono), c);
      ++r;
    }
  }
  piece.basis = reduced_row_echelon(gens);
  piece.dimension = piece.basis.pivots.size();
  return piece;
}

std::size_t betti_koszul(const Clutter& clutter, int i, int j, const OracleOptions& options) {
  BettiOracle oracle(clutter, options);
  return oracle.koszul(i, j);
}

std::size_t betti_first_syzygy(const Clutter& clutter, int j, const OracleOptions& options) {
  BettiOracle oracle(clutter, options);
  return oracle.first_syzygy(j);
}

std::uint64_t strand_betti_formula(const Clutter& clutter, int i) {
  if (i < 0) throw InvalidInput("homological index must be nonnegative");
  const int m = clutter.m();
  const FVector f = f_vector(clique_complex(clutter));
  return binomial(m + i - 1, m - 1) * f.at_dim(m + i - 1);
}

int strand_length(const Clutter& clutter) { return clique_complex(clutter).dim() - clutter.m() + 1; }

BettiWindow default_window(const Clutter& clutter) {
  const int m = clutter.m();
  const int i_max = std::max(0, std::min(clutter.n() - m, clique_complex(clutter).dim() - m + 3));
  return {i_max, i_max + m + 2};
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = cells.find({i, j});
  if (it == cells.end()) throw std::out_of_range("Betti cell outside the computed window");
  return it->second;
}

BettiTable betti_table(BettiOracle& oracle, int i_max, int j_max) {
  if (i_max < 0 || j_max < 0) throw InvalidInput("window bounds must be nonnegative");
  BettiTable table;
  table.field = oracle.options().field;
  table.m = oracle.clutter().m();
  table.window = {i_max, j_max};
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j) table.cells[{i, j}] = (j < i + table.m) ? 0 : oracle.koszul(i, j);
  return table;
}

BettiTable betti_table(const Clutter& clutter, int i_max, int j_max, const OracleOptions& options) {
  BettiOracle oracle(clutter, options);
  return betti_table(oracle, i_max, j_max);
}

}  // namespace linstrand
