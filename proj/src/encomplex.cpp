#include "linstrand/encomplex.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linstrand/error.hpp"
#include "linstrand/parallel.hpp"

namespace linstrand {

namespace {

// Compositions of total into parts nonnegative entries, lexicographically ascending.
void compositions_rec(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions_rec(parts, total - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_rec(parts, total, cur, out);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// BasisElement, Multidegree

int BasisElement::index() const { return std::accumulate(a.begin(), a.end(), 0); }

std::string BasisElement::to_string() const { return "b(" + sigma.to_string() + ";(" + join(a) + "))"; }

int Multidegree::total() const { return std::accumulate(u.begin(), u.end(), 0); }

bool Multidegree::nonnegative() const {
  return std::all_of(u.begin(), u.end(), [](int v) { return v >= 0; }) &&
         std::all_of(gamma.begin(), gamma.end(), [](int v) { return v >= 0; });
}

Multidegree& Multidegree::operator+=(const Multidegree& o) {
  if (u.size() != o.u.size() || gamma.size() != o.gamma.size())
    throw std::invalid_argument("multidegree shape mismatch");
  for (std::size_t k = 0; k < u.size(); ++k) u[k] += o.u[k];
  for (std::size_t k = 0; k < gamma.size(); ++k) gamma[k] += o.gamma[k];
  return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& o) {
  if (u.size() != o.u.size() || gamma.size() != o.gamma.size())
    throw std::invalid_argument("multidegree shape mismatch");
  for (std::size_t k = 0; k < u.size(); ++k) u[k] -= o.u[k];
  for (std::size_t k = 0; k < gamma.size(); ++k) gamma[k] -= o.gamma[k];
  return *this;
}

std::string Multidegree::to_string() const { return "(" + join(u) + ";" + join(gamma) + ")"; }

Multidegree Multidegree::parse(const std::string& text, int m, int n) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw InvalidInput("multidegree must look like u1,..,um;g1,..,gn: " + text);
  auto parse_list = [&](const std::string& part, int expected) {
    std::vector<int> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InvalidInput("bad multidegree entry '" + item + "' in " + text);
      }
    }
    if (static_cast<int>(out.size()) != expected)
      throw InvalidInput("multidegree " + text + " needs " + std::to_string(expected) + " entries per part");
    return out;
  };
  return Multidegree{parse_list(s.substr(0, semi), m), parse_list(s.substr(semi + 1), n)};
}

Multidegree mdeg(const BasisElement& b, int n) {
  Multidegree d{std::vector<int>(b.a.size()), std::vector<int>(n, 0)};
  for (std::size_t l = 0; l < b.a.size(); ++l) d.u[l] = b.a[l] + 1;
  for (int j : b.sigma) d.gamma.at(j - 1) = 1;
  return d;
}

Multidegree mdeg(Variable v, int m, int n) {
  Multidegree d{std::vector<int>(m, 0), std::vector<int>(n, 0)};
  d.u.at(v.row - 1) = 1;
  d.gamma.at(v.col - 1) = 1;
  return d;
}

Multidegree mdeg(const Monomial& mono, int m, int n) {
  Multidegree d{std::vector<int>(m, 0), std::vector<int>(n, 0)};
  for (const auto& [v, e] : mono.terms()) {
    d.u.at(v.row - 1) += static_cast<int>(e);
    d.gamma.at(v.col - 1) += static_cast<int>(e);
  }
  return d;
}

// ---------------------------------------------------------------------------
// GENComplex

GENComplex::GENComplex(const SimplicialComplex& delta, int m) : delta_(delta), m_(m) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  for (int i = 0;; ++i) {
    const auto faces = delta_.faces_of_size(static_cast<std::size_t>(m + i));
    if (faces.empty()) break;
    const auto as = compositions(m, i);
    std::vector<BasisElement> basis;
    basis.reserve(faces.size() * as.size());
    for (const auto& f : faces)
      for (const auto& a : as) basis.push_back(BasisElement{f, a});
    std::map<BasisElement, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    bases_.push_back(std::move(basis));
    index_.push_back(std::move(index));
  }

  diffs_.resize(bases_.size());
  offsets_.resize(bases_.size());
  for (std::size_t i = 1; i < bases_.size(); ++i) {
    auto& entries = diffs_[i];
    auto& offsets = offsets_[i];
    offsets.push_back(0);
    for (std::size_t c = 0; c < bases_[i].size(); ++c) {
      const auto& b = bases_[i][c];
      const auto& verts = b.sigma.vertices();
      for (std::size_t k = 0; k < verts.size(); ++k) {
        std::vector<int> rest;
        rest.reserve(verts.size() - 1);
        for (std::size_t t = 0; t < verts.size(); ++t)
          if (t != k) rest.push_back(verts[t]);
        Face face(std::move(rest));
        for (int l = 0; l < m_; ++l) {
          if (b.a[l] == 0) continue;
          BasisElement target{face, b.a};
          --target.a[l];
          const std::size_t row = index_[i - 1].at(target);
          entries.push_back(DiffEntry{row, c, (k % 2 == 0) ? 1 : -1, Variable{l + 1, verts[k]}});
        }
      }
      offsets.push_back(entries.size());
    }
  }
}

const std::vector<BasisElement>& GENComplex::basis(int i) const {
  static const std::vector<BasisElement> none;
  if (i < 0 || i > top()) return none;
  return bases_[i];
}

std::vector<std::size_t> GENComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& b : bases_) r.push_back(b.size());
  return r;
}

std::optional<std::size_t> GENComplex::index_of(const BasisElement& b) const {
  const int i = b.index();
  if (i < 0 || i > top()) return std::nullopt;
  auto it = index_[i].find(b);
  if (it == index_[i].end()) return std::nullopt;
  return it->second;
}

const std::vector<DiffEntry>& GENComplex::entries(int i) const {
  if (i < 1 || i > top()) throw std::out_of_range("differential index " + std::to_string(i) + " out of range");
  return diffs_[i];
}

const std::vector<std::size_t>& GENComplex::column_offsets(int i) const {
  if (i < 1 || i > top()) throw std::out_of_range("differential index " + std::to_string(i) + " out of range");
  return offsets_[i];
}

GENComplex build(const SimplicialComplex& delta, int m) { return GENComplex(delta, m); }

PolyMatrix differential(const GENComplex& complex, int i, const Field& field) {
  const auto& entries = complex.entries(i);
  PolyMatrix d(complex.rank(i - 1), complex.rank(i), field);
  for (const auto& e : entries)
    d.add(e.row, e.col, Polynomial::term(Scalar(field, e.sign), Monomial(e.variable)));
  return d;
}

SymbolicCheck d_squared_zero(const GENComplex& complex) {
  for (int i = 2; i <= complex.top(); ++i) {
    const PolyMatrix prod = differential(complex, i - 1) * differential(complex, i);
    if (!prod.is_zero()) {
      const auto& [pos, value] = *prod.entries().begin();
      std::ostringstream os;
      os << "d" << i - 1 << "*d" << i << " entry (" << complex.basis(i - 2)[pos.first].to_string() << ", "
         << complex.basis(i)[pos.second].to_string() << ") = " << value.to_string();
      return {false, os.str()};
    }
  }
  return {};
}

SymbolicCheck augmentation_check(const GENComplex& complex) {
  if (complex.top() < 1) return {};
  const int m = complex.m();
  const auto& gens = complex.basis(0);
  PolyMatrix psi(1, gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    psi.add(0, k, maximal_minor(m, gens[k].sigma.vertices(), Field::rational(), complex.n()));
  const PolyMatrix prod = psi * differential(complex, 1);
  if (!prod.is_zero()) {
    const auto& [pos, value] = *prod.entries().begin();
    return {false, "psi*d1 at " + complex.basis(1)[pos.second].to_string() + " = " + value.to_string()};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Graded pieces and homology

std::vector<PieceElement> graded_piece(const GENComplex& complex, int i, const Multidegree& d) {
  std::vector<PieceElement> out;
  if (!d.nonnegative()) return out;
  const auto& basis = complex.basis(i);
  const int n = complex.n();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Multidegree rest = d - mdeg(basis[k], n);
    if (!rest.nonnegative()) continue;
    for (auto& mono : monomials_of_multidegree(rest.u, rest.gamma)) out.push_back(PieceElement{k, std::move(mono)});
  }
  return out;
}

namespace {

// d_i at degree d as an integer matrix: rows index the piece of C_{i-1}.
IntegerMatrix piece_differential(const GENComplex& complex, int i, const std::vector<PieceElement>& rows,
                                 const std::vector<PieceElement>& cols) {
  IntegerMatrix mat(rows.size(), cols.size());
  if (rows.empty() || cols.empty()) return mat;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(std::make_pair(rows[r].basis_index, rows[r].monomial), r);
  const auto& entries = complex.entries(i);
  const auto& offsets = complex.column_offsets(i);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& col = cols[c];
    for (std::size_t e = offsets[col.basis_index]; e < offsets[col.basis_index + 1]; ++e) {
      const auto& entry = entries[e];
      const auto it = row_index.find(std::make_pair(entry.row, col.monomial * Monomial(entry.variable)));
      if (it == row_index.end()) throw std::logic_error("differential leaves the graded piece");
      mat.add(it->second, c, entry.sign);
    }
  }
  mat.compress();
  return mat;
}

}  // namespace

ScalarMatrix scalar_differential(const GENComplex& complex, int i, const Multidegree& d, const Field& field) {
  const auto rows = graded_piece(complex, i - 1, d);
  const auto cols = graded_piece(complex, i, d);
  if (i < 1 || i > complex.top()) return ScalarMatrix(rows.size(), cols.size(), field);
  return ScalarMatrix(piece_differential(complex, i, rows, cols), field);
}

std::size_t homology_dim(const GENComplex& complex, int i, const Multidegree& d, const Field& field) {
  const auto here = graded_piece(complex, i, d);
  if (here.empty()) return 0;
  std::size_t rank_out = 0, rank_in = 0;
  if (i >= 1) rank_out = rank(piece_differential(complex, i, graded_piece(complex, i - 1, d), here), field);
  if (i + 1 <= complex.top()) rank_in = rank(piece_differential(complex, i + 1, here, graded_piece(complex, i + 1, d)), field);
  return here.size() - rank_out - rank_in;
}

std::vector<Multidegree> reachable_degrees(const GENComplex& complex, int i, int shift) {
  if (shift < 0 || shift > 1) throw std::invalid_argument("shift must be 0 or 1");
  const int m = complex.m(), n = complex.n();
  std::set<Multidegree> seen;
  for (const auto& b : complex.basis(i)) {
    const Multidegree base = mdeg(b, n);
    if (shift == 0) {
      seen.insert(base);
      continue;
    }
    for (int l = 1; l <= m; ++l)
      for (int j = 1; j <= n; ++j) seen.insert(base + mdeg(Variable{l, j}, m, n));
  }
  return {seen.begin(), seen.end()};
}

VanishingReport vanishing_in_shift(const GENComplex& complex, int shift, const Field& field, int jobs) {
  VanishingReport report;
  struct Task {
    int i;
    Multidegree d;
  };
  std::vector<Task> tasks;
  const int last = std::min(complex.n() - complex.m(), complex.top());
  for (int i = 1; i <= last; ++i)
    for (auto& d : reachable_degrees(complex, i, shift)) tasks.push_back(Task{i, std::move(d)});
  std::vector<std::size_t> dims(tasks.size(), 0);
  parallel_for(tasks.size(), jobs, [&](std::size_t k) { dims[k] = homology_dim(complex, tasks[k].i, tasks[k].d, field); });
  report.degrees_checked = tasks.size();
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (dims[k] != 0) {
      report.vanishes = false;
      report.witness = HomologyWitness{tasks[k].i, shift, tasks[k].d, dims[k]};
      break;
    }
  }
  return report;
}

VanishingReport vanishing_check(const SimplicialComplex& delta, int m, const Field& field, int jobs) {
  const GENComplex complex(delta, m);
  VanishingReport total;
  for (int shift = 0; shift <= 1; ++shift) {
    auto r = vanishing_in_shift(complex, shift, field, jobs);
    total.degrees_checked += r.degrees_checked;
    if (!r.vanishes) {
      total.vanishes = false;
      total.witness = r.witness;
      return total;
    }
  }
  return total;
}

}  // namespace linstrand
