#include "linstrand/theorems.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "linstrand/encomplex.hpp"
#include "linstrand/error.hpp"
#include "linstrand/parallel.hpp"

namespace linstrand {

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Iff:
      return "iff";
    case Relation::Implies:
      return "implies";
    case Relation::Equal:
      return "equal";
  }
  return "?";
}

std::string describe(const SimplicialComplex& delta, int m) {
  return "complex " + delta.to_string() + ", m=" + std::to_string(m);
}

std::string describe(const Clutter& clutter) {
  return clutter.to_string();
}

namespace {

std::string cell(int i, int j, std::size_t v) {
  return "beta_{" + std::to_string(i) + "," + std::to_string(j) + "}=" + std::to_string(v);
}

void finish_equal(VerdictReport& r, const std::string& label) {
  r.agreement = r.left_values == r.right_values;
  if (r.agreement) return;
  for (std::size_t k = 0; k < std::max(r.left_values.size(), r.right_values.size()); ++k) {
    const long long a = k < r.left_values.size() ? r.left_values[k] : -1;
    const long long b = k < r.right_values.size() ? r.right_values[k] : -1;
    if (a != b) {
      r.witnesses.push_back({"mismatch", label + " index " + std::to_string(k) + ": " + std::to_string(a) +
                                             " vs " + std::to_string(b)});
      return;
    }
  }
}

// First nonzero beta_{1,j} with m+1 < j <= j_max, if any.
std::optional<std::pair<int, std::size_t>> nonlinear_first_syzygy(BettiOracle& oracle, int j_max) {
  const int m = oracle.clutter().m();
  for (int j = m + 2; j <= j_max; ++j)
    if (const auto v = oracle.koszul(1, j); v != 0) return std::make_pair(j, v);
  return std::nullopt;
}

}  // namespace

VerdictReport verify_theorem_missing(const SimplicialComplex& delta, int m, const Field& field, int jobs) {
  VerdictReport r;
  r.claim = "missing";
  r.instance = describe(delta, m);
  r.relation = Relation::Iff;
  const auto vanishing = vanishing_check(delta, m, field, jobs);
  r.left = vanishing.vanishes;
  r.right = !has_minimal_nonface_card_geq(delta, m + 2);
  r.agreement = r.left == r.right;
  if (vanishing.witness) {
    const auto& w = *vanishing.witness;
    r.witnesses.push_back({"homology", "H_" + std::to_string(w.i) + " in degree " + w.degree.to_string() +
                                           " (internal " + std::to_string(w.i + m + w.shift) + ") has dimension " +
                                           std::to_string(w.dim)});
  }
  if (!r.right)
    for (const auto& f : minimal_nonfaces(delta))
      if (static_cast<int>(f.size()) >= m + 2) {
        r.witnesses.push_back({"nonface", f.to_string()});
        break;
      }
  return r;
}

VerdictReport verify_j0_vanishing(const SimplicialComplex& delta, int m, const Field& field, int jobs) {
  VerdictReport r;
  r.claim = "j0";
  r.instance = describe(delta, m);
  r.relation = Relation::Iff;
  const auto report = vanishing_in_shift(GENComplex(delta, m), 0, field, jobs);
  r.left = report.vanishes;
  r.right = true;
  r.agreement = r.left;
  if (report.witness)
    r.witnesses.push_back({"homology", "H_" + std::to_string(report.witness->i) + " in degree " +
                                           report.witness->degree.to_string() + " has dimension " +
                                           std::to_string(report.witness->dim)});
  return r;
}

VerdictReport verify_cor_linearbetti(BettiOracle& oracle, int i_max) {
  const Clutter& c = oracle.clutter();
  VerdictReport r;
  r.claim = "linearbetti";
  r.instance = describe(c);
  r.relation = Relation::Equal;
  for (int i = 0; i <= i_max; ++i) {
    r.left_values.push_back(static_cast<long long>(oracle.koszul(i, i + c.m())));
    r.right_values.push_back(static_cast<long long>(strand_betti_formula(c, i)));
  }
  finish_equal(r, "strand");
  return r;
}

VerdictReport verify_thm_linear_res(BettiOracle& oracle, const BettiWindow& window) {
  const Clutter& c = oracle.clutter();
  const int m = c.m();
  if (window.j_max < m + 2) throw InvalidInput("linear resolution check needs j_max >= m + 2");
  VerdictReport r;
  r.claim = "linearres";
  r.instance = describe(c);
  r.relation = Relation::Iff;
  const BettiTable table = betti_table(oracle, window.i_max, window.j_max);
  std::optional<std::string> off_linear;
  for (const auto& [ij, v] : table.cells)
    if (v != 0 && ij.second != ij.first + m && !off_linear) off_linear = cell(ij.first, ij.second, v);
  const auto syz = window.i_max >= 1 ? nonlinear_first_syzygy(oracle, window.j_max) : std::nullopt;
  const bool resolution = !off_linear.has_value();
  const bool presented = !syz.has_value();
  r.right = is_complete(c);
  r.left = resolution;
  r.agreement = (resolution == r.right) && (presented == r.right);
  if (syz) r.witnesses.push_back({"betti", cell(1, syz->first, syz->second)});
  else if (off_linear) r.witnesses.push_back({"betti", *off_linear});
  if (!r.right && presented)
    r.witnesses.push_back({"window", "no off-linear first syzygy up to j=" + std::to_string(window.j_max)});
  return r;
}

VerdictReport verify_cor_projdim(BettiOracle& oracle, const BettiWindow& window) {
  const Clutter& c = oracle.clutter();
  const int m = c.m();
  const int length = strand_length(c);
  VerdictReport r;
  r.claim = "projdim";
  r.instance = describe(c);
  r.relation = Relation::Equal;
  long long last = -1;
  for (int i = 0; i <= std::max(window.i_max, length + 1); ++i)
    if (oracle.koszul(i, i + m) != 0) last = i;
  r.left_values = {last};
  r.right_values = {length};
  finish_equal(r, "strand length");
  // Projective dimension is at least the strand length.
  int deepest = -1;
  const BettiTable table = betti_table(oracle, window.i_max, window.j_max);
  for (const auto& [ij, v] : table.cells)
    if (v != 0) deepest = std::max(deepest, ij.first);
  if (deepest < length) {
    r.agreement = false;
    r.witnesses.push_back({"projdim", "deepest nonzero row " + std::to_string(deepest) + " below strand length"});
  }
  return r;
}

VerdictReport verify_cor_skeleton(const SimplicialComplex& delta, int m, const OracleOptions& options) {
  const Clutter c = clutter_from_skeleton(delta, m);
  VerdictReport r;
  r.claim = "skeleton";
  r.instance = describe(delta, m);
  r.relation = Relation::Iff;
  const SimplicialComplex closure = clique_complex(c);
  r.left = closure == delta;
  if (!r.left)
    for (const auto& f : closure.faces())
      if (!delta.contains(f)) {
        r.witnesses.push_back({"faces", "clique " + f.to_string() + " is not a face"});
        break;
      }
  const GENComplex complex(delta, m);
  BettiOracle oracle(c, options);
  r.right = true;
  const int last = std::max(complex.top(), strand_length(c));
  for (int i = 0; i <= last; ++i) {
    const std::size_t rank_i = complex.rank(i);
    const std::size_t beta = oracle.koszul(i, i + m);
    if (rank_i != beta) {
      r.right = false;
      r.witnesses.push_back({"betti", "rank C_" + std::to_string(i) + "=" + std::to_string(rank_i) + " but " +
                                          cell(i, i + m, beta)});
      break;
    }
  }
  r.agreement = r.left == r.right;
  return r;
}

VerdictReport verify_lemma_necessity(BettiOracle& oracle, int j_max) {
  const Clutter& c = oracle.clutter();
  VerdictReport r;
  r.claim = "lemma";
  r.instance = describe(c);
  r.relation = Relation::Implies;
  const auto syz = nonlinear_first_syzygy(oracle, j_max);
  const auto cond = lemma_conditions(c);
  r.left = !syz.has_value();
  r.right = cond.union_closed && cond.exchange_closed;
  r.agreement = !r.left || r.right;
  if (syz) r.witnesses.push_back({"betti", cell(1, syz->first, syz->second)});
  if (cond.union_witness) r.witnesses.push_back({"lemma", "condition (a): " + *cond.union_witness});
  if (cond.exchange_witness) r.witnesses.push_back({"lemma", "condition (b): " + *cond.exchange_witness});
  return r;
}

VerdictReport verify_syzygy_oracles(BettiOracle& oracle, int j_max) {
  const Clutter& c = oracle.clutter();
  VerdictReport r;
  r.claim = "syzygy";
  r.instance = describe(c);
  r.relation = Relation::Equal;
  for (int j = c.m() + 1; j <= j_max; ++j) {
    r.left_values.push_back(static_cast<long long>(oracle.koszul(1, j)));
    r.right_values.push_back(static_cast<long long>(oracle.first_syzygy(j)));
  }
  finish_equal(r, "beta_1 from j=" + std::to_string(c.m() + 1));
  return r;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::vector<VerdictReport> complex_checks(const SimplicialComplex& delta, int m, const Field& field) {
  std::vector<VerdictReport> out;
  out.push_back(verify_theorem_missing(delta, m, field));
  out.push_back(verify_j0_vanishing(delta, m, field));
  const bool skeleton_ok = std::all_of(delta.facets().begin(), delta.facets().end(),
                                       [m](const Face& f) { return static_cast<int>(f.size()) >= m; });
  if (skeleton_ok) {
    OracleOptions opts;
    opts.field = field;
    out.push_back(verify_cor_skeleton(delta, m, opts));
  }
  return out;
}

std::vector<VerdictReport> clutter_checks(const Clutter& clutter, const Field& field) {
  OracleOptions opts;
  opts.field = field;
  BettiOracle oracle(clutter, opts);
  const BettiWindow w = default_window(clutter);
  std::vector<VerdictReport> out;
  out.push_back(verify_cor_linearbetti(oracle, w.i_max));
  out.push_back(verify_thm_linear_res(oracle, w));
  out.push_back(verify_cor_projdim(oracle, w));
  out.push_back(verify_lemma_necessity(oracle, w.j_max));
  out.push_back(verify_syzygy_oracles(oracle, w.j_max));
  return out;
}

}  // namespace

SuiteReport suite(std::uint64_t seed, int trials, const SuiteBounds& bounds, const Field& field, int jobs) {
  if (trials < 0) throw InvalidInput("trials must be nonnegative");
  if (bounds.exhaustive_vertices < 1 || bounds.exhaustive_vertices > 5)
    throw InvalidInput("exhaustive tier supports 1..5 vertices");
  if (bounds.random_complex_min < 1 || bounds.random_complex_min > bounds.random_complex_max)
    throw InvalidInput("bad random complex vertex bounds");
  if (bounds.random_clutter_vertices < 3) throw InvalidInput("random clutters need at least 3 vertices");

  std::vector<std::function<std::vector<VerdictReport>()>> tasks;
  for (int n = 1; n <= bounds.exhaustive_vertices; ++n)
    for (const auto& delta : all_complexes(n))
      for (int m = 1; m <= 2; ++m) tasks.emplace_back([delta, m, field] { return complex_checks(delta, m, field); });
  for (int n = 2; n <= bounds.exhaustive_vertices; ++n)
    for (const auto& c : enumerate_clutters(n, 2)) tasks.emplace_back([c, field] { return clutter_checks(c, field); });
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = splitmix(seed ^ splitmix(static_cast<std::uint64_t>(t)));
    std::mt19937_64 rng(s);
    const int span = bounds.random_complex_max - bounds.random_complex_min + 1;
    const int n = bounds.random_complex_min + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
    const int dim = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n - 2)));
    const int m = 1 + t % 3;
    const SimplicialComplex delta = random_complex(n, dim, 0.5, rng());
    tasks.emplace_back([delta, m, field] { return complex_checks(delta, m, field); });
    const int cm = 2 + t % 2;
    const Clutter c = random_clutter(bounds.random_clutter_vertices, cm, 0.6, rng());
    tasks.emplace_back([c, field] { return clutter_checks(c, field); });
  }

  std::vector<std::vector<VerdictReport>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t k) { results[k] = tasks[k](); });

  SuiteReport report;
  report.seed = seed;
  report.trials = trials;
  report.field = field.to_string();
  for (auto& batch : results) {
    for (auto& r : batch) {
      report.reports.push_back(std::move(r));
      if (!report.reports.back().agreement) {
        report.disagreements = 1;
        report.instances = report.reports.size();
        return report;
      }
    }
  }
  report.instances = report.reports.size();
  return report;
}

}  // namespace linstrand
