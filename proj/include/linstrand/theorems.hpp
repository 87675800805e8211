#pragma once

// Executable checks of the linear-strand results on concrete instances.
//
// Each verifier evaluates both sides of a claim independently and reports
// whether they agree. Boolean claims compare two conditions (equivalence or
// implication); numeric claims compare two integer sequences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linstrand/betti.hpp"
#include "linstrand/combinatorics.hpp"
#include "linstrand/field.hpp"

namespace linstrand {

enum class Relation { Iff, Implies, Equal };

std::string relation_name(Relation r);

struct Witness {
  std::string kind;    // "nonface", "homology", "betti", "faces", "lemma", ...
  std::string detail;
  bool operator==(const Witness&) const = default;
};

struct VerdictReport {
  std::string claim;
  std::string instance;
  Relation relation = Relation::Iff;
  bool left = false;
  bool right = false;
  std::vector<long long> left_values;   // Relation::Equal only
  std::vector<long long> right_values;  // Relation::Equal only
  bool agreement = false;
  std::vector<Witness> witnesses;
  std::optional<double> seconds;

  bool operator==(const VerdictReport&) const = default;
};

std::string describe(const SimplicialComplex& delta, int m);
std::string describe(const Clutter& clutter);

/// Vanishing of H_i in degrees i+m and i+m+1 versus absence of minimal nonfaces
/// of cardinality >= m+2.
VerdictReport verify_theorem_missing(const SimplicialComplex& delta, int m, const Field& field = Field::rational(),
                                     int jobs = 1);

/// H_i = 0 in every multidegree of internal degree i+m (always expected).
VerdictReport verify_j0_vanishing(const SimplicialComplex& delta, int m, const Field& field = Field::rational(),
                                  int jobs = 1);

/// beta_{i,i+m} from the oracle versus the f-vector formula for 0 <= i <= i_max.
VerdictReport verify_cor_linearbetti(BettiOracle& oracle, int i_max);

/// Complete clutter <=> linear resolution in the window <=> linearly presented in the window.
VerdictReport verify_thm_linear_res(BettiOracle& oracle, const BettiWindow& window);

/// Last nonzero cell of the linear strand versus dim(clique complex) - m + 1.
/// The window must reach i = strand_length + 1.
VerdictReport verify_cor_projdim(BettiOracle& oracle, const BettiWindow& window);

/// delta equals the clique complex of its (m-1)-skeleton clutter <=> the ranks of
/// C(delta) match the linear strand of that clutter.
VerdictReport verify_cor_skeleton(const SimplicialComplex& delta, int m, const OracleOptions& options = {});

/// Linearly presented in the window => both combinatorial lemma conditions hold.
VerdictReport verify_lemma_necessity(BettiOracle& oracle, int j_max);

/// The two beta_1 oracles agree for m+1 <= j <= j_max.
VerdictReport verify_syzygy_oracles(BettiOracle& oracle, int j_max);

struct SuiteBounds {
  int exhaustive_vertices = 4;      // complexes and graphs on 1..this many vertices
  int random_complex_min = 5;       // random complexes on min..max vertices
  int random_complex_max = 6;
  int random_clutter_vertices = 5;  // random clutters on this many vertices, m in {2,3}
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::string field;
  std::size_t instances = 0;  // reports produced (up to the first disagreement)
  std::size_t disagreements = 0;
  std::vector<VerdictReport> reports;

  bool operator==(const SuiteReport&) const = default;
};

/// Deterministic for a fixed seed, independent of jobs. Stops at the first disagreement.
SuiteReport suite(std::uint64_t seed, int trials, const SuiteBounds& bounds = {}, const Field& field = Field::rational(),
                  int jobs = 1);

}  // namespace linstrand
