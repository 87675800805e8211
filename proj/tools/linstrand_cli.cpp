// linstrand command-line tool.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "linstrand/betti.hpp"
#include "linstrand/combinatorics.hpp"
#include "linstrand/encomplex.hpp"
#include "linstrand/error.hpp"
#include "linstrand/io.hpp"
#include "linstrand/theorems.hpp"

using namespace linstrand;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Globals {
  std::string field = "rat";
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::optional<int> window_j;
  std::optional<int> m;
  int trials = 10;
  bool timing = false;
  std::size_t entry_cap = kDefaultEntryCap;
};

struct Args {
  std::string instance;
  std::optional<int> i;
  std::optional<std::string> degree;
  std::optional<int> i_max;
  std::optional<int> j_max;
  int exhaustive_n = 4;
  int random_min = 5;
  int random_max = 6;
  int clutter_n = 5;
};

void diagnostic(const std::string& kind, const std::string& message, int code) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  std::cerr << j.dump() << '\n';
}

class Runner {
public:
  Runner(const Globals& g, const Args& a) : g_(g), a_(a), field_(Field::parse(g.field)) {
    if (g_.format != "text" && g_.format != "json" && g_.format != "csv")
      throw InvalidInput("--format must be text, json or csv");
    if (g_.jobs < 1) throw InvalidInput("--jobs must be at least 1");
  }

  int run(const std::string& command) {
    command_ = command;
    if (command == "complex build") return complex_build();
    if (command == "complex dsq") return complex_dsq();
    if (command == "complex homology") return complex_homology();
    if (command == "comb nonfaces") return comb_nonfaces();
    if (command == "comb fvector") return comb_fvector();
    if (command == "comb clique") return comb_clique();
    if (command == "comb banner") return comb_banner();
    if (command == "betti table") return betti_table_cmd();
    if (command == "betti strand") return betti_strand();
    if (command == "verify suite") return verify_suite();
    if (command.rfind("verify ", 0) == 0) return verify(command.substr(7));
    throw InvalidInput("unknown command '" + command + "'");
  }

private:
  const Globals& g_;
  const Args& a_;
  Field field_;
  std::string command_;
  std::optional<io::Instance> instance_;

  const io::Instance& instance() {
    if (!instance_) instance_ = io::read_instance(a_.instance);
    return *instance_;
  }

  OracleOptions oracle_options() const {
    OracleOptions o;
    o.field = field_;
    o.jobs = g_.jobs;
    o.entry_cap = g_.entry_cap;
    return o;
  }

  // A complex and m: complexes need --m; clutters give their clique complex.
  std::pair<SimplicialComplex, int> complex_and_m() {
    const auto& in = instance();
    if (in.kind == io::InstanceKind::Complex) {
      if (!g_.m) throw InvalidInput("--m is required for complex instances");
      return {in.complex(), *g_.m};
    }
    const Clutter c = in.clutter();
    return {clique_complex(c), g_.m.value_or(c.m())};
  }

  SimplicialComplex complex_only() {
    const auto& in = instance();
    if (in.kind == io::InstanceKind::Complex) return in.complex();
    return clique_complex(in.clutter());
  }

  Clutter clutter_only() {
    const auto& in = instance();
    if (in.kind != io::InstanceKind::Clutter) throw InvalidInput("command '" + command_ + "' needs a clutter instance");
    return in.clutter();
  }

  BettiWindow window(const Clutter& c) const {
    BettiWindow w = default_window(c);
    if (a_.i_max) w.i_max = *a_.i_max;
    if (a_.j_max) w.j_max = *a_.j_max;
    if (g_.window_j) w.j_max = *g_.window_j;
    if (w.i_max < 0 || w.j_max < 0) throw InvalidInput("window bounds must be nonnegative");
    return w;
  }

  int emit(const Json& payload, const std::string& text, const std::optional<std::string>& csv = std::nullopt,
           const std::optional<std::string>& digest = std::nullopt) {
    if (g_.format == "json") {
      io::ResultFile r;
      r.field = field_.to_string();
      r.command = command_;
      r.instance_digest = digest ? *digest : io::instance_digest(instance());
      r.payload = payload;
      std::cout << io::serialize(r);
    } else if (g_.format == "csv") {
      if (!csv) throw InvalidInput("csv output is available for betti commands only");
      std::cout << *csv;
    } else {
      std::cout << text;
    }
    return kExitOk;
  }

  // -- complex ---------------------------------------------------------------

  int complex_build() {
    const auto [delta, m] = complex_and_m();
    const GENComplex k(delta, m);
    Json comps = Json::array();
    std::ostringstream text;
    text << "C(Delta) for m=" << m << " on " << delta.to_string() << '\n';
    if (k.empty()) text << "empty complex\n";
    for (int i = 0; i <= k.top(); ++i) {
      std::set<Multidegree> degs;
      for (const auto& b : k.basis(i)) degs.insert(mdeg(b, k.n()));
      comps.push_back({{"i", i}, {"rank", k.rank(i)}, {"internal_degree", m + i}, {"multidegrees", degs.size()}});
      text << "C_" << i << ": rank " << k.rank(i) << ", internal degree " << m + i << ", " << degs.size()
           << " multidegrees\n";
    }
    Json p;
    p["m"] = m;
    p["n"] = delta.n();
    p["top"] = k.top();
    p["ranks"] = k.ranks();
    p["components"] = comps;
    return emit(p, text.str());
  }

  int complex_dsq() {
    const auto [delta, m] = complex_and_m();
    const GENComplex k(delta, m);
    const auto dsq = d_squared_zero(k);
    const auto aug = augmentation_check(k);
    Json p;
    p["d_squared_zero"] = dsq.ok;
    p["augmentation"] = aug.ok;
    p["offending"] = dsq.offending ? Json(*dsq.offending) : (aug.offending ? Json(*aug.offending) : Json(nullptr));
    std::ostringstream text;
    text << std::boolalpha << "d^2 = 0: " << dsq.ok << '\n' << "psi o d_1 = 0: " << aug.ok << '\n';
    if (dsq.offending) text << "offending: " << *dsq.offending << '\n';
    if (aug.offending) text << "offending: " << *aug.offending << '\n';
    emit(p, text.str());
    return dsq.ok && aug.ok ? kExitOk : kExitDisagree;
  }

  int complex_homology() {
    const auto [delta, m] = complex_and_m();
    const GENComplex k(delta, m);
    Json entries = Json::array();
    std::ostringstream text;
    std::size_t checked = 0;
    auto record = [&](int i, const Multidegree& d, std::size_t dim, bool always) {
      ++checked;
      if (dim == 0 && !always) return;
      entries.push_back({{"i", i}, {"degree", d.to_string()}, {"dim", dim}});
      text << "H_" << i << " " << d.to_string() << ": " << dim << '\n';
    };
    if (a_.degree) {
      const Multidegree d = Multidegree::parse(*a_.degree, m, delta.n());
      const int lo = a_.i.value_or(0), hi = a_.i.value_or(std::max(k.top(), 0));
      for (int i = lo; i <= hi; ++i) record(i, d, homology_dim(k, i, d, field_), true);
    } else {
      const int lo = a_.i.value_or(1), hi = a_.i.value_or(delta.n() - m);
      for (int i = lo; i <= hi; ++i)
        for (int shift = 0; shift <= 1; ++shift)
          for (const auto& d : reachable_degrees(k, i, shift)) record(i, d, homology_dim(k, i, d, field_), false);
      if (entries.empty()) text << "all " << checked << " reachable pieces vanish\n";
    }
    Json p;
    p["m"] = m;
    p["checked"] = checked;
    p["entries"] = entries;
    return emit(p, text.str());
  }

  // -- comb ------------------------------------------------------------------

  static std::string face_lines(const std::vector<Face>& faces) {
    std::string s;
    for (const auto& f : faces) s += f.to_string() + "\n";
    return s;
  }

  int comb_nonfaces() {
    const auto nf = minimal_nonfaces(complex_only());
    Json p;
    p["minimal_nonfaces"] = io::to_json(nf);
    return emit(p, nf.empty() ? std::string("no minimal nonfaces\n") : face_lines(nf));
  }

  int comb_fvector() {
    const auto f = f_vector(complex_only());
    Json p;
    p["f_vector"] = io::to_json(f);
    std::string text = "(";
    for (std::size_t k = 0; k < f.counts.size(); ++k) text += (k ? "," : "") + std::to_string(f.counts[k]);
    return emit(p, text + ")\n");
  }

  int comb_clique() {
    const Clutter c = clutter_only();
    const auto delta = clique_complex(c);
    Json p;
    p["facets"] = io::to_json(delta.facets());
    p["complete"] = is_complete(c);
    return emit(p, face_lines(delta.facets()) + (is_complete(c) ? "complete clutter\n" : ""));
  }

  int comb_banner() {
    const auto delta = complex_only();
    Json p;
    p["critical_cliques"] = io::to_json(critical_cliques(delta));
    Json flags = Json::object();
    std::ostringstream text;
    const int lo = a_.i.value_or(1), hi = a_.i.value_or(delta.dim() + 1);
    for (int i = lo; i <= hi; ++i) {
      const bool b = is_banner(delta, i);
      flags[std::to_string(i)] = b;
      text << i << "-banner: " << std::boolalpha << b << '\n';
    }
    p["banner"] = flags;
    return emit(p, text.str());
  }

  // -- betti -----------------------------------------------------------------

  int betti_table_cmd() {
    const Clutter c = clutter_only();
    const BettiWindow w = window(c);
    const BettiTable t = betti_table(c, w.i_max, w.j_max, oracle_options());
    return emit(io::to_json(t), io::betti_text(t), io::betti_csv(t));
  }

  int betti_strand() {
    const Clutter c = clutter_only();
    const int length = strand_length(c);
    std::vector<std::uint64_t> values;
    for (int i = 0; i <= std::max(length, -1) + 1; ++i) values.push_back(strand_betti_formula(c, i));
    Json p;
    p["strand_length"] = length;
    p["values"] = values;
    std::ostringstream text, csv;
    text << '[';
    csv << "i,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
      text << (k ? ", " : "") << values[k];
      csv << k << ',' << values[k] << '\n';
    }
    text << "]\nstrand length " << length << '\n';
    return emit(p, text.str(), csv.str());
  }

  // -- verify ----------------------------------------------------------------

  int verify(const std::string& which) {
    const auto start = std::chrono::steady_clock::now();
    VerdictReport r;
    if (which == "missing") {
      const auto [delta, m] = complex_and_m();
      r = verify_theorem_missing(delta, m, field_, g_.jobs);
    } else if (which == "skeleton") {
      const auto [delta, m] = complex_and_m();
      r = verify_cor_skeleton(delta, m, oracle_options());
    } else {
      const Clutter c = clutter_only();
      BettiOracle oracle(c, oracle_options());
      const BettiWindow w = window(c);
      if (which == "linearbetti")
        r = verify_cor_linearbetti(oracle, w.i_max);
      else if (which == "linearres")
        r = verify_thm_linear_res(oracle, w);
      else if (which == "projdim")
        r = verify_cor_projdim(oracle, w);
      else if (which == "lemma")
        r = verify_lemma_necessity(oracle, w.j_max);
      else if (which == "syzygy")
        r = verify_syzygy_oracles(oracle, w.j_max);
      else
        throw InvalidInput("unknown verifier '" + which + "'");
    }
    if (g_.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(io::to_json(r), io::verdict_text(r));
    return r.agreement ? kExitOk : kExitDisagree;
  }

  int verify_suite() {
    SuiteBounds b;
    b.exhaustive_vertices = a_.exhaustive_n;
    b.random_complex_min = a_.random_min;
    b.random_complex_max = a_.random_max;
    b.random_clutter_vertices = a_.clutter_n;
    const SuiteReport s = suite(g_.seed, g_.trials, b, field_, g_.jobs);
    std::ostringstream text;
    for (const auto& r : s.reports) text << (r.agreement ? "agree " : "DISAGREE ") << r.claim << ' ' << r.instance << '\n';
    text << "seed " << s.seed << ", trials " << s.trials << ", field " << s.field << ": " << s.instances << " reports, "
         << s.disagreements << " disagreements\n";
    if (s.disagreements)
      for (const auto& w : s.reports.back().witnesses) text << "witness " << w.kind << ": " << w.detail << '\n';
    std::ostringstream params;
    params << "suite seed=" << s.seed << " trials=" << s.trials << " bounds=" << b.exhaustive_vertices << ','
           << b.random_complex_min << ',' << b.random_complex_max << ',' << b.random_clutter_vertices;
    emit(io::to_json(s), text.str(), std::nullopt, "fnv1a64:" + io::fnv1a64_hex(params.str()));
    return s.disagreements ? kExitDisagree : kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Eagon-Northcott complexes, linear strands and Betti numbers of determinantal facet ideals"};
  app.set_version_flag("--version", io::tool_version());
  Globals g;
  Args a;
  app.add_option("--field", g.field, "rat or fp:<p> (fp uses p = 32003)")->envname("LINSTRAND_FIELD")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str();
  app.add_option("--seed", g.seed, "suite seed")->capture_default_str();
  app.add_option("--format", g.format, "text, json or csv")->capture_default_str();
  app.add_option("--window-j", g.window_j, "upper bound on internal degree j for Betti windows");
  app.add_option("--m", g.m, "minor size (rows of the generic matrix)");
  app.add_option("--trials", g.trials, "random trials for the suite")->capture_default_str();
  app.add_option("--entry-cap", g.entry_cap, "largest matrix (nonzero entries) the Betti oracle may build")
      ->capture_default_str();
  app.add_flag("--timing", g.timing, "record wall time in verifier reports");
  app.require_subcommand(1);

  std::string command;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, bool needs_instance = true) {
    auto* sub = group->add_subcommand(name, help);
    sub->fallthrough();
    if (needs_instance) sub->add_option("instance", a.instance, "instance JSON file, or - for stdin")->required();
    sub->callback([&command, group, name] { command = group->get_name() + " " + name; });
    return sub;
  };

  auto* complex = app.add_subcommand("complex", "the complex C(Delta) itself");
  complex->require_subcommand(1)->fallthrough();
  leaf(complex, "build", "ranks and degree summary");
  leaf(complex, "dsq", "symbolic d^2 = 0 and augmentation checks");
  auto* hom = leaf(complex, "homology", "homology of multigraded pieces");
  hom->add_option("--i", a.i, "homological index");
  hom->add_option("--degree", a.degree, "multidegree u1,..,um;g1,..,gn");

  auto* comb = app.add_subcommand("comb", "combinatorics of complexes and clutters");
  comb->require_subcommand(1)->fallthrough();
  leaf(comb, "nonfaces", "minimal nonfaces");
  leaf(comb, "fvector", "f-vector");
  leaf(comb, "clique", "clique complex of a clutter");
  leaf(comb, "banner", "critical cliques and banner predicates")->add_option("--i", a.i, "banner index");

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of J_C");
  betti->require_subcommand(1)->fallthrough();
  auto* table = leaf(betti, "table", "Betti table from the Koszul oracle");
  table->add_option("--imax", a.i_max, "largest homological index");
  table->add_option("--jmax", a.j_max, "largest internal degree");
  leaf(betti, "strand", "linear strand values from the f-vector formula");

  auto* verify = app.add_subcommand("verify", "check theorems on an instance");
  verify->require_subcommand(1)->fallthrough();
  leaf(verify, "missing", "linear strand criterion versus minimal nonfaces");
  leaf(verify, "linearbetti", "linear strand Betti numbers versus the f-vector formula")
      ->add_option("--imax", a.i_max, "largest homological index");
  leaf(verify, "linearres", "complete <=> linear resolution <=> linearly presented");
  leaf(verify, "projdim", "length of the linear strand");
  leaf(verify, "skeleton", "C(Delta) is the linear strand iff Delta is a clique complex");
  leaf(verify, "lemma", "linearly presented implies the two clique conditions");
  leaf(verify, "syzygy", "Koszul and syzygy-module oracles agree on beta_1");
  auto* s = leaf(verify, "suite", "exhaustive and seeded random verification", false);
  s->add_option("--exhaustive-n", a.exhaustive_n, "exhaustive tier vertex bound")->capture_default_str();
  s->add_option("--random-min", a.random_min, "smallest random complex")->capture_default_str();
  s->add_option("--random-max", a.random_max, "largest random complex")->capture_default_str();
  s->add_option("--clutter-n", a.clutter_n, "random clutter vertex count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnostic("usage", e.what(), kExitInvalid);
    return kExitInvalid;
  }

  try {
    Runner runner(g, a);
    return runner.run(command);
  } catch (const InvalidInput& e) {
    diagnostic("invalid_input", e.what(), kExitInvalid);
    return kExitInvalid;
  } catch (const ResourceCapExceeded& e) {
    diagnostic("resource_cap", e.what(), kExitResource);
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    diagnostic("invalid_input", e.what(), kExitInvalid);
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    diagnostic("invalid_input", e.what(), kExitInvalid);
    return kExitInvalid;
  } catch (const std::exception& e) {
    diagnostic("internal", e.what(), kExitInvalid);
    return kExitInvalid;
  }
}
