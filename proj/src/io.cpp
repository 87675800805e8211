#include "linstrand/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "linstrand/error.hpp"

#ifndef LINSTRAND_VERSION
#define LINSTRAND_VERSION "0.0.0"
#endif

namespace linstrand::io {

std::string tool_version() { return LINSTRAND_VERSION; }

// ---------------------------------------------------------------------------
// Instances

SimplicialComplex Instance::complex() const {
  if (kind != InstanceKind::Complex) throw InvalidInput("instance is a clutter, expected a complex");
  return SimplicialComplex(n, sets);
}

Clutter Instance::clutter() const {
  if (kind != InstanceKind::Clutter) throw InvalidInput("instance is a complex, expected a clutter");
  return Clutter(n, m, sets);
}

Instance Instance::from(const SimplicialComplex& delta) {
  Instance in;
  in.kind = InstanceKind::Complex;
  in.n = delta.n();
  in.sets = delta.facets();
  return in;
}

Instance Instance::from(const Clutter& clutter) {
  Instance in;
  in.kind = InstanceKind::Clutter;
  in.n = clutter.n();
  in.m = clutter.m();
  in.sets = clutter.circuits();
  return in;
}

namespace {

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(what + " is not valid JSON: " + e.what());
  }
}

int as_int(const Json& j, const std::string& key) {
  if (!j.is_number_integer()) throw InvalidInput("'" + key + "' must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw InvalidInput("'" + key + "' out of range");
  return static_cast<int>(v);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const Json j = parse_json(text, "instance");
  if (!j.is_object()) throw InvalidInput("instance must be a JSON object");
  static const std::set<std::string> known{"n", "kind", "m", "sets", "labels"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw InvalidInput("unknown instance key '" + key + "'");
  for (const char* key : {"n", "kind", "sets"})
    if (!j.contains(key)) throw InvalidInput(std::string("instance is missing '") + key + "'");

  Instance in;
  in.n = as_int(j.at("n"), "n");
  if (!j.at("kind").is_string()) throw InvalidInput("'kind' must be a string");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "complex") {
    in.kind = InstanceKind::Complex;
    if (j.contains("m")) throw InvalidInput("'m' is only valid for clutters");
  } else if (kind == "clutter") {
    in.kind = InstanceKind::Clutter;
    if (!j.contains("m")) throw InvalidInput("clutter instance is missing 'm'");
    in.m = as_int(j.at("m"), "m");
  } else {
    throw InvalidInput("'kind' must be \"complex\" or \"clutter\"");
  }
  if (!j.at("sets").is_array()) throw InvalidInput("'sets' must be an array of arrays");
  for (const auto& s : j.at("sets")) {
    if (!s.is_array()) throw InvalidInput("'sets' must be an array of arrays");
    std::vector<int> verts;
    for (const auto& v : s) verts.push_back(as_int(v, "sets"));
    in.sets.push_back(Face::from_unsorted(std::move(verts)));
  }
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array()) throw InvalidInput("'labels' must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& s : l) {
      if (!s.is_string()) throw InvalidInput("'labels' must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != in.n) throw InvalidInput("'labels' must have exactly n entries");
    in.labels = std::move(labels);
  }
  // Validate through the constructors.
  if (in.kind == InstanceKind::Complex)
    (void)in.complex();
  else
    (void)in.clutter();
  return in;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Instance read_instance(const std::string& path) { return parse_instance(read_text(path)); }

Json to_json(const Instance& in) {
  Json j;
  j["n"] = in.n;
  j["kind"] = in.kind == InstanceKind::Complex ? "complex" : "clutter";
  if (in.kind == InstanceKind::Clutter) j["m"] = in.m;
  j["sets"] = to_json(in.sets);
  if (in.labels) j["labels"] = *in.labels;
  return j;
}

std::string serialize(const Instance& in) { return to_json(in).dump(); }

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string instance_digest(const Instance& in) {
  Instance canon = in.kind == InstanceKind::Complex ? Instance::from(in.complex()) : Instance::from(in.clutter());
  canon.labels.reset();
  return "fnv1a64:" + fnv1a64_hex(serialize(canon));
}

// ---------------------------------------------------------------------------
// Result files

Json to_json(const ResultFile& r) {
  Json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["schema"] = r.schema;
  j["field"] = r.field;
  j["command"] = r.command;
  j["instance_digest"] = r.instance_digest;
  j["payload"] = r.payload;
  return j;
}

ResultFile result_from_json(const Json& j) {
  try {
    ResultFile r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.schema = j.at("schema").get<int>();
    r.field = j.at("field").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.instance_digest = j.at("instance_digest").get<std::string>();
    r.payload = j.at("payload");
    if (r.schema != kSchemaVersion) throw InvalidInput("unsupported result schema " + std::to_string(r.schema));
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed result file: ") + e.what());
  }
}

std::string serialize(const ResultFile& r) { return to_json(r).dump(2) + "\n"; }

ResultFile parse_result(const std::string& text) { return result_from_json(parse_json(text, "result")); }

// ---------------------------------------------------------------------------
// Betti tables

Json to_json(const BettiTable& t) {
  Json j;
  j["field"] = t.field.to_string();
  j["m"] = t.m;
  j["window"] = {{"i_max", t.window.i_max}, {"j_max", t.window.j_max}};
  Json cells = Json::array();
  for (const auto& [ij, v] : t.cells)
    if (v != 0) cells.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
  j["nonzero"] = cells;
  return j;
}

BettiTable betti_from_json(const Json& j) {
  try {
    BettiTable t;
    t.field = Field::parse(j.at("field").get<std::string>());
    t.m = j.at("m").get<int>();
    t.window = {j.at("window").at("i_max").get<int>(), j.at("window").at("j_max").get<int>()};
    for (int i = 0; i <= t.window.i_max; ++i)
      for (int jj = 0; jj <= t.window.j_max; ++jj) t.cells[{i, jj}] = 0;
    for (const auto& c : j.at("nonzero")) {
      const std::pair<int, int> key{c.at("i").get<int>(), c.at("j").get<int>()};
      if (!t.cells.count(key)) throw InvalidInput("Betti cell outside the recorded window");
      t.cells[key] = c.at("value").get<std::size_t>();
    }
    return t;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed Betti table: ") + e.what());
  }
}

std::string betti_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "j-i";
  for (int i = 0; i <= t.window.i_max; ++i) os << ',' << i;
  os << '\n';
  for (int r = t.m; r <= t.window.j_max; ++r) {
    os << r;
    for (int i = 0; i <= t.window.i_max; ++i) {
      os << ',';
      if (i + r <= t.window.j_max) os << t.at(i, i + r);
    }
    os << '\n';
  }
  return os.str();
}

std::string betti_text(const BettiTable& t) {
  std::ostringstream os;
  const int w = 6;
  os << "field " << t.field.to_string() << ", window i <= " << t.window.i_max << ", j <= " << t.window.j_max << '\n';
  os << std::setw(w) << "";
  for (int i = 0; i <= t.window.i_max; ++i) os << std::setw(w) << i;
  os << '\n';
  for (int r = t.m; r <= t.window.j_max; ++r) {
    os << std::setw(w - 1) << r << ':';
    for (int i = 0; i <= t.window.i_max; ++i) {
      if (i + r > t.window.j_max) {
        os << std::setw(w) << "";
        continue;
      }
      const auto v = t.at(i, i + r);
      os << std::setw(w) << (v ? std::to_string(v) : std::string("."));
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Verdicts

Json to_json(const VerdictReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["relation"] = relation_name(r.relation);
  if (r.relation == Relation::Equal) {
    j["left_values"] = r.left_values;
    j["right_values"] = r.right_values;
  } else {
    j["left"] = r.left;
    j["right"] = r.right;
  }
  j["agreement"] = r.agreement;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back({{"kind", w.kind}, {"detail", w.detail}});
  j["witnesses"] = ws;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

VerdictReport verdict_from_json(const Json& j) {
  try {
    VerdictReport r;
    r.claim = j.at("claim").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    const std::string rel = j.at("relation").get<std::string>();
    if (rel == "iff")
      r.relation = Relation::Iff;
    else if (rel == "implies")
      r.relation = Relation::Implies;
    else if (rel == "equal")
      r.relation = Relation::Equal;
    else
      throw InvalidInput("unknown relation '" + rel + "'");
    if (r.relation == Relation::Equal) {
      r.left_values = j.at("left_values").get<std::vector<long long>>();
      r.right_values = j.at("right_values").get<std::vector<long long>>();
    } else {
      r.left = j.at("left").get<bool>();
      r.right = j.at("right").get<bool>();
    }
    r.agreement = j.at("agreement").get<bool>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back({w.at("kind").get<std::string>(), w.at("detail").get<std::string>()});
    if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed verdict: ") + e.what());
  }
}

std::string verdict_text(const VerdictReport& r) {
  auto list = [](const std::vector<long long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
    os << ']';
    return os.str();
  };
  std::ostringstream os;
  os << "claim: " << r.claim << '\n' << "instance: " << r.instance << '\n' << "relation: " << relation_name(r.relation) << '\n';
  if (r.relation == Relation::Equal)
    os << "left: " << list(r.left_values) << '\n' << "right: " << list(r.right_values) << '\n';
  else
    os << "left: " << std::boolalpha << r.left << '\n' << "right: " << r.right << '\n';
  os << "agree: " << std::boolalpha << r.agreement << '\n';
  for (const auto& w : r.witnesses) os << "witness " << w.kind << ": " << w.detail << '\n';
  if (r.seconds) os << "seconds: " << std::fixed << std::setprecision(3) << *r.seconds << '\n';
  return os.str();
}

Json to_json(const SuiteReport& s) {
  Json j;
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["field"] = s.field;
  j["instances"] = s.instances;
  j["disagreements"] = s.disagreements;
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  return j;
}

SuiteReport suite_from_json(const Json& j) {
  try {
    SuiteReport s;
    s.seed = j.at("seed").get<std::uint64_t>();
    s.trials = j.at("trials").get<int>();
    s.field = j.at("field").get<std::string>();
    s.instances = j.at("instances").get<std::size_t>();
    s.disagreements = j.at("disagreements").get<std::size_t>();
    for (const auto& r : j.at("reports")) s.reports.push_back(verdict_from_json(r));
    return s;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed suite report: ") + e.what());
  }
}

Json to_json(const FVector& f) { return f.counts; }

Json to_json(const std::vector<Face>& faces) {
  Json a = Json::array();
  for (const auto& f : faces) a.push_back(f.vertices());
  return a;
}

}  // namespace linstrand::io
