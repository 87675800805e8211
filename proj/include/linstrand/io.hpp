#pragma once

// Instance and result files.
//
// Instance:  {"n": 4, "kind": "complex", "sets": [[1,2,3],[1,3,4]], "labels": ["a","b","c","d"]}
//            {"n": 3, "kind": "clutter", "m": 2, "sets": [[1,2],[2,3]]}
// Result:    {"tool", "version", "schema", "field", "command", "instance_digest", "payload"}

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linstrand/betti.hpp"
#include "linstrand/combinatorics.hpp"
#include "linstrand/theorems.hpp"

namespace linstrand::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
std::string tool_version();

enum class InstanceKind { Complex, Clutter };

struct Instance {
  InstanceKind kind = InstanceKind::Complex;
  int n = 0;
  int m = 0;  // clutters only
  std::vector<Face> sets;
  std::optional<std::vector<std::string>> labels;

  /// Validated objects; throw InvalidInput for the wrong kind.
  SimplicialComplex complex() const;
  Clutter clutter() const;

  static Instance from(const SimplicialComplex& delta);
  static Instance from(const Clutter& clutter);

  bool operator==(const Instance&) const = default;
};

/// Strict parse: unknown keys, wrong types and invalid sets raise InvalidInput.
Instance parse_instance(const std::string& text);
/// Reads a file, or standard input for "-".
Instance read_instance(const std::string& path);
std::string read_text(const std::string& path);

Json to_json(const Instance& instance);
std::string serialize(const Instance& instance);

/// FNV-1a 64 over the canonical form (normalized sets, labels excluded), as "fnv1a64:<16 hex>".
std::string instance_digest(const Instance& instance);
std::string fnv1a64_hex(const std::string& bytes);

struct ResultFile {
  std::string tool = "linstrand";
  std::string version = tool_version();
  int schema = kSchemaVersion;
  std::string field;
  std::string command;
  std::string instance_digest;
  Json payload;

  bool operator==(const ResultFile&) const = default;
};

Json to_json(const ResultFile& result);
ResultFile result_from_json(const Json& j);
std::string serialize(const ResultFile& result);
ResultFile parse_result(const std::string& text);

Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);
/// Macaulay layout: header row of i, one row per j - i.
std::string betti_csv(const BettiTable& table);
std::string betti_text(const BettiTable& table);

Json to_json(const VerdictReport& report);
VerdictReport verdict_from_json(const Json& j);
std::string verdict_text(const VerdictReport& report);

Json to_json(const SuiteReport& report);
SuiteReport suite_from_json(const Json& j);

Json to_json(const FVector& f);
Json to_json(const std::vector<Face>& faces);

}  // namespace linstrand::io
