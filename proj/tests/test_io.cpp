#include <doctest.h>

#include "linstrand/error.hpp"
#include "linstrand/io.hpp"

using namespace linstrand;
using namespace linstrand::io;

namespace {

const char* kComplex = R"({"n": 4, "kind": "complex", "sets": [[1,2,3],[1,3,4],[2,3,4]], "labels": ["a","b","c","d"]})";
const char* kPath = R"({"n": 3, "kind": "clutter", "m": 2, "sets": [[1,2],[2,3]]})";

}  // namespace

TEST_CASE("instance parsing") {
  const Instance c = parse_instance(kComplex);
  CHECK(c.kind == InstanceKind::Complex);
  CHECK(c.n == 4);
  CHECK(c.complex().facets().size() == 3);
  REQUIRE(c.labels.has_value());
  CHECK(c.labels->at(3) == "d");
  CHECK_THROWS_AS(c.clutter(), InvalidInput);

  const Instance p = parse_instance(kPath);
  CHECK(p.clutter() == Clutter(3, 2, {{1, 2}, {2, 3}}));
  CHECK_THROWS_AS(p.complex(), InvalidInput);
}

TEST_CASE("instance rejection") {
  const char* bad[] = {
      R"({"n": 3, "kind": "clutter", "m": 2, "sets": [[1,2],[2,3]], "extra": 1})",
      R"({"kind": "clutter", "m": 2, "sets": [[1,2]]})",
      R"({"n": 3, "kind": "clutter", "sets": [[1,2],[2,3]]})",
      R"({"n": 3, "kind": "complex", "m": 2, "sets": [[1,2],[2,3]]})",
      R"({"n": 3, "kind": "graph", "sets": [[1,2],[2,3]]})",
      R"({"n": 4, "kind": "complex", "sets": [[1,2],[2,3]]})",
      R"({"n": 3, "kind": "clutter", "m": 2, "sets": [[1,2],[1,2],[2,3]]})",
      R"({"n": 3, "kind": "clutter", "m": 2, "sets": [[1,2,3]]})",
      R"({"n": 3, "kind": "complex", "sets": [[1,2],[2,"3"]]})",
      R"({"n": 3, "kind": "complex", "sets": [[1,2],[2,3]], "labels": ["a"]})",
      R"({"n": 3, "kind": "complex", "sets": [[1,2],[2,3]])",
      R"([1,2,3])",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_instance(text), InvalidInput);
  }
}

TEST_CASE("instance round trip and digest") {
  for (const char* text : {kComplex, kPath}) {
    const Instance in = parse_instance(text);
    CHECK(parse_instance(serialize(in)) == in);
  }
  // The digest ignores labels, set order and vertex order within sets.
  const Instance a = parse_instance(R"({"n": 3, "kind": "clutter", "m": 2, "sets": [[2,3],[1,2]]})");
  const Instance b = parse_instance(kPath);
  CHECK(instance_digest(a) == instance_digest(b));
  const Instance c = parse_instance(R"({"n": 4, "kind": "complex", "sets": [[3,4,1],[2,3,4],[1,2,3],[1,2]]})");
  CHECK(instance_digest(c) == instance_digest(parse_instance(kComplex)));
  CHECK(instance_digest(a) != instance_digest(parse_instance(kComplex)));
  CHECK(instance_digest(b).rfind("fnv1a64:", 0) == 0);
  CHECK(instance_digest(b).size() == 8 + 16);
  // Reference FNV-1a 64 values.
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("result file round trip") {
  ResultFile r;
  r.field = "rat";
  r.command = "betti table";
  r.instance_digest = instance_digest(parse_instance(kPath));
  r.payload = Json{{"x", 1}};
  CHECK(parse_result(serialize(r)) == r);
  CHECK_THROWS_AS(parse_result("{}"), InvalidInput);
  Json j = to_json(r);
  j["schema"] = 99;
  CHECK_THROWS_AS(result_from_json(j), InvalidInput);
}

TEST_CASE("Betti table formats") {
  const BettiTable t = betti_table(Clutter(3, 2, {{1, 2}, {2, 3}}), 1, 4);
  CHECK(betti_from_json(to_json(t)) == t);
  CHECK(to_json(t).at("window").at("j_max") == 4);
  CHECK(to_json(t).at("nonzero").size() == 2);
  CHECK(betti_csv(t) == "j-i,0,1\n2,2,0\n3,0,1\n4,0,\n");
  const std::string text = betti_text(t);
  CHECK(text.find('2') != std::string::npos);
  CHECK(text.find('.') != std::string::npos);

  Json bad = to_json(t);
  bad["nonzero"].push_back({{"i", 5}, {"j", 9}, {"value", 1}});
  CHECK_THROWS_AS(betti_from_json(bad), InvalidInput);
}

TEST_CASE("verdict and suite round trips") {
  VerdictReport r;
  r.claim = "missing";
  r.instance = "x";
  r.relation = Relation::Iff;
  r.left = true;
  r.right = true;
  r.agreement = true;
  r.witnesses = {{"nonface", "{1,2,4}"}};
  CHECK(verdict_from_json(to_json(r)) == r);
  CHECK(verdict_text(r).find("agree: true") != std::string::npos);

  VerdictReport e;
  e.claim = "linearbetti";
  e.relation = Relation::Equal;
  e.left_values = {3, 2};
  e.right_values = {3, 2};
  e.agreement = true;
  e.seconds = 0.5;
  CHECK(verdict_from_json(to_json(e)) == e);
  CHECK_FALSE(to_json(e).contains("left"));

  SuiteReport s;
  s.seed = 3;
  s.trials = 2;
  s.field = "rat";
  s.reports = {r, e};
  s.instances = 2;
  CHECK(suite_from_json(to_json(s)) == s);
}
