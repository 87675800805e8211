#include <doctest.h>

#include <set>

#include "linstrand/combinatorics.hpp"
#include "linstrand/error.hpp"
#include "oracles.hpp"

using namespace linstrand;

namespace {

SimplicialComplex three_triangles() { return SimplicialComplex(4, {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}}); }
SimplicialComplex clutter_clique_six() { return SimplicialComplex(6, {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5, 6}}); }
Clutter three_clutter() {
  return Clutter(6, 3, {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}
Clutter path() { return Clutter(3, 2, {{1, 2}, {2, 3}}); }

std::vector<SimplicialComplex> small_corpus() {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= 4; ++n)
    for (auto& d : all_complexes(n)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("normalize_facets removes duplicates and contained faces") {
  CHECK(normalize_facets({{1, 2}, {2, 3}, {1, 2}}, 3).facets() == std::vector<Face>{{1, 2}, {2, 3}});
  CHECK(normalize_facets({{1, 2, 3}, {1, 2}}, 3).facets() == std::vector<Face>{{1, 2, 3}});
  CHECK(normalize_facets({{1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}, {3, 4, 5, 6}}, 6).facets() ==
        clutter_clique_six().facets());
}

TEST_CASE("normalize_facets rejects bad input") {
  CHECK_THROWS_AS(normalize_facets({}, 3), InvalidInput);
  CHECK_THROWS_AS(normalize_facets({{1, 4}}, 3), InvalidInput);
  try {
    normalize_facets({{1, 2}}, 3);
    FAIL("expected an isolated vertex error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  CHECK_THROWS_AS(Face({2, 1}), InvalidInput);
  CHECK_THROWS_AS(Face({1, 1}), InvalidInput);
}

TEST_CASE("f_vector examples") {
  CHECK(f_vector(SimplicialComplex::simplex(3)).counts == std::vector<std::uint64_t>{3, 3, 1});
  CHECK(f_vector(three_triangles()).counts == std::vector<std::uint64_t>{4, 6, 3});
  CHECK(f_vector(clutter_clique_six()).counts == std::vector<std::uint64_t>{6, 11, 7, 1});
}

TEST_CASE("f_vector of a simplex is binomial") {
  for (int n = 1; n <= 8; ++n) {
    const FVector f = f_vector(SimplicialComplex::simplex(n));
    for (int t = 0; t < n; ++t) CHECK(f[t] == binomial(n, t + 1));
  }
}

TEST_CASE("f_vector and minimal_nonfaces agree with subset scans") {
  for (const auto& d : small_corpus()) {
    CHECK(f_vector(d).counts == oracle::fvector(d));
    CHECK(minimal_nonfaces(d) == oracle::minimal_nonfaces(d));
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto d = random_complex(7, 3, 0.5, seed);
    CHECK(f_vector(d).counts == oracle::fvector(d));
    CHECK(minimal_nonfaces(d) == oracle::minimal_nonfaces(d));
  }
}

TEST_CASE("minimal_nonfaces examples") {
  CHECK(minimal_nonfaces(three_triangles()) == std::vector<Face>{{1, 2, 4}});
  CHECK(minimal_nonfaces(SimplicialComplex::simplex(4)).empty());
  CHECK(minimal_nonfaces(clutter_clique_six()) == std::vector<Face>{{1, 5}, {1, 6}, {2, 5}, {2, 6}, {1, 2, 4}});
}

TEST_CASE("has_minimal_nonface_card_geq") {
  CHECK_FALSE(has_minimal_nonface_card_geq(three_triangles(), 4));
  CHECK(has_minimal_nonface_card_geq(three_triangles(), 3));
  CHECK_FALSE(has_minimal_nonface_card_geq(SimplicialComplex::simplex(4), 2));
  CHECK_THROWS_AS(has_minimal_nonface_card_geq(three_triangles(), 0), InvalidInput);
}

TEST_CASE("skeleton") {
  CHECK(skeleton(SimplicialComplex::simplex(4), 1).facets().size() == 6);
  const auto s = skeleton(clutter_clique_six(), 2);
  CHECK(s.facets().size() == 7);
  for (const auto& f : s.facets()) CHECK(f.size() == 3);
  CHECK(skeleton(three_triangles(), 2) == three_triangles());
  CHECK(skeleton(three_triangles(), 5) == three_triangles());
}

TEST_CASE("clique_complex examples") {
  CHECK(clique_complex(three_clutter()).facets() == clutter_clique_six().facets());
  CHECK(clique_complex(Clutter::complete(3, 2)) == SimplicialComplex::simplex(3));
  CHECK(clique_complex(path()).facets() == std::vector<Face>{{1, 2}, {2, 3}});
}

TEST_CASE("clique complexes have no large minimal nonfaces") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= std::min(n, 3); ++m)
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Clutter c = random_clutter(n, m, 0.6, seed);
        const auto delta = clique_complex(c);
        for (const auto& f : oracle::minimal_nonfaces(delta)) CHECK(f.size() < static_cast<std::size_t>(m + 2));
        // Every m-face is a circuit and every circuit is a face.
        for (const auto& f : delta.faces_of_size(m)) CHECK(c.contains(f));
        for (const auto& t : c.circuits()) CHECK(delta.contains(t));
      }
}

TEST_CASE("is_complete") {
  CHECK(is_complete(Clutter::complete(4, 2)));
  CHECK_FALSE(is_complete(path()));
  CHECK_FALSE(is_complete(three_clutter()));
}

TEST_CASE("critical cliques and banner examples") {
  const auto crit = critical_cliques(three_triangles());
  CHECK(std::find(crit.begin(), crit.end(), Face{1, 2, 3, 4}) != crit.end());
  CHECK_FALSE(is_banner(three_triangles(), 3));
  for (int i = 1; i <= 4; ++i) CHECK(is_banner(SimplicialComplex::simplex(4), i));
  // {1,2,3,4} is a critical non-face of cardinality 4: it breaks 3-banner, while
  // 4-banner only constrains critical cliques with at least 5 vertices.
  const auto crit6 = critical_cliques(clutter_clique_six());
  CHECK(std::find(crit6.begin(), crit6.end(), Face{1, 2, 3, 4}) != crit6.end());
  CHECK_FALSE(is_banner(clutter_clique_six(), 3));
  CHECK(is_banner(clutter_clique_six(), 4));
  CHECK_THROWS_AS(is_banner(three_triangles(), 0), InvalidInput);
  CHECK_THROWS_AS(is_banner(three_triangles(), 4), InvalidInput);
}

TEST_CASE("critical cliques match their definition") {
  for (const auto& d : small_corpus()) {
    const auto facets = oracle::facet_masks(d);
    std::vector<Face> expected;
    for (unsigned s = 1; s < (1u << d.n()); ++s) {
      bool pairs = true, near = false;
      for (int a = 0; a < d.n(); ++a)
        for (int b = a + 1; b < d.n(); ++b)
          if ((s >> a & 1) && (s >> b & 1) && !oracle::is_face(facets, (1u << a) | (1u << b))) pairs = false;
      for (int v = 0; v < d.n(); ++v)
        if ((s >> v & 1) && oracle::is_face(facets, s & ~(1u << v))) near = true;
      if (pairs && near) expected.push_back(oracle::face_of(s));
    }
    std::sort(expected.begin(), expected.end());
    auto got = critical_cliques(d);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("banner properties") {
  for (const auto& d : small_corpus()) {
    const int top = d.dim() + 1;
    for (int i = 1; i < top; ++i)
      if (is_banner(d, i)) CHECK(is_banner(d, i + 1));
    if (top >= 2) CHECK(is_banner(d, 1) == is_banner(d, 2));
    for (int m = 1; m + 1 <= top; ++m)
      if (is_banner(d, m + 1)) CHECK_FALSE(has_minimal_nonface_card_geq(d, m + 2));
  }
}

TEST_CASE("clutter_from_skeleton") {
  CHECK(clutter_from_skeleton(three_triangles(), 2) == Clutter::complete(4, 2));
  CHECK(clutter_from_skeleton(three_triangles(), 3).circuits() == three_triangles().facets());
  CHECK(clutter_from_skeleton(SimplicialComplex(3, {{1, 2}, {2, 3}}), 2) == path());
  CHECK_THROWS_AS(clutter_from_skeleton(SimplicialComplex(3, {{1, 2}, {3}}), 2), InvalidInput);
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(clique_complex(clutter_from_skeleton(SimplicialComplex::simplex(n), m)) == SimplicialComplex::simplex(n));
}

TEST_CASE("lemma_conditions examples") {
  const auto full = lemma_conditions(Clutter::complete(5, 3));
  CHECK(full.union_closed);
  CHECK(full.exchange_closed);
  const auto p = lemma_conditions(path());
  CHECK_FALSE(p.union_closed);
  REQUIRE(p.union_witness.has_value());
  const auto t = lemma_conditions(three_clutter());
  CHECK_FALSE(t.union_closed);
  REQUIRE(t.union_witness.has_value());
}

TEST_CASE("enumeration") {
  const auto two = all_complexes(2);
  REQUIRE(two.size() == 2);
  std::set<std::vector<Face>> facet_sets;
  for (const auto& d : two) facet_sets.insert(d.facets());
  CHECK(facet_sets == std::set<std::vector<Face>>{{{1}, {2}}, {{1, 2}}});

  const std::size_t counts[] = {1, 2, 9, 114};
  for (int n = 1; n <= 4; ++n) {
    auto stream = enumerate_complexes(n);
    std::set<std::vector<Face>> seen;
    std::size_t k = 0;
    while (auto d = stream.next()) {
      CHECK(d->n() == n);
      seen.insert(d->facets());
      ++k;
    }
    CHECK(k == counts[n - 1]);
    CHECK(seen.size() == k);
  }
  CHECK_THROWS_AS(enumerate_complexes(6), InvalidInput);

  // Graphs on [n] with no isolated vertex.
  CHECK(enumerate_clutters(2, 2).size() == 1);
  CHECK(enumerate_clutters(3, 2).size() == 4);
  CHECK(enumerate_clutters(4, 2).size() == 41);
}

TEST_CASE("random generators") {
  CHECK(random_clutter(4, 2, 1.0, 7) == Clutter::complete(4, 2));
  CHECK(random_clutter(6, 3, 0.4, 11) == random_clutter(6, 3, 0.4, 11));
  CHECK(random_complex(6, 3, 0.4, 11) == random_complex(6, 3, 0.4, 11));
  CHECK_THROWS_AS(random_clutter(4, 2, 0.0, 1), InvalidInput);
  CHECK_THROWS_AS(random_clutter(4, 2, 1.5, 1), InvalidInput);
  CHECK_THROWS_AS(random_complex(4, 4, 0.5, 1), InvalidInput);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_complex(6, 2, 0.3, seed);
    CHECK(d.n() == 6);
    CHECK(d.dim() <= 2);
  }
}

TEST_CASE("clutter validation") {
  CHECK_THROWS_AS(Clutter(3, 2, {{1, 2}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Clutter(3, 2, {{1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Clutter(3, 2, {{1, 2, 3}}), InvalidInput);
  CHECK_THROWS_AS(Clutter(3, 2, {}), InvalidInput);
  CHECK(Clutter(3, 2, {{2, 3}, {1, 2}}).circuits() == std::vector<Face>{{1, 2}, {2, 3}});
}
