#pragma once

// Simplicial complexes and uniform clutters on the vertex set [n] = {1, ..., n}.
//
// Faces are stored as ascending vertex lists and, internally, as bitmasks
// (bit v-1 for vertex v). All predicates are evaluated by exhaustive subset
// scans, which is adequate for the vertex counts this library targets
// (n <= kMaxVertices, and in practice n <= 12).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace linstrand {

using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 24;

class Face {
public:
  Face() = default;

  /// Vertices must be strictly ascending and positive.
  explicit Face(std::vector<int> vertices);
  Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

  /// Sorts the input first; duplicates are still rejected.
  static Face from_unsorted(std::vector<int> vertices);
  static Face from_mask(VertexMask mask);

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const noexcept { return vertices_.empty(); }
  int operator[](std::size_t k) const { return vertices_[k]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  int max_vertex() const noexcept { return vertices_.empty() ? 0 : vertices_.back(); }
  bool contains(int v) const;
  bool is_subset_of(const Face& other) const;
  VertexMask mask() const;

  /// Shortlex: cardinality first, then lexicographic on the vertex lists.
  std::strong_ordering operator<=>(const Face& other) const;
  bool operator==(const Face& other) const = default;

  std::string to_string() const;

private:
  std::vector<int> vertices_;
};

/// Shortlex comparison on masks, consistent with Face ordering.
bool mask_shortlex_less(VertexMask a, VertexMask b);

struct FVector {
  /// counts[t] = number of t-dimensional faces.
  std::vector<std::uint64_t> counts;

  std::uint64_t operator[](std::size_t t) const { return t < counts.size() ? counts[t] : 0; }
  /// f_t with out-of-range t (including t = -1 for the empty face) handled: f_{-1} = 1.
  std::uint64_t at_dim(int t) const;
  bool operator==(const FVector&) const = default;
};

class SimplicialComplex {
public:
  /// Normalizing constructor; see normalize_facets.
  SimplicialComplex(int n, std::vector<Face> faces);

  static SimplicialComplex simplex(int n);

  int n() const noexcept { return n_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  int dim() const noexcept { return dim_; }

  bool contains(const Face& face) const;
  bool contains(VertexMask mask) const { return faces_.count(mask) != 0; }

  /// All nonempty faces in shortlex order.
  std::vector<Face> faces() const;
  /// All nonempty faces of the given cardinality in lexicographic order.
  std::vector<Face> faces_of_size(std::size_t size) const;

  bool operator==(const SimplicialComplex& other) const {
    return n_ == other.n_ && facets_ == other.facets_;
  }

  std::string to_string() const;

private:
  int n_;
  int dim_;
  std::vector<Face> facets_;
  std::unordered_set<VertexMask> faces_;  // includes the empty face
};

/// m-uniform clutter; every vertex of [n] lies in some circuit.
class Clutter {
public:
  Clutter(int n, int m, std::vector<Face> circuits);

  static Clutter complete(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const std::vector<Face>& circuits() const noexcept { return circuits_; }
  bool contains(const Face& face) const { return masks_.count(face.mask()) != 0; }
  bool contains(VertexMask mask) const { return masks_.count(mask) != 0; }

  bool operator==(const Clutter& other) const {
    return n_ == other.n_ && m_ == other.m_ && circuits_ == other.circuits_;
  }

  std::string to_string() const;

private:
  int n_;
  int m_;
  std::vector<Face> circuits_;
  std::unordered_set<VertexMask> masks_;
};

/// Removes duplicates and faces contained in others; sorts facets.
/// Throws InvalidInput on empty input, out-of-range vertex or uncovered vertex.
SimplicialComplex normalize_facets(std::vector<Face> faces, int n);

FVector f_vector(const SimplicialComplex& delta);

std::vector<Face> minimal_nonfaces(const SimplicialComplex& delta);
bool has_minimal_nonface_card_geq(const SimplicialComplex& delta, int c);

SimplicialComplex skeleton(const SimplicialComplex& delta, int i);

SimplicialComplex clique_complex(const Clutter& clutter);
bool is_complete(const Clutter& clutter);

std::vector<Face> critical_cliques(const SimplicialComplex& delta);
/// Requires 1 <= i <= dim + 1.
bool is_banner(const SimplicialComplex& delta, int i);

/// Circuits are the m-faces of delta; every facet must have at least m vertices.
Clutter clutter_from_skeleton(const SimplicialComplex& delta, int m);

struct LemmaConditions {
  bool union_closed = true;      // condition (a)
  bool exchange_closed = true;   // condition (b)
  std::optional<std::string> union_witness;
  std::optional<std::string> exchange_witness;
};

/// Checks the two necessary conditions for linear presentation over all faces of
/// the clique complex with at most max_face_size vertices (0 = no bound).
LemmaConditions lemma_conditions(const Clutter& clutter, int max_face_size = 0);

// Instance generation.

Clutter random_clutter(int n, int m, double density, std::uint64_t seed);
SimplicialComplex random_complex(int n, int dim, double density, std::uint64_t seed);

/// Every simplicial complex on exactly the vertex set [n] (1 <= n <= 5), each
/// labeled complex once. Single consumer.
class ComplexStream {
public:
  explicit ComplexStream(int n);
  std::optional<SimplicialComplex> next();
  std::size_t size() const noexcept { return families_.size(); }

private:
  int n_;
  std::vector<std::vector<VertexMask>> families_;
  std::size_t pos_ = 0;
};

ComplexStream enumerate_complexes(int n);
std::vector<SimplicialComplex> all_complexes(int n);

/// Every m-uniform clutter covering [n] (C(n, m) <= 20).
std::vector<Clutter> enumerate_clutters(int n, int m);

std::uint64_t binomial(int n, int k);

}  // namespace linstrand
