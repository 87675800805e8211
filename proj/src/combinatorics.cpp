#include "linstrand/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "linstrand/error.hpp"

namespace linstrand {

namespace {

int popcount(VertexMask m) { return std::popcount(m); }

VertexMask full_mask(int n) { return n >= 32 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1); }

void check_vertex_count(int n) {
  if (n < 1 || n > kMaxVertices)
    throw InvalidInput("vertex count " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxVertices));
}

// Portable uniform double in [0, 1) from a 64-bit engine.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_density(double density) {
  if (!(density > 0.0 && density <= 1.0))
    throw InvalidInput("density must lie in (0, 1]");
}

// All masks of the given popcount among n vertices, ascending in lexicographic
// vertex order.
std::vector<VertexMask> masks_of_size(int n, int k) {
  std::vector<VertexMask> out;
  for (VertexMask s = 0; s <= full_mask(n); ++s) {
    if (popcount(s) == k) out.push_back(s);
    if (s == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end(), mask_shortlex_less);
  return out;
}

std::vector<Face> sorted_faces(std::vector<VertexMask> masks) {
  std::sort(masks.begin(), masks.end(), mask_shortlex_less);
  std::vector<Face> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(Face::from_mask(m));
  return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// ---------------------------------------------------------------------------
// Face

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (vertices_[k] < 1 || vertices_[k] > kMaxVertices)
      throw InvalidInput("vertex " + std::to_string(vertices_[k]) + " out of range");
    if (k > 0 && vertices_[k - 1] >= vertices_[k])
      throw InvalidInput("face vertices must be strictly ascending: " + to_string());
  }
}

Face Face::from_unsorted(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Face(std::move(vertices));
}

Face Face::from_mask(VertexMask mask) {
  std::vector<int> v;
  for (int b = 0; b < 32; ++b)
    if (mask & (VertexMask{1} << b)) v.push_back(b + 1);
  return Face(std::move(v));
}

bool Face::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

VertexMask Face::mask() const {
  VertexMask m = 0;
  for (int v : vertices_) m |= VertexMask{1} << (v - 1);
  return m;
}

std::strong_ordering Face::operator<=>(const Face& other) const {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return vertices_ <=> other.vertices_;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < vertices_.size(); ++k) os << (k ? "," : "") << vertices_[k];
  os << '}';
  return os.str();
}

bool mask_shortlex_less(VertexMask a, VertexMask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  // Same cardinality: lexicographic on ascending vertex lists. The first
  // differing vertex decides; the face holding the smaller vertex is smaller.
  VertexMask diff = a ^ b;
  if (diff == 0) return false;
  VertexMask low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::uint64_t FVector::at_dim(int t) const {
  if (t == -1) return 1;
  if (t < -1) return 0;
  return (*this)[static_cast<std::size_t>(t)];
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> faces) : n_(n), dim_(-1) {
  check_vertex_count(n);
  if (faces.empty()) throw InvalidInput("simplicial complex needs at least one face");
  VertexMask covered = 0;
  for (const auto& f : faces) {
    if (f.empty()) continue;
    if (f.max_vertex() > n)
      throw InvalidInput("vertex " + std::to_string(f.max_vertex()) + " exceeds n = " + std::to_string(n));
    covered |= f.mask();
  }
  for (int v = 1; v <= n; ++v)
    if (!(covered & (VertexMask{1} << (v - 1))))
      throw InvalidInput("isolated vertex " + std::to_string(v) + " lies in no facet");

  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // Larger faces come later in shortlex order; keep a face only if no later
  // face contains it.
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (faces[k].empty()) continue;
    VertexMask mk = faces[k].mask();
    bool contained = false;
    for (std::size_t l = k + 1; l < faces.size() && !contained; ++l)
      contained = faces[l].size() > faces[k].size() && (faces[l].mask() & mk) == mk;
    if (!contained) facets_.push_back(faces[k]);
  }

  faces_.insert(0);
  for (const auto& f : facets_) {
    dim_ = std::max(dim_, f.dim());
    VertexMask fm = f.mask();
    // Enumerate all submasks of the facet.
    for (VertexMask s = fm;; s = (s - 1) & fm) {
      faces_.insert(s);
      if (s == 0) break;
    }
  }
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  check_vertex_count(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  return SimplicialComplex(n, {Face(std::move(v))});
}

bool SimplicialComplex::contains(const Face& face) const {
  if (face.max_vertex() > n_) return false;
  return contains(face.mask());
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<VertexMask> masks;
  masks.reserve(faces_.size());
  for (auto m : faces_)
    if (m != 0) masks.push_back(m);
  return sorted_faces(std::move(masks));
}

std::vector<Face> SimplicialComplex::faces_of_size(std::size_t size) const {
  std::vector<VertexMask> masks;
  for (auto m : faces_)
    if (m != 0 && static_cast<std::size_t>(popcount(m)) == size) masks.push_back(m);
  return sorted_faces(std::move(masks));
}

std::string SimplicialComplex::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t k = 0; k < facets_.size(); ++k) os << (k ? "," : "") << facets_[k].to_string();
  os << "> on [" << n_ << "]";
  return os.str();
}

SimplicialComplex normalize_facets(std::vector<Face> faces, int n) {
  return SimplicialComplex(n, std::move(faces));
}

// ---------------------------------------------------------------------------
// Clutter

Clutter::Clutter(int n, int m, std::vector<Face> circuits) : n_(n), m_(m) {
  check_vertex_count(n);
  if (m < 1 || m > n) throw InvalidInput("circuit size m = " + std::to_string(m) + " outside 1..n");
  if (circuits.empty()) throw InvalidInput("clutter needs at least one circuit");
  VertexMask covered = 0;
  for (const auto& c : circuits) {
    if (static_cast<int>(c.size()) != m)
      throw InvalidInput("circuit " + c.to_string() + " does not have size " + std::to_string(m));
    if (c.max_vertex() > n)
      throw InvalidInput("vertex " + std::to_string(c.max_vertex()) + " exceeds n = " + std::to_string(n));
    if (!masks_.insert(c.mask()).second) throw InvalidInput("duplicate circuit " + c.to_string());
    covered |= c.mask();
  }
  for (int v = 1; v <= n; ++v)
    if (!(covered & (VertexMask{1} << (v - 1))))
      throw InvalidInput("vertex " + std::to_string(v) + " lies in no circuit");
  std::sort(circuits.begin(), circuits.end());
  circuits_ = std::move(circuits);
}

Clutter Clutter::complete(int n, int m) {
  check_vertex_count(n);
  if (m < 1 || m > n) throw InvalidInput("circuit size m outside 1..n");
  return Clutter(n, m, sorted_faces(masks_of_size(n, m)));
}

std::string Clutter::to_string() const {
  std::ostringstream os;
  os << m_ << "-clutter {";
  for (std::size_t k = 0; k < circuits_.size(); ++k) os << (k ? "," : "") << circuits_[k].to_string();
  os << "} on [" << n_ << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Complex operations

FVector f_vector(const SimplicialComplex& delta) {
  FVector f;
  f.counts.assign(static_cast<std::size_t>(delta.dim() + 1), 0);
  // Re-enumerate all subsets of facets, deduplicated through a hash set.
  std::unordered_set<VertexMask> seen;
  for (const auto& facet : delta.facets()) {
    VertexMask fm = facet.mask();
    for (VertexMask s = fm; s != 0; s = (s - 1) & fm)
      if (seen.insert(s).second) ++f.counts[static_cast<std::size_t>(popcount(s) - 1)];
  }
  return f;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& delta) {
  std::vector<VertexMask> out;
  const VertexMask all = full_mask(delta.n());
  for (VertexMask s = 1;; ++s) {
    if (!delta.contains(s)) {
      bool minimal = true;
      for (VertexMask rest = s; rest && minimal; rest &= rest - 1) {
        VertexMask bit = rest & (~rest + 1);
        minimal = delta.contains(s & ~bit);
      }
      if (minimal) out.push_back(s);
    }
    if (s == all) break;
  }
  return sorted_faces(std::move(out));
}

bool has_minimal_nonface_card_geq(const SimplicialComplex& delta, int c) {
  if (c < 1) throw InvalidInput("cardinality bound must be at least 1");
  for (const auto& f : minimal_nonfaces(delta))
    if (static_cast<int>(f.size()) >= c) return true;
  return false;
}

SimplicialComplex skeleton(const SimplicialComplex& delta, int i) {
  if (i < 0) throw InvalidInput("skeleton dimension must be nonnegative");
  std::vector<Face> faces;
  for (const auto& facet : delta.facets()) {
    if (facet.dim() <= i) {
      faces.push_back(facet);
      continue;
    }
    VertexMask fm = facet.mask();
    for (VertexMask s = fm; s != 0; s = (s - 1) & fm)
      if (popcount(s) == i + 1) faces.push_back(Face::from_mask(s));
  }
  return SimplicialComplex(delta.n(), std::move(faces));
}

SimplicialComplex clique_complex(const Clutter& clutter) {
  const int n = clutter.n();
  const int m = clutter.m();
  const VertexMask all = full_mask(n);
  std::vector<char> is_face(static_cast<std::size_t>(all) + 1, 0);
  is_face[0] = 1;
  std::vector<VertexMask> circuits;
  for (const auto& c : clutter.circuits()) circuits.push_back(c.mask());

  // Submasks are numerically smaller, so a single ascending pass suffices.
  for (VertexMask s = 1;; ++s) {
    int k = popcount(s);
    bool face;
    if (k < m) {
      face = std::any_of(circuits.begin(), circuits.end(), [s](VertexMask c) { return (c & s) == s; });
    } else if (k == m) {
      face = clutter.contains(s);
    } else {
      // All m-subsets are circuits iff every codimension-one subset is a clique.
      face = true;
      for (VertexMask rest = s; rest && face; rest &= rest - 1) {
        VertexMask bit = rest & (~rest + 1);
        face = is_face[s & ~bit] != 0;
      }
    }
    is_face[s] = face ? 1 : 0;
    if (s == all) break;
  }

  std::vector<Face> maximal;
  for (VertexMask s = 1;; ++s) {
    if (is_face[s]) {
      bool is_max = true;
      for (int v = 0; v < n && is_max; ++v) {
        VertexMask bit = VertexMask{1} << v;
        if (!(s & bit) && is_face[s | bit]) is_max = false;
      }
      if (is_max) maximal.push_back(Face::from_mask(s));
    }
    if (s == all) break;
  }
  return SimplicialComplex(n, std::move(maximal));
}

bool is_complete(const Clutter& clutter) {
  return clutter.circuits().size() == binomial(clutter.n(), clutter.m());
}

std::vector<Face> critical_cliques(const SimplicialComplex& delta) {
  std::vector<VertexMask> out;
  const VertexMask all = full_mask(delta.n());
  for (VertexMask s = 1;; ++s) {
    bool pairs = true;
    for (VertexMask a = s; a && pairs; a &= a - 1) {
      VertexMask abit = a & (~a + 1);
      for (VertexMask b = a & (a - 1); b && pairs; b &= b - 1) {
        VertexMask bbit = b & (~b + 1);
        pairs = delta.contains(abit | bbit);
      }
    }
    if (pairs) {
      bool drop = false;
      for (VertexMask rest = s; rest && !drop; rest &= rest - 1) {
        VertexMask bit = rest & (~rest + 1);
        drop = delta.contains(s & ~bit);
      }
      if (drop) out.push_back(s);
    }
    if (s == all) break;
  }
  return sorted_faces(std::move(out));
}

bool is_banner(const SimplicialComplex& delta, int i) {
  if (i < 1 || i > delta.dim() + 1)
    throw InvalidInput("banner index " + std::to_string(i) + " outside 1.." + std::to_string(delta.dim() + 1));
  for (const auto& t : critical_cliques(delta))
    if (static_cast<int>(t.size()) >= i + 1 && !delta.contains(t)) return false;
  return true;
}

Clutter clutter_from_skeleton(const SimplicialComplex& delta, int m) {
  if (m < 1) throw InvalidInput("m must be positive");
  for (const auto& f : delta.facets())
    if (static_cast<int>(f.size()) < m)
      throw InvalidInput("facet " + f.to_string() + " has dimension below m-1 = " + std::to_string(m - 1));
  return Clutter(delta.n(), m, delta.faces_of_size(static_cast<std::size_t>(m)));
}

LemmaConditions lemma_conditions(const Clutter& clutter, int max_face_size) {
  const auto delta = clique_complex(clutter);
  const int m = clutter.m();
  const int bound = max_face_size > 0 ? max_face_size : delta.dim() + 1;
  std::vector<Face> faces;
  for (auto& f : delta.faces())
    if (static_cast<int>(f.size()) <= bound) faces.push_back(std::move(f));

  LemmaConditions out;
  for (std::size_t p = 0; p < faces.size() && out.union_closed; ++p) {
    VertexMask a = faces[p].mask();
    for (std::size_t q = p + 1; q < faces.size(); ++q) {
      VertexMask b = faces[q].mask();
      if (popcount(a & b) >= m - 1 && !delta.contains(a | b)) {
        out.union_closed = false;
        out.union_witness = faces[p].to_string() + " u " + faces[q].to_string() + " = " +
                            Face::from_mask(a | b).to_string() + " is not a clique";
        break;
      }
    }
  }

  const auto& circuits = clutter.circuits();
  for (std::size_t t = 0; t < circuits.size() && out.exchange_closed; ++t) {
    VertexMask tau = circuits[t].mask();
    for (std::size_t s = 0; s < circuits.size() && out.exchange_closed; ++s) {
      VertexMask sigma = circuits[s].mask();
      for (const auto& rho_face : faces) {
        VertexMask rho = rho_face.mask();
        if ((rho & (tau | sigma)) != (tau | sigma)) continue;
        for (int c = 0; c < clutter.n(); ++c) {
          VertexMask cb = VertexMask{1} << c;
          if (rho & cb) continue;
          if (delta.contains(tau | cb) != delta.contains(sigma | cb)) {
            out.exchange_closed = false;
            out.exchange_witness = "tau=" + circuits[t].to_string() + " sigma=" + circuits[s].to_string() +
                                   " rho=" + rho_face.to_string() + " c=" + std::to_string(c + 1);
            break;
          }
        }
        if (!out.exchange_closed) break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

Clutter random_clutter(int n, int m, double density, std::uint64_t seed) {
  check_vertex_count(n);
  if (m < 1 || m > n) throw InvalidInput("circuit size m outside 1..n");
  check_density(density);
  std::mt19937_64 rng(seed);
  const auto candidates = masks_of_size(n, m);
  std::vector<VertexMask> chosen;
  VertexMask covered = 0;
  for (auto c : candidates)
    if (unit_draw(rng) < density) {
      chosen.push_back(c);
      covered |= c;
    }
  for (int v = 0; v < n; ++v) {
    VertexMask bit = VertexMask{1} << v;
    if (covered & bit) continue;
    std::vector<VertexMask> through;
    for (auto c : candidates)
      if (c & bit) through.push_back(c);
    VertexMask pick = through[static_cast<std::size_t>(rng() % through.size())];
    chosen.push_back(pick);
    covered |= pick;
  }
  std::sort(chosen.begin(), chosen.end(), mask_shortlex_less);
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return Clutter(n, m, sorted_faces(std::move(chosen)));
}

SimplicialComplex random_complex(int n, int dim, double density, std::uint64_t seed) {
  check_vertex_count(n);
  if (dim < 0 || dim >= n) throw InvalidInput("dimension outside 0..n-1");
  check_density(density);
  std::mt19937_64 rng(seed);
  std::vector<Face> faces;
  VertexMask covered = 0;
  for (int k = 2; k <= dim + 1; ++k)
    for (auto s : masks_of_size(n, k))
      if (unit_draw(rng) < density) {
        faces.push_back(Face::from_mask(s));
        covered |= s;
      }
  for (int v = 0; v < n; ++v)
    if (!(covered & (VertexMask{1} << v))) faces.push_back(Face{v + 1});
  return SimplicialComplex(n, std::move(faces));
}

ComplexStream::ComplexStream(int n) : n_(n) {
  if (n < 1 || n > 5) throw InvalidInput("exhaustive enumeration supports 1 <= n <= 5");
  // Antichains of nonempty subsets, built by scanning candidates from large to
  // small: a candidate may join unless it lies inside an already chosen set.
  std::vector<VertexMask> candidates;
  for (int k = n; k >= 1; --k) {
    auto level = masks_of_size(n, k);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }
  const VertexMask all = full_mask(n);
  std::vector<VertexMask> chosen;
  auto recurse = [&](auto&& self, std::size_t idx, VertexMask covered) -> void {
    if (idx == candidates.size()) {
      if (covered == all) {
        auto family = chosen;
        std::sort(family.begin(), family.end(), mask_shortlex_less);
        families_.push_back(std::move(family));
      }
      return;
    }
    VertexMask c = candidates[idx];
    bool blocked = std::any_of(chosen.begin(), chosen.end(), [c](VertexMask f) { return (f & c) == c; });
    if (!blocked) {
      chosen.push_back(c);
      self(self, idx + 1, covered | c);
      chosen.pop_back();
    }
    self(self, idx + 1, covered);
  };
  recurse(recurse, 0, 0);
}

std::optional<SimplicialComplex> ComplexStream::next() {
  if (pos_ >= families_.size()) return std::nullopt;
  const auto& family = families_[pos_++];
  std::vector<Face> faces;
  for (auto m : family) faces.push_back(Face::from_mask(m));
  return SimplicialComplex(n_, std::move(faces));
}

ComplexStream enumerate_complexes(int n) { return ComplexStream(n); }

std::vector<SimplicialComplex> all_complexes(int n) {
  std::vector<SimplicialComplex> out;
  auto stream = enumerate_complexes(n);
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<Clutter> enumerate_clutters(int n, int m) {
  check_vertex_count(n);
  if (m < 1 || m > n) throw InvalidInput("circuit size m outside 1..n");
  const auto candidates = masks_of_size(n, m);
  if (candidates.size() > 20) throw InvalidInput("too many candidate circuits for exhaustive enumeration");
  const VertexMask all = full_mask(n);
  std::vector<Clutter> out;
  const std::uint32_t limit = std::uint32_t{1} << candidates.size();
  for (std::uint32_t pick = 1; pick < limit; ++pick) {
    VertexMask covered = 0;
    std::vector<Face> circuits;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (pick & (std::uint32_t{1} << k)) {
        covered |= candidates[k];
        circuits.push_back(Face::from_mask(candidates[k]));
      }
    if (covered == all) out.emplace_back(n, m, std::move(circuits));
  }
  return out;
}

}  // namespace linstrand
