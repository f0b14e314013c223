#include "repbox/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "repbox/errors.hpp"

namespace repbox {

namespace {

constexpr std::size_t kMaxFaces = std::size_t{1} << 22;

std::vector<Label> canonical_vertices(std::vector<Label> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw DomainError("duplicate vertex label");
  if (vertices.size() > kMaxVertices)
    throw GuardError("complex has more than 64 vertices");
  return vertices;
}

Mask mask_in(const std::vector<Label>& vertices, const Face& sigma) {
  Mask m = 0;
  for (Label v : sigma) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
      throw DomainError("unknown vertex label " + std::to_string(v));
    m |= bit(static_cast<std::size_t>(it - vertices.begin()));
  }
  return m;
}

void check_ghosts(const std::vector<Label>& vertices, const std::vector<Mask>& facets,
                  GhostPolicy ghosts) {
  if (ghosts == GhostPolicy::kAllow) return;
  Mask covered = 0;
  for (Mask f : facets) covered |= f;
  if (covered != low_bits(vertices.size()))
    throw DomainError("vertex " +
                      std::to_string(vertices[static_cast<std::size_t>(
                          std::countr_zero(~covered & low_bits(vertices.size())))]) +
                      " lies in no face");
}

}  // namespace

std::vector<Mask> maximal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::stable_sort(masks.begin(), masks.end(),
                   [](Mask a, Mask b) { return popcount(a) > popcount(b); });
  std::vector<Mask> kept;
  for (Mask m : masks) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [m](Mask k) { return is_submask(m, k); });
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::stable_sort(masks.begin(), masks.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  std::vector<Mask> kept;
  for (Mask m : masks) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [m](Mask k) { return is_submask(k, m); });
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

SimplicialComplex::SimplicialComplex(std::vector<Label> vertices, std::vector<Mask> facets)
    : vertices_(std::move(vertices)), facets_(maximal_masks(std::move(facets))) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Label> vertices,
                                                 std::span<const Face> facets,
                                                 GhostPolicy ghosts) {
  vertices = canonical_vertices(std::move(vertices));
  std::vector<Mask> masks;
  masks.reserve(facets.size());
  for (const Face& f : facets) masks.push_back(mask_in(vertices, f));
  check_ghosts(vertices, masks, ghosts);
  return SimplicialComplex(std::move(vertices), std::move(masks));
}

SimplicialComplex SimplicialComplex::from_facet_masks(std::vector<Label> vertices,
                                                      std::vector<Mask> facets) {
  vertices = canonical_vertices(std::move(vertices));
  for (Mask f : facets)
    if (!is_submask(f, low_bits(vertices.size())))
      throw DomainError("facet mask outside the vertex set");
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex SimplicialComplex::from_missing_faces(std::vector<Label> vertices,
                                                        std::span<const Face> missing,
                                                        GhostPolicy ghosts) {
  vertices = canonical_vertices(std::move(vertices));
  if (!is_antichain(missing)) throw DomainError("missing faces do not form an antichain");
  std::vector<Mask> m;
  for (const Face& tau : missing) {
    if (tau.size() <= 1 && ghosts == GhostPolicy::kReject)
      throw DomainError("missing face " + to_string(tau) + " would delete a vertex");
    m.push_back(mask_in(vertices, tau));
  }
  const std::size_t n = vertices.size();
  auto blocked = [&m](Mask s) {
    return std::any_of(m.begin(), m.end(), [s](Mask tau) { return is_submask(tau, s); });
  };
  // Depth-first over faces; a face is kept when no vertex can be added.
  std::vector<Mask> facets;
  std::size_t visited = 0;
  auto visit = [&](auto&& self, std::size_t next, Mask s) -> void {
    if (++visited > kMaxFaces) throw GuardError("face enumeration exceeds guard");
    if (next == n) {
      for (std::size_t v = 0; v < n; ++v)
        if (!(s & bit(v)) && !blocked(s | bit(v))) return;
      facets.push_back(s);
      return;
    }
    if (!blocked(s | bit(next))) self(self, next + 1, s | bit(next));
    self(self, next + 1, s);
  };
  if (!blocked(0)) visit(visit, 0, 0);
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex SimplicialComplex::complete(std::vector<Label> vertices) {
  vertices = canonical_vertices(std::move(vertices));
  Mask all = low_bits(vertices.size());
  return SimplicialComplex(std::move(vertices), {all});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<Label> vertices) {
  return SimplicialComplex(canonical_vertices(std::move(vertices)), {Mask{0}});
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<Label> vertices) {
  return SimplicialComplex(canonical_vertices(std::move(vertices)), {});
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (Mask f : facets_) out.push_back(to_face(f));
  return out;
}

bool SimplicialComplex::is_face(const Face& sigma) const {
  return is_face_mask(mask_in(vertices_, sigma));
}

bool SimplicialComplex::is_face_mask(Mask sigma) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [sigma](Mask f) { return is_submask(sigma, f); });
}

bool SimplicialComplex::is_complete() const {
  return facets_.size() == 1 && facets_.front() == vertex_mask();
}

int SimplicialComplex::dimension() const {
  int dim = -2;
  for (Mask f : facets_) dim = std::max(dim, popcount(f) - 1);
  return dim;
}

std::vector<Label> SimplicialComplex::ghost_vertices() const {
  Mask covered = 0;
  for (Mask f : facets_) covered |= f;
  std::vector<Label> out;
  for (int i : indices_of(vertex_mask() & ~covered)) out.push_back(vertices_[static_cast<std::size_t>(i)]);
  return out;
}

Mask SimplicialComplex::to_mask(const Face& sigma) const { return mask_in(vertices_, sigma); }

Face SimplicialComplex::to_face(Mask sigma) const {
  std::vector<Label> labels;
  for (int i : indices_of(sigma)) labels.push_back(vertices_.at(static_cast<std::size_t>(i)));
  return Face(std::move(labels));
}

std::optional<std::size_t> SimplicialComplex::index_of(Label v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Mask> SimplicialComplex::face_masks() const {
  std::unordered_set<Mask> seen;
  for (Mask f : facets_) {
    if (popcount(f) > 22) throw GuardError("face enumeration exceeds guard");
    // Walk all submasks of f, including f and 0.
    for (Mask s = f;; s = (s - 1) & f) {
      seen.insert(s);
      if (seen.size() > kMaxFaces) throw GuardError("face enumeration exceeds guard");
      if (s == 0) break;
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

MissingFaceFamily missing_faces(const SimplicialComplex& x) {
  MissingFaceFamily out;
  out.n = x.num_vertices();
  if (x.is_void()) {
    out.members.emplace_back();
    return out;
  }
  const std::vector<Mask> faces = x.face_masks();
  const std::unordered_set<Mask> face_set(faces.begin(), faces.end());
  const std::size_t n = x.num_vertices();
  std::vector<Mask> missing;
  for (Mask sigma : faces) {
    // Extend by vertices above the largest index so every candidate is generated once.
    std::size_t start = sigma == 0 ? 0 : static_cast<std::size_t>(63 - std::countl_zero(sigma)) + 1;
    for (std::size_t v = start; v < n; ++v) {
      Mask tau = sigma | bit(v);
      if (face_set.count(tau)) continue;
      bool minimal = true;
      for (int u : indices_of(sigma)) {
        if (!face_set.count(tau & ~bit(static_cast<std::size_t>(u)))) {
          minimal = false;
          break;
        }
      }
      if (minimal) missing.push_back(tau);
    }
  }
  std::sort(missing.begin(), missing.end(), lex_less);
  for (Mask tau : missing) out.members.push_back(x.to_face(tau));
  return out;
}

int h_number(const SimplicialComplex& x) {
  MissingFaceFamily m = missing_faces(x);
  if (m.members.empty()) throw DomainError("h is undefined for the complete complex");
  std::size_t largest = 0;
  for (const Face& tau : m.members) largest = std::max(largest, tau.size());
  return static_cast<int>(largest) - 1;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, const Face& subset) {
  const Mask u = x.to_mask(subset);
  std::vector<Label> vertices(subset.begin(), subset.end());
  const std::vector<int> kept = indices_of(u);
  std::vector<Mask> facets;
  for (Mask f : x.facet_masks()) {
    Mask restricted = 0;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (f & bit(static_cast<std::size_t>(kept[j]))) restricted |= bit(j);
    facets.push_back(restricted);
  }
  return SimplicialComplex::from_facet_masks(std::move(vertices), std::move(facets));
}

SimplicialComplex intersect_complexes(std::span<const SimplicialComplex> xs) {
  if (xs.empty()) throw DomainError("intersection of an empty list of complexes");
  std::vector<Mask> acc(xs.front().facet_masks().begin(), xs.front().facet_masks().end());
  for (const SimplicialComplex& x : xs.subspan(1)) {
    if (x.vertices() != xs.front().vertices())
      throw DomainError("complexes have mismatched vertex sets");
    std::vector<Mask> next;
    for (Mask a : acc)
      for (Mask b : x.facet_masks()) next.push_back(a & b);
    acc = maximal_masks(std::move(next));
  }
  return SimplicialComplex::from_facet_masks(xs.front().vertices(), std::move(acc));
}

SimplicialComplex clique_complex(const Graph& g) {
  SimplicialComplex base = SimplicialComplex::complete(g.vertices);
  const std::size_t n = base.num_vertices();
  std::vector<bool> adjacent(n * n, false);
  for (const Face& e : g.edges) {
    if (e.size() != 2) throw DomainError("graph edge " + to_string(e) + " is not a pair");
    std::vector<int> ij = indices_of(base.to_mask(e));
    adjacent[static_cast<std::size_t>(ij[0]) * n + static_cast<std::size_t>(ij[1])] = true;
  }
  std::vector<Face> non_edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!adjacent[i * n + j]) non_edges.push_back(base.to_face(bit(i) | bit(j)));
  return SimplicialComplex::from_missing_faces(base.vertices(), non_edges);
}

SimplicialComplex complete_skeleton(std::vector<Label> vertices, int k) {
  SimplicialComplex base = SimplicialComplex::complete(std::move(vertices));
  const std::size_t n = base.num_vertices();
  if (k < 0 || static_cast<std::size_t>(k) + 1 > n) throw DomainError("skeleton dimension out of range");
  if (n > 24) throw GuardError("skeleton enumeration exceeds guard");
  std::vector<Mask> facets;
  for (Mask s = 0; s <= low_bits(n); ++s)
    if (popcount(s) == k + 1) facets.push_back(s);
  return SimplicialComplex::from_facet_masks(base.vertices(), std::move(facets));
}

Graph one_skeleton(const SimplicialComplex& x) {
  Graph g{x.vertices(), {}};
  const std::size_t n = x.num_vertices();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x.is_face_mask(bit(i) | bit(j))) g.edges.push_back(x.to_face(bit(i) | bit(j)));
  return g;
}

SimplicialComplex add_simplex(const SimplicialComplex& x, const Face& sigma) {
  std::vector<Mask> facets(x.facet_masks().begin(), x.facet_masks().end());
  facets.push_back(x.to_mask(sigma));
  return SimplicialComplex::from_facet_masks(x.vertices(), std::move(facets));
}

GammaComplex gamma_complex(const SimplicialComplex& x) {
  if (x.is_complete()) throw DomainError("Gamma is undefined for the complete complex");
  MissingFaceFamily m = missing_faces(x);
  if (m.members.size() > kMaxVertices) throw GuardError("Gamma would have more than 64 vertices");
  std::vector<Mask> taus;
  for (const Face& tau : m.members) taus.push_back(x.to_mask(tau));
  // A family has union != V exactly when all its members avoid a common vertex v,
  // so Gamma is the union of the simplices S_v = {tau : v not in tau}.
  std::vector<Mask> facets;
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    Mask s_v = 0;
    for (std::size_t i = 0; i < taus.size(); ++i)
      if (!(taus[i] & bit(v))) s_v |= bit(i);
    facets.push_back(s_v);
  }
  std::vector<Label> labels;
  for (std::size_t i = 0; i < taus.size(); ++i) labels.push_back(static_cast<Label>(i));
  GammaComplex out{SimplicialComplex::from_facet_masks(std::move(labels), std::move(facets)),
                   m.members, {}};
  out.excluded = out.complex.ghost_vertices();
  return out;
}

}  // namespace repbox
