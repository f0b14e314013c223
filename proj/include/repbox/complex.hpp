#pragma once

#include <optional>
#include <span>
#include <vector>

#include "repbox/bits.hpp"
#include "repbox/face.hpp"

namespace repbox {

/// Whether a constructor may produce vertices that lie in no face.
/// Such "ghost" vertices arise from singleton missing faces, empty sets in a
/// convex family, and missing faces of Gamma equal to the whole vertex set.
enum class GhostPolicy { kReject, kAllow };

/// Minimal non-faces of a complex on n vertices, canonically ordered.
struct MissingFaceFamily {
  std::size_t n = 0;
  std::vector<Face> members;
};

/// Immutable simplicial complex stored by its facets.
///
/// Two degenerate cases are kept apart: the void complex has no faces at all,
/// while the empty complex {∅} has exactly the empty face. Membership of a
/// face is decided by containment in some facet; the full face list is only
/// materialized on request.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(std::vector<Label> vertices, std::span<const Face> facets,
                                       GhostPolicy ghosts = GhostPolicy::kReject);
  static SimplicialComplex from_missing_faces(std::vector<Label> vertices,
                                              std::span<const Face> missing,
                                              GhostPolicy ghosts = GhostPolicy::kReject);
  /// Facets given as index masks over the sorted vertex list; ghosts allowed.
  static SimplicialComplex from_facet_masks(std::vector<Label> vertices, std::vector<Mask> facets);

  static SimplicialComplex complete(std::vector<Label> vertices);
  /// {∅} on the given (ghost) vertices.
  static SimplicialComplex empty_complex(std::vector<Label> vertices);
  static SimplicialComplex void_complex(std::vector<Label> vertices);

  [[nodiscard]] const std::vector<Label>& vertices() const { return vertices_; }
  [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
  [[nodiscard]] std::span<const Mask> facet_masks() const { return facets_; }
  [[nodiscard]] std::vector<Face> facets() const;

  [[nodiscard]] bool is_face(const Face& sigma) const;
  [[nodiscard]] bool is_face_mask(Mask sigma) const;

  [[nodiscard]] bool is_void() const { return facets_.empty(); }
  [[nodiscard]] bool is_complete() const;
  /// Largest face size minus one; -1 for {∅} and -2 for the void complex.
  [[nodiscard]] int dimension() const;
  [[nodiscard]] std::vector<Label> ghost_vertices() const;

  [[nodiscard]] Mask to_mask(const Face& sigma) const;
  [[nodiscard]] Face to_face(Mask sigma) const;
  [[nodiscard]] Mask vertex_mask() const { return low_bits(vertices_.size()); }
  [[nodiscard]] std::optional<std::size_t> index_of(Label v) const;

  /// Every face, ordered by size then lexicographically. Guarded against blowup.
  [[nodiscard]] std::vector<Mask> face_masks() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) = default;

 private:
  SimplicialComplex(std::vector<Label> vertices, std::vector<Mask> facets);

  std::vector<Label> vertices_;
  std::vector<Mask> facets_;
};

struct Graph {
  std::vector<Label> vertices;
  std::vector<Face> edges;
};

[[nodiscard]] MissingFaceFamily missing_faces(const SimplicialComplex& x);

/// Maximal missing-face dimension. Throws DomainError for the complete complex.
[[nodiscard]] int h_number(const SimplicialComplex& x);

[[nodiscard]] SimplicialComplex induced_subcomplex(const SimplicialComplex& x, const Face& subset);

/// Complexes must share the vertex set.
[[nodiscard]] SimplicialComplex intersect_complexes(std::span<const SimplicialComplex> xs);

[[nodiscard]] SimplicialComplex clique_complex(const Graph& g);

[[nodiscard]] SimplicialComplex complete_skeleton(std::vector<Label> vertices, int k);

/// The 1-skeleton of x as a graph.
[[nodiscard]] Graph one_skeleton(const SimplicialComplex& x);

/// X ∪ 2^sigma on the same vertex set.
[[nodiscard]] SimplicialComplex add_simplex(const SimplicialComplex& x, const Face& sigma);

/// Complex on the missing faces of x (relabeled 0..|M|-1), where a family is a
/// face when its union is not the whole vertex set.
struct GammaComplex {
  SimplicialComplex complex;
  /// vertex_faces[i] is the missing face of x carried by Gamma-vertex i.
  std::vector<Face> vertex_faces;
  /// Gamma-vertices lying in no face; these are missing faces equal to V.
  std::vector<Label> excluded;
};

[[nodiscard]] GammaComplex gamma_complex(const SimplicialComplex& x);

}  // namespace repbox
