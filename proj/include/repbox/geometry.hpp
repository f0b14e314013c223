#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "repbox/complex.hpp"
#include "repbox/rational.hpp"

namespace repbox {

/// Convex hull of finitely many rational points, or the empty set.
class VPolytope {
 public:
  /// Generators are sorted and deduplicated. The list must be non-empty and
  /// all points must have the same dimension.
  explicit VPolytope(std::vector<Point> generators);
  static VPolytope empty(std::size_t dim);

  [[nodiscard]] bool is_empty() const { return generators_.empty(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Point>& generators() const { return generators_; }
  /// True when p is one of the stored generators (exact equality).
  [[nodiscard]] bool has_generator(const Point& p) const;

  friend bool operator==(const VPolytope&, const VPolytope&) = default;

 private:
  VPolytope(std::size_t dim, std::vector<Point> generators);
  std::size_t dim_ = 0;
  std::vector<Point> generators_;
};

struct CommonPoint {
  bool feasible = false;
  std::optional<Point> witness;
};

/// Exact decision whether the hulls share a point, with a witness on success.
[[nodiscard]] CommonPoint hulls_have_common_point(std::span<const VPolytope> polys);

/// Exact membership test p ∈ conv(generators).
[[nodiscard]] bool hull_contains(const VPolytope& poly, const Point& p);

/// Assignment of convex sets to vertex labels in R^dim.
///
/// A representation may be stored as a Cartesian product of blocks: each
/// vertex then carries one polytope per block and its set is the product of
/// those polytopes (the hull of the product of the generator sets). Hull
/// intersections are decided block by block, which is exact because products
/// of convex sets intersect coordinate-block-wise.
class Representation {
 public:
  Representation(std::size_t dim, std::map<Label, VPolytope> sets);
  static Representation from_blocks(std::vector<std::size_t> block_dims,
                                    std::map<Label, std::vector<VPolytope>> sets);

  [[nodiscard]] std::size_t ambient_dim() const;
  [[nodiscard]] const std::vector<std::size_t>& block_dims() const { return block_dims_; }
  [[nodiscard]] std::vector<Label> vertices() const;
  [[nodiscard]] const std::vector<VPolytope>& blocks(Label v) const;
  [[nodiscard]] bool is_empty(Label v) const;
  /// Product of the per-block generator counts; 0 for the empty set.
  [[nodiscard]] std::size_t generator_count(Label v) const;
  /// The set of v as a single polytope (Cartesian product of block generators).
  [[nodiscard]] VPolytope polytope(Label v, std::size_t max_generators = 1u << 16) const;
  /// Single-block copy with every product expanded.
  [[nodiscard]] Representation materialized(std::size_t max_generators = 1u << 16) const;

  /// Common point of the sets of `labels`, decided block by block.
  [[nodiscard]] CommonPoint common_point(std::span<const Label> labels) const;

  /// The nerve this representation was verified against when it was built.
  [[nodiscard]] const std::optional<SimplicialComplex>& verified_complex() const { return verified_; }
  void set_verified_complex(SimplicialComplex x) { verified_ = std::move(x); }

 private:
  Representation() = default;
  std::vector<std::size_t> block_dims_;
  std::map<Label, std::vector<VPolytope>> sets_;
  std::optional<SimplicialComplex> verified_;
};

struct Interval {
  Rational lo;
  Rational hi;
};

/// Axis-parallel boxes: one interval per coordinate for every vertex.
struct BoxFamily {
  std::size_t dim = 0;
  std::map<Label, std::vector<Interval>> boxes;
};

/// Nerve of the family, found by monotone search over vertex subsets.
/// Vertices with empty sets come out as ghost vertices.
[[nodiscard]] SimplicialComplex nerve_of_convex_family(const Representation& rep);

/// Clique complex of the pairwise-overlap graph of the boxes.
[[nodiscard]] SimplicialComplex nerve_of_boxes(const BoxFamily& boxes);

/// Each box as the hull of its 2^dim corners.
[[nodiscard]] Representation boxes_as_representation(const BoxFamily& boxes);

/// The simplex conv{0, e_1, ..., e_dim}; facet i is the face opposite vertex i.
class StandardSimplex {
 public:
  explicit StandardSimplex(std::size_t dim) : dim_(dim) {}
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] Point vertex(std::size_t i) const;
  /// Intersection of the facets in `facets` (bit i = facet i); the whole simplex for 0.
  [[nodiscard]] VPolytope face(Mask facets) const;
  /// Barycenter of face(facets); requires at least one vertex to remain.
  [[nodiscard]] Point barycenter(Mask facets) const;

 private:
  std::size_t dim_;
};

/// Representation of x in dimension |U|-1 built from the facets of a simplex,
/// for a non-face U with |tau \ U| <= 1 for every missing face tau.
/// The nerve is verified to equal x.
[[nodiscard]] Representation wegner_representation(const SimplicialComplex& x, const Face& u);

/// Products of the factors' sets; the nerve is the intersection of the factor
/// nerves and is verified.
[[nodiscard]] Representation product_representation(std::span<const Representation> reps);

struct Augmentation {
  Representation rep;
  /// Point common to the sets of sigma1 ∩ sigma2 used to place the two new points.
  Point witness;
  /// Set when sigma1 ∩ sigma2 is empty and the witness was taken as the
  /// barycenter of the first non-empty set's generators.
  bool witness_from_empty_intersection = false;
};

/// Represents X ∪ 2^sigma1 ∪ 2^sigma2 in one more dimension, where X is the
/// nerve of rep and sigma1 ∩ sigma2 ∈ X. The nerve is verified.
[[nodiscard]] Augmentation augment_two_simplices(const Representation& rep, const Face& sigma1,
                                                 const Face& sigma2);

/// Vertices of tau get distinct facets of a (|tau|-1)-simplex, the others the
/// whole simplex. The nerve is verified to have tau as its only missing face.
[[nodiscard]] Representation single_missing_face_representation(std::vector<Label> vertices,
                                                                const Face& tau);

}  // namespace repbox
