#pragma once

#include <vector>

#include "repbox/complex.hpp"
#include "repbox/geometry.hpp"

namespace repbox {

/// Complex on [7] whose missing faces are the Fano lines.
[[nodiscard]] SimplicialComplex fano_complex();

/// Complex on [9] whose missing faces are the lines of AG(2,3).
[[nodiscard]] SimplicialComplex affine_plane_complex();

/// Clique complex of the complete (n/2)-partite graph with parts {1,2},{3,4},...
[[nodiscard]] SimplicialComplex cross_polytope_boundary(int n);

/// Intervals on the line whose nerve has facets {1,2,4},{2,3,4,5},{4,5,6,7}.
[[nodiscard]] BoxFamily fano_base_intervals();

struct AugmentationStep {
  Face sigma1;
  Face sigma2;
  Point witness;
  std::size_t dim = 0;
};

struct FanoPipeline {
  std::vector<AugmentationStep> steps;
  Representation rep;
};

/// Starts from the base intervals and adds the pairs of simplices
/// ({1,2,5,7},{1,2,4,6}), ({1,3},{2,3,6,7}), ({1,3,5,6},{1,3,4,7}),
/// ending in a verified 4-dimensional representation of the Fano complex.
[[nodiscard]] FanoPipeline fano_rep4_pipeline();

}  // namespace repbox
