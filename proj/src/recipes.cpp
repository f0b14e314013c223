#include "repbox/recipes.hpp"

#include "repbox/designs.hpp"
#include "repbox/errors.hpp"

namespace repbox {

SimplicialComplex fano_complex() {
  return SimplicialComplex::from_missing_faces(label_range(1, 7), builtin_design("fano").blocks);
}

SimplicialComplex affine_plane_complex() {
  return SimplicialComplex::from_missing_faces(label_range(1, 9), builtin_design("ag3").blocks);
}

SimplicialComplex cross_polytope_boundary(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("cross-polytope boundary needs an even n >= 2");
  Graph g{label_range(1, n), {}};
  for (Label a = 1; a <= n; ++a)
    for (Label b = a + 1; b <= n; ++b)
      if ((a - 1) / 2 != (b - 1) / 2) g.edges.push_back(Face{a, b});
  return clique_complex(g);
}

BoxFamily fano_base_intervals() {
  auto iv = [](long lo, long hi) { return std::vector<Interval>{{Rational(lo), Rational(hi)}}; };
  BoxFamily boxes{1, {}};
  boxes.boxes.emplace(1, iv(0, 1));
  boxes.boxes.emplace(2, iv(1, 2));
  boxes.boxes.emplace(3, iv(2, 3));
  boxes.boxes.emplace(4, iv(0, 5));
  boxes.boxes.emplace(5, iv(2, 5));
  boxes.boxes.emplace(6, iv(4, 5));
  boxes.boxes.emplace(7, iv(4, 5));
  return boxes;
}

FanoPipeline fano_rep4_pipeline() {
  Representation rep = boxes_as_representation(fano_base_intervals());
  const std::vector<Face> base_facets{{1, 2, 4}, {2, 3, 4, 5}, {4, 5, 6, 7}};
  const SimplicialComplex x0 = SimplicialComplex::from_facets(label_range(1, 7), base_facets);
  SimplicialComplex nerve = nerve_of_convex_family(rep);
  if (nerve != x0) throw InternalError("base intervals do not represent the expected complex");
  rep.set_verified_complex(std::move(nerve));

  const std::pair<Face, Face> pairs[] = {
      {{1, 2, 5, 7}, {1, 2, 4, 6}},
      {{1, 3}, {2, 3, 6, 7}},
      {{1, 3, 5, 6}, {1, 3, 4, 7}},
  };
  FanoPipeline out{{}, rep};
  for (const auto& [s1, s2] : pairs) {
    Augmentation step = augment_two_simplices(out.rep, s1, s2);
    out.steps.push_back({s1, s2, step.witness, step.rep.ambient_dim()});
    out.rep = std::move(step.rep);
  }
  if (*out.rep.verified_complex() != fano_complex())
    throw InternalError("augmented representation is not the Fano complex");
  return out;
}

}  // namespace repbox
