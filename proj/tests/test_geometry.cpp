#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "repbox/errors.hpp"
#include "repbox/geometry.hpp"
#include "repbox/homology.hpp"
#include "repbox/json_io.hpp"
#include "repbox/recipes.hpp"

using namespace repbox;

namespace {

Point pt(std::initializer_list<int> coords) {
  Point p;
  for (int c : coords) p.emplace_back(c);
  return p;
}

VPolytope poly(std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Point> g;
  for (auto c : gens) g.push_back(pt(c));
  return VPolytope(std::move(g));
}

Representation line_family(std::initializer_list<std::pair<int, int>> segments) {
  std::map<Label, VPolytope> sets;
  Label v = 1;
  for (auto [lo, hi] : segments) sets.emplace(v++, poly({{lo}, {hi}}));
  return Representation(1, std::move(sets));
}

SimplicialComplex four_cycle() {
  return clique_complex(Graph{{1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}});
}

void check_leray_bound(const Representation& rep) {
  const SimplicialComplex nerve = nerve_of_convex_family(rep);
  CHECK(leray_number(nerve) <= static_cast<int>(rep.ambient_dim()));
}

BoxFamily random_boxes(std::mt19937& rng, std::size_t dim, int count) {
  BoxFamily b{dim, {}};
  for (Label v = 1; v <= count; ++v) {
    std::vector<Interval> box;
    for (std::size_t i = 0; i < dim; ++i) {
      int lo = static_cast<int>(rng() % 6);
      int hi = lo + static_cast<int>(rng() % 4);
      box.push_back({Rational(lo), Rational(hi)});
    }
    b.boxes.emplace(v, std::move(box));
  }
  return b;
}

}  // namespace

TEST_CASE("VPolytope canonical form") {
  const VPolytope a = poly({{1, 0}, {0, 0}, {1, 0}});
  CHECK(a.generators().size() == 2);
  CHECK(a.generators().front() == pt({0, 0}));
  CHECK(a.has_generator(pt({1, 0})));
  CHECK(VPolytope::empty(2).is_empty());
  CHECK_THROWS_AS(VPolytope(std::vector<Point>{}), DomainError);
  CHECK_THROWS_AS(VPolytope(std::vector<Point>{pt({0}), pt({0, 1})}), DomainError);
}

TEST_CASE("hulls_have_common_point") {
  std::vector<VPolytope> touching{poly({{0}, {1}}), poly({{1}, {2}})};
  CommonPoint c = hulls_have_common_point(touching);
  CHECK(c.feasible);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == pt({1}));

  std::vector<VPolytope> apart{poly({{0}, {1}}), poly({{2}, {3}})};
  CHECK_FALSE(hulls_have_common_point(apart).feasible);

  std::vector<VPolytope> triangles{poly({{0, 0}, {2, 0}, {0, 2}}), poly({{1, 1}, {3, 1}, {1, 3}})};
  CHECK(oracle::fm_hulls_intersect(triangles));
  c = hulls_have_common_point(triangles);
  CHECK(c.feasible);
  CHECK(*c.witness == pt({1, 1}));

  std::vector<VPolytope> with_empty{poly({{0}}), VPolytope::empty(1)};
  CHECK_FALSE(hulls_have_common_point(with_empty).feasible);
  std::vector<VPolytope> mismatched{poly({{0}}), poly({{0, 0}})};
  CHECK_THROWS_AS((void)hulls_have_common_point(mismatched), DomainError);
  CHECK_THROWS_AS((void)hulls_have_common_point(std::vector<VPolytope>{}), DomainError);

  // A segment crossing a triangle without touching any generator.
  std::vector<VPolytope> crossing{poly({{0, 0}, {4, 0}, {0, 4}}), poly({{1, -1}, {1, 5}})};
  c = hulls_have_common_point(crossing);
  CHECK(c.feasible);
  CHECK(hull_contains(crossing[0], *c.witness));
  CHECK(hull_contains(crossing[1], *c.witness));
}

TEST_CASE("feasibility agrees with Fourier-Motzkin and witnesses lie in every hull") {
  std::mt19937 rng(404);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const int count = 2 + static_cast<int>(rng() % 3);
    std::vector<VPolytope> polys;
    for (int i = 0; i < count; ++i) polys.push_back(oracle::random_polytope(rng, dim, 6, 4));
    const CommonPoint c = hulls_have_common_point(polys);
    CHECK(c.feasible == oracle::fm_hulls_intersect(polys));
    if (c.feasible) {
      ++feasible;
      REQUIRE(c.witness.has_value());
      for (const VPolytope& p : polys) {
        CHECK(hull_contains(p, *c.witness));
        CHECK(oracle::fm_hulls_intersect({p, VPolytope({*c.witness})}));
      }
    }
  }
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}

TEST_CASE("hull_contains") {
  const VPolytope tri = poly({{0, 0}, {2, 0}, {0, 2}});
  CHECK(hull_contains(tri, pt({1, 1})));
  CHECK(hull_contains(tri, Point{Rational(1, 2), Rational(1, 3)}));
  CHECK_FALSE(hull_contains(tri, Point{Rational(3, 2), Rational(3, 4)}));
  CHECK_FALSE(hull_contains(VPolytope::empty(2), pt({0, 0})));
}

TEST_CASE("nerves of convex families") {
  const Representation base = boxes_as_representation(fano_base_intervals());
  const std::vector<Face> x0{{1, 2, 4}, {2, 3, 4, 5}, {4, 5, 6, 7}};
  CHECK(nerve_of_convex_family(base) == SimplicialComplex::from_facets(label_range(1, 7), x0));

  std::map<Label, VPolytope> points;
  for (Label v = 1; v <= 4; ++v) points.emplace(v, poly({{3, 3}}));
  CHECK(nerve_of_convex_family(Representation(2, points)) == SimplicialComplex::complete(label_range(1, 4)));

  CHECK(nerve_of_convex_family(line_family({{0, 1}, {2, 3}})).facets() == std::vector<Face>{{1}, {2}});

  std::map<Label, VPolytope> with_empty{{1, poly({{0}})}, {2, VPolytope::empty(1)}};
  const SimplicialComplex ghost = nerve_of_convex_family(Representation(1, with_empty));
  CHECK(ghost.ghost_vertices() == std::vector<Label>{2});
}

TEST_CASE("nerves of boxes") {
  BoxFamily path{1, {}};
  path.boxes[1] = {{Rational(0), Rational(1)}};
  path.boxes[2] = {{Rational(1), Rational(2)}};
  path.boxes[3] = {{Rational(2), Rational(3)}};
  CHECK(nerve_of_boxes(path).facets() == std::vector<Face>{{1, 2}, {2, 3}});

  BoxFamily planar{2, {}};
  planar.boxes[1] = {{Rational(0), Rational(2)}, {Rational(0), Rational(2)}};
  planar.boxes[2] = {{Rational(1), Rational(3)}, {Rational(1), Rational(3)}};
  planar.boxes[3] = {{Rational(2), Rational(4)}, {Rational(0), Rational(1)}};
  const SimplicialComplex nb = nerve_of_boxes(planar);
  CHECK(nb == nerve_of_convex_family(boxes_as_representation(planar)));
  CHECK(nb.facets() == std::vector<Face>{{1, 2, 3}});

  const std::vector<Face> x0{{1, 2, 4}, {2, 3, 4, 5}, {4, 5, 6, 7}};
  CHECK(nerve_of_boxes(fano_base_intervals()) == SimplicialComplex::from_facets(label_range(1, 7), x0));

  BoxFamily bad{1, {}};
  bad.boxes[1] = {{Rational(2), Rational(1)}};
  CHECK_THROWS_AS((void)nerve_of_boxes(bad), DomainError);
  bad.boxes[1] = {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS((void)nerve_of_boxes(bad), DomainError);
}

TEST_CASE("box nerves agree with hull nerves on random families") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const BoxFamily b = random_boxes(rng, 1 + trial % 3, 2 + static_cast<int>(rng() % 7));
    CHECK(nerve_of_boxes(b) == nerve_of_convex_family(boxes_as_representation(b)));
  }
}

TEST_CASE("standard simplex membership law") {
  for (std::size_t k = 2; k <= 5; ++k) {
    const StandardSimplex p(k - 1);
    const Mask full = low_bits(k);
    for (Mask sigma = 0; sigma < full; ++sigma) {
      const Point centre = p.barycenter(sigma);
      for (Mask tau = 0; tau <= full; ++tau) {
        const bool expected = is_submask(tau, sigma);
        if (tau == full) {
          CHECK(p.face(tau).is_empty());
          continue;
        }
        CHECK(hull_contains(p.face(tau), centre) == expected);
        if (k <= 3) CHECK(oracle::fm_hulls_intersect({p.face(tau), VPolytope({centre})}) == expected);
      }
    }
  }
}

TEST_CASE("wegner representations") {
  const SimplicialComplex hollow = complete_skeleton({1, 2, 3}, 1);
  Representation rep = wegner_representation(hollow, {1, 2, 3});
  CHECK(rep.ambient_dim() == 2);
  CHECK(nerve_of_convex_family(rep) == hollow);
  REQUIRE(rep.verified_complex().has_value());
  CHECK(*rep.verified_complex() == hollow);
  for (Label v : {1, 2, 3}) CHECK(rep.polytope(v).generators().size() == 3);
  // Every subset checked directly.
  for (Mask s = 1; s < 8; ++s) {
    std::vector<Label> labels;
    for (Label v = 1; v <= 3; ++v)
      if (s >> (v - 1) & 1) labels.push_back(v);
    CHECK(rep.common_point(labels).feasible == (labels.size() < 3));
  }

  const std::vector<Face> tri{{1, 2, 3}};
  const SimplicialComplex x4 = SimplicialComplex::from_missing_faces({1, 2, 3, 4}, tri);
  rep = wegner_representation(x4, {1, 2, 3});
  CHECK(rep.ambient_dim() == 2);
  CHECK(nerve_of_convex_family(rep) == x4);
  CHECK(rep.polytope(4).has_generator(StandardSimplex(2).barycenter(0)));

  CHECK_THROWS_AS((void)wegner_representation(hollow, {1, 2}), DomainError);
  CHECK_THROWS_AS((void)wegner_representation(four_cycle(), {1, 3}), DomainError);
  CHECK_THROWS_AS((void)wegner_representation(hollow, {1}), DomainError);
}

TEST_CASE("wegner representations of random complexes with a large non-face") {
  std::mt19937 rng(90);
  int built = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 4 + trial % 3;
    SimplicialComplex x = oracle::random_complex(rng, n);
    // Pick a non-face U with |tau \ U| <= 1 for every missing face.
    std::vector<Face> candidates;
    for (const Face& u : oracle::all_faces(SimplicialComplex::complete(x.vertices()))) {
      if (u.size() < 2 || x.is_face(u)) continue;
      bool ok = true;
      for (const Face& tau : missing_faces(x).members) ok = ok && face_difference(tau, u).size() <= 1;
      if (ok) candidates.push_back(u);
    }
    if (candidates.empty()) continue;
    const Face u = candidates[rng() % candidates.size()];
    const Representation rep = wegner_representation(x, u);
    CHECK(rep.ambient_dim() == u.size() - 1);
    CHECK(nerve_of_convex_family(rep) == x);
    check_leray_bound(rep);
    ++built;
  }
  CHECK(built > 20);
}

TEST_CASE("single missing face representations") {
  Representation rep = single_missing_face_representation({1, 2, 3}, {1, 2, 3});
  CHECK(rep.ambient_dim() == 2);
  CHECK(nerve_of_convex_family(rep) == complete_skeleton({1, 2, 3}, 1));

  rep = single_missing_face_representation({1, 2, 3, 4}, {1, 2});
  CHECK(rep.ambient_dim() == 1);
  CHECK(rep.polytope(1).generators().size() == 1);
  CHECK(rep.polytope(2).generators().size() == 1);
  CHECK(rep.polytope(3).generators().size() == 2);
  const std::vector<Face> edge{{1, 2}};
  CHECK(nerve_of_convex_family(rep) == SimplicialComplex::from_missing_faces({1, 2, 3, 4}, edge));

  CHECK_THROWS_AS((void)single_missing_face_representation({1, 2}, {1}), DomainError);

  // Seven Fano lines, one factor each, give a 14-dimensional representation.
  std::vector<Representation> factors;
  for (const Face& line : missing_faces(fano_complex()).members)
    factors.push_back(single_missing_face_representation(label_range(1, 7), line));
  const Representation product = product_representation(factors);
  CHECK(product.ambient_dim() == 14);
  CHECK(nerve_of_convex_family(product) == fano_complex());
}

TEST_CASE("product representations") {
  const Representation base = boxes_as_representation(fano_base_intervals());
  const std::vector<Representation> twice{base, base};
  const Representation sq = product_representation(twice);
  CHECK(sq.ambient_dim() == 2);
  CHECK(nerve_of_convex_family(sq) == nerve_of_convex_family(base));

  const std::vector<Representation> c4{single_missing_face_representation({1, 2, 3, 4}, {1, 3}),
                                       single_missing_face_representation({1, 2, 3, 4}, {2, 4})};
  const Representation p = product_representation(c4);
  CHECK(p.ambient_dim() == 2);
  CHECK(nerve_of_convex_family(p) == four_cycle());
  for (Label v = 1; v <= 4; ++v)
    CHECK(p.generator_count(v) == c4[0].generator_count(v) * c4[1].generator_count(v));
  CHECK(p.materialized().polytope(2).generators().size() == p.generator_count(2));

  const std::vector<Representation> mismatched{single_missing_face_representation({1, 2, 3}, {1, 3}),
                                               single_missing_face_representation({1, 2, 3, 4}, {2, 4})};
  CHECK_THROWS_AS((void)product_representation(mismatched), DomainError);
}

TEST_CASE("materialized products have the same nerve as the factored form") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + trial % 2;
    const std::vector<Label> v = label_range(1, n);
    std::vector<Representation> factors;
    std::vector<SimplicialComplex> nerves;
    const int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      std::vector<Label> pick = v;
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(2 + rng() % 2);
      factors.push_back(single_missing_face_representation(v, Face(pick)));
      nerves.push_back(nerve_of_convex_family(factors.back()));
    }
    const Representation p = product_representation(factors);
    const Representation flat = p.materialized();
    CHECK(flat.block_dims().size() == 1);
    CHECK(nerve_of_convex_family(flat) == nerve_of_convex_family(p));
    CHECK(nerve_of_convex_family(p) == intersect_complexes(nerves));
    check_leray_bound(p);
  }
}

TEST_CASE("augmenting by two simplices reproduces the Fano construction") {
  const FanoPipeline pipeline = fano_rep4_pipeline();
  REQUIRE(pipeline.steps.size() == 3);
  CHECK(pipeline.steps[0].witness == pt({1}));
  CHECK(pipeline.steps[0].dim == 2);
  CHECK(pipeline.steps[1].dim == 3);
  CHECK(pipeline.steps[2].dim == 4);
  CHECK(pipeline.rep.ambient_dim() == 4);
  CHECK(nerve_of_convex_family(pipeline.rep) == fano_complex());
  check_leray_bound(pipeline.rep);

  const Representation base = boxes_as_representation(fano_base_intervals());
  const Augmentation step = augment_two_simplices(base, {1, 2, 5, 7}, {1, 2, 4, 6});
  CHECK(step.rep.ambient_dim() == 2);
  CHECK_FALSE(step.witness_from_empty_intersection);
  const SimplicialComplex expected =
      add_simplex(add_simplex(nerve_of_convex_family(base), {1, 2, 5, 7}), {1, 2, 4, 6});
  CHECK(nerve_of_convex_family(step.rep) == expected);

  // {1,3} is not a face of the base nerve.
  CHECK_THROWS_AS((void)augment_two_simplices(base, {1, 3, 5}, {1, 3, 6}), DomainError);
}

TEST_CASE("augmenting with disjoint simplices") {
  const Representation rep = line_family({{0, 1}, {2, 3}, {4, 5}});
  const Augmentation aug = augment_two_simplices(rep, {1, 2}, {3});
  CHECK(aug.witness_from_empty_intersection);
  CHECK(nerve_of_convex_family(aug.rep).facets() == std::vector<Face>{{1, 2}, {3}});
}

TEST_CASE("representation JSON round trip") {
  const FanoPipeline pipeline = fano_rep4_pipeline();
  const Json j = representation_to_json(pipeline.rep);
  CHECK(j["dim"] == 4);
  const Representation back = representation_from_json(j);
  CHECK(nerve_of_convex_family(back) == fano_complex());
  CHECK(representation_to_json(back).dump() == j.dump());

  std::map<Label, VPolytope> sets{{1, poly({{0, 0}})}, {2, VPolytope::empty(2)}};
  const Json e = representation_to_json(Representation(2, sets));
  CHECK(e["sets"]["2"].is_null());
  CHECK(representation_from_json(e).is_empty(2));

  const Json boxes = boxes_to_json(fano_base_intervals());
  CHECK(boxes["boxes"]["4"][0][1] == "5");
  CHECK(nerve_of_boxes(boxes_from_json(boxes)) == nerve_of_boxes(fano_base_intervals()));
}
