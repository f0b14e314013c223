#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "repbox/boxicity.hpp"
#include "repbox/errors.hpp"
#include "repbox/json_io.hpp"
#include "repbox/recipes.hpp"

using namespace repbox;

namespace {

const std::vector<Face> kFanoLines{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 7},
                                   {3, 4, 6}, {2, 5, 6}, {3, 5, 7}};

SimplicialComplex four_cycle() {
  return clique_complex(Graph{{1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}});
}

std::vector<Face> sorted(std::vector<Face> f) {
  canonicalize(f);
  return f;
}

bool covers(const std::vector<Face>& sets, const std::vector<Face>& missing) {
  for (const Face& tau : missing) {
    bool hit = false;
    for (const Face& v : sets) hit = hit || face_difference(tau, v).size() <= 1;
    if (!hit) return false;
  }
  return true;
}

// Smallest cover by trying every family of (d+1)-sized non-faces in order of size.
std::size_t brute_cover_minimum(const SimplicialComplex& x, int d) {
  std::vector<Face> pool;
  for (const Face& f : oracle::all_faces(SimplicialComplex::complete(x.vertices())))
    if (static_cast<int>(f.size()) == d + 1 && !x.is_face(f)) pool.push_back(f);
  const std::vector<Face> missing = oracle::brute_missing_faces(x);
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<Face> chosen;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) chosen.push_back(pool[i]);
      if (covers(chosen, missing)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

SimplicialComplex random_h_at_most(std::mt19937& rng, int n, int d) {
  const std::vector<Face> m = oracle::random_missing_faces(rng, n, d + 1, 1 + static_cast<int>(rng() % 6));
  return SimplicialComplex::from_missing_faces(label_range(1, n), m);
}

}  // namespace

TEST_CASE("cover_missing_faces") {
  CoverFamily c = cover_missing_faces(fano_complex(), 2);
  CHECK(sorted(c.sets) == sorted(kFanoLines));
  CHECK(static_cast<long long>(c.sets.size()) == steiner_upper_bound(2, 7));

  c = cover_missing_faces(four_cycle(), 1);
  CHECK(c.sets == std::vector<Face>{{1, 3}, {2, 4}});
  CHECK(c.covering_index == std::vector<std::size_t>{0, 1});

  const std::vector<Face> edge{{1, 2}};
  c = cover_missing_faces(SimplicialComplex::from_missing_faces({1, 2, 3, 4}, edge), 1);
  CHECK(c.sets == std::vector<Face>{{1, 2}});

  CHECK_THROWS_WITH_AS((void)cover_missing_faces(complete_skeleton({1, 2, 3}, 1), 1),
                       doctest::Contains("missing face too large"), DomainError);
  CHECK_THROWS_AS((void)cover_missing_faces(SimplicialComplex::complete({1, 2, 3}), 1), DomainError);

  // h < d: the edge {1,2} is covered through a 3-element non-face.
  c = cover_missing_faces(SimplicialComplex::from_missing_faces({1, 2, 3, 4}, edge), 2);
  CHECK(c.sets.size() == 1);
  CHECK(c.sets[0].size() == 3);
  CHECK(covers(c.sets, edge));
}

TEST_CASE("validate_cover") {
  const std::vector<Face> good{{1, 3}, {2, 4}};
  CHECK(validate_cover(four_cycle(), 1, good).sets == good);
  CHECK_THROWS_AS((void)validate_cover(four_cycle(), 1, std::vector<Face>{{1, 3}}), DomainError);
  CHECK_THROWS_AS((void)validate_cover(four_cycle(), 1, std::vector<Face>{{1, 2}, {2, 4}}), DomainError);
  CHECK_THROWS_AS((void)validate_cover(four_cycle(), 1, std::vector<Face>{{1, 3, 4}, {2, 4}}), DomainError);
}

TEST_CASE("decompose") {
  Decomposition dec = decompose(fano_complex(), 2);
  CHECK(dec.factors.size() == 7);
  CHECK(dec.bound == 7);
  CHECK(intersect_complexes(dec.factors) == fano_complex());
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const Face& vi = dec.cover.sets[i];
    std::vector<Face> expected;
    for (const Face& tau : kFanoLines)
      if (face_difference(tau, vi).size() <= 1) expected.push_back(tau);
    CHECK(sorted(dec.factor_missing[i]) == sorted(expected));
    CHECK_FALSE(dec.factors[i].is_face(vi));
  }

  dec = decompose(four_cycle(), 1);
  CHECK(dec.factors.size() == 2);
  CHECK(dec.factor_missing[0] == std::vector<Face>{{1, 3}});
  CHECK(dec.factor_missing[1] == std::vector<Face>{{2, 4}});
  CHECK(dec.bound == 2);

  CHECK_THROWS_AS((void)decompose(SimplicialComplex::complete({1, 2, 3}), 1), DomainError);

  const Json j = decomposition_to_json(decompose(fano_complex(), 2), boxd_lower_certificate(fano_complex(), 2));
  CHECK(j["d"] == 2);
  CHECK(j["bound"] == 7);
  CHECK(j["cover"].size() == 7);
  CHECK(j["factors"].size() == 7);
  CHECK(j["lower"]["kind"] == "steiner_exact");
  CHECK(j["lower"]["value"] == 7);
}

TEST_CASE("lower-bound certificates") {
  LowerBoundCertificate cert = boxd_lower_certificate(fano_complex(), 2);
  CHECK(cert.kind == LowerKind::kSteinerExact);
  CHECK(cert.value == 7);
  REQUIRE(cert.design.has_value());
  CHECK(check_design(*cert.design) == DesignClass::kSteiner);

  cert = boxd_lower_certificate(cross_polytope_boundary(6), 1);
  CHECK(cert.kind == LowerKind::kSteinerExact);
  CHECK(cert.value == 3);

  CHECK(boxd_lower_certificate(complete_skeleton({1, 2, 3}, 1), 1).kind == LowerKind::kNone);
  CHECK(boxd_lower_certificate(fano_complex(), 1).kind == LowerKind::kNone);
  CHECK(to_string(LowerKind::kSteinerExact) == "steiner_exact");
}

TEST_CASE("exact cover minimum") {
  CHECK(exact_cover_minimum(fano_complex(), 2) == 7);
  CHECK(exact_cover_minimum(four_cycle(), 1) == 2);
  const std::vector<Face> triangle{{1, 2, 3}};
  CHECK(exact_cover_minimum(SimplicialComplex::from_missing_faces({1, 2, 3, 4}, triangle), 2) == 1);
  CHECK(exact_cover_minimum(affine_plane_complex(), 2) == 12);
  CHECK_THROWS_AS((void)exact_cover_minimum(cross_polytope_boundary(10), 1), GuardError);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 2;
    const int n = d + 2 + static_cast<int>(rng() % 3);
    SimplicialComplex x = random_h_at_most(rng, n, d);
    if (x.is_complete()) continue;
    CHECK(exact_cover_minimum(x, d) == brute_cover_minimum(x, d));
  }
}

TEST_CASE("sandwich and decomposition soundness on random complexes") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 1 + trial % 3;
    const int n = d + 2 + static_cast<int>(rng() % (8 - d - 1));
    SimplicialComplex x = random_h_at_most(rng, n, d);
    if (x.is_complete()) continue;
    const CoverFamily cover = cover_missing_faces(x, d);
    const LowerBoundCertificate lower = boxd_lower_certificate(x, d);
    const std::size_t minimum = exact_cover_minimum(x, d);
    CHECK(lower.value <= static_cast<long long>(minimum));
    CHECK(minimum <= cover.sets.size());
    CHECK(static_cast<long long>(cover.sets.size()) <= steiner_upper_bound(d, n));
    if (lower.kind == LowerKind::kSteinerExact) CHECK(lower.value == static_cast<long long>(minimum));

    const Decomposition dec = decompose(x, cover);
    std::vector<Face> inter_faces;
    for (const Face& f : oracle::all_faces(SimplicialComplex::complete(x.vertices()))) {
      bool all = std::all_of(dec.factors.begin(), dec.factors.end(), [&](const auto& y) { return y.is_face(f); });
      if (all) inter_faces.push_back(f);
    }
    CHECK(inter_faces == oracle::all_faces(x));
    const std::vector<Face> missing = missing_faces(x).members;
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
      std::vector<Face> expected;
      for (const Face& tau : missing)
        if (face_difference(tau, cover.sets[i]).size() <= 1) expected.push_back(tau);
      CHECK(sorted(dec.factor_missing[i]) == sorted(expected));
      CHECK(sorted(oracle::brute_missing_faces(dec.factors[i])) == sorted(expected));
    }
    for (std::size_t j = 0; j < missing.size(); ++j)
      CHECK(face_difference(missing[j], cover.sets[cover.covering_index[j]]).size() <= 1);
  }
}

TEST_CASE("minimum reaches the Steiner bound only for Steiner systems (d = 2, n = 7)") {
  std::mt19937 rng(1234);
  const std::vector<Label> v7 = label_range(1, 7);
  int steiner_seen = 0;
  int other_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Label> perm = v7;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Face> m;
    for (const Face& line : kFanoLines) {
      std::vector<Label> image;
      for (Label v : line) image.push_back(perm[static_cast<std::size_t>(v - 1)]);
      m.emplace_back(image);
    }
    const bool keep_steiner = trial % 2 == 0;
    if (!keep_steiner) {
      // Drop a line, or add a conflicting triple, or both.
      if (rng() % 2) m.erase(m.begin() + static_cast<std::ptrdiff_t>(rng() % m.size()));
      std::vector<Label> extra = v7;
      std::shuffle(extra.begin(), extra.end(), rng);
      extra.resize(3);
      Face e(extra);
      if (std::find(m.begin(), m.end(), e) == m.end()) m.push_back(e);
    }
    m = minimal_elements(m);
    const SimplicialComplex x = SimplicialComplex::from_missing_faces(v7, m);
    if (h_number(x) != 2) continue;
    DesignFamily as_design{7, 3, 2, sorted(missing_faces(x).members)};
    const bool steiner = check_design(as_design) == DesignClass::kSteiner;
    const std::size_t minimum = exact_cover_minimum(x, 2);
    CHECK((minimum == 7) == steiner);
    (steiner ? steiner_seen : other_seen)++;
  }
  CHECK(steiner_seen > 0);
  CHECK(other_seen > 0);
  CHECK(exact_cover_minimum(affine_plane_complex(), 2) == static_cast<std::size_t>(steiner_upper_bound(2, 9)));
}

TEST_CASE("refute_small_cover") {
  const std::vector<Face> two_edges{{1, 2}, {3, 4}};
  const SimplicialComplex x = SimplicialComplex::from_missing_faces({1, 2, 3, 4}, two_edges);
  const std::vector<std::size_t> same{0, 0};
  Refutation r = refute_small_cover(x, 1, same, 1);
  CHECK(r.witness.degree == 1);
  CHECK(r.witness.betti == 1);
  CHECK(r.witness.subcomplex_vertices == label_range(1, 4));

  const std::vector<std::size_t> distinct{0, 1};
  CHECK_THROWS_AS((void)refute_small_cover(x, 1, distinct, 2), DomainError);
  CHECK_THROWS_AS((void)refute_small_cover(complete_skeleton({1, 2, 3}, 1), 1, std::vector<std::size_t>{0}, 0),
                  DomainError);

  const SimplicialComplex fano = fano_complex();
  const std::vector<Face> lines = missing_faces(fano).members;
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> assignment(7);
    for (auto& a : assignment) a = rng() % 6;
    r = refute_small_cover(fano, 2, assignment, 6);
    CHECK(r.witness.degree >= 2);
    CHECK(r.witness.subcomplex_vertices.size() <= 6);
    // Recompute the factor's induced homology independently.
    const Face u = face_union(r.tau1, r.tau2);
    std::vector<Face> restricted;
    for (std::size_t j = 0; j < lines.size(); ++j)
      if (assignment[j] == r.factor && lines[j].is_subset_of(u)) restricted.push_back(lines[j]);
    const SimplicialComplex y = SimplicialComplex::from_missing_faces(u.labels(), restricted);
    const auto dense = oracle::dense_betti_gf2(y);
    const auto k = static_cast<std::size_t>(r.witness.degree + 1);
    REQUIRE(k < dense.size());
    CHECK(dense[k] == r.witness.betti);
  }
}

TEST_CASE("d = 1 covers reaching n/2 without a perfect matching of missing edges (observation)") {
  std::mt19937 rng(909);
  int graphs = 0;
  int greedy_at_bound = 0;
  int minimum_at_bound = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 3);
    const std::vector<Face> m = oracle::random_missing_faces(rng, n, 2, 1 + static_cast<int>(rng() % 12));
    const SimplicialComplex x = SimplicialComplex::from_missing_faces(label_range(1, n), m);
    if (x.is_complete() || h_number(x) != 1) continue;
    const std::vector<Face> missing = missing_faces(x).members;
    DesignFamily matching{n, 2, 1, missing};
    if (check_design(matching) == DesignClass::kSteiner) continue;
    ++graphs;
    greedy_at_bound += static_cast<int>(cover_missing_faces(x, 1).sets.size()) == n / 2;
    minimum_at_bound += static_cast<int>(exact_cover_minimum(x, 1)) == n / 2;
  }
  CHECK(graphs > 50);
  MESSAGE("non-matching graphs: " << graphs << ", greedy cover of size n/2: " << greedy_at_bound
                                  << ", exact minimum n/2: " << minimum_at_bound);
}
