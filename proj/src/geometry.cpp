#include "repbox/geometry.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <unordered_set>

#include "repbox/errors.hpp"
#include "repbox/lp.hpp"

namespace repbox {

namespace {

/// Runs fn(i) for i in [0, n) on a few worker threads; fn must only touch slot i.
template <typename Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
  if (n < 16 || workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    }));
  for (auto& j : jobs) j.get();
}

bool boxes_disjoint(std::span<const VPolytope> polys, std::size_t dim) {
  for (std::size_t c = 0; c < dim; ++c) {
    Rational lo_max;
    Rational hi_min;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const auto& gens = polys[j].generators();
      Rational lo = gens.front()[c];
      Rational hi = lo;
      for (const Point& g : gens) {
        if (g[c] < lo) lo = g[c];
        if (g[c] > hi) hi = g[c];
      }
      if (j == 0 || lo > lo_max) lo_max = lo;
      if (j == 0 || hi < hi_min) hi_min = hi;
    }
    if (lo_max > hi_min) return true;
  }
  return false;
}

}  // namespace

VPolytope::VPolytope(std::size_t dim, std::vector<Point> generators)
    : dim_(dim), generators_(std::move(generators)) {}

VPolytope::VPolytope(std::vector<Point> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("a polytope needs at least one generator; use VPolytope::empty");
  dim_ = generators_.front().size();
  for (const Point& p : generators_)
    if (p.size() != dim_) throw DomainError("generators have different dimensions");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

VPolytope VPolytope::empty(std::size_t dim) { return VPolytope(dim, {}); }

bool VPolytope::has_generator(const Point& p) const {
  return std::binary_search(generators_.begin(), generators_.end(), p);
}

CommonPoint hulls_have_common_point(std::span<const VPolytope> polys) {
  if (polys.empty()) throw DomainError("common-point test needs at least one polytope");
  const std::size_t dim = polys.front().dim();
  for (const VPolytope& p : polys)
    if (p.dim() != dim) throw DomainError("polytopes have different ambient dimensions");
  for (const VPolytope& p : polys)
    if (p.is_empty()) return {};
  if (polys.size() == 1) return {true, polys.front().generators().front()};
  if (boxes_disjoint(polys, dim)) return {};

  // A generator shared by every polytope is a witness without solving anything.
  const auto smallest = std::min_element(polys.begin(), polys.end(), [](const auto& a, const auto& b) {
    return a.generators().size() < b.generators().size();
  });
  for (const Point& g : smallest->generators())
    if (std::all_of(polys.begin(), polys.end(), [&](const VPolytope& p) { return p.has_generator(g); }))
      return {true, g};

  // Variables: lambda_{j,k} >= 0 for generator k of polytope j. Rows: one
  // convexity row per polytope, then sum_k lambda_{j,k} g_{j,k} = sum_k lambda_{0,k} g_{0,k}
  // coordinate-wise for j >= 1.
  std::vector<std::size_t> offset(polys.size() + 1, 0);
  for (std::size_t j = 0; j < polys.size(); ++j)
    offset[j + 1] = offset[j] + polys[j].generators().size();
  const std::size_t vars = offset.back();
  EqualitySystem sys;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    std::vector<Rational> row(vars);
    for (std::size_t k = offset[j]; k < offset[j + 1]; ++k) row[k] = 1;
    sys.a.push_back(std::move(row));
    sys.b.emplace_back(1);
  }
  for (std::size_t j = 1; j < polys.size(); ++j)
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Rational> row(vars);
      for (std::size_t k = 0; k < polys[j].generators().size(); ++k)
        row[offset[j] + k] = polys[j].generators()[k][c];
      for (std::size_t k = 0; k < polys[0].generators().size(); ++k)
        row[k] = -polys[0].generators()[k][c];
      sys.a.push_back(std::move(row));
      sys.b.emplace_back(0);
    }
  auto solution = find_nonnegative_solution(std::move(sys));
  if (!solution) return {};
  Point witness(dim);
  for (std::size_t k = 0; k < polys[0].generators().size(); ++k)
    for (std::size_t c = 0; c < dim; ++c) witness[c] += (*solution)[k] * polys[0].generators()[k][c];
  return {true, std::move(witness)};
}

bool hull_contains(const VPolytope& poly, const Point& p) {
  if (p.size() != poly.dim()) throw DomainError("point and polytope dimensions differ");
  if (poly.is_empty()) return false;
  const auto& gens = poly.generators();
  EqualitySystem sys;
  sys.a.emplace_back(gens.size(), Rational(1));
  sys.b.emplace_back(1);
  for (std::size_t c = 0; c < p.size(); ++c) {
    std::vector<Rational> row;
    for (const Point& g : gens) row.push_back(g[c]);
    sys.a.push_back(std::move(row));
    sys.b.push_back(p[c]);
  }
  return find_nonnegative_solution(std::move(sys)).has_value();
}

Representation::Representation(std::size_t dim, std::map<Label, VPolytope> sets) : block_dims_{dim} {
  for (auto& [v, poly] : sets) {
    if (poly.dim() != dim) throw DomainError("set of vertex " + std::to_string(v) + " has the wrong dimension");
    sets_.emplace(v, std::vector<VPolytope>{std::move(poly)});
  }
}

Representation Representation::from_blocks(std::vector<std::size_t> block_dims,
                                           std::map<Label, std::vector<VPolytope>> sets) {
  Representation rep;
  rep.block_dims_ = std::move(block_dims);
  for (auto& [v, blocks] : sets) {
    if (blocks.size() != rep.block_dims_.size()) throw DomainError("block count mismatch");
    bool empty = false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].dim() != rep.block_dims_[b]) throw DomainError("block dimension mismatch");
      empty = empty || blocks[b].is_empty();
    }
    if (empty)
      for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b] = VPolytope::empty(rep.block_dims_[b]);
    rep.sets_.emplace(v, std::move(blocks));
  }
  return rep;
}

std::size_t Representation::ambient_dim() const {
  std::size_t d = 0;
  for (std::size_t b : block_dims_) d += b;
  return d;
}

std::vector<Label> Representation::vertices() const {
  std::vector<Label> out;
  for (const auto& [v, blocks] : sets_) out.push_back(v);
  return out;
}

const std::vector<VPolytope>& Representation::blocks(Label v) const {
  auto it = sets_.find(v);
  if (it == sets_.end()) throw DomainError("vertex " + std::to_string(v) + " has no set");
  return it->second;
}

bool Representation::is_empty(Label v) const { return blocks(v).front().is_empty(); }

std::size_t Representation::generator_count(Label v) const {
  std::size_t count = 1;
  for (const VPolytope& p : blocks(v)) count *= p.generators().size();
  return count;
}

VPolytope Representation::polytope(Label v, std::size_t max_generators) const {
  if (is_empty(v)) return VPolytope::empty(ambient_dim());
  if (generator_count(v) > max_generators)
    throw GuardError("product of " + std::to_string(generator_count(v)) + " generators exceeds guard");
  std::vector<Point> points{Point{}};
  for (const VPolytope& block : blocks(v)) {
    std::vector<Point> next;
    for (const Point& prefix : points)
      for (const Point& g : block.generators()) {
        Point p = prefix;
        p.insert(p.end(), g.begin(), g.end());
        next.push_back(std::move(p));
      }
    points = std::move(next);
  }
  return VPolytope(std::move(points));
}

Representation Representation::materialized(std::size_t max_generators) const {
  std::map<Label, VPolytope> sets;
  for (const auto& [v, blocks] : sets_) sets.emplace(v, polytope(v, max_generators));
  Representation rep(ambient_dim(), std::move(sets));
  rep.verified_ = verified_;
  return rep;
}

CommonPoint Representation::common_point(std::span<const Label> labels) const {
  CommonPoint out{true, Point{}};
  for (std::size_t b = 0; b < block_dims_.size(); ++b) {
    std::vector<VPolytope> polys;
    for (Label v : labels) polys.push_back(blocks(v)[b]);
    CommonPoint part = polys.empty() ? CommonPoint{true, Point(block_dims_[b])}
                                     : hulls_have_common_point(polys);
    if (!part.feasible) return {};
    out.witness->insert(out.witness->end(), part.witness->begin(), part.witness->end());
  }
  return out;
}

SimplicialComplex nerve_of_convex_family(const Representation& rep) {
  const std::vector<Label> labels = rep.vertices();
  const std::size_t n = labels.size();
  if (n > kMaxVertices) throw GuardError("nerve computation is limited to 64 sets");
  auto test = [&](Mask m) {
    std::vector<Label> members;
    for (int i : indices_of(m)) members.push_back(labels[static_cast<std::size_t>(i)]);
    return rep.common_point(members).feasible;
  };

  std::vector<Mask> all_faces{0};
  std::vector<Mask> level;
  for (std::size_t i = 0; i < n; ++i)
    if (!rep.is_empty(labels[i])) level.push_back(bit(i));
  while (!level.empty()) {
    all_faces.insert(all_faces.end(), level.begin(), level.end());
    // A set is only tested once all of its codimension-one subsets are faces.
    const std::unordered_set<Mask> previous(level.begin(), level.end());
    std::vector<Mask> candidates;
    for (Mask f : level) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(f));
      for (std::size_t v = top + 1; v < n; ++v) {
        Mask c = f | bit(v);
        bool closed = true;
        for (int u : indices_of(f))
          if (!previous.count(c & ~bit(static_cast<std::size_t>(u)))) {
            closed = false;
            break;
          }
        if (closed) candidates.push_back(c);
      }
    }
    std::vector<char> passed(candidates.size(), 0);
    parallel_for(candidates.size(), [&](std::size_t i) { passed[i] = test(candidates[i]) ? 1 : 0; });
    level.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (passed[i]) level.push_back(candidates[i]);
  }
  return SimplicialComplex::from_facet_masks(labels, maximal_masks(std::move(all_faces)));
}

namespace {

void validate_boxes(const BoxFamily& boxes) {
  for (const auto& [v, intervals] : boxes.boxes) {
    if (intervals.size() != boxes.dim)
      throw DomainError("box of vertex " + std::to_string(v) + " has the wrong dimension");
    for (const Interval& iv : intervals)
      if (iv.lo > iv.hi) throw DomainError("malformed interval for vertex " + std::to_string(v));
  }
}

}  // namespace

SimplicialComplex nerve_of_boxes(const BoxFamily& boxes) {
  validate_boxes(boxes);
  Graph g;
  for (const auto& [v, intervals] : boxes.boxes) g.vertices.push_back(v);
  for (auto a = boxes.boxes.begin(); a != boxes.boxes.end(); ++a)
    for (auto b = std::next(a); b != boxes.boxes.end(); ++b) {
      bool overlap = true;
      for (std::size_t c = 0; c < boxes.dim && overlap; ++c)
        overlap = std::max(a->second[c].lo, b->second[c].lo) <= std::min(a->second[c].hi, b->second[c].hi);
      if (overlap) g.edges.push_back(Face{a->first, b->first});
    }
  return clique_complex(g);
}

Representation boxes_as_representation(const BoxFamily& boxes) {
  validate_boxes(boxes);
  std::map<Label, VPolytope> sets;
  for (const auto& [v, intervals] : boxes.boxes) {
    std::vector<Point> corners;
    for (Mask corner = 0; corner < bit(boxes.dim); ++corner) {
      Point p;
      for (std::size_t c = 0; c < boxes.dim; ++c) p.push_back(corner & bit(c) ? intervals[c].hi : intervals[c].lo);
      corners.push_back(std::move(p));
    }
    sets.emplace(v, VPolytope(std::move(corners)));
  }
  return Representation(boxes.dim, std::move(sets));
}

Point StandardSimplex::vertex(std::size_t i) const {
  Point p(dim_);
  if (i > 0) p.at(i - 1) = 1;
  return p;
}

VPolytope StandardSimplex::face(Mask facets) const {
  std::vector<Point> points;
  for (std::size_t i = 0; i <= dim_; ++i)
    if (!(facets & bit(i))) points.push_back(vertex(i));
  return points.empty() ? VPolytope::empty(dim_) : VPolytope(std::move(points));
}

Point StandardSimplex::barycenter(Mask facets) const {
  Point sum(dim_);
  std::size_t count = 0;
  for (std::size_t i = 0; i <= dim_; ++i) {
    if (facets & bit(i)) continue;
    Point v = vertex(i);
    for (std::size_t c = 0; c < dim_; ++c) sum[c] += v[c];
    ++count;
  }
  if (count == 0) throw DomainError("the intersection of all facets is empty");
  for (Rational& c : sum) c /= static_cast<long>(count);
  return sum;
}

namespace {

Representation verified(Representation rep, const SimplicialComplex& expected, const char* what) {
  SimplicialComplex nerve = nerve_of_convex_family(rep);
  if (nerve != expected) throw InternalError(std::string(what) + ": nerve differs from the target complex");
  rep.set_verified_complex(std::move(nerve));
  return rep;
}

SimplicialComplex nerve_of(const Representation& rep) {
  return rep.verified_complex() ? *rep.verified_complex() : nerve_of_convex_family(rep);
}

}  // namespace

Representation wegner_representation(const SimplicialComplex& x, const Face& u) {
  const Mask u_mask = x.to_mask(u);
  if (u.size() < 2) throw DomainError("U must have at least two vertices");
  if (x.is_face_mask(u_mask)) throw DomainError("U is a face of the complex");
  if (!x.ghost_vertices().empty()) throw DomainError("every vertex must be a face");
  for (const Face& tau : missing_faces(x).members)
    if (popcount(x.to_mask(tau) & ~u_mask) > 1)
      throw DomainError("missing face " + to_string(tau) + " has more than one vertex outside U");

  const std::size_t dim = u.size() - 1;
  const StandardSimplex simplex(dim);
  const std::vector<int> u_index = indices_of(u_mask);
  const Mask full = low_bits(u.size());
  // sigma ranges over proper subsets of U, written over positions in U.
  auto as_complex_mask = [&](Mask sigma) {
    Mask m = 0;
    for (int p : indices_of(sigma)) m |= bit(static_cast<std::size_t>(u_index[static_cast<std::size_t>(p)]));
    return m;
  };
  std::vector<Point> p_sigma(full);
  for (Mask sigma = 0; sigma < full; ++sigma) p_sigma[sigma] = simplex.barycenter(sigma);

  std::map<Label, VPolytope> sets;
  for (std::size_t w = 0; w < x.num_vertices(); ++w) {
    std::vector<Point> gens;
    const auto pos = std::find(u_index.begin(), u_index.end(), static_cast<int>(w));
    for (Mask sigma = 0; sigma < full; ++sigma) {
      if (pos != u_index.end()) {
        const auto i = static_cast<std::size_t>(pos - u_index.begin());
        if ((sigma & bit(i)) && x.is_face_mask(as_complex_mask(sigma))) gens.push_back(p_sigma[sigma]);
      } else if (x.is_face_mask(as_complex_mask(sigma) | bit(w))) {
        gens.push_back(p_sigma[sigma]);
      }
    }
    sets.emplace(x.vertices()[w], VPolytope(std::move(gens)));
  }
  return verified(Representation(dim, std::move(sets)), x, "wegner_representation");
}

Representation product_representation(std::span<const Representation> reps) {
  if (reps.empty()) throw DomainError("product of no representations");
  const std::vector<Label> labels = reps.front().vertices();
  std::vector<std::size_t> block_dims;
  std::map<Label, std::vector<VPolytope>> sets;
  std::vector<SimplicialComplex> nerves;
  for (const Representation& r : reps) {
    if (r.vertices() != labels) throw DomainError("representations have different vertex sets");
    block_dims.insert(block_dims.end(), r.block_dims().begin(), r.block_dims().end());
    for (Label v : labels) {
      auto& blocks = sets[v];
      blocks.insert(blocks.end(), r.blocks(v).begin(), r.blocks(v).end());
    }
    nerves.push_back(nerve_of(r));
  }
  return verified(Representation::from_blocks(std::move(block_dims), std::move(sets)),
                  intersect_complexes(nerves), "product_representation");
}

Augmentation augment_two_simplices(const Representation& input, const Face& sigma1, const Face& sigma2) {
  const Representation rep = input.block_dims().size() == 1 ? input : input.materialized();
  const SimplicialComplex x = nerve_of(input);
  const Mask s1 = x.to_mask(sigma1);
  const Mask s2 = x.to_mask(sigma2);
  const Face common = face_intersection(sigma1, sigma2);
  if (!x.is_face(common)) throw DomainError("σ1∩σ2 is not a face of the nerve");

  const std::size_t dim = rep.ambient_dim();
  Augmentation out{rep, Point(dim), false};
  if (!common.empty()) {
    out.witness = *rep.common_point(common.labels()).witness;
  } else {
    out.witness_from_empty_intersection = true;
    for (Label v : rep.vertices()) {
      if (rep.is_empty(v)) continue;
      const auto& gens = rep.blocks(v).front().generators();
      Point sum(dim);
      for (const Point& g : gens)
        for (std::size_t c = 0; c < dim; ++c) sum[c] += g[c];
      for (Rational& c : sum) c /= static_cast<long>(gens.size());
      out.witness = std::move(sum);
      break;
    }
  }
  Point up = out.witness;
  up.emplace_back(1);
  Point down = out.witness;
  down.emplace_back(-1);

  std::map<Label, VPolytope> sets;
  for (std::size_t i = 0; i < x.num_vertices(); ++i) {
    const Label v = x.vertices()[i];
    std::vector<Point> gens;
    if (!rep.is_empty(v))
      for (Point g : rep.blocks(v).front().generators()) {
        g.emplace_back(0);
        gens.push_back(std::move(g));
      }
    if (s1 & bit(i)) gens.push_back(up);
    if (s2 & bit(i)) gens.push_back(down);
    sets.emplace(v, gens.empty() ? VPolytope::empty(dim + 1) : VPolytope(std::move(gens)));
  }
  const SimplicialComplex target = add_simplex(add_simplex(x, sigma1), sigma2);
  out.rep = verified(Representation(dim + 1, std::move(sets)), target, "augment_two_simplices");
  return out;
}

Representation single_missing_face_representation(std::vector<Label> vertices, const Face& tau) {
  if (tau.size() < 2) throw DomainError("the missing face must have at least two vertices");
  const std::vector<Face> missing{tau};
  const SimplicialComplex target = SimplicialComplex::from_missing_faces(std::move(vertices), missing);
  const StandardSimplex simplex(tau.size() - 1);
  std::map<Label, VPolytope> sets;
  for (Label v : target.vertices()) {
    auto pos = std::find(tau.begin(), tau.end(), v);
    Mask facet = pos == tau.end() ? 0 : bit(static_cast<std::size_t>(pos - tau.begin()));
    sets.emplace(v, simplex.face(facet));
  }
  return verified(Representation(simplex.dim(), std::move(sets)), target,
                  "single_missing_face_representation");
}

}  // namespace repbox
