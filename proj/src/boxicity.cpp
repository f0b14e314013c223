#include "repbox/boxicity.hpp"

#include <algorithm>
#include <bitset>

#include "repbox/errors.hpp"

namespace repbox {

namespace {

constexpr std::size_t kMaxExactVertices = 9;
constexpr std::size_t kMaxCoverTargets = 256;

/// Face over indices shifted to [1, n], the ground set used by designs.
Face to_ground(const SimplicialComplex& x, const Face& f) {
  std::vector<Label> out;
  for (int i : indices_of(x.to_mask(f))) out.push_back(i + 1);
  return Face(std::move(out));
}

Face from_ground(const SimplicialComplex& x, const Face& f) {
  Mask m = 0;
  for (Label i : f) m |= bit(static_cast<std::size_t>(i - 1));
  return x.to_face(m);
}

/// All (d+1)-subsets of the vertex set that are not faces, in lexicographic order.
std::vector<Mask> sized_non_faces(const SimplicialComplex& x, int d) {
  const std::size_t n = x.num_vertices();
  if (n > 24) throw GuardError("candidate enumeration exceeds vertex guard");
  std::vector<Mask> out;
  for (Mask s = 0; s <= low_bits(n); ++s)
    if (popcount(s) == d + 1 && !x.is_face_mask(s)) out.push_back(s);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool near_covers(Mask tau, Mask v) { return popcount(tau & ~v) <= 1; }

void check_cover_preconditions(const SimplicialComplex& x, int d) {
  if (d < 1) throw DomainError("d must be at least 1");
  if (x.is_complete()) throw DomainError("complete complex has no missing faces to cover");
  if (h_number(x) > d) throw DomainError("missing face too large: h(X) exceeds d");
  if (x.num_vertices() < static_cast<std::size_t>(d) + 1)
    throw DomainError("need at least d+1 vertices");
}

}  // namespace

std::string to_string(LowerKind k) { return k == LowerKind::kSteinerExact ? "steiner_exact" : "none"; }

CoverFamily validate_cover(const SimplicialComplex& x, int d, std::vector<Face> sets) {
  CoverFamily cover{d, std::move(sets), {}};
  for (const Face& v : cover.sets) {
    if (v.size() != static_cast<std::size_t>(d) + 1)
      throw DomainError("cover set " + to_string(v) + " does not have size d+1");
    if (x.is_face(v)) throw DomainError("cover set " + to_string(v) + " is a face");
  }
  for (const Face& tau : missing_faces(x).members) {
    Mask t = x.to_mask(tau);
    auto it = std::find_if(cover.sets.begin(), cover.sets.end(),
                           [&](const Face& v) { return near_covers(t, x.to_mask(v)); });
    if (it == cover.sets.end()) throw DomainError("missing face " + to_string(tau) + " is not covered");
    cover.covering_index.push_back(static_cast<std::size_t>(it - cover.sets.begin()));
  }
  return cover;
}

CoverFamily cover_missing_faces(const SimplicialComplex& x, int d) {
  check_cover_preconditions(x, d);
  std::vector<Face> candidates;
  for (Mask s : sized_non_faces(x, d)) candidates.push_back(to_ground(x, x.to_face(s)));
  const int n = static_cast<int>(x.num_vertices());
  DesignFamily chosen = greedy_maximal_partial_steiner(candidates, d, n);
  if (static_cast<long long>(chosen.blocks.size()) > steiner_upper_bound(d, n))
    throw InternalError("greedy cover exceeds the Steiner size bound");
  std::vector<Face> sets;
  for (const Face& b : chosen.blocks) sets.push_back(from_ground(x, b));
  try {
    return validate_cover(x, d, std::move(sets));
  } catch (const DomainError& e) {
    throw InternalError(std::string("greedy cover failed validation: ") + e.what());
  }
}

Decomposition decompose(const SimplicialComplex& x, const CoverFamily& cover) {
  if (x.is_complete()) throw DomainError("complete complex: nothing to decompose");
  CoverFamily checked = validate_cover(x, cover.d, cover.sets);
  const MissingFaceFamily m = missing_faces(x);
  Decomposition out;
  out.cover = std::move(checked);
  for (const Face& v : out.cover.sets) {
    Mask vm = x.to_mask(v);
    std::vector<Face> mi;
    for (const Face& tau : m.members)
      if (near_covers(x.to_mask(tau), vm)) mi.push_back(tau);
    SimplicialComplex factor =
        SimplicialComplex::from_missing_faces(x.vertices(), mi, GhostPolicy::kAllow);
    if (factor.is_face(v)) throw InternalError("cover set " + to_string(v) + " is a face of its factor");
    out.factors.push_back(std::move(factor));
    out.factor_missing.push_back(std::move(mi));
  }
  if (intersect_complexes(out.factors) != x)
    throw InternalError("intersection of factors differs from the source complex");
  out.bound = static_cast<long long>(out.factors.size());
  return out;
}

Decomposition decompose(const SimplicialComplex& x, int d) {
  return decompose(x, cover_missing_faces(x, d));
}

LowerBoundCertificate boxd_lower_certificate(const SimplicialComplex& x, int d) {
  LowerBoundCertificate cert;
  if (x.is_complete() || d < 1) return cert;
  const MissingFaceFamily m = missing_faces(x);
  DesignFamily design{static_cast<int>(x.num_vertices()), d + 1, d, {}};
  for (const Face& tau : m.members) {
    if (tau.size() != static_cast<std::size_t>(d) + 1) return cert;
    design.blocks.push_back(to_ground(x, tau));
  }
  if (check_design(design) == DesignClass::kNotPartial) return cert;
  cert.kind = LowerKind::kSteinerExact;
  cert.value = static_cast<long long>(m.members.size());
  cert.design = std::move(design);
  return cert;
}

Refutation refute_small_cover(const SimplicialComplex& x, int d,
                              std::span<const std::size_t> assignment, std::size_t num_factors) {
  const MissingFaceFamily m = missing_faces(x);
  if (boxd_lower_certificate(x, d).kind != LowerKind::kSteinerExact)
    throw DomainError("missing faces do not form a partial Steiner (d,d+1,n)-system");
  if (assignment.size() != m.members.size())
    throw DomainError("assignment must give one factor per missing face");
  if (num_factors >= m.members.size())
    throw DomainError("assignment uses at least |M| factors; nothing to refute");
  for (std::size_t f : assignment)
    if (f >= num_factors) throw DomainError("factor index out of range");

  // Same-factor pair with the largest intersection; ties go to the first pair.
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_overlap = 0;
  for (std::size_t i = 0; i < m.members.size(); ++i)
    for (std::size_t j = i + 1; j < m.members.size(); ++j) {
      if (assignment[i] != assignment[j]) continue;
      std::size_t overlap = face_intersection(m.members[i], m.members[j]).size();
      if (!best || overlap > best_overlap) {
        best = {i, j};
        best_overlap = overlap;
      }
    }
  if (!best) throw InternalError("pigeonhole failed: no two missing faces share a factor");

  Refutation out;
  out.factor = assignment[best->first];
  out.tau1 = m.members[best->first];
  out.tau2 = m.members[best->second];
  std::vector<Face> assigned;
  for (std::size_t i = 0; i < m.members.size(); ++i)
    if (assignment[i] == out.factor) assigned.push_back(m.members[i]);
  SimplicialComplex factor = SimplicialComplex::from_missing_faces(x.vertices(), assigned);
  SimplicialComplex y = induced_subcomplex(factor, face_union(out.tau1, out.tau2));
  out.witness = leray_obstruction(y, out.tau1, out.tau2, d);
  if (out.witness.degree < d) throw InternalError("obstruction degree below d");
  return out;
}

std::size_t exact_cover_minimum(const SimplicialComplex& x, int d) {
  if (x.num_vertices() > kMaxExactVertices) throw GuardError("exact cover search is limited to 9 vertices");
  check_cover_preconditions(x, d);
  const MissingFaceFamily m = missing_faces(x);
  if (m.members.size() > kMaxCoverTargets) throw GuardError("too many missing faces for exact search");
  using Targets = std::bitset<kMaxCoverTargets>;
  std::vector<Mask> taus;
  for (const Face& tau : m.members) taus.push_back(x.to_mask(tau));
  const std::vector<Mask> candidates = sized_non_faces(x, d);
  std::vector<Targets> reach(candidates.size());
  std::size_t widest = 1;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t j = 0; j < taus.size(); ++j)
      if (near_covers(taus[j], candidates[c])) reach[c].set(j);
    widest = std::max(widest, reach[c].count());
  }
  Targets all;
  for (std::size_t j = 0; j < taus.size(); ++j) all.set(j);

  std::size_t best = cover_missing_faces(x, d).sets.size();
  auto search = [&](auto&& self, const Targets& covered, std::size_t depth) -> void {
    if (covered == all) {
      best = std::min(best, depth);
      return;
    }
    std::size_t remaining = (all & ~covered).count();
    if (depth + (remaining + widest - 1) / widest >= best) return;
    std::size_t first = 0;
    while (covered.test(first)) ++first;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (reach[c].test(first)) self(self, covered | reach[c], depth + 1);
  };
  search(search, Targets{}, 0);
  return best;
}

}  // namespace repbox
