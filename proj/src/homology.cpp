#include "repbox/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/multiprecision/gmp.hpp>

#include "repbox/errors.hpp"

namespace repbox {

namespace {

using Rational = boost::multiprecision::mpq_rational;

constexpr std::size_t kMaxLerayVertices = 24;

/// Faces grouped by cardinality: by_size[s] lists the faces with s vertices.
std::vector<std::vector<Mask>> group_by_size(const std::vector<Mask>& faces) {
  std::vector<std::vector<Mask>> by_size;
  for (Mask f : faces) {
    auto s = static_cast<std::size_t>(popcount(f));
    if (by_size.size() <= s) by_size.resize(s + 1);
    by_size[s].push_back(f);
  }
  return by_size;
}

class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t columns) : words_((columns + 63) / 64) {}

  /// Returns true when the row was independent of the rows added so far.
  bool add(std::vector<std::uint64_t> row) {
    for (;;) {
      std::size_t lead = leading(row);
      if (lead == kNone) return false;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const auto& p = it->second;
      for (std::size_t w = 0; w < words_; ++w) row[w] ^= p[w];
    }
  }
  [[nodiscard]] std::size_t words() const { return words_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  [[nodiscard]] std::size_t leading(const std::vector<std::uint64_t>& row) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    return kNone;
  }
  std::size_t words_;
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> pivots_;
};

std::size_t rank_gf2(const std::vector<Mask>& rows, const std::vector<Mask>& cols) {
  std::unordered_map<Mask, std::size_t> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);
  Gf2Basis basis(cols.size());
  std::size_t rank = 0;
  for (Mask sigma : rows) {
    std::vector<std::uint64_t> row(basis.words(), 0);
    for (int v : indices_of(sigma)) {
      std::size_t c = col_index.at(sigma & ~bit(static_cast<std::size_t>(v)));
      row[c / 64] ^= std::uint64_t{1} << (c % 64);
    }
    if (basis.add(std::move(row))) ++rank;
  }
  return rank;
}

std::size_t rank_rational(const std::vector<Mask>& rows, const std::vector<Mask>& cols) {
  std::unordered_map<Mask, std::size_t> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int sign = 1;
    for (int v : indices_of(rows[r])) {
      m[r][col_index.at(rows[r] & ~bit(static_cast<std::size_t>(v)))] = sign;
      sign = -sign;
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols.size(); ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

BettiVector betti_of_faces(const std::vector<Mask>& faces, Field field) {
  BettiVector out;
  out.field = field;
  if (faces.empty()) {
    out.by_degree[-1] = 0;
    return out;
  }
  const auto by_size = group_by_size(faces);
  // rank[s] is the rank of the boundary map from size-s chains to size-(s-1) chains.
  std::vector<std::size_t> rank(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s)
    rank[s] = field == Field::kGF2 ? rank_gf2(by_size[s], by_size[s - 1])
                                   : rank_rational(by_size[s], by_size[s - 1]);
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    auto beta = static_cast<long long>(by_size[s].size()) - static_cast<long long>(rank[s]) -
                static_cast<long long>(rank[s + 1]);
    out.by_degree[static_cast<int>(s) - 1] = beta;
  }
  return out;
}

}  // namespace

std::string to_string(Field f) { return f == Field::kGF2 ? "gf2" : "q"; }

Field parse_field(const std::string& name) {
  if (name == "gf2" || name == "GF2") return Field::kGF2;
  if (name == "q" || name == "Q" || name == "rationals") return Field::kRationals;
  throw DomainError("unknown field '" + name + "'");
}

long long BettiVector::at(int degree) const {
  auto it = by_degree.find(degree);
  return it == by_degree.end() ? 0 : it->second;
}

std::optional<int> BettiVector::top_degree() const {
  std::optional<int> top;
  for (const auto& [k, b] : by_degree)
    if (b != 0) top = k;
  return top;
}

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [k, b] : by_degree) chi += (k % 2 == 0 ? b : -b);
  return chi;
}

BettiVector reduced_betti(const SimplicialComplex& x, Field field) {
  return betti_of_faces(x.is_void() ? std::vector<Mask>{} : x.face_masks(), field);
}

long long reduced_euler_characteristic(const SimplicialComplex& x) {
  if (x.is_void()) return 0;
  long long chi = 0;
  for (Mask f : x.face_masks()) chi += ((popcount(f) - 1) % 2 == 0 ? 1 : -1);
  return chi;
}

namespace {

/// Subsets of the vertex set, largest first.
std::vector<Mask> subsets_by_decreasing_size(std::size_t n) {
  if (n > kMaxLerayVertices) throw GuardError("induced-subcomplex scan exceeds vertex guard");
  std::vector<Mask> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (Mask u = 0; u <= low_bits(n); ++u) subsets.push_back(u);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](Mask a, Mask b) { return popcount(a) > popcount(b); });
  return subsets;
}

std::vector<Mask> faces_within(const std::vector<Mask>& faces, Mask u) {
  std::vector<Mask> out;
  for (Mask f : faces)
    if (is_submask(f, u)) out.push_back(f);
  return out;
}

int top_size(const std::vector<Mask>& faces) {
  int top = 0;
  for (Mask f : faces) top = std::max(top, popcount(f));
  return top;
}

}  // namespace

bool is_d_leray(const SimplicialComplex& x, int d, Field field) {
  if (x.is_void()) return true;
  const std::vector<Mask> faces = x.face_masks();
  for (Mask u : subsets_by_decreasing_size(x.num_vertices())) {
    std::vector<Mask> sub = faces_within(faces, u);
    // Homology vanishes above the dimension of the induced subcomplex.
    if (top_size(sub) - 1 < d) continue;
    BettiVector b = betti_of_faces(sub, field);
    for (const auto& [k, beta] : b.by_degree)
      if (k >= d && beta != 0) return false;
  }
  return true;
}

int leray_number(const SimplicialComplex& x, Field field) {
  if (x.is_void()) return 0;
  const std::vector<Mask> faces = x.face_masks();
  int leray = 0;
  for (Mask u : subsets_by_decreasing_size(x.num_vertices())) {
    std::vector<Mask> sub = faces_within(faces, u);
    if (top_size(sub) - 1 < leray) continue;
    BettiVector b = betti_of_faces(sub, field);
    if (auto top = b.top_degree(); top && *top + 1 > leray) leray = *top + 1;
  }
  return leray;
}

DualityReport alexander_duality_check(const SimplicialComplex& x, Field field) {
  GammaComplex gamma = gamma_complex(x);
  DualityReport report;
  report.betti_x = reduced_betti(x, field);
  report.betti_gamma = reduced_betti(gamma.complex, field);
  report.gamma_excluded = gamma.excluded;
  const int n = static_cast<int>(x.num_vertices());
  int lo = -1;
  int hi = std::max(n - 2, x.dimension());
  for (const auto& [j, beta] : report.betti_gamma.by_degree) {
    lo = std::min(lo, n - 3 - j);
    hi = std::max(hi, n - 3 - j);
  }
  for (int k = lo; k <= hi; ++k) {
    long long bx = report.betti_x.at(k);
    long long bg = report.betti_gamma.at(n - 3 - k);
    if (bx != bg) report.mismatches.push_back({k, n - 3 - k, bx, bg});
  }
  report.pass = report.mismatches.empty();
  return report;
}

ObstructionWitness leray_obstruction(const SimplicialComplex& x, const Face& a, const Face& b,
                                     int d, Field field) {
  if (d < 0) throw DomainError("d must be non-negative");
  if (a.size() != static_cast<std::size_t>(d) + 1 || b.size() != static_cast<std::size_t>(d) + 1)
    throw DomainError("A and B must both have size d+1");
  if (face_intersection(a, b).size() >= static_cast<std::size_t>(d))
    throw DomainError("intersection too large: |A∩B| must be less than d");
  const Face all(x.vertices());
  if (face_union(a, b) != all) throw DomainError("vertex set must equal A∪B");
  MissingFaceFamily m = missing_faces(x);
  auto is_missing = [&m](const Face& f) {
    return std::find(m.members.begin(), m.members.end(), f) != m.members.end();
  };
  if (!is_missing(a)) throw DomainError("A is not a missing face");
  if (!is_missing(b)) throw DomainError("B is not a missing face");
  for (const Face& tau : m.members) {
    if (tau == a || tau == b) continue;
    if (face_union(tau, a) != all || face_union(tau, b) != all)
      throw DomainError("missing face " + to_string(tau) + " does not cover V together with A and B");
  }

  // A and B must be isolated vertices of Gamma.
  GammaComplex gamma = gamma_complex(x);
  for (const Face& endpoint : {a, b}) {
    auto idx = static_cast<std::size_t>(
        std::find(gamma.vertex_faces.begin(), gamma.vertex_faces.end(), endpoint) -
        gamma.vertex_faces.begin());
    for (std::size_t j = 0; j < gamma.vertex_faces.size(); ++j)
      if (j != idx && gamma.complex.is_face_mask(bit(idx) | bit(j)))
        throw InternalError("missing face " + to_string(endpoint) + " is not isolated in Gamma");
  }

  ObstructionWitness w;
  w.subcomplex_vertices = x.vertices();
  w.degree = static_cast<int>(x.num_vertices()) - 3;
  w.betti = reduced_betti(x, field).at(w.degree);
  if (w.betti < 1) throw InternalError("obstruction degree carries no homology");
  return w;
}

}  // namespace repbox
