#include "repbox/designs.hpp"

#include <algorithm>
#include <map>

#include "repbox/errors.hpp"

namespace repbox {

namespace {

void validate(const DesignFamily& f) {
  if (f.n < 0 || f.block_size < 0 || f.strength < 0 || f.strength > f.block_size)
    throw DomainError("design parameters out of range");
  for (const Face& b : f.blocks) {
    if (b.size() != static_cast<std::size_t>(f.block_size))
      throw DomainError("block " + to_string(b) + " does not have size " + std::to_string(f.block_size));
    for (Label v : b)
      if (v < 1 || v > f.n) throw DomainError("block " + to_string(b) + " leaves the ground set");
  }
}

void for_each_subset(const std::vector<Label>& items, std::size_t k, std::size_t start,
                     std::vector<Label>& current, const auto& visit) {
  if (current.size() == k) {
    visit(current);
    return;
  }
  for (std::size_t i = start; i < items.size(); ++i) {
    current.push_back(items[i]);
    for_each_subset(items, k, i + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

std::string to_string(DesignClass c) {
  switch (c) {
    case DesignClass::kNotPartial: return "not_partial";
    case DesignClass::kPartial: return "partial";
    case DesignClass::kSteiner: return "steiner";
  }
  return "?";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DesignClass check_design(const DesignFamily& f) {
  validate(f);
  std::map<std::vector<Label>, int> incidences;
  for (const Face& b : f.blocks) {
    std::vector<Label> current;
    for_each_subset(b.labels(), static_cast<std::size_t>(f.strength), 0, current,
                    [&](const std::vector<Label>& s) { ++incidences[s]; });
  }
  for (const auto& [subset, count] : incidences)
    if (count > 1) return DesignClass::kNotPartial;
  // Every t-subset is covered once exactly when the covered ones number C(n,t).
  return static_cast<long long>(incidences.size()) == binomial(f.n, f.strength)
             ? DesignClass::kSteiner
             : DesignClass::kPartial;
}

long long steiner_upper_bound(int d, int n) {
  if (d < 1 || d >= n) throw DomainError("steiner bound requires 1 <= d < n");
  return binomial(n, d) / (d + 1);
}

DesignFamily greedy_maximal_partial_steiner(std::span<const Face> candidates, int d, int n) {
  for (const Face& m : candidates)
    if (m.size() != static_cast<std::size_t>(d) + 1)
      throw DomainError("candidate " + to_string(m) + " does not have size d+1");
  std::vector<Face> ordered(candidates.begin(), candidates.end());
  canonicalize(ordered);
  DesignFamily out{n, d + 1, d, {}};
  for (const Face& m : ordered) {
    bool fits = std::all_of(out.blocks.begin(), out.blocks.end(), [&](const Face& b) {
      return face_intersection(b, m).size() < static_cast<std::size_t>(d);
    });
    if (fits) out.blocks.push_back(m);
  }
  for (const Face& m : ordered) {
    if (std::find(out.blocks.begin(), out.blocks.end(), m) != out.blocks.end()) continue;
    DesignFamily extended = out;
    extended.blocks.push_back(m);
    if (check_design(extended) != DesignClass::kNotPartial)
      throw InternalError("greedy partial Steiner system is not maximal");
  }
  return out;
}

DesignFamily builtin_design(const std::string& name) {
  if (name == "fano") {
    return {7, 3, 2, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 7}, {3, 4, 6}, {2, 5, 6}, {3, 5, 7}}};
  }
  if (name == "ag3") {
    auto label = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + (j % 3 + 3) % 3 + 1; };
    const int directions[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    std::vector<Face> lines;
    for (const auto& dir : directions)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          lines.push_back(Face{label(i, j), label(i + dir[0], j + dir[1]),
                               label(i + 2 * dir[0], j + 2 * dir[1])});
    canonicalize(lines);
    return {9, 3, 2, std::move(lines)};
  }
  throw DomainError("unknown design '" + name + "'");
}

NearCover near_cover_count(const DesignFamily& f, const Face& tau) {
  if (check_design(f) != DesignClass::kSteiner) throw DomainError("design is not a Steiner system");
  if (tau.size() > static_cast<std::size_t>(f.strength) + 1)
    throw DomainError("tau is larger than d+1");
  NearCover out;
  for (const Face& b : f.blocks) {
    if (tau.is_subset_of(b)) throw DomainError("tau " + to_string(tau) + " lies in a block");
    if (face_difference(tau, b).size() == 1) {
      ++out.count;
      out.blocks.push_back(b);
    }
  }
  return out;
}

}  // namespace repbox
