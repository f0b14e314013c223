#pragma once

#include <span>
#include <string>
#include <vector>

#include "repbox/face.hpp"

namespace repbox {

/// Blocks of size k over the ground set [n]; strength t counts how many
/// blocks may contain a t-subset.
struct DesignFamily {
  int n = 0;
  int block_size = 0;
  int strength = 0;
  std::vector<Face> blocks;
};

enum class DesignClass { kNotPartial, kPartial, kSteiner };

[[nodiscard]] std::string to_string(DesignClass c);

/// Counts how many blocks contain each t-subset of [n].
[[nodiscard]] DesignClass check_design(const DesignFamily& f);

/// floor(C(n,d) / (d+1)).
[[nodiscard]] long long steiner_upper_bound(int d, int n);

[[nodiscard]] long long binomial(int n, int k);

/// Lexicographic greedy selection of blocks from `candidates` such that every
/// d-subset lies in at most one chosen block. The result cannot be extended by
/// any remaining candidate.
[[nodiscard]] DesignFamily greedy_maximal_partial_steiner(std::span<const Face> candidates, int d,
                                                          int n);

/// "fano": the seven lines of the Fano plane on [7].
/// "ag3": the twelve lines of AG(2,3), point (i,j) numbered 3i+j+1.
[[nodiscard]] DesignFamily builtin_design(const std::string& name);

struct NearCover {
  long long count = 0;
  std::vector<Face> blocks;
};

/// Blocks sigma with |tau \ sigma| = 1, for tau contained in no block.
[[nodiscard]] NearCover near_cover_count(const DesignFamily& f, const Face& tau);

}  // namespace repbox
