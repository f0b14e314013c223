#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace repbox {

/// Subset of a complex's vertex indices; bit i is the i-th smallest label.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

[[nodiscard]] inline int popcount(Mask m) { return std::popcount(m); }

[[nodiscard]] inline bool is_submask(Mask sub, Mask super) { return (sub & ~super) == 0; }

[[nodiscard]] inline Mask bit(std::size_t i) { return Mask{1} << i; }

[[nodiscard]] inline Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Lexicographic order of the sorted index sequences (a proper prefix sorts first).
[[nodiscard]] inline bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Orders by cardinality, then lexicographically.
[[nodiscard]] inline bool graded_less(Mask a, Mask b) {
  int pa = popcount(a);
  int pb = popcount(b);
  return pa != pb ? pa < pb : lex_less(a, b);
}

[[nodiscard]] inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Inclusion-maximal masks, in lexicographic order.
[[nodiscard]] std::vector<Mask> maximal_masks(std::vector<Mask> masks);

/// Inclusion-minimal masks, in lexicographic order.
[[nodiscard]] std::vector<Mask> minimal_masks(std::vector<Mask> masks);

}  // namespace repbox
