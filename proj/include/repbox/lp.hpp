#pragma once

#include <optional>
#include <vector>

#include "repbox/rational.hpp"

namespace repbox {

/// Dense equality system A y = b.
struct EqualitySystem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
};

/// Phase-one simplex in exact arithmetic with Bland's rule. Returns some
/// y >= 0 with A y = b, or nullopt when none exists.
[[nodiscard]] std::optional<std::vector<Rational>> find_nonnegative_solution(EqualitySystem system);

}  // namespace repbox
