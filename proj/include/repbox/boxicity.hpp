#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repbox/complex.hpp"
#include "repbox/designs.hpp"
#include "repbox/homology.hpp"

namespace repbox {

/// Non-faces V_1..V_k of size d+1 such that every missing face tau has
/// |tau \ V_i| <= 1 for some i.
struct CoverFamily {
  int d = 0;
  std::vector<Face> sets;
  /// covering_index[j] is the first V_i covering the j-th missing face (canonical order).
  std::vector<std::size_t> covering_index;
};

/// X written as the intersection of one factor per cover set.
struct Decomposition {
  CoverFamily cover;
  std::vector<SimplicialComplex> factors;
  std::vector<std::vector<Face>> factor_missing;
  /// Upper bound on the d-boxicity: the number of factors.
  long long bound = 0;
};

enum class LowerKind { kSteinerExact, kNone };

[[nodiscard]] std::string to_string(LowerKind k);

struct LowerBoundCertificate {
  LowerKind kind = LowerKind::kNone;
  long long value = 0;
  /// The missing faces as a design on [n] (vertex i-th smallest label -> i+1).
  std::optional<DesignFamily> design;
};

/// Greedy maximal partial Steiner (d, d+1, n)-system among the (d+1)-sized non-faces.
[[nodiscard]] CoverFamily cover_missing_faces(const SimplicialComplex& x, int d);

/// Checks the cover invariants against x and fills in covering_index.
[[nodiscard]] CoverFamily validate_cover(const SimplicialComplex& x, int d,
                                         std::vector<Face> sets);

[[nodiscard]] Decomposition decompose(const SimplicialComplex& x, const CoverFamily& cover);
[[nodiscard]] Decomposition decompose(const SimplicialComplex& x, int d);

/// Exact d-boxicity when the missing faces all have size d+1 and form a
/// partial Steiner (d, d+1, n)-system.
[[nodiscard]] LowerBoundCertificate boxd_lower_certificate(const SimplicialComplex& x, int d);

struct Refutation {
  std::size_t factor = 0;
  Face tau1;
  Face tau2;
  ObstructionWitness witness;
};

/// Given an assignment of the missing faces (canonical order) to fewer than
/// |M| factors, exhibits a factor that is not d-Leray.
[[nodiscard]] Refutation refute_small_cover(const SimplicialComplex& x, int d,
                                            std::span<const std::size_t> assignment,
                                            std::size_t num_factors);

/// Minimum size of a cover family, by exhaustive search (n <= 9).
[[nodiscard]] std::size_t exact_cover_minimum(const SimplicialComplex& x, int d);

}  // namespace repbox
