#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repbox/complex.hpp"

namespace repbox {

enum class Field { kGF2, kRationals };

[[nodiscard]] std::string to_string(Field f);
[[nodiscard]] Field parse_field(const std::string& name);

/// Reduced Betti numbers indexed by degree, starting at -1.
struct BettiVector {
  Field field = Field::kGF2;
  std::map<int, long long> by_degree;

  /// Zero for degrees that were not computed.
  [[nodiscard]] long long at(int degree) const;
  /// Largest degree with a non-zero entry, if any.
  [[nodiscard]] std::optional<int> top_degree() const;
  /// Alternating sum over all degrees.
  [[nodiscard]] long long euler_characteristic() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

[[nodiscard]] BettiVector reduced_betti(const SimplicialComplex& x, Field field = Field::kGF2);

/// Reduced Euler characteristic from face counts alone: sum of (-1)^dim over faces.
[[nodiscard]] long long reduced_euler_characteristic(const SimplicialComplex& x);

/// True when every induced subcomplex has vanishing reduced homology in degrees >= d.
[[nodiscard]] bool is_d_leray(const SimplicialComplex& x, int d, Field field = Field::kGF2);

/// Least d for which x is d-Leray.
[[nodiscard]] int leray_number(const SimplicialComplex& x, Field field = Field::kGF2);

struct DualityMismatch {
  int degree_x;
  int degree_gamma;
  long long betti_x;
  long long betti_gamma;
};

struct DualityReport {
  bool pass = true;
  BettiVector betti_x;
  BettiVector betti_gamma;
  std::vector<Label> gamma_excluded;
  std::vector<DualityMismatch> mismatches;
};

/// Compares beta_k(X) with beta_{|V|-k-3}(Gamma(X)) in every degree where either
/// side can be non-zero.
[[nodiscard]] DualityReport alexander_duality_check(const SimplicialComplex& x,
                                                    Field field = Field::kGF2);

struct ObstructionWitness {
  std::vector<Label> subcomplex_vertices;
  int degree = 0;
  long long betti = 0;
};

/// Certifies that x has non-vanishing homology in degree |V|-3 >= d when A and
/// B are missing faces with |A|=|B|=d+1, |A∩B|<d, V = A∪B, and every other
/// missing face together with A (and with B) covers V.
[[nodiscard]] ObstructionWitness leray_obstruction(const SimplicialComplex& x, const Face& a,
                                                   const Face& b, int d,
                                                   Field field = Field::kGF2);

}  // namespace repbox
