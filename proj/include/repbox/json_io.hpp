#pragma once

#include <json.hpp>

#include "repbox/boxicity.hpp"
#include "repbox/complex.hpp"
#include "repbox/designs.hpp"
#include "repbox/geometry.hpp"
#include "repbox/homology.hpp"

namespace repbox {

/// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

[[nodiscard]] Json face_to_json(const Face& f);
[[nodiscard]] Face face_from_json(const Json& j);

/// {"vertices":[...],"facets":[[...],...]}
[[nodiscard]] Json complex_to_json(const SimplicialComplex& x);
/// Accepts exactly one of "facets" or "missing_faces".
[[nodiscard]] SimplicialComplex complex_from_json(const Json& j,
                                                  GhostPolicy ghosts = GhostPolicy::kReject);

/// {"-1":0,"0":1,...}
[[nodiscard]] Json betti_to_json(const BettiVector& b);

/// {"t":2,"k":3,"n":7,"blocks":[[...],...]}
[[nodiscard]] Json design_to_json(const DesignFamily& f);
[[nodiscard]] DesignFamily design_from_json(const Json& j);

/// {"dim":2,"sets":{"1":[["0","0"],["1/2","0"]],...}}, empty sets as null.
/// Product representations are written with their generators expanded.
[[nodiscard]] Json representation_to_json(const Representation& rep);
[[nodiscard]] Representation representation_from_json(const Json& j);

/// {"dim":1,"boxes":{"1":[["0","1"]],...}}
[[nodiscard]] Json boxes_to_json(const BoxFamily& boxes);
[[nodiscard]] BoxFamily boxes_from_json(const Json& j);

[[nodiscard]] Json lower_to_json(const LowerBoundCertificate& cert);
[[nodiscard]] Json cover_to_json(const CoverFamily& cover);
/// {"d":2,"cover":[[...]],"factors":[{complex},...],"bound":7,"lower":{...}}
[[nodiscard]] Json decomposition_to_json(const Decomposition& dec, const LowerBoundCertificate& lower);
[[nodiscard]] Json witness_to_json(const ObstructionWitness& w);
[[nodiscard]] Json duality_to_json(const DualityReport& report);

}  // namespace repbox
