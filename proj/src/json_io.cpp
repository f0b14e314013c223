#include "repbox/json_io.hpp"

#include "repbox/errors.hpp"

namespace repbox {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<Label> labels_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of vertex labels");
  std::vector<Label> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw DomainError("vertex labels must be integers");
    out.push_back(v.get<Label>());
  }
  return out;
}

std::vector<Face> family_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of faces");
  std::vector<Face> out;
  for (const Json& f : j) out.push_back(face_from_json(f));
  return out;
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const Rational& c : p) out.push_back(format_rational(c));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("rationals must be \"p/q\" strings or integers");
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a point must be an array of rationals");
  Point p;
  for (const Json& c : j) p.push_back(rational_from_json(c));
  return p;
}

Label label_from_key(const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("vertex key '" + key + "' is not an integer");
}

}  // namespace

Json face_to_json(const Face& f) { return Json(f.labels()); }

Face face_from_json(const Json& j) { return Face(labels_from_json(j)); }

Json complex_to_json(const SimplicialComplex& x) {
  Json out;
  out["vertices"] = x.vertices();
  Json facets = Json::array();
  for (const Face& f : x.facets()) facets.push_back(face_to_json(f));
  out["facets"] = std::move(facets);
  return out;
}

SimplicialComplex complex_from_json(const Json& j, GhostPolicy ghosts) {
  std::vector<Label> vertices = labels_from_json(require(j, "vertices"));
  const bool has_facets = j.contains("facets");
  const bool has_missing = j.contains("missing_faces");
  if (has_facets == has_missing)
    throw DomainError("complex needs exactly one of 'facets' or 'missing_faces'");
  if (has_facets) {
    std::vector<Face> facets = family_from_json(j.at("facets"));
    return SimplicialComplex::from_facets(std::move(vertices), facets, ghosts);
  }
  std::vector<Face> missing = family_from_json(j.at("missing_faces"));
  return SimplicialComplex::from_missing_faces(std::move(vertices), missing, ghosts);
}

Json betti_to_json(const BettiVector& b) {
  Json out = Json::object();
  for (const auto& [k, beta] : b.by_degree) out[std::to_string(k)] = beta;
  return out;
}

Json design_to_json(const DesignFamily& f) {
  Json out;
  out["t"] = f.strength;
  out["k"] = f.block_size;
  out["n"] = f.n;
  Json blocks = Json::array();
  for (const Face& b : f.blocks) blocks.push_back(face_to_json(b));
  out["blocks"] = std::move(blocks);
  return out;
}

DesignFamily design_from_json(const Json& j) {
  DesignFamily f;
  try {
    f.strength = require(j, "t").get<int>();
    f.block_size = require(j, "k").get<int>();
    f.n = require(j, "n").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError("design parameters t, k, n must be integers");
  }
  f.blocks = family_from_json(require(j, "blocks"));
  return f;
}

Json representation_to_json(const Representation& rep) {
  Json out;
  out["dim"] = rep.ambient_dim();
  Json sets = Json::object();
  for (Label v : rep.vertices()) {
    if (rep.is_empty(v)) {
      sets[std::to_string(v)] = nullptr;
      continue;
    }
    Json points = Json::array();
    const VPolytope poly = rep.polytope(v);
    for (const Point& p : poly.generators()) points.push_back(point_to_json(p));
    sets[std::to_string(v)] = std::move(points);
  }
  out["sets"] = std::move(sets);
  return out;
}

Representation representation_from_json(const Json& j) {
  const Json& dim_json = require(j, "dim");
  if (!dim_json.is_number_unsigned()) throw DomainError("'dim' must be a non-negative integer");
  const auto dim = dim_json.get<std::size_t>();
  const Json& sets_json = require(j, "sets");
  if (!sets_json.is_object()) throw DomainError("'sets' must be an object");
  std::map<Label, VPolytope> sets;
  for (const auto& [key, value] : sets_json.items()) {
    Label v = label_from_key(key);
    if (value.is_null()) {
      sets.emplace(v, VPolytope::empty(dim));
      continue;
    }
    if (!value.is_array() || value.empty()) throw DomainError("set of vertex " + key + " must be null or a non-empty point list");
    std::vector<Point> points;
    for (const Json& p : value) points.push_back(point_from_json(p));
    VPolytope poly(std::move(points));
    if (poly.dim() != dim) throw DomainError("set of vertex " + key + " has the wrong dimension");
    sets.emplace(v, std::move(poly));
  }
  return Representation(dim, std::move(sets));
}

Json boxes_to_json(const BoxFamily& boxes) {
  Json out;
  out["dim"] = boxes.dim;
  Json all = Json::object();
  for (const auto& [v, intervals] : boxes.boxes) {
    Json list = Json::array();
    for (const Interval& iv : intervals) list.push_back(Json::array({format_rational(iv.lo), format_rational(iv.hi)}));
    all[std::to_string(v)] = std::move(list);
  }
  out["boxes"] = std::move(all);
  return out;
}

BoxFamily boxes_from_json(const Json& j) {
  BoxFamily boxes;
  const Json& dim_json = require(j, "dim");
  if (!dim_json.is_number_unsigned()) throw DomainError("'dim' must be a non-negative integer");
  boxes.dim = dim_json.get<std::size_t>();
  const Json& all = require(j, "boxes");
  if (!all.is_object()) throw DomainError("'boxes' must be an object");
  for (const auto& [key, value] : all.items()) {
    if (!value.is_array()) throw DomainError("box of vertex " + key + " must be a list of intervals");
    std::vector<Interval> intervals;
    for (const Json& iv : value) {
      if (!iv.is_array() || iv.size() != 2) throw DomainError("an interval is a pair [lo, hi]");
      intervals.push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
    }
    boxes.boxes.emplace(label_from_key(key), std::move(intervals));
  }
  return boxes;
}

Json lower_to_json(const LowerBoundCertificate& cert) {
  Json out;
  out["kind"] = to_string(cert.kind);
  if (cert.kind == LowerKind::kSteinerExact) out["value"] = cert.value;
  return out;
}

Json cover_to_json(const CoverFamily& cover) {
  Json out;
  out["d"] = cover.d;
  Json sets = Json::array();
  for (const Face& v : cover.sets) sets.push_back(face_to_json(v));
  out["cover"] = std::move(sets);
  out["covering_index"] = cover.covering_index;
  return out;
}

Json decomposition_to_json(const Decomposition& dec, const LowerBoundCertificate& lower) {
  Json out;
  out["d"] = dec.cover.d;
  Json cover = Json::array();
  for (const Face& v : dec.cover.sets) cover.push_back(face_to_json(v));
  out["cover"] = std::move(cover);
  Json factors = Json::array();
  for (const SimplicialComplex& f : dec.factors) factors.push_back(complex_to_json(f));
  out["factors"] = std::move(factors);
  out["bound"] = dec.bound;
  out["lower"] = lower_to_json(lower);
  return out;
}

Json witness_to_json(const ObstructionWitness& w) {
  Json out;
  out["subcomplex_vertices"] = w.subcomplex_vertices;
  out["degree"] = w.degree;
  out["betti"] = w.betti;
  return out;
}

Json duality_to_json(const DualityReport& report) {
  Json out;
  out["pass"] = report.pass;
  out["betti"] = betti_to_json(report.betti_x);
  out["gamma_betti"] = betti_to_json(report.betti_gamma);
  out["gamma_excluded"] = report.gamma_excluded;
  Json mismatches = Json::array();
  for (const DualityMismatch& m : report.mismatches) {
    Json e;
    e["degree"] = m.degree_x;
    e["gamma_degree"] = m.degree_gamma;
    e["betti"] = m.betti_x;
    e["gamma_betti"] = m.betti_gamma;
    mismatches.push_back(std::move(e));
  }
  out["mismatches"] = std::move(mismatches);
  return out;
}

}  // namespace repbox
