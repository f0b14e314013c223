#include "repbox/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "repbox/boxicity.hpp"
#include "repbox/errors.hpp"
#include "repbox/json_io.hpp"
#include "repbox/recipes.hpp"

namespace repbox::cli {

namespace {

constexpr int kDefaultMaxVertices = 16;

struct Options {
  int d = -1;
  std::string field = "gf2";
  int max_vertices = kDefaultMaxVertices;
  std::string output;
  std::vector<std::string> inputs;
  std::string subset;
  std::string sigma1;
  std::string sigma2;
  std::string cover;
  std::string assignment;
  std::string name;
  int n = 6;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Face parse_face_list(const std::string& text) {
  std::vector<Label> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      labels.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("'" + text + "' is not a comma-separated label list");
    }
  }
  return Face(std::move(labels));
}

class Runner {
 public:
  Runner(const Options& opts, std::ostream& err) : opts_(opts), err_(err) {}

  SimplicialComplex load_complex(const std::string& path) const {
    Json j = read_json(path);
    if (j.contains("vertices") && j.at("vertices").is_array() &&
        static_cast<int>(j.at("vertices").size()) > opts_.max_vertices)
      throw GuardError("complex has " + std::to_string(j.at("vertices").size()) +
                       " vertices; raise --max-vertices to proceed");
    return complex_from_json(j);
  }

  // Result documents that wrap a representation are accepted as is.
  static Json unwrap(Json j) {
    if (j.is_object() && j.contains("representation")) return j.at("representation");
    return j;
  }

  Representation load_representation(const std::string& path) const {
    Json j = unwrap(read_json(path));
    if (j.contains("boxes")) return boxes_as_representation(boxes_from_json(j));
    return representation_from_json(j);
  }

  int need_d() const {
    if (opts_.d < 0) throw DomainError("this command needs -d <int>");
    return opts_.d;
  }

  const std::string& input(std::size_t i) const {
    if (opts_.inputs.size() <= i) throw DomainError("missing input file argument");
    return opts_.inputs[i];
  }

  Json complex_info() const {
    SimplicialComplex x = load_complex(input(0));
    MissingFaceFamily m = missing_faces(x);
    Json out;
    out["n"] = x.num_vertices();
    out["dimension"] = x.dimension();
    out["num_facets"] = x.facet_masks().size();
    out["facets"] = complex_to_json(x)["facets"];
    out["num_missing_faces"] = m.members.size();
    Json missing = Json::array();
    for (const Face& tau : m.members) missing.push_back(face_to_json(tau));
    out["missing_faces"] = std::move(missing);
    out["h"] = m.members.empty() ? Json(nullptr) : Json(h_number(x));
    out["ghost_vertices"] = x.ghost_vertices();
    return out;
  }

  Json complex_homology() const {
    SimplicialComplex x = load_complex(input(0));
    BettiVector b = reduced_betti(x, parse_field(opts_.field));
    Json out;
    out["field"] = to_string(b.field);
    out["betti"] = betti_to_json(b);
    out["euler"] = reduced_euler_characteristic(x);
    return out;
  }

  Json complex_leray() const {
    SimplicialComplex x = load_complex(input(0));
    Json out;
    out["field"] = opts_.field;
    out["leray"] = leray_number(x, parse_field(opts_.field));
    return out;
  }

  Json complex_gamma() const {
    SimplicialComplex x = load_complex(input(0));
    GammaComplex g = gamma_complex(x);
    Json out;
    out["gamma"] = complex_to_json(g.complex);
    Json faces = Json::array();
    for (const Face& tau : g.vertex_faces) faces.push_back(face_to_json(tau));
    out["vertex_faces"] = std::move(faces);
    out["excluded"] = g.excluded;
    out["duality"] = duality_to_json(alexander_duality_check(x, parse_field(opts_.field)));
    return out;
  }

  Json boxd_run() const {
    SimplicialComplex x = load_complex(input(0));
    const int d = need_d();
    CoverFamily cover = cover_missing_faces(x, d);
    LowerBoundCertificate lower = boxd_lower_certificate(x, d);
    Json out;
    out["d"] = d;
    out["upper"] = cover.sets.size();
    out["lower"] = lower_to_json(lower);
    // The Steiner certificate pins the d-boxicity exactly.
    out["exact"] = lower.kind == LowerKind::kSteinerExact ? Json(lower.value) : Json(nullptr);
    out["cover_minimum"] = x.num_vertices() <= 9 ? Json(exact_cover_minimum(x, d)) : Json(nullptr);
    out["steiner_bound"] = steiner_upper_bound(d, static_cast<int>(x.num_vertices()));
    return out;
  }

  Json boxd_cover() const { return cover_to_json(cover_missing_faces(load_complex(input(0)), need_d())); }

  Json boxd_decompose() const {
    SimplicialComplex x = load_complex(input(0));
    const int d = need_d();
    CoverFamily cover;
    if (opts_.cover.empty()) {
      cover = cover_missing_faces(x, d);
    } else {
      Json j = read_json(opts_.cover);
      std::vector<Face> sets;
      for (const Json& f : j.contains("cover") ? j.at("cover") : j) sets.push_back(face_from_json(f));
      cover = validate_cover(x, d, std::move(sets));
    }
    return decomposition_to_json(decompose(x, cover), boxd_lower_certificate(x, d));
  }

  Json boxd_refute() const {
    SimplicialComplex x = load_complex(input(0));
    if (opts_.assignment.empty()) throw DomainError("boxd refute needs --assignment <file>");
    Json j = read_json(opts_.assignment);
    std::vector<std::size_t> assignment;
    std::size_t factors = 0;
    try {
      assignment = j.at("assignment").get<std::vector<std::size_t>>();
      factors = j.at("factors").get<std::size_t>();
    } catch (const nlohmann::json::exception&) {
      throw DomainError("assignment file needs 'factors' and 'assignment'");
    }
    Refutation r = refute_small_cover(x, need_d(), assignment, factors);
    Json out;
    out["factor"] = r.factor;
    out["tau1"] = face_to_json(r.tau1);
    out["tau2"] = face_to_json(r.tau2);
    out["witness"] = witness_to_json(r.witness);
    return out;
  }

  Json designs_check() const {
    DesignFamily f = design_from_json(read_json(input(0)));
    Json out;
    out["classification"] = to_string(check_design(f));
    out["size"] = f.blocks.size();
    if (f.block_size == f.strength + 1 && f.strength >= 1 && f.strength < f.n)
      out["bound"] = steiner_upper_bound(f.strength, f.n);
    return out;
  }

  Json designs_builtin() const {
    DesignFamily f = builtin_design(input(0));
    Json out = design_to_json(f);
    out["classification"] = to_string(check_design(f));
    return out;
  }

  Json represent_wegner() const {
    SimplicialComplex x = load_complex(input(0));
    if (opts_.subset.empty()) throw DomainError("represent wegner needs --set <labels>");
    return verified_output(wegner_representation(x, parse_face_list(opts_.subset)));
  }

  Json represent_product() const {
    std::vector<Representation> reps;
    for (const std::string& path : opts_.inputs) {
      Representation r = load_representation(path);
      r.set_verified_complex(nerve_of_convex_family(r));
      reps.push_back(std::move(r));
    }
    if (reps.empty()) throw DomainError("represent product needs input files");
    return verified_output(product_representation(reps));
  }

  Json represent_augment() const {
    Representation rep = load_representation(input(0));
    if (opts_.sigma1.empty() || opts_.sigma2.empty())
      throw DomainError("represent augment needs --sigma1 and --sigma2");
    Augmentation a = augment_two_simplices(rep, parse_face_list(opts_.sigma1), parse_face_list(opts_.sigma2));
    Json out = verified_output(a.rep);
    Json witness = Json::array();
    for (const Rational& c : a.witness) witness.push_back(format_rational(c));
    out["witness"] = std::move(witness);
    out["witness_from_empty_intersection"] = a.witness_from_empty_intersection;
    return out;
  }

  Json represent_verify() const {
    Representation rep = load_representation(input(0));
    SimplicialComplex nerve = nerve_of_convex_family(rep);
    Json out;
    out["dim"] = rep.ambient_dim();
    out["nerve"] = complex_to_json(nerve);
    if (opts_.inputs.size() > 1) {
      SimplicialComplex expected = load_complex(input(1));
      out["pass"] = nerve == expected;
      if (nerve != expected) {
        out["error"] = {{"kind", "verification"}, {"message", "nerve differs from the expected complex"}};
        failed_ = true;
      }
    }
    return out;
  }

  Json represent_nerve() const {
    Json j = unwrap(read_json(input(0)));
    if (j.contains("boxes")) return complex_to_json(nerve_of_boxes(boxes_from_json(j)));
    return complex_to_json(nerve_of_convex_family(representation_from_json(j)));
  }

  Json demo() const {
    const std::string& name = input(0);
    if (name == "fano-rep4") return demo_fano_rep4();
    if (name == "fano-box2") return demo_fano_box2();
    if (name == "roberts-n") return demo_roberts();
    if (name == "x29-build") return demo_x29();
    throw DomainError("unknown demo '" + name + "'");
  }

  bool failed() const { return failed_; }

 private:
  static Json verified_output(const Representation& rep) {
    Json out;
    out["representation"] = representation_to_json(rep);
    out["nerve"] = complex_to_json(*rep.verified_complex());
    out["verified"] = true;
    return out;
  }

  static Json demo_fano_rep4() {
    FanoPipeline p = fano_rep4_pipeline();
    Json steps = Json::array();
    for (const AugmentationStep& s : p.steps) {
      Json step;
      step["sigma1"] = face_to_json(s.sigma1);
      step["sigma2"] = face_to_json(s.sigma2);
      Json w = Json::array();
      for (const Rational& c : s.witness) w.push_back(format_rational(c));
      step["witness"] = std::move(w);
      step["dim"] = s.dim;
      steps.push_back(std::move(step));
    }
    // Independent re-check over every non-empty vertex subset.
    const SimplicialComplex target = fano_complex();
    std::size_t checked = 0;
    for (Mask s = 1; s <= target.vertex_mask(); ++s, ++checked) {
      std::vector<Label> labels = target.to_face(s).labels();
      if (p.rep.common_point(labels).feasible != target.is_face_mask(s))
        throw InternalError("Fano representation disagrees with the complex on " + to_string(target.to_face(s)));
    }
    Json out;
    out["demo"] = "fano-rep4";
    out["base"] = boxes_to_json(fano_base_intervals());
    out["steps"] = std::move(steps);
    out["representation"] = representation_to_json(p.rep);
    out["complex"] = complex_to_json(target);
    out["subsets_checked"] = checked;
    out["nerve_check"] = "pass";
    return out;
  }

  static Json demo_fano_box2() {
    const SimplicialComplex x = fano_complex();
    Decomposition dec = decompose(x, 2);
    Json reps = Json::array();
    for (std::size_t i = 0; i < dec.factors.size(); ++i)
      reps.push_back(representation_to_json(wegner_representation(dec.factors[i], dec.cover.sets[i])));
    Json out;
    out["demo"] = "fano-box2";
    out["decomposition"] = decomposition_to_json(dec, boxd_lower_certificate(x, 2));
    out["factor_representations"] = std::move(reps);
    return out;
  }

  Json demo_roberts() const {
    if (opts_.n < 2 || opts_.n > 8 || opts_.n % 2 != 0) throw DomainError("roberts-n needs an even n <= 8");
    const SimplicialComplex x = cross_polytope_boundary(opts_.n);
    Decomposition dec = decompose(x, 1);
    LowerBoundCertificate lower = boxd_lower_certificate(x, 1);
    Json out;
    out["demo"] = "roberts-n";
    out["n"] = opts_.n;
    out["complex"] = complex_to_json(x);
    out["decomposition"] = decomposition_to_json(dec, lower);
    out["box1"] = lower.kind == LowerKind::kSteinerExact && lower.value == dec.bound ? Json(dec.bound) : Json(nullptr);
    out["betti"] = betti_to_json(reduced_betti(x));
    return out;
  }

  static Json demo_x29() {
    const SimplicialComplex x = affine_plane_complex();
    LowerBoundCertificate lower = boxd_lower_certificate(x, 2);
    CoverFamily cover = cover_missing_faces(x, 2);
    Json out;
    out["demo"] = "x29-build";
    out["complex"] = complex_to_json(x);
    out["num_missing_faces"] = missing_faces(x).members.size();
    out["lower"] = lower_to_json(lower);
    out["upper"] = cover.sets.size();
    out["box2"] = lower.kind == LowerKind::kSteinerExact && static_cast<std::size_t>(lower.value) == cover.sets.size()
                      ? Json(lower.value)
                      : Json(nullptr);
    return out;
  }

  const Options& opts_;
  std::ostream& err_;
  mutable bool failed_ = false;
};

Json error_json(const std::string& kind, const std::string& message) {
  Json out;
  out["error"] = {{"kind", kind}, {"message", message}};
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"repbox: representability and d-boxicity of simplicial complexes"};
  app.require_subcommand(1);
  std::function<Json(const Runner&)> action;

  auto add_common = [&](CLI::App* cmd, bool with_d) {
    if (with_d) cmd->add_option("-d", opts.d, "dimension d");
    cmd->add_option("--field", opts.field, "gf2 or q")->check(CLI::IsMember({"gf2", "q"}));
    cmd->add_option("--max-vertices", opts.max_vertices, "vertex guard");
    cmd->add_option("-o", opts.output, "write JSON here instead of stdout");
    cmd->add_option("inputs", opts.inputs, "input files");
  };
  auto leaf = [&](CLI::App* group, const std::string& name, bool with_d,
                  std::function<Json(const Runner&)> fn) {
    CLI::App* cmd = group->add_subcommand(name);
    add_common(cmd, with_d);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  CLI::App* complex = app.add_subcommand("complex", "complex queries")->require_subcommand(1);
  leaf(complex, "info", false, [](const Runner& r) { return r.complex_info(); });
  leaf(complex, "homology", false, [](const Runner& r) { return r.complex_homology(); });
  leaf(complex, "leray", false, [](const Runner& r) { return r.complex_leray(); });
  leaf(complex, "gamma", false, [](const Runner& r) { return r.complex_gamma(); });

  CLI::App* boxd = app.add_subcommand("boxd", "d-boxicity pipeline")->require_subcommand(1);
  leaf(boxd, "run", true, [](const Runner& r) { return r.boxd_run(); });
  leaf(boxd, "cover", true, [](const Runner& r) { return r.boxd_cover(); });
  leaf(boxd, "decompose", true, [](const Runner& r) { return r.boxd_decompose(); })
      ->add_option("--cover", opts.cover, "cover file");
  leaf(boxd, "refute", true, [](const Runner& r) { return r.boxd_refute(); })
      ->add_option("--assignment", opts.assignment, "assignment file");

  CLI::App* designs = app.add_subcommand("designs", "Steiner systems")->require_subcommand(1);
  leaf(designs, "check", false, [](const Runner& r) { return r.designs_check(); });
  leaf(designs, "builtin", false, [](const Runner& r) { return r.designs_builtin(); });

  CLI::App* represent = app.add_subcommand("represent", "convex representations")->require_subcommand(1);
  leaf(represent, "wegner", false, [](const Runner& r) { return r.represent_wegner(); })
      ->add_option("--set", opts.subset, "the non-face U, e.g. 1,2,3");
  leaf(represent, "product", false, [](const Runner& r) { return r.represent_product(); });
  CLI::App* augment = leaf(represent, "augment", false, [](const Runner& r) { return r.represent_augment(); });
  augment->add_option("--sigma1", opts.sigma1, "first simplex, e.g. 1,2,5,7");
  augment->add_option("--sigma2", opts.sigma2, "second simplex");
  leaf(represent, "verify", false, [](const Runner& r) { return r.represent_verify(); });
  leaf(represent, "nerve", false, [](const Runner& r) { return r.represent_nerve(); });

  leaf(&app, "demo", false, [](const Runner& r) { return r.demo(); })
      ->add_option("-n", opts.n, "vertex count for roberts-n");

  auto emit = [&](const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (opts.output.empty()) {
      out << text;
      return;
    }
    std::ofstream file(opts.output);
    if (!file) throw DomainError("cannot write '" + opts.output + "'");
    file << text;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return 1;
  }

  if (opts.max_vertices != kDefaultMaxVertices)
    err << "warning: vertex guard set to " << opts.max_vertices << "\n";
  try {
    Runner runner(opts, err);
    Json result = action(runner);
    emit(result);
    return runner.failed() ? 1 : 0;
  } catch (const GuardError& e) {
    out << error_json("guard", e.what()).dump(2) << "\n";
    return 2;
  } catch (const DomainError& e) {
    out << error_json("domain", e.what()).dump(2) << "\n";
    return 1;
  } catch (const InternalError& e) {
    out << error_json("internal", e.what()).dump(2) << "\n";
    return 1;
  }
}

}  // namespace repbox::cli
