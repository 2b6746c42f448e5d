// Command-line front end: bases, pairings, embeddings, braid matrices,
// genericity, homology ranks, helix classes and the invariant suite.

#include "lbrep/braid.hpp"
#include "lbrep/completion.hpp"
#include "lbrep/embeddings.hpp"
#include "lbrep/homology.hpp"
#include "lbrep/pairing.hpp"
#include "lbrep/serialize.hpp"
#include "lbrep/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lbrep;

namespace {

struct Options {
  std::string surface = "0,3,0";
  int m = 1;
  std::string side = "in";
  std::string flavour = "lf";
  std::string direction = "in";
  std::string specialize;
  std::string coefficients = "integers";
  std::string field = "rationals";
  std::string format = "json";
  bool geometric = false;
  bool dual = false;
  int n = 3;
  std::string word;
  std::string theta_x;
  std::string theta_d;
  std::string complex_file;
  std::string at;
  std::string e;
  std::string y;
  std::string z;
  std::uint64_t seed = 1;
};

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

SurfaceTriad parse_triad(const Options& o) {
  auto v = parse_int_list(o.surface, "--surface");
  if (v.size() != 3) throw std::invalid_argument("--surface expects g,n,k");
  SurfaceTriad t{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), o.m};
  t.validate();
  return t;
}

Json triad_json(const SurfaceTriad& t) {
  return Json{{"g", t.genus}, {"n", t.inner_circles}, {"k", t.outer_intervals}, {"m", t.points}, {"l", t.arc_count()}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string text_matrix(const RingMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_text(m(i, j));
    out += "]\n";
  }
  return out;
}

void emit_matrix(const Options& o, Json doc, const RingMatrix& m) {
  if (o.format == "latex") {
    std::cout << matrix_to_latex(m) << "\n";
  } else if (o.format == "text") {
    std::cout << text_matrix(m);
  } else {
    doc["matrix"] = matrix_to_json(m);
    emit(doc);
  }
}

Json labels(const std::vector<BasisClass>& b) {
  Json out = Json::array();
  for (const auto& c : b) out.push_back(c.label());
  return out;
}

int run_basis(const Options& o) {
  auto t = parse_triad(o);
  const Side side = parse_side(o.side);
  Flavour f = Flavour::locally_finite;
  if (o.flavour == "relative") {
    f = Flavour::relative;
  } else if (o.flavour == "lf_image") {
    f = Flavour::lf_image;
  } else if (o.flavour != "lf") {
    throw std::invalid_argument("--flavour must be relative, lf or lf_image");
  }
  auto b = basis(t, side, f);
  if (o.format == "text" || o.format == "latex") {
    for (const auto& c : b) std::cout << c.label() << "\n";
    return 0;
  }
  Json comps = Json::array();
  for (const auto& c : b) comps.push_back(c.composition.parts());
  emit(Json{{"schema", kSchemaVersion}, {"command", "basis"}, {"triad", triad_json(t)}, {"dimension", dimension(t)},
            {"labels", labels(b)}, {"compositions", comps}});
  return 0;
}

int run_pairing(const Options& o) {
  auto t = parse_triad(o);
  const Side side = parse_side(o.side);
  auto sys = LocalSystemSpec::standard(t.points);
  auto p = o.geometric ? geometric_pairing_matrix(t, side, sys) : delta_pairing(t, side, sys);
  emit_matrix(o,
              Json{{"schema", kSchemaVersion},
                   {"command", "pairing"},
                   {"triad", triad_json(t)},
                   {"side", to_string(side)},
                   {"kind", o.geometric ? "geometric" : "delta"},
                   {"rows", labels(p.rows)},
                   {"cols", labels(p.cols)}},
              p.entries);
  return 0;
}

LocalSystemSpec embed_system(const Options& o) {
  if (o.specialize.empty()) return LocalSystemSpec::standard(o.m);
  auto ring = CoefficientRing::from_name(o.coefficients);
  auto values = parse_assignments(o.specialize, ring);
  if (values.size() != 1 || !values.contains("u")) throw std::invalid_argument("--specialize for embed takes u=VALUE");
  auto ctx = make_context(ring, {"x"});
  return LocalSystemSpec::with_unit(ctx, GroupRingElement::constant(ctx, values.at("u")), o.m);
}

int run_embed(const Options& o) {
  auto t = parse_triad(o);
  auto sys = embed_system(o);
  auto e = embedding_matrix(t, parse_direction(o.direction), sys);
  if (o.format != "json") {
    emit_matrix(o, Json{}, e.matrix());
    return 0;
  }
  Json diag = Json::array();
  for (std::size_t i = 0; i < e.diagonal.size(); ++i) {
    diag.push_back(Json{{"source", e.source[i].label()}, {"target", e.target[i].label()}, {"entry", to_text(e.diagonal[i])}});
  }
  Json doc{{"schema", kSchemaVersion},     {"command", "embed"}, {"triad", triad_json(t)},
           {"direction", o.direction},      {"u", to_text(sys.homogeneity_unit())},
           {"diagonal", std::move(diag)}};
  if (sys.context()->coefficients().is_integral_domain()) {
    auto cert = certify_injective(e);
    Json vanish = Json::array();
    for (const auto& v : cert.vanishing) vanish.push_back(Json{{"composition", v.composition.parts()}, {"factor", v.factor}});
    doc["injective"] = cert.injective;
    doc["vanishing"] = std::move(vanish);
    if (cert.injective && t.points > 1) {
      auto w = reducibility_witness(t, sys);
      doc["reducibility_witness"] =
          w ? Json{{"outside", w->outside.label()}, {"entry", to_text(w->entry)}} : Json("none");
    } else {
      doc["reducibility_witness"] = "none";
    }
  }
  emit(doc);
  return 0;
}

int run_rep(const Options& o) {
  auto word = BraidWord::parse(o.n, o.word);
  auto rho = Representation::lawrence_bigelow(o.n, o.m);
  if (o.dual) rho = Representation::dual(rho);
  if (!o.specialize.empty()) {
    auto ring = CoefficientRing::from_name(o.field);
    rho = rho.specialize(parse_assignments(o.specialize, ring), make_context(ring, {}));
  }
  emit_matrix(o,
              Json{{"schema", kSchemaVersion},
                   {"command", "rep"},
                   {"n", o.n},
                   {"m", o.m},
                   {"word", word.str()},
                   {"convention", rho.convention()}},
              rho.evaluate(word));
  return 0;
}

int run_generic(const Options& o) {
  auto t = parse_triad(o);
  auto field = CoefficientRing::from_name(o.field);
  if (o.theta_x.empty()) throw std::invalid_argument("generic-check needs --theta-x");
  std::map<std::string, Scalar> theta{{"x", field.parse(o.theta_x)}};
  if (!o.theta_d.empty()) theta.emplace("d", field.parse(o.theta_d));
  auto verdict = genericity_check(t, LocalSystemSpec::standard(t.points), theta, field);
  Json doc{{"schema", kSchemaVersion}, {"command", "generic-check"}, {"triad", triad_json(t)},
           {"theta_x", field.format(theta.at("x"))}};
  if (theta.contains("d")) doc["theta_d"] = field.format(theta.at("d"));
  doc["verdict"] = to_string(verdict);
  if (o.format == "json") {
    emit(doc);
  } else {
    std::cout << to_string(verdict) << "\n";
  }
  return 0;
}

int run_homology(const Options& o) {
  std::ifstream in(o.complex_file);
  if (!in) throw std::invalid_argument("cannot open complex file '" + o.complex_file + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("complex file is not valid JSON: " + std::string(e.what()));
  }
  auto complex = complex_from_json(j);
  auto field = CoefficientRing::from_name(o.field);
  SpecializationPoint p(parse_assignments(o.at, field), field);
  auto ranks = homology_ranks_at(complex, p);
  if (o.format == "json") {
    emit(Json{{"schema", kSchemaVersion}, {"command", "homology"}, {"field", field.name()}, {"ranks", ranks}});
  } else {
    for (std::size_t k = 0; k < ranks.size(); ++k) std::cout << "H_" << k << ": " << ranks[k] << "\n";
  }
  return 0;
}

int run_helix(const Options& o) {
  auto t = parse_triad(o);
  auto y = parse_int_list(o.y, "--y");
  const auto rank = y.size();
  std::vector<std::string> vars;
  if (rank == 2) {
    vars = {"y", "z"};
  } else {
    for (std::size_t i = 0; i < rank; ++i) vars.push_back("g" + std::to_string(i + 1));
  }
  auto ctx = make_context(CoefficientRing::integers(), vars);
  std::vector<ExponentVector> encircled{ExponentVector(std::vector<std::int64_t>(y.begin(), y.end()))};
  if (!o.z.empty()) {
    auto z = parse_int_list(o.z, "--z");
    if (z.size() != rank) throw std::invalid_argument("--y and --z must have the same length");
    encircled.emplace_back(std::vector<std::int64_t>(z.begin(), z.end()));
  }
  auto ev = parse_int_list(o.e, "--e");
  auto e = Composition(std::vector<int>(ev.begin(), ev.end()));
  auto h = helix_around(t, e, encircled, ctx);
  Json coords = Json::array();
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    coords.push_back(Json{{"class", h.basis[i].label()}, {"value", completed_to_json(h.coordinates[i])}});
  }
  emit(Json{{"schema", kSchemaVersion},
            {"command", "helix"},
            {"variables", vars},
            {"coordinates", std::move(coords)},
            {"in_group_ring", h.is_in_group_ring()},
            {"zero", h.is_zero()}});
  return 0;
}

int run_verify(const Options& o) {
  auto results = run_invariant_suite(o.seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name;
    if (!r.passed) {
      std::cout << " -- " << r.detail;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " properties hold\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bases, pairings, embeddings and braid actions for twisted configuration-space homology"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;
  const std::vector<std::string> formats{"json", "latex", "text"};

  auto add_surface = [&](CLI::App* c) {
    c->add_option("--surface", o.surface, "g,n,k")->capture_default_str();
    c->add_option("--m", o.m, "number of configuration points")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, latex or text")->capture_default_str()->check(CLI::IsMember(formats));
  };

  auto* basis_cmd = app.add_subcommand("basis", "list a labelled basis");
  add_surface(basis_cmd);
  basis_cmd->add_option("--side", o.side, "in or out")->capture_default_str()->check(CLI::IsMember({"in", "out"}));
  basis_cmd->add_option("--flavour", o.flavour, "relative, lf or lf_image")->capture_default_str();
  add_format(basis_cmd);

  auto* pairing_cmd = app.add_subcommand("pairing", "intersection pairing matrix");
  add_surface(pairing_cmd);
  pairing_cmd->add_option("--side", o.side, "in or out")->capture_default_str()->check(CLI::IsMember({"in", "out"}));
  pairing_cmd->add_flag("--geometric", o.geometric, "lf-image pairing summed over intersection points");
  add_format(pairing_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "diagonal relative-to-lf embedding");
  add_surface(embed_cmd);
  embed_cmd->add_option("--direction", o.direction, "in or out")->capture_default_str()->check(CLI::IsMember({"in", "out"}));
  embed_cmd->add_option("--specialize", o.specialize, "u=VALUE");
  embed_cmd->add_option("--coefficients", o.coefficients, "ring for a specialized u")->capture_default_str();
  add_format(embed_cmd);

  auto* rep_cmd = app.add_subcommand("rep", "Burau (m = 1) or LKB (m = 2) matrix of a braid word");
  rep_cmd->add_option("--n", o.n, "strands")->capture_default_str();
  rep_cmd->add_option("--m", o.m, "1 or 2")->capture_default_str();
  rep_cmd->add_option("--word", o.word, "comma-separated letters, e.g. 1,2,-1");
  rep_cmd->add_flag("--dual", o.dual, "dual representation");
  rep_cmd->add_option("--specialize", o.specialize, "x=...,d=...");
  rep_cmd->add_option("--field", o.field, "target of --specialize (rationals, mod:P, complex)")->capture_default_str();
  add_format(rep_cmd);

  auto* generic_cmd = app.add_subcommand("generic-check", "genericity of a specialization");
  add_surface(generic_cmd);
  generic_cmd->add_option("--theta-x", o.theta_x, "value of x")->required();
  generic_cmd->add_option("--theta-d", o.theta_d, "value of d");
  generic_cmd->add_option("--field", o.field, "rationals, mod:P or complex")->capture_default_str();
  add_format(generic_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "homology ranks of a complex at a point");
  homology_cmd->add_option("--complex", o.complex_file, "complex JSON file")->required();
  homology_cmd->add_option("--at", o.at, "x=...,d=...")->required();
  homology_cmd->add_option("--field", o.field, "rationals, mod:P or complex")->capture_default_str();
  add_format(homology_cmd);

  auto* helix_cmd = app.add_subcommand("helix", "helix class of an embedded circle (m = 1)");
  add_surface(helix_cmd);
  helix_cmd->add_option("--e", o.e, "composition, e.g. 0,1")->required();
  helix_cmd->add_option("--y", o.y, "monodromy of the first encircled component")->required();
  helix_cmd->add_option("--z", o.z, "monodromy of the second encircled component");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  verify_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*basis_cmd) return run_basis(o);
    if (*pairing_cmd) return run_pairing(o);
    if (*embed_cmd) return run_embed(o);
    if (*rep_cmd) return run_rep(o);
    if (*generic_cmd) return run_generic(o);
    if (*homology_cmd) return run_homology(o);
    if (*helix_cmd) return run_helix(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
