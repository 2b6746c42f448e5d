#include "lbrep/serialize.hpp"

#include <stdexcept>

namespace lbrep {

Json element_to_json(const GroupRingElement& a) {
  Json terms = Json::array();
  const auto& k = a.coefficients();
  for (const auto& [e, c] : a.terms()) {
    terms.push_back(Json{{"exponents", e.entries()}, {"coeff", k.format(c)}});
  }
  return terms;
}

GroupRingElement element_from_json(const Context& context, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element JSON must be a list of terms");
  std::vector<std::pair<ExponentVector, Scalar>> terms;
  for (const auto& t : j) {
    auto exps = t.at("exponents").get<std::vector<std::int64_t>>();
    if (exps.size() != context->rank()) {
      throw std::invalid_argument("element JSON: exponent vector of length " + std::to_string(exps.size()) +
                                  " in a rank " + std::to_string(context->rank()) + " ring");
    }
    terms.emplace_back(ExponentVector(std::move(exps)), context->coefficients().parse(t.at("coeff").get<std::string>()));
  }
  return GroupRingElement::from_terms(context, terms);
}

Json matrix_to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_text(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RingMatrix matrix_from_json(const Context& context, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RingMatrix m(context, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix JSON: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_element(context, j[i][c].get<std::string>());
  }
  return m;
}

Json completed_to_json(const CompletedElement& c) {
  const auto& k = c.context()->coefficients();
  Json rays = Json::array();
  for (const auto& r : c.rays()) {
    Json pattern = Json::array();
    for (const auto& p : r.pattern) pattern.push_back(k.format(p));
    rays.push_back(Json{{"base", r.base.entries()},
                        {"step", r.step.entries()},
                        {"pattern", std::move(pattern)},
                        {"direction", r.direction == RayDirection::bi ? "bi" : "fwd"}});
  }
  return Json{{"finite", element_to_json(c.finite())}, {"rays", std::move(rays)}};
}

CompletedElement completed_from_json(const Context& context, const Json& j) {
  CompletedElement out = include_group_ring(element_from_json(context, j.at("finite")));
  for (const auto& r : j.at("rays")) {
    std::vector<Scalar> pattern;
    for (const auto& p : r.at("pattern")) pattern.push_back(context->coefficients().parse(p.get<std::string>()));
    const auto dir = r.at("direction").get<std::string>();
    if (dir != "bi" && dir != "fwd") throw std::invalid_argument("ray direction must be 'bi' or 'fwd'");
    out = out + CompletedElement::ray(context, ExponentVector(r.at("base").get<std::vector<std::int64_t>>()),
                                      ExponentVector(r.at("step").get<std::vector<std::int64_t>>()), std::move(pattern),
                                      dir == "bi" ? RayDirection::bi : RayDirection::fwd);
  }
  return out;
}

FiniteChainComplex complex_from_json(const Json& j) {
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw std::invalid_argument("complex file: unsupported schema " + j.at("schema").dump());
  }
  auto ring = CoefficientRing::from_name(j.value("coefficients", std::string("integers")));
  auto vars = j.at("variables").get<std::vector<std::string>>();
  auto ctx = make_context(ring, vars);
  const auto grading_name = j.value("grading", std::string("homological"));
  if (grading_name != "homological" && grading_name != "cohomological") {
    throw std::invalid_argument("complex file: grading must be 'homological' or 'cohomological'");
  }
  const auto grading = grading_name == "homological" ? Grading::homological : Grading::cohomological;
  auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
  std::vector<RingMatrix> maps;
  const auto& jm = j.at("maps");
  for (std::size_t k = 0; k < jm.size(); ++k) {
    // Empty lists cannot carry a shape, so zero-size maps are rebuilt from the ranks.
    if (k + 1 >= ranks.size()) throw std::invalid_argument("complex file: more maps than degrees allow");
    const std::size_t rows = grading == Grading::homological ? ranks[k] : ranks[k + 1];
    const std::size_t cols = grading == Grading::homological ? ranks[k + 1] : ranks[k];
    if (rows == 0 || cols == 0) {
      maps.emplace_back(ctx, rows, cols);
    } else {
      maps.push_back(matrix_from_json(ctx, jm[k]));
    }
  }
  return FiniteChainComplex(ctx, std::move(ranks), std::move(maps), grading);
}

Json complex_to_json(const FiniteChainComplex& c) {
  Json maps = Json::array();
  for (const auto& m : c.maps()) maps.push_back(matrix_to_json(m));
  return Json{{"schema", kSchemaVersion},
              {"coefficients", c.context()->coefficients().name()},
              {"variables", c.context()->variables()},
              {"grading", c.grading() == Grading::homological ? "homological" : "cohomological"},
              {"ranks", c.ranks()},
              {"maps", std::move(maps)}};
}

std::string element_to_latex(const GroupRingElement& a) {
  if (a.is_zero()) return "0";
  const auto& k = a.coefficients();
  const auto& vars = a.context()->variables();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    std::string coeff = k.format(c);
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += vars[i];
      if (e[i] != 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    if (auto slash = coeff.find('/'); slash != std::string::npos) {
      coeff = "\\frac{" + coeff.substr(0, slash) + "}{" + coeff.substr(slash + 1) + "}";
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + " " + mono;
    }
  }
  return out;
}

std::string matrix_to_latex(const RingMatrix& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " & ";
      out += element_to_latex(m(i, j));
    }
    out += i + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return out + "\\end{pmatrix}";
}

std::map<std::string, Scalar> parse_assignments(std::string_view text, const CoefficientRing& ring) {
  std::map<std::string, Scalar> out;
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty() || !items.empty()) items.push_back(current);
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("assignment '" + item + "' is not of the form name=value");
    auto name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) throw std::invalid_argument("assignment '" + item + "' has no variable name");
    if (out.contains(name)) throw std::invalid_argument("variable '" + name + "' assigned twice");
    out.emplace(name, ring.parse(item.substr(eq + 1)));
  }
  return out;
}

}  // namespace lbrep
