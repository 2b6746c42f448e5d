#include "lbrep/surface.hpp"

#include <stdexcept>

namespace lbrep {

void SurfaceTriad::validate() const {
  if (genus < 0) throw std::invalid_argument("triad: genus must be >= 0");
  if (inner_circles < 1) throw std::invalid_argument("triad: needs at least one inner boundary circle (n >= 1)");
  if (outer_intervals < 0) throw std::invalid_argument("triad: outer interval count k must be >= 0");
  if (points < 1) throw std::invalid_argument("triad: needs at least one configuration point (m >= 1)");
  if (arc_count() < 1) throw std::invalid_argument("triad: arc count l = n-1+k+2g must be >= 1");
}

std::string SurfaceTriad::str() const {
  return "(g=" + std::to_string(genus) + ", n=" + std::to_string(inner_circles) +
         ", k=" + std::to_string(outer_intervals) + ", m=" + std::to_string(points) + ")";
}

std::uint64_t dimension(const SurfaceTriad& triad) {
  triad.validate();
  return composition_count(triad.arc_count(), triad.points);
}

std::string to_string(Side side) { return side == Side::in ? "in" : "out"; }

std::string to_string(Flavour flavour) {
  switch (flavour) {
    case Flavour::relative: return "relative";
    case Flavour::locally_finite: return "locally_finite";
    case Flavour::lf_image: return "lf_image";
  }
  return {};
}

Side parse_side(std::string_view text) {
  if (text == "in") return Side::in;
  if (text == "out") return Side::out;
  throw std::invalid_argument("side must be 'in' or 'out', got '" + std::string(text) + "'");
}

std::string BasisClass::family() const {
  switch (flavour) {
    case Flavour::relative: return side == Side::in ? "U" : "G";
    case Flavour::locally_finite: return side == Side::in ? "D" : "V";
    case Flavour::lf_image: return side == Side::out ? "Ut" : "Gt";
  }
  return {};
}

std::string BasisClass::label() const { return family() + composition.str() + "@" + to_string(side); }

std::vector<BasisClass> basis(const SurfaceTriad& triad, Side side, Flavour flavour) {
  triad.validate();
  std::vector<BasisClass> out;
  for (auto& e : enumerate_compositions(triad.arc_count(), triad.points)) {
    out.push_back(BasisClass{side, flavour, std::move(e)});
  }
  return out;
}

Context standard_context(int points) {
  if (points < 1) throw std::invalid_argument("local system: m must be >= 1");
  if (points == 1) return make_context(CoefficientRing::integers(), {"x"});
  return make_context(CoefficientRing::integers(), {"x", "d"});
}

LocalSystemSpec LocalSystemSpec::standard(int points) {
  auto ctx = standard_context(points);
  auto u = points == 1 ? GroupRingElement::integer(ctx, 1) : GroupRingElement::variable(ctx, "d");
  return LocalSystemSpec(ctx, u, points);
}

LocalSystemSpec LocalSystemSpec::with_unit(Context context, GroupRingElement u, int points) {
  if (points < 1) throw std::invalid_argument("local system: m must be >= 1");
  if (!same_context(context, u.context())) throw std::invalid_argument("local system: u lives in another ring");
  if (!u.is_monomial()) throw std::invalid_argument("local system: homogeneity u = " + to_text(u) + " is not a unit");
  if (context->coefficients().is_exact() && !u.unit_inverse()) {
    throw std::invalid_argument("local system: homogeneity u = " + to_text(u) + " is not a unit");
  }
  if (points == 1 && !u.is_one()) {
    throw std::invalid_argument("local system: every system is 1-homogeneous when m = 1, got u = " + to_text(u));
  }
  return LocalSystemSpec(std::move(context), std::move(u), points);
}

}  // namespace lbrep
