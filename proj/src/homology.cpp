#include "lbrep/homology.hpp"

#include <stdexcept>

namespace lbrep {

FiniteChainComplex::FiniteChainComplex(Context context, std::vector<std::size_t> ranks, std::vector<RingMatrix> maps,
                                       Grading grading)
    : context_(std::move(context)), ranks_(std::move(ranks)), maps_(std::move(maps)), grading_(grading) {
  if (ranks_.empty()) throw std::invalid_argument("chain complex: needs at least one degree");
  if (maps_.size() + 1 != ranks_.size()) {
    throw std::invalid_argument("chain complex: " + std::to_string(ranks_.size()) + " degrees need " +
                                std::to_string(ranks_.size() - 1) + " maps, got " + std::to_string(maps_.size()));
  }
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& m = maps_[k];
    if (!same_context(m.context(), context_)) throw std::invalid_argument("chain complex: map over another ring");
    const std::size_t rows = grading_ == Grading::homological ? ranks_[k] : ranks_[k + 1];
    const std::size_t cols = grading_ == Grading::homological ? ranks_[k + 1] : ranks_[k];
    if (m.rows() != rows || m.cols() != cols) {
      throw std::invalid_argument("chain complex: map " + std::to_string(k) + " has shape " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
  }
  for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
    const auto composite = grading_ == Grading::homological ? maps_[k] * maps_[k + 1] : maps_[k + 1] * maps_[k];
    if (!composite.is_zero()) {
      throw std::invalid_argument("chain complex: d o d != 0 at maps " + std::to_string(k) + "," + std::to_string(k + 1));
    }
  }
}

const RingMatrix* FiniteChainComplex::outgoing(std::size_t k) const {
  if (grading_ == Grading::homological) return k >= 1 && k - 1 < maps_.size() ? &maps_[k - 1] : nullptr;
  return k < maps_.size() ? &maps_[k] : nullptr;
}

const RingMatrix* FiniteChainComplex::incoming(std::size_t k) const {
  if (grading_ == Grading::homological) return k < maps_.size() ? &maps_[k] : nullptr;
  return k >= 1 && k - 1 < maps_.size() ? &maps_[k - 1] : nullptr;
}

SpecializationPoint::SpecializationPoint(std::map<std::string, Scalar> values, CoefficientRing field)
    : values_(std::move(values)), field_(std::move(field)) {
  if (!field_.is_field() && field_.kind() != CoefficientKind::complex_approx) {
    throw std::invalid_argument("specialization point: target must be a field, got " + field_.name());
  }
  for (const auto& [name, v] : values_) {
    if (field_.is_zero(v)) throw std::invalid_argument("specialization point: " + name + " must be a unit, got 0");
  }
}

CircleCohomology circle_cohomology(const GroupRingElement& monodromy) {
  if (!is_unit(monodromy)) throw std::invalid_argument("circle_cohomology: monodromy " + to_text(monodromy) + " is not a unit");
  const auto one = GroupRingElement::integer(monodromy.context(), 1);
  auto f = one - monodromy;
  CircleCohomology c{f, !f.is_zero(), false, "", ""};
  c.h0 = c.h0_zero ? "0" : "R";
  if (f.is_zero()) {
    c.h1 = "R";
  } else if (is_unit(f)) {
    c.h1_zero = true;
    c.h1 = "0";
  } else {
    c.h1 = "R/<" + to_text(f) + ">";
  }
  return c;
}

std::string HomologyGroup::str(const CoefficientRing& k) const {
  const std::string base = k.kind() == CoefficientKind::integers    ? "Z"
                           : k.kind() == CoefficientKind::rationals ? "Q"
                           : k.kind() == CoefficientKind::modular   ? "F_" + std::to_string(k.modulus())
                                                                    : "C";
  std::string s;
  if (free_rank > 0) s = base + (free_rank > 1 ? "^" + std::to_string(free_rank) : "");
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return s.empty() ? "0" : s;
}

namespace {

std::size_t integer_rank(const std::vector<std::vector<Integer>>& m, const CoefficientRing& k,
                         std::vector<Integer>* torsion) {
  if (m.empty() || m[0].empty()) return 0;
  if (k.kind() == CoefficientKind::integers) {
    auto factors = smith_invariant_factors(m);
    if (torsion) {
      for (const auto& f : factors) {
        if (f > 1) torsion->push_back(f);
      }
    }
    return factors.size();
  }
  ScalarMatrix s(m.size(), std::vector<Scalar>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) s[i][j] = k.from_rational(Rational(m[i][j]));
  }
  return field_rank(s, k);
}

// Columns (1 - x) x^j of k[Z/N], read in the basis x^0, ..., x^{N-1}.
std::vector<std::vector<Integer>> cyclic_group_ring_differential(unsigned order) {
  auto ctx = make_context(CoefficientRing::integers(), {"x"});
  const auto x = GroupRingElement::variable(ctx, 0);
  const auto f = GroupRingElement::integer(ctx, 1) - x;
  std::vector<std::vector<Integer>> m(order, std::vector<Integer>(order, 0));
  for (unsigned j = 0; j < order; ++j) {
    const auto image = f * x.pow(j);
    for (const auto& [e, c] : image.terms()) {
      const auto row = static_cast<std::size_t>(((e[0] % order) + order) % order);
      m[row][j] += std::get<Rational>(c).convert_to<Integer>();
    }
  }
  return m;
}

// Cellular boundary of a path or cycle graph: edge j runs from vertex j to
// vertex j + 1 (mod the vertex count when closed).
std::vector<std::vector<Integer>> graph_boundary(std::size_t vertices, std::size_t edges, bool closed) {
  std::vector<std::vector<Integer>> m(vertices, std::vector<Integer>(edges, 0));
  for (std::size_t j = 0; j < edges; ++j) {
    m[j][j] -= 1;
    m[closed ? (j + 1) % vertices : j + 1][j] += 1;
  }
  return m;
}

}  // namespace

std::vector<HomologyGroup> integer_complex_homology(const std::vector<std::size_t>& ranks,
                                                    const std::vector<std::vector<std::vector<Integer>>>& boundaries,
                                                    const CoefficientRing& k) {
  if (!k.is_exact()) throw std::invalid_argument("integer_complex_homology: exact coefficients only");
  if (boundaries.size() + 1 != ranks.size()) throw std::invalid_argument("integer_complex_homology: map count mismatch");
  std::vector<std::size_t> map_rank(boundaries.size());
  std::vector<std::vector<Integer>> map_torsion(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) map_rank[i] = integer_rank(boundaries[i], k, &map_torsion[i]);
  std::vector<HomologyGroup> out(ranks.size());
  for (std::size_t d = 0; d < ranks.size(); ++d) {
    std::size_t r = ranks[d];
    if (d >= 1) r -= map_rank[d - 1];
    if (d < boundaries.size()) {
      r -= map_rank[d];
      out[d].torsion = map_torsion[d];
    }
    out[d].free_rank = r;
  }
  return out;
}

ShapiroVerdict shapiro_circle_check(const CoefficientRing& k, unsigned cover_order) {
  if (!k.is_exact()) throw std::invalid_argument("shapiro_circle_check: exact coefficient rings only");
  if (cover_order == 1) throw std::invalid_argument("shapiro_circle_check: cover order must be 0 (universal) or >= 2");
  ShapiroVerdict v{false, {}, {}, ""};
  if (cover_order == 0) {
    // Twisted side: k[x^{+-1}] --(1 - x)--> k[x^{+-1}].
    auto ctx = make_context(k, {"x"});
    const auto f = GroupRingElement::integer(ctx, 1) - GroupRingElement::variable(ctx, 0);
    HomologyGroup h0;
    HomologyGroup h1;
    // Multiplication by a non-zero element of a domain is injective.
    h1.free_rank = is_non_zero_divisor(f) ? 0 : 1;
    // k[x^{+-1}]/(f) is free over k on x^lo .. x^{hi-1} when the extreme
    // coefficients of f are units.
    const auto lo = f.terms().begin();
    const auto hi = std::prev(f.terms().end());
    if (!k.is_unit(lo->second) || !k.is_unit(hi->second)) {
      throw std::logic_error("shapiro_circle_check: quotient is not finitely generated over k");
    }
    h0.free_rank = static_cast<std::size_t>(hi->first[0] - lo->first[0]);
    v.twisted = {h0, h1};
    // Cover side: the line, through a finite subdivided interval.
    constexpr std::size_t edges = 6;
    v.cover = integer_complex_homology({edges + 1, edges}, {graph_boundary(edges + 1, edges, false)}, k);
  } else {
    v.twisted = integer_complex_homology({cover_order, cover_order}, {cyclic_group_ring_differential(cover_order)}, k);
    v.cover = integer_complex_homology({cover_order, cover_order}, {graph_boundary(cover_order, cover_order, true)}, k);
  }
  v.match = v.twisted == v.cover;
  const std::string group = cover_order == 0 ? "Z" : "Z/" + std::to_string(cover_order);
  const std::string space = cover_order == 0 ? "line" : std::to_string(cover_order) + "-fold cover";
  v.description = "H_*(S^1; " + k.name() + "[" + group + "]) = (" + v.twisted[0].str(k) + ", " + v.twisted[1].str(k) +
                  "); H_*(" + space + "; " + k.name() + ") = (" + v.cover[0].str(k) + ", " + v.cover[1].str(k) + ")";
  return v;
}

std::string to_string(Genericity g) {
  switch (g) {
    case Genericity::generic: return "generic";
    case Genericity::non_generic: return "non_generic";
    case Genericity::unsupported: return "unsupported";
  }
  return {};
}

Genericity genericity_check(const SurfaceTriad& triad, const LocalSystemSpec& system,
                            const std::map<std::string, Scalar>& theta, const CoefficientRing& field) {
  triad.validate();
  if (!triad.is_punctured_disc()) return Genericity::unsupported;
  std::vector<std::string> needed{"x"};
  if (system.points() >= 2) needed.push_back("d");
  for (const auto& name : needed) {
    auto it = theta.find(name);
    if (it == theta.end()) throw std::invalid_argument("genericity_check: no value for theta(" + name + ")");
    if (field.is_zero(it->second) || field.equal(it->second, field.one())) return Genericity::non_generic;
  }
  return Genericity::generic;
}

std::vector<std::size_t> homology_ranks_at(const FiniteChainComplex& complex, const SpecializationPoint& theta) {
  const auto& field = theta.field();
  auto rank_of = [&](const RingMatrix* m) -> std::size_t {
    if (!m || m->rows() == 0 || m->cols() == 0) return 0;
    auto s = evaluate(*m, theta.values(), field);
    return field.is_field() ? field_rank(s, field) : numerical_rank(s, field.tolerance());
  };
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < complex.ranks().size(); ++k) {
    const auto a = rank_of(complex.outgoing(k));
    const auto b = rank_of(complex.incoming(k));
    if (a + b > complex.ranks()[k]) throw std::logic_error("homology_ranks_at: d o d != 0 after specialization");
    out.push_back(complex.ranks()[k] - a - b);
  }
  return out;
}

}  // namespace lbrep
