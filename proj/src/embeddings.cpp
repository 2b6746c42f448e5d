#include "lbrep/embeddings.hpp"

#include <stdexcept>

namespace lbrep {

std::string to_string(Direction direction) { return direction == Direction::in ? "in" : "out"; }

Direction parse_direction(std::string_view text) {
  if (text == "in") return Direction::in;
  if (text == "out") return Direction::out;
  throw std::invalid_argument("direction must be 'in' or 'out', got '" + std::string(text) + "'");
}

GroupRingElement factorial_weight(const Composition& e, const GroupRingElement& u) {
  auto w = GroupRingElement::integer(u.context(), 1);
  for (int part : e.parts()) w *= quantum_factorial(part, u);
  return w;
}

EmbeddingMatrix embedding_matrix(const SurfaceTriad& triad, Direction direction, const LocalSystemSpec& system) {
  if (triad.points != system.points()) {
    throw std::invalid_argument("embedding_matrix: triad has m = " + std::to_string(triad.points) +
                                " but the local system has m = " + std::to_string(system.points()));
  }
  const Side from = direction == Direction::in ? Side::in : Side::out;
  const Side to = direction == Direction::in ? Side::out : Side::in;
  EmbeddingMatrix out{direction, triad, basis(triad, from, Flavour::relative), basis(triad, to, Flavour::locally_finite),
                      {}, system.homogeneity_unit()};
  out.diagonal.reserve(out.source.size());
  for (const auto& b : out.source) out.diagonal.push_back(factorial_weight(b.composition, system.homogeneity_unit()));
  return out;
}

InjectivityCertificate certify_injective(const EmbeddingMatrix& e) {
  InjectivityCertificate cert;
  if (e.diagonal.empty()) return cert;
  const auto& ctx = e.diagonal.front().context();
  if (!ctx->coefficients().is_integral_domain()) {
    throw std::domain_error("certify_injective: non-zero-divisors are ill-posed over " + ctx->coefficients().name());
  }
  for (std::size_t i = 0; i < e.diagonal.size(); ++i) {
    if (is_non_zero_divisor(e.diagonal[i])) continue;
    cert.injective = false;
    // R is a domain, so some quantum integer factor is itself zero.
    const auto& comp = e.source[i].composition;
    std::string factor;
    for (int r = 1; factor.empty(); ++r) {
      if (quantum_integer(r, e.unit).is_zero()) factor = "[" + std::to_string(r) + "]_u";
    }
    cert.vanishing.push_back(VanishingEntry{comp, factor});
  }
  return cert;
}

std::optional<ReducibilityWitness> reducibility_witness(const SurfaceTriad& triad, const LocalSystemSpec& system) {
  if (triad.points <= 1) return std::nullopt;
  auto e = embedding_matrix(triad, Direction::in, system);
  if (!certify_injective(e).injective) {
    throw std::domain_error("reducibility_witness: the embedding is not injective for u = " +
                            to_text(system.homogeneity_unit()));
  }
  for (std::size_t i = 0; i < e.diagonal.size(); ++i) {
    if (!is_unit(e.diagonal[i])) return ReducibilityWitness{e.diagonal, e.target[i], e.diagonal[i]};
  }
  return std::nullopt;
}

}  // namespace lbrep
