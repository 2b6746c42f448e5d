#pragma once

/**
 * Finite chain complexes over group rings with rank-1 local coefficients:
 * the circle complex R --(1 - m)--> R, Shapiro comparisons for the circle and
 * its covers, genericity of specializations, and homology ranks after
 * specializing to a field.
 */

#include "lbrep/matrix.hpp"
#include "lbrep/surface.hpp"

#include <map>
#include <string>
#include <vector>

namespace lbrep {

enum class Grading { homological, cohomological };

/// C_0, ..., C_N free of the given ranks. Homological maps d_k: C_k -> C_{k-1}
/// (k = 1..N, shape ranks[k-1] x ranks[k]); cohomological maps
/// d^k: C^k -> C^{k+1} (k = 0..N-1, shape ranks[k+1] x ranks[k]).
class FiniteChainComplex {
 public:
  /// Throws std::invalid_argument on shape errors or when d o d != 0.
  FiniteChainComplex(Context context, std::vector<std::size_t> ranks, std::vector<RingMatrix> maps, Grading grading);

  const Context& context() const { return context_; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<RingMatrix>& maps() const { return maps_; }
  Grading grading() const { return grading_; }

  /// The map leaving degree k (nullptr when there is none).
  const RingMatrix* outgoing(std::size_t k) const;
  /// The map arriving in degree k (nullptr when there is none).
  const RingMatrix* incoming(std::size_t k) const;

 private:
  Context context_;
  std::vector<std::size_t> ranks_;
  std::vector<RingMatrix> maps_;
  Grading grading_;
};

/// Values for the variables of R in a target field (rationals, mod p or complex).
class SpecializationPoint {
 public:
  /// Throws std::invalid_argument for a zero value or a non-field target.
  SpecializationPoint(std::map<std::string, Scalar> values, CoefficientRing field);

  const std::map<std::string, Scalar>& values() const { return values_; }
  const CoefficientRing& field() const { return field_; }

 private:
  std::map<std::string, Scalar> values_;
  CoefficientRing field_;
};

/// Kernel and cokernel of multiplication by 1 - m on R.
struct CircleCohomology {
  GroupRingElement differential;
  bool h0_zero;
  bool h1_zero;
  std::string h0;  ///< "0" or "R"
  std::string h1;  ///< "0", "R" or a presentation "R/<...>"
};

/// Requires an integral-domain coefficient ring and a unit monodromy.
CircleCohomology circle_cohomology(const GroupRingElement& monodromy);

/// A finitely generated abelian group (free rank plus torsion) or, over a
/// field, a vector space (no torsion).
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  std::string str(const CoefficientRing& k) const;
  bool operator==(const HomologyGroup&) const = default;
};

struct ShapiroVerdict {
  bool match;
  std::vector<HomologyGroup> twisted;  ///< H_0, H_1 of the circle with k[G] coefficients
  std::vector<HomologyGroup> cover;    ///< H_0, H_1 of the covering space with k coefficients
  std::string description;
};

/// Compares H_*(S^1; k[G]) with H_*(cover; k). cover_order = 0 is the
/// universal cover (G = Z, cover = line); N >= 2 is the N-fold cover
/// (G = Z/N, cover = circle). Integers, rationals and mod p only.
ShapiroVerdict shapiro_circle_check(const CoefficientRing& k, unsigned cover_order = 0);

/// Homology of a complex of integer matrices with coefficients in k
/// (integers, rationals or mod p).
std::vector<HomologyGroup> integer_complex_homology(const std::vector<std::size_t>& ranks,
                                                    const std::vector<std::vector<std::vector<Integer>>>& boundaries,
                                                    const CoefficientRing& k);

enum class Genericity { generic, non_generic, unsupported };
std::string to_string(Genericity g);

/// theta(x) and (for m >= 2) theta(d) must avoid {0, 1}. Only the punctured
/// disc (g = 0, k = 0) is decided; other triads report unsupported.
Genericity genericity_check(const SurfaceTriad& triad, const LocalSystemSpec& system,
                            const std::map<std::string, Scalar>& theta, const CoefficientRing& field);

/// Ranks of H_k (or H^k) after specializing every boundary map at the point.
/// Exact elimination over rationals and mod p; singular-value threshold
/// tolerance * sigma_max over complex numbers.
std::vector<std::size_t> homology_ranks_at(const FiniteChainComplex& complex, const SpecializationPoint& theta);

}  // namespace lbrep
