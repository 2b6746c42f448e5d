#pragma once

/**
 * The diagonal maps from relative to locally-finite homology. In the standard
 * bases the class U_e maps to prod_i [e_i]_u! V_e on the out side, and G_f
 * maps to prod_i [f_i]_u! D_f on the in side.
 */

#include "lbrep/matrix.hpp"
#include "lbrep/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lbrep {

enum class Direction {
  in,  ///< relative in-side classes U_e -> locally-finite out-side classes V_e
  out  ///< relative out-side classes G_f -> locally-finite in-side classes D_f
};

std::string to_string(Direction direction);
Direction parse_direction(std::string_view text);

struct EmbeddingMatrix {
  Direction direction;
  SurfaceTriad triad;
  std::vector<BasisClass> source;
  std::vector<BasisClass> target;
  std::vector<GroupRingElement> diagonal;
  GroupRingElement unit;  ///< homogeneity unit u

  RingMatrix matrix() const { return RingMatrix::diagonal(diagonal); }
};

/// prod_i [e_i]_u! for one composition.
GroupRingElement factorial_weight(const Composition& e, const GroupRingElement& u);

EmbeddingMatrix embedding_matrix(const SurfaceTriad& triad, Direction direction, const LocalSystemSpec& system);

struct VanishingEntry {
  Composition composition;
  std::string factor;  ///< the vanishing quantum integer, e.g. "[2]_u"
};

struct InjectivityCertificate {
  bool injective = true;
  std::vector<VanishingEntry> vanishing;
};

/// Injective iff every diagonal entry is a non-zero-divisor. Throws
/// std::domain_error over approximate coefficients.
InjectivityCertificate certify_injective(const EmbeddingMatrix& e);

struct ReducibilityWitness {
  /// Scalars of the image generators, one per basis class (the diagonal).
  std::vector<GroupRingElement> image_generators;
  /// A target basis vector outside the image.
  BasisClass outside;
  GroupRingElement entry;
};

/// A proper submodule witness for the image of the in-direction embedding.
/// nullopt when m = 1 or when every diagonal entry is a unit. Throws
/// std::domain_error when the embedding is not injective.
std::optional<ReducibilityWitness> reducibility_witness(const SurfaceTriad& triad, const LocalSystemSpec& system);

}  // namespace lbrep
