#pragma once

/**
 * Intersection pairings between locally-finite and relative classes.
 *
 * The pairing is sesquilinear: <r.v, w> = alpha(r) <v, w> and
 * <v, r.w> = r <v, w>. On the standard bases it is the Kronecker delta; the
 * geometric engine recovers the diagonal of the lf-image pairing as a sum over
 * intersection points of the standard arc systems.
 */

#include "lbrep/matrix.hpp"
#include "lbrep/surface.hpp"

#include <vector>

namespace lbrep {

struct PairingMatrix {
  Side side;
  Flavour left_flavour;
  Flavour right_flavour;
  std::vector<BasisClass> rows;
  std::vector<BasisClass> cols;
  RingMatrix entries;
};

/// <D_f, U_e> (side in) or <V_f, G_e> (side out): the identity matrix.
PairingMatrix delta_pairing(const SurfaceTriad& triad, Side side, const LocalSystemSpec& system);

/// Sum over all bijections of an r-set of u^{inv}. Computed by enumeration.
GroupRingElement local_intersection_sum(int r, const GroupRingElement& u);

enum class SignConvention {
  positive,         ///< every local sign +1
  permutation_sign  ///< alternative: sign of the product of the matchings
};

/// One point of X ∩ Y in the arc model: a matching of the e_i points of the
/// two classes on every arc.
struct IntersectionPoint {
  std::vector<std::vector<int>> matchings;
  int sign = 1;
  GroupRingElement monodromy;
};

/// Every intersection point of the arc models of two compositions, with its
/// sign and loop monodromy u^{sum of inversions}. Empty unless e == f.
std::vector<IntersectionPoint> intersection_points(const Composition& e, const Composition& f,
                                                   const GroupRingElement& u,
                                                   SignConvention convention = SignConvention::positive);

/// <U~_e, G_f> (side out) or <G~_e, U_f> (side in), summed over intersection
/// points. Throws std::invalid_argument for classes of the wrong kind or length.
GroupRingElement geometric_pairing(const SurfaceTriad& triad, Side side, const BasisClass& left,
                                   const BasisClass& right, const LocalSystemSpec& system,
                                   SignConvention convention = SignConvention::positive);

/// The full lf-image against relative matrix on one side.
PairingMatrix geometric_pairing_matrix(const SurfaceTriad& triad, Side side, const LocalSystemSpec& system,
                                       SignConvention convention = SignConvention::positive);

/// sum_ij alpha(v_i) P_ij w_j.
GroupRingElement pair(const RingMatrix& pairing, const std::vector<GroupRingElement>& v,
                      const std::vector<GroupRingElement>& w);

}  // namespace lbrep
