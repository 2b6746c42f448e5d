#pragma once

/**
 * Surface triads and their labelled homology bases.
 *
 * A triad is a genus-g surface with n inner boundary circles and an outer
 * boundary circle carrying k disjoint intervals, together with the number m
 * of configuration points. Its bases are indexed by compositions of m into
 * l = n - 1 + k + 2g parts, one part per arc of the standard arc system.
 */

#include "lbrep/combinatorics.hpp"
#include "lbrep/ring.hpp"

#include <string>
#include <vector>

namespace lbrep {

struct SurfaceTriad {
  int genus = 0;
  int inner_circles = 1;
  int outer_intervals = 0;
  int points = 1;

  /// Throws std::invalid_argument naming the violated condition.
  void validate() const;
  /// l = n - 1 + k + 2g.
  int arc_count() const { return inner_circles - 1 + outer_intervals + 2 * genus; }
  /// Genus 0, no outer intervals: the n-punctured disc carrying braid actions.
  bool is_punctured_disc() const { return genus == 0 && outer_intervals == 0; }

  std::string str() const;
  bool operator==(const SurfaceTriad&) const = default;
};

/// Rank of each of the four free modules: C(m + l - 1, m).
std::uint64_t dimension(const SurfaceTriad& triad);

enum class Side { in, out };
enum class Flavour { relative, locally_finite, lf_image };

std::string to_string(Side side);
std::string to_string(Flavour flavour);
Side parse_side(std::string_view text);

/// A labelled basis element. (in, relative) = U_e, (in, locally_finite) = D_e,
/// (out, locally_finite) = V_e, (out, relative) = G_e; lf_image gives the
/// images U~_e (out side) and G~_e (in side) of the relative classes.
struct BasisClass {
  Side side;
  Flavour flavour;
  Composition composition;

  /// One of U, D, V, G, Ut, Gt.
  std::string family() const;
  /// e.g. "D[2,0,1]@in".
  std::string label() const;
  bool operator==(const BasisClass&) const = default;
};

/// One class per composition of E_{l,m}, in enumeration order.
std::vector<BasisClass> basis(const SurfaceTriad& triad, Side side, Flavour flavour);

/// The rank-1 local system data the library needs: the ring, the monodromy
/// x around a puncture, the swap monodromy (absent when m = 1) and the
/// homogeneity unit u.
class LocalSystemSpec {
 public:
  /// Standard system: Z[x^{+-1}] with u = 1 for m = 1; Z[x^{+-1}, d^{+-1}]
  /// with u = d for m >= 2.
  static LocalSystemSpec standard(int points);
  /// Custom homogeneity unit over an arbitrary context. Throws if u is not a
  /// unit, or if m = 1 and u != 1.
  static LocalSystemSpec with_unit(Context context, GroupRingElement u, int points);

  const Context& context() const { return context_; }
  const GroupRingElement& homogeneity_unit() const { return u_; }
  int points() const { return points_; }
  std::size_t lattice_rank() const { return context_->rank(); }

 private:
  LocalSystemSpec(Context context, GroupRingElement u, int points)
      : context_(std::move(context)), u_(std::move(u)), points_(points) {}

  Context context_;
  GroupRingElement u_;
  int points_;
};

/// Z[x^{+-1}] (m = 1) or Z[x^{+-1}, d^{+-1}] (m >= 2).
Context standard_context(int points);

}  // namespace lbrep
