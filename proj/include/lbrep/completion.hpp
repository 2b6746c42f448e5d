#pragma once

/**
 * The completed group ring k[[G]] = k^G, restricted to functions whose support
 * is a finite set plus finitely many periodic lattice rays. This class contains
 * k[G] and the helix classes, and equality in it is decidable.
 */

#include "lbrep/ring.hpp"
#include "lbrep/surface.hpp"

#include <vector>

namespace lbrep {

enum class RayDirection {
  bi,  ///< base + i*step for all integers i
  fwd  ///< base + i*step for i >= 0
};

/// Coefficient pattern[i mod pattern.size()] at base + i*step.
struct Ray {
  ExponentVector base;
  ExponentVector step;
  std::vector<Scalar> pattern;
  RayDirection direction = RayDirection::bi;
};

class CompletedElement {
 public:
  explicit CompletedElement(Context context);

  /// Throws std::invalid_argument for a zero step, an empty pattern or a rank mismatch.
  static CompletedElement ray(Context context, ExponentVector base, ExponentVector step, std::vector<Scalar> pattern,
                              RayDirection direction);

  const Context& context() const { return context_; }
  const GroupRingElement& finite() const { return finite_; }
  const std::vector<Ray>& rays() const { return rays_; }

  /// Sum of the finite part and every ray passing through g.
  Scalar coefficient_at(const ExponentVector& g) const;

  CompletedElement operator+(const CompletedElement& other) const;
  CompletedElement operator-(const CompletedElement& other) const;
  CompletedElement operator-() const;
  CompletedElement scaled(const Scalar& c) const;
  CompletedElement shifted(const ExponentVector& v) const;

  /// Canonical form: rays grouped by line, one bi-ray (the tail at -infinity)
  /// and one forward ray (the difference of the tails) per line, minimal
  /// periods, primitive lex-positive steps, and the remainder in the finite part.
  CompletedElement normalized() const;

  /// True iff the support is finite.
  bool is_in_group_ring() const;
  /// The element of k[G] when the support is finite.
  std::optional<GroupRingElement> to_group_ring() const;

  bool is_zero() const;
  bool operator==(const CompletedElement& other) const { return (*this - other).is_zero(); }

 private:
  friend CompletedElement include_group_ring(const GroupRingElement& a);

  CompletedElement(Context context, GroupRingElement finite, std::vector<Ray> rays)
      : context_(std::move(context)), finite_(std::move(finite)), rays_(std::move(rays)) {}

  Context context_;
  GroupRingElement finite_;
  std::vector<Ray> rays_;
};

CompletedElement include_group_ring(const GroupRingElement& a);
/// (r.c)(g) = sum_h r_h c(g - h).
CompletedElement module_action(const GroupRingElement& r, const CompletedElement& c);
bool is_in_group_ring(const CompletedElement& c);

/// Coordinates in k[[G]] over a labelled basis.
struct CompletedVector {
  std::vector<BasisClass> basis;
  std::vector<CompletedElement> coordinates;

  bool is_zero() const;
  bool is_in_group_ring() const;
};

/// V_e . sum_{i in Z} (1 - y)(yz)^i on the in-side lf basis of the triad.
/// Throws std::invalid_argument when y, z or y + z is the zero vector.
CompletedVector helix_class(const SurfaceTriad& triad, const Composition& e, const ExponentVector& y,
                            const ExponentVector& z, const Context& context);

/// Helix of an embedded circle enclosing the boundary components with the given
/// monodromies (m = 1). One component: the circle retracts onto a non-compact
/// end and the class is zero. Two components y, z: helix_class. Other counts
/// are rejected.
CompletedVector helix_around(const SurfaceTriad& triad, const Composition& e,
                             const std::vector<ExponentVector>& encircled, const Context& context);

}  // namespace lbrep
