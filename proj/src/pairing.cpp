#include "lbrep/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lbrep {

namespace {

int permutation_parity(const std::vector<int>& p) { return inversion_count(p) % 2 == 0 ? 1 : -1; }

std::vector<int> identity_permutation(int r) {
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

PairingMatrix delta_pairing(const SurfaceTriad& triad, Side side, const LocalSystemSpec& system) {
  auto rows = basis(triad, side, Flavour::locally_finite);
  auto cols = basis(triad, side, Flavour::relative);
  const auto n = rows.size();
  return PairingMatrix{side, Flavour::locally_finite, Flavour::relative, std::move(rows), std::move(cols),
                       RingMatrix::identity(system.context(), n)};
}

GroupRingElement local_intersection_sum(int r, const GroupRingElement& u) {
  if (r < 0) throw std::invalid_argument("local_intersection_sum: r must be >= 0");
  GroupRingElement sum(u.context());
  auto p = identity_permutation(r);
  do {
    sum += u.pow(inversion_count(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

std::vector<IntersectionPoint> intersection_points(const Composition& e, const Composition& f,
                                                   const GroupRingElement& u, SignConvention convention) {
  if (e.length() != f.length()) throw std::invalid_argument("intersection_points: compositions differ in length");
  std::vector<IntersectionPoint> points;
  // Arcs of X and Y meet only on matching arcs, so every arc must carry the
  // same number of points on both sides.
  if (e != f) return points;

  const std::size_t l = e.length();
  std::vector<std::vector<int>> current(l);
  for (std::size_t i = 0; i < l; ++i) current[i] = identity_permutation(e[i]);

  while (true) {
    int inversions = 0;
    int sign = 1;
    for (const auto& p : current) {
      inversions += inversion_count(p);
      if (convention == SignConvention::permutation_sign) sign *= permutation_parity(p);
    }
    points.push_back(IntersectionPoint{current, sign, u.pow(inversions)});

    // Odometer over the product of symmetric groups.
    std::size_t i = 0;
    for (; i < l; ++i) {
      if (std::next_permutation(current[i].begin(), current[i].end())) break;
    }
    if (i == l) break;
  }
  return points;
}

GroupRingElement geometric_pairing(const SurfaceTriad& triad, Side side, const BasisClass& left,
                                   const BasisClass& right, const LocalSystemSpec& system,
                                   SignConvention convention) {
  triad.validate();
  // U~ lives on the out side, G~ on the in side; both pair with the relative
  // classes of the side they live on.
  if (left.flavour != Flavour::lf_image || left.side != side) {
    throw std::invalid_argument("geometric_pairing: left class " + left.label() + " must be " +
                                (side == Side::out ? "U~" : "G~") + " for the " + to_string(side) + " pairing");
  }
  if (right.flavour != Flavour::relative || right.side != side) {
    throw std::invalid_argument("geometric_pairing: right class " + right.label() + " must be a relative class on the " +
                                to_string(side) + " side");
  }
  const auto l = static_cast<std::size_t>(triad.arc_count());
  if (left.composition.length() != l || right.composition.length() != l) {
    throw std::invalid_argument("geometric_pairing: compositions must have length l = " + std::to_string(l));
  }
  const auto& u = system.homogeneity_unit();
  GroupRingElement total(system.context());
  for (const auto& x : intersection_points(left.composition, right.composition, u, convention)) {
    total += x.sign == 1 ? x.monodromy : -x.monodromy;
  }
  return total;
}

PairingMatrix geometric_pairing_matrix(const SurfaceTriad& triad, Side side, const LocalSystemSpec& system,
                                       SignConvention convention) {
  auto rows = basis(triad, side, Flavour::lf_image);
  auto cols = basis(triad, side, Flavour::relative);
  RingMatrix m(system.context(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m(i, j) = geometric_pairing(triad, side, rows[i], cols[j], system, convention);
    }
  }
  return PairingMatrix{side, Flavour::lf_image, Flavour::relative, std::move(rows), std::move(cols), std::move(m)};
}

GroupRingElement pair(const RingMatrix& pairing, const std::vector<GroupRingElement>& v,
                      const std::vector<GroupRingElement>& w) {
  if (v.size() != pairing.rows() || w.size() != pairing.cols()) {
    throw std::invalid_argument("pair: vector lengths do not match the pairing matrix");
  }
  GroupRingElement total(pairing.context());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const auto left = v[i].involution();
    for (std::size_t j = 0; j < w.size(); ++j) total += left * pairing(i, j) * w[j];
  }
  return total;
}

}  // namespace lbrep
