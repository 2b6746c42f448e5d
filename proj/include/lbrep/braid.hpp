#pragma once

/**
 * Braid group actions on the punctured-disc triad (g = 0, k = 0): reduced
 * Burau (m = 1, over Z[x^{+-1}]) and Lawrence-Krammer-Bigelow (m = 2, over
 * Z[x^{+-1}, d^{+-1}]).
 *
 * Convention: x is the puncture monodromy (classical q) and d the swap
 * monodromy (classical t). Column j of a matrix is the image of the j-th
 * basis class; basis classes are compositions of m over the n - 1 arcs in
 * colex order. The generator sigma_i acts locally on arcs i - 1, i, i + 1.
 */

#include "lbrep/matrix.hpp"
#include "lbrep/surface.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lbrep {

struct BraidWord {
  int strands = 2;
  /// +i for sigma_i, -i for its inverse.
  std::vector<int> letters;

  /// Throws std::invalid_argument for letters outside {+-1, ..., +-(n-1)}.
  void validate() const;
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& other) const;
  /// Comma-separated letters, e.g. "1,2,-1"; an empty string is the identity.
  static BraidWord parse(int strands, std::string_view text);
  std::string str() const;
};

/// Matrix of sigma_i on the n-punctured disc with m points. Throws
/// std::invalid_argument unless m is 1 or 2.
RingMatrix generator_matrix(int n, int i, int m);

class Representation {
 public:
  /// Burau (m = 1) or LKB (m = 2) on n strands.
  static Representation lawrence_bigelow(int n, int m);
  /// rho'(sigma_i) = alpha(rho(sigma_i^{-1}))^T, the action dual to rho under
  /// the identity pairing.
  static Representation dual(const Representation& rho);

  int strands() const { return strands_; }
  int points() const { return points_; }
  const Context& context() const { return context_; }
  const std::string& convention() const { return convention_; }
  std::size_t dimension() const { return generators_.front().rows(); }

  /// Matrix of a single letter (+i or -i).
  const RingMatrix& letter(int letter) const;
  RingMatrix evaluate(const BraidWord& word) const;

  /// Entrywise ring homomorphism into another context (e.g. complex numbers).
  Representation specialize(const std::map<std::string, Scalar>& values, const Context& target) const;

 private:
  Representation(int strands, int points, Context context, std::string convention, std::vector<RingMatrix> generators,
                 std::vector<RingMatrix> inverses)
      : strands_(strands), points_(points), context_(std::move(context)), convention_(std::move(convention)),
        generators_(std::move(generators)), inverses_(std::move(inverses)) {}

  int strands_;
  int points_;
  Context context_;
  std::string convention_;
  std::vector<RingMatrix> generators_;
  std::vector<RingMatrix> inverses_;
};

RingMatrix evaluate_word(const BraidWord& word, int m);

struct IntegralityFailure {
  int generator;
  std::size_t row;
  std::size_t col;
  std::string entry;  ///< the offending fraction, "num / den"
};

struct IntegralityCertificate {
  bool integral = true;
  std::vector<IntegralityFailure> failures;
};

/// Whether D^{-1} M D has entries in R for every matrix M in `matrices`
/// (indexed as generators 1, 2, ...), D = diag(diagonal).
IntegralityCertificate conjugation_integrality(const std::vector<RingMatrix>& matrices,
                                               const std::vector<GroupRingElement>& diagonal);

/// D^{-1} rho(sigma_i) D for all i with D the quantum-factorial diagonal of
/// the punctured-disc triad. Throws std::domain_error on a zero diagonal entry.
IntegralityCertificate diagonal_conjugation_integrality(int n, int m);

}  // namespace lbrep
