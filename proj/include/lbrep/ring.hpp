#pragma once

/**
 * Group rings R = k[Z^d]: finitely supported multivariate Laurent polynomials.
 *
 * Elements are stored sparsely as a map from exponent vectors to non-zero
 * coefficients, ordered lexicographically by exponent. All values are
 * immutable once built; operations return new elements.
 */

#include "lbrep/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lbrep {

/// A point of the lattice Z^d. Componentwise addition is the group law.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank) : entries_(rank, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t rank() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  bool is_zero() const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector operator-() const;
  ExponentVector operator*(std::int64_t k) const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Lattice rank, coefficient ring and variable names shared by a family of elements.
class RingContext {
 public:
  RingContext(CoefficientRing coefficients, std::vector<std::string> variables);

  std::size_t rank() const { return variables_.size(); }
  const CoefficientRing& coefficients() const { return coefficients_; }
  const std::vector<std::string>& variables() const { return variables_; }
  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const RingContext& other) const;

 private:
  CoefficientRing coefficients_;
  std::vector<std::string> variables_;
};

using Context = std::shared_ptr<const RingContext>;

Context make_context(CoefficientRing coefficients, std::vector<std::string> variables);
bool same_context(const Context& a, const Context& b);

class GroupRingElement {
 public:
  using TermMap = std::map<ExponentVector, Scalar>;

  /// The zero element of the given ring.
  explicit GroupRingElement(Context context);

  static GroupRingElement constant(Context context, const Scalar& c);
  static GroupRingElement integer(Context context, long long c);
  static GroupRingElement monomial(Context context, ExponentVector exponent, const Scalar& c);
  /// The group element t_i (the i-th generator of Z^d) with coefficient 1.
  static GroupRingElement variable(Context context, std::size_t index);
  static GroupRingElement variable(Context context, std::string_view name);
  /// Builds an element from (exponent, coefficient) pairs; repeated exponents add.
  static GroupRingElement from_terms(Context context, std::span<const std::pair<ExponentVector, Scalar>> terms);

  const Context& context() const { return context_; }
  const CoefficientRing& coefficients() const { return context_->coefficients(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Coefficient at an exponent (zero when absent).
  Scalar coefficient(const ExponentVector& exponent) const;

  /// True for c·t^v with c a non-zero coefficient.
  bool is_monomial() const;

  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator-(const GroupRingElement& other) const;
  GroupRingElement operator*(const GroupRingElement& other) const;
  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const GroupRingElement& other);

  GroupRingElement scaled(const Scalar& c) const;
  /// Multiplication by the group element t^v.
  GroupRingElement shifted(const ExponentVector& v) const;
  /// Non-negative powers always; negative powers only for units.
  GroupRingElement pow(long long exponent) const;

  /// The canonical involution induced by g -> g^{-1}: every exponent negated.
  GroupRingElement involution() const;

  /// Inverse when this is a unit (c·t^v with c a unit of k); nullopt otherwise.
  /// Throws std::domain_error for complex coefficients.
  std::optional<GroupRingElement> unit_inverse() const;

  /// Equality in the ring; contexts must match.
  bool operator==(const GroupRingElement& other) const;

 private:
  GroupRingElement(Context context, TermMap terms) : context_(std::move(context)), terms_(std::move(terms)) {}

  void require_same_context(const GroupRingElement& other, const char* op) const;
  void add_term(const ExponentVector& e, const Scalar& c);

  Context context_;
  TermMap terms_;
};

enum class RingOp { add, sub, mul, neg };

/// Dispatching form of the ring operations; `b` is ignored for neg.
GroupRingElement ring_arithmetic(const GroupRingElement& a, const GroupRingElement& b, RingOp op);

/// Units of k[Z^d] over an integral domain k are exactly c·t^v with c a unit.
bool is_unit(const GroupRingElement& a);
/// k[Z^d] over an integral domain is a domain, so this is a != 0.
bool is_non_zero_divisor(const GroupRingElement& a);

/// [n]_u = 1 + u + ... + u^{n-1}; n >= 1 and u a unit.
GroupRingElement quantum_integer(long long n, const GroupRingElement& u);
/// [n]_u! = [1]_u [2]_u ... [n]_u with [0]_u! = 1.
GroupRingElement quantum_factorial(long long n, const GroupRingElement& u);

/// Exact division a / b in R when b divides a; nullopt otherwise.
/// Exact coefficient rings only. For integer coefficients the quotient must
/// also have integer coefficients.
std::optional<GroupRingElement> divide_exact(const GroupRingElement& a, const GroupRingElement& b);

/// Ring homomorphism substituting values for some variables. Variables of
/// `target` must be a subset of the source variables (matched by name);
/// every other source variable needs a value, which must be a unit of the
/// target coefficients when it appears with a negative exponent.
GroupRingElement specialize(const GroupRingElement& a, const std::map<std::string, Scalar>& values,
                            const Context& target);

/// Full evaluation to a scalar of `target_ring`.
Scalar evaluate(const GroupRingElement& a, const std::map<std::string, Scalar>& values,
                const CoefficientRing& target_ring);

/// Same element viewed over a different (compatible) coefficient ring with
/// the same variables; e.g. Z[x] -> Q[x] or Z[x] -> F_p[x].
GroupRingElement change_coefficients(const GroupRingElement& a, const Context& target);

/// Canonical text: terms in ascending lex order of exponents, e.g. `-2*x^-1*d^3 + 1`.
std::string to_text(const GroupRingElement& a);
GroupRingElement parse_element(const Context& context, std::string_view text);

}  // namespace lbrep
