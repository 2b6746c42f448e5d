#pragma once

/**
 * Coefficient rings k for the group rings k[Z^d].
 *
 * Exact coefficients (integers, rationals, integers mod p) are stored as GMP
 * rationals; integers and residues are kept with denominator 1. The
 * approximate complex ring stores std::complex<double> and compares values
 * with an explicit tolerance.
 */

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace lbrep {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Complex = std::complex<double>;
using Scalar = std::variant<Rational, Complex>;

enum class CoefficientKind { integers, rationals, modular, complex_approx };

class CoefficientRing {
 public:
  static CoefficientRing integers();
  static CoefficientRing rationals();
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientRing modular(std::uint32_t p);
  static CoefficientRing complex_approx(double tolerance = 1e-9);

  /// Accepts "integers", "rationals", "mod:P" and "complex" / "complex:TAU".
  static CoefficientRing from_name(std::string_view name);

  CoefficientKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  double tolerance() const { return tolerance_; }

  bool is_exact() const { return kind_ != CoefficientKind::complex_approx; }
  bool is_integral_domain() const { return is_exact(); }
  bool is_field() const {
    return kind_ == CoefficientKind::rationals || kind_ == CoefficientKind::modular;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long value) const;
  /// Throws for the integer ring when q is not integral, and for mod p when
  /// the denominator is divisible by p.
  Scalar from_rational(const Rational& q) const;
  Scalar from_complex(Complex z) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  bool is_zero(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  /// Exact rings only; the complex ring throws std::domain_error.
  bool is_unit(const Scalar& a) const;
  /// Inverse in the ring (or the complex numbers). Throws if a is not invertible.
  Scalar inverse(const Scalar& a) const;

  /// Exact quotient a/b when it exists in the ring.
  bool divides(const Scalar& b, const Scalar& a) const;

  /// Lossy view used by numeric specialisation. Residues map to their
  /// representative in [0, p).
  Complex to_complex(const Scalar& a) const;

  std::string format(const Scalar& a) const;
  Scalar parse(std::string_view text) const;
  std::string name() const;

  bool operator==(const CoefficientRing& other) const;

 private:
  CoefficientRing(CoefficientKind kind, std::uint32_t modulus, double tolerance)
      : kind_(kind), modulus_(modulus), tolerance_(tolerance) {}

  Rational reduce(const Rational& q) const;

  CoefficientKind kind_;
  std::uint32_t modulus_ = 0;
  double tolerance_ = 0.0;
};

bool is_prime(std::uint64_t p);

}  // namespace lbrep
