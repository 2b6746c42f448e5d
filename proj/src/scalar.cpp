#include "lbrep/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lbrep {

namespace {

const Rational& exact(const Scalar& s) {
  const auto* q = std::get_if<Rational>(&s);
  if (q == nullptr) throw std::logic_error("expected an exact coefficient");
  return *q;
}

const Complex& approx(const Scalar& s) {
  const auto* z = std::get_if<Complex>(&s);
  if (z == nullptr) throw std::logic_error("expected a complex coefficient");
  return *z;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::integers() { return {CoefficientKind::integers, 0, 0.0}; }
CoefficientRing CoefficientRing::rationals() { return {CoefficientKind::rationals, 0, 0.0}; }

CoefficientRing CoefficientRing::modular(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("integers mod p require p prime, got " + std::to_string(p));
  return {CoefficientKind::modular, p, 0.0};
}

CoefficientRing CoefficientRing::complex_approx(double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("complex tolerance must be positive");
  return {CoefficientKind::complex_approx, 0, tolerance};
}

CoefficientRing CoefficientRing::from_name(std::string_view name) {
  if (name == "integers" || name == "Z") return integers();
  if (name == "rationals" || name == "Q") return rationals();
  if (name == "complex" || name == "C") return complex_approx();
  if (name.starts_with("mod:")) {
    auto digits = name.substr(4);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed modulus in '" + std::string(name) + "'");
    }
    return modular(p);
  }
  if (name.starts_with("complex:")) return complex_approx(parse_double(name.substr(8)));
  throw std::invalid_argument("unknown coefficient ring '" + std::string(name) + "'");
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case CoefficientKind::integers: return "integers";
    case CoefficientKind::rationals: return "rationals";
    case CoefficientKind::modular: return "mod:" + std::to_string(modulus_);
    case CoefficientKind::complex_approx: return "complex:" + format_double(tolerance_);
  }
  return {};
}

bool CoefficientRing::operator==(const CoefficientRing& other) const {
  return kind_ == other.kind_ && modulus_ == other.modulus_ && tolerance_ == other.tolerance_;
}

Rational CoefficientRing::reduce(const Rational& q) const {
  if (kind_ != CoefficientKind::modular) return q;
  Integer p = modulus_;
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  den %= p;
  if (den == 0) throw std::domain_error("denominator divisible by the modulus");
  Integer inv;
  // Fermat inverse; p is prime.
  inv = boost::multiprecision::powm(den, p - 2, p);
  Integer r = (num * inv) % p;
  if (r < 0) r += p;
  return Rational(r);
}

Scalar CoefficientRing::zero() const { return from_integer(0); }
Scalar CoefficientRing::one() const { return from_integer(1); }

Scalar CoefficientRing::from_integer(long long value) const {
  if (kind_ == CoefficientKind::complex_approx) return Complex(static_cast<double>(value), 0.0);
  return reduce(Rational(value));
}

Scalar CoefficientRing::from_rational(const Rational& q) const {
  switch (kind_) {
    case CoefficientKind::integers:
      if (boost::multiprecision::denominator(q) != 1) {
        throw std::domain_error("coefficient " + q.str() + " is not an integer");
      }
      return q;
    case CoefficientKind::rationals: return q;
    case CoefficientKind::modular: return reduce(q);
    case CoefficientKind::complex_approx: return Complex(q.convert_to<double>(), 0.0);
  }
  return q;
}

Scalar CoefficientRing::from_complex(Complex z) const {
  if (kind_ != CoefficientKind::complex_approx) {
    throw std::domain_error("complex value given for exact ring " + name());
  }
  return z;
}

Scalar CoefficientRing::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == CoefficientKind::complex_approx) return approx(a) + approx(b);
  return reduce(exact(a) + exact(b));
}

Scalar CoefficientRing::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == CoefficientKind::complex_approx) return approx(a) - approx(b);
  return reduce(exact(a) - exact(b));
}

Scalar CoefficientRing::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == CoefficientKind::complex_approx) return approx(a) * approx(b);
  return reduce(exact(a) * exact(b));
}

Scalar CoefficientRing::neg(const Scalar& a) const {
  if (kind_ == CoefficientKind::complex_approx) return -approx(a);
  return reduce(-exact(a));
}

bool CoefficientRing::is_zero(const Scalar& a) const {
  if (kind_ == CoefficientKind::complex_approx) return std::abs(approx(a)) <= tolerance_;
  return exact(a) == 0;
}

bool CoefficientRing::equal(const Scalar& a, const Scalar& b) const {
  if (kind_ == CoefficientKind::complex_approx) return std::abs(approx(a) - approx(b)) <= tolerance_;
  return exact(a) == exact(b);
}

bool CoefficientRing::is_unit(const Scalar& a) const {
  switch (kind_) {
    case CoefficientKind::integers: return exact(a) == 1 || exact(a) == -1;
    case CoefficientKind::rationals:
    case CoefficientKind::modular: return exact(a) != 0;
    case CoefficientKind::complex_approx:
      throw std::domain_error("unit tests are ill-posed for complex coefficients with tolerance");
  }
  return false;
}

Scalar CoefficientRing::inverse(const Scalar& a) const {
  if (kind_ == CoefficientKind::complex_approx) {
    if (is_zero(a)) throw std::domain_error("division by (approximately) zero");
    return Complex(1.0, 0.0) / approx(a);
  }
  if (!is_unit(a)) throw std::domain_error(format(a) + " is not a unit of " + name());
  return reduce(Rational(1) / exact(a));
}

bool CoefficientRing::divides(const Scalar& b, const Scalar& a) const {
  switch (kind_) {
    case CoefficientKind::integers: {
      if (exact(b) == 0) return exact(a) == 0;
      return boost::multiprecision::denominator(Rational(exact(a) / exact(b))) == 1;
    }
    case CoefficientKind::rationals:
    case CoefficientKind::modular: return exact(b) != 0 || exact(a) == 0;
    case CoefficientKind::complex_approx: return !is_zero(b) || is_zero(a);
  }
  return false;
}

Complex CoefficientRing::to_complex(const Scalar& a) const {
  if (kind_ == CoefficientKind::complex_approx) return approx(a);
  return Complex(exact(a).convert_to<double>(), 0.0);
}

std::string CoefficientRing::format(const Scalar& a) const {
  if (kind_ == CoefficientKind::complex_approx) {
    const Complex& z = approx(a);
    if (z.imag() == 0.0) return format_double(z.real());
    return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
  }
  return exact(a).str();
}

Scalar CoefficientRing::parse(std::string_view text) const {
  text = trim(text);
  if (kind_ == CoefficientKind::complex_approx) {
    if (!text.empty() && text.front() == '(') {
      if (text.back() != ')') throw std::invalid_argument("malformed complex '" + std::string(text) + "'");
      auto inner = text.substr(1, text.size() - 2);
      auto comma = inner.find(',');
      if (comma == std::string_view::npos) {
        throw std::invalid_argument("complex coefficient needs '(re,im)': '" + std::string(text) + "'");
      }
      return Complex(parse_double(trim(inner.substr(0, comma))), parse_double(trim(inner.substr(comma + 1))));
    }
    if (text.find('/') != std::string_view::npos) {
      return Complex(parse_rational(text).convert_to<double>(), 0.0);
    }
    return Complex(parse_double(text), 0.0);
  }
  return from_rational(parse_rational(text));
}

}  // namespace lbrep
