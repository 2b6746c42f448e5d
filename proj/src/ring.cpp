#include "lbrep/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lbrep {

// ---------------------------------------------------------------------------
// ExponentVector

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("exponent vectors of different rank");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.entries_[i] += other.entries_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const { return *this + (-other); }

ExponentVector ExponentVector::operator-() const {
  ExponentVector r(*this);
  for (auto& v : r.entries_) v = -v;
  return r;
}

ExponentVector ExponentVector::operator*(std::int64_t k) const {
  ExponentVector r(*this);
  for (auto& v : r.entries_) v *= k;
  return r;
}

// ---------------------------------------------------------------------------
// RingContext

RingContext::RingContext(CoefficientRing coefficients, std::vector<std::string> variables)
    : coefficients_(coefficients), variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v.front()))) {
      throw std::invalid_argument("variable names must start with a letter: '" + v + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[j] == v) throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

bool RingContext::operator==(const RingContext& other) const {
  return coefficients_ == other.coefficients_ && variables_ == other.variables_;
}

Context make_context(CoefficientRing coefficients, std::vector<std::string> variables) {
  return std::make_shared<const RingContext>(coefficients, std::move(variables));
}

bool same_context(const Context& a, const Context& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// GroupRingElement

GroupRingElement::GroupRingElement(Context context) : context_(std::move(context)) {
  if (!context_) throw std::invalid_argument("null ring context");
}

GroupRingElement GroupRingElement::constant(Context context, const Scalar& c) {
  ExponentVector zero(context->rank());
  return monomial(std::move(context), std::move(zero), c);
}

GroupRingElement GroupRingElement::integer(Context context, long long c) {
  auto s = context->coefficients().from_integer(c);
  return constant(std::move(context), s);
}

GroupRingElement GroupRingElement::monomial(Context context, ExponentVector exponent, const Scalar& c) {
  if (exponent.rank() != context->rank()) throw std::invalid_argument("exponent rank does not match the ring");
  GroupRingElement r(std::move(context));
  r.add_term(exponent, c);
  return r;
}

GroupRingElement GroupRingElement::variable(Context context, std::size_t index) {
  if (index >= context->rank()) throw std::out_of_range("variable index out of range");
  ExponentVector e(context->rank());
  e[index] = 1;
  auto one = context->coefficients().one();
  return monomial(std::move(context), std::move(e), one);
}

GroupRingElement GroupRingElement::variable(Context context, std::string_view name) {
  auto idx = context->index_of(name);
  if (!idx) throw std::invalid_argument("ring has no variable '" + std::string(name) + "'");
  return variable(std::move(context), *idx);
}

GroupRingElement GroupRingElement::from_terms(Context context,
                                              std::span<const std::pair<ExponentVector, Scalar>> terms) {
  GroupRingElement r(std::move(context));
  for (const auto& [e, c] : terms) {
    if (e.rank() != r.context_->rank()) throw std::invalid_argument("exponent rank does not match the ring");
    r.add_term(e, c);
  }
  return r;
}

void GroupRingElement::add_term(const ExponentVector& e, const Scalar& c) {
  const auto& k = coefficients();
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!k.is_zero(c)) terms_.emplace(e, c);
    return;
  }
  it->second = k.add(it->second, c);
  if (k.is_zero(it->second)) terms_.erase(it);
}

bool GroupRingElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return e.is_zero() && coefficients().equal(c, coefficients().one());
}

Scalar GroupRingElement::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? coefficients().zero() : it->second;
}

bool GroupRingElement::is_monomial() const { return terms_.size() == 1; }

void GroupRingElement::require_same_context(const GroupRingElement& other, const char* op) const {
  if (!same_context(context_, other.context_)) {
    throw std::invalid_argument(std::string("context mismatch in ") + op + ": ring over " +
                                coefficients().name() + " with " + std::to_string(context_->rank()) +
                                " variable(s) vs ring over " + other.coefficients().name() + " with " +
                                std::to_string(other.context_->rank()) + " variable(s)");
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
  GroupRingElement r(*this);
  r += other;
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const {
  GroupRingElement r(*this);
  r -= other;
  return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_context(other, "addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_context(other, "subtraction");
  const auto& k = coefficients();
  for (const auto& [e, c] : other.terms_) add_term(e, k.neg(c));
  return *this;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
  require_same_context(other, "multiplication");
  const auto& k = coefficients();
  GroupRingElement r(context_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) r.add_term(e1 + e2, k.mul(c1, c2));
  }
  return r;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& other) {
  *this = *this * other;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  const auto& k = coefficients();
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(e, k.neg(c));
  return GroupRingElement(context_, std::move(t));
}

GroupRingElement GroupRingElement::scaled(const Scalar& c) const {
  const auto& k = coefficients();
  GroupRingElement r(context_);
  for (const auto& [e, a] : terms_) r.add_term(e, k.mul(a, c));
  return r;
}

GroupRingElement GroupRingElement::shifted(const ExponentVector& v) const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(e + v, c);
  return GroupRingElement(context_, std::move(t));
}

GroupRingElement GroupRingElement::pow(long long exponent) const {
  GroupRingElement base(*this);
  if (exponent < 0) {
    auto inv = unit_inverse();
    if (!inv) throw std::domain_error("negative power of a non-unit " + to_text(*this));
    base = *inv;
    exponent = -exponent;
  }
  GroupRingElement result = integer(context_, 1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

GroupRingElement GroupRingElement::involution() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(-e, c);
  return GroupRingElement(context_, std::move(t));
}

std::optional<GroupRingElement> GroupRingElement::unit_inverse() const {
  const auto& k = coefficients();
  if (!k.is_exact()) {
    // Monomials are still invertible; only the unit *test* is ill-posed.
    if (!is_monomial()) throw std::domain_error("unit tests are ill-posed for complex coefficients");
  }
  if (!is_monomial()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (k.is_exact() && !k.is_unit(c)) return std::nullopt;
  return monomial(context_, -e, k.inverse(c));
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
  if (!same_context(context_, other.context_)) return false;
  if (coefficients().is_exact()) {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (!(e == it->first) || !coefficients().equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }
  return (*this - other).is_zero();
}

// ---------------------------------------------------------------------------
// Free functions

GroupRingElement ring_arithmetic(const GroupRingElement& a, const GroupRingElement& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
    case RingOp::neg: return -a;
  }
  throw std::invalid_argument("unknown ring operation");
}

namespace {

void require_domain(const GroupRingElement& a, const char* what) {
  if (!a.coefficients().is_integral_domain()) {
    throw std::domain_error(std::string(what) + " requires an integral-domain coefficient ring; got " +
                            a.coefficients().name());
  }
}

}  // namespace

bool is_unit(const GroupRingElement& a) {
  require_domain(a, "is_unit");
  return a.unit_inverse().has_value();
}

bool is_non_zero_divisor(const GroupRingElement& a) {
  require_domain(a, "is_non_zero_divisor");
  return !a.is_zero();
}

GroupRingElement quantum_integer(long long n, const GroupRingElement& u) {
  if (n < 1) throw std::invalid_argument("quantum integers [n]_u need n >= 1, got n = " + std::to_string(n));
  if (!u.is_monomial()) throw std::invalid_argument("quantum integers need a unit u, got " + to_text(u));
  GroupRingElement sum(u.context());
  GroupRingElement power = GroupRingElement::integer(u.context(), 1);
  for (long long i = 0; i < n; ++i) {
    sum += power;
    power *= u;
  }
  return sum;
}

GroupRingElement quantum_factorial(long long n, const GroupRingElement& u) {
  if (n < 0) throw std::invalid_argument("quantum factorial needs n >= 0, got n = " + std::to_string(n));
  GroupRingElement product = GroupRingElement::integer(u.context(), 1);
  for (long long i = 1; i <= n; ++i) product *= quantum_integer(i, u);
  return product;
}

std::optional<GroupRingElement> divide_exact(const GroupRingElement& a, const GroupRingElement& b) {
  if (!same_context(a.context(), b.context())) throw std::invalid_argument("context mismatch in division");
  const auto& k = a.coefficients();
  if (!k.is_exact()) throw std::domain_error("exact division needs exact coefficients");
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return GroupRingElement(a.context());

  const std::size_t d = a.context()->rank();
  // Degree in each variable is additive over a domain, so any quotient lives in this box.
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto minmax = [i](const GroupRingElement& p) {
      std::int64_t mn = p.terms().begin()->first[i], mx = mn;
      for (const auto& [e, c] : p.terms()) {
        mn = std::min(mn, e[i]);
        mx = std::max(mx, e[i]);
      }
      return std::pair{mn, mx};
    };
    auto [amin, amax] = minmax(a);
    auto [bmin, bmax] = minmax(b);
    lo[i] = amin - bmin;
    hi[i] = amax - bmax;
    if (lo[i] > hi[i]) return std::nullopt;
  }

  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  GroupRingElement remainder(a);
  std::vector<std::pair<ExponentVector, Scalar>> quotient;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    ExponentVector qe = re - lead_e;
    for (std::size_t i = 0; i < d; ++i) {
      if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
    }
    if (!k.divides(lead_c, rc)) return std::nullopt;
    Scalar qc = k.kind() == CoefficientKind::integers
                    ? Scalar(Rational(std::get<Rational>(rc) / std::get<Rational>(lead_c)))
                    : k.mul(rc, k.inverse(lead_c));
    auto step = b.shifted(qe).scaled(qc);
    remainder -= step;
    quotient.emplace_back(std::move(qe), std::move(qc));
  }
  return GroupRingElement::from_terms(a.context(), quotient);
}

namespace {

Scalar convert_coefficient(const Scalar& c, const CoefficientRing& from, const CoefficientRing& to) {
  if (from.is_exact()) {
    const auto& q = std::get<Rational>(c);
    if (from.kind() == CoefficientKind::modular && to.kind() != CoefficientKind::modular) {
      throw std::domain_error("cannot lift residues mod p to " + to.name());
    }
    if (from.kind() == CoefficientKind::modular && to.modulus() != from.modulus()) {
      throw std::domain_error("incompatible moduli");
    }
    return to.from_rational(q);
  }
  return to.from_complex(std::get<Complex>(c));
}

Scalar scalar_power(const CoefficientRing& k, const Scalar& v, std::int64_t exponent) {
  Scalar base = v;
  if (exponent < 0) {
    base = k.inverse(v);
    exponent = -exponent;
  }
  Scalar r = k.one();
  while (exponent > 0) {
    if (exponent & 1) r = k.mul(r, base);
    exponent >>= 1;
    if (exponent > 0) base = k.mul(base, base);
  }
  return r;
}

}  // namespace

GroupRingElement specialize(const GroupRingElement& a, const std::map<std::string, Scalar>& values,
                            const Context& target) {
  const auto& src = *a.context();
  const auto& k = target->coefficients();
  std::vector<std::optional<std::size_t>> slot(src.rank());
  for (std::size_t i = 0; i < src.rank(); ++i) {
    const auto& name = src.variables()[i];
    slot[i] = target->index_of(name);
    if (!slot[i] && !values.contains(name)) {
      throw std::invalid_argument("no value given for variable '" + name + "'");
    }
  }
  GroupRingElement result(target);
  for (const auto& [e, c] : a.terms()) {
    Scalar coeff = convert_coefficient(c, a.coefficients(), k);
    ExponentVector te(target->rank());
    for (std::size_t i = 0; i < src.rank(); ++i) {
      if (slot[i]) {
        te[*slot[i]] += e[i];
      } else if (e[i] != 0) {
        coeff = k.mul(coeff, scalar_power(k, values.at(src.variables()[i]), e[i]));
      }
    }
    result += GroupRingElement::monomial(target, std::move(te), coeff);
  }
  return result;
}

Scalar evaluate(const GroupRingElement& a, const std::map<std::string, Scalar>& values,
                const CoefficientRing& target_ring) {
  auto scalar_ring = make_context(target_ring, {});
  auto r = specialize(a, values, scalar_ring);
  return r.coefficient(ExponentVector(0));
}

GroupRingElement change_coefficients(const GroupRingElement& a, const Context& target) {
  if (a.context()->variables() != target->variables()) {
    throw std::invalid_argument("change_coefficients keeps the variables fixed");
  }
  std::vector<std::pair<ExponentVector, Scalar>> terms;
  for (const auto& [e, c] : a.terms()) {
    terms.emplace_back(e, convert_coefficient(c, a.coefficients(), target->coefficients()));
  }
  return GroupRingElement::from_terms(target, terms);
}

// ---------------------------------------------------------------------------
// Text form

std::string to_text(const GroupRingElement& a) {
  if (a.is_zero()) return "0";
  const auto& k = a.coefficients();
  const auto& vars = a.context()->variables();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    std::string coeff = k.format(c);
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(const Context& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  GroupRingElement parse() {
    GroupRingElement total(ctx_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto t = term();
      total += negate ? -t : t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
      ++pos_;
    }
    return total;
  }

 private:
  GroupRingElement term() {
    const auto& k = ctx_->coefficients();
    Scalar coeff = k.one();
    ExponentVector e(ctx_->rank());
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        auto name = text_.substr(start, pos_ - start);
        auto idx = ctx_->index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        std::int64_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          power = integer_literal();
        }
        e[*idx] += power;
      } else {
        coeff = k.mul(coeff, k.parse(coefficient_literal()));
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return GroupRingElement::monomial(ctx_, std::move(e), coeff);
  }

  std::int64_t integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    auto digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer exponent");
    try {
      return std::stoll(std::string(digits));
    } catch (const std::exception&) {
      fail("exponent out of range");
    }
    return 0;
  }

  std::string coefficient_literal() {
    std::size_t start = pos_;
    if (peek() == '(') {
      while (!at_end() && peek() != ')') ++pos_;
      if (at_end()) fail("unterminated '('");
      ++pos_;
      return std::string(text_.substr(start, pos_ - start));
    }
    while (!at_end()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ > start) {
        ++pos_;
        if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail(std::string("unexpected character '") + peek() + "'");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                ": " + why);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const Context& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupRingElement parse_element(const Context& context, std::string_view text) {
  return ElementParser(context, text).parse();
}

}  // namespace lbrep
