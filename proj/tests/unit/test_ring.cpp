#include "catch_amalgamated.hpp"

#include "lbrep/random.hpp"
#include "lbrep/ring.hpp"
#include "lbrep/surface.hpp"

#include <algorithm>
#include <numeric>

using namespace lbrep;

namespace {

Context xd() { return make_context(CoefficientRing::integers(), {"x", "d"}); }

GroupRingElement el(const Context& ctx, const char* text) { return parse_element(ctx, text); }

// Nested-loop product on raw term lists.
GroupRingElement naive_product(const GroupRingElement& a, const GroupRingElement& b) {
  std::vector<std::pair<ExponentVector, Scalar>> terms;
  const auto& k = a.coefficients();
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) terms.emplace_back(ea + eb, k.mul(ca, cb));
  }
  return GroupRingElement::from_terms(a.context(), terms);
}

}  // namespace

TEST_CASE("coefficient rings", "[ring]") {
  auto z = CoefficientRing::integers();
  auto q = CoefficientRing::rationals();
  auto f5 = CoefficientRing::modular(5);
  CHECK(z.is_unit(z.from_integer(-1)));
  CHECK_FALSE(z.is_unit(z.from_integer(2)));
  CHECK(q.is_unit(q.from_integer(2)));
  CHECK(f5.equal(f5.from_integer(7), f5.from_integer(2)));
  CHECK(f5.equal(f5.mul(f5.from_integer(2), f5.inverse(f5.from_integer(2))), f5.one()));
  CHECK_THROWS_AS(CoefficientRing::modular(6), std::invalid_argument);
  CHECK_THROWS(z.from_rational(Rational(1, 2)));
  CHECK(CoefficientRing::from_name("mod:7") == CoefficientRing::modular(7));

  auto c = CoefficientRing::complex_approx();
  CHECK(c.equal(Complex(1.0, 0.0), Complex(1.0 + 1e-12, 0.0)));
  CHECK_FALSE(c.equal(Complex(1.0, 0.0), Complex(1.0 + 1e-6, 0.0)));
  CHECK_THROWS_AS(c.is_unit(c.one()), std::domain_error);
}

TEST_CASE("ring arithmetic examples", "[ring]") {
  auto ctx = make_context(CoefficientRing::integers(), {"x"});
  CHECK(el(ctx, "1 + x") * el(ctx, "1 - x") == el(ctx, "1 - x^2"));
  auto c2 = xd();
  auto xdm = el(c2, "x*d");
  CHECK(ring_arithmetic(xdm, -xdm, RingOp::add).is_zero());
  CHECK(ring_arithmetic(xdm, xdm, RingOp::sub).term_count() == 0);

  auto u = GroupRingElement::variable(c2, "d");
  auto one = GroupRingElement::integer(c2, 1);
  CHECK((one + u) * (one + u + u * u) == el(c2, "1 + 2*d + 2*d^2 + d^3"));
}

TEST_CASE("context mismatch is rejected", "[ring]") {
  auto a = GroupRingElement::variable(make_context(CoefficientRing::integers(), {"x"}), "x");
  auto b = GroupRingElement::variable(make_context(CoefficientRing::rationals(), {"x"}), "x");
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("involution", "[ring]") {
  auto ctx = xd();
  CHECK(el(ctx, "x^2*d^-1").involution() == el(ctx, "x^-2*d"));
  CHECK(GroupRingElement::integer(ctx, 1).involution().is_one());
  auto x = make_context(CoefficientRing::integers(), {"x"});
  CHECK(el(x, "3 + 2*x").involution() == el(x, "3 + 2*x^-1"));

  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_element(ctx, rng);
    REQUIRE(a.involution().involution() == a);
  }
}

TEST_CASE("units and zero divisors", "[ring]") {
  auto ctx = xd();
  CHECK(is_unit(el(ctx, "-x*d^-3")));
  CHECK_FALSE(is_unit(el(make_context(CoefficientRing::integers(), {"x"}), "1 - x")));
  auto q0 = make_context(CoefficientRing::rationals(), {});
  CHECK(is_unit(GroupRingElement::integer(q0, 1) - GroupRingElement::integer(q0, 2)));
  CHECK(is_non_zero_divisor(el(ctx, "1 + d")));
  CHECK_FALSE(is_non_zero_divisor(GroupRingElement(ctx)));

  auto qx = make_context(CoefficientRing::rationals(), {"x"});
  auto specialized = specialize(el(xd(), "1 + d"), {{"d", Rational(-1)}}, qx);
  CHECK_FALSE(is_non_zero_divisor(change_coefficients(specialized, qx)));

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = random_unit(ctx, rng);
    auto b = a.unit_inverse();
    REQUIRE(b);
    REQUIRE((a * *b).is_one());
  }
}

TEST_CASE("quantum integers and factorials", "[ring]") {
  auto ctx = xd();
  auto u = GroupRingElement::variable(ctx, "d");
  CHECK(quantum_integer(1, u).is_one());
  CHECK(quantum_integer(2, u) == el(ctx, "1 + d"));
  CHECK(quantum_integer(3, u) == el(ctx, "1 + d + d^2"));
  CHECK_THROWS_AS(quantum_integer(0, u), std::invalid_argument);
  CHECK(quantum_factorial(0, u).is_one());
  CHECK(quantum_factorial(1, u).is_one());
  CHECK(quantum_factorial(2, u) == el(ctx, "1 + d"));
  CHECK(quantum_factorial(3, u) == el(ctx, "1 + 2*d + 2*d^2 + d^3"));
  // u = 1 recovers the classical factorial.
  CHECK(quantum_factorial(5, GroupRingElement::integer(ctx, 1)) == GroupRingElement::integer(ctx, 120));

  for (int n = 0; n <= 7; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    GroupRingElement sum(ctx);
    do {
      sum += u.pow(inversion_count(p));
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(quantum_factorial(n, u) == sum);
  }
}

TEST_CASE("products match a nested-loop oracle", "[ring]") {
  auto ctx = xd();
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = random_element(ctx, rng);
    auto b = random_element(ctx, rng);
    REQUIRE(a * b == naive_product(a, b));
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) - b == a);
  }
}

TEST_CASE("exact division", "[ring]") {
  auto ctx = xd();
  auto a = el(ctx, "1 + d");
  auto b = el(ctx, "2 - x*d^-1 + x^3");
  auto q = divide_exact(a * b, a);
  REQUIRE(q);
  CHECK(*q == b);
  CHECK_FALSE(divide_exact(GroupRingElement::integer(ctx, 1), a));
  CHECK_FALSE(divide_exact(GroupRingElement::integer(ctx, 1), GroupRingElement::integer(ctx, 2)));
  auto qctx = make_context(CoefficientRing::rationals(), {"x"});
  CHECK(divide_exact(GroupRingElement::integer(qctx, 1), GroupRingElement::integer(qctx, 2)));
}

TEST_CASE("specialization is a ring homomorphism", "[ring]") {
  auto ctx = xd();
  auto q = CoefficientRing::rationals();
  auto target = make_context(q, {});
  Rng rng(5);
  std::map<std::string, Scalar> at{{"x", Rational(2)}, {"d", Rational(-3, 2)}};
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(ctx, rng);
    auto b = random_element(ctx, rng);
    auto sa = evaluate(a, at, q);
    auto sb = evaluate(b, at, q);
    REQUIRE(q.equal(evaluate(a * b, at, q), q.mul(sa, sb)));
    REQUIRE(q.equal(evaluate(a + b, at, q), q.add(sa, sb)));
    REQUIRE(specialize(a * b, at, target) == specialize(a, at, target) * specialize(b, at, target));
  }
  CHECK_THROWS(evaluate(el(ctx, "x^-1"), {{"x", Rational(0)}, {"d", Rational(1)}}, q));
}

TEST_CASE("text round trip", "[ring]") {
  auto ctx = xd();
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(ctx, rng);
    REQUIRE(parse_element(ctx, to_text(a)) == a);
  }
  CHECK(to_text(GroupRingElement(ctx)) == "0");
  CHECK_THROWS(parse_element(ctx, "1 + y"));
}
