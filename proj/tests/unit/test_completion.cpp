#include "catch_amalgamated.hpp"

#include "lbrep/completion.hpp"
#include "lbrep/random.hpp"

using namespace lbrep;

namespace {

Context yz() { return make_context(CoefficientRing::integers(), {"y", "z"}); }

Scalar z(long long v) { return CoefficientRing::integers().from_integer(v); }

bool same(const Scalar& a, long long b) { return CoefficientRing::integers().equal(a, z(b)); }

}  // namespace

TEST_CASE("inclusion of the group ring", "[completion]") {
  auto ctx = make_context(CoefficientRing::integers(), {"x"});
  auto c = include_group_ring(parse_element(ctx, "1 + x"));
  CHECK(same(c.coefficient_at(ExponentVector{0}), 1));
  CHECK(same(c.coefficient_at(ExponentVector{1}), 1));
  CHECK(same(c.coefficient_at(ExponentVector{2}), 0));
  CHECK(include_group_ring(GroupRingElement(ctx)).is_zero());
  CHECK(is_in_group_ring(include_group_ring(parse_element(ctx, "1 + x^2"))));
}

TEST_CASE("module action", "[completion]") {
  auto ctx = make_context(CoefficientRing::integers(), {"x"});
  auto one = GroupRingElement::integer(ctx, 1);
  auto x = GroupRingElement::variable(ctx, "x");
  auto ray = CompletedElement::ray(ctx, ExponentVector{0}, ExponentVector{2}, {z(1), z(-3)}, RayDirection::fwd);
  CHECK(module_action(one, ray) == ray);
  CHECK(module_action(x, include_group_ring(one)) == include_group_ring(x));

  auto ctx2 = yz();
  auto line = CompletedElement::ray(ctx2, ExponentVector{0, 0}, ExponentVector{1, 1}, {z(1)}, RayDirection::bi);
  auto h = module_action(parse_element(ctx2, "1 - y"), line);
  CHECK_FALSE(h.is_zero());
  for (int i = -5; i <= 5; ++i) {
    CHECK(same(h.coefficient_at(ExponentVector{i, i}), 1));
    CHECK(same(h.coefficient_at(ExponentVector{i + 1, i}), -1));
    CHECK(same(h.coefficient_at(ExponentVector{i, i + 1}), 0));
  }
}

TEST_CASE("module map is compatible with inclusion", "[completion]") {
  auto ctx = yz();
  Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    auto r = random_element(ctx, rng);
    auto a = random_element(ctx, rng);
    auto lhs = include_group_ring(r * a);
    REQUIRE(lhs == module_action(r, include_group_ring(a)));
    REQUIRE(lhs.is_in_group_ring());
    REQUIRE(*lhs.to_group_ring() == r * a);
  }
}

TEST_CASE("normalization and finiteness", "[completion]") {
  auto ctx = yz();
  auto r = CompletedElement::ray(ctx, ExponentVector{1, 0}, ExponentVector{1, 1}, {z(2)}, RayDirection::bi);
  CHECK((r - r).is_in_group_ring());
  CHECK((r - r).is_zero());
  CHECK_FALSE(r.is_in_group_ring());
  CHECK_FALSE(r.to_group_ring());

  // A bi-ray equals two opposite forward rays.
  auto fwd = CompletedElement::ray(ctx, ExponentVector{1, 0}, ExponentVector{1, 1}, {z(2)}, RayDirection::fwd);
  auto back = CompletedElement::ray(ctx, ExponentVector{0, -1}, ExponentVector{-1, -1}, {z(2)}, RayDirection::fwd);
  CHECK(fwd + back == r);

  // Period-2 patterns with a non-primitive step.
  auto even = CompletedElement::ray(ctx, ExponentVector{0, 0}, ExponentVector{2, 0}, {z(1)}, RayDirection::bi);
  auto odd = CompletedElement::ray(ctx, ExponentVector{1, 0}, ExponentVector{2, 0}, {z(1)}, RayDirection::bi);
  auto all = CompletedElement::ray(ctx, ExponentVector{5, 0}, ExponentVector{-1, 0}, {z(1)}, RayDirection::bi);
  CHECK(even + odd == all);
  CHECK(all.normalized().rays().size() <= 2);

  // A forward ray whose tail cancels against a shifted copy leaves a finite part.
  auto tail = fwd.shifted(ExponentVector{1, 1});
  auto diff = fwd - tail;
  CHECK(diff.is_in_group_ring());
  CHECK(*diff.to_group_ring() == GroupRingElement::monomial(ctx, ExponentVector{1, 0}, z(2)));

  CHECK_THROWS_AS(CompletedElement::ray(ctx, ExponentVector{0, 0}, ExponentVector{0, 0}, {z(1)}, RayDirection::bi),
                  std::invalid_argument);
  CHECK_THROWS_AS(CompletedElement::ray(ctx, ExponentVector{0, 0}, ExponentVector{1, 0}, {}, RayDirection::bi),
                  std::invalid_argument);
  CHECK_THROWS_AS(CompletedElement::ray(ctx, ExponentVector{0}, ExponentVector{1}, {z(1)}, RayDirection::bi),
                  std::invalid_argument);
}

TEST_CASE("helix classes", "[completion]") {
  auto ctx = yz();
  SurfaceTriad t{0, 3, 0, 1};
  const Composition e({1, 0});
  const ExponentVector y{1, 0}, zz{0, 1};
  auto h = helix_class(t, e, y, zz, ctx);
  REQUIRE(h.coordinates.size() == 2);
  CHECK(h.basis[0].family() == "D");
  CHECK(h.coordinates[1].is_zero());
  const auto& c = h.coordinates[0];
  for (int i = -30; i <= 30; ++i) {
    REQUIRE(same(c.coefficient_at(ExponentVector{i, i}), 1));
    REQUIRE(same(c.coefficient_at(ExponentVector{i + 1, i}), -1));
    REQUIRE(same(c.coefficient_at(ExponentVector{i, i + 2}), 0));
  }
  CHECK_FALSE(c.is_in_group_ring());
  CHECK_FALSE(h.is_in_group_ring());
  CHECK_FALSE(h.is_zero());

  CHECK_THROWS_AS(helix_class(t, e, ExponentVector{0, 0}, zz, ctx), std::invalid_argument);
  CHECK_THROWS_AS(helix_class(t, e, y, ExponentVector{-1, 0}, ctx), std::invalid_argument);

  auto left = helix_around(t, e, {y}, ctx);
  CHECK(left.is_zero());
  CHECK(left.is_in_group_ring());
  auto both = helix_around(t, e, {y, zz}, ctx);
  CHECK(both.coordinates[0] == c);
  CHECK_THROWS_AS(helix_around(t, e, {}, ctx), std::invalid_argument);
  CHECK_THROWS_AS(helix_around(SurfaceTriad{0, 3, 0, 2}, Composition({1, 1}), {y}, ctx), std::invalid_argument);
}
