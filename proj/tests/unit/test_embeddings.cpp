#include "catch_amalgamated.hpp"

#include "lbrep/embeddings.hpp"
#include "lbrep/pairing.hpp"
#include "lbrep/random.hpp"

using namespace lbrep;

TEST_CASE("embedding examples", "[embeddings]") {
  auto sys = LocalSystemSpec::standard(2);
  auto ctx = sys.context();
  auto e = embedding_matrix(SurfaceTriad{0, 3, 0, 2}, Direction::in, sys);
  REQUIRE(e.diagonal.size() == 3);
  CHECK(e.diagonal[0] == parse_element(ctx, "1 + d"));
  CHECK(e.diagonal[1].is_one());
  CHECK(e.diagonal[2] == parse_element(ctx, "1 + d"));
  CHECK(e.source[0].family() == "U");
  CHECK(e.target[0].family() == "V");
  auto o = embedding_matrix(SurfaceTriad{0, 3, 0, 2}, Direction::out, sys);
  CHECK(o.source[0].family() == "G");
  CHECK(o.target[0].family() == "D");

  auto s3 = LocalSystemSpec::standard(3);
  auto e3 = embedding_matrix(SurfaceTriad{0, 2, 0, 3}, Direction::in, s3);
  REQUIRE(e3.diagonal.size() == 1);
  CHECK(e3.diagonal[0] == parse_element(s3.context(), "1 + 2*d + 2*d^2 + d^3"));
  CHECK_THROWS_AS(embedding_matrix(SurfaceTriad{0, 3, 0, 3}, Direction::in, sys), std::invalid_argument);
}

TEST_CASE("m = 1 embeddings are the identity", "[embeddings]") {
  for (int g = 0; g <= 1; ++g) {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 0; k <= 2; ++k) {
        SurfaceTriad t{g, n, k, 1};
        if (t.arc_count() < 1 || t.arc_count() > 6) continue;
        for (auto dir : {Direction::in, Direction::out}) {
          REQUIRE(embedding_matrix(t, dir, LocalSystemSpec::standard(1)).matrix().is_identity());
        }
      }
    }
  }
}

TEST_CASE("diagonal entries agree with local intersection sums", "[embeddings]") {
  for (int m = 1; m <= 4; ++m) {
    auto sys = LocalSystemSpec::standard(m);
    auto e = embedding_matrix(SurfaceTriad{0, 4, 0, m}, Direction::in, sys);
    for (std::size_t i = 0; i < e.diagonal.size(); ++i) {
      auto w = GroupRingElement::integer(sys.context(), 1);
      for (int p : e.source[i].composition.parts()) w *= local_intersection_sum(p, sys.homogeneity_unit());
      REQUIRE(e.diagonal[i] == w);
    }
  }
}

TEST_CASE("injectivity certificates", "[embeddings]") {
  auto sys = LocalSystemSpec::standard(2);
  SurfaceTriad t{0, 3, 0, 2};
  auto cert = certify_injective(embedding_matrix(t, Direction::in, sys));
  CHECK(cert.injective);
  CHECK(cert.vanishing.empty());
  CHECK(certify_injective(embedding_matrix(SurfaceTriad{0, 5, 0, 1}, Direction::out, LocalSystemSpec::standard(1)))
            .injective);

  // u = -1 is a primitive square root of unity: [2]_u = 0.
  auto ctx = make_context(CoefficientRing::integers(), {"x"});
  auto minus = LocalSystemSpec::with_unit(ctx, GroupRingElement::integer(ctx, -1), 2);
  auto bad = certify_injective(embedding_matrix(t, Direction::in, minus));
  CHECK_FALSE(bad.injective);
  REQUIRE(bad.vanishing.size() == 2);
  CHECK(bad.vanishing[0].composition == Composition({2, 0}));
  CHECK(bad.vanishing[0].factor == "[2]_u");
  CHECK(bad.vanishing[1].composition == Composition({0, 2}));

  auto cctx = make_context(CoefficientRing::complex_approx(), {"x"});
  auto approx = LocalSystemSpec::with_unit(cctx, GroupRingElement::integer(cctx, 1), 1);
  CHECK_THROWS_AS(certify_injective(embedding_matrix(SurfaceTriad{0, 3, 0, 1}, Direction::in, approx)),
                  std::domain_error);
}

TEST_CASE("injectivity means no kernel on random vectors", "[embeddings]") {
  auto sys = LocalSystemSpec::standard(3);
  auto e = embedding_matrix(SurfaceTriad{0, 4, 0, 3}, Direction::in, sys);
  REQUIRE(certify_injective(e).injective);
  Rng rng(23);
  auto m = e.matrix();
  for (int t = 0; t < 100; ++t) {
    std::vector<GroupRingElement> v;
    for (std::size_t i = 0; i < m.cols(); ++i) v.push_back(random_element(sys.context(), rng, 2, 2));
    auto image = m.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(image[i].is_zero() == v[i].is_zero());
  }
}

TEST_CASE("reducibility witnesses", "[embeddings]") {
  auto sys = LocalSystemSpec::standard(2);
  auto w = reducibility_witness(SurfaceTriad{0, 3, 0, 2}, sys);
  REQUIRE(w);
  CHECK(w->outside.label() == "V[2,0]@out");
  CHECK(w->entry == parse_element(sys.context(), "1 + d"));
  CHECK_FALSE(is_unit(w->entry));

  auto w1 = reducibility_witness(SurfaceTriad{0, 2, 0, 2}, sys);
  REQUIRE(w1);
  CHECK(w1->entry == quantum_factorial(2, sys.homogeneity_unit()));
  CHECK_FALSE(reducibility_witness(SurfaceTriad{0, 4, 0, 1}, LocalSystemSpec::standard(1)));

  // Over F_3 with u = 1 every diagonal entry [e]! with e <= 2 is a unit.
  auto f3 = make_context(CoefficientRing::modular(3), {"x"});
  auto trivial = LocalSystemSpec::with_unit(f3, GroupRingElement::integer(f3, 1), 2);
  CHECK_FALSE(reducibility_witness(SurfaceTriad{0, 3, 0, 2}, trivial));

  auto z = make_context(CoefficientRing::integers(), {"x"});
  auto minus = LocalSystemSpec::with_unit(z, GroupRingElement::integer(z, -1), 2);
  CHECK_THROWS_AS(reducibility_witness(SurfaceTriad{0, 3, 0, 2}, minus), std::domain_error);
}

TEST_CASE("direction names", "[embeddings]") {
  CHECK(parse_direction("in") == Direction::in);
  CHECK(to_string(Direction::out) == "out");
  CHECK_THROWS_AS(parse_direction("sideways"), std::invalid_argument);
}
