#include "catch_amalgamated.hpp"

#include "lbrep/braid.hpp"
#include "lbrep/pairing.hpp"
#include "lbrep/random.hpp"
#include "lbrep/serialize.hpp"

#include <fstream>

using namespace lbrep;

namespace {

Json load_golden() {
  std::ifstream in(std::string(LBREP_TEST_DATA) + "/golden/generators.json");
  REQUIRE(in);
  return Json::parse(in);
}

RingMatrix power(const RingMatrix& m, int k) {
  auto r = RingMatrix::identity(m.context(), m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

TEST_CASE("generators match the golden file", "[braid]") {
  auto golden = load_golden();
  CHECK(golden.at("schema") == kSchemaVersion);
  std::size_t checked = 0;
  for (const auto& g : golden.at("matrices")) {
    const int n = g.at("n"), m = g.at("m"), i = g.at("i");
    auto ctx = make_context(CoefficientRing::integers(), g.at("variables").get<std::vector<std::string>>());
    auto actual = generator_matrix(n, i, m);
    const auto& rows = g.at("entries");
    REQUIRE(rows.size() == actual.rows());
    for (std::size_t r = 0; r < actual.rows(); ++r) {
      REQUIRE(rows[r].size() == actual.cols());
      for (std::size_t c = 0; c < actual.cols(); ++c) {
        INFO("n=" << n << " m=" << m << " i=" << i << " (" << r << "," << c << ")");
        REQUIRE(actual(r, c) == element_from_json(ctx, rows[r][c]));
      }
    }
    ++checked;
  }
  CHECK(checked == 2 * (1 + 2 + 3));
}

TEST_CASE("generator examples", "[braid]") {
  auto a = generator_matrix(3, 1, 1);
  auto b = generator_matrix(3, 2, 1);
  CHECK(a * b * a == b * a * b);
  CHECK(generator_matrix(4, 1, 1) * generator_matrix(4, 3, 1) == generator_matrix(4, 3, 1) * generator_matrix(4, 1, 1));
  auto one = generator_matrix(2, 1, 2);
  REQUIRE(one.rows() == 1);
  CHECK(is_unit(one(0, 0)));
  CHECK_THROWS_AS(generator_matrix(3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(1, 1, 1), std::invalid_argument);
}

TEST_CASE("words", "[braid]") {
  auto w = BraidWord::parse(4, "1,-2,3");
  CHECK(w.letters == std::vector<int>{1, -2, 3});
  CHECK(w.inverse().letters == std::vector<int>{-3, 2, -1});
  CHECK(BraidWord::parse(3, "").letters.empty());
  CHECK_THROWS_AS(BraidWord::parse(3, "1,3"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::parse(3, "1,0"), std::invalid_argument);
  CHECK_THROWS(BraidWord::parse(3, "1,a"));
  CHECK(w.str() == "1,-2,3");
  for (int m = 1; m <= 2; ++m) CHECK(evaluate_word(BraidWord{4, {}}, m).is_identity());
}

TEST_CASE("group law on random words", "[braid]") {
  Rng rng(31);
  for (int m = 1; m <= 2; ++m) {
    for (int n = 2; n <= 5; ++n) {
      auto rho = Representation::lawrence_bigelow(n, m);
      for (int t = 0; t < 25; ++t) {
        auto w = random_word(n, 8, rng);
        REQUIRE(rho.evaluate(w * w.inverse()).is_identity());
        REQUIRE(rho.evaluate(w) * rho.evaluate(w.inverse()) == RingMatrix::identity(rho.context(), rho.dimension()));
      }
    }
  }
}

TEST_CASE("full twist is central", "[braid]") {
  for (int m = 1; m <= 2; ++m) {
    for (int n = 2; n <= 4; ++n) {
      auto rho = Representation::lawrence_bigelow(n, m);
      BraidWord cycle{n, {}};
      for (int i = 1; i < n; ++i) cycle.letters.push_back(i);
      auto twist = power(rho.evaluate(cycle), n);
      for (int i = 1; i < n; ++i) REQUIRE(twist * rho.letter(i) == rho.letter(i) * twist);
    }
  }
}

TEST_CASE("dual representation", "[braid]") {
  auto rho = Representation::lawrence_bigelow(4, 2);
  auto dual = Representation::dual(rho);
  CHECK(dual.evaluate(BraidWord{4, {}}).is_identity());
  for (int i = 1; i <= 2; ++i) {
    REQUIRE(dual.letter(i) * dual.letter(i + 1) * dual.letter(i) ==
            dual.letter(i + 1) * dual.letter(i) * dual.letter(i + 1));
  }
  CHECK(dual.letter(1) * dual.letter(3) == dual.letter(3) * dual.letter(1));

  Rng rng(41);
  auto burau = Representation::lawrence_bigelow(3, 1);
  auto burau_dual = Representation::dual(burau);
  for (int t = 0; t < 50; ++t) {
    auto w = random_word(3, 8, rng);
    REQUIRE((burau.evaluate(w).involution().transpose() * burau_dual.evaluate(w)).is_identity());
  }
}

TEST_CASE("diagonal conjugation integrality", "[braid]") {
  CHECK(diagonal_conjugation_integrality(3, 2).integral);
  CHECK(diagonal_conjugation_integrality(4, 2).integral);
  CHECK(diagonal_conjugation_integrality(4, 1).integral);

  // A diagonal that does not divide the off-diagonal entries.
  auto ctx = make_context(CoefficientRing::integers(), {"x", "d"});
  RingMatrix m(ctx, 2, 2);
  m(0, 0) = m(1, 1) = GroupRingElement::integer(ctx, 1);
  m(1, 0) = GroupRingElement::integer(ctx, 1);
  auto two = parse_element(ctx, "1 + d");
  auto cert = conjugation_integrality({m}, {GroupRingElement::integer(ctx, 1), two});
  CHECK_FALSE(cert.integral);
  REQUIRE(cert.failures.size() == 1);
  CHECK(cert.failures[0].generator == 1);
  CHECK(cert.failures[0].row == 1);
  CHECK(cert.failures[0].col == 0);
  CHECK_THROWS_AS(conjugation_integrality({m}, {GroupRingElement(ctx), two}), std::domain_error);
}

TEST_CASE("complex specialization keeps relations", "[braid]") {
  auto cctx = make_context(CoefficientRing::complex_approx(), {});
  auto rho = Representation::lawrence_bigelow(4, 2).specialize({{"x", Complex(0.3, 1.7)}, {"d", Complex(-0.6, 0.45)}},
                                                               cctx);
  for (int i = 1; i <= 2; ++i) {
    REQUIRE(rho.letter(i) * rho.letter(i + 1) * rho.letter(i) == rho.letter(i + 1) * rho.letter(i) * rho.letter(i + 1));
  }
  REQUIRE((rho.letter(1) * rho.letter(-1)).is_identity());
}
