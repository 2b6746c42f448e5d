#include "catch_amalgamated.hpp"

#include "lbrep/surface.hpp"

using namespace lbrep;

TEST_CASE("basis examples", "[surface]") {
  auto b = basis(SurfaceTriad{0, 3, 0, 1}, Side::in, Flavour::locally_finite);
  REQUIRE(b.size() == 2);
  CHECK(b[0].label() == "D[1,0]@in");
  CHECK(b[1].label() == "D[0,1]@in");
  CHECK(basis(SurfaceTriad{0, 4, 0, 2}, Side::out, Flavour::locally_finite).size() == 6);
  SurfaceTriad torus{1, 1, 1, 1};
  CHECK(torus.arc_count() == 3);
  CHECK(basis(torus, Side::in, Flavour::relative).size() == 3);
}

TEST_CASE("families", "[surface]") {
  SurfaceTriad t{0, 3, 0, 2};
  CHECK(basis(t, Side::in, Flavour::relative)[0].family() == "U");
  CHECK(basis(t, Side::in, Flavour::locally_finite)[0].family() == "D");
  CHECK(basis(t, Side::out, Flavour::locally_finite)[0].family() == "V");
  CHECK(basis(t, Side::out, Flavour::relative)[0].family() == "G");
  CHECK(basis(t, Side::out, Flavour::lf_image)[0].family() == "Ut");
  CHECK(basis(t, Side::in, Flavour::lf_image)[0].family() == "Gt");
}

TEST_CASE("dimension", "[surface]") {
  CHECK(dimension(SurfaceTriad{0, 2, 0, 1}) == 1);
  CHECK(dimension(SurfaceTriad{0, 5, 0, 2}) == 10);
  CHECK(dimension(SurfaceTriad{0, 3, 1, 2}) == 6);
  for (int n = 2; n <= 12; ++n) {
    REQUIRE(dimension(SurfaceTriad{0, n, 0, 1}) == static_cast<std::uint64_t>(n - 1));
    REQUIRE(dimension(SurfaceTriad{0, n, 0, 2}) == static_cast<std::uint64_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("all four bases have the same size", "[surface]") {
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 0; k <= 3; ++k) {
        for (int m = 1; m <= 5; ++m) {
          SurfaceTriad t{g, n, k, m};
          if (t.arc_count() < 1 || t.arc_count() > 6) continue;
          const auto d = dimension(t);
          for (auto side : {Side::in, Side::out}) {
            for (auto f : {Flavour::relative, Flavour::locally_finite}) REQUIRE(basis(t, side, f).size() == d);
          }
        }
      }
    }
  }
}

TEST_CASE("triad validation", "[surface]") {
  CHECK_THROWS_AS(dimension(SurfaceTriad{0, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dimension(SurfaceTriad{0, 0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dimension(SurfaceTriad{0, 3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dimension(SurfaceTriad{-1, 3, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_side("middle"), std::invalid_argument);
}

TEST_CASE("local systems", "[surface]") {
  auto s1 = LocalSystemSpec::standard(1);
  CHECK(s1.homogeneity_unit().is_one());
  CHECK(s1.lattice_rank() == 1);
  auto s2 = LocalSystemSpec::standard(2);
  CHECK(s2.homogeneity_unit() == GroupRingElement::variable(s2.context(), "d"));
  auto ctx = s2.context();
  CHECK_THROWS_AS(LocalSystemSpec::with_unit(ctx, parse_element(ctx, "1 + d"), 2), std::invalid_argument);
  CHECK_THROWS_AS(LocalSystemSpec::with_unit(ctx, parse_element(ctx, "d"), 1), std::invalid_argument);
  CHECK_THROWS_AS(LocalSystemSpec::with_unit(ctx, parse_element(ctx, "2*d"), 2), std::invalid_argument);
}
