#include "catch_amalgamated.hpp"

#include "lbrep/pairing.hpp"
#include "lbrep/random.hpp"

#include <algorithm>
#include <numeric>

using namespace lbrep;

namespace {

GroupRingElement factorial_product(const Composition& e, const GroupRingElement& u) {
  auto w = GroupRingElement::integer(u.context(), 1);
  for (int p : e.parts()) w *= quantum_factorial(p, u);
  return w;
}

}  // namespace

TEST_CASE("delta pairing examples", "[pairing]") {
  SurfaceTriad t{0, 3, 0, 2};
  auto p = delta_pairing(t, Side::in, LocalSystemSpec::standard(2));
  CHECK(p.entries.rows() == 3);
  CHECK(p.entries.is_identity());
  CHECK(p.rows[0].family() == "D");
  CHECK(p.cols[0].family() == "U");
  // <D_(2,0), U_(0,2)>
  CHECK(p.entries(rank(Composition({2, 0})), rank(Composition({0, 2}))).is_zero());
  auto q = delta_pairing(SurfaceTriad{0, 2, 0, 1}, Side::out, LocalSystemSpec::standard(1));
  CHECK(q.entries.rows() == 1);
  CHECK(q.entries.is_identity());
  CHECK(q.rows[0].family() == "V");
  CHECK(q.cols[0].family() == "G");
}

TEST_CASE("delta pairing is order independent", "[pairing]") {
  auto p = delta_pairing(SurfaceTriad{0, 4, 0, 2}, Side::in, LocalSystemSpec::standard(2)).entries;
  std::vector<std::size_t> perm(p.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RingMatrix q(p.context(), p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (std::size_t j = 0; j < p.cols(); ++j) q(i, j) = p(perm[i], perm[j]);
    }
    REQUIRE(q.is_identity());
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("local intersection sums", "[pairing]") {
  auto sys = LocalSystemSpec::standard(2);
  const auto& u = sys.homogeneity_unit();
  auto one = GroupRingElement::integer(sys.context(), 1);
  CHECK(local_intersection_sum(2, u) == one + u);
  CHECK(local_intersection_sum(0, u).is_one());
  CHECK(local_intersection_sum(4, one) == GroupRingElement::integer(sys.context(), 24));
  for (int r = 0; r <= 7; ++r) REQUIRE(local_intersection_sum(r, u) == quantum_factorial(r, u));
}

TEST_CASE("geometric pairing examples", "[pairing]") {
  auto sys = LocalSystemSpec::standard(3);
  const auto& u = sys.homogeneity_unit();
  auto ctx = sys.context();
  SurfaceTriad t{0, 3, 0, 3};
  BasisClass ut21{Side::out, Flavour::lf_image, Composition({2, 1})};
  BasisClass g21{Side::out, Flavour::relative, Composition({2, 1})};
  CHECK(geometric_pairing(t, Side::out, ut21, g21, sys) == parse_element(ctx, "1 + d"));

  auto sys2 = LocalSystemSpec::standard(2);
  SurfaceTriad t2{0, 3, 0, 2};
  BasisClass ut11{Side::out, Flavour::lf_image, Composition({1, 1})};
  BasisClass g20{Side::out, Flavour::relative, Composition({2, 0})};
  CHECK(geometric_pairing(t2, Side::out, ut11, g20, sys2).is_zero());

  SurfaceTriad t1{0, 2, 0, 3};
  BasisClass ut3{Side::out, Flavour::lf_image, Composition({3})};
  BasisClass g3{Side::out, Flavour::relative, Composition({3})};
  CHECK(geometric_pairing(t1, Side::out, ut3, g3, sys) == parse_element(ctx, "1 + 2*d + 2*d^2 + d^3"));
  CHECK(intersection_points(Composition({3}), Composition({3}), u).size() == 6);

  BasisClass gt3{Side::in, Flavour::lf_image, Composition({3})};
  BasisClass u3{Side::in, Flavour::relative, Composition({3})};
  CHECK(geometric_pairing(t1, Side::in, gt3, u3, sys) == quantum_factorial(3, u));
}

TEST_CASE("geometric pairing rejects bad inputs", "[pairing]") {
  auto sys = LocalSystemSpec::standard(2);
  SurfaceTriad t{0, 3, 0, 2};
  BasisClass ut{Side::out, Flavour::lf_image, Composition({1, 1})};
  BasisClass g{Side::out, Flavour::relative, Composition({1, 1})};
  BasisClass g3{Side::out, Flavour::relative, Composition({1, 1, 0})};
  BasisClass v{Side::out, Flavour::locally_finite, Composition({1, 1})};
  CHECK_THROWS_AS(geometric_pairing(t, Side::out, ut, g3, sys), std::invalid_argument);
  CHECK_THROWS_AS(geometric_pairing(t, Side::out, v, g, sys), std::invalid_argument);
  CHECK_THROWS_AS(geometric_pairing(t, Side::in, ut, g, sys), std::invalid_argument);
}

TEST_CASE("geometric pairing matches the closed form", "[pairing]") {
  for (int l = 1; l <= 4; ++l) {
    for (int m = 1; m <= 4; ++m) {
      SurfaceTriad t{0, l + 1, 0, m};
      auto sys = LocalSystemSpec::standard(m);
      for (auto side : {Side::in, Side::out}) {
        auto p = geometric_pairing_matrix(t, side, sys);
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
          for (std::size_t j = 0; j < p.cols.size(); ++j) {
            auto expected = i == j ? factorial_product(p.rows[i].composition, sys.homogeneity_unit())
                                   : GroupRingElement(sys.context());
            REQUIRE(p.entries(i, j) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("sign conventions", "[pairing]") {
  auto sys = LocalSystemSpec::standard(2);
  auto pts = intersection_points(Composition({2}), Composition({2}), sys.homogeneity_unit(),
                                 SignConvention::permutation_sign);
  REQUIRE(pts.size() == 2);
  int total = 0;
  for (const auto& p : pts) total += p.sign;
  CHECK(total == 0);
  CHECK(intersection_points(Composition({2, 0}), Composition({1, 1}), sys.homogeneity_unit()).empty());
}

TEST_CASE("sesquilinearity", "[pairing]") {
  auto sys = LocalSystemSpec::standard(2);
  auto ctx = sys.context();
  auto p = delta_pairing(SurfaceTriad{0, 3, 0, 2}, Side::in, sys).entries;
  Rng rng(17);
  auto vec = [&] {
    std::vector<GroupRingElement> v;
    for (std::size_t i = 0; i < p.rows(); ++i) v.push_back(random_element(ctx, rng, 2, 2));
    return v;
  };
  auto scale = [](std::vector<GroupRingElement> v, const GroupRingElement& r) {
    for (auto& x : v) x = r * x;
    return v;
  };
  for (int t = 0; t < 200; ++t) {
    auto r = random_element(ctx, rng, 2, 2);
    auto v = vec();
    auto w = vec();
    auto base = pair(p, v, w);
    REQUIRE(pair(p, scale(v, r), w) == r.involution() * base);
    REQUIRE(pair(p, v, scale(w, r)) == r * base);
  }
}
