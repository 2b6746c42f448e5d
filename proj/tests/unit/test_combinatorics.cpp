#include "catch_amalgamated.hpp"

#include "lbrep/combinatorics.hpp"

#include <set>

using namespace lbrep;

namespace {

// Recursive listing on the last part, which is also colex order.
void colex(int l, int m, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (l == 1) {
    std::vector<int> c{m};
    c.insert(c.end(), suffix.begin(), suffix.end());
    out.push_back(c);
    return;
  }
  for (int last = 0; last <= m; ++last) {
    suffix.insert(suffix.begin(), last);
    colex(l - 1, m - last, suffix, out);
    suffix.erase(suffix.begin());
  }
}

}  // namespace

TEST_CASE("small enumerations", "[combinatorics]") {
  auto e = enumerate_compositions(2, 2);
  REQUIRE(e.size() == 3);
  CHECK(e[0].parts() == std::vector<int>{2, 0});
  CHECK(e[1].parts() == std::vector<int>{1, 1});
  CHECK(e[2].parts() == std::vector<int>{0, 2});
  auto one = enumerate_compositions(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == std::vector<int>{5});
  CHECK(enumerate_compositions(3, 2).size() == 6);
  CHECK(enumerate_compositions(4, 0).size() == 1);
}

TEST_CASE("rank and unrank", "[combinatorics]") {
  CHECK(rank(Composition({2, 0})) == 0);
  CHECK(unrank(2, 2, 2).parts() == std::vector<int>{0, 2});
  CHECK_THROWS_AS(unrank(3, 2, 2), std::out_of_range);
  for (int l = 1; l <= 5; ++l) {
    for (int m = 0; m <= 5; ++m) {
      auto all = enumerate_compositions(l, m);
      for (std::size_t i = 0; i < all.size(); ++i) {
        REQUIRE(rank(all[i]) == i);
        REQUIRE(unrank(i, l, m) == all[i]);
      }
    }
  }
}

TEST_CASE("cardinality and order against a recursive oracle", "[combinatorics]") {
  for (int l = 1; l <= 8; ++l) {
    for (int m = 0; m <= 8; ++m) {
      std::vector<std::vector<int>> expected;
      std::vector<int> suffix;
      colex(l, m, suffix, expected);
      auto got = enumerate_compositions(l, m);
      REQUIRE(got.size() == expected.size());
      REQUIRE(composition_count(l, m) == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].parts() == expected[i]);
      // A second run gives the same order.
      REQUIRE(enumerate_compositions(l, m) == got);
    }
  }
}

TEST_CASE("composition validation", "[combinatorics]") {
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
  CHECK(Composition({2, 0, 1}).str() == "[2,0,1]");
  CHECK(Composition({2, 0, 1}).total() == 3);
  CHECK_THROWS(composition_count(0, 1));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  CHECK(inversion_count({2, 0, 1}) == 2);
}
