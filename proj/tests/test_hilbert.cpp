#include <doctest.h>

#include <set>
#include <stdexcept>

#include "subrad/hilbert.hpp"

using namespace subrad;

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(16, 2) == 120);
  CHECK(binomial(16, 3) == 560);
  CHECK(binomial(27, 3) == 2925);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(200, 100) == kBinomialMax);  // saturates, no overflow
}

TEST_CASE("ExcitationConfig validates ordering") {
  CHECK_NOTHROW(ExcitationConfig({1, 2, 3}));
  CHECK_THROWS_AS(ExcitationConfig({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ExcitationConfig({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ExcitationConfig({0, 1}), std::invalid_argument);
}

TEST_CASE("enumerate follows the canonical order") {
  SUBCASE("N=4 M=3") {
    const auto list = HilbertSpace(4, 3).enumerate();
    REQUIRE(list.size() == 4);
    CHECK(list[0] == ExcitationConfig({1, 2, 3}));
    CHECK(list[1] == ExcitationConfig({1, 2, 4}));
    CHECK(list[2] == ExcitationConfig({1, 3, 4}));
    CHECK(list[3] == ExcitationConfig({2, 3, 4}));
  }
  SUBCASE("fully excited is a single configuration") {
    const auto list = HilbertSpace(3, 3).enumerate();
    REQUIRE(list.size() == 1);
    CHECK(list[0] == ExcitationConfig({1, 2, 3}));
  }
  SUBCASE("N=4 M=2") {
    const auto list = HilbertSpace(4, 2).enumerate();
    const std::vector<ExcitationConfig> expected = {
        ExcitationConfig({1, 2}), ExcitationConfig({1, 3}),
        ExcitationConfig({1, 4}), ExcitationConfig({2, 3}),
        ExcitationConfig({2, 4}), ExcitationConfig({3, 4})};
    CHECK(list == expected);
  }
  SUBCASE("single excitation lists sites in order") {
    const auto list = HilbertSpace(7, 1).enumerate();
    REQUIRE(list.size() == 7);
    for (int i = 0; i < 7; ++i)
      CHECK(list[static_cast<std::size_t>(i)] == ExcitationConfig({i + 1}));
  }
}

TEST_CASE("space construction errors") {
  CHECK_THROWS_AS(HilbertSpace(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(HilbertSpace(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(HilbertSpace(30, 15), std::invalid_argument);  // over the cap
  CHECK_NOTHROW(HilbertSpace(30, 15, UINT64_C(200'000'000)));
  CHECK_THROWS_AS(HilbertSpace(16, 3, 500), std::invalid_argument);
}

TEST_CASE("rank matches enumeration position") {
  const HilbertSpace s43(4, 3);
  CHECK(s43.rank(ExcitationConfig({1, 2, 3})) == 1);
  CHECK(s43.rank(ExcitationConfig({2, 3, 4})) == 4);
  const HilbertSpace s42(4, 2);
  CHECK(s42.rank(ExcitationConfig({1, 3})) == 2);
  CHECK_THROWS_AS(s42.rank(ExcitationConfig({1, 5})), std::invalid_argument);
  CHECK_THROWS_AS(s42.rank(ExcitationConfig({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("rank and unrank invert each other exhaustively") {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      const HilbertSpace space(n, m);
      const auto list = space.enumerate();
      REQUIRE(list.size() == space.dim());
      for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(space.rank(list[i]) == i + 1);
        CHECK(space.unrank(i + 1) == list[i]);
      }
    }
  }
}

TEST_CASE("unrank range errors") {
  const HilbertSpace space(5, 2);
  CHECK_THROWS_AS(space.unrank(0), std::invalid_argument);
  CHECK_THROWS_AS(space.unrank(space.dim() + 1), std::invalid_argument);
}

TEST_CASE("sort_pair identifies single-site hops") {
  CHECK(sort_pair(ExcitationConfig({1, 2}), ExcitationConfig({1, 3})) ==
        std::pair{2, 3});
  CHECK(sort_pair(ExcitationConfig({1, 2}), ExcitationConfig({3, 4})) ==
        std::pair{0, 0});
  CHECK(sort_pair(ExcitationConfig({1, 3}), ExcitationConfig({2, 4})) ==
        std::pair{0, 0});
  CHECK_THROWS_AS(sort_pair(ExcitationConfig({1, 2}), ExcitationConfig({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("sort_pair is antisymmetric with a symmetric sentinel") {
  const HilbertSpace space(6, 3);
  const auto list = space.enumerate();
  for (std::size_t n = 0; n < list.size(); ++n) {
    for (std::size_t m = n + 1; m < list.size(); ++m) {
      const auto fwd = sort_pair(list[n], list[m]);
      const auto rev = sort_pair(list[m], list[n]);
      CHECK(rev == std::pair{fwd.second, fwd.first});

      std::set<int> common;
      for (int s : list[n].sites())
        for (int t : list[m].sites())
          if (s == t) common.insert(s);
      const bool single_hop = common.size() == static_cast<std::size_t>(2);
      CHECK((fwd != std::pair{0, 0}) == single_hop);
    }
  }
}

TEST_CASE("phase index sums the excited site labels") {
  CHECK(phase_index(ExcitationConfig({1, 2})) == 3);
  CHECK(phase_index(ExcitationConfig({1, 3})) == 4);
  CHECK(phase_index(ExcitationConfig({2, 3})) == 5);
  CHECK(phase_index(ExcitationConfig({1, 2, 3})) == 6);
}
