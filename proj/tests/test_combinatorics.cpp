#include "doctest.h"
#include "prook/combinatorics.hpp"

using namespace prook;

namespace {

// Pascal's triangle by additions only.
std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST_CASE("binomial agrees with Pascal's triangle") {
  const auto t = pascal(40);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("multinomial") {
  const std::vector<int> a{2, 1, 1};
  CHECK(multinomial(a) == 12);
  const std::vector<int> b{0, 0, 0};
  CHECK(multinomial(b) == 1);
  const std::vector<int> c{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(multinomial(c).str() == "1124000727777607680000");  // 22!
  const std::vector<int> neg{-1, 2};
  CHECK(multinomial(neg) == 0);
}

TEST_CASE("compositions are complete, distinct and colex ordered") {
  for (int parts = 1; parts <= 5; ++parts)
    for (int n = 0; n <= 6; ++n) {
      const auto comps = compositions(n, parts);
      CHECK(BigInt(comps.size()) == binomial(n + parts - 1, parts - 1));
      for (std::size_t i = 1; i < comps.size(); ++i) CHECK(colex_less(comps[i - 1], comps[i]));
      for (const auto& comp : comps) {
        int sum = 0;
        for (int x : comp) sum += x;
        CHECK(sum == n);
      }
    }
  const auto level1 = compositions(1, 3);
  REQUIRE(level1.size() == 3);
  CHECK(level1[0] == std::vector<int>{1, 0, 0});
  CHECK(level1[1] == std::vector<int>{0, 1, 0});
  CHECK(level1[2] == std::vector<int>{0, 0, 1});
  CHECK(compositions(0, 0).size() == 1);
}

TEST_CASE("join_bar") {
  const std::vector<int> v{2, 0, 1};
  CHECK(join_bar(v) == "2|0|1");
  CHECK(join_bar(std::vector<int>{}).empty());
}
