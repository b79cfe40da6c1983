#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "prook/diagram.hpp"

using namespace prook;

namespace {

// The 4-vertex example: rows (0,u1,0,0), (0,0,u2,0), (0,0,0,0), (u1,0,0,0).
Diagram four_vertex_example() { return Diagram(4, 2, {{1, 2, 1}, {2, 3, 2}, {4, 1, 1}}); }

// The product example in R_{3,2}.
Diagram d1() { return from_matrix(2, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }
Diagram d2() { return from_matrix(2, {{0, 1, 0}, {0, 0, 0}, {2, 0, 0}}); }

// The 5-vertex example with u1 solid and u2 dotted.
Diagram five_vertex_example() {
  return Diagram(5, 2, {{1, 2, 2}, {2, 1, 1}, {3, 3, 2}, {5, 5, 1}});
}

// Independent planarity test: no two edges of one color cross.
bool planar_oracle(const Diagram& d) {
  const auto e = d.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].color == e[j].color && (e[i].top - e[j].top) * (e[i].bottom - e[j].bottom) <= 0)
        return false;
  return true;
}

// Every rook diagram of R_{n,c}: each top vertex is isolated or picks an
// unused bottom vertex and a color.
void all_rook(int n, int c, int top, std::vector<char>& used, std::vector<Edge>& edges,
              std::vector<Diagram>& out) {
  if (top > n) {
    out.emplace_back(n, c, edges);
    return;
  }
  all_rook(n, c, top + 1, used, edges, out);
  for (int b = 1; b <= n; ++b) {
    if (used[b]) continue;
    used[b] = 1;
    for (int k = 1; k <= c; ++k) {
      edges.push_back({top, b, k});
      all_rook(n, c, top + 1, used, edges, out);
      edges.pop_back();
    }
    used[b] = 0;
  }
}

std::vector<Diagram> rook_monoid(int n, int c) {
  std::vector<Diagram> out;
  std::vector<char> used(n + 1, 0);
  std::vector<Edge> edges;
  all_rook(n, c, 1, used, edges, out);
  return out;
}

}  // namespace

TEST_CASE("new diagram validates and canonicalizes") {
  const Diagram d = four_vertex_example();
  CHECK(d.n() == 4);
  CHECK(d.size() == 3);
  CHECK(to_matrix(d) == std::vector<std::vector<int>>{{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
  // Input order does not matter.
  CHECK(Diagram(4, 2, {{4, 1, 1}, {2, 3, 2}, {1, 2, 1}}) == d);
  CHECK(Diagram::empty(3, 1).size() == 0);
  CHECK(Diagram(3, 1, {}) == Diagram::empty(3, 1));
}

TEST_CASE("new diagram rejects each kind of bad edge") {
  auto message = [](auto&& f) {
    try {
      f();
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message([] { Diagram(2, 2, {{1, 1, 1}, {1, 2, 2}}); }) ==
        "duplicate top index 1 in edge 1-2:2");
  CHECK(message([] { Diagram(2, 2, {{1, 1, 1}, {2, 1, 2}}); }) ==
        "duplicate bottom index 1 in edge 2-1:2");
  CHECK(message([] { Diagram(2, 1, {{0, 1, 1}}); }) == "top index out of range in edge 0-1:1");
  CHECK(message([] { Diagram(2, 1, {{1, 3, 1}}); }) == "bottom index out of range in edge 1-3:1");
  CHECK(message([] { Diagram(2, 1, {{1, 1, 2}}); }) == "color out of range in edge 1-1:2");
  CHECK_THROWS_AS(Diagram(0, 1, {{1, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(Diagram(1, 0, {}), ValidationError);
}

TEST_CASE("planarity") {
  CHECK_FALSE(is_planar(d1()));
  CHECK(is_planar(d2()));
  CHECK(is_planar(multiply(d1(), d2())));
  // Different colors may cross.
  CHECK(is_planar(Diagram(2, 2, {{1, 2, 1}, {2, 1, 2}})));
  CHECK_FALSE(is_planar(Diagram(2, 1, {{1, 2, 1}, {2, 1, 1}})));
  for (const auto& d : rook_monoid(3, 2)) CHECK(is_planar(d) == planar_oracle(d));
}

TEST_CASE("multiply") {
  CHECK(multiply(d1(), d2()) == Diagram(3, 2, {{1, 2, 1}}));
  const auto all = rook_monoid(3, 2);
  for (const auto& d : all) CHECK(multiply(d, Diagram::empty(3, 2)).size() == 0);
  CHECK_THROWS_AS(multiply(Diagram::empty(2, 1), Diagram::empty(3, 1)), MismatchError);
  CHECK_THROWS_AS(multiply(Diagram::empty(2, 1), Diagram::empty(2, 2)), MismatchError);

  const auto ps = enumerate_planar(3, 2);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      const Diagram p = multiply(a, b);
      REQUIRE(p.size() <= std::min(a.size(), b.size()));
      REQUIRE(is_planar(p));
    }
}

TEST_CASE("associativity, exhaustive on P_{2,2} and sampled on P_{4,3}") {
  const auto small = enumerate_planar(2, 2);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  const auto big = enumerate_planar(4, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
  for (int s = 0; s < 2000; ++s) {
    const auto &a = big[pick(rng)], &b = big[pick(rng)], &c = big[pick(rng)];
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("tau and beta") {
  const Diagram d = five_vertex_example();
  CHECK(tau(d) == Profile(5, 2, {{4}, {2, 5}, {1, 3}}));
  CHECK(beta(d) == Profile(5, 2, {{4}, {1, 5}, {2, 3}}));
  CHECK(tau(Diagram::empty(3, 2)) == Profile(3, 2, {{1, 2, 3}, {}, {}}));
  for (const auto& a : enumerate_planar(3, 2)) CHECK(tau(a).sizes() == beta(a).sizes());
}

TEST_CASE("profiles validate") {
  CHECK_THROWS_AS(Profile(3, 1, {{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(Profile(3, 1, {{1}, {2}}), ValidationError);
  CHECK_THROWS_AS(Profile(3, 1, {{1, 2, 3}}), ValidationError);
  CHECK_THROWS_AS(Profile(3, 1, {{1, 2, 4}, {}}), ValidationError);
  const Profile p(4, 2, {{3, 1}, {4}, {2}});
  CHECK(p.part(0) == std::vector<int>{1, 3});
  CHECK(p.role_of(4) == 1);
  CHECK(to_string(p) == "({1,3},{4},{2})");
}

TEST_CASE("from_profiles") {
  const Diagram d = five_vertex_example();
  CHECK(from_profiles(Profile(5, 2, {{4}, {2, 5}, {1, 3}}), Profile(5, 2, {{4}, {1, 5}, {2, 3}})) == d);
  const Profile all_isolated(3, 2, {{1, 2, 3}, {}, {}});
  CHECK(from_profiles(all_isolated, all_isolated) == Diagram::empty(3, 2));
  CHECK_THROWS_AS(from_profiles(Profile(2, 1, {{1}, {2}}), Profile(2, 1, {{}, {1, 2}})), ValidationError);
  for (const auto& a : enumerate_planar(4, 2)) REQUIRE(from_profiles(tau(a), beta(a)) == a);
}

TEST_CASE("enumerate_planar") {
  for (int c = 1; c <= 4; ++c) CHECK(enumerate_planar(1, c).size() == static_cast<std::size_t>(c + 1));
  for (int c = 1; c <= 3; ++c) {
    const auto zero = enumerate_planar(0, c);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Diagram::empty(0, c));
  }
  CHECK(enumerate_planar(2, 1).size() == 6);

  // Against brute force over all rook diagrams.
  for (int n = 0; n <= 3; ++n)
    for (int c = 1; c <= 3; ++c) {
      std::set<Diagram> expected;
      for (const auto& d : rook_monoid(n, c))
        if (planar_oracle(d)) expected.insert(d);
      const auto got = enumerate_planar(n, c);
      CHECK(std::set<Diagram>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
      CHECK(BigInt(got.size()) == cardinality(n, c));
      CHECK(std::is_sorted(got.begin(), got.end(), enumeration_less));
    }
}

TEST_CASE("enumeration order: composition colex, then top, then bottom") {
  const auto ds = enumerate_planar(1, 2);
  REQUIRE(ds.size() == 3);
  CHECK(ds[0] == Diagram::empty(1, 2));
  CHECK(ds[1] == Diagram(1, 2, {{1, 1, 1}}));
  CHECK(ds[2] == Diagram(1, 2, {{1, 1, 2}}));
  const auto two = enumerate_planar(2, 1);
  CHECK(two[0] == Diagram::empty(2, 1));
  // composition (1,1): top {1} isolated first, so tops are {2} then {1}.
  CHECK(two[1] == Diagram(2, 1, {{2, 2, 1}}));
  CHECK(two[2] == Diagram(2, 1, {{2, 1, 1}}));
  CHECK(two[3] == Diagram(2, 1, {{1, 2, 1}}));
  CHECK(two[4] == Diagram(2, 1, {{1, 1, 1}}));
  CHECK(two[5] == Diagram(2, 1, {{1, 1, 1}, {2, 2, 1}}));
}

TEST_CASE("cardinality") {
  CHECK(cardinality(2, 1) == 6);
  for (int c = 1; c <= 5; ++c) CHECK(cardinality(0, c) == 1);
  CHECK(cardinality(5, 3) == 31504);
  CHECK_THROWS_AS(require_within_cap(5, 3, 1000), CapExceeded);
  CHECK_NOTHROW(require_within_cap(5, 3, 31504));
}

TEST_CASE("tensor") {
  const Diagram d = five_vertex_example();
  CHECK(tensor(d, Diagram::empty(0, 2)) == d);
  CHECK(tensor(Diagram::empty(0, 2), d) == d);
  const Diagram i1(1, 1, {{1, 1, 1}});
  CHECK(tensor(i1, Diagram::empty(1, 1)) == Diagram(2, 1, {{1, 1, 1}}));
  CHECK(tensor(Diagram::empty(1, 1), i1) == Diagram(2, 1, {{2, 2, 1}}));
  CHECK_THROWS_AS(tensor(i1, Diagram::empty(1, 2)), MismatchError);
  const auto r = rook_monoid(2, 2);
  for (const auto& a : r)
    for (const auto& b : r) REQUIRE(is_planar(tensor(a, b)) == (is_planar(a) && is_planar(b)));
}

TEST_CASE("vertical_subdiagram") {
  const Diagram id(3, 2, {{1, 1, 1}, {2, 2, 2}, {3, 3, 1}});
  CHECK(vertical_subdiagram(id) == id);
  CHECK(vertical_subdiagram(Diagram(2, 1, {{1, 2, 1}})) == Diagram::empty(2, 1));
  CHECK(vertical_subdiagram(five_vertex_example()) == Diagram(5, 2, {{3, 3, 2}, {5, 5, 1}}));
}

TEST_CASE("subdiagrams") {
  const Diagram d = five_vertex_example();
  const auto subs = subdiagrams(d);
  CHECK(subs.size() == 16);
  CHECK(std::set<Diagram>(subs.begin(), subs.end()).size() == 16);
  for (const auto& s : subs) CHECK(is_subdiagram(s, d));
  CHECK_FALSE(is_subdiagram(Diagram(5, 2, {{1, 2, 1}}), d));
}

TEST_CASE("text form") {
  CHECK(to_string(Diagram(3, 2, {{1, 2, 1}})) == "n=3 c=2 [1-2:1]");
  CHECK(to_string(Diagram::empty(2, 1)) == "n=2 c=1 []");
  CHECK(parse_diagram("  n = 3c=2[ 2-3 :2 ,1-2:1 ]  ") == Diagram(3, 2, {{1, 2, 1}, {2, 3, 2}}));
  for (const auto& d : rook_monoid(3, 2)) REQUIRE(parse_diagram(to_string(d)) == d);

  try {
    parse_diagram("n=3 c=2 [1-2;1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(parse_diagram("n=3 c=2 [1-2:1] extra"), ParseError);
  CHECK_THROWS_AS(parse_diagram("n=3 c=2 [1-2:1"), ParseError);
  CHECK_THROWS_AS(parse_diagram("n=3 c=2 [1-2:1, 1-3:1]"), ValidationError);
}

TEST_CASE("matrix form") {
  CHECK(matrix_to_string(multiply(d1(), d2())) == "0 u1 0\n0 0 0\n0 0 0\n");
  for (const auto& d : rook_monoid(2, 2)) CHECK(from_matrix(2, to_matrix(d)) == d);
  CHECK_THROWS_AS(from_matrix(1, {{1, 1}, {0, 0}}), ValidationError);
}

TEST_CASE("hash is consistent with equality") {
  std::hash<Diagram> h;
  const auto ds = enumerate_planar(3, 2);
  for (const auto& d : ds) CHECK(h(d) == h(parse_diagram(to_string(d))));
  std::set<std::size_t> hashes;
  for (const auto& d : ds) hashes.insert(h(d));
  CHECK(hashes.size() > ds.size() / 2);
}
