#include <doctest.h>

#include <limits>

#include "helpers.hpp"
#include "idealext/error.hpp"
#include "idealext/lattice.hpp"

using namespace idealext;
using testing::to_p;

TEST_CASE("vector arithmetic and order") {
  Vec a{2, 4}, b{1, 2};
  CHECK(a + b == Vec{3, 6});
  CHECK(a - b == Vec{1, 2});
  CHECK(scale(b, 3) == Vec{3, 6});
  CHECK(leq(b, a));
  CHECK_FALSE(leq(a, b));
  CHECK(join(Vec{3, 0}, Vec{0, 2}) == Vec{3, 2});
  CHECK(meet(Vec{3, 1}, Vec{1, 2}) == Vec{1, 1});
  CHECK(norm1(a) == 6);
  CHECK(support(Vec{0, 3, 0, 1}) == std::vector<std::size_t>{1, 3});
  CHECK(to_string(a) == "(2,4)");
  CHECK(Vec{1, 9} < Vec{2, 0});
  CHECK(Vec::unit(3, 1) == Vec{0, 1, 0});
}

TEST_CASE("checked arithmetic") {
  CHECK_THROWS_AS((Vec{1, 0} - Vec{0, 1}), Error);
  CHECK_THROWS_AS((Vec{1} + Vec{1, 2}), Error);
  const Coord big = std::numeric_limits<Coord>::max();
  CHECK_THROWS_AS((Vec{big} + Vec{1}), Error);
  CHECK_THROWS_AS(scale(Vec{big}, 2), Error);
}

TEST_CASE("box indexing is a bijection in lexicographic order") {
  Box b = Box::below(Vec{2, 3, 1});
  CHECK(b.size() == 24);
  std::size_t i = 0;
  Vec prev;
  for (const Vec& x : b) {
    CHECK(b.index(x) == i);
    CHECK(b.point(i) == x);
    if (i > 0) CHECK(prev < x);
    prev = x;
    ++i;
  }
  CHECK(i == b.size());
  auto ref = oracle::points({2, 3, 1});
  REQUIRE(ref.size() == b.size());
  for (std::size_t k = 0; k < ref.size(); ++k) CHECK(to_p(b.point(k)) == ref[k]);
  CHECK_THROWS_AS(Box(Vec{2, 0}, Vec{1, 5}), Error);
}

TEST_CASE("offset box") {
  Box b(Vec{1, 2}, Vec{2, 4});
  CHECK(b.size() == 6);
  CHECK(b.contains(Vec{2, 3}));
  CHECK_FALSE(b.contains(Vec{0, 3}));
  CHECK(b.point(0) == Vec{1, 2});
  CHECK(b.index(Vec{2, 4}) == 5);
}

TEST_CASE("minimals_of matches brute force") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Coord> c(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> vs;
    for (int k = 0; k < 7; ++k) vs.push_back(Vec{c(rng), c(rng), c(rng)});
    auto mins = minimals_of(vs);
    CHECK(is_antichain(mins));
    CHECK(std::is_sorted(mins.begin(), mins.end()));
    std::vector<Vec> ref;
    for (const Vec& v : vs) {
      bool dominated = false;
      for (const Vec& w : vs) dominated = dominated || (w != v && leq(w, v));
      if (!dominated && std::find(ref.begin(), ref.end(), v) == ref.end()) ref.push_back(v);
    }
    std::sort(ref.begin(), ref.end());
    CHECK(mins == ref);
  }
}
