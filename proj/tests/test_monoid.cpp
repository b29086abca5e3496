#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "idealext/backslash.hpp"
#include "idealext/error.hpp"
#include "idealext/monoid.hpp"

using namespace idealext;
using namespace testing;

namespace {

std::vector<Vec> e1_atoms_listed() {
  // Reference listing for M = {(2,0),(1,2),(0,3)}, in its printed order.
  return {{0, 3}, {1, 2}, {0, 5}, {0, 4}, {3, 0}, {2, 0}, {1, 3}, {2, 1}, {1, 4}, {2, 2}, {3, 1}};
}

std::set<oracle::P> brute_two_atoms(const std::vector<oracle::P>& as) {
  std::set<oracle::P> out;
  for (const auto& a : as)
    for (const auto& b : as) out.insert(oracle::add(a, b));
  return out;
}

}  // namespace

TEST_CASE("E1 atoms, gaps and thresholds") {
  auto s = ie({{2, 0}, {1, 2}, {0, 3}});
  auto listed = e1_atoms_listed();
  std::sort(listed.begin(), listed.end());
  CHECK(s.atoms() == listed);
  CHECK(s.axis_thresholds() == std::vector<ExtNat>{ExtNat(2), ExtNat(3)});
  CHECK(s.gaps().gaps == std::vector<Vec>{{0, 1}, {0, 2}, {1, 0}, {1, 1}});
  CHECK(s.contains(Vec{0, 0}));
  CHECK_FALSE(s.contains(Vec{1, 1}));
  CHECK(s.is_atom(Vec{3, 1}));
  CHECK_FALSE(s.is_atom(Vec{4, 0}));
}

TEST_CASE("from_minimals drops dominated vectors") {
  std::vector<Vec> dropped;
  std::vector<Vec> in{{2, 0}, {3, 1}, {0, 3}, {2, 0}};
  auto s = IdealExtension::from_minimals(2, in, &dropped);
  CHECK(s.minimals() == std::vector<Vec>{{0, 3}, {2, 0}});
  CHECK(dropped == std::vector<Vec>{{3, 1}});
  CHECK_THROWS_AS(IdealExtension::from_minimals(2, std::vector<Vec>{}), Error);
  CHECK_THROWS_AS(IdealExtension::from_minimals(2, std::vector<Vec>{{0, 0}}), Error);
  CHECK_THROWS_AS(IdealExtension::from_minimals(2, std::vector<Vec>{{1, 0, 0}}), Error);
}

TEST_CASE("E4 has infinite gaps along the first axis") {
  auto s = ie({{0, 1}});
  CHECK_FALSE(s.has_finite_gaps());
  CHECK(s.gaps().infinite_axes == std::vector<std::size_t>{0});
  CHECK(s.axis_thresholds()[0].is_infinite());
  CHECK_THROWS_AS(s.atoms(), Error);
  CHECK(s.atoms_in_box(Box::below(Vec{3, 1})) == std::vector<Vec>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK_THROWS_AS(is_gap_absorbing(s), Error);
}

TEST_CASE("atoms and gaps agree with brute force") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    std::size_t d = 2 + i % 2;
    auto s = random_ie(11, i, d, 3, i % 3 != 0);
    oracle::P hi(d, d == 2 ? 10 : 6);
    auto in = oracle::ideal_member(to_ps(s.minimals()));
    CHECK(s.atoms_in_box(Box::below(to_vec(hi))) == to_vecs(oracle::atoms(in, hi)));
    if (s.has_finite_gaps()) {
      CHECK(s.gaps().gaps == to_vecs(oracle::gaps(in, hi)));
      CHECK(s.atoms() == to_vecs(oracle::atoms(in, hi)));
    }
  }
}

TEST_CASE("core decomposition of the axes") {
  auto s = ie({{1, 0, 0}, {0, 2, 1}, {0, 0, 3}});
  auto c = s.core();
  CHECK(c.unit_axes == std::vector<std::size_t>{0});
  CHECK(c.core_axes == std::vector<std::size_t>{1, 2});
  REQUIRE(c.core);
  CHECK(c.core->minimals() == std::vector<Vec>{{0, 3}, {2, 1}});
  CHECK(c.embed(Vec{2, 1}, 3) == Vec{0, 2, 1});
  CHECK(c.project(Vec{5, 2, 1}) == Vec{2, 1});
  CHECK(s.extreme_rays() == std::vector<Vec>{{0, 0, 3}, {1, 0, 0}});
}

TEST_CASE("gap absorbing: examples") {
  CHECK(is_gap_absorbing(ie({{2, 0}, {1, 2}, {0, 3}})).holds);
  CHECK(is_gap_absorbing(ie({{2, 0}, {0, 3}})).holds);
  BackslashMonoid ord(2, {0, 1}, NumericalSemigroup::ordinary(3));
  CHECK(is_gap_absorbing(ord).holds);
  BackslashMonoid non(2, {0, 1}, ns_from_gaps({1, 2, 4}));
  auto r = is_gap_absorbing(non);
  CHECK_FALSE(r.holds);
  CHECK(r.rule == "GA2");
}

TEST_CASE("every plane ideal extension is gap absorbing with 2A closed under intervals") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto s = random_ie(21, i, 2, 5, true);
    CHECK(is_gap_absorbing(s).holds);
    CHECK(check_2A_interval_closed(s).holds);
  }
}

TEST_CASE("2A interval check agrees with a triple-loop reference") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::size_t d = 2 + i % 2;
    auto s = random_ie(31, i, d, 3, true);
    auto two = brute_two_atoms(to_ps(s.atoms()));
    oracle::P top(d, 0);
    for (const auto& x : two)
      for (std::size_t k = 0; k < d; ++k) top[k] = std::max(top[k], x[k]);
    bool closed = true;
    for (const auto& w : oracle::points(top)) {
      if (two.count(w)) continue;
      bool below = false, above = false;
      for (const auto& x : two) {
        below = below || oracle::le(x, w);
        above = above || oracle::le(w, x);
      }
      if (below && above) closed = false;
    }
    auto r = check_2A_interval_closed(s);
    CHECK(r.holds == closed);
    if (!r.holds) {
      CHECK(leq(r.u, r.w));
      CHECK(leq(r.w, r.v));
    }
  }
}

TEST_CASE("box-relative checks match the exact ones on finite instances") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto s = random_ie(41, i, 2, 4, true);
    Vec g(2);
    for (const Vec& a : s.atoms()) g = join(g, a);
    CHECK(is_gap_absorbing_in_box(s, Box::below(g)).holds == is_gap_absorbing(s).holds);
    CHECK(check_2A_interval_closed_in_box(s, Box::below(scale(g, 2))).holds == check_2A_interval_closed(s).holds);
  }
}

TEST_CASE("pi profile agrees with brute force") {
  for (std::uint64_t i = 0; i < 120; ++i) {
    auto s = random_ie(51, i, 2, 5, i % 2 == 0);
    auto mins = to_ps(s.minimals());
    for (std::size_t axis : {0u, 1u}) {
      const std::uint64_t vmax = 12, tmax = 40;
      auto p = pi_profile(s, axis, vmax);
      auto in = oracle::ideal_member(mins);
      oracle::P hi(2);
      hi[axis] = tmax;
      hi[1 - axis] = vmax;
      auto atoms = oracle::atoms(in, hi);
      for (std::uint64_t v = 0; v <= vmax; ++v) {
        auto r1 = oracle::pi(mins, v, tmax, 1, axis), r2 = oracle::pi(mins, v, tmax, 2, axis);
        CHECK(p.pi1()[v] == (r1 ? ExtNat(*r1) : ExtNat::infinity()));
        CHECK(p.pi2()[v] == (r2 ? ExtNat(*r2) : ExtNat::infinity()));
        CHECK(p.pi1_at(v) == p.pi1()[v]);
        bool has_atom = std::any_of(atoms.begin(), atoms.end(), [&](const oracle::P& a) { return a[1 - axis] == v; });
        CHECK(p.in_A(v) == has_atom);
        if (v > 0) {
          CHECK(p.pi1()[v] <= p.pi1()[v - 1]);
          CHECK(p.pi2()[v] <= p.pi2()[v - 1]);
        }
      }
    }
  }
}

TEST_CASE("two-atom columns are the intervals [m_z, M_z]") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    auto s = random_ie(61, i, 2, 5, true);
    auto two = brute_two_atoms(to_ps(s.atoms()));
    auto p = pi_profile(s, 1, 30);
    for (std::uint64_t z = 0; z <= 20; ++z) {
      std::vector<std::uint64_t> ts;
      for (const auto& x : two)
        if (x[0] == z) ts.push_back(x[1]);
      auto col = two_atom_column(p, z);
      CHECK(col.has_value() == !ts.empty());
      if (!col) continue;
      std::sort(ts.begin(), ts.end());
      CHECK(col->lo == ts.front());
      CHECK(col->hi == ExtNat(ts.back()));
      CHECK(ts.back() - ts.front() + 1 == ts.size());
    }
  }
}

TEST_CASE("pi profile needs dimension 2") {
  CHECK_THROWS_AS(pi_profile(ie({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1, 4), Error);
  CHECK_THROWS_AS(pi_profile(ie({{1, 0}, {0, 1}}), 2, 4), Error);
}
