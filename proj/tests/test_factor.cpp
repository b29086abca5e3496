#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "idealext/error.hpp"
#include "idealext/factor.hpp"

using namespace idealext;
using namespace testing;

namespace {

std::vector<Vec> e3_atoms() {
  std::vector<Vec> g;
  for (Coord i = 20; i <= 23; ++i) {
    g.push_back({i, 3});
    g.push_back({i, 4});
  }
  return g;
}

// Maps a dense vector over `from` onto the order of `to`.
std::vector<std::uint64_t> reorder(const std::vector<std::uint64_t>& z, const std::vector<Vec>& from, const AtomBasis& to) {
  std::vector<std::uint64_t> out(to.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) out[*to.index_of(from[i])] = z[i];
  return out;
}

}  // namespace

TEST_CASE("E1: the three factorizations of (2,4)") {
  auto s = ie({{2, 0}, {1, 2}, {0, 3}});
  AtomBasis basis(s.atoms());
  std::vector<Vec> listed_order{{0, 3}, {1, 2}, {0, 5}, {0, 4}, {3, 0}, {2, 0}, {1, 3}, {2, 1}, {1, 4}, {2, 2}, {3, 1}};
  std::vector<std::vector<std::uint64_t>> listed{
      {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}};
  std::set<std::vector<std::uint64_t>> expect;
  for (const auto& z : listed) expect.insert(reorder(z, listed_order, basis));
  auto zs = factorizations(basis, Vec{2, 4});
  std::set<std::vector<std::uint64_t>> got;
  for (const auto& z : zs) {
    got.insert(z.dense(basis.size()));
    CHECK(z.evaluate(basis) == Vec{2, 4});
    CHECK(z.length() == 2);
  }
  CHECK(got == expect);
  CHECK(std::is_sorted(zs.begin(), zs.end()));
  CHECK(lengths(basis, Vec{2, 4}) == std::vector<std::uint64_t>{2});
  CHECK(elasticity_elem(basis, Vec{2, 4}) == Rational(1));
  CHECK(r_classes(zs).size() == 3);
  CHECK(distance(zs[0], zs[1]) == 2);
}

TEST_CASE("E3: factorizations and length invariants of (161,28)") {
  AtomBasis basis(e3_atoms());
  auto zs = factorizations(basis, Vec{161, 28});
  std::vector<std::vector<std::uint64_t>> listed{{0, 0, 0, 0, 0, 0, 0, 7}, {3, 4, 1, 0, 0, 0, 0, 0}, {4, 3, 0, 1, 0, 0, 0, 0}};
  REQUIRE(zs.size() == 3);
  std::set<std::vector<std::uint64_t>> got;
  for (const auto& z : zs) got.insert(z.dense(8));
  CHECK(got == std::set<std::vector<std::uint64_t>>(listed.begin(), listed.end()));
  CHECK(lengths(basis, Vec{161, 28}) == std::vector<std::uint64_t>{7, 8});
  CHECK(ell(basis, Vec{161, 28}) == 7);
  CHECK(delta_elem(basis, Vec{161, 28}) == std::vector<std::uint64_t>{1});
  CHECK(elasticity_elem(basis, Vec{161, 28}) == Rational(8, 7));
  CHECK(ld_elem(basis, Vec{161, 28}) == Rational(1));

  auto classes = r_classes(zs);
  REQUIRE(classes.size() == 2);
  Factorization seven(basis.id(), {{7, 7}});
  auto isolated = std::find(zs.begin(), zs.end(), seven) - zs.begin();
  CHECK(std::any_of(classes.begin(), classes.end(),
                    [&](const auto& c) { return c == std::vector<std::size_t>{static_cast<std::size_t>(isolated)}; }));
  for (const auto& z : zs)
    if (z != seven) CHECK(distance(seven, z) == 8);
}

TEST_CASE("degenerate inputs") {
  AtomBasis basis(e3_atoms());
  auto zero = factorizations(basis, Vec{0, 0});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_empty());
  CHECK(factorizations(basis, Vec{1, 1}).empty());
  CHECK_THROWS_AS(lengths(basis, Vec{1, 1}), Error);
  CHECK_THROWS_AS(ld_elem(basis, Vec{20, 3}), Error);
  CHECK(lengths(basis, Vec{20, 3}) == std::vector<std::uint64_t>{1});
  CHECK(delta_elem(basis, Vec{20, 3}).empty());

  AtomBasis other(std::vector<Vec>{{1, 0}, {0, 1}});
  auto a = factorizations(basis, Vec{20, 3});
  auto b = factorizations(other, Vec{1, 1});
  CHECK_THROWS_AS(distance(a[0], b[0]), Error);
  CHECK_THROWS_AS(a[0].evaluate(other), Error);
  CHECK_THROWS_AS(AtomBasis(std::vector<Vec>{{1, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(AtomBasis(std::vector<Vec>{{0, 0}}), Error);
}

TEST_CASE("factorizations agree with the brute-force table") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    std::size_t d = 2 + i % 2;
    auto s = random_ie(71, i, d, 3, true);
    if (s.atoms().size() > 6) continue;
    AtomBasis basis(s.atoms());
    oracle::P hi(d, d == 2 ? 10 : 5);
    auto table = oracle::factorization_table(to_ps(basis.atoms()), hi);
    LengthTable lt(basis, to_vec(hi));
    for (const Vec& x : Box::below(to_vec(hi))) {
      auto zs = factorizations(basis, x);
      std::vector<oracle::P> got;
      for (const auto& z : zs) got.push_back(z.dense(basis.size()));
      auto it = table.find(to_p(x));
      auto ref = it == table.end() ? std::vector<oracle::P>{} : it->second;
      CHECK(got == ref);
      auto ls = oracle::lengths(ref);
      CHECK(lt.lengths(x) == std::vector<std::uint64_t>(ls.begin(), ls.end()));
      CHECK(lt.factorable(x) == !ref.empty());
    }
  }
}

TEST_CASE("distance is a metric on Z(s)") {
  AtomBasis basis(e3_atoms());
  for (Vec s : {Vec{161, 28}, Vec{120, 20}, Vec{130, 21}, Vec{88, 14}}) {
    auto zs = factorizations(basis, s);
    for (const auto& u : zs) {
      CHECK(distance(u, u) == 0);
      for (const auto& v : zs) {
        CHECK(distance(u, v) == distance(v, u));
        if (u != v) CHECK(distance(u, v) > 0);
        for (const auto& w : zs) CHECK(distance(u, w) <= distance(u, v) + distance(v, w));
      }
    }
  }
}

TEST_CASE("atom-basis monoid membership and atoms") {
  AtomBasisMonoid m(std::vector<Vec>{{2, 0}, {0, 2}, {1, 1}, {2, 2}, {4, 0}});
  CHECK(m.basis().atoms() == std::vector<Vec>{{0, 2}, {1, 1}, {2, 0}});
  oracle::P hi{8, 8};
  auto table = oracle::factorization_table(to_ps(m.basis().atoms()), hi);
  for (const Vec& x : Box::below(to_vec(hi))) CHECK(m.contains(x) == (table.count(to_p(x)) > 0));
  auto in = member_of(m);
  CHECK(m.atoms_in_box(Box::below(to_vec(hi))) == to_vecs(oracle::atoms(in, hi)));
  CHECK(m.contains(Vec{41, 41}));
  CHECK_FALSE(m.contains(Vec{41, 40}));
  AtomBasisMonoid copy(m);
  CHECK(copy.contains(Vec{3, 1}));
}
