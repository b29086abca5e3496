#ifndef IDEALEXT_TESTS_HELPERS_HPP
#define IDEALEXT_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "idealext/harness.hpp"
#include "idealext/lattice.hpp"
#include "idealext/monoid.hpp"
#include "oracles.hpp"

namespace testing {

using idealext::Vec;

inline oracle::P to_p(const Vec& v) { return oracle::P(v.begin(), v.end()); }
inline Vec to_vec(const oracle::P& p) { return Vec(std::vector<idealext::Coord>(p.begin(), p.end())); }

inline std::vector<oracle::P> to_ps(const std::vector<Vec>& vs) {
  std::vector<oracle::P> out;
  for (const Vec& v : vs) out.push_back(to_p(v));
  return out;
}

inline std::vector<Vec> to_vecs(const std::vector<oracle::P>& ps) {
  std::vector<Vec> out;
  for (const auto& p : ps) out.push_back(to_vec(p));
  return out;
}

inline oracle::Member member_of(const idealext::Monoid& s) {
  return [&s](const oracle::P& x) { return s.contains(to_vec(x)); };
}

inline idealext::IdealExtension ie(std::vector<Vec> mins) {
  return idealext::IdealExtension::from_minimals(mins.front().dim(), mins);
}

/// Seeded random ideal extension; `finite` forces pure-axis minimals.
inline idealext::IdealExtension random_ie(std::uint64_t seed, std::uint64_t i, std::size_t dim, idealext::Coord max_coord,
                                          bool finite) {
  auto rng = idealext::trial_rng(seed, i);
  return idealext::random_ideal_extension(rng, dim, max_coord, finite ? 1.0 : 0.0);
}

inline std::string data(const std::string& name) { return std::string(IDEALEXT_TEST_DATA) + "/" + name; }

}  // namespace testing

#endif  // IDEALEXT_TESTS_HELPERS_HPP
