#include "idealext/numsgp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "idealext/error.hpp"

namespace idealext {

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> gaps) : gaps_(std::move(gaps)) {
  multiplicity_ = 1;
  while (std::binary_search(gaps_.begin(), gaps_.end(), multiplicity_)) ++multiplicity_;
  // Every atom is at most F + m, where F is the Frobenius number.
  std::uint64_t top = 2 * multiplicity_ + (gaps_.empty() ? 0 : gaps_.back());
  for (std::uint64_t n = multiplicity_; n <= top; ++n) {
    if (!contains(n)) continue;
    bool decomposable = false;
    for (std::uint64_t a = multiplicity_; a + multiplicity_ <= n && !decomposable; ++a)
      decomposable = contains(a) && contains(n - a);
    if (!decomposable) atoms_.push_back(n);
  }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<std::uint64_t> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!gaps.empty() && gaps.front() == 0) throw Error(ErrorCode::InvalidSemigroup, "0 cannot be a gap");
  auto is_gap = [&](std::uint64_t n) { return std::binary_search(gaps.begin(), gaps.end(), n); };
  if (!gaps.empty()) {
    std::uint64_t top = gaps.back();
    for (std::uint64_t a = 1; a <= top; ++a) {
      if (is_gap(a)) continue;
      for (std::uint64_t b = a; a + b <= top; ++b)
        if (!is_gap(b) && is_gap(a + b))
          throw Error(ErrorCode::ComplementNotClosed,
                      std::to_string(a) + " + " + std::to_string(b) + " = " + std::to_string(a + b) + " is a gap");
    }
  }
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::uint64_t> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "no generators");
  if (std::find(gens.begin(), gens.end(), 0) != gens.end()) throw Error(ErrorCode::ZeroGenerator, "generator 0");
  std::uint64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(g));
  auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  std::uint64_t bound = *lo * *hi;
  std::vector<char> reach(bound + 1, 0);
  reach[0] = 1;
  for (std::uint64_t n = 1; n <= bound; ++n)
    for (auto a : gens)
      if (a <= n && reach[n - a]) {
        reach[n] = 1;
        break;
      }
  std::vector<std::uint64_t> gaps;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (!reach[n]) gaps.push_back(n);
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::ordinary(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidSemigroup, "multiplicity must be positive");
  std::vector<std::uint64_t> gaps(m - 1);
  std::iota(gaps.begin(), gaps.end(), 1);
  return NumericalSemigroup(std::move(gaps));
}

std::optional<std::uint64_t> NumericalSemigroup::frobenius() const {
  if (gaps_.empty()) return std::nullopt;
  return gaps_.back();
}

bool NumericalSemigroup::contains(std::uint64_t n) const {
  return n == 0 || !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

bool NumericalSemigroup::is_atom(std::uint64_t n) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), n);
}

std::optional<std::uint64_t> NumericalSemigroup::ordinary_multiplicity() const {
  if (gaps_.size() + 1 == multiplicity_) return multiplicity_;
  return std::nullopt;
}

std::vector<NsLength> ns_lengths_witnessed(const NumericalSemigroup& t, std::uint64_t n) {
  if (!t.contains(n)) throw Error(ErrorCode::NotMember, std::to_string(n) + " is a gap");
  const auto& atoms = t.atoms();
  std::uint64_t max_len = n / t.multiplicity();
  // lens[x] bit k: x is a sum of k minimal generators.
  std::vector<boost::dynamic_bitset<>> lens(n + 1, boost::dynamic_bitset<>(max_len + 1));
  lens[0].set(0);
  for (std::uint64_t x = 1; x <= n; ++x) {
    if (!t.contains(x)) continue;
    for (auto a : atoms) {
      if (a > x) break;
      lens[x] |= lens[x - a] << 1;
    }
  }
  std::vector<NsLength> out;
  for (std::uint64_t k = 0; k <= max_len; ++k) {
    if (!lens[n].test(k)) continue;
    NsLength entry{k, {}};
    std::uint64_t x = n;
    for (std::uint64_t left = k; left > 0; --left) {
      for (auto a : atoms)
        if (a <= x && lens[x - a].test(left - 1)) {
          entry.witness.push_back(a);
          x -= a;
          break;
        }
    }
    std::sort(entry.witness.begin(), entry.witness.end());
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<std::uint64_t> ns_lengths(const NumericalSemigroup& t, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& e : ns_lengths_witnessed(t, n)) out.push_back(e.length);
  return out;
}

std::vector<std::uint64_t> successive_differences(const std::vector<std::uint64_t>& sorted) {
  std::set<std::uint64_t> d;
  for (std::size_t i = 1; i < sorted.size(); ++i) d.insert(sorted[i] - sorted[i - 1]);
  return {d.begin(), d.end()};
}

std::vector<std::uint64_t> ns_delta(const NumericalSemigroup& t, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::NotMember, "0 is not in T*");
  return successive_differences(ns_lengths(t, n));
}

Rational ns_elasticity_elem(const NumericalSemigroup& t, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::NotMember, "0 is not in T*");
  auto l = ns_lengths(t, n);
  return Rational(static_cast<std::int64_t>(l.back()), static_cast<std::int64_t>(l.front()));
}

Rational ns_elasticity_scan(const NumericalSemigroup& t, std::uint64_t bound) {
  Rational best(1);
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (t.contains(n)) best = std::max(best, ns_elasticity_elem(t, n));
  return best;
}

}  // namespace idealext
