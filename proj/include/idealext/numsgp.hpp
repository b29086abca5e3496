#ifndef IDEALEXT_NUMSGP_HPP
#define IDEALEXT_NUMSGP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "idealext/rational.hpp"

namespace idealext {

/// A numerical semigroup T ⊆ ℕ, stored by its finite gap set.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_gaps(std::vector<std::uint64_t> gaps);
  static NumericalSemigroup from_generators(std::vector<std::uint64_t> gens);
  /// {0} ∪ (m + ℕ)
  static NumericalSemigroup ordinary(std::uint64_t m);

  const std::vector<std::uint64_t>& gaps() const { return gaps_; }
  const std::vector<std::uint64_t>& atoms() const { return atoms_; }
  std::uint64_t multiplicity() const { return multiplicity_; }
  /// Largest gap; absent for T = ℕ.
  std::optional<std::uint64_t> frobenius() const;

  bool contains(std::uint64_t n) const;
  bool is_atom(std::uint64_t n) const;
  /// m with T = {0} ∪ (m + ℕ), if T has that shape.
  std::optional<std::uint64_t> ordinary_multiplicity() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gaps_ == b.gaps_; }

 private:
  explicit NumericalSemigroup(std::vector<std::uint64_t> gaps);

  std::vector<std::uint64_t> gaps_;
  std::uint64_t multiplicity_ = 1;
  std::vector<std::uint64_t> atoms_;
};

inline NumericalSemigroup ns_from_gaps(std::vector<std::uint64_t> gaps) {
  return NumericalSemigroup::from_gaps(std::move(gaps));
}
inline NumericalSemigroup ns_from_generators(std::vector<std::uint64_t> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}
inline std::optional<std::uint64_t> ns_is_ordinary(const NumericalSemigroup& t) { return t.ordinary_multiplicity(); }

struct NsLength {
  std::uint64_t length;
  /// Minimal generators summing to n, non-decreasing.
  std::vector<std::uint64_t> witness;
};

/// Every length of n together with one explicit generator multiset per length.
std::vector<NsLength> ns_lengths_witnessed(const NumericalSemigroup& t, std::uint64_t n);
std::vector<std::uint64_t> ns_lengths(const NumericalSemigroup& t, std::uint64_t n);
std::vector<std::uint64_t> ns_delta(const NumericalSemigroup& t, std::uint64_t n);
Rational ns_elasticity_elem(const NumericalSemigroup& t, std::uint64_t n);
/// sup of ρ(n) over the nonzero elements n ≤ bound.
Rational ns_elasticity_scan(const NumericalSemigroup& t, std::uint64_t bound);

/// Successive differences of a sorted set.
std::vector<std::uint64_t> successive_differences(const std::vector<std::uint64_t>& sorted);

}  // namespace idealext

#endif  // IDEALEXT_NUMSGP_HPP
