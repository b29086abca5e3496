#ifndef IDEALEXT_MONOID_HPP
#define IDEALEXT_MONOID_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealext/extnat.hpp"
#include "idealext/lattice.hpp"

namespace idealext {

/// Membership-oracle view of a submonoid of ℕ^d. The generic engines
/// (GA checks, Betti scans, factorizations in boxes) only talk to this.
class Monoid {
 public:
  virtual ~Monoid() = default;

  virtual std::size_t dim() const = 0;
  virtual std::string kind() const = 0;
  virtual bool contains(const Vec& x) const = 0;
  virtual bool is_atom(const Vec& x) const = 0;
  /// Atoms inside b, lexicographically sorted. The default scans the box.
  virtual std::vector<Vec> atoms_in_box(const Box& b) const;
  /// Whole gap / atom sets, when they are finite and known.
  virtual std::optional<std::vector<Vec>> finite_gaps() const = 0;
  virtual std::optional<std::vector<Vec>> finite_atoms() const = 0;

  void require_dim(const Vec& x) const;
};

struct GapReport {
  /// cᵢ = min{k : k·eᵢ ∈ S}
  std::vector<ExtNat> thresholds;
  std::vector<std::size_t> infinite_axes;
  /// Sorted; only filled when finite.
  std::vector<Vec> gaps;

  bool finite() const { return infinite_axes.empty(); }
};

class IdealExtension;

struct CoreDecomposition {
  /// L = {i : eᵢ ∈ ℳ(S)}
  std::vector<std::size_t> unit_axes;
  /// I ∖ L, in increasing order; the coordinates of the core.
  std::vector<std::size_t> core_axes;
  /// Absent when the core is the trivial monoid {0}.
  std::shared_ptr<const IdealExtension> core;

  Vec project(const Vec& x) const;
  Vec embed(const Vec& y, std::size_t dim) const;
};

/// S = {0} ∪ (ℳ + ℕ^d) for a finite antichain ℳ of nonzero vectors.
class IdealExtension : public Monoid {
 public:
  /// Dominated inputs are dropped; they are reported through `dropped` if given.
  static IdealExtension from_minimals(std::size_t dim, std::span<const Vec> vs, std::vector<Vec>* dropped = nullptr);

  std::size_t dim() const override { return dim_; }
  std::string kind() const override { return "ideal_extension"; }
  const std::vector<Vec>& minimals() const { return minimals_; }

  bool contains(const Vec& x) const override;
  /// x ∈ ℳ + ℕ^d
  bool in_ideal(const Vec& x) const;
  /// x ∈ 2ℳ + ℕ^d
  bool in_double_ideal(const Vec& x) const;
  bool is_atom(const Vec& x) const override;

  const std::vector<ExtNat>& axis_thresholds() const { return thresholds_; }
  bool has_finite_gaps() const;
  const GapReport& gaps() const;
  /// Throws InfinitelyManyAtoms when the gap set is infinite.
  const std::vector<Vec>& atoms() const;
  std::vector<Vec> atoms_in_box(const Box& b) const override;
  std::optional<std::vector<Vec>> finite_gaps() const override;
  std::optional<std::vector<Vec>> finite_atoms() const override;

  std::vector<Vec> extreme_rays() const;
  CoreDecomposition core() const;

 private:
  struct Cache;

  IdealExtension(std::size_t dim, std::vector<Vec> minimals);

  std::size_t dim_;
  std::vector<Vec> minimals_;
  std::vector<Vec> double_minimals_;
  std::vector<ExtNat> thresholds_;
  std::shared_ptr<Cache> cache_;
};

inline IdealExtension ideal_from_minimals(std::size_t dim, std::span<const Vec> vs, std::vector<Vec>* dropped = nullptr) {
  return IdealExtension::from_minimals(dim, vs, dropped);
}

/// x ∈ 2𝒜: some atom a ≤ x leaves an atom x − a.
bool in_two_atoms(const Monoid& s, std::span<const Vec> atoms, const Vec& x);

struct GaResult {
  bool holds = true;
  /// "GA1" (gap + gap) or "GA2" (gap + atom) for the first violation.
  std::string rule;
  Vec lhs, rhs;
};

/// Checks 2ℋ ⊆ ℋ ∪ 𝒜 ∪ 2𝒜 and ℋ + 𝒜 ⊆ 𝒜 ∪ 2𝒜. Needs finite gap and atom sets.
GaResult is_gap_absorbing(const Monoid& s);
/// The same rules restricted to gaps and atoms inside the box.
GaResult is_gap_absorbing_in_box(const Monoid& s, const Box& box);

struct IntervalResult {
  bool holds = true;
  /// u ≤ w ≤ v with u, v ∈ 2𝒜 and w ∉ 2𝒜.
  Vec u, w, v;
};

/// All sums of two atoms, sorted.
std::vector<Vec> two_atom_sums(std::span<const Vec> atoms);

IntervalResult check_2A_interval_closed(const Monoid& s);
/// Only u, v ∈ 2𝒜 inside the box are considered.
IntervalResult check_2A_interval_closed_in_box(const Monoid& s, const Box& box);

/// Column profile of a two-dimensional ideal extension along `axis`
/// (0-based): v is the other coordinate, t = the `axis` coordinate.
class PiProfile {
 public:
  PiProfile(const IdealExtension& s, std::size_t axis, std::uint64_t v_max);

  std::size_t axis() const { return axis_; }
  std::uint64_t v_max() const { return v_max_; }
  const std::vector<ExtNat>& pi1() const { return pi1_; }
  const std::vector<ExtNat>& pi2() const { return pi2_; }

  /// Values for any v, not only those tabulated.
  ExtNat pi1_at(std::uint64_t v) const;
  ExtNat pi2_at(std::uint64_t v) const;

  /// A = {v : π¹_v < ∞, π²_v ≠ 0} is an interval [a_min, a_max]; a_max may be ∞.
  std::uint64_t a_min() const { return a_min_; }
  ExtNat a_max() const { return a_max_; }
  bool in_A(std::uint64_t v) const;

  /// (v, t) in the original coordinate order.
  Vec point(std::uint64_t v, std::uint64_t t) const;

 private:
  std::size_t axis_;
  std::uint64_t v_max_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> mins_;  // (v, t) per minimal
  std::vector<ExtNat> pi1_, pi2_;
  std::uint64_t a_min_ = 0;
  ExtNat a_max_;
};

PiProfile pi_profile(const IdealExtension& s, std::size_t axis, std::uint64_t v_max);

struct ColumnInterval {
  std::uint64_t lo;
  ExtNat hi;
};

/// [m_z, M_z] when z ∈ A + A.
std::optional<ColumnInterval> two_atom_column(const PiProfile& p, std::uint64_t z);

}  // namespace idealext

#endif  // IDEALEXT_MONOID_HPP
