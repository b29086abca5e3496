#ifndef IDEALEXT_FACTOR_HPP
#define IDEALEXT_FACTOR_HPP

#include <compare>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "idealext/lattice.hpp"
#include "idealext/monoid.hpp"
#include "idealext/rational.hpp"

namespace idealext {

/// A lexicographically sorted list of distinct nonzero atoms.
class AtomBasis {
 public:
  AtomBasis() = default;
  explicit AtomBasis(std::vector<Vec> atoms);

  const std::vector<Vec>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  std::size_t dim() const { return dim_; }
  const Vec& operator[](std::size_t i) const { return atoms_[i]; }
  std::optional<std::size_t> index_of(const Vec& a) const;
  /// Identifies the basis; factorizations over different bases never mix.
  std::uint64_t id() const { return id_; }

 private:
  std::vector<Vec> atoms_;
  std::size_t dim_ = 0;
  std::uint64_t id_ = 0;
};

/// Atoms of `s` lying in ⟦0, top⟧.
AtomBasis basis_below(const Monoid& s, const Vec& top);

/// Sparse exponent vector over an AtomBasis.
class Factorization {
 public:
  using Entry = std::pair<std::uint32_t, std::uint64_t>;

  Factorization() = default;
  Factorization(std::uint64_t basis_id, std::vector<Entry> entries);

  std::uint64_t basis_id() const { return basis_id_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t length() const { return length_; }
  std::uint64_t count(std::uint32_t index) const;
  std::vector<std::uint64_t> dense(std::size_t basis_size) const;
  Vec evaluate(const AtomBasis& basis) const;
  bool is_empty() const { return entries_.empty(); }

  /// Lexicographic order of the dense exponent vectors.
  friend std::strong_ordering operator<=>(const Factorization& a, const Factorization& b);
  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.basis_id_ == b.basis_id_ && a.entries_ == b.entries_;
  }

 private:
  std::uint64_t basis_id_ = 0;
  std::vector<Entry> entries_;
  std::uint64_t length_ = 0;
};

/// Every factorization of s over the basis, ordered by dense exponent vector.
std::vector<Factorization> factorizations(const AtomBasis& basis, const Vec& s);

/// Sorted set of lengths; throws NoFactorization when s has none.
std::vector<std::uint64_t> lengths(const AtomBasis& basis, const Vec& s);
std::uint64_t ell(const AtomBasis& basis, const Vec& s);
std::vector<std::uint64_t> delta_elem(const AtomBasis& basis, const Vec& s);
Rational elasticity_elem(const AtomBasis& basis, const Vec& s);
/// (|𝖫| − 1)/(max 𝖫 − min 𝖫); LdUndefined when |𝖫| < 2.
Rational ld_elem(const AtomBasis& basis, const Vec& s);

std::vector<std::uint64_t> lengths_of(std::span<const Factorization> zs);
Rational ld_of_lengths(const std::vector<std::uint64_t>& l);

/// max{|u − u∧v|, |v − u∧v|}
std::uint64_t distance(const Factorization& u, const Factorization& v);

/// Classes of the "shares an atom" closure, as index lists into zs; classes are
/// ordered by their smallest member.
std::vector<std::vector<std::size_t>> r_classes(std::span<const Factorization> zs);

/// Length sets of every point of ⟦0, top⟧ with respect to a fixed atom list.
class LengthTable {
 public:
  LengthTable(const AtomBasis& basis, const Vec& top);

  const Box& box() const { return box_; }
  bool factorable(const Vec& x) const { return sets_[box_.index(x)].any(); }
  std::vector<std::uint64_t> lengths(const Vec& x) const;
  std::optional<std::uint64_t> min_length(const Vec& x) const;

 private:
  Box box_;
  std::vector<boost::dynamic_bitset<>> sets_;
};

/// The monoid generated by a finite set of vectors, with its minimal
/// generating set as atoms. Membership is memoized over a growing box.
class AtomBasisMonoid : public Monoid {
 public:
  explicit AtomBasisMonoid(std::vector<Vec> generators);
  AtomBasisMonoid(const AtomBasisMonoid& other) : Monoid(other), basis_(other.basis_), dim_(other.dim_) {}

  const AtomBasis& basis() const { return basis_; }
  std::size_t dim() const override { return dim_; }
  std::string kind() const override { return "atoms"; }
  bool contains(const Vec& x) const override;
  bool is_atom(const Vec& x) const override;
  std::vector<Vec> atoms_in_box(const Box& b) const override;
  std::optional<std::vector<Vec>> finite_gaps() const override { return std::nullopt; }
  std::optional<std::vector<Vec>> finite_atoms() const override { return basis_.atoms(); }

 private:
  AtomBasis basis_;
  std::size_t dim_ = 0;
  mutable std::mutex mu_;
  mutable std::optional<BoxTable<std::uint8_t>> member_;
};

}  // namespace idealext

#endif  // IDEALEXT_FACTOR_HPP
