#ifndef IDEALEXT_BACKSLASH_HPP
#define IDEALEXT_BACKSLASH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idealext/extnat.hpp"
#include "idealext/monoid.hpp"
#include "idealext/numsgp.hpp"
#include "idealext/rational.hpp"

namespace idealext {

/// S_J(T) = {0} ∪ {x ∈ ℕ^d : |x|_J ∈ T*}, where |x|_J sums the coordinates in J.
class BackslashMonoid : public Monoid {
 public:
  /// `axes` is J, 0-based. A weight vector other than the indicator of J is
  /// rejected with Unsupported.
  BackslashMonoid(std::size_t dim, std::vector<std::size_t> axes, NumericalSemigroup t,
                  std::optional<std::vector<std::uint64_t>> weights = std::nullopt);

  std::size_t dim() const override { return dim_; }
  std::string kind() const override { return "backslash"; }
  const std::vector<std::size_t>& axes() const { return axes_; }
  const NumericalSemigroup& semigroup() const { return t_; }
  bool full_support() const { return axes_.size() == dim_; }

  std::uint64_t j_norm(const Vec& x) const;
  bool contains(const Vec& x) const override;
  bool is_atom(const Vec& x) const override;
  std::vector<Vec> atoms_in_box(const Box& b) const override;
  /// Finite only when J = I.
  std::optional<std::vector<Vec>> finite_gaps() const override;
  std::optional<std::vector<Vec>> finite_atoms() const override;

  /// The same monoid as an ideal extension; only for ordinary T.
  std::optional<IdealExtension> as_ideal_extension() const;

 private:
  std::size_t dim_;
  std::vector<std::size_t> axes_;
  std::vector<char> in_j_;
  NumericalSemigroup t_;
};

inline bool bs_contains(const BackslashMonoid& b, const Vec& x) {
  b.require_dim(x);
  return b.contains(x);
}

struct BsMinimals {
  std::vector<Vec> vectors;
  /// False when T is not ordinary: the description is then unproven.
  bool proven = true;
  std::string note;
};

/// Vectors supported on J with |m|_J = min T*.
BsMinimals bs_minimals(const BackslashMonoid& b);
std::vector<Vec> bs_atoms_in_box(const BackslashMonoid& b, const Box& box);
/// 𝖫(s) = 𝖫_T(|s|_J)
std::vector<std::uint64_t> bs_lengths(const BackslashMonoid& b, const Vec& s);

/// One invariant of the summary. `status` is "exact", "box-relative" or
/// "unknown"; `note` says where the value comes from.
template <typename T>
struct BsField {
  std::optional<T> value;
  std::string status = "unknown";
  std::string note;
};

struct BsSummary {
  BsField<Rational> elasticity;
  BsField<Rational> length_density;
  BsField<ExtNat> catenary;
  BsField<ExtNat> omega;
  bool gap_absorbing = false;
};

struct BsSummaryOptions {
  /// Box for the generic catenary fallback; none means "unknown" there.
  std::optional<Vec> box;
  /// Elements of T scanned for the length density infimum.
  std::uint64_t ld_bound = 200;
  unsigned threads = 1;
};

BsSummary bs_invariant_summary(const BackslashMonoid& b, const BsSummaryOptions& opt = {});

}  // namespace idealext

#endif  // IDEALEXT_BACKSLASH_HPP
