#ifndef IDEALEXT_INVARIANTS_HPP
#define IDEALEXT_INVARIANTS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealext/extnat.hpp"
#include "idealext/factor.hpp"
#include "idealext/lattice.hpp"
#include "idealext/monoid.hpp"

namespace idealext {

enum class Provenance { Exact, BoxRelative };
std::string_view to_string(Provenance p);

struct BettiGraph {
  Vec element;
  std::vector<Vec> vertices;
  /// Index pairs into `vertices`, i < j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Index lists, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components;

  bool is_betti() const { return components.size() >= 2; }
};

BettiGraph betti_graph(const Monoid& s, const Vec& x);

/// Connectivity test of G_x with edges discovered lazily. `atoms` must
/// contain every atom below x (extra entries are ignored).
bool is_betti(const Monoid& s, std::span<const Vec> atoms, const Vec& x);

struct BettiResult {
  std::vector<Vec> elements;
  Provenance provenance = Provenance::Exact;
  std::string justification;
};

/// Complete Betti set of a verified gap-absorbing ideal extension.
BettiResult betti_elements(const IdealExtension& s);
/// Betti elements lying in the box, for any monoid.
BettiResult betti_in_box(const Monoid& s, const Box& box, unsigned threads = 1);

struct CorePieces {
  std::vector<Vec> b1, b2, b3, b4, core_betti;
  /// Sorted union of all five parts.
  std::vector<Vec> all;
};

CorePieces betti_core_decomposition(const IdealExtension& s);

/// Bottleneck value of the complete distance graph on zs (0 for |zs| ≤ 1).
std::uint64_t catenary_of(std::span<const Factorization> zs);
std::uint64_t catenary_elem(const Monoid& s, const Vec& x);
/// max over R-classes of the minimum length in the class.
std::uint64_t catenary_rclass_formula(std::span<const Factorization> zs);

struct CatenaryResult {
  std::uint64_t value = 0;
  Provenance provenance = Provenance::Exact;
  std::optional<Vec> attained_at;
};

CatenaryResult catenary_over(const Monoid& s, std::span<const Vec> betti, Provenance p);
CatenaryResult catenary_monoid(const IdealExtension& s);
CatenaryResult catenary_monoid_in_box(const Monoid& s, const Box& box, unsigned threads = 1);

struct DeltaResult {
  std::vector<std::uint64_t> values;
  Provenance provenance = Provenance::Exact;
};

DeltaResult delta_over(const Monoid& s, std::span<const Vec> betti, Provenance p);
DeltaResult delta_monoid(const IdealExtension& s);
DeltaResult delta_monoid_in_box(const Monoid& s, const Box& box, unsigned threads = 1);

struct OmegaOptions {
  /// Longest cover explored; defaults to ‖s‖₁ + 1.
  std::optional<std::uint64_t> cap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct OmegaResult {
  ExtNat value;
  ExtNat lower_bound;
  ExtNat upper_bound;
  /// Dense exponent vectors over `basis` of the bullets attaining the value.
  std::vector<std::vector<std::uint64_t>> witnesses;
  std::vector<Vec> basis;
  std::optional<Vec> attained_at;
  std::optional<std::size_t> infinite_axis;
};

/// Raised when an OmegaOptions deadline passes mid-search.
class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

OmegaResult omega_elem(const IdealExtension& s, const Vec& x, const OmegaOptions& opt = {});
/// (lower, upper) for an atom.
std::pair<std::uint64_t, std::uint64_t> omega_bounds(const IdealExtension& s, const Vec& a);
/// sup{2‖r‖₁ − 1 : r extreme ray}, when there are at least two extreme rays.
std::optional<std::uint64_t> omega_extreme_ray_bound(const IdealExtension& s);
OmegaResult omega_monoid(const IdealExtension& s, const OmegaOptions& opt = {});

/// ≤-maximal elements of a finite set, sorted.
std::vector<Vec> maximals_of(std::span<const Vec> vs);

/// Given a ≤ Σ family, indices of at most ‖a‖₁ members whose sum still dominates a.
std::vector<std::size_t> dominating_subfamily(const Vec& a, std::span<const Vec> family);

struct UfMismatch {
  std::string lemma;
  Vec element;
  bool unique;
  bool predicted;
};

struct UfReport {
  std::size_t checked_core_2a = 0;
  std::size_t checked_noncore_2a = 0;
  std::size_t checked_core_long = 0;
  std::vector<UfMismatch> mismatches;
};

/// Compares "has a unique factorization" with the classification lemmas on
/// 2𝒜 and on the elements of ⟦0, 3g⟧ with ℓ ≥ 3 (g the join of the atoms).
UfReport unique_factorization_predicates(const IdealExtension& s);

}  // namespace idealext

#endif  // IDEALEXT_INVARIANTS_HPP
