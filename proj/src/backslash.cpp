#include "idealext/backslash.hpp"

#include <algorithm>

#include "idealext/error.hpp"
#include "idealext/factor.hpp"
#include "idealext/invariants.hpp"

namespace idealext {

BackslashMonoid::BackslashMonoid(std::size_t dim, std::vector<std::size_t> axes, NumericalSemigroup t,
                                 std::optional<std::vector<std::uint64_t>> weights)
    : dim_(dim), axes_(std::move(axes)), in_j_(dim, 0), t_(std::move(t)) {
  if (weights) throw Error(ErrorCode::Unsupported, "general weight vectors are not supported; give J instead");
  if (dim == 0) throw Error(ErrorCode::InvalidSpec, "dimension must be positive");
  if (axes_.empty()) throw Error(ErrorCode::InvalidSpec, "J must be nonempty");
  std::sort(axes_.begin(), axes_.end());
  if (std::adjacent_find(axes_.begin(), axes_.end()) != axes_.end())
    throw Error(ErrorCode::InvalidSpec, "J has a repeated axis");
  for (std::size_t j : axes_) {
    if (j >= dim) throw Error(ErrorCode::InvalidSpec, "axis " + std::to_string(j + 1) + " outside 1.." + std::to_string(dim));
    in_j_[j] = 1;
  }
}

std::uint64_t BackslashMonoid::j_norm(const Vec& x) const {
  require_dim(x);
  std::uint64_t n = 0;
  for (std::size_t j : axes_) {
    if (x[j] > UINT64_MAX - n) throw Error(ErrorCode::Overflow, "|x|_J overflows");
    n += x[j];
  }
  return n;
}

bool BackslashMonoid::contains(const Vec& x) const {
  if (x.is_zero()) return true;
  std::uint64_t n = j_norm(x);
  return n != 0 && t_.contains(n);
}

bool BackslashMonoid::is_atom(const Vec& x) const {
  if (x.is_zero()) return false;
  return t_.is_atom(j_norm(x));
}

std::vector<Vec> BackslashMonoid::atoms_in_box(const Box& b) const {
  if (b.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "box dimension");
  std::vector<Vec> out;
  for (const Vec& x : b)
    if (is_atom(x)) out.push_back(x);
  return out;
}

std::optional<std::vector<Vec>> BackslashMonoid::finite_gaps() const {
  if (!full_support()) return std::nullopt;
  std::vector<Vec> out;
  auto f = t_.frobenius();
  if (!f) return out;
  for (const Vec& x : Box::below(scale(Vec(std::vector<Coord>(dim_, 1)), *f)))
    if (!contains(x)) out.push_back(x);
  return out;
}

std::optional<std::vector<Vec>> BackslashMonoid::finite_atoms() const {
  if (!full_support()) return std::nullopt;
  return atoms_in_box(Box::below(scale(Vec(std::vector<Coord>(dim_, 1)), t_.atoms().back())));
}

std::optional<IdealExtension> BackslashMonoid::as_ideal_extension() const {
  if (!t_.ordinary_multiplicity()) return std::nullopt;
  auto mins = bs_minimals(*this).vectors;
  return IdealExtension::from_minimals(dim_, mins);
}

BsMinimals bs_minimals(const BackslashMonoid& b) {
  BsMinimals r;
  const std::uint64_t m = b.semigroup().multiplicity();
  Vec hi(b.dim());
  for (std::size_t j : b.axes()) hi[j] = m;
  for (const Vec& x : Box::below(hi))
    if (b.j_norm(x) == m) r.vectors.push_back(x);
  if (!b.semigroup().ordinary_multiplicity()) {
    r.proven = false;
    r.note = "this description of the minimal elements is proven only for ordinary T";
  }
  return r;
}

std::vector<Vec> bs_atoms_in_box(const BackslashMonoid& b, const Box& box) { return b.atoms_in_box(box); }

std::vector<std::uint64_t> bs_lengths(const BackslashMonoid& b, const Vec& s) {
  b.require_dim(s);
  if (!b.contains(s)) throw Error(ErrorCode::NotMember, to_string(s) + " is not in S");
  return ns_lengths(b.semigroup(), b.j_norm(s));
}

BsSummary bs_invariant_summary(const BackslashMonoid& b, const BsSummaryOptions& opt) {
  BsSummary r;
  const auto& t = b.semigroup();
  const auto ord = t.ordinary_multiplicity();
  const std::uint64_t m = t.multiplicity();
  const bool full = b.full_support();
  r.gap_absorbing = ord.has_value();

  // ρ(S) = ρ(T), and ρ(T) = max atom / min atom for numerical semigroups.
  r.elasticity.value = Rational(static_cast<std::int64_t>(t.atoms().back()), static_cast<std::int64_t>(m));
  r.elasticity.status = "exact";
  r.elasticity.note = "rho(S) = rho(T) = max A(T) / min A(T)";

  std::optional<Rational> ld;
  for (std::uint64_t n = 1; n <= opt.ld_bound; ++n) {
    if (!t.contains(n)) continue;
    auto l = ns_lengths(t, n);
    if (l.size() < 2) continue;
    Rational v = ld_of_lengths(l);
    if (!ld || v < *ld) ld = v;
  }
  r.length_density.value = ld;
  r.length_density.status = ld ? "box-relative" : "unknown";
  r.length_density.note = "LD(S) = LD(T); infimum over n <= " + std::to_string(opt.ld_bound) + " in T with |L(n)| >= 2";

  if (ord && m >= 2) {
    r.catenary.value = ExtNat(3);
    r.catenary.status = "exact";
    r.catenary.note = "ordinary T with m >= 2: c(S) = 3";
  } else if (ord && full) {
    r.catenary.value = ExtNat(0);
    r.catenary.status = "exact";
    r.catenary.note = "T = N and J = I: S is free";
  } else if (opt.box) {
    auto c = catenary_monoid_in_box(b, Box::below(*opt.box), opt.threads);
    r.catenary.value = ExtNat(c.value);
    r.catenary.status = "box-relative";
    r.catenary.note = "lower bound from the Betti elements in [0, " + to_string(*opt.box) + "]";
  } else {
    r.catenary.note = "no closed form here; give a box for a box-relative value";
  }

  if (!ord) {
    r.omega.note = "no closed form for non-ordinary T";
  } else if (b.dim() == 1) {
    r.omega.value = ExtNat(m >= 2 ? 3 : 1);
    r.omega.status = "exact";
    r.omega.note = m >= 2 ? "ordinary numerical semigroup: omega = 3" : "T = N is free";
  } else if (!full) {
    r.omega.value = ExtNat::infinity();
    r.omega.status = "exact";
    r.omega.note = "J is a proper subset of I: omega = infinity";
  } else {
    r.omega.value = ExtNat(2 * m - 1);
    r.omega.status = "exact";
    r.omega.note = m >= 2 ? "J = I: omega = 2m - 1" : "T = N and J = I: S is free";
  }
  return r;
}

}  // namespace idealext
