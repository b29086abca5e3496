#include "idealext/monoid.hpp"

#include <algorithm>
#include <mutex>

#include "idealext/error.hpp"

namespace idealext {

void Monoid::require_dim(const Vec& x) const {
  if (x.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch,
                "element " + to_string(x) + " in a monoid of dimension " + std::to_string(dim()));
}

std::vector<Vec> Monoid::atoms_in_box(const Box& b) const {
  std::vector<Vec> out;
  for (const Vec& x : b)
    if (is_atom(x)) out.push_back(x);
  return out;
}

struct IdealExtension::Cache {
  std::once_flag gaps_once;
  GapReport gaps;
  std::once_flag atoms_once;
  std::vector<Vec> atoms;
};

IdealExtension::IdealExtension(std::size_t dim, std::vector<Vec> minimals)
    : dim_(dim), minimals_(std::move(minimals)), cache_(std::make_shared<Cache>()) {
  std::vector<Vec> sums;
  for (std::size_t i = 0; i < minimals_.size(); ++i)
    for (std::size_t j = i; j < minimals_.size(); ++j) sums.push_back(minimals_[i] + minimals_[j]);
  double_minimals_ = minimals_of(sums);

  thresholds_.assign(dim_, ExtNat::infinity());
  for (const Vec& m : minimals_) {
    auto supp = support(m);
    if (supp.size() == 1) thresholds_[supp[0]] = min(thresholds_[supp[0]], ExtNat(m[supp[0]]));
  }
}

IdealExtension IdealExtension::from_minimals(std::size_t dim, std::span<const Vec> vs, std::vector<Vec>* dropped) {
  if (dim == 0) throw Error(ErrorCode::WrongDimension, "dimension must be at least 1");
  if (vs.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "no minimal elements given");
  for (const Vec& v : vs) {
    if (v.dim() != dim)
      throw Error(ErrorCode::DimensionMismatch, to_string(v) + " does not have dimension " + std::to_string(dim));
    if (v.is_zero()) throw Error(ErrorCode::ZeroGenerator, "the zero vector cannot be a minimal element");
  }
  auto mins = minimals_of(vs);
  if (dropped) {
    dropped->clear();
    std::vector<Vec> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Vec& v : sorted)
      if (!std::binary_search(mins.begin(), mins.end(), v)) dropped->push_back(v);
  }
  return IdealExtension(dim, std::move(mins));
}

bool IdealExtension::in_ideal(const Vec& x) const {
  require_dim(x);
  return std::any_of(minimals_.begin(), minimals_.end(), [&](const Vec& m) { return leq(m, x); });
}

bool IdealExtension::in_double_ideal(const Vec& x) const {
  require_dim(x);
  return std::any_of(double_minimals_.begin(), double_minimals_.end(), [&](const Vec& m) { return leq(m, x); });
}

bool IdealExtension::contains(const Vec& x) const { return x.is_zero() || in_ideal(x); }

// An atom is an element of S* outside S* + S*. Since S* + S* = 2ℳ + ℕ^d,
// the atoms are exactly (ℳ + ℕ^d) ∖ (2ℳ + ℕ^d).
bool IdealExtension::is_atom(const Vec& x) const { return in_ideal(x) && !in_double_ideal(x); }

bool IdealExtension::has_finite_gaps() const {
  return std::all_of(thresholds_.begin(), thresholds_.end(), [](ExtNat c) { return c.is_finite(); });
}

const GapReport& IdealExtension::gaps() const {
  std::call_once(cache_->gaps_once, [this] {
    GapReport& r = cache_->gaps;
    r.thresholds = thresholds_;
    for (std::size_t i = 0; i < dim_; ++i)
      if (thresholds_[i].is_infinite()) r.infinite_axes.push_back(i);
    if (!r.finite()) return;
    Vec hi(dim_);
    for (std::size_t i = 0; i < dim_; ++i) hi[i] = thresholds_[i].value() - 1;
    for (const Vec& x : Box::below(hi))
      if (!contains(x)) r.gaps.push_back(x);
  });
  return cache_->gaps;
}

const std::vector<Vec>& IdealExtension::atoms() const {
  if (!has_finite_gaps())
    throw Error(ErrorCode::InfinitelyManyAtoms, "the gap set is infinite; use a box");
  std::call_once(cache_->atoms_once, [this] {
    // If a is an atom and m ≤ a a minimal, then a − m ∉ S*, so a ∈ ℳ + ({0} ∪ ℋ).
    const auto& gaps = this->gaps().gaps;
    std::vector<Vec> out;
    for (const Vec& m : minimals_) {
      if (!in_double_ideal(m)) out.push_back(m);
      for (const Vec& h : gaps) {
        Vec c = m + h;
        if (!in_double_ideal(c)) out.push_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    cache_->atoms = std::move(out);
  });
  return cache_->atoms;
}

std::vector<Vec> IdealExtension::atoms_in_box(const Box& b) const {
  if (b.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "box dimension");
  if (has_finite_gaps()) {
    std::vector<Vec> out;
    for (const Vec& a : atoms())
      if (b.contains(a)) out.push_back(a);
    return out;
  }
  return Monoid::atoms_in_box(b);
}

std::optional<std::vector<Vec>> IdealExtension::finite_gaps() const {
  if (!has_finite_gaps()) return std::nullopt;
  return gaps().gaps;
}

std::optional<std::vector<Vec>> IdealExtension::finite_atoms() const {
  if (!has_finite_gaps()) return std::nullopt;
  return atoms();
}

std::vector<Vec> IdealExtension::extreme_rays() const {
  std::vector<Vec> out;
  for (const Vec& m : minimals_)
    if (support(m).size() == 1) out.push_back(m);
  return out;
}

Vec CoreDecomposition::project(const Vec& x) const {
  Vec y(core_axes.size());
  for (std::size_t k = 0; k < core_axes.size(); ++k) y[k] = x[core_axes[k]];
  return y;
}

Vec CoreDecomposition::embed(const Vec& y, std::size_t dim) const {
  Vec x(dim);
  for (std::size_t k = 0; k < core_axes.size(); ++k) x[core_axes[k]] = y[k];
  return x;
}

CoreDecomposition IdealExtension::core() const {
  CoreDecomposition out;
  std::vector<Vec> rest;
  for (const Vec& m : minimals_) {
    if (norm1(m) == 1)
      out.unit_axes.push_back(support(m)[0]);
    else
      rest.push_back(m);
  }
  std::sort(out.unit_axes.begin(), out.unit_axes.end());
  for (std::size_t i = 0; i < dim_; ++i)
    if (!std::binary_search(out.unit_axes.begin(), out.unit_axes.end(), i)) out.core_axes.push_back(i);
  if (out.core_axes.empty() || rest.empty()) return out;
  // Any other minimal vanishes on L, since eₗ ≤ m would contradict minimality.
  std::vector<Vec> projected;
  for (const Vec& m : rest) projected.push_back(out.project(m));
  out.core = std::make_shared<IdealExtension>(IdealExtension::from_minimals(out.core_axes.size(), projected));
  return out;
}

bool in_two_atoms(const Monoid& s, std::span<const Vec> atoms, const Vec& x) {
  for (const Vec& a : atoms) {
    if (!leq(a, x)) continue;
    Vec rest = x - a;
    if (!rest.is_zero() && s.is_atom(rest)) return true;
  }
  return false;
}

namespace {

GaResult gap_absorbing_over(const Monoid& s, const std::vector<Vec>& h, std::span<const Vec> atoms,
                            std::span<const Vec> atoms_for_sums) {
  auto in_a_or_2a = [&](const Vec& x) { return s.is_atom(x) || in_two_atoms(s, atoms_for_sums, x); };
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i; j < h.size(); ++j) {
      Vec x = h[i] + h[j];
      if (!s.contains(x) || in_a_or_2a(x)) continue;
      return {false, "GA1", h[i], h[j]};
    }
  for (const Vec& g : h)
    for (const Vec& a : atoms)
      if (!in_a_or_2a(g + a)) return {false, "GA2", g, a};
  return {};
}

}  // namespace

GaResult is_gap_absorbing(const Monoid& s) {
  auto gaps = s.finite_gaps();
  auto atoms = s.finite_atoms();
  if (!gaps || !atoms) throw Error(ErrorCode::NeedsBoundedMode, "gap-absorbing check needs a finite gap set");
  return gap_absorbing_over(s, *gaps, *atoms, *atoms);
}

GaResult is_gap_absorbing_in_box(const Monoid& s, const Box& box) {
  if (box.dim() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "box dimension");
  std::vector<Vec> gaps;
  for (const Vec& x : box)
    if (!s.contains(x)) gaps.push_back(x);
  auto atoms = s.atoms_in_box(box);
  auto wide = s.atoms_in_box(Box::below(scale(box.hi(), 2)));
  return gap_absorbing_over(s, gaps, atoms, wide);
}

std::vector<Vec> two_atom_sums(std::span<const Vec> atoms) {
  std::vector<Vec> out;
  out.reserve(atoms.size() * (atoms.size() + 1) / 2);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i; j < atoms.size(); ++j) out.push_back(atoms[i] + atoms[j]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

IntervalResult interval_closed_over(const std::vector<Vec>& sums, std::size_t dim) {
  if (sums.empty()) return {};
  Vec top(dim);
  for (const Vec& x : sums) top = join(top, x);
  Box box = Box::below(top);
  const std::size_t n = box.size(), d = box.dim();
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t i = d - 1; i-- > 0;) stride[i] = stride[i + 1] * (top[i + 1] + 1);

  std::vector<char> in2a(n, 0), down(n, 0), up(n, 0);
  for (const Vec& x : sums) in2a[box.index(x)] = 1;
  // down[x]: some element of 2𝒜 lies below x; up[x]: some lies above.
  for (std::size_t idx = 0; idx < n; ++idx) {
    char f = in2a[idx];
    std::size_t rem = idx;
    for (std::size_t i = 0; i < d && !f; ++i) {
      std::size_t coord = (rem / stride[i]) % (top[i] + 1);
      if (coord > 0 && down[idx - stride[i]]) f = 1;
    }
    down[idx] = f;
  }
  for (std::size_t idx = n; idx-- > 0;) {
    char f = in2a[idx];
    for (std::size_t i = 0; i < d && !f; ++i) {
      std::size_t coord = (idx / stride[i]) % (top[i] + 1);
      if (coord < top[i] && up[idx + stride[i]]) f = 1;
    }
    up[idx] = f;
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (in2a[idx] || !down[idx] || !up[idx]) continue;
    Vec w = box.point(idx);
    IntervalResult r{false, {}, w, {}};
    r.u = *std::find_if(sums.begin(), sums.end(), [&](const Vec& x) { return leq(x, w); });
    r.v = *std::find_if(sums.begin(), sums.end(), [&](const Vec& x) { return leq(w, x); });
    return r;
  }
  return {};
}

}  // namespace

IntervalResult check_2A_interval_closed(const Monoid& s) {
  auto atoms = s.finite_atoms();
  if (!atoms) throw Error(ErrorCode::NeedsBoundedMode, "interval check needs a finite atom set");
  return interval_closed_over(two_atom_sums(*atoms), s.dim());
}

IntervalResult check_2A_interval_closed_in_box(const Monoid& s, const Box& box) {
  if (box.dim() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "box dimension");
  auto sums = two_atom_sums(s.atoms_in_box(box));
  std::erase_if(sums, [&](const Vec& x) { return !box.contains(x); });
  return interval_closed_over(sums, s.dim());
}

PiProfile::PiProfile(const IdealExtension& s, std::size_t axis, std::uint64_t v_max) : axis_(axis), v_max_(v_max) {
  if (s.dim() != 2) throw Error(ErrorCode::WrongDimension, "π-profiles are defined for dimension 2");
  if (axis > 1) throw Error(ErrorCode::WrongDimension, "axis must be 1 or 2");
  const std::size_t other = 1 - axis;
  for (const Vec& m : s.minimals()) mins_.emplace_back(m[other], m[axis]);
  a_min_ = mins_.front().first;
  a_max_ = ExtNat::infinity();
  for (auto [v, t] : mins_) {
    a_min_ = std::min(a_min_, v);
    // π²_v = 0 exactly when two copies of the minimal (k, 0) fit below v.
    if (t == 0) a_max_ = ExtNat(2 * v - 1);
  }
  for (std::uint64_t v = 0; v <= v_max; ++v) {
    pi1_.push_back(pi1_at(v));
    pi2_.push_back(pi2_at(v));
  }
}

ExtNat PiProfile::pi1_at(std::uint64_t v) const {
  ExtNat best = ExtNat::infinity();
  for (auto [mv, mt] : mins_)
    if (mv <= v) best = min(best, ExtNat(mt));
  return best;
}

ExtNat PiProfile::pi2_at(std::uint64_t v) const {
  ExtNat best = ExtNat::infinity();
  for (std::size_t i = 0; i < mins_.size(); ++i)
    for (std::size_t j = i; j < mins_.size(); ++j)
      if (mins_[i].first + mins_[j].first <= v) best = min(best, ExtNat(mins_[i].second + mins_[j].second));
  return best;
}

bool PiProfile::in_A(std::uint64_t v) const { return v >= a_min_ && ExtNat(v) <= a_max_; }

Vec PiProfile::point(std::uint64_t v, std::uint64_t t) const {
  Vec x(2);
  x[axis_] = t;
  x[1 - axis_] = v;
  return x;
}

PiProfile pi_profile(const IdealExtension& s, std::size_t axis, std::uint64_t v_max) {
  return PiProfile(s, axis, v_max);
}

std::optional<ColumnInterval> two_atom_column(const PiProfile& p, std::uint64_t z) {
  std::optional<ColumnInterval> out;
  if (z < 2 * p.a_min()) return out;
  for (std::uint64_t v = p.a_min(); v + p.a_min() <= z; ++v) {
    if (!p.in_A(v) || !p.in_A(z - v)) continue;
    std::uint64_t lo = (p.pi1_at(v) + p.pi1_at(z - v)).value();
    ExtNat hi = p.pi2_at(v) + p.pi2_at(z - v) - 2;
    if (!out)
      out = ColumnInterval{lo, hi};
    else {
      out->lo = std::min(out->lo, lo);
      out->hi = max(out->hi, hi);
    }
  }
  return out;
}

}  // namespace idealext
