#include "idealext/factor.hpp"

#include <algorithm>
#include <numeric>

#include "idealext/error.hpp"
#include "idealext/numsgp.hpp"

namespace idealext {

AtomBasis::AtomBasis(std::vector<Vec> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end())
    throw Error(ErrorCode::InvalidSpec, "atom basis has repeated entries");
  if (!atoms_.empty()) dim_ = atoms_.front().dim();
  id_ = 0x84222325cbf29ce4ULL ^ dim_;
  VecHash h;
  for (const Vec& a : atoms_) {
    if (a.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "atom basis mixes dimensions");
    if (a.is_zero()) throw Error(ErrorCode::ZeroGenerator, "atom basis contains zero");
    id_ = id_ * 0x100000001b3ULL ^ h(a);
  }
}

std::optional<std::size_t> AtomBasis::index_of(const Vec& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

AtomBasis basis_below(const Monoid& s, const Vec& top) { return AtomBasis(s.atoms_in_box(Box::below(top))); }

Factorization::Factorization(std::uint64_t basis_id, std::vector<Entry> entries)
    : basis_id_(basis_id), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
  for (const auto& e : entries_) length_ += e.second;
}

std::uint64_t Factorization::count(std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
  return it != entries_.end() && it->first == index ? it->second : 0;
}

std::vector<std::uint64_t> Factorization::dense(std::size_t basis_size) const {
  std::vector<std::uint64_t> out(basis_size, 0);
  for (const auto& [i, c] : entries_) out.at(i) = c;
  return out;
}

Vec Factorization::evaluate(const AtomBasis& basis) const {
  if (basis.id() != basis_id_) throw Error(ErrorCode::BasisMismatch, "factorization over another basis");
  Vec out(basis.dim());
  for (const auto& [i, c] : entries_) out = out + scale(basis[i], c);
  return out;
}

std::strong_ordering operator<=>(const Factorization& a, const Factorization& b) {
  auto ia = a.entries_.begin(), ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    std::uint32_t ka = ia != a.entries_.end() ? ia->first : UINT32_MAX;
    std::uint32_t kb = ib != b.entries_.end() ? ib->first : UINT32_MAX;
    std::uint32_t k = std::min(ka, kb);
    std::uint64_t ca = ka == k ? ia->second : 0;
    std::uint64_t cb = kb == k ? ib->second : 0;
    if (ca != cb) return ca <=> cb;
    if (ka == k) ++ia;
    if (kb == k) ++ib;
  }
  return std::strong_ordering::equal;
}

namespace {

struct FactorSearch {
  const AtomBasis& basis;
  std::vector<std::uint32_t> cand;
  // covers[k]: coordinates reachable by cand[0..k-1]
  std::vector<std::vector<char>> covers;
  std::vector<Factorization::Entry> stack;
  std::vector<Factorization> out;

  void run(Vec rem, std::size_t k) {
    if (rem.is_zero()) {
      out.emplace_back(basis.id(), stack);
      return;
    }
    if (k == 0) return;
    for (std::size_t i = 0; i < rem.dim(); ++i)
      if (rem[i] > 0 && !covers[k][i]) return;
    const Vec& a = basis[cand[k - 1]];
    std::uint64_t maxc = UINT64_MAX;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a[i] > 0) maxc = std::min(maxc, rem[i] / a[i]);
    Vec cur = rem;
    for (std::uint64_t c = 0;; ++c) {
      if (c > 0) stack.emplace_back(cand[k - 1], c);
      run(cur, k - 1);
      if (c > 0) stack.pop_back();
      if (c == maxc) break;
      cur = cur - a;
    }
  }
};

}  // namespace

std::vector<Factorization> factorizations(const AtomBasis& basis, const Vec& s) {
  if (basis.size() > 0) require_same_dim(basis[0], s);
  FactorSearch f{basis, {}, {}, {}, {}};
  for (std::uint32_t i = 0; i < basis.size(); ++i)
    if (leq(basis[i], s)) f.cand.push_back(i);
  f.covers.assign(f.cand.size() + 1, std::vector<char>(s.dim(), 0));
  for (std::size_t k = 0; k < f.cand.size(); ++k) {
    f.covers[k + 1] = f.covers[k];
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (basis[f.cand[k]][i] > 0) f.covers[k + 1][i] = 1;
  }
  f.run(s, f.cand.size());
  std::sort(f.out.begin(), f.out.end());
  return std::move(f.out);
}

std::vector<std::uint64_t> lengths_of(std::span<const Factorization> zs) {
  std::vector<std::uint64_t> l;
  for (const auto& z : zs) l.push_back(z.length());
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  return l;
}

std::vector<std::uint64_t> lengths(const AtomBasis& basis, const Vec& s) {
  auto zs = factorizations(basis, s);
  if (zs.empty()) throw Error(ErrorCode::NoFactorization, to_string(s) + " has no factorization");
  return lengths_of(zs);
}

std::uint64_t ell(const AtomBasis& basis, const Vec& s) { return lengths(basis, s).front(); }

std::vector<std::uint64_t> delta_elem(const AtomBasis& basis, const Vec& s) {
  return successive_differences(lengths(basis, s));
}

Rational elasticity_elem(const AtomBasis& basis, const Vec& s) {
  if (s.is_zero()) throw Error(ErrorCode::NoFactorization, "elasticity of 0 is undefined");
  auto l = lengths(basis, s);
  return Rational(static_cast<std::int64_t>(l.back()), static_cast<std::int64_t>(l.front()));
}

Rational ld_of_lengths(const std::vector<std::uint64_t>& l) {
  if (l.size() < 2) throw Error(ErrorCode::LdUndefined, "length density needs at least two lengths");
  return Rational(static_cast<std::int64_t>(l.size() - 1), static_cast<std::int64_t>(l.back() - l.front()));
}

Rational ld_elem(const AtomBasis& basis, const Vec& s) { return ld_of_lengths(lengths(basis, s)); }

std::uint64_t distance(const Factorization& u, const Factorization& v) {
  if (u.basis_id() != v.basis_id()) throw Error(ErrorCode::BasisMismatch, "factorizations over different bases");
  std::uint64_t common = 0;
  auto iu = u.entries().begin(), iv = v.entries().begin();
  while (iu != u.entries().end() && iv != v.entries().end()) {
    if (iu->first < iv->first)
      ++iu;
    else if (iv->first < iu->first)
      ++iv;
    else {
      common += std::min(iu->second, iv->second);
      ++iu, ++iv;
    }
  }
  return std::max(u.length() - common, v.length() - common);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> r_classes(std::span<const Factorization> zs) {
  UnionFind uf(zs.size());
  // Join all factorizations through the first one seen using each atom.
  std::vector<std::pair<std::uint32_t, std::size_t>> first_use;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (const auto& e : zs[i].entries()) first_use.emplace_back(e.first, i);
  std::sort(first_use.begin(), first_use.end());
  for (std::size_t k = 1; k < first_use.size(); ++k)
    if (first_use[k].first == first_use[k - 1].first) uf.unite(first_use[k - 1].second, first_use[k].second);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(zs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    std::size_t r = uf.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    classes[slot[r]].push_back(i);
  }
  return classes;
}

LengthTable::LengthTable(const AtomBasis& basis, const Vec& top) : box_(Box::below(top)) {
  std::vector<Vec> inside;
  Coord min_norm = 0;
  for (const Vec& a : basis.atoms())
    if (leq(a, top)) {
      inside.push_back(a);
      Coord n = norm1(a);
      min_norm = min_norm == 0 ? n : std::min(min_norm, n);
    }
  std::size_t width = 1 + (min_norm == 0 ? 0 : norm1(top) / min_norm);
  sets_.assign(box_.size(), boost::dynamic_bitset<>(width));
  sets_[0].set(0);
  std::vector<std::size_t> offsets;
  for (const Vec& a : inside) offsets.push_back(box_.index(a));
  std::size_t idx = 0;
  for (const Vec& x : box_) {
    for (std::size_t k = 0; k < inside.size(); ++k)
      if (leq(inside[k], x)) sets_[idx] |= sets_[idx - offsets[k]] << 1;
    ++idx;
  }
}

std::vector<std::uint64_t> LengthTable::lengths(const Vec& x) const {
  std::vector<std::uint64_t> out;
  const auto& bits = sets_[box_.index(x)];
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

std::optional<std::uint64_t> LengthTable::min_length(const Vec& x) const {
  const auto& bits = sets_[box_.index(x)];
  auto i = bits.find_first();
  if (i == boost::dynamic_bitset<>::npos) return std::nullopt;
  return i;
}

namespace {

BoxTable<std::uint8_t> membership_table(const std::vector<Vec>& gens, const Vec& top) {
  BoxTable<std::uint8_t> t(Box::below(top), 0);
  const Box& box = t.box();
  std::vector<std::pair<const Vec*, std::size_t>> inside;
  for (const Vec& g : gens)
    if (leq(g, top)) inside.emplace_back(&g, box.index(g));
  t.at_index(0) = 1;
  std::size_t idx = 0;
  for (const Vec& x : box) {
    if (idx > 0)
      for (const auto& [g, off] : inside)
        if (leq(*g, x) && t.at_index(idx - off)) {
          t.at_index(idx) = 1;
          break;
        }
    ++idx;
  }
  return t;
}

}  // namespace

AtomBasisMonoid::AtomBasisMonoid(std::vector<Vec> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "no generators");
  dim_ = generators.front().dim();
  if (dim_ == 0) throw Error(ErrorCode::WrongDimension, "dimension must be at least 1");
  for (const Vec& g : generators) {
    if (g.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "generators of different dimensions");
    if (g.is_zero()) throw Error(ErrorCode::ZeroGenerator, "the zero vector cannot be a generator");
  }
  std::sort(generators.begin(), generators.end(),
            [](const Vec& a, const Vec& b) { return std::pair(norm1(a), a) < std::pair(norm1(b), b); });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // A generator is redundant iff it lies in the monoid spanned by strictly smaller-norm ones.
  std::vector<Vec> kept;
  for (const Vec& g : generators)
    if (kept.empty() || !membership_table(kept, g)[g]) kept.push_back(g);
  basis_ = AtomBasis(std::move(kept));
}

bool AtomBasisMonoid::contains(const Vec& x) const {
  require_dim(x);
  std::lock_guard lock(mu_);
  if (!member_ || !member_->box().contains(x)) {
    Vec top = member_ ? join(member_->box().hi(), x) : x;
    member_ = membership_table(basis_.atoms(), top);
  }
  return (*member_)[x] != 0;
}

bool AtomBasisMonoid::is_atom(const Vec& x) const {
  require_dim(x);
  return basis_.index_of(x).has_value();
}

std::vector<Vec> AtomBasisMonoid::atoms_in_box(const Box& b) const {
  std::vector<Vec> out;
  for (const Vec& a : basis_.atoms())
    if (b.contains(a)) out.push_back(a);
  return out;
}

}  // namespace idealext
