#include "idealext/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "idealext/error.hpp"
#include "idealext/numsgp.hpp"

namespace idealext {

std::string_view to_string(Provenance p) { return p == Provenance::Exact ? "exact" : "box-relative"; }

namespace {

void require_member(const Monoid& s, const Vec& x) {
  s.require_dim(x);
  if (x.is_zero() || !s.contains(x)) throw Error(ErrorCode::NotMember, to_string(x) + " is not in S*");
}

std::vector<Vec> graph_vertices(const Monoid& s, std::span<const Vec> atoms, const Vec& x) {
  std::vector<Vec> out;
  for (const Vec& a : atoms)
    if (leq(a, x) && s.contains(x - a)) out.push_back(a);
  return out;
}

bool adjacent(const Monoid& s, const Vec& x, const Vec& a, const Vec& b) {
  Vec ab = a + b;
  return leq(ab, x) && s.contains(x - ab);
}

std::vector<Vec> sorted_unique(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

BettiGraph betti_graph(const Monoid& s, const Vec& x) {
  require_member(s, x);
  BettiGraph g;
  g.element = x;
  g.vertices = graph_vertices(s, s.atoms_in_box(Box::below(x)), x);
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacent(s, x, g.vertices[i], g.vertices[j])) {
        g.edges.emplace_back(i, j);
        std::size_t a = find(i), b = find(j);
        if (a != b) comp[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = g.components.size();
      g.components.emplace_back();
    }
    g.components[slot[r]].push_back(i);
  }
  return g;
}

bool is_betti(const Monoid& s, std::span<const Vec> atoms, const Vec& x) {
  auto verts = graph_vertices(s, atoms, x);
  if (verts.size() < 2) return false;
  std::vector<std::size_t> unvisited(verts.size() - 1);
  std::iota(unvisited.begin(), unvisited.end(), 1);
  std::vector<std::size_t> queue{0};
  while (!queue.empty() && !unvisited.empty()) {
    std::size_t u = queue.back();
    queue.pop_back();
    std::erase_if(unvisited, [&](std::size_t v) {
      if (!adjacent(s, x, verts[u], verts[v])) return false;
      queue.push_back(v);
      return true;
    });
  }
  return !unvisited.empty();
}

BettiResult betti_elements(const IdealExtension& s) {
  if (!s.has_finite_gaps())
    throw Error(ErrorCode::NotVerifiedGapAbsorbing, "infinite gap set; use a box");
  auto ga = is_gap_absorbing(s);
  if (!ga.holds)
    throw Error(ErrorCode::NotVerifiedGapAbsorbing,
                "not gap absorbing (" + ga.rule + " fails at " + to_string(ga.lhs) + ", " + to_string(ga.rhs) + ")");
  const auto& atoms = s.atoms();
  BettiResult r;
  auto two = two_atom_sums(atoms);
  if (s.dim() == 2) {
    AtomBasis basis(atoms);
    for (const Vec& x : two)
      if (factorizations(basis, x).size() >= 2) r.elements.push_back(x);
    r.justification = "dimension 2: Betti(S) = {s in 2A : |Z(s)| >= 2}";
    return r;
  }
  std::vector<Vec> cands = two;
  for (const Vec& x : two)
    for (const Vec& a : atoms) cands.push_back(x + a);
  cands = sorted_unique(std::move(cands));
  for (const Vec& x : cands)
    if (is_betti(s, atoms, x)) r.elements.push_back(x);
  r.justification = "gap absorbing: Betti(S) is contained in 2A u 3A";
  return r;
}

BettiResult betti_in_box(const Monoid& s, const Box& box, unsigned threads) {
  if (box.dim() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "box dimension");
  auto atoms = s.atoms_in_box(Box::below(box.hi()));
  s.contains(box.hi());  // warms memoized membership before any worker starts
  threads = std::max(1u, threads);
  const std::size_t n = box.size();
  std::vector<std::vector<Vec>> found(threads);
  auto work = [&](unsigned t) {
    for (std::size_t idx = t; idx < n; idx += threads) {
      Vec x = box.point(idx);
      if (!x.is_zero() && s.contains(x) && is_betti(s, atoms, x)) found[t].push_back(std::move(x));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  BettiResult r;
  r.provenance = Provenance::BoxRelative;
  for (auto& part : found) r.elements.insert(r.elements.end(), part.begin(), part.end());
  std::sort(r.elements.begin(), r.elements.end());
  r.justification = "scan of " + to_string(box.lo()) + ".." + to_string(box.hi());
  return r;
}

CorePieces betti_core_decomposition(const IdealExtension& s) {
  auto core = s.core();
  if (core.unit_axes.empty()) throw Error(ErrorCode::EmptyL, "no unit vector among the minimal elements");
  if (!s.has_finite_gaps()) throw Error(ErrorCode::InfiniteGaps, "core decomposition needs finite gaps");
  const std::size_t d = s.dim();
  const auto& gaps = s.gaps().gaps;
  const auto& mins = s.minimals();
  std::vector<Vec> core_atoms;
  CorePieces p;
  if (core.core) {
    for (const Vec& a : core.core->atoms()) core_atoms.push_back(core.embed(a, d));
    for (const Vec& b : betti_elements(*core.core).elements) p.core_betti.push_back(core.embed(b, d));
  }
  for (std::size_t l : core.unit_axes) {
    Vec el = Vec::unit(d, l);
    for (const Vec& a : core_atoms)
      if (!std::binary_search(mins.begin(), mins.end(), a)) p.b1.push_back(el + a);
    for (const Vec& h : gaps) {
      if (norm1(h) != 1) p.b2.push_back(el + el + h);
      for (const Vec& a : core_atoms) p.b3.push_back(el + h + a);
    }
    for (std::size_t k : core.unit_axes) {
      Vec ek = Vec::unit(d, k);
      for (const Vec& h : gaps) {
        for (const Vec& h2 : gaps) p.b4.push_back(el + h + ek + h2);
        // e_l + (e_k + h) with l != k is Betti as well; the literal B4 misses it.
        if (k != l) p.b4.push_back(el + ek + h);
      }
    }
  }
  for (auto* part : {&p.b1, &p.b2, &p.b3, &p.b4, &p.core_betti}) {
    *part = sorted_unique(std::move(*part));
    p.all.insert(p.all.end(), part->begin(), part->end());
  }
  p.all = sorted_unique(std::move(p.all));
  return p;
}

std::uint64_t catenary_of(std::span<const Factorization> zs) {
  if (zs.size() <= 1) return 0;
  struct Edge {
    std::uint64_t w;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j) edges.push_back({distance(zs[i], zs[j]), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.w < b.w; });
  std::vector<std::size_t> parent(zs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = zs.size();
  for (const Edge& e : edges) {
    std::size_t a = find(e.i), b = find(e.j);
    if (a == b) continue;
    parent[a] = b;
    if (--components == 1) return e.w;
  }
  return 0;
}

std::uint64_t catenary_elem(const Monoid& s, const Vec& x) {
  s.require_dim(x);
  auto zs = factorizations(basis_below(s, x), x);
  if (zs.empty()) throw Error(ErrorCode::NoFactorization, to_string(x) + " has no factorization");
  return catenary_of(zs);
}

std::uint64_t catenary_rclass_formula(std::span<const Factorization> zs) {
  auto classes = r_classes(zs);
  if (classes.size() < 2) throw Error(ErrorCode::SingleRClass, "a single R-class");
  std::uint64_t out = 0;
  for (const auto& cls : classes) {
    std::uint64_t best = UINT64_MAX;
    for (std::size_t i : cls) best = std::min(best, zs[i].length());
    out = std::max(out, best);
  }
  return out;
}

CatenaryResult catenary_over(const Monoid& s, std::span<const Vec> betti, Provenance p) {
  CatenaryResult r;
  r.provenance = p;
  for (const Vec& b : betti) {
    std::uint64_t c = catenary_elem(s, b);
    if (!r.attained_at || c > r.value) {
      r.value = c;
      r.attained_at = b;
    }
  }
  return r;
}

CatenaryResult catenary_monoid(const IdealExtension& s) {
  auto b = betti_elements(s);
  return catenary_over(s, b.elements, Provenance::Exact);
}

CatenaryResult catenary_monoid_in_box(const Monoid& s, const Box& box, unsigned threads) {
  auto b = betti_in_box(s, box, threads);
  return catenary_over(s, b.elements, Provenance::BoxRelative);
}

DeltaResult delta_over(const Monoid& s, std::span<const Vec> betti, Provenance p) {
  std::set<std::uint64_t> all;
  for (const Vec& b : betti) {
    auto d = delta_elem(basis_below(s, b), b);
    all.insert(d.begin(), d.end());
  }
  return {{all.begin(), all.end()}, p};
}

DeltaResult delta_monoid(const IdealExtension& s) {
  auto b = betti_elements(s);
  return delta_over(s, b.elements, Provenance::Exact);
}

DeltaResult delta_monoid_in_box(const Monoid& s, const Box& box, unsigned threads) {
  auto b = betti_in_box(s, box, threads);
  return delta_over(s, b.elements, Provenance::BoxRelative);
}

namespace {

// Enumerates the minimal elements ("bullets") of
//   X = {x ∈ ℕ^𝒜 : φ(x) − s ∈ S} = 𝖹(s) ∪ ⋃_{m∈ℳ} {x : φ(x) ≥ s + m}.
// Every bullet outside 𝖹(s) is a minimal cover of some s + m. A minimal
// cover listed in non-decreasing atom order only ever adds an atom meeting
// the remaining deficit (otherwise that atom could be dropped), so the
// search below reaches all of them.
class BulletSearch {
 public:
  BulletSearch(const IdealExtension& s, const std::vector<Vec>& atoms, const Vec& x, std::uint64_t cap,
               const std::optional<std::chrono::steady_clock::time_point>& deadline)
      : s_(s), atoms_(atoms), x_(x), cap_(cap), deadline_(deadline), counts_(atoms.size(), 0) {}

  void record(const std::vector<std::uint64_t>& dense, std::uint64_t len) {
    if (len > best_) {
      best_ = len;
      witnesses_.clear();
    }
    if (len == best_) witnesses_.insert(dense);
  }

  void cover(const Vec& target) {
    target_ = target;
    cand_.clear();
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (!meet(atoms_[i], target).is_zero()) cand_.push_back(i);
    dfs(0, target, Vec(x_.dim()), 0);
  }

  std::uint64_t best() const { return best_; }
  bool truncated() const { return truncated_; }
  const std::set<std::vector<std::uint64_t>>& witnesses() const { return witnesses_; }

 private:
  bool in_x(const Vec& phi) const { return leq(x_, phi) && s_.contains(phi - x_); }

  bool is_bullet(const Vec& phi) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (counts_[i] > 0 && leq(atoms_[i], phi) && in_x(phi - atoms_[i])) return false;
    return true;
  }

  void dfs(std::size_t from, const Vec& deficit, const Vec& phi, std::uint64_t depth) {
    if (deadline_ && (++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw DeadlineExceeded();
    if (depth > 0 && in_x(phi)) {
      if (is_bullet(phi)) record(counts_, depth);
      return;
    }
    if (depth == cap_) {
      truncated_ = true;
      return;
    }
    for (std::size_t k = from; k < cand_.size(); ++k) {
      std::size_t i = cand_[k];
      const Vec& a = atoms_[i];
      if (meet(a, deficit).is_zero()) continue;
      Vec next = deficit;
      for (std::size_t c = 0; c < next.dim(); ++c) next[c] -= std::min(next[c], a[c]);
      ++counts_[i];
      dfs(k, next, phi + a, depth + 1);
      --counts_[i];
    }
  }

  const IdealExtension& s_;
  const std::vector<Vec>& atoms_;
  Vec x_;
  Vec target_;
  std::uint64_t cap_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<std::size_t> cand_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t nodes_ = 0;
  std::uint64_t best_ = 0;
  bool truncated_ = false;
  std::set<std::vector<std::uint64_t>> witnesses_;
};

}  // namespace

OmegaResult omega_elem(const IdealExtension& s, const Vec& x, const OmegaOptions& opt) {
  require_member(s, x);
  if (!s.has_finite_gaps()) throw Error(ErrorCode::InfiniteGaps, "omega of an element needs finite gaps");
  const auto& atoms = s.atoms();
  const std::uint64_t proven = norm1(x) + 1;
  const std::uint64_t cap = opt.cap.value_or(proven);

  BulletSearch search(s, atoms, x, cap, opt.deadline);
  AtomBasis basis(atoms);
  for (const auto& z : factorizations(basis, x))
    if (z.length() <= cap) search.record(z.dense(atoms.size()), z.length());
  for (const Vec& m : s.minimals()) search.cover(x + m);

  if (search.truncated() && cap < proven)
    throw CapExceededError(search.best(), "covers longer than the cap " + std::to_string(cap) + " were not explored");

  OmegaResult r;
  r.value = search.best();
  r.basis = atoms;
  r.witnesses.assign(search.witnesses().begin(), search.witnesses().end());
  r.attained_at = x;
  r.upper_bound = proven;
  r.lower_bound = s.is_atom(x) ? omega_bounds(s, x).first : 1;
  return r;
}

std::pair<std::uint64_t, std::uint64_t> omega_bounds(const IdealExtension& s, const Vec& a) {
  s.require_dim(a);
  if (!s.is_atom(a)) throw Error(ErrorCode::NotAtom, to_string(a) + " is not an atom");
  const auto& mins = s.minimals();
  bool disjoint = std::any_of(mins.begin(), mins.end(), [&](const Vec& m) { return meet(a, m).is_zero(); });
  return {disjoint ? norm1(a) : 1, norm1(a) + 1};
}

std::optional<std::uint64_t> omega_extreme_ray_bound(const IdealExtension& s) {
  auto rays = s.extreme_rays();
  if (rays.size() < 2) return std::nullopt;
  std::uint64_t best = 0;
  for (const Vec& r : rays) best = std::max(best, 2 * norm1(r) - 1);
  return best;
}

std::vector<Vec> maximals_of(std::span<const Vec> vs) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < vs.size() && !dominated; ++j)
      dominated = vs[i] != vs[j] && leq(vs[i], vs[j]);
    if (!dominated) out.push_back(vs[i]);
  }
  return sorted_unique(std::move(out));
}

OmegaResult omega_monoid(const IdealExtension& s, const OmegaOptions& opt) {
  OmegaResult r;
  auto ray = omega_extreme_ray_bound(s);
  if (!s.has_finite_gaps()) {
    r.value = ExtNat::infinity();
    r.upper_bound = ExtNat::infinity();
    r.lower_bound = ray.value_or(1);
    r.infinite_axis = s.gaps().infinite_axes.front();
    return r;
  }
  const auto& atoms = s.atoms();
  std::uint64_t lower = ray.value_or(1), upper = 0;
  for (const Vec& a : atoms) {
    lower = std::max(lower, omega_bounds(s, a).first);
    upper = std::max(upper, norm1(a) + 1);
  }
  // ω is monotone along ≤ on atoms, so the ≤-maximal atoms decide ω(S).
  bool first = true;
  for (const Vec& a : maximals_of(atoms)) {
    auto e = omega_elem(s, a, opt);
    if (first || e.value > r.value) {
      r = std::move(e);
      first = false;
    }
  }
  r.lower_bound = lower;
  r.upper_bound = upper;
  return r;
}

std::vector<std::size_t> dominating_subfamily(const Vec& a, std::span<const Vec> family) {
  Vec total(a.dim());
  for (const Vec& f : family) total = total + f;
  if (!leq(a, total)) throw Error(ErrorCode::NotMember, to_string(a) + " is not below the sum of the family");
  std::vector<std::size_t> picked;
  std::vector<char> used(family.size(), 0);
  Vec deficit = a;
  while (!deficit.is_zero()) {
    std::size_t i = 0;
    while (deficit[i] == 0) ++i;
    std::size_t j = 0;
    while (used[j] || family[j][i] == 0) ++j;
    used[j] = 1;
    picked.push_back(j);
    for (std::size_t c = 0; c < deficit.dim(); ++c) deficit[c] -= std::min(deficit[c], family[j][c]);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

UfReport unique_factorization_predicates(const IdealExtension& s) {
  if (!s.has_finite_gaps()) throw Error(ErrorCode::InfiniteGaps, "needs finite gaps");
  const std::size_t d = s.dim();
  const auto& atoms = s.atoms();
  const auto& mins = s.minimals();
  auto core = s.core();
  auto in_L = [&](std::size_t i) { return std::binary_search(core.unit_axes.begin(), core.unit_axes.end(), i); };
  auto in_core = [&](const Vec& x) {
    return std::none_of(core.unit_axes.begin(), core.unit_axes.end(), [&](std::size_t l) { return x[l] > 0; });
  };
  auto is_min = [&](const Vec& x) { return std::binary_search(mins.begin(), mins.end(), x); };
  std::vector<Vec> core_mins;
  for (const Vec& m : mins)
    if (in_core(m)) core_mins.push_back(m);

  Vec g(d);
  for (const Vec& a : atoms) g = join(g, a);
  Vec top = scale(g, 3);
  Box box = Box::below(top);
  // Factorization counts saturated at 2, atoms processed one at a time so
  // each multiset is counted once.
  std::vector<std::uint8_t> count(box.size(), 0);
  count[0] = 1;
  for (const Vec& a : atoms) {
    std::size_t off = box.index(a);
    std::size_t idx = 0;
    for (const Vec& x : box) {
      if (leq(a, x)) count[idx] = static_cast<std::uint8_t>(std::min(2, count[idx] + count[idx - off]));
      ++idx;
    }
  }
  LengthTable lt(AtomBasis(atoms), top);

  UfReport rep;
  auto unique = [&](const Vec& x) { return count[box.index(x)] == 1; };
  for (const Vec& x : two_atom_sums(atoms)) {
    bool u = unique(x);
    if (in_core(x)) {
      ++rep.checked_core_2a;
      if (!u) continue;
      bool form = false;
      for (std::size_t i = 0; i < core_mins.size() && !form; ++i)
        for (std::size_t j = i; j < core_mins.size() && !form; ++j) form = core_mins[i] + core_mins[j] == x;
      for (const Vec& m : core_mins)
        for (std::size_t i = 0; i < d && !form; ++i)
          if (!in_L(i)) form = m + m + Vec::unit(d, i) == x;
      if (!form) rep.mismatches.push_back({"2A in core", x, u, false});
    } else {
      ++rep.checked_noncore_2a;
      bool form = false;
      for (std::size_t l : core.unit_axes) {
        Vec el = Vec::unit(d, l);
        if (leq(el, x) && is_min(x - el)) form = true;
        for (std::size_t j = 0; j < d && !form; ++j)
          if (!in_L(j)) form = el + el + Vec::unit(d, j) == x;
      }
      if (form != u) rep.mismatches.push_back({"2A outside core", x, u, form});
    }
  }
  for (const Vec& x : box) {
    if (x.is_zero() || !in_core(x)) continue;
    auto l = lt.min_length(x);
    if (!l || *l < 3) continue;
    ++rep.checked_core_long;
    bool u = unique(x);
    auto supp = support(x);
    bool form = supp.size() == 1 && x[supp[0]] == 7 && !in_L(supp[0]) && is_min(scale(Vec::unit(d, supp[0]), 2));
    if (form != u) rep.mismatches.push_back({"length >= 3 in core", x, u, form});
  }
  return rep;
}

}  // namespace idealext
