// Brute-force enumerators used as independent references. They only rely on
// definitions and plain loops, never on the library's search code.
#ifndef IDEALEXT_TESTS_ORACLES_HPP
#define IDEALEXT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using P = std::vector<std::uint64_t>;
using Member = std::function<bool(const P&)>;

inline bool le(const P& a, const P& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool zero(const P& a) {
  return std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; });
}

inline P add(const P& a, const P& b) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline P sub(const P& a, const P& b) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// Every point of [0, hi], last coordinate fastest.
inline std::vector<P> points(const P& hi) {
  std::vector<P> out;
  P cur(hi.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = hi.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (hi.empty()) return out;
  }
}

/// {0} ∪ (M + ℕ^d)
inline Member ideal_member(std::vector<P> mins) {
  return [mins](const P& x) {
    if (zero(x)) return true;
    return std::any_of(mins.begin(), mins.end(), [&](const P& m) { return le(m, x); });
  };
}

inline std::vector<P> gaps(const Member& in, const P& hi) {
  std::vector<P> out;
  for (const P& x : points(hi))
    if (!in(x)) out.push_back(x);
  return out;
}

/// S* ∖ (S* + S*), directly from the definition.
inline std::vector<P> atoms(const Member& in, const P& hi) {
  std::vector<P> out;
  for (const P& x : points(hi)) {
    if (zero(x) || !in(x)) continue;
    bool split = false;
    for (const P& y : points(x))
      if (!zero(y) && y != x && in(y) && in(sub(x, y))) {
        split = true;
        break;
      }
    if (!split) out.push_back(x);
  }
  return out;
}

/// Dense factorizations of every point of [0, hi] over `as`, built one atom
/// at a time: Z_k(x) = ⋃_c Z_{k-1}(x − c·a_k) × {c}.
inline std::map<P, std::vector<P>> factorization_table(const std::vector<P>& as, const P& hi) {
  std::map<P, std::vector<P>> table;
  table[P(hi.size(), 0)] = {P{}};
  for (std::size_t k = 0; k < as.size(); ++k) {
    std::map<P, std::vector<P>> next;
    for (const auto& [x, zs] : table) {
      P y = x;
      for (std::uint64_t c = 0; le(y, hi); ++c, y = add(y, as[k])) {
        for (const P& z : zs) {
          P w = z;
          w.push_back(c);
          next[y].push_back(w);
        }
        if (zero(as[k])) break;
      }
    }
    table = std::move(next);
  }
  for (auto& [x, zs] : table) std::sort(zs.begin(), zs.end());
  return table;
}

inline std::size_t r_class_count(const std::vector<P>& zs) {
  std::vector<std::size_t> parent(zs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      for (std::size_t k = 0; k < zs[i].size(); ++k)
        if (zs[i][k] && zs[j][k]) parent[find(i)] = find(j);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < zs.size(); ++i) roots.insert(find(i));
  return roots.size();
}

/// Betti elements in [0, hi]: elements whose factorizations form ≥ 2 R-classes.
inline std::vector<P> betti(const std::vector<P>& as, const P& hi) {
  std::vector<P> out;
  for (const auto& [x, zs] : factorization_table(as, hi))
    if (!zero(x) && r_class_count(zs) >= 2) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::uint64_t> lengths(const std::vector<P>& zs) {
  std::set<std::uint64_t> out;
  for (const P& z : zs) out.insert(std::accumulate(z.begin(), z.end(), std::uint64_t{0}));
  return out;
}

/// π¹_v and π²_v of a plane ideal extension with height axis 1 (0-based),
/// scanning heights up to t_max; nullopt when no height qualifies.
inline std::optional<std::uint64_t> pi(const std::vector<P>& mins, std::uint64_t v, std::uint64_t t_max, int level,
                                       std::size_t axis = 1) {
  for (std::uint64_t t = 0; t <= t_max; ++t) {
    P x(2);
    x[axis] = t;
    x[1 - axis] = v;
    if (level == 1) {
      for (const P& m : mins)
        if (le(m, x)) return t;
    } else {
      for (const P& a : mins)
        for (const P& b : mins)
          if (le(add(a, b), x)) return t;
    }
  }
  return std::nullopt;
}

/// ω(x) by the definition: the largest minimal multiset z over the atoms with
/// φ(z) − x ∈ S, among multisets of length ≤ max_len.
inline std::uint64_t omega(const Member& in, const std::vector<P>& as, const P& x, std::uint64_t max_len) {
  auto in_x = [&](const P& phi) { return le(x, phi) && in(sub(phi, x)); };
  std::uint64_t best = 0;
  std::vector<std::uint64_t> z(as.size(), 0);
  P phi(x.size(), 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t len) {
    if (k == as.size()) {
      if (len == 0 || !in_x(phi)) return;
      for (std::size_t i = 0; i < as.size(); ++i)
        if (z[i] && in_x(sub(phi, as[i]))) return;
      best = std::max(best, len);
      return;
    }
    P saved = phi;
    for (std::uint64_t c = 0; len + c <= max_len; ++c) {
      z[k] = c;
      rec(k + 1, len + c);
      phi = add(phi, as[k]);
    }
    z[k] = 0;
    phi = saved;
  };
  rec(0, 0);
  return best;
}

}  // namespace oracle

#endif  // IDEALEXT_TESTS_ORACLES_HPP
