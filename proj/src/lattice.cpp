#include "idealext/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "idealext/error.hpp"

namespace idealext {

Vec Vec::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw Error(ErrorCode::DimensionMismatch, "axis out of range");
  Vec v(dim);
  v[axis] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coord x) { return x == 0; });
}

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &out[i])) throw Error(ErrorCode::Overflow, "vector addition");
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i] > a[i]) throw Error(ErrorCode::Overflow, "subtraction leaves ℕ^d: " + to_string(a) + " - " + to_string(b));
    out[i] = a[i] - b[i];
  }
  return out;
}

Vec scale(const Vec& a, Coord k) {
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (__builtin_mul_overflow(a[i], k, &out[i])) throw Error(ErrorCode::Overflow, "vector scaling");
  return out;
}

bool leq(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Vec join(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Vec meet(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Coord norm1(const Vec& a) {
  Coord s = 0;
  for (Coord x : a)
    if (__builtin_add_overflow(s, x, &s)) throw Error(ErrorCode::Overflow, "norm1");
  return s;
}

std::vector<std::size_t> support(const Vec& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != 0) out.push_back(i);
  return out;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Coord x : v) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Box::Box(Vec lo, Vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dim(lo_, hi_);
  if (lo_.dim() == 0) throw Error(ErrorCode::InvalidBox, "zero-dimensional box");
  if (!leq(lo_, hi_)) throw Error(ErrorCode::InvalidBox, "lo " + to_string(lo_) + " not <= hi " + to_string(hi_));
  size_ = 1;
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    std::size_t extent = hi_[i] - lo_[i] + 1;
    if (extent == 0 || __builtin_mul_overflow(size_, extent, &size_))
      throw Error(ErrorCode::Overflow, "box point count");
  }
}

Box Box::below(const Vec& hi) { return Box(Vec(hi.dim()), hi); }

bool Box::contains(const Vec& x) const { return x.dim() == dim() && leq(lo_, x) && leq(x, hi_); }

std::size_t Box::index(const Vec& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim(); ++i) idx = idx * (hi_[i] - lo_[i] + 1) + (x[i] - lo_[i]);
  return idx;
}

Vec Box::point(std::size_t index) const {
  Vec x(dim());
  for (std::size_t i = dim(); i-- > 0;) {
    std::size_t extent = hi_[i] - lo_[i] + 1;
    x[i] = lo_[i] + index % extent;
    index /= extent;
  }
  return x;
}

Box::Iterator::Iterator(const Box* box, bool at_end) : box_(box), done_(at_end) {
  if (!at_end) cur_ = box->lo();
}

Box::Iterator& Box::Iterator::operator++() {
  for (std::size_t i = cur_.dim(); i-- > 0;) {
    if (cur_[i] < box_->hi()[i]) {
      ++cur_[i];
      return *this;
    }
    cur_[i] = box_->lo()[i];
  }
  done_ = true;
  return *this;
}

std::vector<Vec> minimals_of(std::span<const Vec> vs) {
  std::vector<Vec> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Anything below v is lexicographically smaller, so one forward pass suffices.
  std::vector<Vec> out;
  for (const Vec& v : sorted) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Vec& m) { return leq(m, v); });
    if (!dominated) out.push_back(v);
  }
  return out;
}

bool is_antichain(std::span<const Vec> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && leq(vs[i], vs[j])) return false;
  return true;
}

}  // namespace idealext
