#ifndef IDEALEXT_LATTICE_HPP
#define IDEALEXT_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace idealext {

using Coord = std::uint64_t;

/// A point of ℕ^d. Arithmetic is checked: overflow and negative results throw.
class Vec {
 public:
  using Storage = boost::container::small_vector<Coord, 4>;

  Vec() = default;
  explicit Vec(std::size_t dim) : c_(dim, 0) {}
  Vec(std::initializer_list<Coord> coords) : c_(coords) {}
  explicit Vec(Storage coords) : c_(std::move(coords)) {}
  explicit Vec(const std::vector<Coord>& coords) : c_(coords.begin(), coords.end()) {}

  static Vec unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return c_.size(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const;

  /// Lexicographic order; the canonical order for all deterministic output.
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }
  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

 private:
  Storage c_;
};

void require_same_dim(const Vec& a, const Vec& b);

Vec operator+(const Vec& a, const Vec& b);
/// a - b; throws unless b <= a.
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Vec& a, Coord k);

/// Componentwise order: b - a ∈ ℕ^d.
bool leq(const Vec& a, const Vec& b);
Vec join(const Vec& a, const Vec& b);
Vec meet(const Vec& a, const Vec& b);
Coord norm1(const Vec& a);
std::vector<std::size_t> support(const Vec& a);

std::string to_string(const Vec& v);
std::ostream& operator<<(std::ostream& os, const Vec& v);

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

/// The interval ⟦lo, hi⟧ of ℕ^d. Points are indexed in lexicographic order
/// (last coordinate varies fastest), so index order is a linear extension of ≤.
class Box {
 public:
  Box(Vec lo, Vec hi);
  /// ⟦0, hi⟧
  static Box below(const Vec& hi);

  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  std::size_t dim() const { return lo_.dim(); }
  std::size_t size() const { return size_; }

  bool contains(const Vec& x) const;
  std::size_t index(const Vec& x) const;
  Vec point(std::size_t index) const;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vec;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vec*;
    using reference = const Vec&;

    Iterator() = default;
    Iterator(const Box* box, bool at_end);

    const Vec& operator*() const { return cur_; }
    const Vec* operator->() const { return &cur_; }
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.done_ == b.done_ && (a.done_ || a.cur_ == b.cur_); }

   private:
    const Box* box_ = nullptr;
    Vec cur_;
    bool done_ = true;
  };

  Iterator begin() const { return Iterator(this, false); }
  Iterator end() const { return Iterator(this, true); }

 private:
  Vec lo_;
  Vec hi_;
  std::size_t size_ = 0;
};

/// Every point of the box once, lexicographically.
inline Box box_points(const Box& b) { return b; }

/// ≤-minimal elements, lexicographically sorted, duplicates removed.
std::vector<Vec> minimals_of(std::span<const Vec> vs);

bool is_antichain(std::span<const Vec> vs);

/// Dense per-point storage over a box.
template <typename T>
class BoxTable {
 public:
  BoxTable(Box box, T init) : box_(std::move(box)), data_(box_.size(), init) {}

  const Box& box() const { return box_; }
  T& operator[](const Vec& x) { return data_[box_.index(x)]; }
  const T& operator[](const Vec& x) const { return data_[box_.index(x)]; }
  T& at_index(std::size_t i) { return data_[i]; }
  const T& at_index(std::size_t i) const { return data_[i]; }

 private:
  Box box_;
  std::vector<T> data_;
};

}  // namespace idealext

#endif  // IDEALEXT_LATTICE_HPP
