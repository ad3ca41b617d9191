#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace widthfill {

/// Vertices are the integers 1..n.
using vertex = int;

/// Hard upper bound on the vertex count of any graph (one bit per vertex).
inline constexpr int max_vertices = 64;

/// A subset of 1..n stored as a bitmask; bit v-1 marks vertex v.
class vertex_set {
 public:
  constexpr vertex_set() = default;
  constexpr explicit vertex_set(std::uint64_t bits) : bits_(bits) {}

  /// The set {1, ..., n}.
  static constexpr vertex_set full(int n) {
    return vertex_set(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr vertex_set single(vertex v) { return vertex_set(std::uint64_t{1} << (v - 1)); }

  template <typename Range>
  static vertex_set of(const Range& vertices) {
    vertex_set s;
    for (vertex v : vertices) s.insert(v);
    return s;
  }
  static vertex_set of(std::initializer_list<vertex> vertices) {
    vertex_set s;
    for (vertex v : vertices) s.insert(v);
    return s;
  }

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool contains(vertex v) const noexcept { return (bits_ >> (v - 1)) & 1U; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr bool subset_of(vertex_set other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool intersects(vertex_set other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  [[nodiscard]] constexpr vertex front() const noexcept { return std::countr_zero(bits_) + 1; }
  /// Largest member; undefined on the empty set.
  [[nodiscard]] constexpr vertex back() const noexcept { return 64 - std::countl_zero(bits_); }

  constexpr void insert(vertex v) noexcept { bits_ |= std::uint64_t{1} << (v - 1); }
  constexpr void erase(vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  [[nodiscard]] std::vector<vertex> to_vector() const {
    std::vector<vertex> out;
    out.reserve(size());
    for (vertex v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using value_type = vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr vertex operator*() const noexcept { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  [[nodiscard]] constexpr iterator begin() const noexcept { return iterator(bits_); }
  [[nodiscard]] constexpr iterator end() const noexcept { return iterator(0); }

  constexpr vertex_set& operator|=(vertex_set o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr vertex_set& operator&=(vertex_set o) noexcept {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr vertex_set& operator-=(vertex_set o) noexcept {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr vertex_set operator|(vertex_set a, vertex_set b) noexcept { return a |= b; }
  friend constexpr vertex_set operator&(vertex_set a, vertex_set b) noexcept { return a &= b; }
  friend constexpr vertex_set operator-(vertex_set a, vertex_set b) noexcept { return a -= b; }
  friend constexpr bool operator==(vertex_set, vertex_set) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace widthfill
