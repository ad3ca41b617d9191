#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace widthfill {

/// A permutation of 1..n. `sequence()[i]` is the vertex at position i+1;
/// `position(v)` is its inverse. Used both as a layout (left to right) and
/// as an elimination order (first element eliminated first).
class vertex_ordering {
 public:
  vertex_ordering() = default;

  /// Throws argument_error unless `sequence` is a permutation of 1..size.
  explicit vertex_ordering(std::vector<vertex> sequence) : sequence_(std::move(sequence)) {
    const auto n = sequence_.size();
    position_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const vertex v = sequence_[i];
      if (v < 1 || static_cast<std::size_t>(v) > n || position_[v] != 0)
        throw argument_error("not a permutation of 1.." + std::to_string(n));
      position_[v] = static_cast<int>(i) + 1;
    }
  }

  static vertex_ordering identity(int n) {
    std::vector<vertex> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[i] = i + 1;
    return vertex_ordering(std::move(seq));
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(sequence_.size()); }
  [[nodiscard]] std::span<const vertex> sequence() const noexcept { return sequence_; }
  /// 1-based position of v.
  [[nodiscard]] int position(vertex v) const { return position_[v]; }
  /// Vertex at 1-based position i.
  [[nodiscard]] vertex at(int i) const { return sequence_[static_cast<std::size_t>(i) - 1]; }

  [[nodiscard]] vertex_ordering reversed() const {
    std::vector<vertex> seq(sequence_.rbegin(), sequence_.rend());
    return vertex_ordering(std::move(seq));
  }

  /// The first i vertices.
  [[nodiscard]] vertex_set prefix(int i) const {
    vertex_set s;
    for (int k = 0; k < i; ++k) s.insert(sequence_[k]);
    return s;
  }

  friend bool operator==(const vertex_ordering& a, const vertex_ordering& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<vertex> sequence_;
  std::vector<int> position_{0};
};

}  // namespace widthfill
