#pragma once

#include "ymheat/numeric.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ymheat {

/// Integer partition stored as its weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); zero past the last row.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct BorderStripStep {
  Partition target;
  int height = 0;

  friend bool operator==(const BorderStripStep&, const BorderStripStep&) = default;
};

/// All partitions of k in lexicographically decreasing order.
std::vector<Partition> enumerate(int k);

/// Number of partitions of k (Euler pentagonal recurrence).
std::uint64_t partition_count(int k);

/// Sum of contents j - i over the boxes of the diagram.
long total_content(const Partition& a);

/// Dimension of the irreducible representation of the symmetric group.
BigInt sym_dim(const Partition& a);

/// Hook length of box (i, j), 0-based coordinates.
int hook_length(const Partition& a, int i, int j);

/// Partitions with one more box, ordered by row of the new box.
std::vector<Partition> add_box(const Partition& a);

/// Partitions with one corner removed, ordered by row of the removed box.
std::vector<Partition> remove_box(const Partition& a);

/// Partitions reached by adding one box and removing a different one.
std::vector<Partition> sim_partitions(const Partition& a);

/// Border strips of size r that can be added to a, with their heights.
std::vector<BorderStripStep> border_strips(const Partition& a, int r);

}  // namespace ymheat
