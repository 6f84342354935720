#pragma once

#include <vector>

#include "unicas/exact/rational.hpp"

namespace unicas {

/// Conjugacy class of S_m, labeled by its cycle type.
struct CycleType {
  std::vector<int> parts;  // weakly decreasing, sums to m
  BigInt class_size;

  int cycle_count() const { return static_cast<int>(parts.size()); }
  /// Sum of squared cycle lengths.
  int squared_length_sum() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline constexpr int kMaxSymmetricDegree = 8;

/// Every cycle type of S_m, partitions in reverse-lexicographic order
/// (m), (m-1,1), ..., (1^m). Throws std::out_of_range unless 1 <= m <= 8.
std::vector<CycleType> symmetric_class_sizes(int m);

}  // namespace unicas
