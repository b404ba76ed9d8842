#pragma once

#include <array>
#include <string_view>

#include "lr3/matrix.hpp"

namespace lr3 {

// Weight coordinates (l1, l2, m1, m2, n1, n2). The third entries are
// implicit: l3 = m3 = 0 and n3 = l1 + l2 + m1 + m2 - n1 - n2.
using LRPoint = Vec6;

inline constexpr std::size_t kRayCount = 9;

inline constexpr std::array<std::string_view, kRayCount> kRayLabels = {
    "b", "c", "f", "d1", "e1", "g1", "d2", "e2", "g2"};

// The nine extreme rays of the support cone, in the fixed label order above.
// This order is load-bearing: lift() scans it for a basis, and all
// permutations index into it.
inline constexpr std::array<LRPoint, kRayCount> kRays = {{
    {2, 1, 2, 1, 3, 2},  // b
    {1, 1, 1, 1, 2, 1},  // c
    {1, 0, 1, 0, 1, 1},  // f
    {1, 1, 1, 0, 1, 1},  // d1
    {1, 1, 0, 0, 1, 1},  // e1
    {1, 0, 0, 0, 1, 0},  // g1
    {1, 0, 1, 1, 1, 1},  // d2
    {0, 0, 1, 1, 1, 1},  // e2
    {0, 0, 1, 0, 1, 0},  // g2
}};

// The six d/e/g rays fall into two 3-element blocks. Every chamber uses b,
// one of {c, f}, and two rays from each block; the symmetry group preserves
// this structure (it may swap the two blocks and may swap c with f).
inline constexpr std::array<int, 3> kBlockOne = {3, 7, 5};  // d1, e2, g1
inline constexpr std::array<int, 3> kBlockTwo = {6, 4, 8};  // d2, e1, g2

inline int ray_index(std::string_view label) {
  for (std::size_t i = 0; i < kRayCount; ++i)
    if (kRayLabels[i] == label) return static_cast<int>(i);
  return -1;
}

}  // namespace lr3
