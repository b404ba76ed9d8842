#pragma once

#include <cstddef>
#include <vector>

#include "lr3/partition.hpp"

// Brute-force Littlewood-Richardson rule: count (or list) the skew
// semistandard tableaux of shape nu/lam with content mu whose reverse reading
// word is a lattice word. This is the ground-truth oracle the chamber-complex
// evaluation is checked against, so it stays deliberately direct: an
// exhaustive backtracking fill with pruning, no product formulas.
//
// Conventions pinned here:
//   - reverse reading word = rows top to bottom, each row read right to left;
//   - lattice word = every prefix contains at least as many i as i+1;
//   - semistandard = rows weakly increase left to right, columns strictly
//     increase top to bottom (absent cells of lam impose nothing).

namespace lr3 {

// Row-by-row grid of a skew tableau: rows[r] lists the entries of the filled
// cells of row r (columns lam_r .. nu_r - 1) left to right; rows without
// filled cells are empty vectors.
using SkewTableau = std::vector<std::vector<int>>;

namespace detail {

// Visits every valid filling. Cells are filled in reverse reading order
// (top row first, right to left within a row), which is exactly the order the
// reading word is spelled in, so the lattice condition is enforced
// incrementally: placing v requires count(v) < count(v-1). Row and column
// comparisons bind against already-placed neighbours only.
template <class Emit>
void walk_lr_fillings(const Partition& lam, const Partition& mu,
                      const Partition& nu, Emit&& emit) {
  if (lam.weight() + mu.weight() != nu.weight()) return;
  if (!nu.contains(lam)) return;

  const std::size_t nrows = nu.length();
  const int k = static_cast<int>(mu.length());

  struct Cell {
    std::size_t row;
    long long col;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < nrows; ++r)
    for (long long c = nu.part(r) - 1; c >= lam.part(r); --c)
      cells.push_back({r, c});

  // grid[r] spans columns lam_r .. nu_r - 1; 0 marks an unfilled cell.
  std::vector<std::vector<int>> grid(nrows);
  for (std::size_t r = 0; r < nrows; ++r)
    grid[r].assign(static_cast<std::size_t>(nu.part(r) - lam.part(r)), 0);

  std::vector<long long> count(static_cast<std::size_t>(k) + 1, 0);

  auto cell_at = [&](std::size_t r, long long c) -> int& {
    return grid[r][static_cast<std::size_t>(c - lam.part(r))];
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      emit(static_cast<const std::vector<std::vector<int>>&>(grid));
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1, hi = k;
    if (c + 1 < nu.part(r)) hi = std::min(hi, cell_at(r, c + 1));
    if (r > 0 && c >= lam.part(r - 1))  // cell above exists and is filled
      lo = std::max(lo, cell_at(r - 1, c) + 1);
    for (int v = lo; v <= hi; ++v) {
      const std::size_t vi = static_cast<std::size_t>(v);
      if (count[vi] >= mu.part(vi - 1)) continue;   // content budget
      if (v > 1 && count[vi] >= count[vi - 1]) continue;  // lattice prefix
      ++count[vi];
      cell_at(r, c) = v;
      self(self, idx + 1);
      cell_at(r, c) = 0;
      --count[vi];
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline long long lr_coefficient(const Partition& lam, const Partition& mu,
                                const Partition& nu) {
  long long n = 0;
  detail::walk_lr_fillings(lam, mu, nu, [&](const auto&) { ++n; });
  return n;
}

inline std::vector<SkewTableau> enumerate_lr_tableaux(const Partition& lam,
                                                      const Partition& mu,
                                                      const Partition& nu) {
  std::vector<SkewTableau> out;
  detail::walk_lr_fillings(lam, mu, nu,
                           [&](const std::vector<std::vector<int>>& g) { out.push_back(g); });
  return out;
}

}  // namespace lr3
