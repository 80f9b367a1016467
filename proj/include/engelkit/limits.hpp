#pragma once

#include <algorithm>
#include <cstddef>

namespace engelkit {

struct Limits {
  // Whole-group enumeration (closure BFS, upper central series).
  std::size_t enumeration_cap = 200000;
  // O(|G|^2) set analyses: Engel classification, Fitting, rho.
  std::size_t analysis_cap = 5000;
  // Iteration bound for Engel degrees in infinite groups.
  std::size_t symbolic_iteration_cap = 64;

  static constexpr std::size_t hard_ceiling = 2'000'000;

  static Limits with_max_order(std::size_t cap) {
    Limits l;
    l.enumeration_cap = std::min(cap, hard_ceiling);
    l.analysis_cap = l.enumeration_cap;
    return l;
  }
};

} // namespace engelkit
