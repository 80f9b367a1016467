#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "engelkit/finite_group.hpp"
#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"

namespace engelkit {

// Left-normed commutator [g,_n a] = [[g,_(n-1) a], a], [g,_1 a] = g^-1 g^a.
// n = 0 is rejected.
Element iterated_commutator(const Group &group, const Element &g, const Element &a, std::size_t n);

enum class EngelStatus { engel, not_engel, unknown };

struct EngelDegree {
  EngelStatus status = EngelStatus::unknown;
  std::size_t degree = 0;     // minimal n >= 1, meaningful when status == engel
  std::size_t iterations = 0; // commutators evaluated

  bool is_engel() const { return status == EngelStatus::engel; }
  friend bool operator==(const EngelDegree &, const EngelDegree &) = default;
};

std::string to_string(const EngelDegree &d);

// Minimal n with [g,_n a] = 1. The orbit c -> [c, a] is tracked by canonical
// form, so a repeat without reaching 1 is an exact not_engel verdict. Finite
// groups always get an exact answer; infinite ones stop after
// limits.symbolic_iteration_cap steps with `unknown`.
EngelDegree left_engel_degree(const Group &group, const Element &a, const Element &g,
                              const Limits &limits = {});

// Minimal n with [a,_n g] = 1.
EngelDegree right_engel_degree(const Group &group, const Element &a, const Element &g,
                               const Limits &limits = {});

// L, L-bar, R, R-bar of a finite group with bounded degrees.
struct EngelClassification {
  Subset left;
  Subset bounded_left;
  Subset right;
  Subset bounded_right;
  // element index -> supremum over g of the minimal degree
  std::map<Idx, std::size_t> left_degree;
  std::map<Idx, std::size_t> right_degree;
};

// Exhaustive pairwise classification; throws CapacityError when
// |G| > limits.analysis_cap.
EngelClassification classify(const FiniteGroup &group, const Limits &limits = {});

} // namespace engelkit
