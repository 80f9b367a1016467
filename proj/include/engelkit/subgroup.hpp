#pragma once

#include <optional>
#include <vector>

#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"

namespace engelkit {

enum class Tristate { unknown, yes, no };

struct Subgroup {
  Group parent;
  std::vector<Element> generators;
  // sorted canonically; present whenever the subgroup was materialized
  std::optional<std::vector<Element>> elements;
  bool is_normal = false;
  Tristate is_nilpotent = Tristate::unknown;

  std::size_t order() const { return elements ? elements->size() : 0; }
  bool contains(const Element &g) const;
};

// Closure of `seeds` under multiplication. Works for any engine as long as
// the generated subgroup is finite and no larger than limits.enumeration_cap;
// a larger closure raises DivergenceError.
Subgroup subgroup_generated(const Group &g, const std::vector<Element> &seeds,
                            const Limits &limits = {});

// Smallest subgroup containing `seeds` that is closed under conjugation by
// the generators of g. Supported for infinite g when the closure is finite.
Subgroup normal_closure(const Group &g, const std::vector<Element> &seeds,
                        const Limits &limits = {});

// {h : hs = sh for all s in seeds}; needs g enumerable.
Subgroup centralizer(const Group &g, const std::vector<Element> &seeds,
                     const Limits &limits = {});

} // namespace engelkit
