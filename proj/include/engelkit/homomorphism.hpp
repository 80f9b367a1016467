#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"

namespace engelkit {

struct AutomorphismReport {
  bool homomorphism = false;
  bool bijective = false;
  // "all-pairs", "generator-extension" or "relators"
  std::string method;
  std::uint64_t checks = 0;
  // a pair (u, v) with f(uv) != f(u) f(v), or an unreached element
  std::optional<std::pair<Element, Element>> witness;

  bool ok() const { return homomorphism && bijective; }
};

// Endomorphism of a finite group determined by the images of its generators.
// Elements are mapped through the engine's normal form when it has one,
// otherwise through a table grown along a breadth-first spanning tree.
class GeneratorMap {
public:
  GeneratorMap(Group base, std::vector<Element> images, const Limits &limits = {});

  const Group &base() const noexcept { return base_; }
  const std::vector<Element> &images() const noexcept { return images_; }

  Element apply(const Element &g) const;

  // Exhaustive over all pairs when |base| <= pair_limit, otherwise the
  // equivalent test f(us) = f(u) f(s) for every u and generator s. Falls back
  // to the engine's relator check when the base is too large to enumerate.
  AutomorphismReport check_automorphism(const Limits &limits = {},
                                        std::size_t pair_limit = 1000) const;

private:
  Group base_;
  std::vector<Element> images_;
  bool use_normal_form_ = false;
  std::unordered_map<Payload, Payload, PayloadHash> table_;
};

} // namespace engelkit
