#pragma once

#include <cstdint>
#include <vector>

#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"

namespace engelkit {

// A cycle of 1-based points, e.g. {1, 2, 3} for (1 2 3).
using Cycle = std::vector<std::int64_t>;
using CycleList = std::vector<Cycle>;

// Image array (0-based) of a product of disjoint cycles. Throws
// InvalidArgument for points outside 1..degree or overlapping cycles.
Payload permutation_from_cycles(std::size_t degree, const CycleList &cycles);

// Permutations act on the right: p^(gh) = (p^g)^h. The group is enumerated
// at construction, so it must fit in limits.enumeration_cap.
Group permutation_group(std::size_t degree, const std::vector<CycleList> &generators,
                        const Limits &limits = {});
Group symmetric_group(std::size_t n, const Limits &limits = {});

Group cyclic_group(std::uint64_t m);

// Symmetries of a regular m-gon acting on its vertices, order 2m, m >= 3.
Group dihedral_group(std::uint64_t order, const Limits &limits = {});

// <a, b | a^(p^n), b^(p^(n-1)), a^b = a^(1+p)>, order p^(2n-1).
// Generators are a = (0,1), b = (1,0) in (j, k) coordinates for b^j a^k.
Group modular_group(std::int64_t p, int n);

Group direct_product(const Group &a, const Group &b);

// actor must be cyclic; images[i] is the image of base.generators()[i]
// under the action of the actor's generator. The images must define an
// automorphism whose order divides the actor's order. Elements are
// (r, u) = x^r u with (r1,u)(r2,v) = (r1+r2, u^(x^r2) v).
Group semidirect_product(const Group &actor, const Group &base, std::vector<Element> images,
                         const Limits &limits = {});

} // namespace engelkit
