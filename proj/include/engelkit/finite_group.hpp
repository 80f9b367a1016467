#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"
#include "engelkit/subgroup.hpp"

namespace engelkit {

using Idx = std::uint32_t;

// Subset of a finite group: sorted member indices plus a membership mask.
class Subset {
public:
  Subset() = default;
  Subset(std::size_t universe, std::vector<Idx> members);
  static Subset from_mask(std::vector<char> mask);

  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Idx i) const noexcept { return mask_[i] != 0; }
  const std::vector<Idx> &members() const noexcept { return members_; }
  const std::vector<char> &mask() const noexcept { return mask_; }

  bool subset_of(const Subset &other) const;
  friend bool operator==(const Subset &a, const Subset &b) { return a.mask_ == b.mask_; }

private:
  std::vector<Idx> members_;
  std::vector<char> mask_;
};

// A subgroup in index form together with a generating set.
struct IndexedSubgroup {
  Subset set;
  std::vector<Idx> generators;
};

// Enumerated view of a finite group. Elements are indexed in canonical
// order; small groups get a full multiplication table built along a
// spanning tree, larger ones multiply through the engine.
class FiniteGroup {
public:
  static constexpr std::size_t kTableLimit = 6000;

  // Throws InfiniteGroupError / CapacityError when the group does not fit.
  FiniteGroup(const Group &g, std::size_t cap);

  FiniteGroup(const FiniteGroup &) = delete;
  FiniteGroup &operator=(const FiniteGroup &) = delete;
  FiniteGroup(FiniteGroup &&) = default;

  const Group &group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Idx identity() const noexcept { return identity_; }
  std::span<const Idx> generators() const noexcept { return generators_; }

  const Element &element(Idx i) const { return elements_[i]; }
  Idx index_of(const Element &g) const;
  std::string format(Idx i) const { return group_.format(elements_[i]); }

  Idx mul(Idx g, Idx h) const;
  Idx inv(Idx g) const { return inverse_[g]; }
  // g^-1 h^-1 g h
  Idx comm(Idx g, Idx h) const { return mul(inv(mul(h, g)), mul(g, h)); }
  // h^-1 g h
  Idx conj(Idx g, Idx h) const { return mul(inv(h), mul(g, h)); }

  Subset whole() const;
  Subset trivial() const;

  // <gens>
  IndexedSubgroup closure(std::span<const Idx> gens) const;
  // smallest subgroup containing seeds, closed under conjugation by conj_by
  IndexedSubgroup normal_closure(std::span<const Idx> seeds, std::span<const Idx> conj_by) const;
  // Greedy generating set for a subset already known to be a subgroup.
  std::vector<Idx> generating_set(const Subset &h) const;
  bool is_closed(const Subset &h) const;
  bool is_normalized_by(const Subset &h, std::span<const Idx> conj_by) const;
  // Conjugacy classes under conjugation by the group generators.
  std::vector<std::vector<Idx>> conjugacy_classes() const;

  Subgroup to_subgroup(const IndexedSubgroup &h, bool normal) const;
  std::vector<Element> elements_of(const Subset &s) const;

private:
  Group group_;
  std::vector<Element> elements_;
  std::unordered_map<Payload, Idx, PayloadHash> index_;
  std::vector<Idx> generators_;
  std::vector<Idx> inverse_;
  std::vector<std::uint16_t> table_;
  Idx identity_ = 0;
};

} // namespace engelkit
