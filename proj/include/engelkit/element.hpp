#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace engelkit {

// Canonical coordinates of a group element. Each engine fixes the layout:
// permutation images, (j, k) for b^j a^k, concatenations for products.
using Payload = std::vector<std::int64_t>;

struct PayloadHash {
  std::size_t operator()(const Payload &p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : p) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Value-semantic group element. Equality is payload identity within one group.
class Element {
public:
  Element() = default;
  Element(std::uint64_t group_id, Payload payload)
      : group_id_(group_id), payload_(std::move(payload)) {}

  std::uint64_t group_id() const noexcept { return group_id_; }
  const Payload &payload() const noexcept { return payload_; }

  friend bool operator==(const Element &, const Element &) = default;
  friend auto operator<=>(const Element &, const Element &) = default;

private:
  std::uint64_t group_id_ = 0;
  Payload payload_;
};

struct ElementHash {
  std::size_t operator()(const Element &e) const noexcept {
    return PayloadHash{}(e.payload()) ^ (std::hash<std::uint64_t>{}(e.group_id()) << 1);
  }
};

} // namespace engelkit
