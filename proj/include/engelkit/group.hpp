#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "engelkit/element.hpp"
#include "engelkit/limits.hpp"

namespace engelkit {

enum class GroupKind { permutation, modular, cyclic, direct, semidirect, example };

const char *to_string(GroupKind kind);

// nullopt means infinite.
using Order = std::optional<std::uint64_t>;

// g_i^e factors; generator indices refer to Group::generators().
struct WordLetter {
  std::size_t generator;
  std::int64_t exponent;
};
using Word = std::vector<WordLetter>;

namespace detail {

class GroupEngine {
public:
  explicit GroupEngine(GroupKind kind);
  virtual ~GroupEngine() = default;
  GroupEngine(const GroupEngine &) = delete;
  GroupEngine &operator=(const GroupEngine &) = delete;

  GroupKind kind() const noexcept { return kind_; }
  std::uint64_t id() const noexcept { return id_; }

  virtual Payload identity() const = 0;
  virtual Payload mul(const Payload &g, const Payload &h) const = 0;
  virtual Payload inv(const Payload &g) const = 0;
  virtual std::vector<Payload> generators() const = 0;
  virtual Order order() const = 0;
  virtual std::string format(const Payload &g) const = 0;
  virtual std::string descriptor() const = 0;
  virtual bool valid(const Payload &g) const = 0;

  // Normal form as a word in the generators, when the engine has one.
  virtual std::optional<Word> normal_form(const Payload &) const { return std::nullopt; }

  // Presentation-based check that generator images define an automorphism.
  // nullopt when the engine has no presentation to test against.
  virtual std::optional<bool> automorphism_by_relators(std::span<const Payload>) const {
    return std::nullopt;
  }

  // Breadth-first closure from the generators, cached after the first
  // successful run. Throws CapacityError past `cap`.
  std::shared_ptr<const std::vector<Payload>> enumeration(std::size_t cap) const;

protected:
  void seed_enumeration(std::vector<Payload> elements) const;
  std::vector<Payload> bfs_closure(std::size_t cap) const;

private:
  GroupKind kind_;
  std::uint64_t id_;
  mutable std::mutex cache_mutex_;
  mutable std::shared_ptr<const std::vector<Payload>> cache_;
};

} // namespace detail

// Immutable handle to a group engine plus a display label.
class Group {
public:
  Group(std::shared_ptr<const detail::GroupEngine> engine, std::string label);

  const std::string &name() const noexcept { return label_; }
  Group renamed(std::string label) const { return Group(engine_, std::move(label)); }
  std::string descriptor() const { return engine_->descriptor(); }

  GroupKind kind() const noexcept { return engine_->kind(); }
  std::uint64_t id() const noexcept { return engine_->id(); }
  bool same_group(const Group &other) const noexcept { return id() == other.id(); }

  Order order() const { return engine_->order(); }
  bool is_finite() const { return order().has_value(); }

  Element identity() const;
  std::vector<Element> generators() const;
  Element element(Payload payload) const; // validated

  Element mul(const Element &g, const Element &h) const;
  Element inv(const Element &g) const;
  Element power(const Element &g, std::int64_t e) const;
  // g^-1 h^-1 g h
  Element commutator(const Element &g, const Element &h) const;
  // h^-1 g h
  Element conjugate(const Element &g, const Element &h) const;
  bool is_identity(const Element &g) const;

  std::string format(const Element &g) const;
  std::optional<Word> normal_form(const Element &g) const;

  // Every element, sorted canonically. Throws InfiniteGroupError or
  // CapacityError when the group is infinite or larger than the cap.
  std::vector<Element> enumerate(const Limits &limits = {}) const;

  const detail::GroupEngine &engine() const noexcept { return *engine_; }
  const std::shared_ptr<const detail::GroupEngine> &engine_ptr() const noexcept { return engine_; }

private:
  void check(const Element &g) const;

  std::shared_ptr<const detail::GroupEngine> engine_;
  std::string label_;
};

// Product of images[g]^e over the letters of `word`, computed in `target`.
Element evaluate_word(const Group &target, const Word &word, std::span<const Element> images);

} // namespace engelkit
