#pragma once

// Concrete engines behind the public constructors. Internal header.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "engelkit/group.hpp"
#include "engelkit/homomorphism.hpp"
#include "engelkit/modular.hpp"

namespace engelkit::detail {

class PermutationEngine final : public GroupEngine {
public:
  PermutationEngine(std::size_t degree, std::vector<Payload> generators, std::size_t cap);

  Payload identity() const override;
  Payload mul(const Payload &g, const Payload &h) const override;
  Payload inv(const Payload &g) const override;
  std::vector<Payload> generators() const override { return generators_; }
  Order order() const override { return order_; }
  std::string format(const Payload &g) const override;
  std::string descriptor() const override;
  bool valid(const Payload &g) const override;

  std::size_t degree() const noexcept { return degree_; }

private:
  std::size_t degree_;
  std::vector<Payload> generators_;
  Order order_;
};

class CyclicEngine final : public GroupEngine {
public:
  explicit CyclicEngine(std::uint64_t m);

  Payload identity() const override { return {0}; }
  Payload mul(const Payload &g, const Payload &h) const override;
  Payload inv(const Payload &g) const override;
  std::vector<Payload> generators() const override;
  Order order() const override { return m_; }
  std::string format(const Payload &g) const override;
  std::string descriptor() const override;
  bool valid(const Payload &g) const override;
  std::optional<Word> normal_form(const Payload &g) const override { return Word{{0, g[0]}}; }

private:
  std::int64_t modulus() const { return static_cast<std::int64_t>(m_); }
  std::uint64_t m_;
};

class ModularEngine final : public GroupEngine {
public:
  explicit ModularEngine(ModularArithmetic arithmetic);

  Payload identity() const override { return {0, 0}; }
  Payload mul(const Payload &g, const Payload &h) const override;
  Payload inv(const Payload &g) const override;
  std::vector<Payload> generators() const override;
  Order order() const override { return arith_.order(); }
  std::string format(const Payload &g) const override;
  std::string descriptor() const override;
  bool valid(const Payload &g) const override;
  std::optional<Word> normal_form(const Payload &g) const override;
  std::optional<bool> automorphism_by_relators(std::span<const Payload> images) const override;

  const ModularArithmetic &arithmetic() const noexcept { return arith_; }

  // "b^j a^k" with zero factors dropped; suffix labels example components.
  static std::string format_coords(std::int64_t j, std::int64_t k, const std::string &suffix);

private:
  ModularArithmetic arith_;
};

class DirectEngine final : public GroupEngine {
public:
  DirectEngine(Group a, Group b);

  Payload identity() const override;
  Payload mul(const Payload &g, const Payload &h) const override;
  Payload inv(const Payload &g) const override;
  std::vector<Payload> generators() const override;
  Order order() const override;
  std::string format(const Payload &g) const override;
  std::string descriptor() const override;
  bool valid(const Payload &g) const override;
  std::optional<Word> normal_form(const Payload &g) const override;

private:
  std::pair<Payload, Payload> split(const Payload &g) const;
  static Payload join(const Payload &u, const Payload &v);

  Group a_;
  Group b_;
  std::size_t split_;
};

class SemidirectEngine final : public GroupEngine {
public:
  SemidirectEngine(Group actor, Group base, std::vector<Element> images, const Limits &limits);

  Payload identity() const override;
  Payload mul(const Payload &g, const Payload &h) const override;
  Payload inv(const Payload &g) const override;
  std::vector<Payload> generators() const override;
  Order order() const override;
  std::string format(const Payload &g) const override;
  std::string descriptor() const override;
  bool valid(const Payload &g) const override;
  std::optional<Word> normal_form(const Payload &g) const override;

  const Group &actor() const noexcept { return actor_; }
  const Group &base() const noexcept { return base_; }
  const std::vector<Element> &images() const noexcept { return images_; }

private:
  // u^(x^r) for a base payload u
  Payload act(std::int64_t r, const Payload &u) const;

  Group actor_;
  Group base_;
  std::vector<Element> images_;
  std::int64_t m_;
  std::vector<GeneratorMap> powers_; // powers_[r] is the action of x^r
};

} // namespace engelkit::detail
