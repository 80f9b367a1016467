#include "engelkit/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_set>

#include "engelkit/errors.hpp"

namespace engelkit {

const char *to_string(GroupKind kind) {
  switch (kind) {
  case GroupKind::permutation: return "permutation";
  case GroupKind::modular: return "modular";
  case GroupKind::cyclic: return "cyclic";
  case GroupKind::direct: return "direct";
  case GroupKind::semidirect: return "semidirect";
  case GroupKind::example: return "example";
  }
  return "unknown";
}

namespace detail {

namespace {
std::atomic<std::uint64_t> next_group_id{1};
}

GroupEngine::GroupEngine(GroupKind kind) : kind_(kind), id_(next_group_id.fetch_add(1)) {}

void GroupEngine::seed_enumeration(std::vector<Payload> elements) const {
  std::sort(elements.begin(), elements.end());
  std::lock_guard lock(cache_mutex_);
  cache_ = std::make_shared<const std::vector<Payload>>(std::move(elements));
}

std::vector<Payload> GroupEngine::bfs_closure(std::size_t cap) const {
  // Positive words suffice: every element of a finite group has finite order.
  const auto gens = generators();
  std::vector<Payload> elements{identity()};
  std::unordered_set<Payload, PayloadHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &s : gens) {
      auto next = mul(elements[head], s);
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw CapacityError(descriptor() + ": closure exceeds enumeration cap " +
                              std::to_string(cap));
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::shared_ptr<const std::vector<Payload>> GroupEngine::enumeration(std::size_t cap) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (cache_) {
      if (cache_->size() > cap)
        throw CapacityError(descriptor() + ": order " + std::to_string(cache_->size()) +
                            " exceeds enumeration cap " + std::to_string(cap));
      return cache_;
    }
  }
  auto ord = order();
  if (!ord)
    throw InfiniteGroupError(descriptor());
  if (*ord > cap)
    throw CapacityError(descriptor() + ": order " + std::to_string(*ord) +
                        " exceeds enumeration cap " + std::to_string(cap));

  auto elements = bfs_closure(cap);
  if (elements.size() != *ord)
    throw Error(descriptor() + ": generators produce " + std::to_string(elements.size()) +
                " elements, expected " + std::to_string(*ord));
  seed_enumeration(std::move(elements));
  std::lock_guard lock(cache_mutex_);
  return cache_;
}

} // namespace detail

Group::Group(std::shared_ptr<const detail::GroupEngine> engine, std::string label)
    : engine_(std::move(engine)), label_(std::move(label)) {
  if (label_.empty())
    label_ = engine_->descriptor();
}

void Group::check(const Element &g) const {
  if (g.group_id() != id())
    throw CrossGroupError();
}

Element Group::identity() const { return Element(id(), engine_->identity()); }

std::vector<Element> Group::generators() const {
  std::vector<Element> out;
  for (auto &p : engine_->generators())
    out.emplace_back(id(), std::move(p));
  return out;
}

Element Group::element(Payload payload) const {
  if (!engine_->valid(payload))
    throw InvalidArgument(descriptor() + ": payload is not a canonical element");
  return Element(id(), std::move(payload));
}

Element Group::mul(const Element &g, const Element &h) const {
  check(g);
  check(h);
  return Element(id(), engine_->mul(g.payload(), h.payload()));
}

Element Group::inv(const Element &g) const {
  check(g);
  return Element(id(), engine_->inv(g.payload()));
}

Element Group::power(const Element &g, std::int64_t e) const {
  check(g);
  Payload base = e < 0 ? engine_->inv(g.payload()) : g.payload();
  // negate through unsigned so INT64_MIN is safe
  auto n = e < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(e)
                 : static_cast<std::uint64_t>(e);
  Payload result = engine_->identity();
  while (n > 0) {
    if (n & 1U)
      result = engine_->mul(result, base);
    n >>= 1U;
    if (n > 0)
      base = engine_->mul(base, base);
  }
  return Element(id(), std::move(result));
}

Element Group::commutator(const Element &g, const Element &h) const {
  check(g);
  check(h);
  const auto &e = *engine_;
  auto gh = e.mul(g.payload(), h.payload());
  auto hg = e.mul(h.payload(), g.payload());
  return Element(id(), e.mul(e.inv(hg), gh));
}

Element Group::conjugate(const Element &g, const Element &h) const {
  check(g);
  check(h);
  const auto &e = *engine_;
  return Element(id(), e.mul(e.inv(h.payload()), e.mul(g.payload(), h.payload())));
}

bool Group::is_identity(const Element &g) const {
  check(g);
  return g.payload() == engine_->identity();
}

std::string Group::format(const Element &g) const {
  check(g);
  return engine_->format(g.payload());
}

std::optional<Word> Group::normal_form(const Element &g) const {
  check(g);
  return engine_->normal_form(g.payload());
}

Element evaluate_word(const Group &target, const Word &word, std::span<const Element> images) {
  auto result = target.identity();
  for (const auto &letter : word) {
    if (letter.generator >= images.size())
      throw InvalidArgument("word refers to generator " + std::to_string(letter.generator + 1) +
                            " but only " + std::to_string(images.size()) + " images given");
    if (letter.exponent != 0)
      result = target.mul(result, target.power(images[letter.generator], letter.exponent));
  }
  return result;
}

std::vector<Element> Group::enumerate(const Limits &limits) const {
  auto payloads = engine_->enumeration(limits.enumeration_cap);
  std::vector<Element> out;
  out.reserve(payloads->size());
  for (const auto &p : *payloads)
    out.emplace_back(id(), p);
  return out;
}

} // namespace engelkit
