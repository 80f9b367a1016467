#include "engelkit/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "engelkit/errors.hpp"

namespace engelkit {

bool Subgroup::contains(const Element &g) const {
  if (!elements)
    return false;
  return std::binary_search(elements->begin(), elements->end(), g);
}

namespace {

// Incremental closure: every element is right-multiplied by every generator,
// including generators added after the element was first processed.
class Closure {
public:
  Closure(const Group &g, std::size_t cap) : group_(g), cap_(cap) {
    add_element(g.identity());
  }

  bool contains(const Element &e) const { return seen_.contains(e); }

  void add_generator(const Element &t) {
    if (contains(t))
      return;
    gens_.push_back(t);
    const auto processed = processed_;
    for (std::size_t i = 0; i < processed; ++i)
      add_element(group_.mul(elements_[i], t));
    run();
  }

  const std::vector<Element> &generators() const { return gens_; }

  std::vector<Element> sorted_elements() const {
    auto out = elements_;
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  void add_element(Element e) {
    if (!seen_.insert(e).second)
      return;
    if (elements_.size() >= cap_)
      throw DivergenceError(group_.name() + ": subgroup closure exceeds " + std::to_string(cap_) +
                            " elements");
    elements_.push_back(std::move(e));
  }

  void run() {
    while (processed_ < elements_.size()) {
      const auto u = elements_[processed_++];
      for (std::size_t s = 0; s < gens_.size(); ++s)
        add_element(group_.mul(u, gens_[s]));
    }
  }

  const Group &group_;
  std::size_t cap_;
  std::vector<Element> gens_;
  std::vector<Element> elements_;
  std::unordered_set<Element, ElementHash> seen_;
  std::size_t processed_ = 0;
};

void check_members(const Group &g, const std::vector<Element> &seeds) {
  for (const auto &s : seeds)
    if (s.group_id() != g.id())
      throw CrossGroupError();
}

} // namespace

Subgroup subgroup_generated(const Group &g, const std::vector<Element> &seeds,
                            const Limits &limits) {
  check_members(g, seeds);
  Closure c(g, limits.enumeration_cap);
  for (const auto &s : seeds)
    c.add_generator(s);
  return Subgroup{g, c.generators(), c.sorted_elements(), false, Tristate::unknown};
}

Subgroup normal_closure(const Group &g, const std::vector<Element> &seeds, const Limits &limits) {
  check_members(g, seeds);
  Closure c(g, limits.enumeration_cap);
  for (const auto &s : seeds)
    c.add_generator(s);
  // For a finite H, H^x contained in H forces H^x = H, so conjugating the
  // generators of H by the generators of G is enough (no inverses needed).
  const auto conj_by = g.generators();
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    const auto s = c.generators()[i];
    for (const auto &x : conj_by) {
      auto t = g.conjugate(s, x);
      if (!c.contains(t))
        c.add_generator(t);
    }
  }
  return Subgroup{g, c.generators(), c.sorted_elements(), true, Tristate::unknown};
}

Subgroup centralizer(const Group &g, const std::vector<Element> &seeds, const Limits &limits) {
  check_members(g, seeds);
  std::vector<Element> members;
  for (const auto &h : g.enumerate(limits)) {
    bool commutes = std::all_of(seeds.begin(), seeds.end(), [&](const Element &s) {
      return g.mul(h, s) == g.mul(s, h);
    });
    if (commutes)
      members.push_back(h);
  }
  Closure c(g, limits.enumeration_cap);
  for (const auto &h : members)
    c.add_generator(h);
  return Subgroup{g, c.generators(), std::move(members), false, Tristate::unknown};
}

} // namespace engelkit
