#include "engelkit/finite_group.hpp"

#include <algorithm>

#include "engelkit/errors.hpp"

namespace engelkit {

Subset::Subset(std::size_t universe, std::vector<Idx> members)
    : members_(std::move(members)), mask_(universe, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_)
    mask_[m] = 1;
}

Subset Subset::from_mask(std::vector<char> mask) {
  Subset s;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i])
      s.members_.push_back(static_cast<Idx>(i));
  s.mask_ = std::move(mask);
  return s;
}

bool Subset::subset_of(const Subset &other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Idx m) { return other.contains(m); });
}

namespace {

// Index-space analogue of the element closure in subgroup.cpp.
class IndexClosure {
public:
  explicit IndexClosure(const FiniteGroup &g) : g_(g), mask_(g.size(), 0) {
    add_element(g.identity());
  }

  bool contains(Idx i) const { return mask_[i] != 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Idx> &generators() const { return gens_; }

  void add_generator(Idx t) {
    if (contains(t))
      return;
    gens_.push_back(t);
    const auto processed = processed_;
    for (std::size_t i = 0; i < processed; ++i)
      add_element(g_.mul(elements_[i], t));
    while (processed_ < elements_.size()) {
      const auto u = elements_[processed_++];
      for (auto s : gens_)
        add_element(g_.mul(u, s));
    }
  }

  IndexedSubgroup finish() && {
    return {Subset::from_mask(std::move(mask_)), std::move(gens_)};
  }

private:
  void add_element(Idx e) {
    if (mask_[e])
      return;
    mask_[e] = 1;
    elements_.push_back(e);
  }

  const FiniteGroup &g_;
  std::vector<char> mask_;
  std::vector<Idx> elements_;
  std::vector<Idx> gens_;
  std::size_t processed_ = 0;
};

} // namespace

FiniteGroup::FiniteGroup(const Group &g, std::size_t cap) : group_(g) {
  elements_ = g.enumerate(Limits{.enumeration_cap = cap});
  const auto n = elements_.size();
  if (n > 0xFFFFFFFFULL)
    throw CapacityError(g.name() + ": too many elements to index");
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    index_.emplace(elements_[i].payload(), static_cast<Idx>(i));
  identity_ = index_of(g.identity());
  for (const auto &s : g.generators())
    generators_.push_back(index_of(s));

  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    inverse_[i] = index_of(g.inv(elements_[i]));

  if (n > kTableLimit)
    return;

  // right multiplication by generators, then a spanning tree from 1
  const auto ng = generators_.size();
  std::vector<Idx> right(n * ng);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t s = 0; s < ng; ++s)
      right[u * ng + s] = index_of(g.mul(elements_[u], elements_[generators_[s]]));

  std::vector<Idx> parent(n), via(n), bfs{identity_};
  std::vector<char> seen(n, 0);
  seen[identity_] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const auto u = bfs[head];
    for (std::size_t s = 0; s < ng; ++s) {
      const auto v = right[u * ng + s];
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        via[v] = static_cast<Idx>(s);
        bfs.push_back(v);
      }
    }
  }

  // u * v = (u * parent(v)) * s
  table_.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u)
    table_[u * n + identity_] = static_cast<std::uint16_t>(u);
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    const auto v = bfs[k];
    const auto pv = parent[v];
    const auto s = via[v];
    for (std::size_t u = 0; u < n; ++u)
      table_[u * n + v] = static_cast<std::uint16_t>(right[table_[u * n + pv] * ng + s]);
  }
}

Idx FiniteGroup::index_of(const Element &g) const {
  if (g.group_id() != group_.id())
    throw CrossGroupError();
  auto it = index_.find(g.payload());
  if (it == index_.end())
    throw Error(group_.name() + ": element outside the enumeration");
  return it->second;
}

Idx FiniteGroup::mul(Idx g, Idx h) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(g) * elements_.size() + h];
  return index_.at(group_.engine().mul(elements_[g].payload(), elements_[h].payload()));
}

Subset FiniteGroup::whole() const {
  return Subset::from_mask(std::vector<char>(size(), 1));
}

Subset FiniteGroup::trivial() const { return Subset(size(), {identity_}); }

IndexedSubgroup FiniteGroup::closure(std::span<const Idx> gens) const {
  IndexClosure c(*this);
  for (auto s : gens)
    c.add_generator(s);
  return std::move(c).finish();
}

IndexedSubgroup FiniteGroup::normal_closure(std::span<const Idx> seeds,
                                            std::span<const Idx> conj_by) const {
  IndexClosure c(*this);
  for (auto s : seeds)
    c.add_generator(s);
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    const auto s = c.generators()[i];
    for (auto x : conj_by) {
      const auto t = conj(s, x);
      if (!c.contains(t))
        c.add_generator(t);
    }
  }
  return std::move(c).finish();
}

std::vector<Idx> FiniteGroup::generating_set(const Subset &h) const {
  IndexClosure c(*this);
  for (auto m : h.members())
    if (!c.contains(m))
      c.add_generator(m);
  return c.generators();
}

bool FiniteGroup::is_closed(const Subset &h) const {
  if (!h.contains(identity_))
    return false;
  for (auto a : h.members()) {
    if (!h.contains(inv(a)))
      return false;
    for (auto b : h.members())
      if (!h.contains(mul(a, b)))
        return false;
  }
  return true;
}

bool FiniteGroup::is_normalized_by(const Subset &h, std::span<const Idx> conj_by) const {
  for (auto a : h.members())
    for (auto x : conj_by)
      if (!h.contains(conj(a, x)))
        return false;
  return true;
}

std::vector<std::vector<Idx>> FiniteGroup::conjugacy_classes() const {
  std::vector<char> seen(size(), 0);
  std::vector<std::vector<Idx>> classes;
  for (Idx start = 0; start < size(); ++start) {
    if (seen[start])
      continue;
    std::vector<Idx> cls{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (auto x : generators_) {
        const auto c = conj(cls[head], x);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Element> FiniteGroup::elements_of(const Subset &s) const {
  std::vector<Element> out;
  out.reserve(s.size());
  for (auto m : s.members())
    out.push_back(elements_[m]);
  return out;
}

Subgroup FiniteGroup::to_subgroup(const IndexedSubgroup &h, bool normal) const {
  std::vector<Element> gens;
  for (auto s : h.generators)
    gens.push_back(elements_[s]);
  return Subgroup{group_, std::move(gens), elements_of(h.set), normal, Tristate::unknown};
}

} // namespace engelkit
