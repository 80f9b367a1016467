#include "engelkit/series.hpp"

#include <algorithm>
#include <unordered_map>

#include "engelkit/errors.hpp"

namespace engelkit {

namespace {

void require_analysis(const FiniteGroup &g, const Limits &limits) {
  if (g.size() > limits.analysis_cap)
    throw CapacityError(g.group().name() + ": order " + std::to_string(g.size()) +
                        " exceeds analysis cap " + std::to_string(limits.analysis_cap));
}

// [gamma, H] as a normal closure inside H.
IndexedSubgroup commutator_with(const FiniteGroup &g, const Subset &gamma,
                                std::span<const Idx> h_gens) {
  std::vector<Idx> seeds;
  std::vector<char> seen(g.size(), 0);
  for (auto x : gamma.members())
    for (auto s : h_gens) {
      const auto c = g.comm(x, s);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  return g.normal_closure(seeds, h_gens);
}

std::vector<IndexedSubgroup> lower_series_of(const FiniteGroup &g, const IndexedSubgroup &h) {
  std::vector<IndexedSubgroup> terms{h};
  while (terms.back().set.size() > 1) {
    auto next = commutator_with(g, terms.back().set, h.generators);
    if (next.set.size() == terms.back().set.size())
      break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::optional<std::size_t> class_of(const std::vector<IndexedSubgroup> &lower) {
  if (lower.back().set.size() != 1)
    return std::nullopt;
  return lower.size() - 1;
}

} // namespace

std::optional<std::size_t> CentralSeries::height(Idx g) const {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].contains(g))
      return i;
  return std::nullopt;
}

Subset centre(const FiniteGroup &g) {
  std::vector<Idx> members;
  for (Idx x = 0; x < g.size(); ++x) {
    auto gens = g.generators();
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Idx s) { return g.mul(x, s) == g.mul(s, x); }))
      members.push_back(x);
  }
  return Subset(g.size(), std::move(members));
}

CentralSeries upper_central_series(const FiniteGroup &g) {
  CentralSeries series;
  series.terms.push_back(g.trivial());
  const auto gens = g.generators();
  for (;;) {
    const auto &current = series.terms.back();
    std::vector<Idx> members;
    for (Idx x = 0; x < g.size(); ++x)
      if (std::all_of(gens.begin(), gens.end(),
                      [&](Idx s) { return current.contains(g.comm(x, s)); }))
        members.push_back(x);
    if (members.size() == current.size())
      break;
    series.terms.emplace_back(g.size(), std::move(members));
  }
  return series;
}

std::vector<IndexedSubgroup> lower_central_series(const FiniteGroup &g) {
  const auto gens = g.generators();
  IndexedSubgroup whole{g.whole(), {gens.begin(), gens.end()}};
  return lower_series_of(g, whole);
}

std::optional<std::size_t> nilpotency_class(const FiniteGroup &g) {
  return class_of(lower_central_series(g));
}

std::optional<std::size_t> nilpotency_class(const FiniteGroup &g, const IndexedSubgroup &h) {
  return class_of(lower_series_of(g, h));
}

std::optional<std::size_t> nilpotency_class(const Group &g, const Limits &limits) {
  const auto ord = g.order();
  if (ord && *ord <= limits.enumeration_cap) {
    FiniteGroup fg(g, limits.enumeration_cap);
    return nilpotency_class(fg);
  }
  // G = Z_c iff every generator lies in Z_c
  std::size_t c = 0;
  for (const auto &s : g.generators()) {
    auto h = element_height(g, s, limits);
    if (!h)
      return std::nullopt;
    c = std::max(c, *h);
  }
  return c;
}

std::optional<std::size_t> element_height(const Group &group, const Element &g,
                                          const Limits &limits) {
  struct Frame {
    Element element;
    std::size_t next_gen = 0;
    std::size_t best = 0;
  };
  const auto gens = group.generators();
  std::unordered_map<Element, std::optional<std::size_t>, ElementHash> memo;
  std::unordered_map<Element, bool, ElementHash> on_stack;
  memo.emplace(group.identity(), 0);

  auto resolved = [&](const Element &e) -> const std::optional<std::size_t> * {
    auto it = memo.find(e);
    return it == memo.end() ? nullptr : &it->second;
  };
  if (auto r = resolved(g))
    return *r;

  std::vector<Frame> stack{{g}};
  on_stack[g] = true;
  std::optional<std::size_t> child; // result handed back to the parent frame
  bool have_child = false;
  while (!stack.empty()) {
    auto &top = stack.back();
    if (have_child) {
      have_child = false;
      if (!child) {
        // a non-hypercentral commutator makes every frame above it fail
        for (auto &f : stack) {
          memo[f.element] = std::nullopt;
          on_stack.erase(f.element);
        }
        return std::nullopt;
      }
      top.best = std::max(top.best, *child);
      ++top.next_gen;
    }
    if (top.next_gen == gens.size()) {
      const auto h = top.best + 1;
      memo[top.element] = h;
      on_stack.erase(top.element);
      stack.pop_back();
      child = h;
      have_child = true;
      continue;
    }
    auto c = group.commutator(top.element, gens[top.next_gen]);
    if (auto r = resolved(c)) {
      child = *r;
      have_child = true;
      continue;
    }
    if (on_stack.contains(c)) {
      // heights strictly drop along the chain, so a loop means no height
      child = std::nullopt;
      have_child = true;
      continue;
    }
    if (memo.size() + stack.size() > limits.enumeration_cap)
      throw DivergenceError(group.name() + ": central height exploration exceeds " +
                            std::to_string(limits.enumeration_cap) + " elements");
    on_stack[c] = true;
    stack.push_back({std::move(c)});
  }
  return child;
}

std::optional<std::size_t> central_height(const Group &group, const Element &g,
                                          const Limits &limits) {
  const auto ord = group.order();
  if (ord && *ord <= limits.enumeration_cap) {
    FiniteGroup fg(group, limits.enumeration_cap);
    return upper_central_series(fg).height(fg.index_of(g));
  }
  return element_height(group, g, limits);
}

IndexedSubgroup fitting_subgroup(const FiniteGroup &g, const Limits &limits) {
  require_analysis(g, limits);
  const auto gens = g.generators();
  std::map<std::vector<Idx>, bool> nilpotent_closure;
  std::vector<Idx> members;
  for (const auto &cls : g.conjugacy_classes()) {
    const Idx rep = cls.front();
    auto closure = g.normal_closure(std::span<const Idx>(&rep, 1), gens);
    auto [it, fresh] = nilpotent_closure.try_emplace(closure.set.members(), false);
    if (fresh)
      it->second = nilpotency_class(g, closure).has_value();
    if (it->second)
      members.insert(members.end(), cls.begin(), cls.end());
  }
  Subset set(g.size(), std::move(members));
  auto generators = g.generating_set(set);
  return {std::move(set), std::move(generators)};
}

Subnormality is_subnormal(const FiniteGroup &g, Idx x, const IndexedSubgroup &h) {
  if (!h.set.contains(x))
    throw InvalidArgument("is_subnormal: element does not lie in the subgroup");
  const auto cyclic_order = g.closure(std::span<const Idx>(&x, 1)).set.size();
  IndexedSubgroup k = h;
  Subnormality result;
  while (k.set.size() != cyclic_order) {
    auto next = g.normal_closure(std::span<const Idx>(&x, 1), k.generators);
    if (next.set.size() == k.set.size())
      return result; // stalled above <x>
    k = std::move(next);
    ++result.defect;
  }
  result.subnormal = true;
  return result;
}

IndexedSubgroup baer_radical(const FiniteGroup &g, const Limits &limits) {
  require_analysis(g, limits);
  const auto gens = g.generators();
  const IndexedSubgroup whole{g.whole(), {gens.begin(), gens.end()}};
  std::vector<Idx> seeds;
  for (const auto &cls : g.conjugacy_classes())
    if (is_subnormal(g, cls.front(), whole).subnormal)
      seeds.insert(seeds.end(), cls.begin(), cls.end());
  return g.closure(seeds);
}

RhoResult rho(const FiniteGroup &g, const Limits &limits) {
  require_analysis(g, limits);
  const auto gens = g.generators();
  const auto classes = g.conjugacy_classes();

  // Both conditions are invariant under conjugating a and x, so class
  // representatives suffice; a only matters through its normal closure.
  std::map<std::vector<Idx>, std::optional<std::size_t>> verdict;
  std::vector<Idx> members;
  RhoResult out;
  for (const auto &cls : classes) {
    const Idx a = cls.front();
    auto closure = g.normal_closure(std::span<const Idx>(&a, 1), gens);
    auto [it, fresh] = verdict.try_emplace(closure.set.members());
    if (fresh) {
      std::size_t worst = 0;
      bool ok = true;
      for (const auto &xcls : classes) {
        const Idx x = xcls.front();
        auto k_gens = closure.generators;
        k_gens.push_back(x);
        auto k = g.closure(k_gens);
        auto s = is_subnormal(g, x, k);
        if (!s.subnormal) {
          ok = false;
          break;
        }
        worst = std::max(worst, s.defect);
      }
      if (ok)
        it->second = worst;
    }
    if (it->second) {
      members.insert(members.end(), cls.begin(), cls.end());
      for (auto m : cls)
        out.defect.emplace(m, *it->second);
      out.defect_bound = std::max(out.defect_bound, *it->second);
    }
  }
  Subset set(g.size(), std::move(members));
  out.closed = g.is_closed(set);
  auto generators = g.generating_set(set);
  out.subgroup = {std::move(set), std::move(generators)};
  return out;
}

RhoResult rho_bar(const FiniteGroup &g, const Limits &limits) { return rho(g, limits); }

SeriesReport series_report(const FiniteGroup &g, const Limits &limits) {
  SeriesReport r;
  r.upper = upper_central_series(g);
  r.lower = lower_central_series(g);
  r.nilpotency_class = class_of(r.lower);
  r.fitting = fitting_subgroup(g, limits);
  r.baer = baer_radical(g, limits);
  r.rho = rho(g, limits);
  r.rho_bar = r.rho;
  return r;
}

} // namespace engelkit
