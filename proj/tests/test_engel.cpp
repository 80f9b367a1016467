#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "engelkit/constructions.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/example_group.hpp"
#include "engelkit/finite_group.hpp"

using namespace engelkit;

namespace {

Group s3() { return permutation_group(3, {{{1, 2}}, {{1, 2, 3}}}); }

// Oracle: walk [g,_n a] straight from the engine for up to |G| + 1 steps.
std::optional<std::size_t> naive_degree(const Group &G, const Element &g, const Element &a,
                                        std::size_t bound) {
  auto c = g;
  for (std::size_t n = 1; n <= bound; ++n) {
    c = G.mul(G.inv(c), G.conjugate(c, a));
    if (G.is_identity(c))
      return n;
  }
  return std::nullopt;
}

struct NaiveSets {
  std::vector<Element> left, right;
};

NaiveSets naive_classify(const Group &G) {
  const auto all = G.enumerate();
  NaiveSets out;
  for (const auto &a : all) {
    bool left = true, right = true;
    for (const auto &g : all) {
      left = left && naive_degree(G, g, a, all.size() + 1).has_value();
      right = right && naive_degree(G, a, g, all.size() + 1).has_value();
    }
    if (left)
      out.left.push_back(a);
    if (right)
      out.right.push_back(a);
  }
  return out;
}

std::vector<Element> members(const FiniteGroup &fg, const Subset &s) {
  std::vector<Element> out;
  for (auto i : s.members())
    out.push_back(fg.element(i));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("iterated commutators in modular groups") {
  auto g = modular_group(3, 2);
  auto a = g.generators()[0], b = g.generators()[1];
  CHECK(iterated_commutator(g, a, b, 1) == g.power(a, 3));
  CHECK(g.is_identity(iterated_commutator(g, a, b, 2)));
  CHECK(g.is_identity(iterated_commutator(g, a, g.identity(), 1)));
  CHECK_THROWS_AS(iterated_commutator(g, a, b, 0), InvalidArgument);

  auto h = modular_group(5, 3);
  auto a5 = h.generators()[0], b5 = h.generators()[1];
  CHECK(iterated_commutator(h, a5, b5, 2) == h.power(a5, 25));
}

TEST_CASE("single degrees") {
  auto g = s3();
  auto t = g.element(permutation_from_cycles(3, {{1, 2}}));
  auto c = g.element(permutation_from_cycles(3, {{1, 2, 3}}));
  CHECK(left_engel_degree(g, g.identity(), t).degree == 1);
  CHECK(left_engel_degree(g, t, c).status == EngelStatus::not_engel);
  CHECK(right_engel_degree(g, c, t).status == EngelStatus::not_engel);
  CHECK(right_engel_degree(g, t, g.identity()).degree == 1);
  CHECK(to_string(left_engel_degree(g, t, c)) == "not-engel");
}

TEST_CASE("right degree of x against b in the example engine") {
  ExampleGroup eg(ExampleParams::from_lists({3}, {2}, 1));
  auto d = right_engel_degree(eg.group(), eg.x(), eg.b(1));
  CHECK(d.is_engel());
  CHECK(d.degree == 2);
}

TEST_CASE("symbolic iteration cap yields unknown") {
  ExampleGroup eg(ExampleParams::from_lists({3}, {2}, 1));
  Limits l;
  l.symbolic_iteration_cap = 1;
  CHECK(right_engel_degree(eg.group(), eg.x(), eg.b(1), l).status == EngelStatus::unknown);
}

TEST_CASE("classify S3") {
  auto g = s3();
  FiniteGroup fg(g, 100);
  auto e = classify(fg);
  CHECK(e.left.size() == 3);
  CHECK(e.bounded_left.size() == 3);
  CHECK(e.right.size() == 1);
  CHECK(e.bounded_right.size() == 1);
  CHECK(e.right.contains(fg.identity()));
}

TEST_CASE("classify abelian and nilpotent groups") {
  FiniteGroup c6(cyclic_group(6), 100);
  auto e = classify(c6);
  CHECK(e.left.size() == 6);
  CHECK(e.right.size() == 6);
  CHECK(e.bounded_left.size() == 6);
  CHECK(e.bounded_right.size() == 6);

  FiniteGroup p(modular_group(3, 2), 100);
  auto ep = classify(p);
  CHECK(ep.left.size() == 27);
  CHECK(ep.right.size() == 27);
  for (const auto &[idx, n] : ep.left_degree)
    CHECK(n <= 2);
  for (const auto &[idx, n] : ep.right_degree)
    CHECK(n <= 2);
}

TEST_CASE("classify matches the naive oracle") {
  for (const auto &g : {s3(), symmetric_group(4), dihedral_group(12),
                        permutation_group(4, {{{1, 2, 3}}, {{1, 2}, {3, 4}}})}) {
    FiniteGroup fg(g, 100);
    auto e = classify(fg);
    auto naive = naive_classify(g);
    CHECK(members(fg, e.left) == naive.left);
    CHECK(members(fg, e.right) == naive.right);
  }
}

TEST_CASE("classify refuses groups over the analysis cap") {
  FiniteGroup fg(modular_group(3, 2), 100);
  Limits l;
  l.analysis_cap = 10;
  CHECK_THROWS_AS(classify(fg, l), CapacityError);
}
