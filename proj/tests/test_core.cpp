#include <doctest.h>

#include <set>

#include "engelkit/constructions.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/finite_group.hpp"
#include "engelkit/homomorphism.hpp"
#include "engelkit/subgroup.hpp"
#include "support.hpp"

using namespace engelkit;

namespace {

Group s3() { return permutation_group(3, {{{1, 2}}, {{1, 2, 3}}}); }

Element perm(const Group &g, std::size_t degree, const CycleList &cycles) {
  return g.element(permutation_from_cycles(degree, cycles));
}

// Hand-rolled right-action composition on 0-based images.
Payload compose(const Payload &g, const Payload &h) {
  Payload out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    out[i] = h[static_cast<std::size_t>(g[i])];
  return out;
}

} // namespace

TEST_CASE("permutation arithmetic follows the right action") {
  auto g = s3();
  auto t = perm(g, 3, {{1, 2}});
  auto c = perm(g, 3, {{1, 2, 3}});
  CHECK(g.mul(t, c).payload() == compose(t.payload(), c.payload()));
  CHECK(g.format(g.inv(c)) == "(1 3 2)");
  CHECK(g.format(g.identity()) == "()");
  CHECK(g.format(g.commutator(c, t)) == "(1 2 3)");
  CHECK(g.format(g.conjugate(t, c)) == "(2 3)");
  CHECK(g.is_identity(g.commutator(c, c)));
  CHECK(g.mul(c, g.identity()) == c);
}

TEST_CASE("cycle notation is validated") {
  CHECK_THROWS_AS(permutation_from_cycles(3, {{1, 4}}), InvalidArgument);
  CHECK_THROWS_AS(permutation_from_cycles(3, {{1, 2}, {2, 3}}), InvalidArgument);
  CHECK_THROWS_AS(permutation_from_cycles(3, {{0, 1}}), InvalidArgument);
  CHECK(permutation_from_cycles(3, {}) == Payload{0, 1, 2});
}

TEST_CASE("enumeration sizes") {
  CHECK(cyclic_group(1).enumerate().size() == 1);
  CHECK(s3().enumerate().size() == 6);
  CHECK(symmetric_group(4).enumerate().size() == 24);
  CHECK(modular_group(3, 2).enumerate().size() == 27);
  CHECK(dihedral_group(8).order() == 8u);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).enumerate().size() == 6);
  CHECK_THROWS_AS(dihedral_group(7), InvalidArgument);
  CHECK_THROWS_AS(dihedral_group(4), InvalidArgument);
}

TEST_CASE("enumeration respects the cap") {
  Limits tiny;
  tiny.enumeration_cap = 10;
  CHECK_THROWS_AS(modular_group(3, 2).enumerate(tiny), CapacityError);
  CHECK_THROWS_AS(symmetric_group(4, tiny), CapacityError);
}

TEST_CASE("modular group relations") {
  auto g = modular_group(3, 2);
  auto a = g.generators()[0];
  auto b = g.generators()[1];
  CHECK(g.order() == 27u);
  CHECK(g.mul(a, b).payload() == Payload{1, 4});
  CHECK(g.format(g.mul(a, b)) == "b a^4");
  CHECK(g.commutator(a, b) == g.power(a, 3));
  CHECK(g.conjugate(a, b) == g.power(a, 4));
  CHECK(g.mul(b, g.inv(b)) == g.identity());
  CHECK(g.is_identity(g.power(a, 9)));
  CHECK_FALSE(g.is_identity(g.power(a, 3)));
  CHECK(g.is_identity(g.power(b, 3)));
  CHECK(modular_group(5, 3).order() == 3125u);
}

TEST_CASE("modular multiplication matches the rewriting oracle") {
  for (auto [p, n] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}}) {
    auto g = modular_group(p, n);
    for (const auto &x : g.enumerate())
      for (const auto &y : g.enumerate()) {
        auto [j, k] = testing::modular_oracle(p, n, {x.payload()[0], x.payload()[1]},
                                              {y.payload()[0], y.payload()[1]});
        REQUIRE(g.mul(x, y).payload() == Payload{j, k});
      }
  }
}

TEST_CASE("modular constructor validation") {
  CHECK_THROWS_AS(modular_group(2, 3), InvalidArgument);
  CHECK_THROWS_AS(modular_group(9, 2), InvalidArgument);
  CHECK_THROWS_AS(modular_group(3, 1), InvalidArgument);
}

TEST_CASE("elements are validated and bound to their group") {
  auto g = modular_group(3, 2);
  CHECK_THROWS_AS(g.element({0, 9}), InvalidArgument);
  CHECK_THROWS_AS(g.element({3, 0}), InvalidArgument);
  CHECK_THROWS_AS(g.element({1}), InvalidArgument);
  auto h = modular_group(3, 2);
  CHECK_THROWS_AS(g.mul(g.identity(), h.identity()), CrossGroupError);
}

TEST_CASE("cyclic order must be positive") {
  CHECK_THROWS_AS(cyclic_group(0), InvalidArgument);
}

TEST_CASE("semidirect products") {
  auto p = modular_group(3, 2);
  auto a = p.generators()[0];
  auto b = p.generators()[1];
  auto f1 = semidirect_product(cyclic_group(3), p, {a, p.mul(b, p.power(a, 3))});
  CHECK(f1.order() == 81u);
  CHECK(f1.enumerate().size() == 81);

  // b -> a is not an automorphism (orders 3 and 9 differ)
  CHECK_THROWS_AS(semidirect_product(cyclic_group(3), p, {a, a}), InvalidArgument);
  // the twist has order 3, which does not divide 2
  CHECK_THROWS_AS(semidirect_product(cyclic_group(2), p, {a, p.mul(b, p.power(a, 3))}),
                  InvalidArgument);
  CHECK_THROWS_AS(semidirect_product(p, p, {a, b}), InvalidArgument);
  CHECK_THROWS_AS(semidirect_product(cyclic_group(3), p, {a}), InvalidArgument);
}

TEST_CASE("generator maps detect non-homomorphisms with a witness") {
  auto c5 = cyclic_group(5);
  auto g = c5.generators()[0];
  GeneratorMap sq(c5, {c5.power(g, 2)});
  CHECK(sq.check_automorphism().ok());
  GeneratorMap zero(c5, {c5.identity()});
  auto r = zero.check_automorphism();
  CHECK(r.homomorphism);
  CHECK_FALSE(r.bijective);

  auto s = s3();
  auto t = perm(s, 3, {{1, 2}});
  auto c = perm(s, 3, {{1, 2, 3}});
  // swap a transposition with a 3-cycle: orders disagree
  GeneratorMap bad(s, {c, t});
  auto rb = bad.check_automorphism();
  CHECK_FALSE(rb.ok());
  CHECK(rb.witness.has_value());
}

TEST_CASE("evaluate_word") {
  auto p = modular_group(3, 2);
  auto gens = p.generators();
  Word w{{1, 1}, {0, 3}};
  CHECK(evaluate_word(p, w, gens) == p.mul(gens[1], p.power(gens[0], 3)));
  CHECK(evaluate_word(p, {}, gens) == p.identity());
  CHECK(evaluate_word(p, {{0, -1}}, gens) == p.inv(gens[0]));
}

TEST_CASE("subgroups, normal closures and centralizers") {
  auto g = s3();
  auto t = perm(g, 3, {{1, 2}});
  auto c = perm(g, 3, {{1, 2, 3}});
  CHECK(normal_closure(g, {t}).order() == 6);
  CHECK(normal_closure(g, {c}).order() == 3);
  CHECK(subgroup_generated(g, {t}).order() == 2);
  auto z = centralizer(g, {c});
  CHECK(z.order() == 3);
  CHECK(z.contains(c));
  CHECK_FALSE(z.contains(t));
}

TEST_CASE("indexed view agrees with the engine") {
  auto g = modular_group(3, 2);
  FiniteGroup fg(g, 1000);
  REQUIRE(fg.size() == 27);
  for (Idx i = 0; i < fg.size(); ++i)
    for (Idx j = 0; j < fg.size(); ++j)
      REQUIRE(fg.element(fg.mul(i, j)) == g.mul(fg.element(i), fg.element(j)));
  CHECK(fg.element(fg.identity()) == g.identity());
  CHECK(fg.conjugacy_classes().size() == 11);

  auto s = s3();
  FiniteGroup fs(s, 100);
  std::set<std::size_t> sizes;
  for (const auto &cls : fs.conjugacy_classes())
    sizes.insert(cls.size());
  CHECK(sizes == std::set<std::size_t>{1, 2, 3});
}

TEST_CASE("formats") {
  auto c = cyclic_group(6);
  auto g = c.generators()[0];
  CHECK(c.format(c.identity()) == "1");
  CHECK(c.format(g) == "g");
  CHECK(c.format(c.power(g, 4)) == "g^4");
  auto d = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(d.format(d.identity()) == "(1, 1)");
}
