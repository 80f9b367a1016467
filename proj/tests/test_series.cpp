#include <doctest.h>

#include "engelkit/constructions.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/example_group.hpp"
#include "engelkit/finite_group.hpp"
#include "engelkit/series.hpp"

using namespace engelkit;

namespace {

Group s3() { return permutation_group(3, {{{1, 2}}, {{1, 2, 3}}}); }

std::vector<std::size_t> orders(const CentralSeries &s) {
  std::vector<std::size_t> out;
  for (const auto &t : s.terms)
    out.push_back(t.size());
  return out;
}

std::vector<std::size_t> orders(const std::vector<IndexedSubgroup> &s) {
  std::vector<std::size_t> out;
  for (const auto &t : s)
    out.push_back(t.set.size());
  return out;
}

// Oracle for the centre: brute-force commuting test.
std::size_t naive_centre(const Group &g) {
  auto all = g.enumerate();
  std::size_t n = 0;
  for (const auto &z : all) {
    bool central = true;
    for (const auto &h : all)
      central = central && g.mul(z, h) == g.mul(h, z);
    n += central;
  }
  return n;
}

} // namespace

TEST_CASE("upper central series") {
  FiniteGroup fs(s3(), 100);
  auto us = upper_central_series(fs);
  CHECK(orders(us) == std::vector<std::size_t>{1});
  CHECK(us.hypercentral_length() == 0);

  FiniteGroup fd(dihedral_group(8), 100);
  auto ud = upper_central_series(fd);
  CHECK(orders(ud) == std::vector<std::size_t>{1, 2, 8});
  CHECK(ud.hypercentral_length() == 2);

  FiniteGroup fc(cyclic_group(6), 100);
  CHECK(orders(upper_central_series(fc)) == std::vector<std::size_t>{1, 6});
}

TEST_CASE("centre agrees with brute force") {
  for (const auto &g : {s3(), dihedral_group(8), dihedral_group(12), modular_group(3, 2),
                        symmetric_group(4)}) {
    FiniteGroup fg(g, 100);
    CHECK(centre(fg).size() == naive_centre(g));
  }
}

TEST_CASE("[Z_(i+1), G] lies in Z_i") {
  for (const auto &g : {dihedral_group(8), modular_group(3, 2), modular_group(3, 3)}) {
    FiniteGroup fg(g, 1000);
    auto us = upper_central_series(fg);
    for (std::size_t i = 0; i + 1 < us.terms.size(); ++i)
      for (auto z : us.terms[i + 1].members())
        for (Idx h = 0; h < fg.size(); ++h)
          REQUIRE(us.terms[i].contains(fg.comm(z, h)));
  }
}

TEST_CASE("lower central series and class") {
  FiniteGroup fs(s3(), 100);
  CHECK(orders(lower_central_series(fs)) == std::vector<std::size_t>{6, 3});
  CHECK_FALSE(nilpotency_class(fs).has_value());
  FiniteGroup fc(cyclic_group(8), 100);
  CHECK(nilpotency_class(fc) == 1u);
  FiniteGroup f1(cyclic_group(1), 100);
  CHECK(nilpotency_class(f1) == 0u);
  for (auto [p, n] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 3}}) {
    FiniteGroup fp(modular_group(p, n), 5000);
    CHECK(nilpotency_class(fp) == static_cast<std::size_t>(n));
  }
  CHECK(nilpotency_class(modular_group(7, 4)) == 4u);
}

TEST_CASE("fitting subgroup") {
  FiniteGroup fs(s3(), 100);
  CHECK(fitting_subgroup(fs).set.size() == 3);
  FiniteGroup fd(dihedral_group(8), 100);
  CHECK(fitting_subgroup(fd).set.size() == 8);
  FiniteGroup fx(direct_product(s3(), cyclic_group(2)), 100);
  CHECK(fitting_subgroup(fx).set.size() == 6);
  FiniteGroup f4(symmetric_group(4), 100);
  CHECK(fitting_subgroup(f4).set.size() == 4);
}

TEST_CASE("subnormality and the Baer radical") {
  FiniteGroup fs(s3(), 100);
  auto t = fs.index_of(fs.group().element(permutation_from_cycles(3, {{1, 2}})));
  auto c = fs.index_of(fs.group().element(permutation_from_cycles(3, {{1, 2, 3}})));
  auto whole = fs.closure(fs.generators());
  CHECK_FALSE(is_subnormal(fs, t, whole).subnormal);
  auto sc = is_subnormal(fs, c, whole);
  CHECK(sc.subnormal);
  CHECK(sc.defect == 1);
  CHECK(baer_radical(fs).set == fitting_subgroup(fs).set);

  FiniteGroup fc(cyclic_group(6), 100);
  for (Idx x = 0; x < fc.size(); ++x)
    CHECK(is_subnormal(fc, x, fc.closure(fc.generators())).defect <= 1);

  FiniteGroup fd(dihedral_group(8), 100);
  // a reflection has defect 2 in the dihedral group of order 8
  std::size_t max_defect = 0;
  for (Idx x = 0; x < fd.size(); ++x)
    max_defect = std::max(max_defect, is_subnormal(fd, x, fd.closure(fd.generators())).defect);
  CHECK(max_defect == 2);
}

TEST_CASE("rho") {
  FiniteGroup fs(s3(), 100);
  auto r = rho(fs);
  CHECK(r.subgroup.set.size() == 1);
  CHECK(r.closed);
  FiniteGroup f1(cyclic_group(1), 100);
  CHECK(rho(f1).subgroup.set.size() == 1);
  FiniteGroup fd(dihedral_group(8), 100);
  auto rd = rho(fd);
  CHECK(rd.subgroup.set.size() == 8);
  CHECK(rd.defect_bound <= 2);
  CHECK(rho_bar(fd).subgroup.set == rd.subgroup.set);
}

TEST_CASE("element heights without enumeration") {
  auto g = modular_group(5, 3);
  auto a = g.generators()[0], b = g.generators()[1];
  CHECK(element_height(g, g.identity()) == 0u);
  CHECK(element_height(g, a) == 3u);
  CHECK(element_height(g, g.power(a, 25)) == 1u);
  CHECK(central_height(g, b) == 3u);
  auto s = s3();
  CHECK_FALSE(element_height(s, s.element(permutation_from_cycles(3, {{1, 2}}))).has_value());
}

TEST_CASE("series report on S3") {
  FiniteGroup fs(s3(), 100);
  auto r = series_report(fs);
  CHECK(r.fitting.set.size() == 3);
  CHECK(r.baer.set.size() == 3);
  CHECK(r.rho.subgroup.set.size() == 1);
  CHECK(r.upper.hypercentre().size() == 1);
  CHECK_FALSE(r.nilpotency_class.has_value());
}
