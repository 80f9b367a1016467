#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "engelkit/arith.hpp"
#include "engelkit/constructions.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/verify.hpp"

namespace engelkit {

namespace {

class Timer {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Accumulates named conditions; the first failure becomes the witness.
class Verdict {
public:
  Verdict(std::string name, std::string group) {
    report_.name = std::move(name);
    report_.group = std::move(group);
    report_.passed = true;
  }

  void detail(std::string key, std::string value) {
    report_.details.emplace_back(std::move(key), std::move(value));
  }

  void require(bool ok, const std::string &what, const std::string &witness) {
    if (ok || !report_.passed)
      return;
    report_.passed = false;
    report_.witness = what + ": " + witness;
  }

  CheckReport finish(const Timer &t) {
    report_.elapsed_ms = t.ms();
    return std::move(report_);
  }

private:
  CheckReport report_;
};

std::string set_order(const Subset &s) { return std::to_string(s.size()); }

// The first element of a \ b, rendered, or "" when a is inside b.
std::string outside(const FiniteGroup &g, const Subset &a, const Subset &b) {
  for (auto m : a.members())
    if (!b.contains(m))
      return g.format(m);
  return "";
}

void require_subset(Verdict &v, const FiniteGroup &g, const Subset &a, const Subset &b,
                    const std::string &what) {
  auto w = outside(g, a, b);
  v.require(w.empty(), what, w + " lies only on the left");
}

void require_equal(Verdict &v, const FiniteGroup &g, const Subset &a, const Subset &b,
                   const std::string &what) {
  auto w = outside(g, a, b);
  if (w.empty())
    w = outside(g, b, a);
  v.require(a == b, what, w + " lies in exactly one side");
}

Subset inverses(const FiniteGroup &g, const Subset &s) {
  std::vector<Idx> out;
  for (auto m : s.members())
    out.push_back(g.inv(m));
  return Subset(g.size(), std::move(out));
}

} // namespace

GroupAnalysis analyze(const Group &g, const Limits &limits) {
  auto order = g.order();
  if (!order)
    throw InfiniteGroupError(g.name());
  if (*order > limits.analysis_cap)
    throw CapacityError(g.name() + ": order " + std::to_string(*order) + " exceeds analysis cap " +
                        std::to_string(limits.analysis_cap));
  GroupAnalysis a;
  auto fg = std::make_shared<const FiniteGroup>(g, limits.analysis_cap);
  a.engel = classify(*fg, limits);
  a.series = series_report(*fg, limits);
  a.group = std::move(fg);
  return a;
}

CheckReport check_axioms(const Group &g, const Limits &limits) {
  Timer t;
  Verdict v("axioms", g.name());
  const auto elements = g.enumerate(limits);
  v.detail("order", std::to_string(elements.size()));
  v.require(g.order() && elements.size() == *g.order(), "enumeration size",
            std::to_string(elements.size()) + " elements");
  const auto one = g.identity();
  for (const auto &e : elements) {
    if (g.mul(e, one) != e || g.mul(one, e) != e) {
      v.require(false, "identity law", g.format(e));
      break;
    }
    const auto inv = g.inv(e);
    if (g.mul(e, inv) != one || g.mul(inv, e) != one) {
      v.require(false, "inverse law", g.format(e));
      break;
    }
  }
  // every triple for tiny groups, a fixed pseudo-random sample otherwise
  const auto n = elements.size();
  std::size_t triples = 0;
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++triples;
    const auto &x = elements[i], &y = elements[j], &z = elements[k];
    if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
      v.require(false, "associativity",
                "(" + g.format(x) + ", " + g.format(y) + ", " + g.format(z) + ")");
      return false;
    }
    return true;
  };
  if (n <= 24) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          ok = assoc(i, j, k);
  } else {
    std::mt19937_64 rng(20240101);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < 4000; ++s)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        break;
  }
  v.detail("associativity_triples", std::to_string(triples));
  return v.finish(t);
}

CheckReport check_baer(const GroupAnalysis &a) {
  Timer t;
  const auto &g = *a.group;
  Verdict v("baer", g.group().name());
  const auto &e = a.engel;
  const auto &s = a.series;
  v.detail("L", set_order(e.left));
  v.detail("L_bounded", set_order(e.bounded_left));
  v.detail("fitting", set_order(s.fitting.set));
  v.detail("R", set_order(e.right));
  v.detail("R_bounded", set_order(e.bounded_right));
  v.detail("hypercentre", set_order(s.upper.hypercentre()));
  v.detail("hypercentral_length", std::to_string(s.upper.hypercentral_length()));
  require_equal(v, g, e.left, e.bounded_left, "L = L-bar");
  require_equal(v, g, e.left, s.fitting.set, "L = F");
  require_equal(v, g, e.right, e.bounded_right, "R = R-bar");
  require_equal(v, g, e.right, s.upper.hypercentre(), "R = hypercentre");
  // the hypercentre is the stabilized term Z_k
  const auto k = s.upper.hypercentral_length();
  require_equal(v, g, s.upper.terms[k], s.upper.hypercentre(), "hypercentre = Z_k");
  return v.finish(t);
}

CheckReport check_heineken(const GroupAnalysis &a) {
  Timer t;
  const auto &g = *a.group;
  Verdict v("heineken", g.group().name());
  const auto &e = a.engel;
  require_subset(v, g, inverses(g, e.right), e.left, "R^-1 in L");
  require_subset(v, g, inverses(g, e.bounded_right), e.bounded_left, "R-bar^-1 in L-bar");
  std::size_t shifts = 0;
  for (const auto &[r, n] : e.right_degree) {
    const auto it = e.left_degree.find(g.inv(r));
    const bool ok = it != e.left_degree.end() && it->second <= n + 1;
    ++shifts;
    v.require(ok, "left degree of inverse <= right degree + 1",
              g.format(r) + " has right degree " + std::to_string(n));
  }
  v.detail("degree_shifts_checked", std::to_string(shifts));
  v.detail("R", set_order(e.right));
  v.detail("L", set_order(e.left));
  return v.finish(t);
}

CheckReport check_rho_chain(const GroupAnalysis &a) {
  Timer t;
  const auto &g = *a.group;
  Verdict v("rho", g.group().name());
  const auto &e = a.engel;
  const auto &s = a.series;
  const auto &hyper = s.upper.hypercentre();
  const auto &zk = s.upper.terms[s.upper.hypercentral_length()];
  v.detail("hypercentre", set_order(hyper));
  v.detail("rho", set_order(s.rho.subgroup.set));
  v.detail("rho_bar", set_order(s.rho_bar.subgroup.set));
  v.detail("rho_bar_defect_bound", std::to_string(s.rho_bar.defect_bound));
  v.detail("R", set_order(e.right));
  v.require(s.rho.closed, "rho is a subgroup", "membership set not closed");
  v.require(s.rho_bar.closed, "rho-bar is a subgroup", "membership set not closed");
  require_subset(v, g, hyper, s.rho.subgroup.set, "hypercentre in rho");
  require_subset(v, g, s.rho.subgroup.set, e.right, "rho in R");
  require_subset(v, g, zk, s.rho_bar.subgroup.set, "Z_k in rho-bar");
  require_subset(v, g, s.rho_bar.subgroup.set, e.bounded_right, "rho-bar in R-bar");
  // finite groups: everything collapses onto the hypercentre
  require_equal(v, g, s.rho.subgroup.set, hyper, "rho = hypercentre");
  require_equal(v, g, s.rho_bar.subgroup.set, hyper, "rho-bar = hypercentre");
  return v.finish(t);
}

CheckReport check_fitting(const GroupAnalysis &a) {
  Timer t;
  const auto &g = *a.group;
  Verdict v("fitting", g.group().name());
  const auto &f = a.series.fitting;
  const auto gens = g.generators();
  v.detail("fitting", set_order(f.set));
  v.detail("baer", set_order(a.series.baer.set));
  v.require(g.is_closed(f.set), "F is a subgroup", "membership set not closed");
  v.require(g.is_normalized_by(f.set, gens), "F is normal", "conjugate leaves F");
  const auto cls = nilpotency_class(g, f);
  v.require(cls.has_value(), "F is nilpotent", "lower central series of F stalls");
  if (cls)
    v.detail("fitting_class", std::to_string(*cls));

  // maximality: no element outside F has <F, x^G> nilpotent
  std::size_t tried = 0;
  for (const auto &klass : g.conjugacy_classes()) {
    const auto x = klass.front();
    if (f.set.contains(x))
      continue;
    ++tried;
    auto seeds = f.generators;
    seeds.push_back(x);
    auto joined = g.normal_closure(seeds, gens);
    if (nilpotency_class(g, joined)) {
      v.require(false, "F is maximal", "<F, " + g.format(x) + "^G> is nilpotent");
      break;
    }
  }
  v.detail("maximality_classes_tried", std::to_string(tried));
  require_equal(v, g, a.series.baer.set, f.set, "B = F");
  return v.finish(t);
}

CheckReport check_modular_identities(const Group &g, const Limits &limits) {
  Timer t;
  Verdict v("modular", g.name());
  if (g.kind() != GroupKind::modular)
    throw InvalidArgument(g.name() + " is not a modular group");
  // recover (p, n) from the orders of a and b: |a| = p^n, |b| = p^(n-1)
  const auto a = g.generators()[0];
  const auto b = g.generators()[1];
  std::int64_t a_order = 1;
  for (auto c = a; !g.is_identity(c); c = g.mul(c, a))
    ++a_order;
  std::int64_t b_order = 1;
  for (auto c = b; !g.is_identity(c); c = g.mul(c, b))
    ++b_order;
  const auto p = a_order / b_order;
  int n = 0;
  for (std::int64_t q = 1; q < a_order; q *= p)
    ++n;
  v.detail("p", std::to_string(p));
  v.detail("n", std::to_string(n));

  auto c = a;
  std::optional<int> first_vanishing;
  for (int m = 1; m <= n; ++m) {
    c = g.commutator(c, b);
    const auto expected = g.power(a, arith::powmod(p, static_cast<std::uint64_t>(m), a_order));
    v.require(c == expected, "[a,_m b] = a^(p^m)",
              "m = " + std::to_string(m) + " gives " + g.format(c));
    if (!first_vanishing && g.is_identity(c))
      first_vanishing = m;
  }
  v.detail("first_vanishing", first_vanishing ? std::to_string(*first_vanishing) : "none");
  v.require(first_vanishing == n, "first vanishing at m = n",
            first_vanishing ? std::to_string(*first_vanishing) : "never");
  const auto cls = nilpotency_class(g, limits);
  v.detail("class", cls ? std::to_string(*cls) : "none");
  v.require(cls == static_cast<std::size_t>(n), "class exactly n",
            cls ? std::to_string(*cls) : "not nilpotent");
  return v.finish(t);
}

CheckReport check_example(const ExampleParams &params, const Limits &limits) {
  Timer t;
  Verdict v("example", params.components.empty() ? "example" : params.describe());
  std::optional<ExampleGroup> eg;
  try {
    eg.emplace(params);
  } catch (const InvalidArgument &err) {
    v.require(false, "parameters", err.what());
    return v.finish(t);
  }
  const auto &G = eg->group();
  std::size_t max_n = 0;

  for (std::size_t i = 1; i <= eg->truncation(); ++i) {
    const auto &comp = eg->component(i);
    const auto p = comp.p();
    const auto n = comp.n();
    const auto tag = std::to_string(i);
    max_n = std::max(max_n, static_cast<std::size_t>(n));

    auto alpha = verify_alpha_automorphism(p, n, p, limits);
    v.detail("alpha_" + tag, alpha.method + (alpha.ok() ? " pass" : " fail"));
    v.require(alpha.ok(), "alpha_" + tag + " automorphism",
              alpha.witness ? "pair (" + std::to_string(alpha.witness->first.j) + "," +
                                  std::to_string(alpha.witness->first.k) + ") (" +
                                  std::to_string(alpha.witness->second.j) + "," +
                                  std::to_string(alpha.witness->second.k) + ")"
                            : "not bijective");
    auto corrupted = verify_alpha_automorphism(p, n, 1, limits);
    v.require(!corrupted.ok(), "corrupted map b -> b a is rejected",
              "component " + tag + " accepted it");

    // [a_i,_m b_i] = a_i^(p^m), first vanishing at n_i
    auto c = eg->a(i);
    std::optional<int> first;
    for (int m = 1; m <= n; ++m) {
      c = G.commutator(c, eg->b(i));
      const auto pm = arith::powmod(p, static_cast<std::uint64_t>(m), comp.a_order());
      v.require(c == eg->a_power(i, pm), "[a_" + tag + ",_m b_" + tag + "] = a^(p^m)",
                "m = " + std::to_string(m) + " gives " + G.format(c));
      if (!first && G.is_identity(c))
        first = m;
    }
    v.require(first == n, "first vanishing at n_" + tag, first ? std::to_string(*first) : "never");

    const auto cls = nilpotency_class(modular_group(p, n), limits);
    v.detail("class_P" + tag, cls ? std::to_string(*cls) : "none");
    v.require(cls == static_cast<std::size_t>(n), "class(P_" + tag + ") = n_" + tag,
              cls ? std::to_string(*cls) : "not nilpotent");

    std::size_t formulas = 0;
    for (std::int64_t scale = -2; scale <= 2; ++scale) {
      for (int e = 0; e <= n; ++e) {
        const auto r = scale * arith::checked_pow(p, e);
        for (int m = 1; m <= n; ++m) {
          auto f = engel_formula_check(*eg, i, r, static_cast<std::size_t>(m));
          ++formulas;
          v.require(f.ok(), "Engel formulas on component " + tag,
                    "r = " + std::to_string(r) + ", m = " + std::to_string(m) + ": got " +
                        G.format(f.computed) + ", expected " + G.format(f.expected));
        }
      }
    }
    v.detail("engel_formulas_" + tag, std::to_string(formulas));

    const auto height = central_height(params, i, limits);
    v.detail("height_a" + tag, std::to_string(height));
    v.require(height == static_cast<std::size_t>(n), "height of a_" + tag + " = n_" + tag,
              std::to_string(height));

    auto deg = right_engel_degree(G, eg->x(), eg->b(i), limits);
    v.detail("right_degree_x_b" + tag, to_string(deg));
    v.require(deg.is_engel() && deg.degree == static_cast<std::size_t>(n),
              "right degree of x against b_" + tag, to_string(deg));
  }

  for (std::size_t m = 1; m < max_n; ++m) {
    auto w = bounded_right_engel_excludes_x(*eg, m);
    v.detail("witness_m" + std::to_string(m),
             "component " + std::to_string(w.component) + ": " + G.format(w.commutator));
    v.require(!G.is_identity(w.commutator), "x not " + std::to_string(m) + "-right Engel",
              "component " + std::to_string(w.component));
  }

  auto fc2 = verify_fc2_structure(*eg, 400, limits);
  v.detail("fc2_pairs", std::to_string(fc2.pairs_checked));
  for (const auto &[label, size] : fc2.class_sizes)
    v.detail("class_size_" + label, std::to_string(size));
  v.require(fc2.ok(), "G/A abelian",
            fc2.witness ? "[" + G.format(fc2.witness->first) + ", " +
                              G.format(fc2.witness->second) + "] outside A"
                        : "");
  return v.finish(t);
}

std::optional<Suite> parse_suite(const std::string &name) {
  if (name == "baer")
    return Suite::baer;
  if (name == "heineken")
    return Suite::heineken;
  if (name == "rho")
    return Suite::rho;
  if (name == "all")
    return Suite::all;
  return std::nullopt;
}

std::vector<CheckReport> run_suite(const Group &g, Suite suite, const Limits &limits) {
  std::vector<CheckReport> out;
  if (suite == Suite::all)
    out.push_back(check_axioms(g, limits));
  const auto a = analyze(g, limits);
  if (suite == Suite::baer || suite == Suite::all)
    out.push_back(check_baer(a));
  if (suite == Suite::heineken || suite == Suite::all)
    out.push_back(check_heineken(a));
  if (suite == Suite::rho || suite == Suite::all)
    out.push_back(check_rho_chain(a));
  if (suite == Suite::all) {
    out.push_back(check_fitting(a));
    if (g.kind() == GroupKind::modular)
      out.push_back(check_modular_identities(g, limits));
  }
  return out;
}

} // namespace engelkit
