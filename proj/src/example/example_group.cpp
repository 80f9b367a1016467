#include "engelkit/example_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "core/engines.hpp"
#include "engelkit/arith.hpp"
#include "engelkit/constructions.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/series.hpp"

namespace engelkit {

// ------------------------------------------------------------------ params

ExampleParams ExampleParams::defaults() { return {{{3, 2}, {5, 3}, {7, 4}}}; }

ExampleParams ExampleParams::from_lists(const std::vector<std::int64_t> &primes,
                                        const std::vector<std::int64_t> &exponents,
                                        std::size_t truncation) {
  if (primes.size() != exponents.size())
    throw InvalidArgument("example: " + std::to_string(primes.size()) + " primes but " +
                          std::to_string(exponents.size()) + " exponents");
  if (truncation > primes.size())
    throw InvalidArgument("example: truncation N=" + std::to_string(truncation) + " exceeds the " +
                          std::to_string(primes.size()) + " configured components");
  ExampleParams params;
  for (std::size_t i = 0; i < truncation; ++i) {
    if (exponents[i] > 62)
      throw InvalidArgument("example: exponent too large");
    params.components.push_back({primes[i], static_cast<int>(exponents[i])});
  }
  params.validate();
  return params;
}

void ExampleParams::validate() const {
  if (components.empty())
    throw InvalidArgument("example: truncation N must be at least 1");
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto &c = components[i];
    if (c.p % 2 == 0 || !arith::is_prime(c.p))
      throw InvalidArgument("example: p_" + std::to_string(i + 1) + " = " + std::to_string(c.p) +
                            " is not an odd prime");
    if (c.n <= 1)
      throw InvalidArgument("example: n_" + std::to_string(i + 1) + " must exceed 1");
    if (i > 0 && c.p <= components[i - 1].p)
      throw InvalidArgument("example: primes must be strictly increasing");
    if (i > 0 && c.n <= components[i - 1].n)
      throw InvalidArgument("example: exponents must be strictly increasing");
  }
}

std::string ExampleParams::describe() const {
  std::string primes, exps;
  for (std::size_t i = 0; i < components.size(); ++i) {
    primes += (i ? "," : "") + std::to_string(components[i].p);
    exps += (i ? "," : "") + std::to_string(components[i].n);
  }
  return "example(primes=[" + primes + "] exps=[" + exps + "] N=" +
         std::to_string(components.size()) + ")";
}

// ------------------------------------------------------------------ engine

namespace detail {

namespace {

class ExampleEngine final : public GroupEngine {
public:
  explicit ExampleEngine(const ExampleParams &params) : GroupEngine(GroupKind::example) {
    params.validate();
    for (const auto &c : params.components)
      parts_.emplace_back(c.p, c.n);
    describe_ = params.describe();
  }

  std::size_t size() const { return parts_.size(); }
  const ModularArithmetic &part(std::size_t i) const { return parts_[i]; }

  Coord twist(std::size_t i, std::int64_t r, Coord u) const {
    const auto &m = parts_[i];
    const auto shift = arith::mulmod(r, m.qpow(u.j) - 1, m.a_order());
    return {u.j, arith::mod(u.k + shift, m.a_order())};
  }

  Payload identity() const override { return Payload(1 + 2 * parts_.size(), 0); }

  // (r1,u)(r2,v) = (r1 + r2, alpha^r2(u) v)
  Payload mul(const Payload &g, const Payload &h) const override {
    Payload out(g.size());
    out[0] = arith::checked_add(g[0], h[0]);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto u = twist(i, h[0], {g[1 + 2 * i], g[2 + 2 * i]});
      auto w = parts_[i].mul(u, {h[1 + 2 * i], h[2 + 2 * i]});
      out[1 + 2 * i] = w.j;
      out[2 + 2 * i] = w.k;
    }
    return out;
  }

  // (r,u)^-1 = (-r, alpha^-r(u^-1))
  Payload inv(const Payload &g) const override {
    if (g[0] == INT64_MIN)
      throw InvalidArgument("integer overflow in exponent arithmetic");
    Payload out(g.size());
    out[0] = -g[0];
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto w = twist(i, -g[0], parts_[i].inv({g[1 + 2 * i], g[2 + 2 * i]}));
      out[1 + 2 * i] = w.j;
      out[2 + 2 * i] = w.k;
    }
    return out;
  }

  // x, a_1, b_1, a_2, b_2, ...
  std::vector<Payload> generators() const override {
    std::vector<Payload> out;
    auto x = identity();
    x[0] = 1;
    out.push_back(x);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto a = identity();
      a[2 + 2 * i] = 1;
      out.push_back(a);
      auto b = identity();
      b[1 + 2 * i] = 1;
      out.push_back(b);
    }
    return out;
  }

  Order order() const override { return std::nullopt; }

  std::string format(const Payload &g) const override {
    std::vector<std::string> pieces;
    if (g[0] != 0)
      pieces.push_back(g[0] == 1 ? "x" : "x^" + std::to_string(g[0]));
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (g[1 + 2 * i] == 0 && g[2 + 2 * i] == 0)
        continue;
      pieces.push_back(ModularEngine::format_coords(g[1 + 2 * i], g[2 + 2 * i], std::to_string(i + 1)));
    }
    if (pieces.empty())
      return "1";
    std::string out = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i)
      out += " · " + pieces[i];
    return out;
  }

  std::string descriptor() const override { return describe_; }

  bool valid(const Payload &g) const override {
    if (g.size() != 1 + 2 * parts_.size())
      return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (g[1 + 2 * i] < 0 || g[1 + 2 * i] >= parts_[i].b_order())
        return false;
      if (g[2 + 2 * i] < 0 || g[2 + 2 * i] >= parts_[i].a_order())
        return false;
    }
    return true;
  }

  std::optional<Word> normal_form(const Payload &g) const override {
    Word w{{0, g[0]}};
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      w.push_back({2 + 2 * i, g[1 + 2 * i]});
      w.push_back({1 + 2 * i, g[2 + 2 * i]});
    }
    return w;
  }

private:
  std::vector<ModularArithmetic> parts_;
  std::string describe_;
};

} // namespace

} // namespace detail

// ------------------------------------------------------------ ExampleGroup

namespace {

const detail::ExampleEngine &engine_of(const Group &g) {
  return static_cast<const detail::ExampleEngine &>(g.engine());
}

} // namespace

ExampleGroup::ExampleGroup(ExampleParams params)
    : params_(std::move(params)),
      group_(std::make_shared<detail::ExampleEngine>(params_), params_.describe()) {}

const ModularArithmetic &ExampleGroup::component(std::size_t i) const {
  if (i < 1 || i > truncation())
    throw InvalidArgument("example: component index " + std::to_string(i) + " outside 1.." +
                          std::to_string(truncation()));
  return engine_of(group_).part(i - 1);
}

Element ExampleGroup::x() const { return group_.generators()[0]; }

Element ExampleGroup::a(std::size_t i) const {
  component(i);
  return group_.generators()[2 * i - 1];
}

Element ExampleGroup::b(std::size_t i) const {
  component(i);
  return group_.generators()[2 * i];
}

Element ExampleGroup::make(std::int64_t r, const std::vector<Coord> &parts) const {
  if (parts.size() != truncation())
    throw InvalidArgument("example: expected " + std::to_string(truncation()) + " components");
  Payload p{r};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto c = component(i + 1).reduce(parts[i].j, parts[i].k);
    p.push_back(c.j);
    p.push_back(c.k);
  }
  return group_.element(std::move(p));
}

Element ExampleGroup::a_power(std::size_t i, std::int64_t k) const {
  std::vector<Coord> parts(truncation());
  parts[i - 1] = component(i).reduce(0, k);
  return make(0, parts);
}

std::int64_t ExampleGroup::x_exponent(const Element &g) const {
  if (g.group_id() != group_.id())
    throw CrossGroupError();
  return g.payload()[0];
}

Coord ExampleGroup::part(const Element &g, std::size_t i) const {
  component(i);
  if (g.group_id() != group_.id())
    throw CrossGroupError();
  return {g.payload()[2 * i - 1], g.payload()[2 * i]};
}

bool ExampleGroup::in_a_subgroup(const Element &g) const {
  if (x_exponent(g) != 0)
    return false;
  for (std::size_t i = 1; i <= truncation(); ++i)
    if (part(g, i).j != 0)
      return false;
  return true;
}

Coord ExampleGroup::twist(std::size_t i, std::int64_t r, Coord u) const {
  component(i);
  return engine_of(group_).twist(i - 1, r, u);
}

// -------------------------------------------------------------- operations

AlphaReport verify_alpha_automorphism(std::int64_t p, int n, std::int64_t twist,
                                      const Limits &limits) {
  const ModularArithmetic m(p, n);
  AlphaReport report;
  report.p = p;
  report.n = n;
  report.twist = twist;
  const auto order = m.order();
  if (order > Limits::hard_ceiling)
    throw CapacityError("alpha check: modular(" + std::to_string(p) + "," + std::to_string(n) +
                        ") exceeds " + std::to_string(Limits::hard_ceiling) + " elements");

  const auto a_ord = m.a_order();
  auto code = [&](Coord c) { return static_cast<std::size_t>(c.j * a_ord + c.k); };
  auto decode = [&](std::size_t i) {
    return Coord{static_cast<std::int64_t>(i) / a_ord, static_cast<std::int64_t>(i) % a_ord};
  };

  // f(b^j a^k) = (b a^c)^j a^k, evaluated through the closed form for the
  // twisted power rather than through the x-action used by the engine
  std::vector<Coord> image(order);
  std::vector<char> hit(order, 0);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < order; ++i) {
    const auto u = decode(i);
    image[i] = m.mul(m.twisted_b_power(twist, u.j), m.reduce(0, u.k));
    if (!hit[code(image[i])]) {
      hit[code(image[i])] = 1;
      ++distinct;
    }
  }
  report.bijective = distinct == order;

  report.homomorphism = true;
  if (order <= limits.analysis_cap) {
    report.method = "all-pairs";
    for (std::size_t i = 0; i < order && report.homomorphism; ++i)
      for (std::size_t k = 0; k < order; ++k) {
        ++report.checks;
        const auto uv = m.mul(decode(i), decode(k));
        if (image[code(uv)] != m.mul(image[i], image[k])) {
          report.homomorphism = false;
          report.witness = std::make_pair(decode(i), decode(k));
          break;
        }
      }
  } else {
    report.method = "generator-extension";
    const Coord gens[] = {{0, 1}, {1, 0}};
    for (std::size_t i = 0; i < order && report.homomorphism; ++i)
      for (const auto &s : gens) {
        ++report.checks;
        const auto us = m.mul(decode(i), s);
        if (image[code(us)] != m.mul(image[i], image[code(s)])) {
          report.homomorphism = false;
          report.witness = std::make_pair(decode(i), s);
          break;
        }
      }
  }
  return report;
}

EngelFormulaCheck engel_formula_check(const ExampleGroup &g, std::size_t i, std::int64_t r,
                                      std::size_t m) {
  const auto &comp = g.component(i);
  if (m < 1)
    throw InvalidArgument("engel formula check needs m >= 1");
  const auto &G = g.group();
  EngelFormulaCheck out;
  out.component = i;
  out.r = r;
  out.m = m;
  const auto xr = G.power(g.x(), r);
  out.computed = iterated_commutator(G, xr, g.b(i), m);
  const auto pm = arith::powmod(comp.p(), m, comp.a_order());
  out.expected = g.a_power(i, -arith::mulmod(r, pm, comp.a_order()));
  out.bx_computed = G.commutator(g.b(i), xr);
  out.bx_expected = g.a_power(i, arith::mulmod(r, comp.p(), comp.a_order()));
  out.vanishes = G.is_identity(out.computed);
  const auto n = static_cast<std::size_t>(comp.n());
  out.predicted = m >= n || r % arith::checked_pow(comp.p(), static_cast<int>(n - m)) == 0;
  return out;
}

Group finite_quotient(const ExampleParams &params, std::size_t i, const Limits &limits) {
  params.validate();
  if (i < 1 || i > params.truncation())
    throw InvalidArgument("example: component index " + std::to_string(i) + " outside 1.." +
                          std::to_string(params.truncation()));
  const auto [p, n] = params.components[i - 1];
  auto base = modular_group(p, n);
  const auto a = base.generators()[0];
  const auto b = base.generators()[1];
  const auto actor = cyclic_group(static_cast<std::uint64_t>(arith::checked_pow(p, n - 1)));
  return semidirect_product(actor, base, {a, base.mul(b, base.power(a, p))}, limits)
      .renamed("F" + std::to_string(i) + "(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

std::size_t central_height(const ExampleParams &params, std::size_t i, const Limits &limits) {
  auto f = finite_quotient(params, i, limits);
  // generators of F_i are x, a, b
  auto h = engelkit::central_height(f, f.generators()[1], limits);
  if (!h)
    throw Error("a_" + std::to_string(i) + " is not hypercentral in " + f.name());
  return *h;
}

ExclusionWitness bounded_right_engel_excludes_x(const ExampleGroup &g, std::size_t m) {
  if (m < 1)
    throw InvalidArgument("exclusion witness needs m >= 1");
  for (std::size_t i = 1; i <= g.truncation(); ++i) {
    if (static_cast<std::size_t>(g.component(i).n()) <= m)
      continue;
    auto c = iterated_commutator(g.group(), g.x(), g.b(i), m);
    if (!g.group().is_identity(c))
      return {i, c};
  }
  throw InvalidArgument("no component with n_i > " + std::to_string(m) +
                        "; extend the truncation to find a witness");
}

std::vector<Element> deterministic_sample(const ExampleGroup &g, std::size_t count) {
  const auto &G = g.group();
  std::vector<Element> letters{g.x(), G.inv(g.x())};
  for (std::size_t i = 1; i <= g.truncation(); ++i) {
    letters.push_back(g.a(i));
    letters.push_back(g.b(i));
  }
  std::vector<Element> out{G.identity()};
  std::unordered_set<Element, ElementHash> seen{G.identity()};
  for (std::size_t head = 0; head < out.size() && out.size() < count; ++head)
    for (const auto &l : letters) {
      auto w = G.mul(out[head], l);
      if (seen.insert(w).second) {
        out.push_back(std::move(w));
        if (out.size() == count)
          break;
      }
    }
  return out;
}

std::vector<Element> conjugacy_closure(const Group &g, const Element &y, const Limits &limits) {
  const auto gens = g.generators();
  std::vector<Element> orbit{y};
  std::unordered_set<Element, ElementHash> seen{y};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto &s : gens) {
      auto c = g.conjugate(orbit[head], s);
      if (seen.insert(c).second) {
        if (orbit.size() >= limits.enumeration_cap)
          throw DivergenceError(g.name() + ": conjugacy class of " + g.format(y) + " exceeds " +
                                std::to_string(limits.enumeration_cap));
        orbit.push_back(std::move(c));
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

Fc2Report verify_fc2_structure(const ExampleGroup &g, std::size_t pair_budget,
                               const Limits &limits) {
  Fc2Report report;
  const auto &G = g.group();
  std::size_t count = 1;
  while (count * count < pair_budget)
    ++count;
  const auto sample = deterministic_sample(g, count);
  for (const auto &u : sample) {
    for (const auto &v : sample) {
      if (report.pairs_checked == pair_budget)
        break;
      ++report.pairs_checked;
      if (!g.in_a_subgroup(G.commutator(u, v)) && report.commutators_in_a) {
        report.commutators_in_a = false;
        report.witness = std::make_pair(u, v);
      }
    }
  }
  for (std::size_t i = 1; i <= g.truncation(); ++i) {
    const auto idx = std::to_string(i);
    report.class_sizes.emplace_back("a" + idx, conjugacy_closure(G, g.a(i), limits).size());
    report.class_sizes.emplace_back("b" + idx, conjugacy_closure(G, g.b(i), limits).size());
  }
  return report;
}

} // namespace engelkit
