#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "engelkit/arith.hpp"
#include "engelkit/constructions.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/modular.hpp"
#include "core/engines.hpp"

namespace engelkit {

namespace {

std::string power_text(const std::string &symbol, std::int64_t e) {
  if (e == 1)
    return symbol;
  return symbol + "^" + std::to_string(e);
}

} // namespace

// ---------------------------------------------------------------- permutation

namespace detail {

PermutationEngine::PermutationEngine(std::size_t degree, std::vector<Payload> generators,
                                     std::size_t cap)
    : GroupEngine(GroupKind::permutation), degree_(degree), generators_(std::move(generators)) {
  auto elements = bfs_closure(cap);
  order_ = elements.size();
  seed_enumeration(std::move(elements));
}

Payload PermutationEngine::identity() const {
  Payload id(degree_);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

Payload PermutationEngine::mul(const Payload &g, const Payload &h) const {
  Payload out(degree_);
  for (std::size_t i = 0; i < degree_; ++i)
    out[i] = h[static_cast<std::size_t>(g[i])];
  return out;
}

Payload PermutationEngine::inv(const Payload &g) const {
  Payload out(degree_);
  for (std::size_t i = 0; i < degree_; ++i)
    out[static_cast<std::size_t>(g[i])] = static_cast<std::int64_t>(i);
  return out;
}

std::string PermutationEngine::format(const Payload &g) const {
  std::string out;
  std::vector<bool> done(degree_, false);
  for (std::size_t start = 0; start < degree_; ++start) {
    if (done[start] || g[start] == static_cast<std::int64_t>(start))
      continue;
    out += '(';
    auto p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first)
        out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = static_cast<std::size_t>(g[p]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string PermutationEngine::descriptor() const {
  std::string out = "perm(" + std::to_string(degree_) + ")[";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out += (i ? ", " : "") + format(generators_[i]);
  return out + "]";
}

bool PermutationEngine::valid(const Payload &g) const {
  if (g.size() != degree_)
    return false;
  std::vector<bool> hit(degree_, false);
  for (auto v : g) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree_ || hit[static_cast<std::size_t>(v)])
      return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

// --------------------------------------------------------------------- cyclic

CyclicEngine::CyclicEngine(std::uint64_t m) : GroupEngine(GroupKind::cyclic), m_(m) {
  if (m == 0 || m > static_cast<std::uint64_t>(INT64_MAX))
    throw InvalidArgument("cyclic group order must be positive, got " + std::to_string(m));
}

Payload CyclicEngine::mul(const Payload &g, const Payload &h) const {
  return {arith::mod(g[0] + h[0], modulus())};
}

Payload CyclicEngine::inv(const Payload &g) const { return {arith::mod(-g[0], modulus())}; }

std::vector<Payload> CyclicEngine::generators() const { return {{1 % modulus()}}; }

std::string CyclicEngine::format(const Payload &g) const {
  return g[0] == 0 ? "1" : power_text("g", g[0]);
}

std::string CyclicEngine::descriptor() const { return "cyclic(" + std::to_string(m_) + ")"; }

bool CyclicEngine::valid(const Payload &g) const {
  return g.size() == 1 && g[0] >= 0 && g[0] < modulus();
}

// -------------------------------------------------------------------- modular

ModularEngine::ModularEngine(ModularArithmetic arithmetic)
    : GroupEngine(GroupKind::modular), arith_(std::move(arithmetic)) {}

Payload ModularEngine::mul(const Payload &g, const Payload &h) const {
  auto c = arith_.mul({g[0], g[1]}, {h[0], h[1]});
  return {c.j, c.k};
}

Payload ModularEngine::inv(const Payload &g) const {
  auto c = arith_.inv({g[0], g[1]});
  return {c.j, c.k};
}

std::vector<Payload> ModularEngine::generators() const { return {{0, 1}, {1, 0}}; }

std::string ModularEngine::format(const Payload &g) const { return format_coords(g[0], g[1], ""); }

std::string ModularEngine::format_coords(std::int64_t j, std::int64_t k, const std::string &suffix) {
  std::string out;
  if (j != 0)
    out += power_text("b" + suffix, j);
  if (k != 0)
    out += (out.empty() ? "" : " ") + power_text("a" + suffix, k);
  return out.empty() ? "1" : out;
}

std::string ModularEngine::descriptor() const {
  return "modular(" + std::to_string(arith_.p()) + "," + std::to_string(arith_.n()) + ")";
}

bool ModularEngine::valid(const Payload &g) const {
  return g.size() == 2 && g[0] >= 0 && g[0] < arith_.b_order() && g[1] >= 0 &&
         g[1] < arith_.a_order();
}

std::optional<Word> ModularEngine::normal_form(const Payload &g) const {
  return Word{{1, g[0]}, {0, g[1]}};
}

std::optional<bool> ModularEngine::automorphism_by_relators(std::span<const Payload> images) const {
  if (images.size() != 2)
    return false;
  using C = ModularArithmetic::Coord;
  const C a{images[0][0], images[0][1]};
  const C b{images[1][0], images[1][1]};
  const C one{};
  // von Dyck: the images satisfy the defining relations
  if (arith_.power(a, arith_.a_order()) != one || arith_.power(b, arith_.b_order()) != one)
    return false;
  auto a_conj = arith_.mul(arith_.inv(b), arith_.mul(a, b));
  if (a_conj != arith_.power(a, arith_.multiplier()))
    return false;
  // surjective iff the images span the Frattini quotient (j mod p, k mod p)
  const auto p = arith_.p();
  auto det = arith::mod(a.j * b.k - a.k * b.j, p);
  return det != 0;
}

// --------------------------------------------------------------------- direct

DirectEngine::DirectEngine(Group a, Group b)
    : GroupEngine(GroupKind::direct), a_(std::move(a)), b_(std::move(b)),
      split_(a_.identity().payload().size()) {}

std::pair<Payload, Payload> DirectEngine::split(const Payload &g) const {
  auto mid = g.begin() + static_cast<std::ptrdiff_t>(split_);
  return {Payload(g.begin(), mid), Payload(mid, g.end())};
}

Payload DirectEngine::join(const Payload &u, const Payload &v) {
  Payload out(u);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Payload DirectEngine::identity() const {
  return join(a_.engine().identity(), b_.engine().identity());
}

Payload DirectEngine::mul(const Payload &g, const Payload &h) const {
  auto [g1, g2] = split(g);
  auto [h1, h2] = split(h);
  return join(a_.engine().mul(g1, h1), b_.engine().mul(g2, h2));
}

Payload DirectEngine::inv(const Payload &g) const {
  auto [g1, g2] = split(g);
  return join(a_.engine().inv(g1), b_.engine().inv(g2));
}

std::vector<Payload> DirectEngine::generators() const {
  std::vector<Payload> out;
  for (const auto &s : a_.engine().generators())
    out.push_back(join(s, b_.engine().identity()));
  for (const auto &s : b_.engine().generators())
    out.push_back(join(a_.engine().identity(), s));
  return out;
}

Order DirectEngine::order() const {
  auto oa = a_.order();
  auto ob = b_.order();
  if (!oa || !ob)
    return std::nullopt;
  std::uint64_t r;
  if (__builtin_mul_overflow(*oa, *ob, &r))
    throw InvalidArgument("direct product order overflows");
  return r;
}

std::string DirectEngine::format(const Payload &g) const {
  auto [g1, g2] = split(g);
  return "(" + a_.engine().format(g1) + ", " + b_.engine().format(g2) + ")";
}

std::string DirectEngine::descriptor() const {
  return "direct(" + a_.name() + ", " + b_.name() + ")";
}

bool DirectEngine::valid(const Payload &g) const {
  if (g.size() < split_)
    return false;
  auto [g1, g2] = split(g);
  return a_.engine().valid(g1) && b_.engine().valid(g2);
}

std::optional<Word> DirectEngine::normal_form(const Payload &g) const {
  auto [g1, g2] = split(g);
  auto w1 = a_.engine().normal_form(g1);
  auto w2 = b_.engine().normal_form(g2);
  if (!w1 || !w2)
    return std::nullopt;
  const auto shift = a_.engine().generators().size();
  for (auto &l : *w2)
    w1->push_back({l.generator + shift, l.exponent});
  return w1;
}

} // namespace detail

// --------------------------------------------------------------- constructors

Payload permutation_from_cycles(std::size_t degree, const CycleList &cycles) {
  Payload image(degree);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (auto point : cycle) {
      if (point < 1 || static_cast<std::size_t>(point) > degree)
        throw InvalidArgument("point " + std::to_string(point) + " exceeds degree " +
                              std::to_string(degree));
      auto idx = static_cast<std::size_t>(point - 1);
      if (used[idx])
        throw InvalidArgument("point " + std::to_string(point) + " appears twice; cycles must be disjoint");
      used[idx] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return image;
}

Group permutation_group(std::size_t degree, const std::vector<CycleList> &generators,
                        const Limits &limits) {
  if (degree == 0)
    throw InvalidArgument("permutation degree must be positive");
  std::vector<Payload> gens;
  for (const auto &g : generators)
    gens.push_back(permutation_from_cycles(degree, g));
  auto engine = std::make_shared<detail::PermutationEngine>(degree, std::move(gens),
                                                            limits.enumeration_cap);
  return Group(engine, "");
}

Group symmetric_group(std::size_t n, const Limits &limits) {
  if (n == 1)
    return permutation_group(1, {}, limits);
  CycleList full(1);
  for (std::size_t i = 1; i <= n; ++i)
    full[0].push_back(static_cast<std::int64_t>(i));
  return permutation_group(n, {{{1, 2}}, full}, limits);
}

Group cyclic_group(std::uint64_t m) {
  return Group(std::make_shared<detail::CyclicEngine>(m), "");
}

Group dihedral_group(std::uint64_t order, const Limits &limits) {
  if (order % 2 != 0 || order < 6)
    throw InvalidArgument("dihedral group order must be even and at least 6, got " +
                          std::to_string(order));
  const auto m = static_cast<std::int64_t>(order / 2);
  CycleList rotation(1), reflection;
  for (std::int64_t i = 1; i <= m; ++i)
    rotation[0].push_back(i);
  for (std::int64_t i = 1; i < m + 1 - i; ++i)
    reflection.push_back({i, m + 1 - i});
  return permutation_group(static_cast<std::size_t>(m), {rotation, reflection}, limits)
      .renamed("dihedral(" + std::to_string(order) + ")");
}

Group modular_group(std::int64_t p, int n) {
  return Group(std::make_shared<detail::ModularEngine>(ModularArithmetic(p, n)), "");
}

Group direct_product(const Group &a, const Group &b) {
  return Group(std::make_shared<detail::DirectEngine>(a, b), "");
}

} // namespace engelkit
