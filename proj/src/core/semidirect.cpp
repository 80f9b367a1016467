#include <string>

#include "core/engines.hpp"
#include "engelkit/arith.hpp"
#include "engelkit/constructions.hpp"
#include "engelkit/errors.hpp"

namespace engelkit {

namespace detail {

namespace {
constexpr std::uint64_t kPowerTableBudget = 20'000'000;
}

SemidirectEngine::SemidirectEngine(Group actor, Group base, std::vector<Element> images,
                                   const Limits &limits)
    : GroupEngine(GroupKind::semidirect), actor_(std::move(actor)), base_(std::move(base)),
      images_(std::move(images)) {
  if (actor_.kind() != GroupKind::cyclic)
    throw InvalidArgument("semidirect product: actor must be cyclic, got " + actor_.name());
  if (!base_.is_finite())
    throw InvalidArgument("semidirect product: base must be finite");
  m_ = static_cast<std::int64_t>(*actor_.order());

  GeneratorMap action(base_, images_, limits);
  auto report = action.check_automorphism(limits);
  if (!report.homomorphism)
    throw InvalidArgument("semidirect product: action is not a homomorphism of " + base_.name());
  if (!report.bijective)
    throw InvalidArgument("semidirect product: action is not bijective on " + base_.name());

  const auto gens = base_.generators();
  const bool tabulated = !base_.normal_form(base_.identity());
  if (tabulated && static_cast<std::uint64_t>(m_) * *base_.order() > kPowerTableBudget)
    throw CapacityError("semidirect product: action tables for " + base_.name() + " exceed budget");

  // images of the generators under x^r, r = 0..m
  std::vector<Element> current = gens;
  powers_.reserve(static_cast<std::size_t>(m_));
  for (std::int64_t r = 0; r < m_; ++r) {
    powers_.emplace_back(base_, current, limits);
    std::vector<Element> next;
    for (const auto &g : current)
      next.push_back(action.apply(g));
    current = std::move(next);
  }
  if (current != gens)
    throw InvalidArgument("semidirect product: order of the action does not divide " +
                          std::to_string(m_));
}

Payload SemidirectEngine::act(std::int64_t r, const Payload &u) const {
  return powers_[static_cast<std::size_t>(arith::mod(r, m_))].apply(Element(base_.id(), u)).payload();
}

Payload SemidirectEngine::identity() const {
  Payload out{0};
  auto id = base_.engine().identity();
  out.insert(out.end(), id.begin(), id.end());
  return out;
}

Payload SemidirectEngine::mul(const Payload &g, const Payload &h) const {
  const Payload u(g.begin() + 1, g.end());
  const Payload v(h.begin() + 1, h.end());
  Payload out{arith::mod(g[0] + h[0], m_)};
  auto w = base_.engine().mul(act(h[0], u), v);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Payload SemidirectEngine::inv(const Payload &g) const {
  // (r,u)^-1 = (-r, (u^-1)^(x^-r))
  const Payload u(g.begin() + 1, g.end());
  Payload out{arith::mod(-g[0], m_)};
  auto w = act(-g[0], base_.engine().inv(u));
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::vector<Payload> SemidirectEngine::generators() const {
  auto id = base_.engine().identity();
  Payload x{1 % m_};
  x.insert(x.end(), id.begin(), id.end());
  std::vector<Payload> out{x};
  for (const auto &s : base_.engine().generators()) {
    Payload g{0};
    g.insert(g.end(), s.begin(), s.end());
    out.push_back(std::move(g));
  }
  return out;
}

Order SemidirectEngine::order() const {
  return static_cast<std::uint64_t>(m_) * *base_.order();
}

std::string SemidirectEngine::format(const Payload &g) const {
  const Payload u(g.begin() + 1, g.end());
  const bool trivial_base = u == base_.engine().identity();
  if (g[0] == 0)
    return base_.engine().format(u);
  std::string x = g[0] == 1 ? "x" : "x^" + std::to_string(g[0]);
  return trivial_base ? x : x + " · " + base_.engine().format(u);
}

std::string SemidirectEngine::descriptor() const {
  return "semidirect(" + actor_.name() + ", " + base_.name() + ")";
}

bool SemidirectEngine::valid(const Payload &g) const {
  if (g.empty() || g[0] < 0 || g[0] >= m_)
    return false;
  return base_.engine().valid(Payload(g.begin() + 1, g.end()));
}

std::optional<Word> SemidirectEngine::normal_form(const Payload &g) const {
  auto w = base_.engine().normal_form(Payload(g.begin() + 1, g.end()));
  if (!w)
    return std::nullopt;
  Word out{{0, g[0]}};
  for (auto &l : *w)
    out.push_back({l.generator + 1, l.exponent});
  return out;
}

} // namespace detail

Group semidirect_product(const Group &actor, const Group &base, std::vector<Element> images,
                         const Limits &limits) {
  return Group(std::make_shared<detail::SemidirectEngine>(actor, base, std::move(images), limits),
               "");
}

} // namespace engelkit
