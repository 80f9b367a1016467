#include "engelkit/homomorphism.hpp"

#include <unordered_set>

#include "engelkit/errors.hpp"

namespace engelkit {

GeneratorMap::GeneratorMap(Group base, std::vector<Element> images, const Limits &limits)
    : base_(std::move(base)), images_(std::move(images)) {
  const auto gens = base_.generators();
  if (images_.size() != gens.size())
    throw InvalidArgument(base_.name() + ": action needs " + std::to_string(gens.size()) +
                          " generator images, got " + std::to_string(images_.size()));
  for (const auto &img : images_)
    if (img.group_id() != base_.id())
      throw InvalidArgument(base_.name() + ": action image is not an element of the base");

  if (base_.normal_form(base_.identity())) {
    use_normal_form_ = true;
    return;
  }
  // spanning-tree table; consistency is left to check_automorphism
  const auto elements = base_.enumerate(limits);
  table_.reserve(elements.size());
  table_.emplace(base_.identity().payload(), base_.identity().payload());
  std::vector<Element> frontier{base_.identity()};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto u = frontier[head];
    const Element fu(base_.id(), table_.at(u.payload()));
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto v = base_.mul(u, gens[s]);
      if (table_.contains(v.payload()))
        continue;
      table_.emplace(v.payload(), base_.mul(fu, images_[s]).payload());
      frontier.push_back(std::move(v));
    }
  }
}

Element GeneratorMap::apply(const Element &g) const {
  if (g.group_id() != base_.id())
    throw CrossGroupError();
  if (use_normal_form_)
    return evaluate_word(base_, *base_.normal_form(g), images_);
  return Element(base_.id(), table_.at(g.payload()));
}

AutomorphismReport GeneratorMap::check_automorphism(const Limits &limits,
                                                    std::size_t pair_limit) const {
  AutomorphismReport report;
  const auto ord = base_.order();
  if (!ord)
    throw InfiniteGroupError(base_.name());

  if (*ord > limits.enumeration_cap) {
    std::vector<Payload> payloads;
    for (const auto &img : images_)
      payloads.push_back(img.payload());
    auto verdict = base_.engine().automorphism_by_relators(payloads);
    if (!verdict)
      throw CapacityError(base_.name() + ": order " + std::to_string(*ord) +
                          " exceeds enumeration cap and no presentation check is available");
    report.method = "relators";
    report.homomorphism = report.bijective = *verdict;
    report.checks = 1;
    return report;
  }

  const auto elements = base_.enumerate(limits);
  std::vector<Element> mapped;
  mapped.reserve(elements.size());
  std::unordered_map<Payload, std::size_t, PayloadHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i].payload(), i);
    mapped.push_back(apply(elements[i]));
  }

  report.homomorphism = true;
  if (elements.size() <= pair_limit) {
    report.method = "all-pairs";
    for (std::size_t i = 0; i < elements.size() && report.homomorphism; ++i)
      for (std::size_t j = 0; j < elements.size(); ++j) {
        ++report.checks;
        auto uv = base_.mul(elements[i], elements[j]);
        if (mapped[index.at(uv.payload())] != base_.mul(mapped[i], mapped[j])) {
          report.homomorphism = false;
          report.witness = std::make_pair(elements[i], elements[j]);
          break;
        }
      }
  } else {
    // every element is a positive word in the generators, so this is
    // equivalent to the all-pairs test by induction on word length
    report.method = "generator-extension";
    const auto gens = base_.generators();
    for (std::size_t i = 0; i < elements.size() && report.homomorphism; ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        ++report.checks;
        auto us = base_.mul(elements[i], gens[s]);
        if (mapped[index.at(us.payload())] != base_.mul(mapped[i], images_[s])) {
          report.homomorphism = false;
          report.witness = std::make_pair(elements[i], gens[s]);
          break;
        }
      }
  }

  std::unordered_set<Payload, PayloadHash> image_set;
  for (const auto &m : mapped)
    image_set.insert(m.payload());
  report.bijective = image_set.size() == elements.size();
  return report;
}

} // namespace engelkit
