#include <sstream>

#include <json.hpp>

#include "engelkit/cli.hpp"

namespace engelkit::cli {

namespace {

using Json = nlohmann::ordered_json;

Json group_json(const FiniteGroup &g) {
  return Json{{"name", g.group().name()}, {"order", g.size()}};
}

Json engel_set(const FiniteGroup &g, const Subset &s, const std::map<Idx, std::size_t> &degrees) {
  Json elements = Json::array();
  Json degs = Json::array();
  for (auto m : s.members()) {
    elements.push_back(g.format(m));
    auto it = degrees.find(m);
    degs.push_back(it == degrees.end() ? Json(nullptr) : Json(it->second));
  }
  return Json{{"order", s.size()}, {"elements", elements}, {"degrees", degs}};
}

Json engel_part(const GroupAnalysis &a) {
  const auto &g = *a.group;
  const auto &e = a.engel;
  return Json{{"left", engel_set(g, e.left, e.left_degree)},
              {"bounded_left", engel_set(g, e.bounded_left, e.left_degree)},
              {"right", engel_set(g, e.right, e.right_degree)},
              {"bounded_right", engel_set(g, e.bounded_right, e.right_degree)}};
}

Json series_part(const GroupAnalysis &a) {
  const auto &s = a.series;
  Json upper = Json::array();
  for (const auto &t : s.upper.terms)
    upper.push_back(t.size());
  Json lower = Json::array();
  for (const auto &t : s.lower)
    lower.push_back(t.set.size());
  return Json{{"upper_central_orders", upper},
              {"hypercentral_length", s.upper.hypercentral_length()},
              {"lower_central_orders", lower},
              {"nilpotency_class",
               s.nilpotency_class ? Json(*s.nilpotency_class) : Json(nullptr)},
              {"fitting_order", s.fitting.set.size()},
              {"baer_order", s.baer.set.size()},
              {"rho_order", s.rho.subgroup.set.size()}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string set_text(const FiniteGroup &g, const Subset &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i)
    out += (i ? ", " : "") + g.format(s.members()[i]);
  return out + "}";
}

std::string orders_text(const std::vector<std::size_t> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? " < " : "") + std::to_string(v[i]);
  return out;
}

} // namespace

std::string engel_json(const GroupAnalysis &a, const ReportOptions &) {
  return dump(Json{{"group", group_json(*a.group)}, {"engel", engel_part(a)}});
}

std::string series_json(const GroupAnalysis &a, const ReportOptions &) {
  return dump(Json{{"group", group_json(*a.group)}, {"series", series_part(a)}});
}

std::string checks_json(const std::vector<CheckReport> &checks, const ReportOptions &opts) {
  Json list = Json::array();
  bool all = true;
  for (const auto &c : checks) {
    Json item{{"name", c.name}, {"group", c.group}, {"passed", c.passed}};
    if (c.witness)
      item["witness"] = *c.witness;
    Json details = Json::object();
    for (const auto &[k, v] : c.details)
      details[k] = v;
    item["details"] = details;
    if (opts.timing)
      item["elapsed_ms"] = c.elapsed_ms;
    all = all && c.passed;
    list.push_back(item);
  }
  return dump(Json{{"passed", all}, {"checks", list}});
}

std::string engel_text(const GroupAnalysis &a) {
  const auto &g = *a.group;
  const auto &e = a.engel;
  std::ostringstream out;
  out << g.group().name() << "  order " << g.size() << "\n";
  out << "L      " << e.left.size() << "  " << set_text(g, e.left) << "\n";
  out << "L-bar  " << e.bounded_left.size() << "  " << set_text(g, e.bounded_left) << "\n";
  out << "R      " << e.right.size() << "  " << set_text(g, e.right) << "\n";
  out << "R-bar  " << e.bounded_right.size() << "  " << set_text(g, e.bounded_right) << "\n";
  auto degrees = [&](const char *label, const std::map<Idx, std::size_t> &d) {
    out << label;
    bool first = true;
    for (const auto &[idx, n] : d) {
      out << (first ? " " : ", ") << g.format(idx) << ":" << n;
      first = false;
    }
    out << "\n";
  };
  degrees("left degrees", e.left_degree);
  degrees("right degrees", e.right_degree);
  return out.str();
}

std::string series_text(const GroupAnalysis &a) {
  const auto &g = *a.group;
  const auto &s = a.series;
  std::vector<std::size_t> upper, lower;
  for (const auto &t : s.upper.terms)
    upper.push_back(t.size());
  for (const auto &t : s.lower)
    lower.push_back(t.set.size());
  std::ostringstream out;
  out << g.group().name() << "  order " << g.size() << "\n";
  out << "upper central  " << orders_text(upper) << "  (length " << s.upper.hypercentral_length()
      << ")\n";
  std::string lower_text;
  for (std::size_t i = 0; i < lower.size(); ++i)
    lower_text += (i ? " > " : "") + std::to_string(lower[i]);
  out << "lower central  " << lower_text << "\n";
  out << "class          "
      << (s.nilpotency_class ? std::to_string(*s.nilpotency_class) : "not nilpotent") << "\n";
  out << "fitting        " << s.fitting.set.size() << "  " << set_text(g, s.fitting.set) << "\n";
  out << "baer           " << s.baer.set.size() << "\n";
  out << "hypercentre    " << s.upper.hypercentre().size() << "  "
      << set_text(g, s.upper.hypercentre()) << "\n";
  out << "rho            " << s.rho.subgroup.set.size() << "  (defect bound "
      << s.rho.defect_bound << ")\n";
  return out.str();
}

std::string checks_text(const std::vector<CheckReport> &checks) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto &c : checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  " << c.group;
    if (!c.passed) {
      ++failed;
      out << "  " << c.witness.value_or("");
    }
    out << "\n";
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

} // namespace engelkit::cli
