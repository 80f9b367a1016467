#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "engelkit/engel.hpp"
#include "engelkit/example_group.hpp"
#include "engelkit/finite_group.hpp"
#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"
#include "engelkit/series.hpp"

namespace engelkit {

struct CheckReport {
  std::string name;
  std::string group;
  bool passed = false;
  // ordered facts: set orders, degrees, sub-check verdicts
  std::vector<std::pair<std::string, std::string>> details;
  // reproduces the failure; always set when passed == false
  std::optional<std::string> witness;
  double elapsed_ms = 0;
};

struct CatalogEntry {
  std::string name;
  // one line of the definition language; may refer to earlier entries
  std::string definition;
  Group group;
};

// cyclic 1, 3, 5, 6, 8; S3, S4, A4; dihedral 8, 12; modular (3,2), (5,3);
// direct and semidirect combinations including F_1 of the example.
std::vector<CatalogEntry> catalog(const Limits &limits = {});
// All catalog definitions, one per line, in catalog order.
std::string catalog_definitions();

// Everything the finite checks need, computed once per group.
struct GroupAnalysis {
  std::shared_ptr<const FiniteGroup> group;
  EngelClassification engel;
  SeriesReport series;
};

GroupAnalysis analyze(const Group &g, const Limits &limits = {});

// Group axioms straight from the engine: enumeration size, identity and
// inverse laws, associativity on deterministic triples.
CheckReport check_axioms(const Group &g, const Limits &limits = {});
// L = L-bar = F and R = R-bar = hypercentre = Z_k.
CheckReport check_baer(const GroupAnalysis &a);
// R^-1 in L, R-bar^-1 in L-bar, bounded right degree n gives left degree <= n+1.
CheckReport check_heineken(const GroupAnalysis &a);
// hypercentre <= rho <= R and Z_k <= rho-bar <= R-bar, collapsing to equality.
CheckReport check_rho_chain(const GroupAnalysis &a);
// F normal, nilpotent, closed and maximal; B = F.
CheckReport check_fitting(const GroupAnalysis &a);
// Modular groups only: [a,_m b] = a^(p^m), first vanishing at m = n, class n.
CheckReport check_modular_identities(const Group &g, const Limits &limits = {});
// Every example-group operation on one parameter set.
CheckReport check_example(const ExampleParams &params, const Limits &limits = {});

enum class Suite { baer, heineken, rho, all };

std::optional<Suite> parse_suite(const std::string &name);

// Checks of one suite on one group, in a fixed order. `all` adds the axiom,
// Fitting and (for modular groups) identity checks.
std::vector<CheckReport> run_suite(const Group &g, Suite suite, const Limits &limits = {});

} // namespace engelkit
