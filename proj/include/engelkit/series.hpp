#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "engelkit/finite_group.hpp"
#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"

namespace engelkit {

// Z_0 = 1 < Z_1 < ... < Z_k = Z_(k+1). Stored without the repeated last term.
struct CentralSeries {
  std::vector<Subset> terms;

  std::size_t hypercentral_length() const { return terms.size() - 1; }
  const Subset &hypercentre() const { return terms.back(); }
  // least i with g in Z_i, nullopt outside the hypercentre
  std::optional<std::size_t> height(Idx g) const;
};

Subset centre(const FiniteGroup &g);

// Z_(i+1) = {x : [x, s] in Z_i for every generator s}.
CentralSeries upper_central_series(const FiniteGroup &g);

// gamma_1 = G, gamma_(i+1) = [gamma_i, G], listed until it reaches 1 or
// stops shrinking (the repeated term is not listed).
std::vector<IndexedSubgroup> lower_central_series(const FiniteGroup &g);

// Class from the lower central series; nullopt when it stalls above 1.
std::optional<std::size_t> nilpotency_class(const FiniteGroup &g);
// Same, for a subgroup, using its own lower central series.
std::optional<std::size_t> nilpotency_class(const FiniteGroup &g, const IndexedSubgroup &h);

// Nilpotency class of any group: lower central series when the group can be
// enumerated, otherwise the largest central height of a generator.
std::optional<std::size_t> nilpotency_class(const Group &g, const Limits &limits = {});

// Least i with g in Z_i(G), without enumerating G: g is in Z_(i+1) iff every
// [g, s] with s a generator is in Z_i. nullopt when g is not hypercentral.
// Throws DivergenceError if the exploration passes limits.enumeration_cap.
std::optional<std::size_t> element_height(const Group &group, const Element &g,
                                          const Limits &limits = {});

// Height read off the full upper central series when |G| fits the
// enumeration cap, element_height otherwise.
std::optional<std::size_t> central_height(const Group &group, const Element &g,
                                          const Limits &limits = {});

// {x : normal closure of x is nilpotent}
IndexedSubgroup fitting_subgroup(const FiniteGroup &g, const Limits &limits = {});

struct Subnormality {
  bool subnormal = false;
  std::size_t defect = 0; // strict steps H = K_0 > K_1 > ... > K_d = <x>
};

// K_0 = H, K_(i+1) = normal closure of <x> in K_i. x must lie in H.
Subnormality is_subnormal(const FiniteGroup &g, Idx x, const IndexedSubgroup &h);

// Generated by all x with <x> subnormal in G.
IndexedSubgroup baer_radical(const FiniteGroup &g, const Limits &limits = {});

// {a : <x> subnormal in <x, a^G> for every x}, with the largest defect seen
// for each member. In a finite group ascendant means subnormal, so rho and
// rho-bar share this membership test.
struct RhoResult {
  IndexedSubgroup subgroup;
  std::map<Idx, std::size_t> defect; // k(a)
  std::size_t defect_bound = 0;
  bool closed = false; // membership set is a subgroup
};
RhoResult rho(const FiniteGroup &g, const Limits &limits = {});
RhoResult rho_bar(const FiniteGroup &g, const Limits &limits = {});

struct SeriesReport {
  CentralSeries upper;
  std::vector<IndexedSubgroup> lower;
  std::optional<std::size_t> nilpotency_class;
  IndexedSubgroup fitting;
  IndexedSubgroup baer;
  RhoResult rho;
  RhoResult rho_bar;
};

SeriesReport series_report(const FiniteGroup &g, const Limits &limits = {});

} // namespace engelkit
