#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"
#include "engelkit/modular.hpp"

namespace engelkit {

struct ExampleComponent {
  std::int64_t p;
  int n;
  friend bool operator==(const ExampleComponent &, const ExampleComponent &) = default;
};

// Truncation G_N = <x> x| (P_1 x ... x P_N), P_i = modular(p_i, n_i),
// x acting by a_i -> a_i, b_i -> b_i a_i^(p_i).
struct ExampleParams {
  std::vector<ExampleComponent> components;

  // primes 3, 5, 7 with exponents 2, 3, 4
  static ExampleParams defaults();
  // first `truncation` entries of the lists; validated
  static ExampleParams from_lists(const std::vector<std::int64_t> &primes,
                                  const std::vector<std::int64_t> &exponents,
                                  std::size_t truncation);

  // odd primes strictly increasing, 1 < n_1 < n_2 < ..., N >= 1
  void validate() const;
  std::size_t truncation() const { return components.size(); }
  std::string describe() const;

  friend bool operator==(const ExampleParams &, const ExampleParams &) = default;
};

using Coord = ModularArithmetic::Coord;

// Exact model of the truncated example. Elements are x^r (b_1^j1 a_1^k1) ...
// with r an exact integer (never reduced) and (j_i, k_i) reduced.
// Components are numbered from 1.
class ExampleGroup {
public:
  explicit ExampleGroup(ExampleParams params);

  const Group &group() const noexcept { return group_; }
  const ExampleParams &params() const noexcept { return params_; }
  std::size_t truncation() const noexcept { return params_.truncation(); }
  const ModularArithmetic &component(std::size_t i) const;

  Element x() const;
  Element a(std::size_t i) const;
  Element b(std::size_t i) const;
  Element make(std::int64_t r, const std::vector<Coord> &parts) const;
  // a_i^k as an element of G
  Element a_power(std::size_t i, std::int64_t k) const;

  std::int64_t x_exponent(const Element &g) const;
  Coord part(const Element &g, std::size_t i) const;
  // periodic elements are exactly those with r = 0
  bool is_torsion(const Element &g) const { return x_exponent(g) == 0; }
  // A = Dr <a_i>
  bool in_a_subgroup(const Element &g) const;

  // alpha_i^r on P_i: b^j a^k -> b^j a^(k + r (q^j - 1))
  Coord twist(std::size_t i, std::int64_t r, Coord u) const;

  Element mul(const Element &g, const Element &h) const { return group_.mul(g, h); }

private:
  ExampleParams params_;
  Group group_;
};

struct AlphaReport {
  std::int64_t p = 0;
  int n = 0;
  std::int64_t twist = 0;
  std::string method; // "all-pairs" or "generator-extension"
  std::uint64_t checks = 0;
  bool homomorphism = false;
  bool bijective = false;
  std::optional<std::pair<Coord, Coord>> witness;

  bool ok() const { return homomorphism && bijective; }
};

// Checks b^j a^k -> (b a^c)^j a^k on modular(p, n); c = p is alpha, c = 0
// the identity. All |P|^2 pairs when |P| <= limits.analysis_cap, otherwise
// f(us) = f(u) f(s) for every u and generator s (equivalent, since positive
// words in a, b reach every element). Bijectivity is always exhaustive.
AlphaReport verify_alpha_automorphism(std::int64_t p, int n, std::int64_t twist,
                                      const Limits &limits = {});

struct EngelFormulaCheck {
  std::size_t component = 0;
  std::int64_t r = 0;
  std::size_t m = 0;
  Element computed;        // [x^r,_m b_i] by iterated symbolic commutators
  Element expected;        // a_i^(-r p_i^m)
  Element bx_computed;     // [b_i, x^r]
  Element bx_expected;     // a_i^(r p_i)
  bool vanishes = false;   // computed == 1
  bool predicted = false;  // p_i^(n_i - m) divides r, or m >= n_i

  bool ok() const {
    return computed == expected && bx_computed == bx_expected && vanishes == predicted;
  }
};

EngelFormulaCheck engel_formula_check(const ExampleGroup &g, std::size_t i, std::int64_t r,
                                      std::size_t m);

// F_i = cyclic(p_i^(n_i - 1)) x| P_i, the quotient through which x acts on P_i.
Group finite_quotient(const ExampleParams &params, std::size_t i, const Limits &limits = {});

// Upper-central height of a_i in F_i (equal to its height in G).
std::size_t central_height(const ExampleParams &params, std::size_t i, const Limits &limits = {});

struct ExclusionWitness {
  std::size_t component = 0;
  Element commutator; // [x,_m b_i], nontrivial
};

// A component i with n_i > m and [x,_m b_i] != 1, so x is not an m-right
// Engel element of the truncation. Throws InvalidArgument when every
// n_i <= m.
ExclusionWitness bounded_right_engel_excludes_x(const ExampleGroup &g, std::size_t m);

struct Fc2Report {
  std::size_t pairs_checked = 0;
  bool commutators_in_a = true;
  std::optional<std::pair<Element, Element>> witness; // pair with [u,v] outside A
  // label ("a1", "b1", ...) -> size of its conjugacy class
  std::vector<std::pair<std::string, std::size_t>> class_sizes;

  bool ok() const { return commutators_in_a; }
};

// Deterministic sample: words in x^(+-1), a_i, b_i by increasing length,
// taking enough of them to form `pair_budget` ordered pairs.
std::vector<Element> deterministic_sample(const ExampleGroup &g, std::size_t count);

Fc2Report verify_fc2_structure(const ExampleGroup &g, std::size_t pair_budget = 400,
                               const Limits &limits = {});

// Conjugacy class of y under the generators; DivergenceError past the cap.
std::vector<Element> conjugacy_closure(const Group &g, const Element &y, const Limits &limits = {});

} // namespace engelkit
