// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "engelkit/cli.hpp"
#include "engelkit/constructions.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/example_group.hpp"
#include "engelkit/series.hpp"
#include "engelkit/verify.hpp"

using namespace engelkit;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string &what) {
    if (!ok && passed) {
      passed = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string &title, const std::function<Outcome()> &body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.passed = false;
    o.note = std::string("exception: ") + e.what();
  }
  const auto secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << "criterion " << number << ": " << (o.passed ? "PASS" : "FAIL") << "  " << title
            << "  (" << timing << ")";
  if (!o.passed)
    std::cout << "  " << o.note;
  std::cout << std::endl;
  failures += !o.passed;
}

int invoke(const std::vector<std::string> &args, const std::string &in_text, std::string &out,
           std::string &err) {
  std::istringstream in(in_text);
  std::ostringstream o, e;
  const int code = cli::run(args, in, o, e);
  out = o.str();
  err = e.str();
  return code;
}

} // namespace

int main() {
  const auto cat = catalog();
  std::vector<GroupAnalysis> analyses;
  for (const auto &entry : cat)
    analyses.push_back(analyze(entry.group));

  criterion(1, "Baer suite on every catalog group", [&] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < cat.size(); ++i) {
      auto r = check_baer(analyze(cat[i].group));
      o.require(r.passed, cat[i].name + ": " + r.witness.value_or(""));
    }
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60, "took " + std::to_string(secs) + "s");
    return o;
  });

  criterion(2, "S3 ground truth, engel and series paths agree", [&] {
    Outcome o;
    auto s3 = permutation_group(3, {{{1, 2}}, {{1, 2, 3}}});
    FiniteGroup fg(s3, 100);
    auto e = classify(fg);
    auto f = fitting_subgroup(fg);
    auto z = upper_central_series(fg);
    std::vector<std::string> left;
    for (auto i : e.left.members())
      left.push_back(fg.format(i));
    o.require(left == std::vector<std::string>{"()", "(1 2 3)", "(1 3 2)"}, "L is not A3");
    o.require(e.bounded_left == e.left, "L-bar differs from L");
    o.require(e.right.size() == 1 && e.right.contains(fg.identity()), "R is not trivial");
    o.require(e.bounded_right == e.right, "R-bar differs from R");
    o.require(f.set == e.left, "F differs from L");
    o.require(z.hypercentre().size() == 1, "hypercentre is not trivial");
    o.require(z.hypercentre() == e.right, "hypercentre differs from R");
    return o;
  });

  criterion(3, "modular identities and class for (3,2), (5,3), (7,4)", [&] {
    Outcome o;
    for (auto [p, n] : {std::pair{3, 2}, std::pair{5, 3}, std::pair{7, 4}}) {
      auto r = check_modular_identities(modular_group(p, n));
      o.require(r.passed, "(" + std::to_string(p) + "," + std::to_string(n) +
                              "): " + r.witness.value_or(""));
    }
    return o;
  });

  criterion(4, "alpha automorphism over all 27^2 pairs; corrupted map rejected", [&] {
    Outcome o;
    auto good = verify_alpha_automorphism(3, 2, 3);
    o.require(good.method == "all-pairs", "method " + good.method);
    o.require(good.checks >= 27u * 27u, "only " + std::to_string(good.checks) + " checks");
    o.require(good.ok(), "alpha rejected");
    auto bad = verify_alpha_automorphism(3, 2, 1);
    o.require(!bad.ok(), "corrupted map accepted");
    return o;
  });

  criterion(5, "example Engel formulas against iteration", [&] {
    Outcome o;
    ExampleGroup eg(ExampleParams::defaults());
    std::size_t checked = 0;
    for (std::size_t i = 1; i <= eg.truncation(); ++i) {
      const auto p = eg.component(i).p();
      const int n = eg.component(i).n();
      for (std::int64_t scale = -2; scale <= 2; ++scale) {
        std::int64_t pe = 1;
        for (int e = 0; e <= n; ++e, pe *= p) {
          const auto r = scale * pe;
          // independent iteration from x^r
          auto c = eg.group().power(eg.x(), r);
          for (int m = 1; m <= n; ++m) {
            c = eg.group().commutator(c, eg.b(i));
            auto f = engel_formula_check(eg, i, r, static_cast<std::size_t>(m));
            ++checked;
            o.require(f.ok() && f.computed == c,
                      "component " + std::to_string(i) + " r=" + std::to_string(r) +
                          " m=" + std::to_string(m));
          }
        }
      }
    }
    o.require(checked > 0, "nothing checked");
    return o;
  });

  criterion(6, "x is not bounded right Engel: witnesses for m = 1, 2, 3", [&] {
    Outcome o;
    ExampleGroup eg(ExampleParams::defaults());
    for (std::size_t m = 1; m <= 3; ++m) {
      auto w = bounded_right_engel_excludes_x(eg, m);
      auto direct = iterated_commutator(eg.group(), eg.x(), eg.b(w.component), m);
      o.require(!eg.group().is_identity(direct) && direct == w.commutator,
                "m=" + std::to_string(m));
    }
    return o;
  });

  criterion(7, "central height of a_i in F_i equals n_i", [&] {
    Outcome o;
    const auto params = ExampleParams::defaults();
    for (std::size_t i = 1; i <= params.truncation(); ++i) {
      auto h = central_height(params, i);
      o.require(h == static_cast<std::size_t>(params.components[i - 1].n),
                "component " + std::to_string(i) + " height " + std::to_string(h));
    }
    return o;
  });

  criterion(8, "Heineken and rho-chain inclusions on every catalog group", [&] {
    Outcome o;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      auto h = check_heineken(analyses[i]);
      o.require(h.passed, cat[i].name + ": " + h.witness.value_or(""));
      auto r = check_rho_chain(analyses[i]);
      o.require(r.passed, cat[i].name + ": " + r.witness.value_or(""));
    }
    return o;
  });

  criterion(9, "Fitting oracle (order <= 200) and B = F on the catalog", [&] {
    Outcome o;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto &a = analyses[i];
      if (a.group->size() <= 200) {
        auto r = check_fitting(a);
        o.require(r.passed, cat[i].name + ": " + r.witness.value_or(""));
      }
      o.require(a.series.baer.set == a.series.fitting.set, cat[i].name + ": B != F");
    }
    return o;
  });

  criterion(10, "CLI round-trip, diagnostics and deterministic JSON", [&] {
    Outcome o;
    cli::Registry reg;
    reg.add(cli::parse_definitions(catalog_definitions()));
    for (std::size_t i = 0; i < cat.size(); ++i) {
      auto back = analyze(reg.group(cat[i].name));
      o.require(cli::engel_json(back) == cli::engel_json(analyses[i]) &&
                    cli::series_json(back) == cli::series_json(analyses[i]),
                cat[i].name + " does not round-trip");
    }
    std::string out, err;
    int code = invoke({"--defs", "-", "series", "X"},
                      "group A = cyclic 4\n\ngroup X = perm 3 gens (1 4)\n", out, err);
    o.require(code == 2, "malformed perm exit " + std::to_string(code));
    o.require(err.find(":3:26:") != std::string::npos, "diagnostic: " + err);
    code = invoke({"--defs", "-", "engel", "A"}, "group A = cyclic 4\ngroup A = cyclic 4\n", out,
                  err);
    o.require(code == 2 && err.find(":2:7:") != std::string::npos, "duplicate: " + err);
    code = invoke({"series", "NoSuchGroup"}, "", out, err);
    o.require(code == 2, "unknown name exit " + std::to_string(code));

    std::string first, second;
    const int c1 = invoke({"verify", "baer", "catalog", "--json"}, "", first, err);
    const int c2 = invoke({"verify", "baer", "catalog", "--json"}, "", second, err);
    o.require(c1 == 0 && c2 == 0, "verify baer catalog failed");
    o.require(!first.empty() && first == second, "JSON differs between runs");
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
