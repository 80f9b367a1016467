#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "engelkit/cli.hpp"

using namespace engelkit;
using namespace engelkit::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

ParseError parse_error(const std::string &text) {
  try {
    parse_definitions(text);
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("parse permutation definitions") {
  auto defs = parse_definitions("group S3 = perm 3 gens (1 2), (1 2 3)\n");
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].name == "S3");
  CHECK(defs[0].kind == DefinitionKind::perm);
  CHECK(defs[0].degree == 3);
  REQUIRE(defs[0].generators.size() == 2);
  CHECK(defs[0].generators[1] == CycleList{{1, 2, 3}});

  auto v4 = parse_definitions("group V = perm 4 gens (1 2)(3 4), (1 3)(2 4)  # Klein\n");
  CHECK(v4[0].generators[0] == CycleList{{1, 2}, {3, 4}});
  auto id = parse_definitions("group T = perm 2 gens ()");
  CHECK(id[0].generators[0].empty());
}

TEST_CASE("parse the other constructors") {
  auto defs = parse_definitions("# header\n"
                                "\n"
                                "group P = modular p=3 n=2\n"
                                "group C = cyclic 3\n"
                                "group D = dihedral 10\n"
                                "group X = direct P C\n"
                                "group F = semidirect C P action [g1, g2*g1^3]\n"
                                "group E = example primes=[3,5] exps=[2,3] N=2\n");
  REQUIRE(defs.size() == 6);
  CHECK(defs[0].kind == DefinitionKind::modular);
  CHECK(defs[0].p == 3);
  CHECK(defs[0].n == 2);
  CHECK(defs[0].line == 3);
  CHECK(defs[2].order == 10);
  CHECK(defs[3].operands == std::vector<std::string>{"P", "C"});
  REQUIRE(defs[4].action.size() == 2);
  CHECK(defs[4].action[1].size() == 2);
  CHECK(defs[4].action[1][1].generator == 0);
  CHECK(defs[4].action[1][1].exponent == 3);
  CHECK(defs[5].example == ExampleParams::from_lists({3, 5}, {2, 3}, 2));

  Registry reg;
  reg.add(defs);
  CHECK(reg.group("F").order() == 81u);
  CHECK(reg.group("X").order() == 81u);
  CHECK(reg.group("D").order() == 10u);
  CHECK(reg.example("E").has_value());
  CHECK_FALSE(reg.example("P").has_value());
  CHECK(reg.group("S4").order() == 24u);
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_error("group X = perm 3 gens (1 4)");
  CHECK(e.line() == 1);
  CHECK(e.column() == 26);
  CHECK(e.message() == "point 4 exceeds degree 3");

  e = parse_error("group A = cyclic 3\ngroup X = perm 3 gens (1 2)(2 3)");
  CHECK(e.line() == 2);
  CHECK(e.column() == 29);
  CHECK(e.message().find("disjoint") != std::string::npos);

  e = parse_error("group A = cyclic 3\n\ngroup A = cyclic 4");
  CHECK(e.line() == 3);
  CHECK(e.column() == 7);
  CHECK(e.message().find("duplicate") != std::string::npos);

  e = parse_error("group B = direct Nope C3");
  CHECK(e.column() == 18);
  CHECK(e.message().find("unresolved") != std::string::npos);

  e = parse_error("group B = direct C3 B");
  CHECK(e.message().find("unresolved") != std::string::npos);

  e = parse_error("group B = cyclic");
  CHECK(e.column() == 17);
  e = parse_error("group B = cyclic 3 4");
  CHECK(e.column() == 20);
  e = parse_error("grp B = cyclic 3");
  CHECK(e.column() == 1);
  e = parse_error("group B = torus 3");
  CHECK(e.column() == 11);
  e = parse_error("group B = perm 3 gens (1 2");
  CHECK(e.message().find("expected ')'") != std::string::npos);
  e = parse_error("group B = semidirect C3 P32 action [h1, g2]");
  CHECK(e.column() == 37);
  e = parse_error("group E = example primes=[3,5] exps=[2] N=1");
  CHECK(e.message().find("exponents") != std::string::npos);
  e = parse_error("group D = dihedral 7");
  CHECK(e.column() == 20);
}

TEST_CASE("semantic errors become located parse errors") {
  Registry reg;
  auto build = [&](const std::string &text) -> ParseError {
    try {
      reg.add(parse_definitions(text));
    } catch (const ParseError &e) {
      return e;
    }
    FAIL("no error for: " << text);
    throw std::logic_error("unreachable");
  };
  auto e = build("group A = cyclic 2\ngroup P = modular p=4 n=2");
  CHECK(e.line() == 2);
  e = build("group Q = semidirect C3 P32 action [g1, g1]");
  CHECK(e.message().find("Q:") == 0);
  e = build("group Q = semidirect C3 P32 action [g1]");
  CHECK(e.message().find("images") != std::string::npos);
  e = build("group Q = semidirect C3 P32 action [g1, g3]");
  CHECK(e.message().find("g3") != std::string::npos);
  e = build("group E = example primes=[5,3] exps=[2,3] N=2");
  CHECK(e.message().find("increasing") != std::string::npos);
}

TEST_CASE("catalog definitions round-trip") {
  const auto text = catalog_definitions();
  auto defs = parse_definitions(text);
  const auto cat = catalog();
  REQUIRE(defs.size() == cat.size());
  Registry reg;
  reg.add(defs);
  for (const auto &entry : cat) {
    const auto &g = reg.group(entry.name);
    CHECK(g.order() == entry.group.order());
    auto x = analyze(g);
    auto y = analyze(entry.group);
    CHECK_MESSAGE(engel_json(x) == engel_json(y), entry.name);
    CHECK_MESSAGE(series_json(x) == series_json(y), entry.name);
  }
}

TEST_CASE("engel S3 --json") {
  auto r = invoke({"engel", "S3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["group"]["name"] == "S3");
  CHECK(j["group"]["order"] == 6);
  CHECK(j["engel"]["left"]["order"] == 3);
  CHECK(j["engel"]["left"]["elements"].size() == 3);
  CHECK(j["engel"]["right"]["elements"] == nlohmann::json::array({"()"}));
  CHECK(j["engel"]["right"]["degrees"] == nlohmann::json::array({1}));
  for (auto key : {"left", "bounded_left", "right", "bounded_right"})
    CHECK(j["engel"].contains(key));
}

TEST_CASE("series --json schema") {
  auto r = invoke({"--json", "series", "D8"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto s = j["series"];
  CHECK(s["upper_central_orders"] == nlohmann::json::array({1, 2, 8}));
  CHECK(s["hypercentral_length"] == 2);
  CHECK(s["lower_central_orders"] == nlohmann::json::array({8, 2, 1}));
  CHECK(s["nilpotency_class"] == 2);
  CHECK(s["fitting_order"] == 8);
  CHECK(s["baer_order"] == 8);
  CHECK(s["rho_order"] == 8);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"series", "NoSuchGroup"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "sideways"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"engel", "P53", "--max-order", "100"}).code == 3);
  CHECK(invoke({"--defs", "-", "engel", "E"}, "group E = example primes=[3] exps=[2] N=1").code ==
        3);
  auto bad = invoke({"verify-example", "primes=[5,3]", "exps=[2,3]", "N=2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(invoke({"verify-example", "primes=[5,3", "exps=[2,3]", "N=2"}).code == 2);
  CHECK(invoke({"--defs", "/nonexistent/defs.txt", "engel", "S3"}).code == 2);
}

TEST_CASE("malformed definitions are reported with their position") {
  auto r = invoke({"--defs", "-", "series", "X"},
                  "group A = cyclic 4\ngroup X = perm 3 gens (1 4)\n");
  CHECK(r.code == 2);
  CHECK(r.err == "error: <stdin>:2:26: point 4 exceeds degree 3\n");
  CHECK(r.out.empty());
}

TEST_CASE("definitions from stdin shadow the catalog") {
  auto r = invoke({"--defs", "-", "--json", "series", "S3"}, "group S3 = cyclic 5\n");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["group"]["order"] == 5);
}

TEST_CASE("verify baer catalog") {
  auto text = invoke({"verify", "baer", "catalog"});
  CHECK(text.code == 0);
  CHECK(text.out.find("PASS  baer  S3") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);

  auto a = invoke({"verify", "baer", "catalog", "--json"});
  auto b = invoke({"verify", "baer", "catalog", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == catalog().size());
  for (const auto &c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("passed"));
    CHECK_FALSE(c.contains("elapsed_ms"));
  }
  auto timed = invoke({"verify", "baer", "S3", "--json", "--timing"});
  CHECK(nlohmann::json::parse(timed.out)["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("verify-example with a named definition") {
  auto r = invoke({"--defs", "-", "verify-example", "E"},
                  "group E = example primes=[3] exps=[2] N=1\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  example  example(primes=[3] exps=[2] N=1)") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "engelkit_cli_test_out.json";
  auto r = invoke({"engel", "C3", "--json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(nlohmann::json::parse(buf.str())["group"]["order"] == 3);
  std::remove(path.c_str());
}

TEST_CASE("catalog subcommand prints parseable definitions") {
  auto r = invoke({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out == catalog_definitions());
}
