#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "engelkit/cli.hpp"

namespace engelkit::cli {

namespace {

struct Options {
  bool json = false;
  bool timing = false;
  std::optional<std::size_t> max_order;
  std::string out_path;
  std::string defs_path;
};

std::string read_stream(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_defs(const std::string &path, std::istream &in) {
  if (path == "-")
    return read_stream(in);
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw InvalidArgument("cannot open definition file '" + path + "'");
  return read_stream(file);
}

bool all_passed(const std::vector<CheckReport> &checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Engel elements, radicals and central series of concrete groups", "engelkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_flag("--timing", opt.timing, "Include elapsed times in JSON check reports");
  app.add_option("--max-order", opt.max_order,
                 "Cap on enumeration and set analysis (clamped to " +
                     std::to_string(Limits::hard_ceiling) + ")")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out_path, "Write the report to a file instead of stdout");
  app.add_option("--defs", opt.defs_path, "Group definition file, '-' for stdin");

  std::string name;
  auto *engel = app.add_subcommand("engel", "Left and right Engel elements with degrees");
  engel->add_option("name", name, "Group name")->required();
  auto *series = app.add_subcommand("series", "Central series and radicals");
  series->add_option("name", name, "Group name")->required();

  std::string suite_name;
  std::string target = "catalog";
  auto *verify = app.add_subcommand("verify", "Run a check suite on a group or the catalog");
  verify->add_option("suite", suite_name, "baer, heineken, rho or all")
      ->required()
      ->check(CLI::IsMember({"baer", "heineken", "rho", "all"}));
  verify->add_option("target", target, "Group name or 'catalog'");

  std::vector<std::string> params_tokens;
  auto *verify_example =
      app.add_subcommand("verify-example", "Check the truncated example group");
  verify_example->add_option("params", params_tokens,
                             "Definition name or primes=[..] exps=[..] N=<k>");

  auto *catalog_cmd = app.add_subcommand("catalog", "Print the built-in catalog definitions");

  for (auto *sub : {engel, series, verify, verify_example, catalog_cmd})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return ExitCode::ok;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return ExitCode::input_error;
  }

  const Limits limits = opt.max_order ? Limits::with_max_order(*opt.max_order) : Limits{};
  const ReportOptions report_opts{opt.timing};
  std::string defs_source = opt.defs_path == "-" ? "<stdin>" : opt.defs_path;

  try {
    Registry registry(limits);
    if (!opt.defs_path.empty())
      registry.add(parse_definitions(read_defs(opt.defs_path, in)));

    std::string document;
    int code = ExitCode::ok;

    if (*engel || *series) {
      const auto analysis = analyze(registry.group(name), limits);
      if (*engel)
        document = opt.json ? engel_json(analysis, report_opts) : engel_text(analysis);
      else
        document = opt.json ? series_json(analysis, report_opts) : series_text(analysis);
    } else if (*verify) {
      const auto suite = *parse_suite(suite_name);
      std::vector<CheckReport> checks;
      if (target == "catalog" && !registry.contains("catalog")) {
        for (const auto &entry : registry.catalog()) {
          auto part = run_suite(entry.group, suite, limits);
          checks.insert(checks.end(), part.begin(), part.end());
        }
      } else {
        checks = run_suite(registry.group(target), suite, limits);
      }
      document = opt.json ? checks_json(checks, report_opts) : checks_text(checks);
      code = all_passed(checks) ? ExitCode::ok : ExitCode::check_failed;
    } else if (*verify_example) {
      ExampleParams params = ExampleParams::defaults();
      if (params_tokens.size() == 1 && registry.example(params_tokens[0])) {
        params = *registry.example(params_tokens[0]);
      } else if (!params_tokens.empty()) {
        std::string joined;
        for (const auto &t : params_tokens)
          joined += (joined.empty() ? "" : " ") + t;
        defs_source = "<params>";
        params = parse_example_params(joined);
      }
      std::vector<CheckReport> checks{check_example(params, limits)};
      document = opt.json ? checks_json(checks, report_opts) : checks_text(checks);
      code = all_passed(checks) ? ExitCode::ok : ExitCode::check_failed;
    } else if (*catalog_cmd) {
      document = catalog_definitions();
    }

    if (opt.out_path.empty()) {
      out << document;
    } else {
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file)
        throw InvalidArgument("cannot write '" + opt.out_path + "'");
      file << document;
    }
    return code;
  } catch (const ParseError &e) {
    err << "error: " << defs_source << ":" << e.line() << ":" << e.column() << ": "
        << e.message() << "\n";
    return ExitCode::input_error;
  } catch (const CapacityError &e) {
    err << "error: capacity exceeded: " << e.what() << "\n";
    return ExitCode::capacity_exceeded;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::input_error;
  }
}

} // namespace engelkit::cli
