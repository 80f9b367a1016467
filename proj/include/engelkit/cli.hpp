#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "engelkit/constructions.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/example_group.hpp"
#include "engelkit/group.hpp"
#include "engelkit/limits.hpp"
#include "engelkit/verify.hpp"

namespace engelkit::cli {

// Syntax or semantic error in a definition file, with 1-based position.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string &message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

enum class DefinitionKind { perm, cyclic, dihedral, modular, direct, semidirect, example };

struct GroupDefinition {
  std::string name;
  DefinitionKind kind = DefinitionKind::cyclic;
  std::size_t line = 0;

  std::uint64_t degree = 0;               // perm
  std::vector<CycleList> generators;      // perm
  std::uint64_t order = 0;                // cyclic m, dihedral 2m
  std::int64_t p = 0;                     // modular
  int n = 0;                              // modular
  std::vector<std::string> operands;      // direct A B, semidirect Actor Base
  std::vector<std::size_t> operand_columns;
  std::vector<Word> action;               // semidirect, words in g1, g2, ...
  ExampleParams example;                  // example
};

// One statement per line, '#' starts a comment:
//   group <name> = perm <degree> gens <cycles>, <cycles>, ...
//   group <name> = cyclic <m> | dihedral <2m> | modular p=<p> n=<n>
//   group <name> = direct <A> <B>
//   group <name> = semidirect <Actor> <Base> action [<word>, ...]
//   group <name> = example primes=[..] exps=[..] N=<k>
// Words are products of g<i> or g<i>^<e> joined by '*', or 1.
// Throws ParseError on malformed lines, malformed cycles, duplicate names
// and references to names that are neither defined earlier nor in the
// built-in catalog.
std::vector<GroupDefinition> parse_definitions(const std::string &text);

// Named groups available to commands: file definitions shadow the catalog.
class Registry {
public:
  explicit Registry(const Limits &limits = {});

  // Builds every definition in order; constructor errors become ParseError
  // on the definition's line.
  void add(const std::vector<GroupDefinition> &defs);

  bool contains(const std::string &name) const;
  // Throws InvalidArgument for unknown names.
  const Group &group(const std::string &name) const;
  // Parameters of an example definition, if `name` is one.
  std::optional<ExampleParams> example(const std::string &name) const;
  const std::vector<CatalogEntry> &catalog() const { return catalog_; }

private:
  Limits limits_;
  std::vector<CatalogEntry> catalog_;
  std::map<std::string, Group> defined_;
  std::map<std::string, ExampleParams> examples_;
};

// Parses "primes=[3,5] exps=[2,3] N=2"; throws ParseError (line 1).
ExampleParams parse_example_params(const std::string &text);

struct ReportOptions {
  bool timing = false;
};

// JSON documents with a fixed key order. Element sets are listed in the
// group's canonical element order.
std::string engel_json(const GroupAnalysis &a, const ReportOptions &opts = {});
std::string series_json(const GroupAnalysis &a, const ReportOptions &opts = {});
std::string checks_json(const std::vector<CheckReport> &checks, const ReportOptions &opts = {});

std::string engel_text(const GroupAnalysis &a);
std::string series_text(const GroupAnalysis &a);
std::string checks_text(const std::vector<CheckReport> &checks);

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2, capacity_exceeded = 3 };

// Entry point of the engelkit tool. args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace engelkit::cli
