#include <cctype>
#include <charconv>
#include <set>
#include <string_view>

#include "engelkit/cli.hpp"

namespace engelkit::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line), column_(column), message_(message) {}

namespace {

// Cursor over one line; columns are 1-based byte offsets.
class LineReader {
public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string &message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string &message) const {
    throw ParseError(line_, pos + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'" + found());
  }

  std::string identifier(const char *what) {
    skip_space();
    const auto start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_)
      fail(std::string("expected ") + what + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(std::string_view word) {
    const auto start = (skip_space(), pos_);
    const auto got = identifier(std::string("'" + std::string(word) + "'").c_str());
    if (got != word)
      fail_at(start, "expected '" + std::string(word) + "', found '" + got + "'");
  }

  std::int64_t integer(const char *what, bool allow_sign = false) {
    skip_space();
    const auto start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const auto digits = text_.substr(start, pos_ - start);
    std::int64_t value = 0;
    const auto *first = digits.data() + (!digits.empty() && digits[0] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      pos_ = start;
      if (ec == std::errc::result_out_of_range)
        fail(std::string(what) + " is out of range");
      fail(std::string("expected ") + what + found());
    }
    return value;
  }

  std::int64_t positive(const char *what) {
    const auto start = (skip_space(), pos_);
    const auto v = integer(what);
    if (v <= 0)
      fail_at(start, std::string(what) + " must be positive");
    return v;
  }

  // key=value prefix, e.g. "p=".
  void key(std::string_view name) {
    keyword(name);
    expect('=');
  }

  std::vector<std::int64_t> integer_list(const char *what) {
    expect('[');
    std::vector<std::int64_t> out;
    if (accept(']'))
      return out;
    do
      out.push_back(integer(what));
    while (accept(','));
    expect(']');
    return out;
  }

  std::string found() {
    skip_space();
    if (pos_ >= text_.size())
      return ", found end of line";
    return ", found '" + std::string(1, text_[pos_]) + "'";
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// One generator: a product of disjoint cycles, "()" for the identity.
CycleList parse_cycles(LineReader &r, std::uint64_t degree) {
  CycleList cycles;
  std::set<std::int64_t> used;
  if (r.peek() != '(')
    r.fail("expected a cycle" + r.found());
  while (r.peek() == '(') {
    r.expect('(');
    Cycle cycle;
    while (r.peek() != ')') {
      if (r.at_end())
        r.fail("expected ')'" + r.found());
      const auto at = (r.skip_space(), r.pos());
      const auto point = r.integer("a point");
      if (point < 1 || static_cast<std::uint64_t>(point) > degree)
        r.fail_at(at, "point " + std::to_string(point) + " exceeds degree " +
                          std::to_string(degree));
      if (!used.insert(point).second)
        r.fail_at(at, "point " + std::to_string(point) + " appears twice; cycles must be disjoint");
      cycle.push_back(point);
      r.accept(',');
    }
    r.expect(')');
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// 1 | factor ('*' factor)*, factor = g<i> ['^' <e>]
Word parse_word(LineReader &r) {
  Word word;
  if (r.peek() == '1') {
    const auto at = r.pos();
    if (r.integer("a word") != 1)
      r.fail_at(at, "expected a word");
    return word;
  }
  do {
    const auto at = (r.skip_space(), r.pos());
    const auto name = r.identifier("a generator g<i>");
    std::size_t index = 0;
    const auto digits = std::string_view(name).substr(1);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (name[0] != 'g' || digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size() || index == 0)
      r.fail_at(at, "expected a generator g<i>, found '" + name + "'");
    std::int64_t exponent = 1;
    if (r.accept('^'))
      exponent = r.integer("an exponent", true);
    word.push_back({index - 1, exponent});
  } while (r.accept('*'));
  return word;
}

ExampleParams parse_example(LineReader &r) {
  const auto start = (r.skip_space(), r.pos());
  r.key("primes");
  const auto primes = r.integer_list("a prime");
  r.key("exps");
  const auto exps = r.integer_list("an exponent");
  r.key("N");
  const auto n_at = (r.skip_space(), r.pos());
  const auto n = r.positive("a truncation N");
  if (primes.size() != exps.size())
    r.fail_at(start, std::to_string(primes.size()) + " primes but " +
                         std::to_string(exps.size()) + " exponents");
  if (static_cast<std::size_t>(n) > primes.size())
    r.fail_at(n_at, "truncation N=" + std::to_string(n) + " exceeds the " +
                        std::to_string(primes.size()) + " listed components");
  ExampleParams params;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    if (exps[i] < 0 || exps[i] > 62)
      r.fail_at(start, "exponent " + std::to_string(exps[i]) + " out of range");
    params.components.push_back({primes[i], static_cast<int>(exps[i])});
  }
  return params;
}

const std::set<std::string> &catalog_names() {
  static const std::set<std::string> names = [] {
    std::set<std::string> out;
    for (const auto &e : engelkit::catalog())
      out.insert(e.name);
    return out;
  }();
  return names;
}

GroupDefinition parse_line(std::string_view text, std::size_t line_no,
                           const std::set<std::string> &known) {
  LineReader r(text, line_no);
  GroupDefinition def;
  def.line = line_no;
  r.keyword("group");
  def.name = r.identifier("a group name");
  r.expect('=');
  const auto kind_at = (r.skip_space(), r.pos());
  const auto kind = r.identifier("a constructor");

  auto reference = [&] {
    const auto at = (r.skip_space(), r.pos());
    auto name = r.identifier("a group name");
    if (!known.contains(name) && !catalog_names().contains(name))
      r.fail_at(at, "unresolved reference '" + name + "'");
    def.operands.push_back(name);
    def.operand_columns.push_back(at + 1);
  };

  if (kind == "perm") {
    def.kind = DefinitionKind::perm;
    def.degree = static_cast<std::uint64_t>(r.positive("a degree"));
    r.keyword("gens");
    do
      def.generators.push_back(parse_cycles(r, def.degree));
    while (r.accept(','));
  } else if (kind == "cyclic") {
    def.kind = DefinitionKind::cyclic;
    def.order = static_cast<std::uint64_t>(r.positive("an order"));
  } else if (kind == "dihedral") {
    def.kind = DefinitionKind::dihedral;
    const auto at = (r.skip_space(), r.pos());
    def.order = static_cast<std::uint64_t>(r.positive("an order"));
    if (def.order % 2 != 0 || def.order < 6)
      r.fail_at(at, "dihedral order must be even and at least 6");
  } else if (kind == "modular") {
    def.kind = DefinitionKind::modular;
    r.key("p");
    def.p = r.positive("a prime p");
    r.key("n");
    const auto at = (r.skip_space(), r.pos());
    const auto n = r.positive("an exponent n");
    if (n > 62)
      r.fail_at(at, "exponent n out of range");
    def.n = static_cast<int>(n);
  } else if (kind == "direct") {
    def.kind = DefinitionKind::direct;
    reference();
    reference();
  } else if (kind == "semidirect") {
    def.kind = DefinitionKind::semidirect;
    reference();
    reference();
    r.keyword("action");
    r.expect('[');
    do
      def.action.push_back(parse_word(r));
    while (r.accept(','));
    r.expect(']');
  } else if (kind == "example") {
    def.kind = DefinitionKind::example;
    def.example = parse_example(r);
  } else {
    r.fail_at(kind_at, "unknown constructor '" + kind + "'");
  }
  if (!r.at_end())
    r.fail("unexpected trailing input" + r.found());
  return def;
}

} // namespace

std::vector<GroupDefinition> parse_definitions(const std::string &text) {
  std::vector<GroupDefinition> out;
  std::set<std::string> known;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string::npos)
      end = text.size();
    ++line_no;
    std::string_view line(text.data() + begin, end - begin);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      auto def = parse_line(line, line_no, known);
      if (!known.insert(def.name).second) {
        const auto col = line.find(def.name, line.find("group") + 5);
        throw ParseError(line_no, col + 1, "duplicate group name '" + def.name + "'");
      }
      out.push_back(std::move(def));
    }
    if (end == text.size())
      break;
    begin = end + 1;
  }
  return out;
}

ExampleParams parse_example_params(const std::string &text) {
  LineReader r(text, 1);
  auto params = parse_example(r);
  if (!r.at_end())
    r.fail("unexpected trailing input" + r.found());
  return params;
}

// ---------------------------------------------------------------- registry

Registry::Registry(const Limits &limits) : limits_(limits), catalog_(engelkit::catalog(limits)) {}

bool Registry::contains(const std::string &name) const {
  if (defined_.contains(name))
    return true;
  for (const auto &e : catalog_)
    if (e.name == name)
      return true;
  return false;
}

const Group &Registry::group(const std::string &name) const {
  if (auto it = defined_.find(name); it != defined_.end())
    return it->second;
  for (const auto &e : catalog_)
    if (e.name == name)
      return e.group;
  throw InvalidArgument("unknown group '" + name + "'");
}

std::optional<ExampleParams> Registry::example(const std::string &name) const {
  if (auto it = examples_.find(name); it != examples_.end())
    return it->second;
  return std::nullopt;
}

void Registry::add(const std::vector<GroupDefinition> &defs) {
  for (const auto &def : defs) {
    std::size_t column = 1;
    try {
      Group g = [&]() -> Group {
        switch (def.kind) {
        case DefinitionKind::perm:
          return permutation_group(def.degree, def.generators, limits_);
        case DefinitionKind::cyclic:
          return cyclic_group(def.order);
        case DefinitionKind::dihedral:
          return dihedral_group(def.order, limits_);
        case DefinitionKind::modular:
          return modular_group(def.p, def.n);
        case DefinitionKind::direct:
          column = def.operand_columns[0];
          return direct_product(group(def.operands[0]), group(def.operands[1]));
        case DefinitionKind::semidirect: {
          column = def.operand_columns[1];
          const auto &actor = group(def.operands[0]);
          const auto &base = group(def.operands[1]);
          const auto gens = base.generators();
          if (def.action.size() != gens.size())
            throw InvalidArgument("action lists " + std::to_string(def.action.size()) +
                                  " images but " + def.operands[1] + " has " +
                                  std::to_string(gens.size()) + " generators");
          std::vector<Element> images;
          for (const auto &word : def.action) {
            for (const auto &letter : word)
              if (letter.generator >= gens.size())
                throw InvalidArgument("generator g" + std::to_string(letter.generator + 1) +
                                      " does not exist in " + def.operands[1]);
            images.push_back(evaluate_word(base, word, gens));
          }
          return semidirect_product(actor, base, std::move(images), limits_);
        }
        case DefinitionKind::example:
          examples_[def.name] = def.example;
          return ExampleGroup(def.example).group();
        }
        throw InvalidArgument("unknown definition kind");
      }();
      defined_.insert_or_assign(def.name, g.renamed(def.name));
    } catch (const ParseError &) {
      throw;
    } catch (const CapacityError &) {
      throw;
    } catch (const Error &e) {
      examples_.erase(def.name);
      throw ParseError(def.line, column, def.name + ": " + e.what());
    }
  }
}

} // namespace engelkit::cli
