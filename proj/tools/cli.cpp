#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "poim/construct.hpp"
#include "poim/error.hpp"
#include "poim/isomorphism.hpp"
#include "poim/matcher.hpp"
#include "poim/multirelation.hpp"
#include "poim/oracle.hpp"
#include "poim/select.hpp"
#include "poim/syntax.hpp"

namespace poim::cli {

namespace {

// Unreadable input or a parse failure, already prefixed with the path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Parse>
auto load(const std::string& path, Parse parse) {
  std::string text = readFile(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what() + " [" +
                     std::string(toString(e.code())) + "]");
  }
}

Graph loadData(const std::string& path) {
  return load(path, [](std::string_view t) { return parseData(t); });
}

Query loadQuery(const std::string& path) {
  return load(path, [](std::string_view t) { return parseQuery(t); });
}

const Graph& patternOf(const Query& query) {
  if (const auto* c = std::get_if<ConstructQuery>(&query)) return c->pattern;
  return std::get<SelectQuery>(query).pattern;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "poimq: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "poimq: " << toString(e.code()) << ": " << e.what() << '\n';
    return kSemantic;
  }
}

std::optional<FixedSet> fixedSetNamed(const std::string& name) {
  if (name == "I") return FixedSet::I();
  if (name == "IV") return FixedSet::IV();
  if (name == "IB") return FixedSet::IB();
  if (name == "IBV") return FixedSet::IBV();
  return std::nullopt;
}

struct QueryFlags {
  std::string data;
  std::string query;
  std::string calculus = "low";
  bool dropUnbound = false;
  bool rdfStrict = false;
  std::uint64_t seed = 0;
  std::string format = "csv";
};

int cmdQuery(const QueryFlags& flags, std::ostream& out) {
  Graph data = loadData(flags.data);
  Query query = loadQuery(flags.query);
  FreshSupply supply(std::string(kFreshPrefix), flags.seed);
  const Calculus calculus =
      flags.calculus == "high" ? Calculus::High : Calculus::Low;
  if (const auto* c = std::get_if<ConstructQuery>(&query)) {
    auto policy = flags.dropUnbound ? UnboundPolicy::DropTriples
                                    : UnboundPolicy::Strict;
    auto rule = makeRule(c->pattern, c->templ, supply, policy);
    Graph h = constructEval(rule, data, supply, {calculus, flags.rdfStrict});
    if (!h.empty()) out << serializeGraph(h, /*canonicalBlanks=*/true) << '\n';
    return kOk;
  }
  auto table = selectEval(std::get<SelectQuery>(query), data, supply, calculus);
  if (table.empty()) return kOk;
  out << (flags.format == "text" ? toText(table) : toCsv(table));
  return kOk;
}

int cmdMatch(const std::string& dataPath, const std::string& queryPath,
             std::ostream& out) {
  Graph data = loadData(dataPath);
  Query query = loadQuery(queryPath);
  const Graph& pattern = patternOf(query);
  auto parts = partitionAttributes(pattern);
  std::vector<Term> columns(parts.blanks.begin(), parts.blanks.end());
  columns.insert(columns.end(), parts.variables.begin(), parts.variables.end());

  auto matches = enumerateMatches(pattern, data);
  if (!columns.empty() && !matches.empty()) {
    std::vector<std::string> header;
    for (const auto& term : columns) header.push_back(term.toString());
    // Rows in enumeration order, which a Multirelation would re-sort.
    std::vector<Multirelation::Row> rows;
    for (const auto& m : matches) {
      Multirelation::Row row;
      for (const auto& term : columns) row.push_back(m(term));
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width;
    for (const auto& name : header) width.push_back(name.size());
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        width[j] = std::max(width[j], row[j].toString().size());
      }
    }
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t j = 0; j < fields.size(); ++j) {
        if (j > 0) out << "  ";
        out << fields[j];
        if (j + 1 < fields.size()) {
          out << std::string(width[j] - fields[j].size(), ' ');
        }
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) {
      std::vector<std::string> fields;
      for (const auto& cell : row) fields.push_back(cell.toString());
      line(fields);
    }
  }
  out << matches.size() << (matches.size() == 1 ? " match" : " matches")
      << '\n';
  return kOk;
}

int cmdIso(const std::string& left, const std::string& right,
           const FixedSet& fixed, std::ostream& out) {
  Graph g1 = load(left, [](std::string_view t) { return parsePattern(t); });
  Graph g2 = load(right, [](std::string_view t) { return parsePattern(t); });
  auto witness = findIsomorphism(g1, g2, fixed);
  if (!witness) {
    out << "not isomorphic\n";
    return kMismatch;
  }
  out << "isomorphic\n";
  for (const auto& [from, to] : witness->map()) {
    if (!fixed.contains(from)) out << "  " << from << " -> " << to << '\n';
  }
  return kOk;
}

int compareTables(
    const std::vector<std::pair<std::string, Multirelation>>& results,
    std::ostream& out) {
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      if (results[i].second == results[j].second) continue;
      out << results[i].first << " and " << results[j].first << " differ\n"
          << "--- " << results[i].first << '\n'
          << toText(results[i].second) << "--- " << results[j].first << '\n'
          << toText(results[j].second);
      return kMismatch;
    }
  }
  out << "agree: ";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << (i ? ", " : "") << results[i].first;
  }
  out << '\n';
  return kOk;
}

int cmdDiff(const QueryFlags& flags, std::ostream& out) {
  Graph data = loadData(flags.data);
  Query query = loadQuery(flags.query);
  FreshSupply supply(std::string(kFreshPrefix), flags.seed);
  if (const auto* c = std::get_if<ConstructQuery>(&query)) {
    auto policy = flags.dropUnbound ? UnboundPolicy::DropTriples
                                    : UnboundPolicy::Strict;
    auto rule = makeRule(c->pattern, c->templ, supply, policy);
    std::vector<std::pair<std::string, Graph>> results;
    results.emplace_back("high", constructHigh(rule, data, supply));
    results.emplace_back("low", constructLow(rule, data, supply));
    FreshSupply oracleSupply("o", flags.seed);
    results.emplace_back("direct",
                         oracle::directConstruct(c->pattern, c->templ, data,
                                                 oracleSupply, policy));
    return compareGraphs(results, out);
  }
  const auto& select = std::get<SelectQuery>(query);
  std::vector<std::pair<std::string, Multirelation>> results;
  results.emplace_back("high",
                       selectEval(select, data, supply, Calculus::High));
  results.emplace_back("low", selectEval(select, data, supply, Calculus::Low));
  results.emplace_back("sparql", oracle::sparqlSelectAnswer(
                                     select.pattern, select.projection, data));
  return compareTables(results, out);
}

void addQueryInputs(CLI::App* command, QueryFlags& flags) {
  command->add_option("data", flags.data, "Data graph (.dg)")->required();
  command->add_option("query", flags.query, "Query (.rq)")->required();
  command->add_flag("--compat-drop-unbound", flags.dropUnbound,
                    "Drop template triples with unbound variables");
  command->add_option("--seed", flags.seed,
                      "Offset of the fresh-label counter");
}

}  // namespace

int compareGraphs(const std::vector<std::pair<std::string, Graph>>& results,
                  std::ostream& out) {
  const auto fixed = FixedSet::I();
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      const auto& [nameA, a] = results[i];
      const auto& [nameB, b] = results[j];
      if (isomorphic(a, b, fixed)) continue;
      out << nameA << " and " << nameB << " are not isomorphic\n"
          << "--- " << nameA << '\n'
          << serializeGraph(a, true) << "\n--- " << nameB << '\n'
          << serializeGraph(b, true) << '\n';
      return kMismatch;
    }
  }
  out << "agree: ";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << (i ? ", " : "") << results[i].first;
  }
  out << '\n';
  return kOk;
}

int runCli(std::vector<std::string> args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Evaluate basic CONSTRUCT and SELECT queries by graph rewriting",
               "poimq");
  app.require_subcommand(1);

  QueryFlags queryFlags;
  auto* query = app.add_subcommand("query", "Evaluate a query");
  addQueryInputs(query, queryFlags);
  query->add_option("--calculus", queryFlags.calculus, "high or low")
      ->check(CLI::IsMember({"high", "low"}));
  query->add_flag("--rdf-strict", queryFlags.rdfStrict,
                  "Fail when the result is not an RDF graph");
  query->add_option("--format", queryFlags.format,
                    "SELECT output: csv or text")
      ->check(CLI::IsMember({"text", "csv"}));

  std::string matchData;
  std::string matchQuery;
  auto* match = app.add_subcommand("match", "List the matches of a pattern");
  match->add_option("data", matchData, "Data graph (.dg)")->required();
  match->add_option("query", matchQuery, "Query (.rq)")->required();

  std::string isoLeft;
  std::string isoRight;
  std::string fixing = "I";
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs");
  iso->add_option("left", isoLeft, "First graph")->required();
  iso->add_option("right", isoRight, "Second graph")->required();
  iso->add_option("--fixing", fixing, "Fixed attributes: I, IV, IB or IBV")
      ->check(CLI::IsMember({"I", "IV", "IB", "IBV"}));

  QueryFlags diffFlags;
  auto* diff = app.add_subcommand(
      "diff", "Compare both calculi with the direct definition");
  addQueryInputs(diff, diffFlags);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  return guarded(err, [&]() -> int {
    if (query->parsed()) return cmdQuery(queryFlags, out);
    if (match->parsed()) return cmdMatch(matchData, matchQuery, out);
    if (iso->parsed()) {
      return cmdIso(isoLeft, isoRight, *fixedSetNamed(fixing), out);
    }
    return cmdDiff(diffFlags, out);
  });
}

}  // namespace poim::cli
