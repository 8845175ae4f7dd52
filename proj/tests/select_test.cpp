#include <gtest/gtest.h>

#include "poim/error.hpp"
#include "poim/matcher.hpp"
#include "poim/multirelation.hpp"
#include "poim/oracle.hpp"
#include "poim/select.hpp"
#include "poim/syntax.hpp"
#include "testkit.hpp"

namespace poim {
namespace {

template <typename F>
ErrorCode codeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Syntax;
}

const Term alice = Term::literal("Alice");
const Term bob = Term::literal("Bob");

TEST(Multirelation, MultisetSemantics) {
  Multirelation a({"x"}, {{bob}, {alice}, {bob}});
  Multirelation b({"x"}, {{alice}, {bob}, {bob}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.count({bob}), 2u);
  EXPECT_NE(a, Multirelation({"x"}, {{alice}, {bob}}));
  EXPECT_THROW(Multirelation({"x", "y"}, {{alice}}), std::invalid_argument);
}

TEST(Multirelation, Csv) {
  Multirelation t({"name", "who"},
                  {{Term::literal("a,b"), Term::iri(":x")},
                   {Term::literal("say \"hi\""), Term::blank("b")},
                   {Term::literal("two\nlines"), Term::iri("http://e.org/")}});
  EXPECT_EQ(toCsv(t),
            "name,who\r\n"
            "\"a,b\",:x\r\n"
            "\"say \"\"hi\"\"\",_:b\r\n"
            "\"two\nlines\",http://e.org/\r\n");
}

TEST(Multirelation, Text) {
  Multirelation t({"nameX", "y"}, {{alice, bob}});
  EXPECT_EQ(toText(t), "nameX    y\n\"Alice\"  \"Bob\"\n");
}

TEST(SelectQuery, Validation) {
  Graph l = parsePattern("?x :p ?y");
  EXPECT_EQ(codeOf([&] {
              SelectQuery::make(l, {Term::variable("x"), Term::variable("x")});
            }),
            ErrorCode::DuplicateProjectionVar);
  EXPECT_EQ(codeOf([&] { SelectQuery::make(l, {Term::variable("z")}); }),
            ErrorCode::ProjectionNotInPattern);
  auto q = SelectQuery::make(l, {Term::variable("y"), Term::variable("x")});
  EXPECT_EQ(q.header(), (std::vector<std::string>{"y", "x"}));
}

TEST(Relational, QueryGraphShape) {
  FreshSupply supply;
  Graph gr = relationalQueryGraph({Term::variable("a"), Term::variable("b")},
                                  supply);
  EXPECT_EQ(gr, Graph({{Term::blank("fresh1"), columnIri("a"), Term::variable("a")},
                       {Term::blank("fresh1"), columnIri("b"), Term::variable("b")}}));
  EXPECT_EQ(columnIri("a").label(), "urn:x-poim:column:a");
  EXPECT_EQ(codeOf([&] { relationalQueryGraph({}, supply); }),
            ErrorCode::EmptyProjection);
}

TEST(Relational, RecognizesRowEncodings) {
  const std::vector<std::string> header = {"x", "y"};
  auto row = [](const std::string& r, const Term& x, const Term& y) {
    return std::vector<Triple>{{Term::blank(r), columnIri("x"), x},
                               {Term::blank(r), columnIri("y"), y}};
  };
  Graph good;
  for (const auto& t : row("r1", alice, bob)) good.insert(t);
  for (const auto& t : row("r2", alice, bob)) good.insert(t);
  EXPECT_TRUE(isRelationalDataGraph(good, header));
  EXPECT_EQ(rel(good, header), Multirelation(header, {{alice, bob}, {alice, bob}}));
  EXPECT_TRUE(isRelationalDataGraph(Graph(), header));

  Graph missing = good;
  missing.insert({Term::blank("r3"), columnIri("x"), alice});
  EXPECT_FALSE(isRelationalDataGraph(missing, header));
  Graph twice = good;
  twice.insert({Term::blank("r1"), columnIri("x"), bob});
  EXPECT_FALSE(isRelationalDataGraph(twice, header));
  Graph iriRow = {{Term::iri(":r"), columnIri("x"), alice},
                  {Term::iri(":r"), columnIri("y"), bob}};
  EXPECT_FALSE(isRelationalDataGraph(iriRow, header));
  Graph foreign = good;
  foreign.insert({Term::blank("r1"), Term::iri(":other"), bob});
  EXPECT_FALSE(isRelationalDataGraph(foreign, header));
  EXPECT_EQ(codeOf([&] { rel(foreign, header); }), ErrorCode::NotRelational);
}

TEST(Relational, RoundTrip) {
  testkit::Rng rng(6);
  for (int round = 0; round < 50; ++round) {
    Graph g = testkit::randomDataGraph(rng, {.maxTriples = 8});
    std::vector<Multirelation::Row> rows;
    for (const auto& t : g) rows.push_back({t.subject, t.object});
    auto copy = rows;
    rows.insert(rows.end(), copy.begin(), copy.end());  // duplicates
    Multirelation table({"s", "o"}, rows);
    FreshSupply supply;
    Graph encoded = relationalDataGraph(table, supply);
    EXPECT_TRUE(isRelationalDataGraph(encoded, table.header()));
    EXPECT_EQ(rel(encoded, table.header()), table);
  }
}

TEST(SelectEval, ExampleTable) {
  auto q = std::get<SelectQuery>(parseQuery(testkit::readFixture("select.rq")));
  Graph g = parseData(testkit::readFixture("select.dg"));
  for (auto calculus : {Calculus::High, Calculus::Low}) {
    FreshSupply supply;
    auto table = selectEval(q, g, supply, calculus);
    EXPECT_EQ(table, Multirelation({"nameX", "nameY"},
                                   {{alice, bob},
                                    {alice, bob},
                                    {alice, Term::literal("Cathy")}}));
  }
}

TEST(SelectEval, RowsPerMatchAndOracleAgreement) {
  testkit::Rng rng(55);
  for (int round = 0; round < 150; ++round) {
    auto inst = testkit::randomSelectInstance(rng, 64);
    FreshSupply supply;
    auto table = selectEval(inst.query, inst.data, supply);
    EXPECT_EQ(table.size(),
              enumerateMatches(inst.query.pattern, inst.data).size());
    EXPECT_EQ(table, oracle::sparqlSelectAnswer(inst.query.pattern,
                                                inst.query.projection,
                                                inst.data));
  }
}

}  // namespace
}  // namespace poim
