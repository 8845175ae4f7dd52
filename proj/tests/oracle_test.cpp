#include <gtest/gtest.h>

#include "poim/error.hpp"
#include "poim/isomorphism.hpp"
#include "poim/oracle.hpp"
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

TEST(BruteForce, SmallHandCountedCase) {
  // ?x :p ?y into a 2-cycle plus a loop: 3 assignments.
  Graph g = parseData(":a :p :b . :b :p :a . :c :p :c");
  auto all = oracle::bruteForceMatches(parsePattern("?x :p ?y"), g);
  EXPECT_EQ(all.size(), 3u);
  auto loops = oracle::bruteForceMatches(parsePattern("?x :p ?x"), g);
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops.begin()->at(Term::variable("x")), Term::iri(":c"));
}

TEST(BruteForce, GuardsTheSearchSpace) {
  Graph l = parsePattern(
      "?a :p ?b . ?c :p ?d . ?e :p ?f . ?g :p ?h . ?i :p :z");
  EXPECT_EQ(codeOf([&] { oracle::bruteForceMatches(l, parseData(":a :p :b")); }),
            ErrorCode::TooLarge);
  EXPECT_NO_THROW(oracle::bruteForceMatches(l, parseData(":a :p :b"), 9));
}

TEST(SolutionMappings, EqualsBruteForce) {
  testkit::Rng rng(17);
  testkit::PatternShape shape{.maxTriples = 4, .maxVariables = 4,
                              .maxBlanks = 2, .iris = 3, .predicates = 2,
                              .literals = 1};
  testkit::DataShape data{.maxTriples = 10, .maxBlanks = 2, .iris = 3,
                          .predicates = 2, .literals = 1};
  for (int round = 0; round < 150; ++round) {
    Graph g = testkit::randomDataGraph(rng, data);
    Graph l = round % 2 ? testkit::randomPattern(rng, shape)
                        : testkit::derivedPattern(rng, g, shape);
    EXPECT_EQ(oracle::solutionMappings(l, g), oracle::bruteForceMatches(l, g));
  }
}

TEST(DirectConstruct, ExampleResults) {
  Graph l = parsePattern("?x :name ?name");
  Graph g = parseData(testkit::readFixture("fn_two.dg"));
  FreshSupply supply("o");
  EXPECT_EQ(oracle::directConstruct(l, parsePattern("?x :FN ?name"), g, supply),
            parseData(":alice :FN \"Alice\" . :bob :FN \"Bob\""));
  Graph blanks =
      oracle::directConstruct(l, parsePattern("_:c :FN ?name"), g, supply);
  EXPECT_EQ(blanks.size(), 2u);
  EXPECT_EQ(blanksOf(blanks).size(), 2u);
}

TEST(DirectConstruct, FreshBlanksAvoidDataBlanks) {
  Graph g = parseData("_:o1 :name \"A\"");
  FreshSupply supply("o");
  Graph h = oracle::directConstruct(parsePattern("?x :name ?n"),
                                    parsePattern("_:b :FN ?x"), g, supply);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_NE(h.begin()->subject, Term::blank("o1"));
}

TEST(DirectConstruct, UnboundPolicy) {
  Graph l = parsePattern("?x :name ?n");
  Graph r = parsePattern("?x :FN ?n . ?x :age ?missing");
  Graph g = parseData(":a :name \"A\"");
  FreshSupply supply("o");
  EXPECT_EQ(codeOf([&] { oracle::directConstruct(l, r, g, supply); }),
            ErrorCode::UnboundVariables);
  EXPECT_EQ(oracle::directConstruct(l, r, g, supply,
                                    UnboundPolicy::DropTriples),
            parseData(":a :FN \"A\""));
}

TEST(SparqlConstruct, AgreesWithDirectOnBlankFreePatterns) {
  testkit::Rng rng(41);
  testkit::PatternShape shape{.maxBlanks = 0};
  for (int round = 0; round < 100; ++round) {
    Graph g = testkit::randomDataGraph(rng);
    Graph l = testkit::derivedPattern(rng, g, shape);
    if (!blanksOf(l).empty()) continue;
    Graph r = testkit::randomTemplate(rng, l);
    FreshSupply a("o");
    FreshSupply b("o");
    EXPECT_TRUE(isomorphic(oracle::sparqlConstructAnswer(l, r, g, a),
                           oracle::directConstruct(l, r, g, b),
                           FixedSet::I()));
  }
}

TEST(SparqlConstruct, Errors) {
  Graph g = parseData(":a :p :b");
  FreshSupply supply;
  EXPECT_EQ(codeOf([&] {
              oracle::sparqlConstructAnswer(parsePattern("_:x :p ?y"),
                                            parsePattern("?y :q :c"), g, supply);
            }),
            ErrorCode::BlanksInPattern);
  EXPECT_EQ(codeOf([&] {
              oracle::sparqlConstructAnswer(parsePattern("?x :p ?y"),
                                            parsePattern("?z :q :c"), g, supply);
            }),
            ErrorCode::UnboundVariables);
}

TEST(SparqlConstruct, RdfStrictDropsGeneralizedTriples) {
  Graph g = parseData(":a :name \"A\"");
  Graph l = parsePattern("?x :name ?n");
  Graph r = parsePattern("?n :of ?x . ?x :FN ?n");
  FreshSupply supply;
  EXPECT_EQ(oracle::sparqlConstructAnswer(l, r, g, supply).size(), 2u);
  EXPECT_EQ(oracle::sparqlConstructAnswer(l, r, g, supply, true),
            parseData(":a :FN \"A\""));
}

TEST(SparqlSelect, ExampleTable) {
  auto q = std::get<SelectQuery>(parseQuery(testkit::readFixture("select.rq")));
  Graph g = parseData(testkit::readFixture("select.dg"));
  auto table = oracle::sparqlSelectAnswer(q.pattern, q.projection, g);
  EXPECT_EQ(table.header(), (std::vector<std::string>{"nameX", "nameY"}));
  EXPECT_EQ(table.size(), 3u);
  EXPECT_EQ(table.count({Term::literal("Alice"), Term::literal("Bob")}), 2u);
}

TEST(SparqlSelect, BlanksCountTowardsMultiplicity) {
  // Two witnesses for the blank give two rows.
  Graph g = parseData(":a :p :b . :a :p :c");
  auto table = oracle::sparqlSelectAnswer(parsePattern("?x :p _:y"),
                                          {Term::variable("x")}, g);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(codeOf([&] {
              oracle::sparqlSelectAnswer(parsePattern("?x :p _:y"),
                                         {Term::variable("q")}, g);
            }),
            ErrorCode::ProjectionNotInPattern);
}

}  // namespace
}  // namespace poim
