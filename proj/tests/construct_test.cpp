#include <gtest/gtest.h>

#include "poim/construct.hpp"
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

ConstructRule fixtureRule(const std::string& name, FreshSupply& supply) {
  auto q = std::get<ConstructQuery>(parseQuery(testkit::readFixture(name)));
  return makeRule(q.pattern, q.templ, supply);
}

Graph data(const std::string& name) {
  return parseData(testkit::readFixture(name));
}

TEST(Rule, CombinesPatternAndTemplate) {
  FreshSupply supply;
  auto rule = fixtureRule("acquainted.rq", supply);
  EXPECT_EQ(rule.pattern().size(), 2u);
  EXPECT_EQ(rule.templ().size(), 1u);
  EXPECT_EQ(rule.combined().size(), 3u);
  EXPECT_TRUE(rule.pattern().isSubgraphOf(rule.combined()));
  EXPECT_TRUE(rule.templ().isSubgraphOf(rule.combined()));
}

TEST(Rule, TemplateBlanksAreFreshened) {
  // The same label on both sides names two different blanks.
  FreshSupply supply;
  auto rule = fixtureRule("fn_blank_subject.rq", supply);
  EXPECT_EQ(blanksOf(rule.pattern()), std::set<Term>{Term::blank("x")});
  EXPECT_EQ(blanksOf(rule.templ()), std::set<Term>{Term::blank("fresh1")});
  EXPECT_EQ(rule.combined().size(), 2u);
}

TEST(Rule, Errors) {
  FreshSupply supply;
  Graph l = parsePattern("?x :name ?n");
  EXPECT_EQ(codeOf([&] { makeRule(l, parsePattern("?y :FN ?n"), supply); }),
            ErrorCode::UnboundVariables);
  EXPECT_EQ(codeOf([&] {
              ConstructRule::fromDisjoint(parsePattern("_:b :p ?n"),
                                          parsePattern("_:b :q ?n"));
            }),
            ErrorCode::InvalidInclusion);
  auto dropped = makeRule(l, parsePattern("?x :FN ?n . ?y :FN ?n"), supply,
                          UnboundPolicy::DropTriples);
  EXPECT_EQ(dropped.templ(), parsePattern("?x :FN ?n"));
}

TEST(Poim, OneMatchVariableForm) {
  FreshSupply supply;
  auto rule = fixtureRule("fn.rq", supply);
  Graph g = data("fn_single.dg");
  auto matches = enumerateMatches(rule.pattern(), g);
  ASSERT_EQ(matches.size(), 1u);
  auto result = poimApply(rule, matches.front(), supply);
  EXPECT_EQ(result.d, unionOf(g, parseData(":alice :FN \"Alice\"")));
  EXPECT_EQ(result.h, parseData(":alice :FN \"Alice\""));
  EXPECT_EQ(result.p(Term::variable("x")), Term::iri(":alice"));
}

TEST(Poim, OneMatchBlankForm) {
  FreshSupply supply;
  auto rule = fixtureRule("fn_blank_subject.rq", supply);
  Graph g = data("fn_single.dg");
  auto result = poimApply(rule, enumerateMatches(rule.pattern(), g).front(),
                          supply);
  ASSERT_EQ(result.h.size(), 1u);
  const Triple& t = *result.h.begin();
  EXPECT_TRUE(t.subject.isBlank());
  EXPECT_FALSE(blanksOf(g).contains(t.subject));
  EXPECT_EQ(result.d.size(), 3u);
}

TEST(KFold, CopiesAreDisjointOutsideI) {
  FreshSupply supply;
  auto rule = fixtureRule("fn_blank.rq", supply);
  auto folded = kFoldRule(rule, 3, supply);
  ASSERT_EQ(folded.copies.size(), 3u);
  EXPECT_EQ(folded.rule.pattern().size(), 3u);
  EXPECT_EQ(folded.rule.templ().size(), 3u);
  EXPECT_EQ(variablesOf(folded.rule.pattern()).size(), 6u);
  EXPECT_EQ(blanksOf(folded.rule.templ()).size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(applyMap(folded.copies[i], rule.combined()).size(),
              rule.combined().size());
  }
  auto empty = kFoldRule(rule, 0, supply);
  EXPECT_TRUE(empty.rule.combined().empty());
}

TEST(Calculi, TwoMatchExamples) {
  for (auto calculus : {Calculus::High, Calculus::Low}) {
    FreshSupply supply;
    Graph g = data("fn_two.dg");
    EXPECT_EQ(constructEval(fixtureRule("fn.rq", supply), g, supply,
                            {calculus, false}),
              parseData(":alice :FN \"Alice\" . :bob :FN \"Bob\""));
    Graph h = constructEval(fixtureRule("fn_blank.rq", supply), g, supply,
                            {calculus, false});
    EXPECT_TRUE(isomorphic(h, parseData("_:c1 :FN \"Alice\" . _:c2 :FN \"Bob\""),
                           FixedSet::I()));
    EXPECT_EQ(serializeGraph(h, true), "_:b1 :FN \"Alice\" .\n_:b2 :FN \"Bob\"");
  }
}

TEST(Calculi, LowKeepsDataBlanks) {
  FreshSupply supply;
  auto rule = fixtureRule("acquainted.rq", supply);
  Graph h = constructLow(rule, data("acquainted.dg"), supply);
  EXPECT_EQ(h, parseData(":alice :acquaintedWith _:c . _:c :acquaintedWith :bob ."
                         ":bob :acquaintedWith :alice"));
}

TEST(Calculi, EmptyInputs) {
  FreshSupply supply;
  auto rule = fixtureRule("acquainted.rq", supply);
  EXPECT_TRUE(constructHigh(rule, Graph(), supply).empty());
  EXPECT_TRUE(constructLow(rule, Graph(), supply).empty());
  auto trivial = makeRule(Graph(), parsePattern(":a :p _:b"), supply);
  // One (empty) match: one copy of the template.
  EXPECT_EQ(constructLow(trivial, data("fn_single.dg"), supply).size(), 1u);
  EXPECT_EQ(constructHigh(trivial, Graph(), supply).size(), 1u);
}

TEST(Calculi, RdfStrict) {
  FreshSupply supply;
  auto rule = makeRule(parsePattern("?x :name ?n"),
                       parsePattern("?n :nameOf ?x"), supply);
  Graph g = data("fn_single.dg");
  EXPECT_EQ(constructEval(rule, g, supply).size(), 1u);
  EXPECT_EQ(codeOf([&] { constructEval(rule, g, supply, {Calculus::Low, true}); }),
            ErrorCode::NotRdfGraph);
}

TEST(Calculi, AgreeWithDirectDefinition) {
  testkit::Rng rng(2718);
  std::size_t matches = 0;
  for (int round = 0; round < 150; ++round) {
    auto inst = testkit::randomConstructInstance(rng, 64);
    FreshSupply supply;
    auto rule = makeRule(inst.pattern, inst.templ, supply);
    matches += enumerateMatches(inst.pattern, inst.data).size();
    Graph high = constructHigh(rule, inst.data, supply);
    Graph low = constructLow(rule, inst.data, supply);
    FreshSupply oracleSupply("o");
    Graph ref = oracle::directConstruct(inst.pattern, inst.templ, inst.data,
                                        oracleSupply);
    EXPECT_TRUE(isomorphic(high, ref, FixedSet::I()))
        << "L: " << serializeGraph(inst.pattern)
        << "\nR: " << serializeGraph(inst.templ);
    EXPECT_TRUE(isomorphic(low, ref, FixedSet::I()));
  }
  EXPECT_GT(matches, 200u);
}

TEST(Calculi, DropUnboundMatchesOracle) {
  FreshSupply supply;
  Graph l = parsePattern("?x :knows ?y");
  Graph r = parsePattern("?x :met ?y . ?y :met ?z . _:e :about ?x");
  Graph g = data("intro.dg");
  auto rule = makeRule(l, r, supply, UnboundPolicy::DropTriples);
  FreshSupply oracleSupply("o");
  EXPECT_TRUE(isomorphic(
      constructLow(rule, g, supply),
      oracle::directConstruct(l, r, g, oracleSupply, UnboundPolicy::DropTriples),
      FixedSet::I()));
}

}  // namespace
}  // namespace poim
