#include "poim/construct.hpp"

#include <algorithm>
#include <memory>

#include "poim/colimit.hpp"
#include "poim/error.hpp"
#include "poim/isomorphism.hpp"

namespace poim {

namespace {

bool mentionsAny(const Triple& triple, const std::set<Term>& terms) {
  return terms.contains(triple.subject) || terms.contains(triple.predicate) ||
         terms.contains(triple.object);
}

std::string joinTerms(const std::set<Term>& terms) {
  std::string out;
  for (const auto& term : terms) {
    if (!out.empty()) out += ", ";
    out += term.toString();
  }
  return out;
}

std::set<Term> unboundVariables(const Graph& l, const Graph& r) {
  std::set<Term> result;
  auto bound = variablesOf(l);
  for (const auto& var : variablesOf(r)) {
    if (!bound.contains(var)) result.insert(var);
  }
  return result;
}

}  // namespace

ConstructRule ConstructRule::fromDisjoint(Graph pattern, Graph templ) {
  if (auto unbound = unboundVariables(pattern, templ); !unbound.empty()) {
    throw Error(ErrorCode::UnboundVariables,
                "template variables not bound by the pattern: " +
                    joinTerms(unbound));
  }
  auto patternBlanks = blanksOf(pattern);
  for (const auto& blank : blanksOf(templ)) {
    if (patternBlanks.contains(blank)) {
      throw Error(ErrorCode::InvalidInclusion,
                  "pattern and template share blank " + blank.toString());
    }
  }
  Graph combined = unionOf(pattern, templ);
  return ConstructRule(std::move(pattern), std::move(templ),
                       std::move(combined));
}

ConstructRule makeRule(const Graph& l, const Graph& r, FreshSupply& supply,
                       UnboundPolicy policy) {
  Graph templ = r;
  if (policy == UnboundPolicy::DropTriples) {
    auto unbound = unboundVariables(l, r);
    templ = Graph();
    for (const auto& triple : r) {
      if (!mentionsAny(triple, unbound)) templ.insert(triple);
    }
  }
  return ConstructRule::fromDisjoint(l, renameBlanks(templ, supply).graph);
}

PoimResult poimApply(const ConstructRule& rule, const Match& m,
                     FreshSupply& supply) {
  const auto fixed = FixedSet::I();
  auto po = pushout(rule.pattern(), rule.combined(), m, fixed, supply);
  auto im = imageFactorization(rule.templ(), po.n);
  return PoimResult{std::move(im.h), std::move(im.p), std::move(po.d)};
}

KFoldRule kFoldRule(const ConstructRule& rule, std::size_t k,
                    FreshSupply& supply) {
  std::vector<Graph> parts(k, rule.combined());
  auto copies = coproduct(parts, FixedSet::I(), supply);
  Graph pattern;
  Graph templ;
  std::vector<AttributeMap> renamings;
  renamings.reserve(k);
  for (const auto& injection : copies.injections) {
    pattern.insertAll(applyMap(injection.map(), rule.pattern()));
    templ.insertAll(applyMap(injection.map(), rule.templ()));
    renamings.push_back(injection.map());
  }
  return KFoldRule{
      ConstructRule::fromDisjoint(std::move(pattern), std::move(templ)),
      std::move(renamings)};
}

Graph constructHigh(const ConstructRule& rule, const Graph& g,
                    FreshSupply& supply) {
  auto matches = enumerateMatches(rule.pattern(), g);
  if (matches.empty()) return {};
  auto folded = kFoldRule(rule, matches.size(), supply);
  AttributeMap combined;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    for (const auto& [term, image] : matches[i].map()) {
      combined.emplace(folded.copies[i].at(term), image);
    }
  }
  Match m = checkMorphism(std::move(combined),
                          std::make_shared<const Graph>(folded.rule.pattern()),
                          matches.front().sharedCodomain(), FixedSet::I());
  return poimApply(folded.rule, m, supply).h;
}

Graph constructLow(const ConstructRule& rule, const Graph& g,
                   FreshSupply& supply) {
  auto matches = enumerateMatches(rule.pattern(), g);
  std::vector<Graph> local;
  local.reserve(matches.size());
  for (const auto& match : matches) {
    Match restricted = checkMorphism(match.map(), match.sharedDomain(),
                                     std::make_shared<const Graph>(matchImage(match)),
                                     FixedSet::I());
    local.push_back(poimApply(rule, restricted, supply).h);
  }
  return coproduct(local, FixedSet::IBOf(g), supply).graph;
}

Graph constructEval(const ConstructRule& rule, const Graph& g,
                    FreshSupply& supply, const ConstructOptions& options) {
  Graph result = options.calculus == Calculus::High
                     ? constructHigh(rule, g, supply)
                     : constructLow(rule, g, supply);
  if (options.rdfStrict && !isRdfGraph(result)) {
    throw Error(ErrorCode::NotRdfGraph,
                "construct result is not an RDF graph");
  }
  return result;
}

}  // namespace poim
