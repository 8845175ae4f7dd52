#include "poim/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "poim/error.hpp"

namespace poim::oracle {

namespace {

std::vector<Term> nonFixedInOrder(const Graph& l) {
  std::vector<Term> order;
  std::set<Term> seen;
  for (const auto& [s, p, o] : l) {
    for (const Term* term : {&s, &p, &o}) {
      if (!term->isResource() && seen.insert(*term).second) {
        order.push_back(*term);
      }
    }
  }
  return order;
}

const Term& lookup(const Assignment& assignment, const Term& term) {
  auto it = assignment.find(term);
  return it == assignment.end() ? term : it->second;
}

Triple substitute(const Assignment& assignment, const Triple& t) {
  return {lookup(assignment, t.subject), lookup(assignment, t.predicate),
          lookup(assignment, t.object)};
}

bool sendsInto(const Assignment& assignment, const Graph& l, const Graph& g) {
  return std::all_of(l.begin(), l.end(), [&](const Triple& t) {
    return g.contains(substitute(assignment, t));
  });
}

std::set<Term> unboundIn(const Graph& l, const Graph& r) {
  std::set<Term> bound;
  std::set<Term> unbound;
  for (const auto& [s, p, o] : l) {
    for (const Term* term : {&s, &p, &o}) {
      if (term->isVariable()) bound.insert(*term);
    }
  }
  for (const auto& [s, p, o] : r) {
    for (const Term* term : {&s, &p, &o}) {
      if (term->isVariable() && !bound.contains(*term)) unbound.insert(*term);
    }
  }
  return unbound;
}

// Fresh blanks that also avoid every blank label of `g`.
class OracleBlanks {
 public:
  OracleBlanks(FreshSupply& supply, const Graph& g) : supply_(supply) {
    for (const auto& [s, p, o] : g) {
      for (const Term* term : {&s, &p, &o}) {
        if (term->isBlank()) taken_.insert(*term);
      }
    }
  }

  Term next() {
    Term blank = supply_.nextBlank();
    while (taken_.contains(blank)) blank = supply_.nextBlank();
    taken_.insert(blank);
    return blank;
  }

 private:
  FreshSupply& supply_;
  std::set<Term> taken_;
};

// H_i: variables through the assignment, blanks through fresh ones.
Graph instantiate(const Graph& r, const Assignment& assignment,
                  OracleBlanks& blanks) {
  // Blanks of R are unrelated to blanks of L that share their name.
  Assignment renaming;
  for (const auto& [s, p, o] : r) {
    for (const Term* term : {&s, &p, &o}) {
      if (term->isBlank() && !renaming.contains(*term)) {
        renaming.emplace(*term, blanks.next());
      }
    }
  }
  Graph result;
  for (const auto& [s, p, o] : r) {
    auto image = [&](const Term& term) -> Term {
      if (term.isBlank()) return renaming.at(term);
      if (term.isVariable()) return assignment.at(term);
      return term;
    };
    result.insert({image(s), image(p), image(o)});
  }
  return result;
}

}  // namespace

std::set<Assignment> bruteForceMatches(const Graph& l, const Graph& g,
                                       std::size_t limit) {
  const auto sources = nonFixedInOrder(l);
  if (sources.size() > limit) {
    throw Error(ErrorCode::TooLarge,
                "pattern has " + std::to_string(sources.size()) +
                    " non-fixed attributes; brute force is capped at " +
                    std::to_string(limit));
  }
  std::set<Term> targetSet;
  for (const auto& [s, p, o] : g) {
    for (const Term* term : {&s, &p, &o}) {
      if (!term->isVariable()) targetSet.insert(*term);
    }
  }
  const std::vector<Term> targets(targetSet.begin(), targetSet.end());

  std::set<Assignment> result;
  if (!sources.empty() && targets.empty()) return result;
  // Odometer over targets^sources.
  std::vector<std::size_t> digits(sources.size(), 0);
  while (true) {
    Assignment candidate;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      candidate.emplace(sources[i], targets[digits[i]]);
    }
    if (sendsInto(candidate, l, g)) result.insert(std::move(candidate));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == targets.size()) {
      digits[i++] = 0;
    }
    if (i == digits.size()) break;
  }
  return result;
}

std::set<Assignment> solutionMappings(const Graph& l, const Graph& g) {
  const auto order = nonFixedInOrder(l);
  std::map<Term, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  // Candidate domain of each attribute: values found at the same position
  // of data triples that agree with the pattern triple on its resources.
  std::map<Term, std::set<Term>> domain;
  std::set<Term> constrained;
  for (const auto& t : l) {
    const Term* pattern[3] = {&t.subject, &t.predicate, &t.object};
    for (int pos = 0; pos < 3; ++pos) {
      if (pattern[pos]->isResource()) continue;
      std::set<Term> values;
      for (const auto& d : g) {
        const Term* data[3] = {&d.subject, &d.predicate, &d.object};
        bool agrees = true;
        for (int q = 0; q < 3; ++q) {
          if (pattern[q]->isResource() && *pattern[q] != *data[q]) agrees = false;
        }
        if (agrees) values.insert(*data[pos]);
      }
      const Term& term = *pattern[pos];
      if (constrained.insert(term).second) {
        domain[term] = std::move(values);
      } else {
        std::set<Term> both;
        std::set_intersection(domain[term].begin(), domain[term].end(),
                              values.begin(), values.end(),
                              std::inserter(both, both.begin()));
        domain[term] = std::move(both);
      }
    }
  }

  // Pattern triples grouped by the step after which they are fully assigned.
  std::vector<std::vector<const Triple*>> checkAt(order.size() + 1);
  for (const auto& t : l) {
    std::size_t last = 0;
    for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
      if (!term->isResource()) last = std::max(last, position[*term] + 1);
    }
    checkAt[last].push_back(&t);
  }

  std::set<Assignment> result;
  Assignment current;
  auto holds = [&](std::size_t step) {
    return std::all_of(checkAt[step].begin(), checkAt[step].end(),
                       [&](const Triple* t) {
                         return g.contains(substitute(current, *t));
                       });
  };
  auto assign = [&](auto&& self, std::size_t step) -> void {
    if (step == order.size()) {
      result.insert(current);
      return;
    }
    const Term& term = order[step];
    for (const auto& value : domain[term]) {
      current.insert_or_assign(term, value);
      if (holds(step + 1)) self(self, step + 1);
    }
    current.erase(term);
  };
  if (holds(0)) assign(assign, 0);
  return result;
}

Graph directConstruct(const Graph& l, const Graph& r, const Graph& g,
                      FreshSupply& supply, UnboundPolicy policy) {
  auto unbound = unboundIn(l, r);
  Graph templ;
  for (const auto& t : r) {
    bool mentions = unbound.contains(t.subject) ||
                    unbound.contains(t.predicate) ||
                    unbound.contains(t.object);
    if (mentions && policy == UnboundPolicy::Strict) {
      throw Error(ErrorCode::UnboundVariables,
                  "template variable not bound by the pattern");
    }
    if (!mentions) templ.insert(t);
  }
  OracleBlanks blanks(supply, g);
  Graph result;
  for (const auto& assignment : solutionMappings(l, g)) {
    result.insertAll(instantiate(templ, assignment, blanks));
  }
  return result;
}

Graph sparqlConstructAnswer(const Graph& l, const Graph& r, const Graph& g,
                            FreshSupply& supply, bool rdfStrict) {
  for (const auto& [s, p, o] : l) {
    if (s.isBlank() || p.isBlank() || o.isBlank()) {
      throw Error(ErrorCode::BlanksInPattern,
                  "solution-mapping semantics needs a blank-free pattern");
    }
  }
  if (!unboundIn(l, r).empty()) {
    throw Error(ErrorCode::UnboundVariables,
                "template variable not bound by the pattern");
  }
  OracleBlanks blanks(supply, g);
  Graph answer;
  for (const auto& mu : solutionMappings(l, g)) {
    Assignment relabel;  // f_μ
    for (const auto& [s, p, o] : r) {
      for (const Term* term : {&s, &p, &o}) {
        if (term->isBlank() && !relabel.contains(*term)) {
          relabel.emplace(*term, blanks.next());
        }
      }
    }
    for (const auto& t : r) {
      Triple image = substitute(mu, substitute(relabel, t));
      bool rdf = (image.subject.isIri() || image.subject.isBlank()) &&
                 image.predicate.isIri();
      if (!rdfStrict || rdf) answer.insert(std::move(image));
    }
  }
  return answer;
}

Multirelation sparqlSelectAnswer(const Graph& l,
                                 const std::vector<Term>& projection,
                                 const Graph& g) {
  std::set<Term> vars;
  Assignment asVariables;
  for (const auto& [s, p, o] : l) {
    for (const Term* term : {&s, &p, &o}) {
      if (term->isVariable()) vars.insert(*term);
      // ':' never occurs in parsed variable names, so these cannot clash.
      if (term->isBlank()) {
        asVariables.emplace(*term, Term::variable("blank:" + term->label()));
      }
    }
  }
  for (const auto& var : projection) {
    if (!vars.contains(var)) {
      throw Error(ErrorCode::ProjectionNotInPattern,
                  "projected variable " + var.toString() +
                      " does not occur in the pattern");
    }
  }
  Graph pattern;
  for (const auto& t : l) pattern.insert(substitute(asVariables, t));

  std::vector<std::string> header;
  for (const auto& var : projection) header.push_back(var.label());
  std::vector<Multirelation::Row> rows;
  for (const auto& mu : solutionMappings(pattern, g)) {
    Multirelation::Row row;
    for (const auto& var : projection) row.push_back(mu.at(var));
    rows.push_back(std::move(row));
  }
  return Multirelation(std::move(header), std::move(rows));
}

}  // namespace poim::oracle
