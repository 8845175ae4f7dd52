#include "poim/matcher.hpp"

#include <algorithm>
#include <memory>

#include "poim/error.hpp"

namespace poim {

namespace {

class JoinSearch {
 public:
  JoinSearch(std::shared_ptr<const Graph> pattern,
             std::shared_ptr<const Graph> data)
      : pattern_(std::move(pattern)), data_(std::move(data)) {
    std::vector<std::pair<std::size_t, const Triple*>> ranked;
    for (const auto& triple : *pattern_) {
      ranked.emplace_back(staticCandidates(triple), &triple);
    }
    // Canonical order breaks ties because `ranked` starts in that order.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [count, triple] : ranked) order_.push_back(triple);
    for (const auto& term : attributes(*pattern_)) {
      if (term.isResource()) resources_.push_back(term);
    }
  }

  std::vector<Match> run() {
    extend(0);
    return std::move(matches_);
  }

 private:
  std::size_t staticCandidates(const Triple& pattern) const {
    return std::count_if(data_->begin(), data_->end(), [&](const Triple& t) {
      return (!pattern.subject.isResource() || pattern.subject == t.subject) &&
             (!pattern.predicate.isResource() ||
              pattern.predicate == t.predicate) &&
             (!pattern.object.isResource() || pattern.object == t.object);
    });
  }

  // Binds `term` to `value` if compatible; records new bindings in `added`.
  bool unify(const Term& term, const Term& value, std::vector<Term>& added) {
    if (term.isResource()) return term == value;
    auto [it, isNew] = binding_.try_emplace(term, value);
    if (isNew) {
      added.push_back(term);
      return true;
    }
    return it->second == value;
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      emit();
      return;
    }
    const Triple& pattern = *order_[depth];
    for (const auto& candidate : *data_) {
      std::vector<Term> added;
      if (unify(pattern.subject, candidate.subject, added) &&
          unify(pattern.predicate, candidate.predicate, added) &&
          unify(pattern.object, candidate.object, added)) {
        extend(depth + 1);
      }
      for (const auto& term : added) binding_.erase(term);
    }
  }

  void emit() {
    AttributeMap map = binding_;
    for (const auto& term : resources_) map.emplace(term, term);
    matches_.push_back(
        checkMorphism(std::move(map), pattern_, data_, FixedSet::I()));
  }

  std::shared_ptr<const Graph> pattern_;
  std::shared_ptr<const Graph> data_;
  std::vector<const Triple*> order_;
  std::vector<Term> resources_;
  AttributeMap binding_;
  std::vector<Match> matches_;
};

}  // namespace

std::vector<Match> enumerateMatches(const Graph& l, const Graph& g) {
  if (hasVariables(g)) {
    throw Error(ErrorCode::CodomainHasVariables,
                "matches must target a data graph");
  }
  return JoinSearch(std::make_shared<const Graph>(l),
                    std::make_shared<const Graph>(g))
      .run();
}

Graph matchImage(const Match& m) { return m.image(); }

}  // namespace poim
