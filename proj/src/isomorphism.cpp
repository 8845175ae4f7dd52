#include "poim/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

namespace poim {

namespace {

using Colour = int;
using Colouring = std::map<Term, Colour>;

// Joint colour refinement over both graphs, so equal colours are comparable
// across them. Fixed attributes get a colour of their own; non-fixed ones
// start from their (subject, predicate, object) incidence counts.
class Refiner {
 public:
  Refiner(const Graph& g1, const Graph& g2, const FixedSet& fixed)
      : graphs_{&g1, &g2}, fixed_(fixed) {}

  // Returns false as soon as the colour histograms of the two graphs differ.
  bool run() {
    std::map<std::vector<long long>, Colour> palette;
    std::map<Term, Colour> fixedIds;
    for (int side = 0; side < 2; ++side) {
      std::map<Term, std::array<long long, 3>> degree;
      for (const auto& [s, p, o] : *graphs_[side]) {
        ++degree[s][0];
        ++degree[p][1];
        ++degree[o][2];
      }
      for (const auto& [term, counts] : degree) {
        std::vector<long long> sig;
        if (fixed_.contains(term)) {
          auto [it, isNew] =
              fixedIds.try_emplace(term, static_cast<Colour>(fixedIds.size()));
          sig = {1, it->second};
        } else {
          sig = {0, counts[0], counts[1], counts[2]};
        }
        auto [it, isNew] =
            palette.try_emplace(sig, static_cast<Colour>(palette.size()));
        colours_[side][term] = it->second;
      }
    }
    if (!balanced()) return false;

    std::size_t classes = palette.size();
    while (true) {
      std::map<std::vector<long long>, Colour> next;
      Colouring refined[2];
      for (int side = 0; side < 2; ++side) {
        std::map<Term, std::vector<std::vector<long long>>> incident;
        const auto& colour = colours_[side];
        for (const auto& [s, p, o] : *graphs_[side]) {
          std::vector<long long> shape = {colour.at(s), colour.at(p),
                                          colour.at(o)};
          auto note = [&](const Term& term, long long mask) {
            auto entry = shape;
            entry.push_back(mask);
            incident[term].push_back(std::move(entry));
          };
          long long sMask = 1 | (s == p ? 2 : 0) | (s == o ? 4 : 0);
          note(s, sMask);
          if (p != s) note(p, 2 | (p == o ? 4 : 0));
          if (o != s && o != p) note(o, 4);
        }
        for (auto& [term, entries] : incident) {
          std::sort(entries.begin(), entries.end());
          std::vector<long long> sig = {colour.at(term)};
          for (const auto& e : entries) sig.insert(sig.end(), e.begin(), e.end());
          auto [it, isNew] =
              next.try_emplace(sig, static_cast<Colour>(next.size()));
          refined[side][term] = it->second;
        }
      }
      colours_[0] = std::move(refined[0]);
      colours_[1] = std::move(refined[1]);
      if (!balanced()) return false;
      if (next.size() == classes) return true;
      classes = next.size();
    }
  }

  const Colouring& colours(int side) const { return colours_[side]; }

 private:
  bool balanced() const {
    std::map<Colour, long long> histogram;
    for (const auto& [term, c] : colours_[0]) ++histogram[c];
    for (const auto& [term, c] : colours_[1]) --histogram[c];
    return std::all_of(histogram.begin(), histogram.end(),
                       [](const auto& entry) { return entry.second == 0; });
  }

  const Graph* graphs_[2];
  const FixedSet& fixed_;
  Colouring colours_[2];
};

class Search {
 public:
  Search(const Graph& g1, const Graph& g2, const FixedSet& fixed,
         const Refiner& refiner)
      : g1_(g1), g2_(g2), fixed_(fixed), refiner_(refiner) {
    for (const auto& triple : g1_) {
      incident_[triple.subject].push_back(&triple);
      if (triple.predicate != triple.subject) {
        incident_[triple.predicate].push_back(&triple);
      }
      if (triple.object != triple.subject &&
          triple.object != triple.predicate) {
        incident_[triple.object].push_back(&triple);
      }
    }
    std::map<Colour, int> classSize;
    for (const auto& [term, colour] : refiner_.colours(1)) {
      if (!fixed_.contains(term)) {
        ++classSize[colour];
        candidates_[colour].push_back(term);
      }
    }
    for (const auto& [term, colour] : refiner_.colours(0)) {
      if (fixed_.contains(term)) {
        map_.emplace(term, term);
      } else {
        order_.push_back(term);
      }
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](const Term& a, const Term& b) {
                       auto ka = classSize[refiner_.colours(0).at(a)];
                       auto kb = classSize[refiner_.colours(0).at(b)];
                       if (ka != kb) return ka < kb;
                       return incident_[a].size() > incident_[b].size();
                     });
  }

  bool run() {
    for (const auto& triple : g1_) {
      if (fixed_.contains(triple.subject) && fixed_.contains(triple.predicate) &&
          fixed_.contains(triple.object) && !g2_.contains(triple)) {
        return false;
      }
    }
    return assign(0);
  }
  AttributeMap takeMap() { return std::move(map_); }

 private:
  bool assign(std::size_t index) {
    if (index == order_.size()) return true;
    const Term& term = order_[index];
    for (const Term& candidate : candidates_[refiner_.colours(0).at(term)]) {
      if (used_.contains(candidate)) continue;
      map_.insert_or_assign(term, candidate);
      used_.insert(candidate);
      if (consistent(term) && assign(index + 1)) return true;
      used_.erase(candidate);
      map_.erase(term);
    }
    return false;
  }

  // Triples around `term` whose attributes are all decided must map into g2.
  bool consistent(const Term& term) const {
    for (const Triple* triple : incident_.at(term)) {
      auto s = map_.find(triple->subject);
      auto p = map_.find(triple->predicate);
      auto o = map_.find(triple->object);
      if (s == map_.end() || p == map_.end() || o == map_.end()) continue;
      if (!g2_.contains({s->second, p->second, o->second})) return false;
    }
    return true;
  }

  const Graph& g1_;
  const Graph& g2_;
  const FixedSet& fixed_;
  const Refiner& refiner_;
  std::map<Term, std::vector<const Triple*>> incident_;
  std::map<Colour, std::vector<Term>> candidates_;
  std::vector<Term> order_;
  AttributeMap map_;
  std::set<Term> used_;
};

}  // namespace

std::optional<Morphism> findIsomorphism(const Graph& g1, const Graph& g2,
                                        const FixedSet& fixed) {
  if (g1.size() != g2.size()) return std::nullopt;
  Refiner refiner(g1, g2, fixed);
  if (!refiner.run()) return std::nullopt;
  Search search(g1, g2, fixed, refiner);
  if (!search.run()) return std::nullopt;
  return checkMorphism(search.takeMap(), g1, g2, fixed);
}

RenamedGraph renameBlanks(const Graph& graph, FreshSupply& supply) {
  RenamedGraph result;
  for (const auto& blank : blanksOf(graph)) {
    result.renaming.emplace(blank, supply.nextBlank());
  }
  result.graph = applyMap(result.renaming, graph);
  return result;
}

}  // namespace poim
