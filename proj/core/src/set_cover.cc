#include "splitwise/set_cover.h"

#include <algorithm>
#include <cmath>

#include "splitwise/errors.h"
#include "splitwise/mssc.h"

namespace splitwise {

std::vector<int> WeightedGreedyCover(const SetSystem& system) {
  std::vector<int> picks;
  HypothesisSet uncovered = system.Universe();
  while (!uncovered.empty()) {
    int best = -1;
    Weight best_units = -1;
    for (int j = 0; j < system.num_sets(); ++j) {
      const HypothesisSet gain = system.sets[static_cast<std::size_t>(j)] & uncovered;
      if (gain.empty()) continue;
      const Weight units = system.units(gain);
      if (units > best_units) {
        best = j;
        best_units = units;
      }
    }
    if (best < 0) {
      throw UncoveredError("universe cannot be covered; element " + std::to_string(uncovered.front() + 1) +
                               " is in no set",
                           uncovered);
    }
    picks.push_back(best);
    uncovered -= system.sets[static_cast<std::size_t>(best)];
  }
  return picks;
}

int OptimalCoverSize(const SetSystem& system) {
  const int m = system.num_sets();
  if (m > 20) throw BudgetExceededError("cover enumeration is limited to 20 sets", {});
  if (system.universe_size() == 0) return 0;
  if (!system.Uncoverable().empty()) {
    throw UncoveredError("universe cannot be covered", system.Uncoverable());
  }
  const HypothesisSet universe = system.Universe();
  for (int size = 1; size <= m; ++size) {
    // Lexicographic walk over size-combinations.
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      HypothesisSet covered(system.universe_size());
      for (int j : pick) covered |= system.sets[static_cast<std::size_t>(j)];
      if (covered == universe) return size;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int t = i + 1; t < size; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return m;
}

long double GreedyCoverBound(const SetSystem& system, int optimal) {
  Weight heaviest = 0;
  for (const HypothesisSet& s : system.sets) heaviest = std::max(heaviest, system.units(s));
  Weight lightest = 0;
  bool any = false;
  for (Weight w : system.element_units) {
    if (!any || w < lightest) lightest = w;
    any = true;
  }
  if (!any) return 0;
  if (lightest <= 0) throw Error("cover bound needs positive element weights");
  return (1.0L + std::log(static_cast<long double>(heaviest) / static_cast<long double>(lightest))) *
         static_cast<long double>(optimal);
}

}  // namespace splitwise
