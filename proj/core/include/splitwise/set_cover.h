#ifndef SPLITWISE_SET_COVER_H_
#define SPLITWISE_SET_COVER_H_

#include <vector>

#include "splitwise/set_system.h"

namespace splitwise {

// Picks the set covering the most remaining weight, smallest index on ties,
// until the universe is covered. Throws UncoveredError with the residue.
std::vector<int> WeightedGreedyCover(const SetSystem& system);

// Minimum number of sets covering the universe, scanning subsets by
// increasing size. At most 20 sets; throws BudgetExceededError beyond that.
int OptimalCoverSize(const SetSystem& system);

// (1 + ln(p* / p_min)) * optimal, with p* the heaviest set weight and p_min
// the lightest element weight.
long double GreedyCoverBound(const SetSystem& system, int optimal);

}  // namespace splitwise

#endif  // SPLITWISE_SET_COVER_H_
