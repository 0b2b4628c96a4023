#ifndef SPLITWISE_SET_SYSTEM_H_
#define SPLITWISE_SET_SYSTEM_H_

#include <iosfwd>
#include <vector>

#include "splitwise/hypothesis_set.h"
#include "splitwise/rational.h"

namespace splitwise {

// Weighted universe 0..U-1 with a family of subsets. Element e weighs
// element_units[e] / denominator. Shared by min-sum set cover and set cover.
struct SetSystem {
  std::vector<Weight> element_units;
  Weight denominator = 1;
  std::vector<HypothesisSet> sets;

  int universe_size() const { return static_cast<int>(element_units.size()); }
  int num_sets() const { return static_cast<int>(sets.size()); }
  Rational weight(int e) const { return MakeRational(element_units[static_cast<std::size_t>(e)], denominator); }
  Weight units(const HypothesisSet& s) const;
  HypothesisSet Universe() const { return HypothesisSet::Full(universe_size()); }
  // Elements no set contains.
  HypothesisSet Uncoverable() const;
};

// Uniform weights 1/|U| over the universe.
SetSystem MakeUniformSetSystem(int universe, std::vector<HypothesisSet> sets);

// Text format:
//   |S| M
//   w_1 ... w_|S|          (decimal or p/q)
//   M lines of 1-based member indices (an empty line is an empty set)
SetSystem ReadSetSystemText(std::istream& in);
void WriteSetSystemText(std::ostream& out, const SetSystem& system);

}  // namespace splitwise

#endif  // SPLITWISE_SET_SYSTEM_H_
