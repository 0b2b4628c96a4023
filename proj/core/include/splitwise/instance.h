#ifndef SPLITWISE_INSTANCE_H_
#define SPLITWISE_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitwise/hypothesis_set.h"
#include "splitwise/rational.h"

namespace splitwise {

// Answers are stored 0-based (0..K-1); text formats use 1..K.
using Answer = std::uint16_t;

// A decision-tree instance: n weighted hypotheses and m tests with K answers.
// Weight h is units(h) / total_units(), so weights always normalize exactly.
// Only the shape is enforced here; pairwise validity is reported by
// ValidateInstance so that generators may build invalid intermediates.
class Instance {
 public:
  // Empty instance with no hypotheses; a placeholder until assigned.
  Instance() = default;
  Instance(std::vector<Weight> weight_units, int num_answers,
           std::vector<std::vector<Answer>> tests);

  // Weights given as rationals. They are scaled to a common denominator;
  // their declared sum is kept so validation can flag sums far from 1.
  static Instance FromRationalWeights(const std::vector<Rational>& weights,
                                      int num_answers,
                                      std::vector<std::vector<Answer>> tests);

  int num_hypotheses() const { return static_cast<int>(units_.size()); }
  int num_tests() const { return static_cast<int>(tests_.size()); }
  int num_answers() const { return num_answers_; }

  Weight units(int h) const { return units_[static_cast<std::size_t>(h)]; }
  Weight units(const HypothesisSet& set) const;
  Weight total_units() const { return total_units_; }
  const std::vector<Weight>& weight_units() const { return units_; }

  Rational weight(int h) const { return ToProbability(units(h)); }
  Rational weight(const HypothesisSet& set) const { return ToProbability(units(set)); }
  Rational ToProbability(Weight units) const { return MakeRational(units, total_units_); }

  Answer answer(int test, int h) const {
    return tests_[static_cast<std::size_t>(test)][static_cast<std::size_t>(h)];
  }
  const std::vector<Answer>& test(int j) const { return tests_.at(static_cast<std::size_t>(j)); }
  const std::vector<std::vector<Answer>>& tests() const { return tests_; }

  const Rational& declared_weight_sum() const { return declared_sum_; }

  HypothesisSet AllHypotheses() const { return HypothesisSet::Full(num_hypotheses()); }
  bool IsUniform() const;
  Weight min_units() const;
  Weight max_units() const;
  // p_max / p_min; requires every weight positive.
  Rational WeightRatio() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.units_ == b.units_ && a.num_answers_ == b.num_answers_ && a.tests_ == b.tests_;
  }

 private:
  std::vector<Weight> units_;
  Weight total_units_ = 1;
  int num_answers_ = 0;
  std::vector<std::vector<Answer>> tests_;
  Rational declared_sum_ = 1;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
  // First undistinguished pair in index order, 0-based.
  std::optional<std::pair<int, int>> undistinguished_pair;
};

ValidationReport ValidateInstance(const Instance& inst);

// Two hypotheses of `set` that no test separates, if any (0-based, ordered).
std::optional<std::pair<int, int>> FindUndistinguishedPair(const Instance& inst,
                                                           const HypothesisSet& set);

// The instance induced by H: a view that keeps original indices and
// unnormalized weights together with the normalizer p(H).
class InducedInstance {
 public:
  InducedInstance(const Instance& base, HypothesisSet members);

  const Instance& base() const { return *base_; }
  const HypothesisSet& members() const { return members_; }
  int num_hypotheses() const { return static_cast<int>(index_.size()); }
  int num_tests() const { return base_->num_tests(); }
  int original_index(int i) const { return index_.at(static_cast<std::size_t>(i)); }
  Answer answer(int test, int i) const { return base_->answer(test, original_index(i)); }

  // Unnormalized weight p_h of the i-th member.
  Rational weight(int i) const { return base_->weight(original_index(i)); }
  Rational normalizer() const { return base_->weight(members_); }

  // Reindexed copy with weights p_h / p(H).
  Instance Materialize() const;

 private:
  const Instance* base_;
  HypothesisSet members_;
  std::vector<int> index_;
};

InducedInstance Restrict(const Instance& inst, const HypothesisSet& members);

// w'_i = max(p_i, 1/(n-1)^2), renormalized.
Instance RoundWeights(const Instance& inst);

}  // namespace splitwise

#endif  // SPLITWISE_INSTANCE_H_
