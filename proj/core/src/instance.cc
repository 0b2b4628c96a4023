#include "splitwise/instance.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "splitwise/errors.h"

namespace splitwise {
namespace {

// Depth sums reach total_units * n; keep well clear of int64 overflow.
constexpr long double kUnitHeadroom = 4.0e18L;

}  // namespace

Instance::Instance(std::vector<Weight> weight_units, int num_answers,
                   std::vector<std::vector<Answer>> tests)
    : units_(std::move(weight_units)), num_answers_(num_answers), tests_(std::move(tests)) {
  if (num_answers_ < 1 || num_answers_ > std::numeric_limits<Answer>::max()) {
    throw InvalidInstanceError("branching factor out of range");
  }
  const std::size_t n = units_.size();
  long double total = 0;
  for (Weight w : units_) {
    if (w < 0) throw InvalidInstanceError("negative weight");
    total += static_cast<long double>(w);
  }
  const long double n_plus = static_cast<long double>(n) + 1;
  if (total * n_plus > kUnitHeadroom) {
    throw InvalidInstanceError("weights too fine-grained for exact arithmetic");
  }
  total_units_ = std::accumulate(units_.begin(), units_.end(), Weight{0});
  if (n > 0 && total_units_ == 0) throw InvalidInstanceError("weights sum to zero");
  if (n == 0) total_units_ = 1;
  for (std::size_t j = 0; j < tests_.size(); ++j) {
    if (tests_[j].size() != n) {
      throw InvalidInstanceError("test " + std::to_string(j + 1) + " has " +
                                 std::to_string(tests_[j].size()) + " answers, expected " +
                                 std::to_string(n));
    }
    for (Answer a : tests_[j]) {
      if (a >= num_answers_) {
        throw InvalidInstanceError("test " + std::to_string(j + 1) + " answer out of range");
      }
    }
  }
}

Instance Instance::FromRationalWeights(const std::vector<Rational>& weights, int num_answers,
                                       std::vector<std::vector<Answer>> tests) {
  BigInt common = 1;
  Rational sum = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw InvalidInstanceError("negative weight");
    const BigInt den = boost::multiprecision::denominator(w);
    common = common / boost::multiprecision::gcd(common, den) * den;
    sum += w;
  }
  std::vector<Weight> units;
  units.reserve(weights.size());
  const BigInt limit = BigInt(std::numeric_limits<Weight>::max() / 4);
  for (const Rational& w : weights) {
    const BigInt scaled =
        boost::multiprecision::numerator(w) * (common / boost::multiprecision::denominator(w));
    if (scaled > limit) throw InvalidInstanceError("weights too fine-grained for exact arithmetic");
    units.push_back(scaled.convert_to<Weight>());
  }
  Instance inst(std::move(units), num_answers, std::move(tests));
  inst.declared_sum_ = sum;
  return inst;
}

Weight Instance::units(const HypothesisSet& set) const {
  Weight total = 0;
  set.ForEach([&](int h) { total += units_[static_cast<std::size_t>(h)]; });
  return total;
}

bool Instance::IsUniform() const {
  return std::adjacent_find(units_.begin(), units_.end(), std::not_equal_to<>()) == units_.end();
}

Weight Instance::min_units() const {
  return units_.empty() ? 0 : *std::min_element(units_.begin(), units_.end());
}

Weight Instance::max_units() const {
  return units_.empty() ? 0 : *std::max_element(units_.begin(), units_.end());
}

Rational Instance::WeightRatio() const {
  if (min_units() <= 0) throw InvalidInstanceError("weight ratio undefined with zero weights");
  return MakeRational(max_units(), min_units());
}

std::optional<std::pair<int, int>> FindUndistinguishedPair(const Instance& inst,
                                                           const HypothesisSet& set) {
  // Group members by their full answer signature; the first collision in
  // index order is the reported pair.
  std::map<std::vector<Answer>, int> first_with_signature;
  std::optional<std::pair<int, int>> best;
  set.ForEach([&](int h) {
    std::vector<Answer> signature(static_cast<std::size_t>(inst.num_tests()));
    for (int j = 0; j < inst.num_tests(); ++j) signature[static_cast<std::size_t>(j)] = inst.answer(j, h);
    auto [it, inserted] = first_with_signature.emplace(std::move(signature), h);
    if (!inserted) {
      std::pair<int, int> pair{it->second, h};
      if (!best || pair < *best) best = pair;
    }
  });
  return best;
}

ValidationReport ValidateInstance(const Instance& inst) {
  ValidationReport report;
  auto fail = [&](std::string problem) {
    report.ok = false;
    report.problems.push_back(std::move(problem));
  };
  if (inst.num_hypotheses() < 1) fail("n must be at least 1");
  if (inst.num_tests() < 1) fail("m must be at least 1");
  if (inst.num_answers() < 2) fail("K must be at least 2");
  const Rational deviation = abs(inst.declared_weight_sum() - 1);
  if (deviation > Rational(1, 1000000000)) {
    fail("weights sum to " + ToString(inst.declared_weight_sum()) + ", not 1");
  }
  if (inst.num_hypotheses() >= 2) {
    report.undistinguished_pair = FindUndistinguishedPair(inst, inst.AllHypotheses());
    if (report.undistinguished_pair) {
      fail("hypotheses " + std::to_string(report.undistinguished_pair->first + 1) + " and " +
           std::to_string(report.undistinguished_pair->second + 1) +
           " are not distinguished by any test");
    }
  }
  return report;
}

InducedInstance::InducedInstance(const Instance& base, HypothesisSet members)
    : base_(&base), members_(std::move(members)) {
  if (members_.universe() != base.num_hypotheses()) {
    throw InvalidInstanceError("restriction set has the wrong universe");
  }
  if (members_.empty()) throw InvalidInstanceError("empty restriction");
  index_ = members_.ToVector();
}

Instance InducedInstance::Materialize() const {
  std::vector<Weight> units;
  units.reserve(index_.size());
  for (int h : index_) units.push_back(base_->units(h));
  std::vector<std::vector<Answer>> tests(static_cast<std::size_t>(base_->num_tests()));
  for (int j = 0; j < base_->num_tests(); ++j) {
    auto& column = tests[static_cast<std::size_t>(j)];
    column.reserve(index_.size());
    for (int h : index_) column.push_back(base_->answer(j, h));
  }
  return Instance(std::move(units), base_->num_answers(), std::move(tests));
}

InducedInstance Restrict(const Instance& inst, const HypothesisSet& members) {
  return InducedInstance(inst, members);
}

Instance RoundWeights(const Instance& inst) {
  const int n = inst.num_hypotheses();
  if (n < 2) throw InvalidInstanceError("rounding undefined for n < 2");
  // Over the common denominator D*(n-1)^2: max(a_i*(n-1)^2, D).
  const Weight square = static_cast<Weight>(n - 1) * static_cast<Weight>(n - 1);
  std::vector<Weight> units;
  units.reserve(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    const __int128 scaled = static_cast<__int128>(inst.units(h)) * square;
    if (scaled > std::numeric_limits<Weight>::max() / 4) {
      throw InvalidInstanceError("weights too fine-grained for exact arithmetic");
    }
    units.push_back(std::max(static_cast<Weight>(scaled), inst.total_units()));
  }
  return Instance(std::move(units), inst.num_answers(), inst.tests());
}

}  // namespace splitwise
