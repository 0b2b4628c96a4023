#ifndef SPLITWISE_ERRORS_H_
#define SPLITWISE_ERRORS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace splitwise {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Instance-level problems: no test splits a set, restriction empty, weights
// out of range. Carries the offending pair (0-based) when one is known.
class InvalidInstanceError : public Error {
 public:
  explicit InvalidInstanceError(const std::string& what,
                                std::optional<std::pair<int, int>> pair = {})
      : Error(what), pair_(pair) {}
  const std::optional<std::pair<int, int>>& undistinguished_pair() const {
    return pair_;
  }

 private:
  std::optional<std::pair<int, int>> pair_;
};

struct SearchStats {
  std::int64_t expansions = 0;
  std::int64_t memo_hits = 0;
  std::int64_t memo_entries = 0;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, SearchStats stats)
      : Error(what), stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

}  // namespace splitwise

#endif  // SPLITWISE_ERRORS_H_
