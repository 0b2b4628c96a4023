#ifndef SPLITWISE_TOOLS_COMMON_H_
#define SPLITWISE_TOOLS_COMMON_H_

#include <ostream>
#include <stdexcept>
#include <string>

#include "cli.h"
#include "splitwise/errors.h"

namespace splitwise::cli {

// Maps library exceptions onto the exit-code contract.
template <typename Body>
int HandleErrors(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvalidInstanceError& e) {
    err << "invalid input: " << e.what();
    if (const auto& pair = e.undistinguished_pair()) {
      err << " (hypotheses " << pair->first + 1 << " and " << pair->second + 1 << " are not separated)";
    }
    err << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << " after " << e.stats().expansions << " expansions\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

std::string Render(const Rational& value, bool as_float);

}  // namespace splitwise::cli

#endif  // SPLITWISE_TOOLS_COMMON_H_
