#ifndef SPLITWISE_INSTANCE_IO_H_
#define SPLITWISE_INSTANCE_IO_H_

#include <iosfwd>
#include <string>

#include "splitwise/instance.h"

namespace splitwise {

// Text format:
//   n m K
//   w_1 ... w_n            (decimal or p/q)
//   m lines of n answers in 1..K
Instance ReadInstanceText(std::istream& in);
void WriteInstanceText(std::ostream& out, const Instance& inst);

// Structured mirror: {"n": .., "k": .., "weights": ["p/q", ..], "tests": [[..], ..]}.
Instance ReadInstanceJson(std::istream& in);
void WriteInstanceJson(std::ostream& out, const Instance& inst);

// Dispatches on the ".json" extension.
Instance LoadInstance(const std::string& path);
void SaveInstance(const std::string& path, const Instance& inst);

std::string InstanceToText(const Instance& inst);

}  // namespace splitwise

#endif  // SPLITWISE_INSTANCE_IO_H_
