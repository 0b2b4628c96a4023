#ifndef SPLITWISE_TREE_IO_H_
#define SPLITWISE_TREE_IO_H_

#include <iosfwd>
#include <string>

#include "splitwise/instance.h"
#include "splitwise/tree.h"

namespace splitwise {

// Text format, 1-based tests/answers/hypotheses:
//   tree <n> <K> <nodes>
//   scope <h> <h> ...
//   <id> <depth> test <j> <parent_answer | ->
//   <id> <depth> leaf <parent_answer | ->
// Lines are in preorder. Reading rebuilds L(v) caches against `inst`.
void WriteTreeText(std::ostream& out, const DecisionTree& tree);
DecisionTree ReadTreeText(std::istream& in, const Instance& inst);
std::string TreeToText(const DecisionTree& tree);

// Nested form: {"n", "k", "scope", "root": {"test", "children": [{"answer", "node"}]} | {"leaf": [..]}}.
void WriteTreeJson(std::ostream& out, const DecisionTree& tree);
DecisionTree ReadTreeJson(std::istream& in, const Instance& inst);

}  // namespace splitwise

#endif  // SPLITWISE_TREE_IO_H_
