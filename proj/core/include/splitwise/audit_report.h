#ifndef SPLITWISE_AUDIT_REPORT_H_
#define SPLITWISE_AUDIT_REPORT_H_

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "splitwise/rational.h"

namespace splitwise {

// Exact where both sides are rational; long double only when a side
// involves a logarithm.
using AuditValue = std::variant<Rational, long double>;

struct AuditCheck {
  std::string name;
  int level = -1;  // -1 renders as "-"
  bool pass = true;
  AuditValue lhs = Rational(0);
  AuditValue rhs = Rational(0);
  AuditValue slack = Rational(0);  // rhs - lhs
};

class AuditReport {
 public:
  void AddLe(const std::string& name, int level, const Rational& lhs, const Rational& rhs);
  void AddLt(const std::string& name, int level, const Rational& lhs, const Rational& rhs);
  void AddLe(const std::string& name, int level, const Rational& lhs, long double rhs);
  void AddLe(const std::string& name, int level, long double lhs, long double rhs);
  void AddEq(const std::string& name, int level, const Rational& lhs, const Rational& rhs);
  // Structural checks: lhs/rhs are 1/0 flags.
  void AddFlag(const std::string& name, int level, bool pass);

  void Merge(const AuditReport& other);

  bool passed() const;
  int failures() const;
  const std::vector<AuditCheck>& checks() const { return checks_; }

  // One line per check: `name level pass|fail lhs rhs slack`.
  void Write(std::ostream& out, bool as_float = false) const;

 private:
  std::vector<AuditCheck> checks_;
};

std::string RenderAuditValue(const AuditValue& value, bool as_float);
std::string FormatAuditCheck(const AuditCheck& check, bool as_float);

}  // namespace splitwise

#endif  // SPLITWISE_AUDIT_REPORT_H_
