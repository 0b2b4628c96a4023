#include "splitwise/audit_report.h"

#include <algorithm>
#include <ostream>

namespace splitwise {

void AuditReport::AddLe(const std::string& name, int level, const Rational& lhs, const Rational& rhs) {
  checks_.push_back({name, level, lhs <= rhs, lhs, rhs, Rational(rhs - lhs)});
}

void AuditReport::AddLt(const std::string& name, int level, const Rational& lhs, const Rational& rhs) {
  checks_.push_back({name, level, lhs < rhs, lhs, rhs, Rational(rhs - lhs)});
}

void AuditReport::AddLe(const std::string& name, int level, const Rational& lhs, long double rhs) {
  const long double l = ToLongDouble(lhs);
  checks_.push_back({name, level, l <= rhs, lhs, rhs, rhs - l});
}

void AuditReport::AddLe(const std::string& name, int level, long double lhs, long double rhs) {
  checks_.push_back({name, level, lhs <= rhs, lhs, rhs, rhs - lhs});
}

void AuditReport::AddEq(const std::string& name, int level, const Rational& lhs, const Rational& rhs) {
  checks_.push_back({name, level, lhs == rhs, lhs, rhs, Rational(rhs - lhs)});
}

void AuditReport::AddFlag(const std::string& name, int level, bool pass) {
  checks_.push_back({name, level, pass, Rational(pass ? 1 : 0), Rational(1), Rational(pass ? 0 : 1)});
}

void AuditReport::Merge(const AuditReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool AuditReport::passed() const { return failures() == 0; }

int AuditReport::failures() const {
  return static_cast<int>(
      std::count_if(checks_.begin(), checks_.end(), [](const AuditCheck& c) { return !c.pass; }));
}

std::string RenderAuditValue(const AuditValue& value, bool as_float) {
  if (const auto* r = std::get_if<Rational>(&value)) {
    return as_float ? ToDecimalString(*r) : ToString(*r);
  }
  return ToDecimalString(std::get<long double>(value), 17);
}

std::string FormatAuditCheck(const AuditCheck& check, bool as_float) {
  std::string line = check.name + ' ' + (check.level < 0 ? std::string("-") : std::to_string(check.level)) +
                     ' ' + (check.pass ? "pass" : "fail") + ' ' + RenderAuditValue(check.lhs, as_float) +
                     ' ' + RenderAuditValue(check.rhs, as_float) + ' ' +
                     RenderAuditValue(check.slack, as_float);
  return line;
}

void AuditReport::Write(std::ostream& out, bool as_float) const {
  for (const AuditCheck& c : checks_) out << FormatAuditCheck(c, as_float) << '\n';
}

}  // namespace splitwise
