#include "splitwise/set_system.h"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "splitwise/errors.h"

namespace splitwise {

Weight SetSystem::units(const HypothesisSet& s) const {
  Weight total = 0;
  s.ForEach([&](int e) { total += element_units[static_cast<std::size_t>(e)]; });
  return total;
}

HypothesisSet SetSystem::Uncoverable() const {
  HypothesisSet covered(universe_size());
  for (const HypothesisSet& s : sets) covered |= s;
  return Universe() - covered;
}

SetSystem MakeUniformSetSystem(int universe, std::vector<HypothesisSet> sets) {
  SetSystem system;
  system.element_units.assign(static_cast<std::size_t>(universe), 1);
  system.denominator = std::max(universe, 1);
  system.sets = std::move(sets);
  for (const HypothesisSet& s : system.sets) {
    if (s.universe() != universe) throw Error("set over the wrong universe");
  }
  return system;
}

SetSystem ReadSetSystemText(std::istream& in) {
  int size = 0, count = 0;
  if (!(in >> size >> count) || size < 0 || count < 0) throw ParseError("expected '|S| M' header");
  std::vector<Rational> weights;
  for (int e = 0; e < size; ++e) {
    std::string token;
    if (!(in >> token)) throw ParseError("expected element weights");
    weights.push_back(ParseRational(token));
  }
  BigInt common = 1;
  for (const Rational& w : weights) {
    if (w < 0) throw ParseError("negative element weight");
    const BigInt den = boost::multiprecision::denominator(w);
    common = common / boost::multiprecision::gcd(common, den) * den;
  }
  if (common > BigInt(std::numeric_limits<Weight>::max() / 1024)) throw ParseError("weights too fine-grained");
  SetSystem system;
  system.denominator = common.convert_to<Weight>();
  for (const Rational& w : weights) {
    const BigInt scaled = boost::multiprecision::numerator(w) * (common / boost::multiprecision::denominator(w));
    system.element_units.push_back(scaled.convert_to<Weight>());
  }
  std::string line;
  std::getline(in, line);
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(count) + " set lines");
    std::istringstream members(line);
    HypothesisSet s(size);
    for (int e; members >> e;) {
      if (e < 1 || e > size) throw ParseError("set member out of range");
      s.insert(e - 1);
    }
    if (!members.eof()) throw ParseError("malformed set line");
    system.sets.push_back(std::move(s));
  }
  return system;
}

void WriteSetSystemText(std::ostream& out, const SetSystem& system) {
  out << system.universe_size() << ' ' << system.num_sets() << '\n';
  for (int e = 0; e < system.universe_size(); ++e) {
    if (e > 0) out << ' ';
    out << ToString(system.weight(e));
  }
  out << '\n';
  for (const HypothesisSet& s : system.sets) {
    bool first = true;
    s.ForEach([&](int e) {
      out << (first ? "" : " ") << e + 1;
      first = false;
    });
    out << '\n';
  }
}

}  // namespace splitwise
