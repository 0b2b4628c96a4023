#include "splitwise/instance_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "splitwise/errors.h"

namespace splitwise {
namespace {

using json = nlohmann::json;

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

long long ReadInteger(std::istream& in, const char* what) {
  long long value;
  if (!(in >> value)) throw ParseError(std::string("expected ") + what);
  return value;
}

std::vector<Answer> CheckedColumn(const std::vector<long long>& raw, int k, int j) {
  std::vector<Answer> column;
  column.reserve(raw.size());
  for (long long a : raw) {
    if (a < 1 || a > k) {
      throw ParseError("test " + std::to_string(j + 1) + ": answer " + std::to_string(a) +
                       " outside 1.." + std::to_string(k));
    }
    column.push_back(static_cast<Answer>(a - 1));
  }
  return column;
}

Instance Assemble(int n, int k, const std::vector<Rational>& weights,
                  const std::vector<std::vector<long long>>& raw_tests) {
  if (n < 1) throw ParseError("n must be positive");
  if (k < 2 || k > 65535) throw ParseError("K out of range");
  if (static_cast<int>(weights.size()) != n) throw ParseError("weight count does not match n");
  std::vector<std::vector<Answer>> tests;
  tests.reserve(raw_tests.size());
  for (std::size_t j = 0; j < raw_tests.size(); ++j) {
    if (static_cast<int>(raw_tests[j].size()) != n) {
      throw ParseError("test " + std::to_string(j + 1) + " does not have n answers");
    }
    tests.push_back(CheckedColumn(raw_tests[j], k, static_cast<int>(j)));
  }
  try {
    return Instance::FromRationalWeights(weights, k, std::move(tests));
  } catch (const InvalidInstanceError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Instance ReadInstanceText(std::istream& in) {
  const long long n = ReadInteger(in, "n");
  const long long m = ReadInteger(in, "m");
  const long long k = ReadInteger(in, "K");
  if (n < 1 || n > 10'000'000) throw ParseError("n out of range");
  if (m < 0 || m > 10'000'000) throw ParseError("m out of range");
  std::vector<Rational> weights;
  weights.reserve(static_cast<std::size_t>(n));
  for (long long h = 0; h < n; ++h) {
    std::string token;
    if (!(in >> token)) throw ParseError("expected " + std::to_string(n) + " weights");
    weights.push_back(ParseRational(token));
  }
  std::vector<std::vector<long long>> raw(static_cast<std::size_t>(m));
  for (auto& column : raw) {
    column.resize(static_cast<std::size_t>(n));
    for (auto& a : column) a = ReadInteger(in, "answer");
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("unexpected trailing token '" + trailing + "'");
  return Assemble(static_cast<int>(n), static_cast<int>(k), weights, raw);
}

void WriteInstanceText(std::ostream& out, const Instance& inst) {
  const int n = inst.num_hypotheses();
  out << n << ' ' << inst.num_tests() << ' ' << inst.num_answers() << '\n';
  for (int h = 0; h < n; ++h) {
    if (h > 0) out << ' ';
    out << ToString(inst.weight(h));
  }
  out << '\n';
  for (int j = 0; j < inst.num_tests(); ++j) {
    for (int h = 0; h < n; ++h) {
      if (h > 0) out << ' ';
      out << inst.answer(j, h) + 1;
    }
    out << '\n';
  }
}

std::string InstanceToText(const Instance& inst) {
  std::ostringstream out;
  WriteInstanceText(out, inst);
  return out.str();
}

Instance ReadInstanceJson(std::istream& in) {
  json doc;
  try {
    in >> doc;
    const int n = doc.at("n").get<int>();
    const int k = doc.at("k").get<int>();
    std::vector<Rational> weights;
    for (const auto& w : doc.at("weights")) {
      weights.push_back(w.is_string() ? ParseRational(w.get<std::string>())
                                      : ParseRational(w.dump()));
    }
    std::vector<std::vector<long long>> raw;
    for (const auto& t : doc.at("tests")) raw.push_back(t.get<std::vector<long long>>());
    return Assemble(n, k, weights, raw);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
}

void WriteInstanceJson(std::ostream& out, const Instance& inst) {
  json doc;
  doc["n"] = inst.num_hypotheses();
  doc["k"] = inst.num_answers();
  json weights = json::array();
  for (int h = 0; h < inst.num_hypotheses(); ++h) weights.push_back(ToString(inst.weight(h)));
  doc["weights"] = std::move(weights);
  json tests = json::array();
  for (int j = 0; j < inst.num_tests(); ++j) {
    json column = json::array();
    for (int h = 0; h < inst.num_hypotheses(); ++h) column.push_back(inst.answer(j, h) + 1);
    tests.push_back(std::move(column));
  }
  doc["tests"] = std::move(tests);
  out << doc.dump(1) << '\n';
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return EndsWith(path, ".json") ? ReadInstanceJson(in) : ReadInstanceText(in);
}

void SaveInstance(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  if (EndsWith(path, ".json")) {
    WriteInstanceJson(out, inst);
  } else {
    WriteInstanceText(out, inst);
  }
}

}  // namespace splitwise
