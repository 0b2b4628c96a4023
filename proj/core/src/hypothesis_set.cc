#include "splitwise/hypothesis_set.h"

#include <stdexcept>

namespace splitwise {

HypothesisSet::HypothesisSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

HypothesisSet HypothesisSet::Full(int universe) {
  HypothesisSet s(universe);
  for (int h = 0; h < universe; ++h) s.insert(h);
  return s;
}

HypothesisSet HypothesisSet::Of(int universe, std::initializer_list<int> members) {
  return Of(universe, std::vector<int>(members));
}

HypothesisSet HypothesisSet::Of(int universe, const std::vector<int>& members) {
  HypothesisSet s(universe);
  for (int h : members) {
    if (h < 0 || h >= universe) throw std::out_of_range("hypothesis index out of range");
    s.insert(h);
  }
  return s;
}

int HypothesisSet::size() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool HypothesisSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int HypothesisSet::front() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
  }
  return -1;
}

std::vector<int> HypothesisSet::ToVector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  ForEach([&](int h) { out.push_back(h); });
  return out;
}

void HypothesisSet::CheckCompatible(const HypothesisSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("hypothesis sets over different universes");
  }
}

bool HypothesisSet::IsSubsetOf(const HypothesisSet& other) const {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool HypothesisSet::Intersects(const HypothesisSet& other) const {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

HypothesisSet& HypothesisSet::operator&=(const HypothesisSet& other) {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

HypothesisSet& HypothesisSet::operator|=(const HypothesisSet& other) {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

HypothesisSet& HypothesisSet::operator-=(const HypothesisSet& other) {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator<(const HypothesisSet& a, const HypothesisSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    // The set owning the smallest differing member sorts first.
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.words_[w] & lowest) != 0;
  }
  return false;
}

std::size_t HypothesisSet::Hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace splitwise
