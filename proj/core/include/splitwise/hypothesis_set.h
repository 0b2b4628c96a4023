#ifndef SPLITWISE_HYPOTHESIS_SET_H_
#define SPLITWISE_HYPOTHESIS_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace splitwise {

// Fixed-width bitset over 0-based hypothesis indices of the ORIGINAL instance.
// Restrictions and tree caches never reindex; the universe width travels with
// the set so that sets from different instances never compare equal.
class HypothesisSet {
 public:
  HypothesisSet() = default;
  explicit HypothesisSet(int universe);

  static HypothesisSet Full(int universe);
  static HypothesisSet Of(int universe, std::initializer_list<int> members);
  static HypothesisSet Of(int universe, const std::vector<int>& members);

  int universe() const { return universe_; }
  bool contains(int h) const {
    return (words_[static_cast<std::size_t>(h) >> 6] >> (h & 63)) & 1u;
  }
  void insert(int h) { words_[static_cast<std::size_t>(h) >> 6] |= std::uint64_t{1} << (h & 63); }
  void erase(int h) { words_[static_cast<std::size_t>(h) >> 6] &= ~(std::uint64_t{1} << (h & 63)); }

  int size() const;
  bool empty() const;
  // Smallest member, or -1 when empty.
  int front() const;
  std::vector<int> ToVector() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

  bool IsSubsetOf(const HypothesisSet& other) const;
  bool Intersects(const HypothesisSet& other) const;

  HypothesisSet& operator&=(const HypothesisSet& other);
  HypothesisSet& operator|=(const HypothesisSet& other);
  HypothesisSet& operator-=(const HypothesisSet& other);
  friend HypothesisSet operator&(HypothesisSet a, const HypothesisSet& b) { return a &= b; }
  friend HypothesisSet operator|(HypothesisSet a, const HypothesisSet& b) { return a |= b; }
  friend HypothesisSet operator-(HypothesisSet a, const HypothesisSet& b) { return a -= b; }

  friend bool operator==(const HypothesisSet& a, const HypothesisSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Orders by smallest differing member; used for deterministic sorting.
  friend bool operator<(const HypothesisSet& a, const HypothesisSet& b);

  std::size_t Hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void CheckCompatible(const HypothesisSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct HypothesisSetHash {
  std::size_t operator()(const HypothesisSet& s) const { return s.Hash(); }
};

}  // namespace splitwise

#endif  // SPLITWISE_HYPOTHESIS_SET_H_
