#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "hypermod/errors.hpp"

namespace hypermod {

// Subset of a fixed finite carrier 0..universe-1, stored as 64-bit blocks.
// All operations are pure; mixing sets over different universes is a logic
// error and throws.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet singleton(int universe, int e) {
    ElementSet s(universe);
    s.insert(e);
    return s;
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  // Low 64 elements given by mask; universe must be <= 64.
  static ElementSet from_mask(int universe, uint64_t mask) {
    if (universe > 64) throw InternalError("from_mask: universe > 64");
    ElementSet s(universe);
    s.words_[0] = mask;
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int e) const {
    return (words_[e >> 6] >> (e & 63)) & 1;
  }

  void insert(int e) { words_[e >> 6] |= uint64_t{1} << (e & 63); }
  void erase(int e) { words_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const ElementSet& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  // Total order usable as a map key: universe, then blocks low-to-high.
  bool operator<(const ElementSet& o) const {
    if (universe_ != o.universe_) return universe_ < o.universe_;
    return words_ < o.words_;
  }

  // -1 when empty.
  int min_element() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        fn(int(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void check_same(const ElementSet& o) const {
    if (universe_ != o.universe_)
      throw InternalError("ElementSet: universe mismatch");
  }

  void trim() {
    int rem = universe_ & 63;
    if (rem && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
  }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

// Canonical enumeration order for substructure lattices: smaller sets first,
// ties broken by the block representation. Deterministic.
inline bool canonical_set_less(const ElementSet& a, const ElementSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.words() < b.words();
}

}  // namespace hypermod
