#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace teamfit {

// Set of dense skill ids over a fixed universe [0, m). Union, difference and
// overlap run word-parallel; the solver inner loops are dominated by them.
class SkillSet {
 public:
  SkillSet() = default;

  explicit SkillSet(int universe)
      : universe_(universe),
        words_(static_cast<std::size_t>(universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static SkillSet of(int universe, std::initializer_list<int> ids) {
    SkillSet s(universe);
    for (int id : ids) s.set(id);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int id) const {
    assert(id >= 0 && id < universe_);
    return (words_[word(id)] >> bit(id)) & 1u;
  }

  void set(int id) {
    assert(id >= 0 && id < universe_);
    words_[word(id)] |= std::uint64_t{1} << bit(id);
  }

  void reset(int id) {
    assert(id >= 0 && id < universe_);
    words_[word(id)] &= ~(std::uint64_t{1} << bit(id));
  }

  int count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  // |this ∩ other|
  int overlap(const SkillSet& other) const {
    assert(universe_ == other.universe_);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += std::popcount(words_[i] & other.words_[i]);
    return total;
  }

  // |this \ other|
  int difference_count(const SkillSet& other) const {
    assert(universe_ == other.universe_);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += std::popcount(words_[i] & ~other.words_[i]);
    return total;
  }

  // other ⊆ this
  bool contains(const SkillSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool intersects(const SkillSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  SkillSet& operator|=(const SkillSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  SkillSet& operator&=(const SkillSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  SkillSet& operator-=(const SkillSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend SkillSet operator|(SkillSet a, const SkillSet& b) { return a |= b; }
  friend SkillSet operator&(SkillSet a, const SkillSet& b) { return a &= b; }
  friend SkillSet operator-(SkillSet a, const SkillSet& b) { return a -= b; }

  bool operator==(const SkillSet&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int id) { out.push_back(id); });
    return out;
  }

 private:
  static std::size_t word(int id) { return static_cast<std::size_t>(id) / 64; }
  static int bit(int id) { return id % 64; }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace teamfit
