#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gq {

/// Fixed-width set of vertex indices packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet from(int universe, std::span<const int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

  int count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Ascending member list.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1)
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline int intersection_count(const VertexSet& a, const VertexSet& b) {
  auto wa = a.words(), wb = b.words();
  int total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) total += std::popcount(wa[i] & wb[i]);
  return total;
}

inline int intersection_count(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  auto wa = a.words(), wb = b.words(), wc = c.words();
  int total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) total += std::popcount(wa[i] & wb[i] & wc[i]);
  return total;
}

}  // namespace gq
