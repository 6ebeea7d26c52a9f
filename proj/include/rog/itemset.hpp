#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rog {

// A set of items. Items are 1-indexed positive integers; storage grows as
// needed, so universes larger than 64 items work the same as small ones.
class ItemSet {
 public:
  ItemSet() = default;

  // Preallocates room for items 1..capacity.
  explicit ItemSet(int capacity) { words_.resize(word_count(capacity), 0); }

  static ItemSet full(int m) {
    ItemSet s(m);
    for (int j = 1; j <= m; ++j) s.insert(j);
    return s;
  }

  bool contains(int item) const {
    check_item(item);
    const std::size_t w = word_index(item);
    if (w >= words_.size()) return false;
    return (words_[w] >> bit_index(item)) & 1u;
  }

  void insert(int item) {
    check_item(item);
    const std::size_t w = word_index(item);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << bit_index(item);
  }

  void erase(int item) {
    check_item(item);
    const std::size_t w = word_index(item);
    if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << bit_index(item));
  }

  void clear() { words_.assign(words_.size(), 0); }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }

  int max_item() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i]) return static_cast<int>(i * 64 + 64 - __builtin_clzll(words_[i]));
    }
    return 0;
  }

  int intersection_size(const ItemSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    int c = 0;
    for (std::size_t i = 0; i < n; ++i) c += __builtin_popcountll(words_[i] & other.words_[i]);
    return c;
  }

  bool intersects(const ItemSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ItemSet union_with(const ItemSet& other) const {
    ItemSet r;
    r.words_.resize(std::max(words_.size(), other.words_.size()), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= words_[i];
    for (std::size_t i = 0; i < other.words_.size(); ++i) r.words_[i] |= other.words_[i];
    return r;
  }

  ItemSet intersect(const ItemSet& other) const {
    ItemSet r;
    r.words_.resize(std::min(words_.size(), other.words_.size()), 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  bool is_subset_of(const ItemSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
      if (words_[i] & ~o) return false;
    }
    return true;
  }

  // Visits members in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = __builtin_ctzll(w);
        fn(static_cast<int>(i * 64 + b + 1));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size());
    for_each([&](int j) { v.push_back(j); });
    return v;
  }

  friend bool operator==(const ItemSet& a, const ItemSet& b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
      const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
      if (wa != wb) return false;
    }
    return true;
  }
  friend bool operator!=(const ItemSet& a, const ItemSet& b) { return !(a == b); }

 private:
  static void check_item(int item) {
    if (item < 1) throw std::invalid_argument("item indices start at 1");
  }
  static std::size_t word_count(int capacity) {
    return capacity <= 0 ? 0 : static_cast<std::size_t>((capacity + 63) / 64);
  }
  static std::size_t word_index(int item) { return static_cast<std::size_t>(item - 1) / 64; }
  static unsigned bit_index(int item) { return static_cast<unsigned>(item - 1) % 64; }

  std::vector<std::uint64_t> words_;
};

}  // namespace rog
