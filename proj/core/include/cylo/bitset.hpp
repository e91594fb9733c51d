#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cylo {

/// Subset of a fixed finite universe, stored as 64-bit words.
/// All binary operations require both operands to share the universe size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset singleton(std::size_t universe, std::size_t i) {
    Bitset b(universe);
    b.set(i);
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool is_full() const { return count() == n_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    r &= o;
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r = *this;
    r |= o;
    return r;
  }
  /// Complement within the universe.
  Bitset operator~() const {
    Bitset r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }
  Bitset minus(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  bool subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  /// Orders sets by their ascending member lists, so {} < {0} < {0,1} < {1}.
  /// At the lowest differing index the set containing it wins, except that a
  /// set whose members are exhausted there is a proper prefix and comes first.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    assert(a.n_ == b.n_);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t d = a.w_[i] ^ b.w_[i];
      if (!d) continue;
      std::size_t bit = std::countr_zero(d);
      bool first_in_a = (a.w_[i] >> bit) & 1;
      const Bitset& other = first_in_a ? b : a;
      std::uint64_t above = (bit == 63) ? 0 : other.w_[i] & (~std::uint64_t{0} << (bit + 1));
      bool other_has_tail = above != 0;
      for (std::size_t j = i + 1; !other_has_tail && j < a.w_.size(); ++j)
        other_has_tail = other.w_[j] != 0;
      return first_in_a ? other_has_tail : !other_has_tail;
    }
    return false;
  }

  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  int find_next(int prev) const {
    std::size_t i = static_cast<std::size_t>(prev) + 1;
    if (i >= n_) return -1;
    std::size_t word = i >> 6;
    std::uint64_t w = w_[word] >> (i & 63);
    if (w) return static_cast<int>(i + std::countr_zero(w));
    for (++word; word < w_.size(); ++word)
      if (w_[word]) return static_cast<int>(word * 64 + std::countr_zero(w_[word]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct BitsetLexLess {
  bool operator()(const Bitset& a, const Bitset& b) const { return Bitset::lex_less(a, b); }
};

}  // namespace cylo
