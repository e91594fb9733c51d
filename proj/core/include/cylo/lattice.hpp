#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cylo/bitset.hpp"
#include "cylo/report.hpp"

namespace cylo {

/// Finite bounded lattice. Elements are dense integer ids assigned from the
/// input order; reports and renderings always use the stored names.
///
/// The order is taken as given pairs, reflexively and transitively closed on
/// construction. Meet and join tables are derived from the order; optional
/// user tables are cross-checked and rejected on conflict.
class Lattice {
 public:
  Lattice() = default;

  Lattice(std::vector<std::string> names, const std::vector<std::pair<int, int>>& order,
          const std::vector<int>* user_meet = nullptr, const std::vector<int>* user_join = nullptr);

  /// Lattice of sets ordered by inclusion. `sets` must be duplicate-free;
  /// ids follow the given order.
  static Lattice from_inclusion(std::vector<std::string> names, const std::vector<Bitset>& sets);

  int size() const { return n_; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;

  /// {b : a <= b} and {b : b <= a} as bitsets over element ids.
  const Bitset& up(int a) const { return up_[a]; }
  const Bitset& down(int a) const { return down_[a]; }

  int meet_of(const Bitset& s) const;  // meet over a set, top when empty
  int join_of(const Bitset& s) const;  // join over a set, bottom when empty

  /// Covering pairs (a, b) with a < b and nothing strictly between,
  /// sorted by (a, b).
  std::vector<std::pair<int, int>> cover_pairs() const;

 private:
  void derive(const std::vector<int>* user_meet, const std::vector<int>* user_join);

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Bitset> up_, down_;
  std::vector<std::uint16_t> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

}  // namespace cylo
