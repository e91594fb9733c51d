#include "cylo/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace cylo {

namespace {

constexpr std::size_t kMaxCarrier = 65534;  // ids fit uint16

void check_names(const std::vector<std::string>& names) {
  if (names.size() < 2)
    throw StructuralError("a lattice needs at least two elements, got " +
                          std::to_string(names.size()));
  if (names.size() > kMaxCarrier)
    throw ResourceGuardError("carrier of " + std::to_string(names.size()) +
                                 " elements exceeds the representable maximum",
                             kMaxCarrier);
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructuralError("empty element name");
    if (!seen.insert(n).second) throw StructuralError("duplicate element name '" + n + "'");
  }
}

}  // namespace

Lattice::Lattice(std::vector<std::string> names, const std::vector<std::pair<int, int>>& order,
                 const std::vector<int>* user_meet, const std::vector<int>* user_join) {
  check_names(names);
  n_ = static_cast<int>(names.size());
  names_ = std::move(names);

  up_.assign(n_, Bitset(n_));
  for (int a = 0; a < n_; ++a) up_[a].set(a);
  for (auto [a, b] : order) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw StructuralError("order pair references an unknown element id");
    up_[a].set(b);
  }

  // Reflexive-transitive closure: propagate rows until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n_; ++a) {
      Bitset next = up_[a];
      up_[a].for_each([&](int b) { next |= up_[b]; });
      if (!(next == up_[a])) {
        up_[a] = std::move(next);
        changed = true;
      }
    }
  }

  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (up_[a].test(b) && up_[b].test(a))
        throw StructuralError("leq is not antisymmetric: " + names_[a] + " and " + names_[b] +
                              " are mutually comparable");

  derive(user_meet, user_join);
}

Lattice Lattice::from_inclusion(std::vector<std::string> names, const std::vector<Bitset>& sets) {
  check_names(names);
  Lattice l;
  l.n_ = static_cast<int>(names.size());
  l.names_ = std::move(names);
  l.up_.assign(l.n_, Bitset(l.n_));
  for (int a = 0; a < l.n_; ++a)
    for (int b = 0; b < l.n_; ++b)
      if (sets[a].subset_of(sets[b])) l.up_[a].set(b);
  for (int a = 0; a < l.n_; ++a)
    for (int b = a + 1; b < l.n_; ++b)
      if (l.up_[a].test(b) && l.up_[b].test(a))
        throw StructuralError("duplicate sets passed to from_inclusion");
  l.derive(nullptr, nullptr);
  return l;
}

void Lattice::derive(const std::vector<int>* user_meet, const std::vector<int>* user_join) {
  down_.assign(n_, Bitset(n_));
  for (int a = 0; a < n_; ++a)
    up_[a].for_each([&](int b) { down_[b].set(a); });

  bottom_ = top_ = -1;
  for (int a = 0; a < n_; ++a) {
    if (up_[a].is_full()) bottom_ = a;
    if (down_[a].is_full()) top_ = a;
  }
  if (bottom_ < 0) throw StructuralError("order has no bottom element");
  if (top_ < 0) throw StructuralError("order has no top element");

  meet_.assign(static_cast<std::size_t>(n_) * n_, 0);
  join_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = a; b < n_; ++b) {
      // The meet, when it exists, is the unique candidate c with
      // down(c) equal to down(a) & down(b).
      Bitset lower = down_[a] & down_[b];
      int m = -1;
      lower.for_each([&](int c) {
        if (m < 0 && down_[c] == lower) m = c;
      });
      if (m < 0)
        throw StructuralError("elements " + names_[a] + " and " + names_[b] + " have no meet");
      Bitset upper = up_[a] & up_[b];
      int j = -1;
      upper.for_each([&](int c) {
        if (j < 0 && up_[c] == upper) j = c;
      });
      if (j < 0)
        throw StructuralError("elements " + names_[a] + " and " + names_[b] + " have no join");
      meet_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::uint16_t>(m);
      meet_[static_cast<std::size_t>(b) * n_ + a] = static_cast<std::uint16_t>(m);
      join_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::uint16_t>(j);
      join_[static_cast<std::size_t>(b) * n_ + a] = static_cast<std::uint16_t>(j);
    }
  }

  auto cross_check = [&](const std::vector<int>* user, const std::vector<std::uint16_t>& derived,
                         const char* what) {
    if (!user) return;
    if (user->size() != derived.size())
      throw StructuralError(std::string("user ") + what + " table has the wrong size");
    for (std::size_t i = 0; i < derived.size(); ++i) {
      if ((*user)[i] != derived[i]) {
        int a = static_cast<int>(i) / n_, b = static_cast<int>(i) % n_;
        throw StructuralError(std::string("user ") + what + " table conflicts with the order at (" +
                              names_[a] + ", " + names_[b] + "): table says " +
                              names_[(*user)[i]] + ", order gives " + names_[derived[i]]);
      }
    }
  };
  cross_check(user_meet, meet_, "meet");
  cross_check(user_join, join_, "join");
}

int Lattice::index_of(std::string_view name) const {
  for (int a = 0; a < n_; ++a)
    if (names_[a] == name) return a;
  return -1;
}

int Lattice::meet_of(const Bitset& s) const {
  int acc = top_;
  s.for_each([&](int a) { acc = meet(acc, a); });
  return acc;
}

int Lattice::join_of(const Bitset& s) const {
  int acc = bottom_;
  s.for_each([&](int a) { acc = join(acc, a); });
  return acc;
}

std::vector<std::pair<int, int>> Lattice::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n_ && covered; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
      if (covered) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace cylo
