#pragma once

#include <string>
#include <vector>

#include "cylo/lattice.hpp"
#include "cylo/report.hpp"

namespace cylo {

/// {b : a <= b}.
Bitset upset(const Lattice& L, int a);

struct GeneratedFilter {
  Bitset members;
  bool proper;  // false when the generated filter contains bottom
};

/// Smallest filter containing the seed set. Throws ArgumentError on an
/// empty seed.
GeneratedFilter filter_generated(const Lattice& L, const Bitset& seed);

bool is_proper_filter(const Lattice& L, const Bitset& x);

/// All proper filters in canonical order (member sets compared
/// lexicographically). In a finite lattice every proper filter is the upset
/// of its least member, so the fast path emits principal upsets; when the
/// carrier is small enough an independent scan of all subsets re-derives the
/// family and the two routes are asserted equal (`oracle_checked`).
struct FilterSpectrum {
  std::vector<Bitset> filters;
  std::vector<std::string> names;  // "↑a" with a the least member
  std::vector<int> generators;     // least member per filter
  bool oracle_checked = false;

  int size() const { return static_cast<int>(filters.size()); }
  int index_of(const Bitset& x) const;
};

FilterSpectrum enumerate_proper_filters(const Lattice& L, const Limits& lim = {});

struct FilterClass {
  bool proper = false;
  bool prime = false;
  bool completely_prime = false;
};

/// Classifies a proper filter. Complete primality is decided by a literal
/// scan over all joins of subsets, so the carrier is subject to the scan
/// guard. Throws ArgumentError when x is not a filter.
FilterClass classify_filter(const Lattice& L, const Bitset& x, const Limits& lim = {});

/// Filters that split every binary join; in a finite lattice an induction
/// on join size makes these exactly the completely prime ones.
std::vector<bool> prime_flags(const Lattice& L, const FilterSpectrum& spec);

}  // namespace cylo
