#include "cylo/filters.hpp"

#include <algorithm>
#include <bit>

namespace cylo {

Bitset upset(const Lattice& L, int a) {
  if (a < 0 || a >= L.size()) throw ArgumentError("upset: unknown element id");
  return L.up(a);
}

GeneratedFilter filter_generated(const Lattice& L, const Bitset& seed) {
  if (seed.none()) throw ArgumentError("filter_generated: empty seed set");
  // Close under meet first (finitely many meets of members), then go up.
  Bitset meets = seed;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> ms = meets.members();
    for (int a : ms)
      for (int b : ms) {
        int m = L.meet(a, b);
        if (!meets.test(m)) {
          meets.set(m);
          changed = true;
        }
      }
  }
  Bitset out(L.size());
  meets.for_each([&](int a) { out |= L.up(a); });
  return {out, !out.test(L.bottom())};
}

bool is_proper_filter(const Lattice& L, const Bitset& x) {
  if (x.none() || x.test(L.bottom())) return false;
  std::vector<int> ms = x.members();
  for (int a : ms) {
    if (!L.up(a).subset_of(x)) return false;
    for (int b : ms)
      if (!x.test(L.meet(a, b))) return false;
  }
  return true;
}

int FilterSpectrum::index_of(const Bitset& x) const {
  auto it = std::lower_bound(filters.begin(), filters.end(), x, Bitset::lex_less);
  if (it != filters.end() && *it == x) return static_cast<int>(it - filters.begin());
  return -1;
}

FilterSpectrum enumerate_proper_filters(const Lattice& L, const Limits& lim) {
  const int n = L.size();
  FilterSpectrum spec;
  for (int a = 0; a < n; ++a)
    if (a != L.bottom()) spec.filters.push_back(L.up(a));
  std::sort(spec.filters.begin(), spec.filters.end(), Bitset::lex_less);

  // Independent route: scan every subset for the filter properties. The
  // fast path rests on all filters being principal, which holds in finite
  // lattices; the scan re-checks that instead of trusting it.
  if (n <= 62 && (std::uint64_t{1} << n) <= lim.max_scan) {
    std::vector<Bitset> slow;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      Bitset x(n);
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) x.set(i);
      if (is_proper_filter(L, x)) slow.push_back(std::move(x));
    }
    std::sort(slow.begin(), slow.end(), Bitset::lex_less);
    if (!(slow == spec.filters))
      throw StructuralError(
          "filter enumeration mismatch: the principal fast path and the subset scan disagree");
    spec.oracle_checked = true;
  }

  for (const Bitset& f : spec.filters) {
    int g = L.meet_of(f);
    spec.generators.push_back(g);
    spec.names.push_back("↑" + L.name(g));
  }
  return spec;
}

FilterClass classify_filter(const Lattice& L, const Bitset& x, const Limits& lim) {
  bool filter = x.any();
  std::vector<int> ms = x.members();
  for (std::size_t i = 0; i < ms.size() && filter; ++i) {
    if (!L.up(ms[i]).subset_of(x)) filter = false;
    for (std::size_t k = 0; k < ms.size() && filter; ++k)
      if (!x.test(L.meet(ms[i], ms[k]))) filter = false;
  }
  if (!filter) throw ArgumentError("classify_filter: the given set is not a filter");
  FilterClass c;
  c.proper = !x.test(L.bottom());
  if (!c.proper) return c;

  c.prime = true;
  const int n = L.size();
  for (int a = 0; a < n && c.prime; ++a)
    for (int b = 0; b < n && c.prime; ++b)
      if (x.test(L.join(a, b)) && !x.test(a) && !x.test(b)) c.prime = false;

  if (n > 62 || (std::uint64_t{1} << n) > lim.max_scan)
    throw ResourceGuardError("classify_filter: 2^" + std::to_string(n) +
                                 " subsets exceed the scan guard",
                             lim.max_scan);
  // Literal scan over all joins of subsets. The join over a subset is built
  // incrementally: join(S) = join(S minus its lowest member) ∨ that member.
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint16_t> joins(total);
  joins[0] = static_cast<std::uint16_t>(L.bottom());
  c.completely_prime = true;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    int low = std::countr_zero(mask);
    joins[mask] = static_cast<std::uint16_t>(L.join(joins[mask & (mask - 1)], low));
    if (c.completely_prime && x.test(joins[mask])) {
      bool hit = false;
      for (std::uint64_t rest = mask; rest && !hit; rest &= rest - 1)
        if (x.test(std::countr_zero(rest))) hit = true;
      if (!hit) c.completely_prime = false;
    }
  }
  return c;
}

std::vector<bool> prime_flags(const Lattice& L, const FilterSpectrum& spec) {
  std::vector<bool> out(spec.filters.size(), true);
  const int n = L.size();
  for (std::size_t f = 0; f < spec.filters.size(); ++f) {
    const Bitset& x = spec.filters[f];
    for (int a = 0; a < n && out[f]; ++a)
      for (int b = 0; b < n && out[f]; ++b)
        if (x.test(L.join(a, b)) && !x.test(a) && !x.test(b)) out[f] = false;
  }
  return out;
}

}  // namespace cylo
