#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "cylo/catalog.hpp"
#include "cylo/filters.hpp"
#include "cylo/lattice.hpp"

using namespace cylo;

namespace {

/// Literal reading of the definition on plain masks: a proper filter is a
/// nonempty, bottom-free subset closed under binary meets and upward closed.
bool oracle_is_proper_filter(const Lattice& L, std::uint32_t mask) {
  const int n = L.size();
  if (mask == 0) return false;
  if ((mask >> L.bottom()) & 1) return false;
  for (int a = 0; a < n; ++a) {
    if (!((mask >> a) & 1)) continue;
    for (int b = 0; b < n; ++b) {
      if (((mask >> b) & 1) && !((mask >> L.meet(a, b)) & 1)) return false;
      if (L.leq(a, b) && !((mask >> b) & 1)) return false;
    }
  }
  return true;
}

std::uint32_t to_mask(const Bitset& x) {
  std::uint32_t m = 0;
  x.for_each([&](int i) { m |= std::uint32_t{1} << i; });
  return m;
}

}  // namespace

TEST_CASE("every proper filter of a finite lattice is a principal upset") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Lattice& L = catalog_algebra(name).lat;
    FilterSpectrum spec = enumerate_proper_filters(L);
    CHECK(spec.size() == L.size() - 1);
    CHECK(spec.oracle_checked);
    for (int f = 0; f < spec.size(); ++f) {
      CHECK(spec.filters[f] == upset(L, spec.generators[f]));
      CHECK(spec.names[f] == "↑" + L.name(spec.generators[f]));
      if (f + 1 < spec.size()) CHECK(Bitset::lex_less(spec.filters[f], spec.filters[f + 1]));
    }
  }
}

TEST_CASE("an independent subset scan finds the same filters") {
  for (const auto& name : {"B2", "B4", "MO2", "O6", "B8", "mOL12"}) {
    CAPTURE(name);
    const Lattice& L = catalog_algebra(name).lat;
    REQUIRE(L.size() <= 20);
    FilterSpectrum spec = enumerate_proper_filters(L);
    std::vector<std::uint32_t> expect;
    for (const Bitset& f : spec.filters) expect.push_back(to_mask(f));
    int found = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << L.size()); ++mask)
      if (oracle_is_proper_filter(L, mask)) {
        ++found;
        bool listed = false;
        for (std::uint32_t e : expect) listed = listed || e == mask;
        CHECK(listed);
      }
    CHECK(found == spec.size());
  }
}

TEST_CASE("B4 filters arrive in canonical member-list order") {
  const Lattice& L = catalog_algebra("B4").lat;
  FilterSpectrum spec = enumerate_proper_filters(L);
  CHECK(spec.names == std::vector<std::string>{"↑a", "↑b", "↑1"});
  CHECK(spec.generators == std::vector<int>{1, 2, 3});
  CHECK(spec.index_of(upset(L, 2)) == 1);
  Bitset not_a_filter(4);
  not_a_filter.set(0);
  CHECK(spec.index_of(not_a_filter) == -1);
}

TEST_CASE("MO2 filters arrive in canonical member-list order") {
  const Lattice& L = catalog_algebra("MO2").lat;
  FilterSpectrum spec = enumerate_proper_filters(L);
  CHECK(spec.names == std::vector<std::string>{"↑a", "↑a⊥", "↑b", "↑b⊥", "↑1"});
}

TEST_CASE("filter generation closes under meets and upsets") {
  const Lattice& B4 = catalog_algebra("B4").lat;

  Bitset seed_a(4);
  seed_a.set(1);
  GeneratedFilter fa = filter_generated(B4, seed_a);
  CHECK(fa.proper);
  CHECK(fa.members == upset(B4, 1));

  Bitset seed_ab(4);
  seed_ab.set(1);
  seed_ab.set(2);
  GeneratedFilter fab = filter_generated(B4, seed_ab);
  CHECK(!fab.proper);  // a ∧ b = 0
  CHECK(fab.members.is_full());

  const Lattice& O6 = catalog_algebra("O6").lat;
  Bitset seed_chain(6);
  seed_chain.set(O6.index_of("a"));
  seed_chain.set(O6.index_of("b"));
  GeneratedFilter fc = filter_generated(O6, seed_chain);
  CHECK(fc.proper);
  CHECK(fc.members == upset(O6, O6.index_of("a")));

  CHECK_THROWS_AS(filter_generated(B4, Bitset(4)), ArgumentError);
}

TEST_CASE("is_proper_filter matches the definition on hand-picked sets") {
  const Lattice& L = catalog_algebra("B4").lat;
  Bitset just_top(4);
  just_top.set(3);
  CHECK(is_proper_filter(L, just_top));
  Bitset a_top(4);
  a_top.set(1);
  a_top.set(3);
  CHECK(is_proper_filter(L, a_top));
  Bitset ab_top = a_top;
  ab_top.set(2);
  CHECK(!is_proper_filter(L, ab_top));  // misses a ∧ b
  CHECK(!is_proper_filter(L, Bitset(4)));
  CHECK(!is_proper_filter(L, Bitset::full(4)));
}

TEST_CASE("prime filters split binary joins") {
  const Lattice& B4 = catalog_algebra("B4").lat;
  FilterClass up_a = classify_filter(B4, upset(B4, 1));
  CHECK(up_a.proper);
  CHECK(up_a.prime);
  CHECK(up_a.completely_prime);
  FilterClass up_top = classify_filter(B4, upset(B4, 3));
  CHECK(up_top.proper);
  CHECK(!up_top.prime);  // 1 = a ∨ b with neither join and present

  const Lattice& MO2 = catalog_algebra("MO2").lat;
  FilterSpectrum spec = enumerate_proper_filters(MO2);
  for (const Bitset& f : spec.filters) {
    FilterClass c = classify_filter(MO2, f);
    CHECK(!c.prime);  // every filter contains 1 = b ∨ b⊥ but not b or b⊥
  }
}

TEST_CASE("in finite lattices prime and completely prime coincide") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Lattice& L = catalog_algebra(name).lat;
    FilterSpectrum spec = enumerate_proper_filters(L);
    std::vector<bool> flags = prime_flags(L, spec);
    int primes = 0;
    for (int f = 0; f < spec.size(); ++f) {
      FilterClass c = classify_filter(L, spec.filters[f]);
      CHECK(c.prime == flags[f]);
      CHECK(c.completely_prime == c.prime);
      primes += flags[f] ? 1 : 0;
    }
    if (name == std::string("PS4")) CHECK(primes == 4);  // the four atoms
    if (name == std::string("MO2")) CHECK(primes == 0);
  }
}

TEST_CASE("classify_filter rejects non-filters and oversized scans") {
  const Lattice& L = catalog_algebra("B4").lat;
  Bitset not_up(4);
  not_up.set(1);  // {a} is not upward closed
  CHECK_THROWS_AS(classify_filter(L, not_up), ArgumentError);

  const Lattice& big = catalog_algebra("PS4").lat;
  Limits tight;
  tight.max_scan = 100;
  CHECK_THROWS_AS(classify_filter(big, upset(big, 1), tight), ResourceGuardError);
}

TEST_CASE("the subset cross-check is skipped under a tight scan guard") {
  const Lattice& L = catalog_algebra("PS4").lat;
  Limits tight;
  tight.max_scan = 100;
  FilterSpectrum spec = enumerate_proper_filters(L, tight);
  CHECK(spec.size() == 15);
  CHECK(!spec.oracle_checked);
}
