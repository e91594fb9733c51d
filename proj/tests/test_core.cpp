#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cylo/algebra.hpp"
#include "cylo/catalog.hpp"
#include "cylo/lattice.hpp"

using namespace cylo;

namespace {

/// First failing check of a report, or nullptr.
const CheckResult* first_failure(const ValidationReport& rep) {
  for (const auto& c : rep.checks())
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("bitset canonical order sorts by ascending member lists") {
  Bitset a(5), b(5), e(5);
  a.set(1);
  a.set(3);
  b.set(2);
  CHECK(Bitset::lex_less(e, b));      // {} before {2}
  CHECK(Bitset::lex_less(a, b));      // {1,3} before {2}
  CHECK(!Bitset::lex_less(b, a));
  CHECK(!Bitset::lex_less(a, a));
  Bitset a2 = a;
  a2.set(4);
  CHECK(Bitset::lex_less(a, a2));     // {1,3} before {1,3,4}
}

TEST_CASE("B4 lattice tables") {
  CylindricOrtholattice A = catalog_algebra("B4");
  const Lattice& L = A.lat;
  CHECK(L.size() == 4);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 3);
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.name(1) == "a");
  CHECK(L.index_of("b") == 2);
  CHECK(L.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(A.comp(1) == 2);
}

TEST_CASE("a poset without least upper bounds is rejected") {
  // 0 < a, b < c, d: the pair (a, b) has two minimal upper bounds.
  CHECK_THROWS_AS(Lattice({"0", "a", "b", "c", "d"},
                          {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}),
                  StructuralError);
}

TEST_CASE("user tables are cross-checked against the derived ones") {
  std::vector<int> bad_meet = {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3};
  bad_meet[1 * 4 + 3] = 0;  // claims a ∧ 1 = 0
  std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  CHECK_THROWS_AS(Lattice({"0", "a", "b", "1"}, covers, &bad_meet, nullptr), StructuralError);
}

TEST_CASE("from_inclusion agrees with mask arithmetic on the powerset of four points") {
  CylindricOrtholattice A = catalog_algebra("PS4");
  const Lattice& L = A.lat;
  REQUIRE(L.size() == 16);
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      CHECK(L.meet(x, y) == (x & y));
      CHECK(L.join(x, y) == (x | y));
      CHECK(L.leq(x, y) == ((x & y) == x));
    }
  CHECK(L.name(0) == "0");
  CHECK(L.name(9) == "00+11");
  CHECK(L.name(15) == "1");
}

TEST_CASE("every catalog algebra passes its axiom battery") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    ValidationReport rep = validate_cylindric(catalog_algebra(name));
    const CheckResult* f = first_failure(rep);
    std::string why = f ? f->axiom + ": " + f->detail : "";
    CAPTURE(why);
    CHECK(rep.ok());
  }
}

TEST_CASE("every catalog homomorphism passes") {
  for (const auto& name : catalog_hom_names()) {
    CAPTURE(name);
    ValidationReport rep = validate_homomorphism(catalog_hom(name));
    const CheckResult* f = first_failure(rep);
    std::string why = f ? f->axiom + ": " + f->detail : "";
    CAPTURE(why);
    CHECK(rep.ok());
  }
}

TEST_CASE("each mutant fails first at its expected axiom") {
  for (const auto& name : catalog_mutant_names()) {
    CatalogMutant m = catalog_mutant(name);
    CAPTURE(m.name);
    ValidationReport rep = validate_cylindric(m.algebra);
    const CheckResult* f = first_failure(rep);
    REQUIRE(f != nullptr);
    CHECK(f->axiom == m.expected_axiom);
    CHECK(f->witness == m.expected_witness);
  }
}

TEST_CASE("MO2 fails distributivity at the least witness") {
  CylindricOrtholattice A = catalog_algebra("MO2");
  DistributivityResult d = is_distributive(A);
  REQUIRE(!d.distributive);
  CHECK(A.lat.name(d.witness[0]) == "a");
  CHECK(A.lat.name(d.witness[1]) == "a⊥");
  CHECK(A.lat.name(d.witness[2]) == "b");
}

TEST_CASE("Boolean cubes and PS4 are distributive, O6 and mOL12 are not Boolean-flagged") {
  CHECK(is_distributive(catalog_algebra("B8")).distributive);
  CHECK(is_distributive(catalog_algebra("PS4")).distributive);
  CHECK(!is_distributive(catalog_algebra("MO2")).distributive);
  CHECK(catalog_algebra("PS4").boolean_axiom5);
  CHECK(!catalog_algebra("O6").boolean_axiom5);
}

TEST_CASE("closed elements form sub-ortholattices") {
  CylindricOrtholattice ps4 = catalog_algebra("PS4");
  Bitset c0 = closed_elements(ps4, ps4.exists[0]);
  CHECK(c0.count() == 4);  // unions of the two columns
  CHECK(c0.test(0));
  CHECK(c0.test(5));
  CHECK(c0.test(10));
  CHECK(c0.test(15));

  CylindricOrtholattice m = catalog_algebra("mOL12");
  Bitset cm = closed_elements(m, m.exists[0]);
  CHECK(cm.count() == 8);
  CHECK(!cm.test(m.lat.index_of("p2")));
  CHECK(cm.test(m.lat.index_of("q5")));
}

TEST_CASE("an invalid quantifier is rejected by closed_elements") {
  CylindricOrtholattice A = catalog_algebra("B4");
  std::vector<int> bad = {0, 0, 2, 3};  // fixed points {0, b, 1} are not ⊥-closed
  CHECK_THROWS_AS(closed_elements(A, bad), StructuralError);
}

TEST_CASE("unknown catalog names raise ArgumentError") {
  CHECK_THROWS_AS(catalog_algebra("nope"), ArgumentError);
  CHECK_THROWS_AS(catalog_hom("nope"), ArgumentError);
  CHECK_THROWS_AS(catalog_mutant("m11"), ArgumentError);
}
