#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cylo/catalog.hpp"
#include "cylo/duality.hpp"
#include "cylo/space.hpp"

using namespace cylo;

namespace {

const CheckResult* first_failure(const ValidationReport& rep) {
  for (const auto& c : rep.checks())
    if (!c.pass) return &c;
  return nullptr;
}

Bitset set_of(int n, std::initializer_list<int> xs) {
  Bitset s(n);
  for (int x : xs) s.set(x);
  return s;
}

FiniteSpace sierpinski() {
  return make_space("sierpinski", {"s0", "s1"}, {set_of(2, {1}), set_of(2, {0, 1})});
}

}  // namespace

TEST_CASE("make_space materializes all unions of the basis") {
  FiniteSpace X = sierpinski();
  REQUIRE(X.opens.size() == 3);
  CHECK(X.opens[0] == set_of(2, {}));
  CHECK(X.opens[1] == set_of(2, {0, 1}));
  CHECK(X.opens[2] == set_of(2, {1}));
  CHECK(!X.has_perp());
  CHECK(X.dims() == 0);
}

TEST_CASE("a family violating the basis criterion is rejected") {
  // {x,y} ∩ {y,z} = {y} contains no basic around y inside the intersection.
  CHECK_THROWS_AS(make_space("bad", {"x", "y", "z"},
                             {set_of(3, {0, 1}), set_of(3, {1, 2})}),
                  StructuralError);
  // Coverage failure: y lies in no basic at all.
  CHECK_THROWS_AS(make_space("uncovered", {"x", "y"}, {set_of(2, {0})}), StructuralError);
}

TEST_CASE("specialization order of the Sierpinski space") {
  FiniteSpace X = sierpinski();
  std::vector<Bitset> up = specialization_upsets(X);
  CHECK(up[0] == set_of(2, {0, 1}));  // every open around s0 contains s1
  CHECK(up[1] == set_of(2, {1}));
}

TEST_CASE("upset interior, closure, and star agree with hand values") {
  FiniteSpace X = sierpinski();
  std::vector<Bitset> up = specialization_upsets(X);
  CHECK(upset_interior(up, set_of(2, {1})) == set_of(2, {1}));
  CHECK(upset_interior(up, set_of(2, {0})) == set_of(2, {}));
  CHECK(upset_closure(up, set_of(2, {1})) == set_of(2, {0, 1}));
  CHECK(upset_closure(up, set_of(2, {0})) == set_of(2, {0}));
  CHECK(upset_star(up, set_of(2, {1})) == set_of(2, {}));
  CHECK(upset_star(up, set_of(2, {})) == set_of(2, {0, 1}));
  CHECK(verify_upset_operators(X).ok());
}

TEST_CASE("the regular opens of the Sierpinski space are trivial") {
  FiniteSpace X = sierpinski();
  OpenFamilies fam = open_families(X);
  REQUIRE(fam.reg.size() == 2);
  CHECK(fam.reg[0] == set_of(2, {}));
  CHECK(fam.reg[1] == set_of(2, {0, 1}));
  // All three opens of a finite space are compact.
  CHECK(fam.co.size() == 3);
  CHECK(fam.cob.empty());  // no orthogonality decoration
}

TEST_CASE("open family sizes for the spectra of the catalog algebras") {
  FiniteSpace s_b4 = spectrum_space(catalog_algebra("B4"));
  CHECK(s_b4.opens.size() == 5);
  OpenFamilies f_b4 = open_families(s_b4);
  CHECK(f_b4.co.size() == 5);
  CHECK(f_b4.cob.size() == 4);
  CHECK(f_b4.reg.size() == 4);
  CHECK(f_b4.coreg.size() == 4);

  FiniteSpace s_mo2 = spectrum_space(catalog_algebra("MO2"));
  CHECK(open_families(s_mo2).cob.size() == 6);

  // Opens of the PS4 spectrum correspond to the nonempty downsets of the
  // subset lattice 2^4; that is the Dedekind number 168 minus one for the
  // collapse of the two downsets {} and {∅} to the empty open.
  FiniteSpace s_ps4 = spectrum_space(catalog_algebra("PS4"));
  CHECK(s_ps4.opens.size() == 167);
  OpenFamilies f_ps4 = open_families(s_ps4);
  CHECK(f_ps4.cob.size() == 16);

  FiniteSpace f0_ps4 = boolean_spectrum(catalog_algebra("PS4"));
  CHECK(f0_ps4.opens.size() == 167);  // same φ basis, same topology
  CHECK(open_families(f0_ps4).coreg.size() == 16);
}

TEST_CASE("spectra of catalog algebras are spectral spaces") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    ValidationReport rep = is_spectral(spectrum_space(catalog_algebra(name)));
    const CheckResult* f = first_failure(rep);
    std::string why = f ? f->axiom + ": " + f->detail : "";
    CAPTURE(why);
    CHECK(rep.ok());
  }
}

TEST_CASE("spectra of catalog algebras pass the UVO battery") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    ValidationReport rep = validate_uvo(spectrum_space(catalog_algebra(name)));
    const CheckResult* f = first_failure(rep);
    std::string why = f ? f->axiom + ": " + f->detail : "";
    CAPTURE(why);
    CHECK(rep.ok());
  }
}

TEST_CASE("Boolean spectra of Boolean catalog entries pass the UV battery") {
  for (const auto& name : {"PS4", "PS4-swapdims", "B2-triv2", "B4-triv2", "B8-triv2"}) {
    CAPTURE(name);
    ValidationReport rep = validate_uv(boolean_spectrum(catalog_algebra(name)));
    const CheckResult* f = first_failure(rep);
    std::string why = f ? f->axiom + ": " + f->detail : "";
    CAPTURE(why);
    CHECK(rep.ok());
  }
}

TEST_CASE("a discrete space with an empty orthogonality fails the COB basis check") {
  FiniteSpace X = make_space("discrete2", {"x", "y"}, {set_of(2, {0}), set_of(2, {1})});
  X.perp = {Bitset(2), Bitset(2)};  // nothing orthogonal to anything
  ValidationReport rep = validate_uvo(X);
  CHECK(!rep.ok());
  const CheckResult* f = rep.find("uvo.basis");
  REQUIRE(f != nullptr);
  CHECK(!f->pass);
  CHECK(f->witness == std::vector<std::string>{"{x}"});
}

TEST_CASE("a tampered diagonal breaks the UV composition law with a witness") {
  FiniteSpace X = boolean_spectrum(catalog_algebra("B4-triv2"));
  REQUIRE(X.dims() == 2);
  // Point 0 is ↑a; {↑a} is regular open, so only the composition law breaks.
  Bitset just_a(3);
  just_a.set(0);
  X.deltas[0][1] = just_a;
  X.deltas[1][0] = just_a;
  ValidationReport rep = validate_uv(X);
  CHECK(!rep.ok());
  const CheckResult* reg = rep.find("uv.delta-regular");
  REQUIRE(reg != nullptr);
  CHECK(reg->pass);
  const CheckResult* sym = rep.find("uv.delta-symmetric");
  REQUIRE(sym != nullptr);
  CHECK(sym->pass);
  const CheckResult* f = rep.find("uv.delta-compose");
  REQUIRE(f != nullptr);
  CHECK(!f->pass);
  CHECK(f->witness == std::vector<std::string>{"0", "1", "0"});
}

TEST_CASE("an indiscrete pair of points fails T0") {
  FiniteSpace X = make_space("indiscrete", {"x", "y"}, {set_of(2, {0, 1})});
  ValidationReport rep = is_spectral(X);
  const CheckResult* f = rep.find("spectral.t0");
  REQUIRE(f != nullptr);
  CHECK(!f->pass);
  CHECK(f->witness == std::vector<std::string>{"x", "y"});
}

TEST_CASE("validate_uvo refuses a space without orthogonality") {
  CHECK_THROWS_AS(validate_uvo(sierpinski()), ArgumentError);
}

TEST_CASE("the family guard bounds the opens enumeration") {
  Limits tight;
  tight.max_family = 20;
  CHECK_THROWS_AS(spectrum_space(catalog_algebra("PS4"), tight), ResourceGuardError);
}
