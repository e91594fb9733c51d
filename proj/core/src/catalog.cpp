#include "cylo/catalog.hpp"

#include <array>
#include <utility>

#include "cylo/bitset.hpp"
#include "cylo/report.hpp"

namespace cylo {

namespace {

Ortholattice ol(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers,
                std::vector<int> comp) {
  Ortholattice A;
  A.lat = Lattice(std::move(names), covers);
  A.ocomp = std::move(comp);
  return A;
}

Ortholattice b2() { return ol({"0", "1"}, {{0, 1}}, {1, 0}); }

Ortholattice b4() { return ol({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 2, 1, 0}); }

Ortholattice b8() {
  return ol({"0", "p", "q", "r", "q+r", "p+r", "p+q", "1"},
            {{0, 1},
             {0, 2},
             {0, 3},
             {1, 5},
             {1, 6},
             {2, 4},
             {2, 6},
             {3, 4},
             {3, 5},
             {4, 7},
             {5, 7},
             {6, 7}},
            {7, 4, 5, 6, 1, 2, 3, 0});
}

Ortholattice mo2() {
  return ol({"0", "a", "a⊥", "b", "b⊥", "1"},
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
            {5, 2, 1, 4, 3, 0});
}

Ortholattice o6() {
  return ol({"0", "a", "b", "b⊥", "a⊥", "1"}, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}},
            {5, 4, 3, 2, 1, 0});
}

Ortholattice mol12_ol() {
  // Atoms p1..p5, coatoms qi = pi⊥; p5 sits under q1..q4, each other pi
  // under q5 and one partner coatom.
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= 5; ++i) covers.push_back({0, i});
  for (int i = 6; i <= 10; ++i) covers.push_back({i, 11});
  covers.push_back({1, 9});   // p1 < q4
  covers.push_back({1, 10});  // p1 < q5
  covers.push_back({2, 8});   // p2 < q3
  covers.push_back({2, 10});
  covers.push_back({3, 7});  // p3 < q2
  covers.push_back({3, 10});
  covers.push_back({4, 6});  // p4 < q1
  covers.push_back({4, 10});
  covers.push_back({5, 6});  // p5 < q1..q4
  covers.push_back({5, 7});
  covers.push_back({5, 8});
  covers.push_back({5, 9});
  return ol({"0", "p1", "p2", "p3", "p4", "p5", "q1", "q2", "q3", "q4", "q5", "1"}, covers,
            {11, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5, 0});
}

CylindricOrtholattice mol12() {
  CylindricOrtholattice A = as_cylindric("mOL12", mol12_ol());
  // Closed elements {0, p1, p4, p5, q1, q4, q5, 1}; p2, p3 are sent to q5
  // and their complements to 1.
  A.exists = {{0, 1, 10, 10, 4, 5, 6, 11, 11, 9, 10, 11}};
  A.delta = {{A.lat.top()}};
  return A;
}

/// Powerset algebra of the four points 00, 01, 10, 11. Element ids are the
/// subset masks in point order; ∃_i frees coordinate i, δ01 is the diagonal
/// {00, 11}.
CylindricOrtholattice ps4(bool swapped) {
  const std::array<const char*, 4> pts{"00", "01", "10", "11"};
  std::vector<std::string> names(16);
  std::vector<Bitset> sets;
  sets.reserve(16);
  for (int m = 0; m < 16; ++m) {
    Bitset s(4);
    std::string label;
    for (int j = 0; j < 4; ++j)
      if ((m >> j) & 1) {
        s.set(j);
        if (!label.empty()) label += '+';
        label += pts[j];
      }
    names[m] = m == 0 ? "0" : m == 15 ? "1" : label;
    sets.push_back(s);
  }

  CylindricOrtholattice A;
  A.name = swapped ? "PS4-swapdims" : "PS4";
  A.lat = Lattice::from_inclusion(std::move(names), sets);
  A.ocomp.resize(16);
  for (int m = 0; m < 16; ++m) A.ocomp[m] = 15 ^ m;

  // Columns {00,10} and {01,11} are masks 5 and 10, rows {00,01} and
  // {10,11} are masks 3 and 12.
  auto cyl = [](int lo, int hi) {
    std::vector<int> e(16);
    for (int m = 0; m < 16; ++m) e[m] = ((m & lo) ? lo : 0) | ((m & hi) ? hi : 0);
    return e;
  };
  std::vector<int> e0 = cyl(5, 10), e1 = cyl(3, 12);
  if (swapped)
    A.exists = {std::move(e1), std::move(e0)};
  else
    A.exists = {std::move(e0), std::move(e1)};
  A.delta = {{15, 9}, {9, 15}};
  A.boolean_axiom5 = true;
  return A;
}

CylindricOrtholattice mo2_simple() {
  CylindricOrtholattice A = as_cylindric("MO2-simple", mo2());
  A.exists = {{0, 5, 5, 5, 5, 5}};
  A.delta = {{5}};
  return A;
}

CylindricOrtholattice triv2(const std::string& name, Ortholattice base, bool boolean) {
  CylindricOrtholattice A = trivial_cylindric(name, std::move(base), 2);
  A.boolean_axiom5 = boolean;
  return A;
}

/// Quantifier on B8 generated by a two-block atom partition: each element
/// maps to the join of the blocks it meets.
std::vector<int> b8_block_quantifier(int block_a, int block_b) {
  const Lattice lat = b8().lat;
  std::vector<int> e(8);
  for (int x = 0; x < 8; ++x) {
    int v = lat.bottom();
    if (lat.meet(x, block_a) != lat.bottom()) v = lat.join(v, block_a);
    if (lat.meet(x, block_b) != lat.bottom()) v = lat.join(v, block_b);
    e[x] = v;
  }
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"B2",  "B4",  "B8",  "MO2",      "O6",       "PS4",      "PS4-swapdims",
          "mOL12", "B2-triv2", "B4-triv2", "B8-triv2", "MO2-triv2", "O6-triv2",
          "MO2-simple"};
}

CylindricOrtholattice catalog_algebra(const std::string& name) {
  if (name == "B2") return as_cylindric("B2", b2());
  if (name == "B4") return as_cylindric("B4", b4());
  if (name == "B8") return as_cylindric("B8", b8());
  if (name == "MO2") return as_cylindric("MO2", mo2());
  if (name == "O6") return as_cylindric("O6", o6());
  if (name == "PS4") return ps4(false);
  if (name == "PS4-swapdims") return ps4(true);
  if (name == "mOL12") return mol12();
  if (name == "B2-triv2") return triv2("B2-triv2", b2(), true);
  if (name == "B4-triv2") return triv2("B4-triv2", b4(), true);
  if (name == "B8-triv2") return triv2("B8-triv2", b8(), true);
  if (name == "MO2-triv2") return triv2("MO2-triv2", mo2(), false);
  if (name == "O6-triv2") return triv2("O6-triv2", o6(), false);
  if (name == "MO2-simple") return mo2_simple();
  throw ArgumentError("unknown catalog algebra: " + name);
}

std::vector<std::string> catalog_hom_names() { return {"id-PS4", "incl-triv2", "swap-PS4"}; }

AlgebraHom catalog_hom(const std::string& name) {
  AlgebraHom h;
  h.name = name;
  if (name == "id-PS4") {
    h.source = catalog_algebra("PS4");
    h.target = catalog_algebra("PS4");
    h.map.resize(16);
    for (int m = 0; m < 16; ++m) h.map[m] = m;
    return h;
  }
  if (name == "incl-triv2") {
    h.source = catalog_algebra("B2-triv2");
    h.target = catalog_algebra("B4-triv2");
    h.map = {0, 3};
    return h;
  }
  if (name == "swap-PS4") {
    // Coordinate transposition (x, y) -> (y, x), i.e. point bits 1 and 2
    // swap; a homomorphism onto the dimension-swapped copy.
    h.source = catalog_algebra("PS4");
    h.target = catalog_algebra("PS4-swapdims");
    h.map.resize(16);
    for (int m = 0; m < 16; ++m)
      h.map[m] = (m & 9) | ((m & 2) ? 4 : 0) | ((m & 4) ? 2 : 0);
    return h;
  }
  throw ArgumentError("unknown catalog homomorphism: " + name);
}

std::vector<std::string> catalog_mutant_names() {
  return {"m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8", "m9", "m10"};
}

CatalogMutant catalog_mutant(const std::string& name) {
  CatalogMutant m;
  m.name = name;
  if (name == "m1") {
    // B4 with a declared self-orthogonal atom.
    m.algebra = as_cylindric("m1", b4());
    m.algebra.ocomp = {3, 1, 2, 0};
    m.expected_axiom = "ortho.meet-complement";
    m.expected_witness = {"a"};
    return m;
  }
  if (name == "m2") {
    // MO2 with the complement map turned into a 4-cycle on the atoms:
    // complement laws still hold, the involution does not.
    m.algebra = as_cylindric("m2", mo2());
    m.algebra.ocomp = {5, 2, 3, 4, 1, 0};
    m.expected_axiom = "ortho.involution";
    m.expected_witness = {"a"};
    return m;
  }
  if (name == "m3") {
    // O6 with the chains cross-paired: a is sent to the bottom of the other
    // chain, so the complement is no longer order reversing.
    m.algebra = as_cylindric("m3", o6());
    m.algebra.ocomp = {5, 3, 4, 1, 2, 0};
    m.expected_axiom = "ortho.antitone";
    m.expected_witness = {"a", "b"};
    return m;
  }
  if (name == "m4") {
    // ∃0 x = a ∨ x keeps join additivity but moves the bottom.
    m.algebra = catalog_algebra("B4-triv2");
    m.algebra.name = "m4";
    m.algebra.exists[0] = {1, 1, 3, 3};
    m.expected_axiom = "exists[0].zero";
    m.expected_witness = {};
    return m;
  }
  if (name == "m5") {
    // The simple quantifier on MO2 with b declared a fixed point; (∃b)⊥ is
    // then not closed.
    m.algebra = mo2_simple();
    m.algebra.name = "m5";
    m.algebra.exists[0][3] = 3;
    m.expected_axiom = "exists[0].closed-complement";
    m.expected_witness = {"b"};
    return m;
  }
  if (name == "m6") {
    // PS4 with the diagonal shrunk to {00}: still symmetric, but the
    // composition law ∃1(δ01 ∧ δ10) = δ00 fails.
    m.algebra = ps4(false);
    m.algebra.name = "m6";
    m.algebra.delta[0][1] = 1;
    m.algebra.delta[1][0] = 1;
    m.expected_axiom = "delta.compose";
    m.expected_witness = {"0", "1", "0"};
    return m;
  }
  if (name == "m7") {
    // PS4 with ∃1 coarsened to the simple quantifier; every single-dimension
    // axiom survives but the diagonal disjointness law breaks.
    m.algebra = ps4(false);
    m.algebra.name = "m7";
    for (int x = 1; x < 16; ++x) m.algebra.exists[1][x] = 15;
    m.expected_axiom = "axiom5";
    m.expected_witness = {"1", "0", "00"};
    return m;
  }
  if (name == "m8") {
    // Two overlapping block quantifiers on B8: individually valid, but they
    // do not commute.
    m.algebra = as_cylindric("m8", b8());
    m.algebra.exists = {b8_block_quantifier(6, 3), b8_block_quantifier(1, 4)};
    int top = m.algebra.lat.top();
    m.algebra.delta = {{top, top}, {top, top}};
    m.expected_axiom = "exists.commute";
    m.expected_witness = {"0", "1", "p"};
    return m;
  }
  if (name == "m9") {
    m.algebra = ps4(false);
    m.algebra.name = "m9";
    m.algebra.delta[1][0] = 1;
    m.expected_axiom = "delta.symmetric";
    m.expected_witness = {"0", "1"};
    return m;
  }
  if (name == "m10") {
    // MO2 with trivial quantifiers claims to be a cylindric Boolean algebra.
    m.algebra = triv2("m10", mo2(), true);
    m.expected_axiom = "distributive";
    m.expected_witness = {"a", "a⊥", "b"};
    return m;
  }
  throw ArgumentError("unknown catalog mutant: " + name);
}

}  // namespace cylo
