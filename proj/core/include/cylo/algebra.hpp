#pragma once

#include <array>
#include <string>
#include <vector>

#include "cylo/lattice.hpp"
#include "cylo/report.hpp"

namespace cylo {

struct Ortholattice {
  Lattice lat;
  std::vector<int> ocomp;  // element id -> complement id

  int size() const { return lat.size(); }
  int comp(int a) const { return ocomp[a]; }
};

/// Ortholattice with a family of quantifiers and diagonal constants over the
/// index set {0, ..., dims-1}. dims may be zero, in which case the structure
/// is a plain ortholattice. `boolean_axiom5` records that the structure
/// claims to be a cylindric Boolean algebra; validate_cylindric then also
/// checks distributivity and the diagonal disjointness axiom.
struct CylindricOrtholattice : Ortholattice {
  std::string name;
  std::vector<std::vector<int>> exists;  // [dim][element]
  std::vector<std::vector<int>> delta;   // [i][k] -> element id
  bool boolean_axiom5 = false;

  int dims() const { return static_cast<int>(exists.size()); }
};

CylindricOrtholattice as_cylindric(std::string name, Ortholattice ol);

/// Decorates with dims copies of the identity quantifier and all-top
/// diagonals.
CylindricOrtholattice trivial_cylindric(std::string name, Ortholattice ol, int dims);

struct AlgebraHom {
  std::string name;
  CylindricOrtholattice source, target;
  std::vector<int> map;  // source id -> target id
};

ValidationReport validate_ortholattice(const Ortholattice& A);

struct DistributivityResult {
  bool distributive = true;
  std::array<int, 3> witness{-1, -1, -1};  // (a, b, c) with a&(b|c) != (a&b)|(a&c)
};
DistributivityResult is_distributive(const Ortholattice& A);

/// Checks the five quantifier axioms for the unary operation `exists`.
ValidationReport validate_quantifier(const Ortholattice& A, const std::vector<int>& exists,
                                     const std::string& subject);

/// Fixed points of a valid quantifier. Throws StructuralError when they fail
/// to form a sub-ortholattice, which signals an invalid quantifier.
Bitset closed_elements(const Ortholattice& A, const std::vector<int>& exists);

/// Full battery: ortholattice axioms, per-dimension quantifier axioms,
/// commutation, diagonal axioms, and when boolean_axiom5 is set also
/// distributivity and the diagonal disjointness axiom.
ValidationReport validate_cylindric(const CylindricOrtholattice& A);

ValidationReport validate_homomorphism(const AlgebraHom& h);

}  // namespace cylo
