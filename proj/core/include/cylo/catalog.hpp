#pragma once

#include <string>
#include <vector>

#include "cylo/algebra.hpp"

namespace cylo {

/// Built-in examples: the Boolean cubes B2, B4, B8, the horizontal sum MO2,
/// the benzene ring O6, the two-dimensional powerset algebra PS4 on four
/// points, a twelve-element modular ortholattice with one quantifier, and
/// trivially quantified two-dimensional copies. Unknown names raise
/// ArgumentError.
std::vector<std::string> catalog_names();
CylindricOrtholattice catalog_algebra(const std::string& name);

std::vector<std::string> catalog_hom_names();
AlgebraHom catalog_hom(const std::string& name);

/// Deliberately broken copies of catalog entries. `expected_axiom` is the
/// check id that a validator run must report as the first failure.
struct CatalogMutant {
  std::string name;
  std::string expected_axiom;
  std::vector<std::string> expected_witness;
  CylindricOrtholattice algebra;
};

std::vector<std::string> catalog_mutant_names();
CatalogMutant catalog_mutant(const std::string& name);

}  // namespace cylo
