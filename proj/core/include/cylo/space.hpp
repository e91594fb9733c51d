#pragma once

#include <string>
#include <vector>

#include "cylo/bitset.hpp"
#include "cylo/frame.hpp"
#include "cylo/report.hpp"

namespace cylo {

/// Finite topological space with its opens materialized from a basis, plus
/// the optional relational decorations (orthogonality for the ortholattice
/// track, equivalence relations for the Boolean track, diagonal sets for
/// both).
struct FiniteSpace {
  std::string name;
  std::vector<std::string> points;
  std::vector<Bitset> basis;  // deduplicated, input order
  std::vector<Bitset> opens;  // canonical order; all unions of basis members

  std::vector<Bitset> perp;                 // empty when undecorated
  std::vector<std::vector<Bitset>> rels;    // R_i (UVO) or S_i (UV)
  std::vector<std::vector<Bitset>> deltas;  // [i][k]

  int n() const { return static_cast<int>(points.size()); }
  int dims() const { return static_cast<int>(rels.size()); }
  bool has_perp() const { return !perp.empty(); }
};

/// Builds the space and generates its opens (all unions of basis members,
/// plus the empty set). The basis must cover the point set and satisfy the
/// basis criterion (every point of an intersection of two basics lies in a
/// basic inside the intersection); violations raise StructuralError with the
/// offending sets named.
FiniteSpace make_space(std::string name, std::vector<std::string> points,
                       std::vector<Bitset> basis, const Limits& lim = {});

/// The frame view of a perp-decorated space.
CylindricOrthoFrame frame_of(const FiniteSpace& X);

/// up_rows[x] = {y : x <= y} in the specialization order (x <= y iff every
/// open containing x contains y; it suffices to intersect the basics
/// containing x).
std::vector<Bitset> specialization_upsets(const FiniteSpace& X);

/// Interior, closure, and star with respect to the upset topology of an
/// order given by its up rows.
Bitset upset_interior(const std::vector<Bitset>& up_rows, const Bitset& u);
Bitset upset_closure(const std::vector<Bitset>& up_rows, const Bitset& u);
Bitset upset_star(const std::vector<Bitset>& up_rows, const Bitset& u);

/// Exhaustive checks of the upset-operator identities on all subsets when
/// the powerset fits the scan guard, otherwise on the opens family:
/// Int(U) = X \ Cl(X \ U), U ⊆ Cl(U), Int idempotent, U* = Int(X \ U).
ValidationReport verify_upset_operators(const FiniteSpace& X, const Limits& lim = {});

/// The derived open set families. CO is computed by a literal cover scan
/// (never silently assumed equal to the opens): for each open U, the
/// subfamilies of {basic B : B ⊆ U} are enumerated within the scan budget,
/// and every cover of U admits a finite subcover, namely itself. The scan
/// reports whether the enumeration was exhaustive. COB requires the perp
/// decoration and is empty without it; REG and COREG are taken with respect
/// to the specialization order.
struct OpenFamilies {
  std::vector<Bitset> co;
  std::vector<Bitset> cob;
  std::vector<Bitset> reg;
  std::vector<Bitset> coreg;
  bool co_scan_exhaustive = true;
  std::string co_note;
};

OpenFamilies open_families(const FiniteSpace& X, const Limits& lim = {});

/// T0, compact (literal basic-cover scan), coherent (compact opens form an
/// ∩-closed basis), sober (the completely prime filters of the compact-open
/// lattice are exactly the neighborhood filters, one per point). Check ids
/// are "spectral.*".
ValidationReport is_spectral(const FiniteSpace& X, const Limits& lim = {});

/// The monadic/cylindric UVO-space battery: frame axioms (under "frame."),
/// T0, COB a basis closed under ∩ and perp, filter realization, the
/// separation and relational witness conditions, R_i[U] ∈ COB, and
/// Δ_ik ∈ CO. Requires the perp decoration.
ValidationReport validate_uvo(const FiniteSpace& X, const Limits& lim = {});

/// The (cylindric) UV-space battery: T0, COREG a basis closed under ∩ and
/// star, filter realization, S_i equivalences and commutation, the diagonal
/// conditions, the disjointness condition, S_i[U] ∈ COREG, the relational
/// witness condition, and Δ_ik ∈ CO. Check ids are "uv.*".
ValidationReport validate_uv(const FiniteSpace& X, const Limits& lim = {});

}  // namespace cylo
