#pragma once

#include <string>
#include <vector>

#include "cylo/algebra.hpp"
#include "cylo/bitset.hpp"
#include "cylo/completion.hpp"
#include "cylo/report.hpp"
#include "cylo/space.hpp"

namespace cylo {

/// A named point function between decorated spaces. Validity is established
/// by validate_uvo_map / validate_uv_map, never assumed.
struct SpaceMap {
  std::string name;
  FiniteSpace source, target;
  std::vector<int> map;  // source point -> target point
};

/// The spectrum of an algebra: its Goldblatt frame under the topology
/// generated by the image sets {x : a in x}.
FiniteSpace spectrum_space(const CylindricOrtholattice& A, const Limits& lim = {});

/// The Boolean-track spectrum: proper filters with the equivalences
/// x S_i y iff ∃_i[x] = ∃_i[y] and the diagonal point sets. Raises
/// ContractError unless A passes the full cylindric Boolean battery
/// (distributivity and the diagonal disjointness axiom included).
FiniteSpace boolean_spectrum(const CylindricOrtholattice& A, const Limits& lim = {});

/// The algebra on the compact open biorthogonally closed sets of a
/// perp-decorated space: meet is intersection, join is the least member
/// above a union, complement is perp, quantifiers are U -> R_i[U]^⊥⊥,
/// diagonals are the Δ sets.
SetAlgebra cob_algebra(const FiniteSpace& X, const Limits& lim = {});

/// The algebra on the compact open regular open sets: complement is star,
/// quantifiers are U -> S_i[U], join is the least member above a union.
SetAlgebra coreg_algebra(const FiniteSpace& X, const Limits& lim = {});

/// Certificate that a named element map is an isomorphism; carries the
/// explicit table so consumers can re-verify without recomputation.
struct IsoCertificate {
  std::string subject;
  std::vector<int> table;  // source element id -> target element id
  std::vector<std::string> source_names, target_names;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};

/// φ: A -> algebra on COB of the spectrum; bijectivity, image coverage, and
/// full operation preservation. Check ids are "rep.*".
IsoCertificate verify_representation_ol(const CylindricOrtholattice& A, const Limits& lim = {});

/// φ: A -> algebra on COREG of the Boolean spectrum.
IsoCertificate verify_representation_ba(const CylindricOrtholattice& A, const Limits& lim = {});

/// Certificate that ψ(x) = {U : x in U} is a relational homeomorphism onto
/// the spectrum of the dual algebra. Check ids are "real.*".
struct HomeoCertificate {
  std::string subject;
  std::vector<int> table;  // source point -> target point
  std::vector<std::string> source_points, target_points;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};

HomeoCertificate verify_realization_ol(const FiniteSpace& X, const Limits& lim = {});
HomeoCertificate verify_realization_ba(const FiniteSpace& X, const Limits& lim = {});

/// The dual of a homomorphism h: the preimage map x -> h⁻¹[x] between
/// spectra (contravariant). StructuralError if a preimage fails to be a
/// proper filter, which signals an invalid h.
SpaceMap dual_of_hom(const AlgebraHom& h, const Limits& lim = {});
SpaceMap dual_of_hom_ba(const AlgebraHom& h, const Limits& lim = {});

/// The dual of a point map f: the preimage map U -> f⁻¹[U] between the dual
/// algebras (contravariant). StructuralError if a preimage leaves the
/// family.
AlgebraHom dual_of_map(const SpaceMap& f, const Limits& lim = {});
AlgebraHom dual_of_map_ba(const SpaceMap& f, const Limits& lim = {});

/// Spectral-map condition, preservation of non-orthogonality, the perp
/// back-witness condition, commutation with the relations on compact open
/// biorthogonally closed sets of the target, and diagonal preimages; plus
/// the derived preimage-stays-in-family property. Check ids are "map.*".
ValidationReport validate_uvo_map(const SpaceMap& f, const Limits& lim = {});

/// Spectral-map condition, the specialization lift condition, commutation
/// with the equivalences on compact open regular opens of the target, and
/// diagonal preimages; plus the derived preimage property.
ValidationReport validate_uv_map(const SpaceMap& f, const Limits& lim = {});

/// The commuting squares of the dual equivalence, checked pointwise:
/// φ′∘h agrees with the double dual of h transported along φ, and ψ′∘f
/// agrees with the double dual of f transported along ψ.
ValidationReport verify_hom_square(const AlgebraHom& h, const Limits& lim = {});
ValidationReport verify_map_square(const SpaceMap& f, const Limits& lim = {});
ValidationReport verify_hom_square_ba(const AlgebraHom& h, const Limits& lim = {});
ValidationReport verify_map_square_ba(const SpaceMap& f, const Limits& lim = {});

/// The Boolean-track completion: the embedding of A into the complete
/// algebra on the regular opens of its Boolean spectrum, with density and
/// compactness certificates on the RegUpset track.
CanonicalCompletion reg_completion_ba(const CylindricOrtholattice& A, const Limits& lim = {});

/// The two closure families over the proper-filter points: biorthogonally
/// closed sets of the Goldblatt frame, and regular opens of the
/// filter-inclusion upset topology. No distributivity gate; callers that
/// assert equality should use check_coincidence.
struct CoincidenceResult {
  std::vector<std::string> point_names;
  std::vector<Bitset> bclosed;  // canonical order
  std::vector<Bitset> regs;     // canonical order
  bool equal = false;
};

CoincidenceResult coincidence_families(const CylindricOrtholattice& A, const Limits& lim = {});

/// Asserts the two families coincide. ContractError when A is not
/// distributive, since the claim is made for Boolean algebras only.
ValidationReport check_coincidence(const CylindricOrtholattice& A, const Limits& lim = {});

}  // namespace cylo
