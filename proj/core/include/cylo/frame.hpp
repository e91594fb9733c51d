#pragma once

#include <string>
#include <vector>

#include "cylo/algebra.hpp"
#include "cylo/bitset.hpp"
#include "cylo/report.hpp"

namespace cylo {

/// Relational frame: an orthogonality relation, one reflexive-transitive
/// relation per dimension, and one diagonal point set per dimension pair.
/// Relations are stored as successor rows.
struct CylindricOrthoFrame {
  std::string name;
  std::vector<std::string> points;
  std::vector<Bitset> perp;                // perp[x] = {y : x ⊥ y}
  std::vector<std::vector<Bitset>> rels;   // rels[i][x] = {y : x R_i y}
  std::vector<std::vector<Bitset>> deltas; // deltas[i][k] ⊆ points

  int n() const { return static_cast<int>(points.size()); }
  int dims() const { return static_cast<int>(rels.size()); }
};

/// {x : x ⊥ y for every y in u}.
Bitset perp_set(const CylindricOrthoFrame& X, const Bitset& u);

/// u^⊥⊥; a closure operator whose fixed points are the biorthogonally
/// closed sets.
Bitset biclosure(const CylindricOrthoFrame& X, const Bitset& u);

/// R_i[u].
Bitset rel_image(const std::vector<Bitset>& rel, const Bitset& u);

/// The family B(X) of biorthogonally closed sets, in canonical order.
/// Generated as all intersections of the sets {x}^⊥ together with X.
std::vector<Bitset> enumerate_bclosed(const CylindricOrthoFrame& X, const Limits& lim = {});

ValidationReport validate_frame(const CylindricOrthoFrame& X);

/// Algebra whose carrier is a family of point sets. Element ids follow the
/// canonical set order; `sets` maps ids back to the underlying sets.
struct SetAlgebra {
  CylindricOrtholattice alg;
  std::vector<Bitset> sets;
  std::vector<std::string> point_names;

  int index_of(const Bitset& s) const;
};

std::string set_name(const std::vector<std::string>& point_names, const Bitset& s);

/// Complete algebra on B(X): meet is intersection, join is the biclosure of
/// the union, complement is ^⊥, quantifiers are x ↦ R_i[x]^⊥⊥, diagonal
/// constants are the frame's Δ sets.
SetAlgebra bclosed_algebra(const CylindricOrthoFrame& X, const Limits& lim = {});

/// Frame on the proper filters of A: x ⊥ y iff some a in x has a⊥ in y,
/// x R_i y iff ∃_i[x] ⊆ y, Δ_ik = {x : δ_ik in x}.
CylindricOrthoFrame goldblatt_frame(const CylindricOrtholattice& A, const Limits& lim = {});

}  // namespace cylo
