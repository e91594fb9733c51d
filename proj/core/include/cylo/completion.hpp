#pragma once

#include <string>
#include <vector>

#include "cylo/algebra.hpp"
#include "cylo/bitset.hpp"
#include "cylo/frame.hpp"
#include "cylo/report.hpp"

namespace cylo {

/// How the complete target algebra forms joins and which open witnesses the
/// density certificate uses. Biortho targets live on biorthogonally closed
/// point sets ordered by inclusion (join = biclosure of union); RegUpset
/// targets live on regular opens of an upset topology (join = interior of
/// closure of union).
enum class CompletionTrack { Biortho, RegUpset };

/// An embedding e of a finite algebra into a complete algebra carried by
/// point sets, together with the data the density and compactness
/// certificates consume. Points are proper filters of the source; `phi`
/// realizes e(a) = {x : a in x} by target element id.
struct Embedding {
  CylindricOrtholattice source;
  SetAlgebra target;
  std::vector<int> phi;               // source id -> target id
  std::vector<Bitset> point_filters;  // point -> member set over source ids
  Bitset closed_k;                    // target ids that are meets of image elements
  CompletionTrack track = CompletionTrack::Biortho;
  std::vector<Bitset> perp_rows;  // Biortho: perp_rows[y] = {x : x perp y}
  std::vector<Bitset> up_rows;    // RegUpset: up_rows[x] = {y : x <= y}
};

/// Target ids reachable as meets of image elements; the closed-element
/// family of a completion.
Bitset image_meet_closure(const Lattice& C, const std::vector<int>& phi);

/// The embedding of A into the complete algebra on the biorthogonally
/// closed subsets of its Goldblatt frame, with the closed-element family
/// enumerated as the meet closure of the image.
Embedding canonical_embedding(const CylindricOrtholattice& A, const Limits& lim = {});

/// Injectivity plus preservation of bounds, meet, join, orthocomplement,
/// quantifiers, and diagonals. Check ids are "embed.*".
ValidationReport verify_embedding(const Embedding& E);

/// Density: every target element is a join of meets and a meet of joins of
/// image elements. The join-of-meets direction uses the canonical closed
/// witnesses k_x = meet{e(a) : a in x} for the points x inside the element;
/// the meet-of-joins direction uses per-point open witnesses (the perp of a
/// point on the Biortho track, the join of {e(c) : c not in y} on the
/// RegUpset track). Check ids are "dense.*".
ValidationReport verify_dense(const Embedding& E);

/// Compactness: whenever meet e[S] <= join e[T] for subsets S, T of the
/// source, finite witness subfamilies exist; the scan takes S' = S, T' = T.
/// All subset pairs are scanned when the source has at most 12 elements or
/// the pair count fits the scan guard; beyond that a fixed-seed sample of
/// pairs is scanned and the coverage check says so. Check ids are
/// "compact.witness" and "compact.coverage".
ValidationReport verify_compact(const Embedding& E, const Limits& lim = {});

struct CanonicalCompletion {
  Embedding embedding;
  /// embed.*, dense.*, compact.* certificates plus the target's own axiom
  /// battery under "target.".
  ValidationReport certificates;
};

/// The canonical completion of A: the embedding into the algebra on the
/// biorthogonally closed subsets of the Goldblatt frame, with all
/// certificates evaluated.
CanonicalCompletion canonical_completion(const CylindricOrtholattice& A, const Limits& lim = {});

/// The upper canonical extension of orthocomplement and the lower canonical
/// extension of each quantifier, evaluated literally over the closed-element
/// family:
///
///   ocomp_sigma(u)     = meet{ join{e(b⊥)  : c <= e(b)} : c <= u, c closed }
///   exists_sigma[i](u) = join{ meet{e(∃ᵢb) : c <= e(b)} : c <= u, c closed }
///
/// `agreement` compares both maps pointwise against the target's concrete
/// operations (check ids "extension.ocomp", "extension.exists").
struct CanonicalExtensionOps {
  std::vector<int> ocomp_sigma;               // target id -> target id
  std::vector<std::vector<int>> exists_sigma; // [dim][target id]
  ValidationReport agreement;
};

CanonicalExtensionOps canonical_extension_ops(const Embedding& E);

}  // namespace cylo
