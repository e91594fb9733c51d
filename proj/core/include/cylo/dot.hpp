#pragma once

#include <string>

#include "cylo/algebra.hpp"
#include "cylo/frame.hpp"
#include "cylo/space.hpp"

namespace cylo {

/// Hasse diagram drawn bottom-up; orthocomplement pairs as dashed
/// undirected edges, diagonal constants listed in the graph label.
std::string to_dot(const CylindricOrtholattice& A);

/// Points with labeled R_i edges, dashed orthogonality edges, and diagonal
/// membership tags.
std::string to_dot(const CylindricOrthoFrame& X);

/// Specialization order drawn bottom-up with the frame decorations.
std::string to_dot(const FiniteSpace& X);

}  // namespace cylo
