#pragma once

#include <string>
#include <variant>

#include "cylo/algebra.hpp"
#include "cylo/duality.hpp"
#include "cylo/frame.hpp"
#include "cylo/report.hpp"
#include "cylo/space.hpp"

namespace cylo {

/// One parsed input: an algebra, a frame, a space, a homomorphism, or a
/// point map. The JSON envelope is {"format": "cylo/1", "kind": ...} with
/// the payload under the key named like the kind.
using Document =
    std::variant<CylindricOrtholattice, CylindricOrthoFrame, FiniteSpace, AlgebraHom, SpaceMap>;

Document parse_document(const std::string& text, const Limits& lim = {});
Document load_document(const std::string& path, const Limits& lim = {});

std::string to_json(const CylindricOrtholattice& A);
std::string to_json(const CylindricOrthoFrame& X);
std::string to_json(const FiniteSpace& X);
std::string to_json(const AlgebraHom& h);
std::string to_json(const SpaceMap& f);
std::string to_json(const Document& doc);

const char* kind_of(const Document& doc);

}  // namespace cylo
