#pragma once

#include <string>

#include "cylo/filters.hpp"
#include "cylo/lattice.hpp"
#include "cylo/report.hpp"

namespace cylo {

/// One line per check ("ok <axiom>" / "FAIL <axiom> [witness] -- detail")
/// plus a summary line.
std::string render_text(const ValidationReport& rep);

/// {"subject", "ok", "checks": [{"axiom", "pass", "witness", "detail"}]}.
std::string render_json(const ValidationReport& rep);

/// Filter table over the given lattice: name, members, prime flag.
std::string render_text(const Lattice& lat, const FilterSpectrum& spec);
std::string render_json(const Lattice& lat, const FilterSpectrum& spec);

}  // namespace cylo
