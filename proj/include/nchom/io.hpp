#pragma once

#include "nchom/potential.hpp"

namespace nchom {

// Presentation files:
//   field Q | field F <p>
//   gens <name>...
//   order <name>...        (optional; descending significance)
//   degree <s>
//   rel <poly>             (one per relation)
// '#' starts a comment; blank lines are ignored.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

// Potential files replace the rel lines with
//   sigma <a> <b> <c> <d>  (row-major 2x2, scalars as int or int/int)
//   w <poly>
TwistedPotential parse_potential(const std::string& text);
TwistedPotential load_potential(const std::string& path);
std::string potential_to_text(const TwistedPotential& tp);

std::string read_file(const std::string& path);

// scalar literal: int or int/int
Scalar parse_scalar_text(Field f, const std::string& text);

}  // namespace nchom
