#pragma once

#include <string>

#include "g2t/curve.hpp"

namespace g2t {

// JSON curve description:
//   {
//     "p": 3, "a": 1,
//     "modulus": [0, 1],            // optional; must equal the canonical one
//     "model": "quintic" | "sextic",
//     "f": [[c], [c], ...]          // deg+1 coefficients, each a length-a
//   }                               // vector over the prime field, low first
// Every integer must already be reduced (0 <= v < p).  ParseError on any
// schema violation; curve validity itself is checked by curve_make.
Curve curve_from_json(const std::string& text);

// Canonical serialization of a curve (always includes the modulus); parsing
// it back yields the same curve.
std::string curve_to_json(const Curve& c);

}  // namespace g2t
