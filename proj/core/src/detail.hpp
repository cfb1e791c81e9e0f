#pragma once

#include <cstdint>
#include <vector>

#include "g2t/field.hpp"

namespace g2t::detail {

// All roots in K of a monic polynomial with F_p coefficients (c0..cn, cn = 1).
// Works for any field size; used by the subfield embedding machinery.
// Defined in poly.cpp.
std::vector<Fe> roots_in_field(const std::vector<uint32_t>& poly, Field K);

}  // namespace g2t::detail
