#pragma once

#include <string>

#include "stdcx/latpath.hpp"

namespace stdcx::latpath {

// Grid picture of C between the boundaries with its demarcation path
// (dotted), marking path and the unmarked east step labels.
std::string render_ascii(const LatticePath& upper, const LatticePath& lower,
                         const LatticePath& c);

std::string render_svg(const LatticePath& upper, const LatticePath& lower,
                       const LatticePath& c);

}  // namespace stdcx::latpath
