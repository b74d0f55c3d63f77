#pragma once

#include "nb/arrangement.hpp"
#include "nb/cell_complex.hpp"

#include <string>

namespace nb {

struct SvgOptions {
    int size = 640;               // viewport edge in pixels
    bool shade_triangles = true;  // fill bounded triangular faces
};

// The clipped arrangement: frame, input lines, shaded bounded triangles.
std::string arrangement_svg(const Arrangement& arr, const SvgOptions& opt = {});

// The family's complex with each region set tinted from a fixed palette.
std::string family_svg(const RegionFamily& family, const SvgOptions& opt = {});

} // namespace nb
