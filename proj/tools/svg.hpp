#pragma once

#include <string>

#include "vfunc/subdivision.hpp"
#include "vfunc/tri2d.hpp"

namespace vfunc::svg {

enum class View { Triangulation, Subdivision, Image };

/// Deterministic SVG: 800x800 viewport, y axis pointing up, coordinates with
/// two decimals. Cells whose image is negatively oriented get class "neg".
std::string render(const Triangulation2& t, View view);

}  // namespace vfunc::svg
