#pragma once

#include <string>
#include <string_view>

#include "tangle/cascade.hpp"

namespace tangle {

enum class RenderStyle { Cascade, Disk };

/// Accepts "cascade" and "disk".
RenderStyle parse_style(std::string_view name);

/// SVG 1.1 drawing of the cascade diagram. Each level is a
/// `<g class="level" data-level="i" data-width="w">` holding one
/// `<line class="strand">` per strand below crossing i. Output depends only
/// on the code and the style. Throws CodeError for an invalid code.
std::string render_svg(const CascadeCode& code, RenderStyle style);

}  // namespace tangle
