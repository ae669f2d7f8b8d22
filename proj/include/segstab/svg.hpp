#pragma once

#include "segstab/geometry.hpp"

#include <span>
#include <string>

namespace segstab {

/// One <rect> per rectangle and one <line> per segment, y axis pointing up,
/// viewBox fitted to the drawing with 5% margins. When `families` is given
/// (one label per segment), segments carry class "seg f<label>" and a
/// per-family stroke; otherwise class "seg". Same inputs, same bytes.
std::string render_svg(const StabInstance& inst, std::span<const Segment> segments = {},
                       std::span<const int> families = {});

}  // namespace segstab
