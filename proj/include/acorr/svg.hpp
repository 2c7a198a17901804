#pragma once

#include <string>

#include "acorr/stats.hpp"

namespace acorr {

/// Self-contained SVG charts, fixed 1200x600 viewBox, no external assets.
/// Coordinates are snprintf-formatted so identical inputs give identical bytes.
/// Element contract, relied on by tests: the ACF chart has one
/// rect.bar per lag and exactly two line.band elements; the Ljung-Box chart has
/// one polyline.series and one line.threshold; the rolling chart has
/// polyline.series segments (split at gaps) and one line.zero.

std::string render_acf_svg(const AcfResult& result, const std::string& title);
std::string render_lb_svg(const LjungBoxResult& result, const std::string& title);
std::string render_rolling_svg(const RollingAcfResult& result, const std::string& title);

}  // namespace acorr
