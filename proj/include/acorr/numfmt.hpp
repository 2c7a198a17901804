#pragma once

#include <string>

namespace acorr {

/// Shortest decimal form with 9 significant digits — the precision used for
/// every number this tool emits.
std::string format_sig9(double value);

/// Nearest double to the 9-significant-digit decimal rendering of value.
double round_sig9(double value);

}  // namespace acorr
