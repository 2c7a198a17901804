#include "acorr/numfmt.hpp"

#include <cstdio>
#include <cstdlib>

namespace acorr {

std::string format_sig9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

double round_sig9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return std::strtod(buf, nullptr);
}

}  // namespace acorr
