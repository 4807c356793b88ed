#pragma once

#include <cstdio>
#include <string>

namespace pkpm {

/// Decimal form with 17 significant digits; round-trips any double exactly.
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace pkpm
