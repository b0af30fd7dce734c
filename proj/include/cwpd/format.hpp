#pragma once

#include <cstdio>
#include <string>

namespace cwpd {

/// Reals in reports: 12 significant digits.
inline std::string format_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace cwpd
