#pragma once

#include <cstdio>
#include <string>

namespace dj {

/// Round-trip decimal formatting (17 significant digits, trailing zeros
/// trimmed); negative zero prints as 0 so output is platform independent.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace dj
