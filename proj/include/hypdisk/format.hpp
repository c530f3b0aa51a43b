#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace hypdisk {

// Shortest round-trip decimal form, locale-independent. Negative zero is
// flattened to "0".
inline std::string format_double(double v) {
    char buf[64];
    if (v == 0.0) v = 0.0;
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

// Fixed number of significant digits, locale-independent.
inline std::string format_double(double v, int significant) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, significant);
    return std::string(buf, end);
}

}  // namespace hypdisk
