#pragma once

#include <charconv>
#include <string>

namespace mink {

// Shortest decimal that round-trips to the same double; locale independent,
// so writers emit identical bytes on every platform.
inline std::string format_double(double x) {
    if (x == 0.0) x = 0.0; // normalize -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

} // namespace mink
