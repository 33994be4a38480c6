#include "ramprimes/format.hpp"

#include <cmath>
#include <cstdio>

namespace ramprimes {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_number(double v) {
    if (std::floor(v) == v && std::abs(v) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    return fixed6(v);
}

double round6(double v) {
    return std::round(v * 1e6) / 1e6;
}

} // namespace ramprimes
