#pragma once

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace mcda {

/// Compact decimal rendering with the given number of significant digits.
inline std::string format_number(double v, int significant = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = "; ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

}  // namespace mcda
