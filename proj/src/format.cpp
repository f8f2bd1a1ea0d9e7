#include "runnerbench/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace runnerbench {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string format_scientific3(double v) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.2e", v);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

} // namespace runnerbench
