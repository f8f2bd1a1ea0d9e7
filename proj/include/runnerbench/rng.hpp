#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>

namespace runnerbench {

// xoshiro256++ 1.0 (Blackman & Vigna, public domain), state filled from the
// 64-bit seed through splitmix64. Implemented here instead of <random>
// because the standard does not pin down distribution output, and identical
// seeds must produce identical runs on every platform. The generator name
// is recorded in run metadata.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1,1] (granularity 2^-52; +1 itself is never drawn).
    double uniform_sym() noexcept { return 2.0 * uniform01() - 1.0; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    /// Unbiased integer in [0,n); n must be > 0.
    std::uint64_t below(std::uint64_t n) noexcept;

    std::size_t index(std::size_t n) noexcept { return static_cast<std::size_t>(below(n)); }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

/// Anything the search operators draw randomness from. Tests substitute
/// scripted sources to pin exact draw values.
template <typename R>
concept UniformSource = requires(R& r, std::uint64_t n) {
    { r.uniform01() } -> std::convertible_to<double>;
    { r.uniform_sym() } -> std::convertible_to<double>;
    { r.below(n) } -> std::convertible_to<std::uint64_t>;
};

inline constexpr const char* kRngAlgorithm = "xoshiro256++/splitmix64";

} // namespace runnerbench
