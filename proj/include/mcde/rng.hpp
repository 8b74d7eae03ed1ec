#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace mcde {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed for sub-task `index` of a computation seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Counter-based generator: the k-th output is a pure function of
/// (seed, stream, k), so independent streams can be consumed in any order or
/// on any thread without changing results.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(derive_seed(seed, stream)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next_u64(); }

    std::uint64_t next_u64() noexcept {
        return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer on the closed range [lo, hi] (unbiased, Lemire's method).
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
        const std::uint64_t span = hi - lo;
        if (span == std::numeric_limits<std::uint64_t>::max()) return next_u64();
        const std::uint64_t range = span + 1;
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return lo + static_cast<std::uint64_t>(m >> 64);
    }

    /// Standard normal deviate (Box-Muller, one value per call).
    double normal() noexcept {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// -1 or +1 with equal probability.
    double sign() noexcept { return (next_u64() >> 63) ? 1.0 : -1.0; }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace mcde
