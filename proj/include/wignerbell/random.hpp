#pragma once

#include <cstdint>
#include <limits>

namespace wignerbell {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Counter-based random stream.
///
/// Draw i of a stream with key k is mix64(k + (i + 1) * gamma), i.e. the
/// SplitMix64 sequence seeded with k, so every value is addressable by
/// (key, draw index) with no hidden state beyond the counter. Keys for the
/// experiment are derived from (seed, repetition, setting) by `derive`:
///
///     k0 = mix64(seed + gamma)
///     k1 = mix64(k0 ^ (repetition + gamma))      ... chained per coordinate
///
/// A stream is single-owner; independent streams come from distinct keys.
class CounterStream {
public:
    using result_type = std::uint64_t;

    explicit constexpr CounterStream(std::uint64_t key, std::uint64_t position = 0) noexcept
        : key_(key), counter_(position) {}

    static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t repetition,
                                              std::uint64_t setting) noexcept {
        std::uint64_t k = mix64(seed + kGoldenGamma);
        k = mix64(k ^ (repetition + kGoldenGamma));
        k = mix64(k ^ (setting + kGoldenGamma));
        return k;
    }

    static constexpr CounterStream derive(std::uint64_t seed, std::uint64_t repetition,
                                          std::uint64_t setting) noexcept {
        return CounterStream(derive_key(seed, repetition, setting));
    }

    /// Value of draw `index` without advancing.
    constexpr std::uint64_t at(std::uint64_t index) const noexcept {
        return mix64(key_ + (index + 1) * kGoldenGamma);
    }

    constexpr std::uint64_t next_u64() noexcept { return at(counter_++); }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    constexpr result_type operator()() noexcept { return next_u64(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace wignerbell
