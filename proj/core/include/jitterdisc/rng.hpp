#pragma once

#include <cstdint>

// Counter-based random number generation. A draw is a pure function of the
// key tuple (master seed, replicate, item, axis), so any draw can be produced
// independently of all others and replicates form independent streams.

namespace jitterdisc::rng {

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

/// Fold one key word into the running hash state.
constexpr std::uint64_t absorb(std::uint64_t h, std::uint64_t word) noexcept {
    return mix64(h ^ (word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)));
}

constexpr std::uint64_t keyed_bits(std::uint64_t master_seed,
                                   std::uint64_t replicate,
                                   std::uint64_t item,
                                   std::uint64_t axis) noexcept {
    std::uint64_t h = mix64(master_seed + 0x9e3779b97f4a7c15ull);
    h = absorb(h, replicate);
    h = absorb(h, item);
    h = absorb(h, axis);
    return h;
}

/// Map 64 random bits to a double in [0,1) using the top 53 bits.
constexpr double unit_from_bits(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// One uniform draw in [0,1) for the given key tuple.
constexpr double uniform_draw(std::uint64_t master_seed, std::uint64_t replicate,
                              std::uint64_t item, std::uint64_t axis) noexcept {
    return unit_from_bits(keyed_bits(master_seed, replicate, item, axis));
}

}  // namespace jitterdisc::rng
