#pragma once

#include <cstdint>
#include <initializer_list>

namespace pkpm {

/// Counter-based random numbers. Every draw is a pure function of a 64-bit
/// key, so trials can be evaluated in any order (or in parallel) and still
/// reproduce bit-identical streams.

/// splitmix64 finalizer: a well-mixed bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Combine a list of words (seed, indices, counters) into one key.
constexpr std::uint64_t hash_key(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x853c49e6748fea9bull;
    for (std::uint64_t w : words) h = mix64(h ^ w);
    return h;
}

/// Uniform double in [0,1) from the top 53 bits of a mixed key.
constexpr double uniform01(std::uint64_t key) {
    return static_cast<double>(mix64(key) >> 11) * 0x1.0p-53;
}

}  // namespace pkpm
