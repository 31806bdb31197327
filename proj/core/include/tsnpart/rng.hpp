#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace tsnpart::rng {

// std::mt19937_64 output is specified bit-exactly by the standard, but the
// std distributions are not. Sampling helpers here are hand-rolled so that a
// seed produces the same artifacts on every platform/compiler.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent sub-seed from (seed, salt).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (salt * 0xd6e8feb86659fd93ULL);
    return splitmix64(s);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t salt = 0) {
    return std::mt19937_64{derive_seed(seed, salt)};
}

/// Unbiased integer in [0, bound) via rejection sampling.
inline std::uint64_t below(std::mt19937_64& eng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("rng::below: bound must be positive");
    }
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t raw;
    do {
        raw = eng();
    } while (raw >= limit);
    return raw % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit(std::mt19937_64& eng) {
    return double(eng() >> 11) * 0x1.0p-53;
}

/// First k entries of `pool` become a uniform k-subset (partial Fisher-Yates).
template <typename T>
void partial_shuffle(std::vector<T>& pool, std::size_t k, std::mt19937_64& eng) {
    if (k > pool.size()) {
        throw std::invalid_argument("rng::partial_shuffle: k exceeds pool size");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + std::size_t(below(eng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
}

} // namespace tsnpart::rng
