#pragma once

#include <cstdint>
#include <random>

namespace decwvc {

// SplitMix64 mixing step. Used for seed derivation so that experiment cells
// get independent, reproducible streams regardless of enumeration order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a sub-seed from a base seed and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(splitmix64(base) ^ stream);
}

// Deterministic sampler on top of std::mt19937_64.
//
// The engine itself is specified bit-exactly by the standard, but the
// std::uniform_*_distribution adaptors are implementation-defined, so this
// wrapper does its own bounded reductions. Same seed, same stream of values,
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform index in [0, n). n must be > 0.
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform_index(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Bernoulli trial with success probability p, integer-compare based.
    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        const auto threshold =
            static_cast<std::uint64_t>(p * 18446744073709551616.0);  // p * 2^64
        return next_u64() < threshold;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace decwvc
