#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dynavid {

// Seeded random source used everywhere in the library.
//
// std::mt19937_64's output sequence is pinned by the standard, but the
// distribution adaptors are not, so every conversion from raw 64-bit words
// to a draw is done by hand here. Identical seeds therefore produce
// identical draws on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe to feed into log().
    double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], both inclusive. The modulo bias is below
    /// 2^-57 for the spans used in this library.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential() { return -std::log(uniform_pos()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace dynavid
