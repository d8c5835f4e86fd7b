#pragma once

#include <cstdint>
#include <random>

namespace plab {

/// Mixes a base seed with a stream index so that parallel replicas get
/// decorrelated, reproducible generators (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded random source used throughout the library. All samplers take an
/// explicit seed; nothing reads wall-clock entropy. The normal sampler is
/// implemented in-house (Box-Muller) so that streams are identical across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). Requires n >= 1.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal deviate.
    double normal();

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace plab
