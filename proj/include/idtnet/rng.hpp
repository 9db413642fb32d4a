#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace idtnet {

/// Seeded random stream. All sampling in the library goes through this type so
/// that draws are reproducible bit-for-bit on a given platform; the integer and
/// real mappings below are written out rather than delegated to the
/// implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), unbiased (Lemire's multiply-and-reject).
    std::uint64_t index(std::uint64_t n);

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Stable labeled splitting of a master seed: the same (master, label, index)
/// always yields the same child seed, and distinct labels or indices give
/// decorrelated children.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index = 0);

inline Rng derive_stream(std::uint64_t master, std::string_view label, std::uint64_t index = 0)
{
    return Rng(derive_seed(master, label, index));
}

} // namespace idtnet
