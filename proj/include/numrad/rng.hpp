#ifndef NUMRAD_RNG_HPP
#define NUMRAD_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "numrad/matrix.hpp"

// Seeded, reproducible randomness. mt19937_64 output is pinned by the
// standard and all deviates below are derived from its raw 64-bit words,
// so sequences are identical across platforms and standard libraries.

namespace numrad {

// splitmix64 finalizer; mixes (seed, index) into independent substreams.
std::uint64_t splitmix64(std::uint64_t z);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Box-Muller; consumes two uniforms per call.
    double gaussian();

    // Standard complex Gaussian: (g + i g) / sqrt(2).
    Complex complex_gaussian();

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

UnitVector random_unit_vector(Rng& rng, int n);
// Exponential spacings normalized to sum 1 (uniform on the simplex).
SimplexVector random_simplex_point(Rng& rng, int n);

}  // namespace numrad

#endif
