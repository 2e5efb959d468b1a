#include "numrad/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace numrad {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) + index);
}

double Rng::gaussian() {
    // u1 in (0,1] so the log stays finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::sqrt(2.0);
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int requires lo <= hi");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

UnitVector random_unit_vector(Rng& rng, int n) {
    if (n < 1) throw std::invalid_argument("unit vector must have n >= 1");
    std::vector<Complex> coords(static_cast<std::size_t>(n));
    for (Complex& z : coords) z = rng.complex_gaussian();
    return UnitVector::normalized(std::move(coords));
}

SimplexVector random_simplex_point(Rng& rng, int n) {
    if (n < 1) throw std::invalid_argument("simplex vector must have n >= 1");
    std::vector<double> coords(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : coords) {
        v = -std::log(1.0 - rng.uniform01());
        sum += v;
    }
    for (double& v : coords) v /= sum;
    // Rounding can leave the sum a few ulps off 1; pin it exactly.
    double total = 0.0;
    for (int i = 0; i + 1 < n; ++i) total += coords[static_cast<std::size_t>(i)];
    coords[static_cast<std::size_t>(n) - 1] = 1.0 - total;
    if (coords[static_cast<std::size_t>(n) - 1] < 0.0) coords[static_cast<std::size_t>(n) - 1] = 0.0;
    return SimplexVector::checked(std::move(coords));
}

}  // namespace numrad
