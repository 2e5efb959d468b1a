#ifndef NUMRAD_TESTS_HELPERS_HPP
#define NUMRAD_TESTS_HELPERS_HPP

#include <complex>
#include <vector>

#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

namespace testutil {

using numrad::Complex;
using numrad::ComplexMatrix;
using numrad::Rng;

inline ComplexMatrix random_complex(Rng& rng, int n, bool zero_diagonal = true) {
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && zero_diagonal) continue;
            a(i, j) = rng.complex_gaussian();
        }
    return a;
}

inline ComplexMatrix random_hermitian(Rng& rng, int n, bool zero_diagonal = true) {
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        if (!zero_diagonal) a(i, i) = Complex(rng.gaussian(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = rng.complex_gaussian();
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

// Independent entries: ordered pair (i,j) is 1 with the given probability.
inline ComplexMatrix random_zero_one(Rng& rng, int n, double density) {
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rng.uniform01() < density) a(i, j) = 1.0;
    return a;
}

// Symmetric 0/1 adjacency with unordered-pair coin flips.
inline ComplexMatrix random_adjacency(Rng& rng, int n, double density) {
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < density) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
    return a;
}

inline ComplexMatrix cycle_adjacency(int n) {
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        a(i, j) = 1.0;
        a(j, i) = 1.0;
    }
    return a;
}

inline std::vector<Complex> random_complex_vector(Rng& rng, int n) {
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (Complex& z : v) z = rng.complex_gaussian();
    return v;
}

}  // namespace testutil

#endif
