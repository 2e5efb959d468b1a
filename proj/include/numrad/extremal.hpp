#ifndef NUMRAD_EXTREMAL_HPP
#define NUMRAD_EXTREMAL_HPP

#include <cstdint>
#include <vector>

#include "numrad/matrix.hpp"

// Extremal instances: the filled balanced r-partite matrix, the clique plus
// isolated vertices, and construction/certification of the equality cases
// of the Hermitian bound eta^2 <= (1 - 1/omega) |A|^2.

namespace numrad {

struct PartiteSpec {
    int n = 0;
    int r = 0;
    int nu = 0;                   // n mod r
    std::vector<int> class_sizes; // larger classes first, contiguous blocks
    std::vector<int> labels;      // class index (0-based) per vertex
};

// Balanced partition of [n] into r classes; 2 <= r <= n.
PartiteSpec make_partite_spec(int n, int r);

// Complete r-partite adjacency with every strictly-upper within-class entry
// set to 1: a_ij = 1 iff classes differ, or i < j in the same class.
ComplexMatrix turan_partite_filled(int n, int r);

// Number of ones of turan_partite_filled(n, r) in exact integer arithmetic:
// C(n,2) + C(r,2) (n^2 - nu^2) / r^2 + C(nu,2).
long long turan_filled_ones(int n, int r);

// Adjacency of K_r together with n - r isolated vertices.
ComplexMatrix clique_plus_isolated(int n, int r);

// Hermitian zero-diagonal matrix with a_ij = c x_i conj(x_j) for i < j.
// partition holds labels in {0..r}; label 0 marks the zero-coordinate class.
// Throws "not an equality configuration" when the partition/vector data
// violate the zero-class or class-mass conditions.
ComplexMatrix proposition_matrix(const std::vector<int>& partition, const UnitVector& x,
                                 Complex c);

struct EqualityCertificate {
    Complex c{0.0, 0.0};
    std::vector<int> partition;  // labels in {0..r}
    UnitVector x;
    bool condition_i = false;    // x vanishes on the zero class
    bool condition_ii = false;   // every class carries mass 1/r
    bool condition_iii = false;  // a_ij = c x_i conj(x_j) for all i < j
    bool overall = false;
    int r = 0;                   // omega of the input pattern
    // Diagnostics, reported separately from the conditions: the certified
    // identity eta^2 = (1 - 1/r) |A|^2 checked numerically.
    double equality_gap = 0.0;   // eta^2 - (1 - 1/r) |A|^2
    bool equality_holds = false;
};

// Infers (c, partition) from A and x, then verifies the three conditions.
// Inference failures yield overall = false, never an exception; only a
// non-Hermitian input or a nonzero diagonal throws.
EqualityCertificate check_equality_conditions(const ComplexMatrix& a, const UnitVector& x,
                                              double tol = 1e-8);

}  // namespace numrad

#endif
