#ifndef NUMRAD_SIMPLEX_HPP
#define NUMRAD_SIMPLEX_HPP

#include <cstdint>
#include <utility>

#include "numrad/matrix.hpp"

// Maximization of <Ax,x> over the standard simplex for 0/1 matrices with
// zero diagonal, the symmetric/one-sided support decomposition A = B + C,
// and the closed-form clique-number bounds.

namespace numrad {

struct MSResult {
    double value = 0.0;
    SimplexVector argmax;
    int restarts_used = 0;
    bool converged = false;
};

// B = {a_ij * a_ji} (the two-sided support, symmetric), C = A - B.
// Throws "not a 0/1 zero-diagonal matrix" on bad input.
std::pair<ComplexMatrix, ComplexMatrix> symmetrize_support(const ComplexMatrix& a);

// Fills the strictly-upper entry of every mutually-zero off-diagonal pair
// with 1, so c_ij + c_ji = 1 whenever b_ij = 0. Leaves omega unchanged.
ComplexMatrix saturate(const ComplexMatrix& a);

// 1 - 1/omega, the simplex maximum for a graph of clique number omega.
double ms_bound_symmetric(int omega);

// 1 - 1/(2*omega) - 1/(2n), the analogue for general 0/1 zero-diagonal
// matrices of order n. Requires 1 <= omega <= n.
double lemma1_bound(int omega, int n);

struct ReplicatorOptions {
    int max_iterations = 100000;
    double min_gain = 1e-14;
};

// Discrete replicator dynamics x_i <- x_i (Sx)_i / <Sx,x> on a symmetric
// nonnegative zero-diagonal matrix; uniform start plus (restarts-1) seeded
// perturbed starts, best trajectory wins (ties to the lower restart index).
MSResult replicator_max(const ComplexMatrix& s, int restarts = 20, std::uint64_t seed = 0,
                        const ReplicatorOptions& options = {});

// Maximizes <Ax,x> over the simplex for 0/1 zero-diagonal A by running the
// replicator on (A + A^T)/2; the value is reported against A itself.
MSResult general_simplex_max(const ComplexMatrix& a, int restarts = 20, std::uint64_t seed = 0);

// Exhaustive oracle over simplex points with coordinates k/denominator.
// Requires n <= 5 and denominator <= 30.
double simplex_grid_max(const ComplexMatrix& a, int denominator);

}  // namespace numrad

#endif
