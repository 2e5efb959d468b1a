#ifndef NUMRAD_RADIUS_HPP
#define NUMRAD_RADIUS_HPP

#include <utility>
#include <vector>

#include "numrad/matrix.hpp"

// Numerical radius eta(A) = max_{|x|=1} |<Ax,x>| via the rotated Hermitian
// part: eta(A) = max_theta lambda_max((e^{i theta} A + e^{-i theta} A*)/2).

namespace numrad {

struct RadiusResult {
    double value = 0.0;       // eta(A)
    double theta_star = 0.0;  // maximizing phase in [0, 2pi)
    UnitVector witness;       // |<A w, w>| = value within tolerance
    int iterations = 0;       // eigensolver evaluations spent
};

struct RadiusOptions {
    int grid_points = 720;       // half-degree phase grid
    int refine_brackets = 5;     // local maxima refined by golden section
    double phase_width = 1e-12;  // refinement stops at this bracket width
    bool force_sweep = false;    // skip the Hermitian short-circuit
};

// H(theta) = (e^{i theta} A + e^{-i theta} A*)/2, Hermitian by construction.
ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double theta);

struct HermitianEigenResult {
    std::vector<double> values;  // ascending
    std::vector<UnitVector> vectors;
    int sweeps = 0;
};

// Row-cyclic complex Jacobi. Off-diagonal Frobenius mass is driven below
// 1e-12 * max(1, |H|); capped at 100 sweeps. Throws "not hermitian" when
// the input fails is_hermitian at 1e-12.
HermitianEigenResult hermitian_eigendecomposition(const ComplexMatrix& h);

std::pair<double, UnitVector> lambda_max_hermitian(const ComplexMatrix& h);

RadiusResult numerical_radius(const ComplexMatrix& a, const RadiusOptions& options);
RadiusResult numerical_radius(const ComplexMatrix& a);

// max |eigenvalue| of a Hermitian matrix; equals eta(A) in that case.
double spectral_radius_hermitian(const ComplexMatrix& a);

// Rotates so the first nonzero coordinate is real and nonnegative.
void normalize_vector_phase(std::vector<Complex>& v);

}  // namespace numrad

#endif
