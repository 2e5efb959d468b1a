#ifndef NUMRAD_MATRIX_HPP
#define NUMRAD_MATRIX_HPP

#include <complex>
#include <span>
#include <vector>

// Dense complex square matrices plus the quadratic forms, norms and
// structural predicates everything else in the library is built from.

namespace numrad {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    // Zero matrix of order n (n >= 1).
    explicit ComplexMatrix(int n);

    // Row-major entries, must hold exactly n*n finite values.
    ComplexMatrix(int n, std::vector<Complex> entries);

    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

    int order() const { return n_; }
    Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * n_ + j];
    }
    const std::vector<Complex>& entries() const { return data_; }

    // Re-checks the finiteness invariant after in-place mutation.
    void validate() const;

private:
    int n_;
    std::vector<Complex> data_;
};

// Unit vector in C^n: | sum |x_i|^2 - 1 | <= 1e-12.
struct UnitVector {
    std::vector<Complex> coords;

    static UnitVector checked(std::vector<Complex> coords);
    // Scales to unit norm first; throws only on the zero vector.
    static UnitVector normalized(std::vector<Complex> coords);
    static UnitVector basis(int n, int i);

    int size() const { return static_cast<int>(coords.size()); }
};

// Point of the standard simplex P_n: coords >= 0, | sum - 1 | <= 1e-12.
struct SimplexVector {
    std::vector<double> coords;

    static SimplexVector checked(std::vector<double> coords);
    static SimplexVector uniform(int n);

    int size() const { return static_cast<int>(coords.size()); }
};

// <Ax,x> = sum_{i,j} a_ij x_j conj(x_i). Throws on dimension mismatch.
Complex quadratic_form(const ComplexMatrix& a, std::span<const Complex> x);
Complex quadratic_form(const ComplexMatrix& a, const UnitVector& x);
// Real-vector form; exact for real matrices, returns the real part otherwise.
double quadratic_form(const ComplexMatrix& a, std::span<const double> x);
double quadratic_form(const ComplexMatrix& a, const SimplexVector& x);

// sum |a_ij|^2; exact integer count of ones for 0/1 matrices.
double frobenius_norm_sq(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 0.0);
bool has_zero_diagonal(const ComplexMatrix& a, double tol = 0.0);

// Entrywise test for exact 0/1 entries (zero imaginary parts).
bool is_zero_one(const ComplexMatrix& a);

ComplexMatrix scale(const ComplexMatrix& a, Complex c);

// Default tolerance for pattern decisions on float pipelines; exact 0/1
// inputs may use 0.
inline constexpr double kFloatPatternTol = 1e-12;

}  // namespace numrad

#endif
