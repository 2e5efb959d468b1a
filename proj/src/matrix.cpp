#include "numrad/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace numrad {

namespace {

bool entry_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    check_order(n);
    data_.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    check_order(n);
    if (data_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("entry count must be n*n");
    validate();
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    std::vector<Complex> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("rows must form a square matrix");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(flat));
}

void ComplexMatrix::validate() const {
    for (const Complex& z : data_)
        if (!entry_finite(z)) throw std::invalid_argument("matrix entries must be finite");
}

UnitVector UnitVector::checked(std::vector<Complex> coords) {
    if (coords.empty()) throw std::invalid_argument("unit vector must have n >= 1");
    double norm_sq = 0.0;
    for (Complex z : coords) {
        if (!entry_finite(z)) throw std::invalid_argument("unit vector entries must be finite");
        norm_sq += std::norm(z);
    }
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw std::invalid_argument("unit vector norm deviates from 1 by more than 1e-12");
    return UnitVector{std::move(coords)};
}

UnitVector UnitVector::normalized(std::vector<Complex> coords) {
    double norm_sq = 0.0;
    for (Complex z : coords) norm_sq += std::norm(z);
    if (norm_sq <= 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& z : coords) z *= inv;
    return UnitVector{std::move(coords)};
}

UnitVector UnitVector::basis(int n, int i) {
    if (n < 1 || i < 0 || i >= n) throw std::invalid_argument("basis index out of range");
    std::vector<Complex> coords(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    coords[static_cast<std::size_t>(i)] = Complex(1.0, 0.0);
    return UnitVector{std::move(coords)};
}

SimplexVector SimplexVector::checked(std::vector<double> coords) {
    if (coords.empty()) throw std::invalid_argument("simplex vector must have n >= 1");
    double sum = 0.0;
    for (double v : coords) {
        if (!std::isfinite(v)) throw std::invalid_argument("simplex entries must be finite");
        if (v < 0.0) throw std::invalid_argument("simplex entries must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("simplex coordinates must sum to 1 within 1e-12");
    return SimplexVector{std::move(coords)};
}

SimplexVector SimplexVector::uniform(int n) {
    if (n < 1) throw std::invalid_argument("simplex vector must have n >= 1");
    return SimplexVector{std::vector<double>(static_cast<std::size_t>(n), 1.0 / n)};
}

Complex quadratic_form(const ComplexMatrix& a, std::span<const Complex> x) {
    const int n = a.order();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("dimension mismatch between matrix and vector");
    Complex total(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        Complex row(0.0, 0.0);
        for (int j = 0; j < n; ++j) row += a(i, j) * x[static_cast<std::size_t>(j)];
        total += row * std::conj(x[static_cast<std::size_t>(i)]);
    }
    return total;
}

Complex quadratic_form(const ComplexMatrix& a, const UnitVector& x) {
    return quadratic_form(a, std::span<const Complex>(x.coords));
}

double quadratic_form(const ComplexMatrix& a, std::span<const double> x) {
    const int n = a.order();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("dimension mismatch between matrix and vector");
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += a(i, j).real() * x[static_cast<std::size_t>(j)];
        total += row * x[static_cast<std::size_t>(i)];
    }
    return total;
}

double quadratic_form(const ComplexMatrix& a, const SimplexVector& x) {
    return quadratic_form(a, std::span<const double>(x.coords));
}

double frobenius_norm_sq(const ComplexMatrix& a) {
    double total = 0.0;
    for (const Complex& z : a.entries()) total += std::norm(z);
    return total;
}

double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(frobenius_norm_sq(a)); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

bool has_zero_diagonal(const ComplexMatrix& a, double tol) {
    for (int i = 0; i < a.order(); ++i)
        if (std::abs(a(i, i)) > tol) return false;
    return true;
}

bool is_zero_one(const ComplexMatrix& a) {
    for (const Complex& z : a.entries()) {
        if (z.imag() != 0.0) return false;
        if (z.real() != 0.0 && z.real() != 1.0) return false;
    }
    return true;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex c) {
    std::vector<Complex> entries = a.entries();
    for (Complex& z : entries) z *= c;
    return ComplexMatrix(a.order(), std::move(entries));
}

}  // namespace numrad
