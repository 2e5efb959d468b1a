#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace numrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHermitianTol = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const std::vector<Complex>& m, int n) {
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) total += std::norm(m[static_cast<std::size_t>(i) * n + j]);
    return std::sqrt(total);
}

struct JacobiOutput {
    std::vector<double> diagonal;
    std::vector<Complex> vectors;  // column-major accumulation, identity if unused
    int sweeps = 0;
};

// Row-cyclic complex Jacobi on a Hermitian matrix. The pivot (p,q) is
// annihilated by the unitary J = I except J_pp=c, J_pq=s*phase,
// J_qp=-s*conj(phase), J_qq=c with phase = m_pq/|m_pq| and a classic
// smallest-angle rotation on the 2x2 block.
JacobiOutput jacobi_cyclic(std::vector<Complex> m, int n, bool want_vectors) {
    JacobiOutput out;
    out.vectors.assign(want_vectors ? static_cast<std::size_t>(n) * n : 0, Complex(0.0, 0.0));
    if (want_vectors)
        for (int i = 0; i < n; ++i) out.vectors[static_cast<std::size_t>(i) * n + i] = 1.0;

    double norm_floor = 1.0;
    {
        double total = 0.0;
        for (const Complex& z : m) total += std::norm(z);
        norm_floor = std::max(1.0, std::sqrt(total));
    }
    const double target = kHermitianTol * norm_floor;

    auto at = [&m, n](int i, int j) -> Complex& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    int sweep = 0;
    while (sweep < kMaxSweeps && off_diagonal_mass(m, n) > target) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex z = at(p, q);
                const double g = std::abs(z);
                if (g == 0.0) continue;
                const double a = at(p, p).real();
                const double b = at(q, q).real();
                const double tau = (b - a) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // s * phase and s * conj(phase), in real components to keep
                // the update loops free of library complex multiplies
                const double sp_re = s * z.real() / g;
                const double sp_im = s * z.imag() / g;

                at(p, p) = Complex(a * c * c - 2.0 * g * s * c + b * s * s, 0.0);
                at(q, q) = Complex(a * s * s + 2.0 * g * s * c + b * c * c, 0.0);
                at(p, q) = Complex(0.0, 0.0);
                at(q, p) = Complex(0.0, 0.0);

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex mkp = at(k, p);
                    const Complex mkq = at(k, q);
                    const double kp_re = c * mkp.real() - (sp_re * mkq.real() + sp_im * mkq.imag());
                    const double kp_im = c * mkp.imag() - (sp_re * mkq.imag() - sp_im * mkq.real());
                    const double kq_re = sp_re * mkp.real() - sp_im * mkp.imag() + c * mkq.real();
                    const double kq_im = sp_re * mkp.imag() + sp_im * mkp.real() + c * mkq.imag();
                    at(k, p) = Complex(kp_re, kp_im);
                    at(p, k) = Complex(kp_re, -kp_im);
                    at(k, q) = Complex(kq_re, kq_im);
                    at(q, k) = Complex(kq_re, -kq_im);
                }

                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        Complex& vkp = out.vectors[static_cast<std::size_t>(k) * n + p];
                        Complex& vkq = out.vectors[static_cast<std::size_t>(k) * n + q];
                        const double p_re = vkp.real(), p_im = vkp.imag();
                        const double q_re = vkq.real(), q_im = vkq.imag();
                        vkp = Complex(c * p_re - (sp_re * q_re + sp_im * q_im),
                                      c * p_im - (sp_re * q_im - sp_im * q_re));
                        vkq = Complex(sp_re * p_re - sp_im * p_im + c * q_re,
                                      sp_re * p_im + sp_im * p_re + c * q_im);
                    }
                }
            }
        }
        ++sweep;
    }

    out.sweeps = sweep;
    out.diagonal.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.diagonal[static_cast<std::size_t>(i)] = at(i, i).real();
    return out;
}

std::vector<Complex> symmetrized_entries(const ComplexMatrix& h) {
    const int n = h.order();
    std::vector<Complex> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i) * n + i] = Complex(h(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
            m[static_cast<std::size_t>(i) * n + j] = avg;
            m[static_cast<std::size_t>(j) * n + i] = std::conj(avg);
        }
    }
    return m;
}

// Largest eigenvalue only; no eigenvector accumulation.
double lambda_max_value(const ComplexMatrix& h) {
    const auto out = jacobi_cyclic(symmetrized_entries(h), h.order(), false);
    return *std::max_element(out.diagonal.begin(), out.diagonal.end());
}

struct GoldenResult {
    double theta = 0.0;
    double value = 0.0;
    int evaluations = 0;
};

template <typename F>
GoldenResult golden_section_max(F&& f, double lo, double hi, double width) {
    constexpr double inv_phi = 0.6180339887498949;
    GoldenResult r;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    r.evaluations = 2;
    while (hi - lo > width) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
        ++r.evaluations;
    }
    r.theta = 0.5 * (lo + hi);
    r.value = std::max(f1, f2);
    return r;
}

double wrap_phase(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

}  // namespace

ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double theta) {
    const int n = a.order();
    const Complex rot = std::polar(1.0, theta);
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = Complex((rot * a(i, i)).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex upper = 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
            h(i, j) = upper;
            h(j, i) = std::conj(upper);
        }
    }
    return h;
}

HermitianEigenResult hermitian_eigendecomposition(const ComplexMatrix& h) {
    if (!is_hermitian(h, kHermitianTol))
        throw std::invalid_argument("not hermitian");
    const int n = h.order();
    const auto out = jacobi_cyclic(symmetrized_entries(h), n, true);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&out](int lhs, int rhs) {
        return out.diagonal[static_cast<std::size_t>(lhs)] <
               out.diagonal[static_cast<std::size_t>(rhs)];
    });

    HermitianEigenResult result;
    result.sweeps = out.sweeps;
    result.values.reserve(static_cast<std::size_t>(n));
    result.vectors.reserve(static_cast<std::size_t>(n));
    for (int col : order) {
        result.values.push_back(out.diagonal[static_cast<std::size_t>(col)]);
        std::vector<Complex> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] =
            out.vectors[static_cast<std::size_t>(k) * n + col];
        normalize_vector_phase(v);
        result.vectors.push_back(UnitVector::normalized(std::move(v)));
    }
    return result;
}

std::pair<double, UnitVector> lambda_max_hermitian(const ComplexMatrix& h) {
    auto eig = hermitian_eigendecomposition(h);
    return {eig.values.back(), std::move(eig.vectors.back())};
}

void normalize_vector_phase(std::vector<Complex>& v) {
    double max_abs = 0.0;
    for (const Complex& z : v) max_abs = std::max(max_abs, std::abs(z));
    if (max_abs == 0.0) return;
    for (Complex& z : v) {
        if (std::abs(z) > 1e-12 * max_abs) {
            const Complex rot = std::conj(z) / std::abs(z);
            for (Complex& w : v) w *= rot;
            return;
        }
    }
}

RadiusResult numerical_radius(const ComplexMatrix& a, const RadiusOptions& options) {
    if (options.grid_points < 4) throw std::invalid_argument("grid_points must be >= 4");
    const int n = a.order();

    RadiusResult result;
    if (frobenius_norm_sq(a) == 0.0) {
        result.witness = UnitVector::basis(n, 0);
        return result;
    }

    if (!options.force_sweep && is_hermitian(a, kHermitianTol)) {
        auto eig = hermitian_eigendecomposition(a);
        const double lo = eig.values.front();
        const double hi = eig.values.back();
        result.iterations = 1;
        if (hi >= -lo) {
            result.value = hi;
            result.theta_star = 0.0;
            result.witness = std::move(eig.vectors.back());
        } else {
            result.value = -lo;
            result.theta_star = std::numbers::pi;
            result.witness = std::move(eig.vectors.front());
        }
        return result;
    }

    const int k = options.grid_points;
    std::vector<double> g(static_cast<std::size_t>(k));
    int evaluations = 0;
    for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i)] = lambda_max_value(rotated_hermitian_part(a, kTwoPi * i / k));
        ++evaluations;
    }

    // Cyclic local maxima, strongest first, skipping grid-adjacent picks.
    std::vector<int> maxima;
    for (int i = 0; i < k; ++i) {
        const double prev = g[static_cast<std::size_t>((i + k - 1) % k)];
        const double next = g[static_cast<std::size_t>((i + 1) % k)];
        if (g[static_cast<std::size_t>(i)] >= prev && g[static_cast<std::size_t>(i)] >= next)
            maxima.push_back(i);
    }
    std::stable_sort(maxima.begin(), maxima.end(), [&g](int lhs, int rhs) {
        return g[static_cast<std::size_t>(lhs)] > g[static_cast<std::size_t>(rhs)];
    });
    std::vector<int> seeds;
    for (int idx : maxima) {
        if (static_cast<int>(seeds.size()) >= options.refine_brackets) break;
        bool adjacent = false;
        for (int chosen : seeds) {
            const int d = std::abs(idx - chosen);
            if (std::min(d, k - d) <= 1) {
                adjacent = true;
                break;
            }
        }
        if (!adjacent) seeds.push_back(idx);
    }

    auto objective = [&a](double theta) { return lambda_max_value(rotated_hermitian_part(a, theta)); };

    double best_theta = kTwoPi * seeds.front() / k;
    double best_value = g[static_cast<std::size_t>(seeds.front())];
    for (int idx : seeds) {
        const double center = kTwoPi * idx / k;
        const double half = kTwoPi / k;
        const auto refined =
            golden_section_max(objective, center - half, center + half, options.phase_width);
        evaluations += refined.evaluations;
        if (refined.value > best_value) {
            best_value = refined.value;
            best_theta = refined.theta;
        }
    }

    const double theta_star = wrap_phase(best_theta);
    auto [lambda, witness] = lambda_max_hermitian(rotated_hermitian_part(a, theta_star));
    ++evaluations;

    result.value = lambda;
    result.theta_star = theta_star;
    result.witness = std::move(witness);
    result.iterations = evaluations;
    return result;
}

RadiusResult numerical_radius(const ComplexMatrix& a) {
    return numerical_radius(a, RadiusOptions{});
}

double spectral_radius_hermitian(const ComplexMatrix& a) {
    if (!is_hermitian(a, kHermitianTol))
        throw std::invalid_argument("not hermitian");
    const auto out = jacobi_cyclic(symmetrized_entries(a), a.order(), false);
    double radius = 0.0;
    for (double v : out.diagonal) radius = std::max(radius, std::abs(v));
    return radius;
}

}  // namespace numrad
