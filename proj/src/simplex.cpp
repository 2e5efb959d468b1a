#include "numrad/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "numrad/rng.hpp"

namespace numrad {

namespace {

void require_zero_one_zero_diagonal(const ComplexMatrix& a) {
    if (!is_zero_one(a) || !has_zero_diagonal(a, 0.0))
        throw std::invalid_argument("not a 0/1 zero-diagonal matrix");
}

struct Trajectory {
    std::vector<double> point;
    double value = 0.0;
    bool converged = false;
};

// One replicator run. The Baum-Eagon inequality makes the objective
// nondecreasing; a decrease beyond rounding noise is an implementation
// defect and throws. Weights below 1e-280 can never recover (per-step
// growth is bounded by n) and are flushed to exact zero, which keeps the
// long tail of a trajectory out of denormal arithmetic and lets the
// matvec skip dead coordinates.
Trajectory run_replicator(const std::vector<double>& s, int n, std::vector<double> x,
                          const ReplicatorOptions& options) {
    Trajectory t;
    std::vector<double> sx(static_cast<std::size_t>(n));
    const double* mat = s.data();
    double* xp = x.data();

    // sx = S x accumulated column-wise over the support of x (S symmetric,
    // so row j doubles as column j); returns <Sx,x>.
    auto matvec_objective = [&]() {
        std::fill(sx.begin(), sx.end(), 0.0);
        for (int j = 0; j < n; ++j) {
            const double xj = xp[j];
            if (xj == 0.0) continue;
            const double* row = mat + static_cast<std::size_t>(j) * n;
            for (int i = 0; i < n; ++i) sx[static_cast<std::size_t>(i)] += xj * row[i];
        }
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += sx[static_cast<std::size_t>(i)] * xp[i];
        return total;
    };

    double obj = matvec_objective();
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        if (obj <= 0.0) {
            // Support spans no edge; no ascent direction exists.
            t.converged = false;
            break;
        }
        const double inv = 1.0 / obj;
        for (int i = 0; i < n; ++i) {
            const double v = xp[i] * (sx[static_cast<std::size_t>(i)] * inv);
            xp[i] = v < 1e-280 ? 0.0 : v;
        }
        const double next = matvec_objective();
        const double gain = next - obj;
        if (gain < -1e-9 * std::max(1.0, std::abs(obj)))
            throw std::logic_error("replicator objective decreased");
        obj = next;
        if (gain < options.min_gain) {
            t.converged = true;
            break;
        }
    }
    t.point = std::move(x);
    t.value = obj;
    return t;
}

std::vector<double> real_entries_checked(const ComplexMatrix& s) {
    const int n = s.order();
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex z = s(i, j);
            if (std::abs(z.imag()) > 1e-12 || z.real() < -1e-12)
                throw std::invalid_argument(
                    "replicator requires real nonnegative entries");
            if (std::abs(z - std::conj(s(j, i))) > 1e-12)
                throw std::invalid_argument("replicator requires a symmetric matrix");
            out[static_cast<std::size_t>(i) * n + j] = std::max(0.0, z.real());
        }
        if (std::abs(s(i, i)) > 1e-12)
            throw std::invalid_argument("replicator requires a zero diagonal");
        out[static_cast<std::size_t>(i) * n + i] = 0.0;
    }
    return out;
}

MSResult replicator_on(const std::vector<double>& s, int n, int restarts, std::uint64_t seed,
                       const ReplicatorOptions& options) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");

    MSResult best;
    best.restarts_used = restarts;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> start;
        if (r == 0) {
            start.assign(static_cast<std::size_t>(n), 1.0 / n);
        } else {
            Rng rng(substream_seed(seed, static_cast<std::uint64_t>(r)));
            start = random_simplex_point(rng, n).coords;
        }
        Trajectory t = run_replicator(s, n, std::move(start), options);
        if (!have_best || t.value > best.value) {
            best.value = t.value;
            best.argmax = SimplexVector::checked(std::move(t.point));
            best.converged = t.converged;
            have_best = true;
        }
    }
    return best;
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> symmetrize_support(const ComplexMatrix& a) {
    require_zero_one_zero_diagonal(a);
    const int n = a.order();
    ComplexMatrix b(n);
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double bij = a(i, j).real() * a(j, i).real();
            b(i, j) = bij;
            c(i, j) = a(i, j).real() - bij;
        }
    }
    return {std::move(b), std::move(c)};
}

ComplexMatrix saturate(const ComplexMatrix& a) {
    require_zero_one_zero_diagonal(a);
    const int n = a.order();
    ComplexMatrix out(n, a.entries());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (out(i, j).real() == 0.0 && out(j, i).real() == 0.0) out(i, j) = 1.0;
    return out;
}

double ms_bound_symmetric(int omega) {
    if (omega < 1) throw std::invalid_argument("omega must be >= 1");
    return 1.0 - 1.0 / omega;
}

double lemma1_bound(int omega, int n) {
    if (omega < 1) throw std::invalid_argument("omega must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (omega > n) throw std::invalid_argument("omega cannot exceed n");
    return 1.0 - 1.0 / (2.0 * omega) - 1.0 / (2.0 * n);
}

MSResult replicator_max(const ComplexMatrix& s, int restarts, std::uint64_t seed,
                        const ReplicatorOptions& options) {
    const int n = s.order();
    const std::vector<double> entries = real_entries_checked(s);
    MSResult result = replicator_on(entries, n, restarts, seed, options);
    result.value = quadratic_form(s, result.argmax);
    return result;
}

MSResult general_simplex_max(const ComplexMatrix& a, int restarts, std::uint64_t seed) {
    require_zero_one_zero_diagonal(a);
    const int n = a.order();
    std::vector<double> sym(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                sym[static_cast<std::size_t>(i) * n + j] =
                    0.5 * (a(i, j).real() + a(j, i).real());
    MSResult result = replicator_on(sym, n, restarts, seed, ReplicatorOptions{});
    // For real x, <Ax,x> = <Sx,x>; report the value against A itself.
    result.value = quadratic_form(a, result.argmax);
    return result;
}

double simplex_grid_max(const ComplexMatrix& a, int denominator) {
    const int n = a.order();
    if (n > 5 || denominator > 30)
        throw std::invalid_argument("oracle size limit: n <= 5 and denominator <= 30");
    if (denominator < 1) throw std::invalid_argument("denominator must be >= 1");

    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    double best = 0.0;
    bool first = true;

    auto evaluate = [&]() {
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] =
                static_cast<double>(counts[static_cast<std::size_t>(i)]) / denominator;
        const double v = quadratic_form(a, std::span<const double>(x));
        if (first || v > best) {
            best = v;
            first = false;
        }
    };

    // Enumerate all compositions of `denominator` into n parts.
    auto recurse = [&](auto&& self, int index, int remaining) -> void {
        if (index == n - 1) {
            counts[static_cast<std::size_t>(index)] = remaining;
            evaluate();
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            counts[static_cast<std::size_t>(index)] = k;
            self(self, index + 1, remaining - k);
        }
    };
    recurse(recurse, 0, denominator);
    return best;
}

}  // namespace numrad
