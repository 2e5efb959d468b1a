#include "numrad/extremal.hpp"

#include <cmath>
#include <stdexcept>

#include "numrad/pattern.hpp"
#include "numrad/radius.hpp"

namespace numrad {

namespace {

void check_partite_args(int n, int r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (r > n) throw std::invalid_argument("r cannot exceed n");
}

long long binom2(long long k) { return k * (k - 1) / 2; }

}  // namespace

PartiteSpec make_partite_spec(int n, int r) {
    check_partite_args(n, r);
    PartiteSpec spec;
    spec.n = n;
    spec.r = r;
    spec.nu = n % r;
    spec.class_sizes.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k)
        spec.class_sizes.push_back(n / r + (k < spec.nu ? 1 : 0));
    spec.labels.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < spec.class_sizes[static_cast<std::size_t>(k)]; ++i)
            spec.labels.push_back(k);
    return spec;
}

ComplexMatrix turan_partite_filled(int n, int r) {
    const PartiteSpec spec = make_partite_spec(n, r);
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool cross = spec.labels[static_cast<std::size_t>(i)] !=
                               spec.labels[static_cast<std::size_t>(j)];
            if (cross || i < j) a(i, j) = 1.0;
        }
    }
    return a;
}

long long turan_filled_ones(int n, int r) {
    check_partite_args(n, r);
    const long long nn = n;
    const long long rr = r;
    const long long nu = nn % rr;
    const long long cross_num = binom2(rr) * (nn * nn - nu * nu);
    if (cross_num % (rr * rr) != 0)
        throw std::logic_error("cross-pair count is not integral");
    return binom2(nn) + cross_num / (rr * rr) + binom2(nu);
}

ComplexMatrix clique_plus_isolated(int n, int r) {
    check_partite_args(n, r);
    ComplexMatrix a(n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) a(i, j) = 1.0;
    return a;
}

ComplexMatrix proposition_matrix(const std::vector<int>& partition, const UnitVector& x,
                                 Complex c) {
    if (c == Complex(0.0, 0.0)) throw std::invalid_argument("c must be nonzero");
    const int n = x.size();
    if (static_cast<int>(partition.size()) != n)
        throw std::invalid_argument("dimension mismatch between partition and vector");

    int r = 0;
    for (int label : partition) {
        if (label < 0) throw std::invalid_argument("partition labels must be in {0..r}");
        r = std::max(r, label);
    }
    if (r < 2) throw std::invalid_argument("not an equality configuration: needs r >= 2");

    constexpr double kTol = 1e-8;
    std::vector<double> class_mass(static_cast<std::size_t>(r) + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        const double mass = std::norm(x.coords[static_cast<std::size_t>(i)]);
        const int label = partition[static_cast<std::size_t>(i)];
        class_mass[static_cast<std::size_t>(label)] += mass;
        if (label == 0 && mass > kTol * kTol)
            throw std::invalid_argument("not an equality configuration: x nonzero on N_0");
    }
    for (int k = 1; k <= r; ++k)
        if (std::abs(class_mass[static_cast<std::size_t>(k)] - 1.0 / r) > kTol)
            throw std::invalid_argument("not an equality configuration: class mass != 1/r");

    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Complex entry = c * x.coords[static_cast<std::size_t>(i)] *
                                  std::conj(x.coords[static_cast<std::size_t>(j)]);
            a(i, j) = entry;
            a(j, i) = std::conj(entry);
        }
    }
    return a;
}

EqualityCertificate check_equality_conditions(const ComplexMatrix& a, const UnitVector& x,
                                              double tol) {
    if (!is_hermitian(a, 1e-12)) throw std::invalid_argument("not Hermitian");
    if (!has_zero_diagonal(a, 1e-12)) throw std::invalid_argument("nonzero diagonal");
    const int n = a.order();
    if (x.size() != n) throw std::invalid_argument("dimension mismatch between matrix and vector");

    EqualityCertificate cert;
    cert.x = x;
    cert.partition.assign(static_cast<std::size_t>(n), 0);
    cert.r = omega_exact(extract_pattern(a, kFloatPatternTol));

    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (std::abs(x.coords[static_cast<std::size_t>(i)]) > tol) support.push_back(i);

    // c from the first pair with a usable quotient.
    for (int i = 0; i < n && cert.c == Complex(0.0, 0.0); ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Complex denom =
                x.coords[static_cast<std::size_t>(i)] * std::conj(x.coords[static_cast<std::size_t>(j)]);
            if (std::abs(a(i, j)) > tol && std::abs(denom) > tol * tol) {
                cert.c = a(i, j) / denom;
                break;
            }
        }
    }

    const bool support_matches = cert.r >= 2 && static_cast<int>(support.size()) == cert.r;
    if (support_matches) {
        int next_label = 1;
        for (int i : support) cert.partition[static_cast<std::size_t>(i)] = next_label++;
    }

    // (i) x vanishes on the zero class.
    cert.condition_i = true;
    for (int i = 0; i < n; ++i)
        if (cert.partition[static_cast<std::size_t>(i)] == 0 &&
            std::abs(x.coords[static_cast<std::size_t>(i)]) > tol)
            cert.condition_i = false;

    // (ii) each of the r classes carries mass 1/r.
    cert.condition_ii = support_matches;
    if (support_matches)
        for (int i : support)
            if (std::abs(std::norm(x.coords[static_cast<std::size_t>(i)]) - 1.0 / cert.r) > tol)
                cert.condition_ii = false;

    // (iii) a_ij = c x_i conj(x_j) for all i < j.
    cert.condition_iii = cert.c != Complex(0.0, 0.0);
    if (cert.condition_iii) {
        for (int i = 0; i < n && cert.condition_iii; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Complex expected = cert.c * x.coords[static_cast<std::size_t>(i)] *
                                         std::conj(x.coords[static_cast<std::size_t>(j)]);
                if (std::abs(a(i, j) - expected) > tol) {
                    cert.condition_iii = false;
                    break;
                }
            }
    }

    cert.overall = cert.condition_i && cert.condition_ii && cert.condition_iii;

    const double frob_sq = frobenius_norm_sq(a);
    const double eta = numerical_radius(a).value;
    const double factor = cert.r >= 1 ? 1.0 - 1.0 / cert.r : 0.0;
    cert.equality_gap = eta * eta - factor * frob_sq;
    cert.equality_holds = std::abs(cert.equality_gap) <= 1e-7 * std::max(1.0, frob_sq);
    return cert;
}

}  // namespace numrad
