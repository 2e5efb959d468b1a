#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "helpers.hpp"
#include "numrad/extremal.hpp"
#include "numrad/pattern.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"

using namespace numrad;

TEST_CASE("make_partite_spec balances class sizes") {
    for (int n = 2; n <= 14; ++n) {
        for (int r = 2; r <= n; ++r) {
            const PartiteSpec spec = make_partite_spec(n, r);
            CHECK(spec.nu == n % r);
            CHECK(std::accumulate(spec.class_sizes.begin(), spec.class_sizes.end(), 0) == n);
            int big = 0;
            for (int s : spec.class_sizes) {
                CHECK((s == n / r || s == n / r + 1));
                if (s == n / r + 1 && spec.nu > 0) ++big;
            }
            if (spec.nu > 0) CHECK(big == spec.nu);
            // larger classes first, contiguous labels
            for (std::size_t k = 1; k < spec.class_sizes.size(); ++k)
                CHECK(spec.class_sizes[k - 1] >= spec.class_sizes[k]);
            CHECK(static_cast<int>(spec.labels.size()) == n);
        }
    }
    CHECK_THROWS_AS((void)make_partite_spec(4, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)make_partite_spec(2, 3), std::invalid_argument);
}

TEST_CASE("turan_partite_filled matches its stated instances") {
    const ComplexMatrix t42 = turan_partite_filled(4, 2);
    CHECK(frobenius_norm_sq(t42) == 10.0);
    CHECK(omega_exact(extract_pattern(t42, 0.0)) == 2);
    CHECK(has_zero_diagonal(t42));
    CHECK(is_zero_one(t42));

    const ComplexMatrix t63 = turan_partite_filled(6, 3);
    CHECK(frobenius_norm_sq(t63) == 27.0);
    CHECK(omega_exact(extract_pattern(t63, 0.0)) == 3);

    CHECK(frobenius_norm_sq(turan_partite_filled(5, 2)) == 16.0);

    CHECK_THROWS_AS((void)turan_partite_filled(4, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)turan_partite_filled(2, 3), std::invalid_argument);
}

TEST_CASE("turan_filled_ones closed formula is exact for all 2 <= r <= n <= 40") {
    for (int n = 2; n <= 40; ++n)
        for (int r = 2; r <= n; ++r) {
            const ComplexMatrix a = turan_partite_filled(n, r);
            CHECK(frobenius_norm_sq(a) == static_cast<double>(turan_filled_ones(n, r)));
            CHECK(omega_exact(extract_pattern(a, 0.0)) == r);
        }
}

TEST_CASE("uniform-vector identity holds in exact integer arithmetic") {
    // With x uniform, 2 r n^2 <Ax,x> = 2 r ones must equal
    // 2 r n^2 - n^2 - r n + nu^2 - r nu.
    for (int n = 2; n <= 40; ++n)
        for (int r = 2; r <= n; ++r) {
            const long long nu = n % r;
            const long long ones = turan_filled_ones(n, r);
            const long long lhs = 2LL * r * ones;
            const long long rhs = 2LL * r * n * n - 1LL * n * n - 1LL * r * n + nu * nu - r * nu;
            CHECK(lhs == rhs);
            // and the uniform value dominates 1 - 1/2r - 1/2n - r/(8n^2)
            const double value = static_cast<double>(ones) / (static_cast<double>(n) * n);
            const double lower = 1.0 - 0.5 / r - 0.5 / n - r / (8.0 * n * n);
            CHECK(value >= lower - 1e-12);
        }
}

TEST_CASE("clique_plus_isolated matches its stated instances") {
    const ComplexMatrix c53 = clique_plus_isolated(5, 3);
    CHECK(frobenius_norm_sq(c53) == 6.0);
    CHECK(is_hermitian(c53));
    const double eta = numerical_radius(c53).value;
    CHECK(std::abs(eta - 2.0) <= 1e-9);
    CHECK(std::abs(eta * eta - (1.0 - 1.0 / 3.0) * 6.0) <= 1e-9);

    CHECK(clique_plus_isolated(2, 2).entries() ==
          ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}).entries());

    CHECK(std::abs(numerical_radius(clique_plus_isolated(4, 4)).value - 3.0) <= 1e-9);
}

TEST_CASE("clique_plus_isolated achieves hermitian-bound equality for all n <= 20") {
    for (int n = 2; n <= 20; ++n)
        for (int r = 2; r <= n; ++r) {
            const ComplexMatrix a = clique_plus_isolated(n, r);
            const double eta = numerical_radius(a).value;
            CHECK(std::abs(eta * eta - (1.0 - 1.0 / r) * frobenius_norm_sq(a)) <= 1e-9);
        }
}

TEST_CASE("turan_partite_filled is tight for the general bound when r divides n") {
    for (auto [n, r] : {std::pair{4, 2}, {6, 3}, {8, 4}, {9, 3}}) {
        const ComplexMatrix a = turan_partite_filled(n, r);
        const double eta = numerical_radius(a).value;
        const double frob_sq = frobenius_norm_sq(a);
        CHECK(std::abs(eta * eta - (1.0 - 0.5 / r - 0.5 / n) * frob_sq) <= 1e-8 * frob_sq);
    }
}

TEST_CASE("proposition_matrix pins its stated instances") {
    const double s = 1.0 / std::sqrt(2.0);
    SUBCASE("order 2, c = 1") {
        const ComplexMatrix a =
            proposition_matrix({1, 2}, UnitVector::checked({s, s}), Complex(1.0, 0.0));
        CHECK(std::abs(a(0, 1) - Complex(0.5, 0.0)) <= 1e-15);
        CHECK(std::abs(a(1, 0) - Complex(0.5, 0.0)) <= 1e-15);
        const double eta = numerical_radius(a).value;
        CHECK(std::abs(eta * eta - 0.5 * frobenius_norm_sq(a)) <= 1e-12);
    }
    SUBCASE("order 3 with an isolated vertex, c = 2") {
        const ComplexMatrix a =
            proposition_matrix({1, 2, 0}, UnitVector::checked({s, s, 0.0}), Complex(2.0, 0.0));
        CHECK(std::abs(a(0, 1) - Complex(1.0, 0.0)) <= 1e-12);
        CHECK(std::abs(a(0, 2)) <= 1e-15);
        CHECK(std::abs(numerical_radius(a).value - 1.0) <= 1e-9);
        CHECK(std::abs(frobenius_norm_sq(a) - 2.0) <= 1e-12);
    }
    SUBCASE("purely imaginary c still gives equality at r = 2") {
        const ComplexMatrix a =
            proposition_matrix({1, 2}, UnitVector::checked({s, s}), Complex(0.0, 1.0));
        CHECK(std::abs(a(0, 1) - Complex(0.0, 0.5)) <= 1e-15);
        const double eta = numerical_radius(a).value;
        CHECK(std::abs(eta - 0.5) <= 1e-9);
        CHECK(std::abs(frobenius_norm_sq(a) - 0.5) <= 1e-12);
        CHECK(std::abs(eta * eta - 0.5 * frobenius_norm_sq(a)) <= 1e-10);
    }
}

TEST_CASE("proposition_matrix rejects invalid configurations") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK_THROWS_AS(
        (void)proposition_matrix({1, 2}, UnitVector::checked({s, s}), Complex(0.0, 0.0)),
        std::invalid_argument);
    // x nonzero on N_0
    CHECK_THROWS_AS(
        (void)proposition_matrix({0, 1, 2}, UnitVector::checked({s, s, 0.0}), Complex(1.0, 0.0)),
        std::invalid_argument);
    // class masses unequal
    CHECK_THROWS_AS(
        (void)proposition_matrix({1, 2}, UnitVector::checked({0.8, 0.6}), Complex(1.0, 0.0)),
        std::invalid_argument);
    // r < 2
    CHECK_THROWS_AS((void)proposition_matrix({1, 1}, UnitVector::checked({s, s}), Complex(1.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("check_equality_conditions round-trips proposition matrices") {
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = rng.uniform_int(2, 5);
        const int n = r + rng.uniform_int(0, 4);
        // one support vertex per class, random phases, magnitude 1/sqrt(r)
        std::vector<int> support(static_cast<std::size_t>(n), 0);
        std::vector<Complex> coords(static_cast<std::size_t>(n), Complex(0.0, 0.0));
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t k = order.size(); k > 1; --k)
            std::swap(order[k - 1], order[rng.next_u64() % k]);
        for (int k = 0; k < r; ++k) {
            const int v = order[static_cast<std::size_t>(k)];
            support[static_cast<std::size_t>(v)] = k + 1;
            coords[static_cast<std::size_t>(v)] =
                std::polar(1.0 / std::sqrt(static_cast<double>(r)),
                           2.0 * 3.141592653589793 * rng.uniform01());
        }
        // non-real c only where equality is attainable (r = 2)
        const Complex c = r == 2 ? Complex(0.5 + rng.uniform01(), rng.gaussian())
                                 : Complex(0.5 + rng.uniform01(), 0.0);
        const UnitVector x = UnitVector::normalized(coords);
        const ComplexMatrix a = proposition_matrix(support, x, c);
        const EqualityCertificate cert = check_equality_conditions(a, x);
        CHECK(cert.condition_i);
        CHECK(cert.condition_ii);
        CHECK(cert.condition_iii);
        CHECK(cert.overall);
        CHECK(cert.r == r);
        CHECK(std::abs(cert.c - c) <= 1e-7 * std::abs(c));
        CHECK(cert.equality_holds);
    }
}

TEST_CASE("check_equality_conditions certifies the clique construction") {
    const ComplexMatrix a = clique_plus_isolated(5, 3);
    std::vector<Complex> coords(5, Complex(0.0, 0.0));
    for (int i = 0; i < 3; ++i) coords[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(3.0);
    const EqualityCertificate cert = check_equality_conditions(a, UnitVector::checked(coords));
    CHECK(cert.overall);
    CHECK(std::abs(cert.c - Complex(3.0, 0.0)) <= 1e-9);
    CHECK(cert.partition == std::vector<int>{1, 2, 3, 0, 0});
    CHECK(cert.equality_holds);
}

TEST_CASE("a 5-cycle with its top eigenvector is not an equality case") {
    const ComplexMatrix a = testutil::cycle_adjacency(5);
    const auto [lambda, top] = lambda_max_hermitian(a);
    CHECK(lambda == doctest::Approx(2.0).epsilon(1e-10));
    const EqualityCertificate cert = check_equality_conditions(a, top);
    CHECK_FALSE(cert.overall);
    CHECK_FALSE(cert.equality_holds);
    CHECK(cert.equality_gap < 0.0);
}

TEST_CASE("conditions can hold while equality fails: non-real c with r = 3") {
    // Gauge holonomy: arg(c) on a triangle cannot be rotated away, so the
    // stated conditions are satisfiable with eta^2 strictly below
    // (1 - 1/r)|A|^2. The certificate reports both facts separately.
    const double s = 1.0 / std::sqrt(3.0);
    const UnitVector x = UnitVector::checked({s, s, s});
    const ComplexMatrix a = proposition_matrix({1, 2, 3}, x, Complex(0.0, 1.0));
    const EqualityCertificate cert = check_equality_conditions(a, x);
    CHECK(cert.overall);
    CHECK_FALSE(cert.equality_holds);
    CHECK(cert.equality_gap == doctest::Approx(1.0 / 3.0 - 4.0 / 9.0).epsilon(1e-6));
}

TEST_CASE("check_equality_conditions validates its input") {
    CHECK_THROWS_WITH_AS(
        (void)check_equality_conditions(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}),
                                        UnitVector::basis(2, 0)),
        "not Hermitian", std::invalid_argument);
    ComplexMatrix diag(2);
    diag(0, 0) = 1.0;
    CHECK_THROWS_WITH_AS((void)check_equality_conditions(diag, UnitVector::basis(2, 0)),
                         "nonzero diagonal", std::invalid_argument);
}
