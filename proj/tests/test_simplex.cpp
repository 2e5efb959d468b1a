#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "numrad/extremal.hpp"
#include "numrad/pattern.hpp"
#include "numrad/rng.hpp"
#include "numrad/simplex.hpp"

using namespace numrad;
using testutil::random_adjacency;
using testutil::random_zero_one;

namespace {

ComplexMatrix k22() {
    ComplexMatrix a(4);
    for (int i : {0, 1})
        for (int j : {2, 3}) {
            a(i, j) = 1.0;
            a(j, i) = 1.0;
        }
    return a;
}

double norm_sq(const SimplexVector& x) {
    double total = 0.0;
    for (double v : x.coords) total += v * v;
    return total;
}

}  // namespace

TEST_CASE("symmetrize_support splits A into B and C") {
    SUBCASE("symmetric input maps to (A, 0)") {
        Rng rng(5);
        const ComplexMatrix a = random_adjacency(rng, 6, 0.5);
        const auto [b, c] = symmetrize_support(a);
        CHECK(b.entries() == a.entries());
        CHECK(frobenius_norm_sq(c) == 0.0);
    }
    SUBCASE("one-directional entry lands in C") {
        const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
        const auto [b, c] = symmetrize_support(a);
        CHECK(frobenius_norm_sq(b) == 0.0);
        CHECK(c(0, 1) == Complex(1.0, 0.0));
    }
    SUBCASE("filled turan matrix splits into the r-partite adjacency and within-class ones") {
        const ComplexMatrix a = turan_partite_filled(4, 2);
        const auto [b, c] = symmetrize_support(a);
        CHECK(b.entries() == k22().entries());
        ComplexMatrix expected_c(4);
        expected_c(0, 1) = 1.0;
        expected_c(2, 3) = 1.0;
        CHECK(c.entries() == expected_c.entries());
    }
    SUBCASE("B + C = A exactly") {
        Rng rng(8);
        const ComplexMatrix a = random_zero_one(rng, 7, 0.5);
        const auto [b, c] = symmetrize_support(a);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) CHECK(b(i, j) + c(i, j) == a(i, j));
    }
    SUBCASE("rejects non-0/1 and nonzero diagonals") {
        ComplexMatrix bad(2);
        bad(0, 1) = 0.5;
        CHECK_THROWS_WITH_AS((void)symmetrize_support(bad), "not a 0/1 zero-diagonal matrix",
                             std::invalid_argument);
        ComplexMatrix diag(2);
        diag(0, 0) = 1.0;
        CHECK_THROWS_WITH_AS((void)symmetrize_support(diag), "not a 0/1 zero-diagonal matrix",
                             std::invalid_argument);
    }
}

TEST_CASE("saturate fills mutually-zero pairs upper-triangularly") {
    const ComplexMatrix z3 = saturate(ComplexMatrix(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(z3(i, j) == (i < j ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));

    const ComplexMatrix fixed = saturate(z3);
    CHECK(fixed.entries() == z3.entries());

    CHECK(saturate(k22()).entries() == turan_partite_filled(4, 2).entries());
}

TEST_CASE("saturation keeps omega and never lowers nonnegative quadratic forms") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const ComplexMatrix a = random_zero_one(rng, n, rng.uniform01());
        const ComplexMatrix s = saturate(a);
        CHECK(omega_exact(extract_pattern(s, 0.0)) == omega_exact(extract_pattern(a, 0.0)));
        const SimplexVector x = random_simplex_point(rng, n);
        CHECK(quadratic_form(s, x) >= quadratic_form(a, x) - 1e-15);
    }
}

TEST_CASE("closed-form bounds") {
    CHECK(ms_bound_symmetric(1) == 0.0);
    CHECK(ms_bound_symmetric(2) == 0.5);
    CHECK(ms_bound_symmetric(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)ms_bound_symmetric(0), std::invalid_argument);

    CHECK(lemma1_bound(2, 4) == 0.625);
    CHECK(lemma1_bound(3, 6) == 0.75);
    for (int n = 1; n <= 9; ++n) CHECK(lemma1_bound(n, n) == doctest::Approx(1.0 - 1.0 / n));
    CHECK_THROWS_AS((void)lemma1_bound(5, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)lemma1_bound(0, 4), std::invalid_argument);
}

TEST_CASE("replicator_max finds the known maxima") {
    const MSResult k3 = replicator_max(clique_plus_isolated(3, 3), 5, 7);
    CHECK(std::abs(k3.value - 2.0 / 3.0) <= 1e-6);
    for (double v : k3.argmax.coords) CHECK(std::abs(v - 1.0 / 3.0) <= 1e-5);
    CHECK(k3.restarts_used == 5);

    const MSResult edgeless = replicator_max(ComplexMatrix(4), 3, 1);
    CHECK(edgeless.value == 0.0);
    CHECK_FALSE(edgeless.converged);
    CHECK(edgeless.argmax.coords == std::vector<double>(4, 0.25));

    const MSResult bipartite = replicator_max(k22(), 20, 3);
    CHECK(std::abs(bipartite.value - 0.5) <= 1e-6);
}

TEST_CASE("replicator_max validates its input") {
    CHECK_THROWS_AS((void)replicator_max(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)replicator_max(ComplexMatrix::from_rows({{0.0, -1.0}, {-1.0, 0.0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)replicator_max(ComplexMatrix::from_rows(
            {{0.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 0.0}})),
        std::invalid_argument);
    ComplexMatrix diag(2);
    diag(0, 0) = 1.0;
    CHECK_THROWS_AS((void)replicator_max(diag), std::invalid_argument);
    CHECK_THROWS_AS((void)replicator_max(k22(), 0, 1), std::invalid_argument);
}

TEST_CASE("general_simplex_max examples") {
    const MSResult nil = general_simplex_max(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 20, 2);
    CHECK(std::abs(nil.value - 0.25) <= 1e-9);
    CHECK(std::abs(nil.argmax.coords[0] - 0.5) <= 1e-5);

    CHECK(std::abs(general_simplex_max(turan_partite_filled(6, 3), 20, 2).value - 0.75) <= 1e-6);
    CHECK(std::abs(general_simplex_max(turan_partite_filled(4, 2), 20, 2).value - 0.625) <= 1e-6);

    ComplexMatrix bad(2);
    bad(0, 1) = Complex(0.0, 1.0);
    CHECK_THROWS_WITH_AS((void)general_simplex_max(bad), "not a 0/1 zero-diagonal matrix",
                         std::invalid_argument);
}

TEST_CASE("simplex_grid_max oracle examples and guards") {
    CHECK(std::abs(simplex_grid_max(clique_plus_isolated(3, 3), 12) - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(simplex_grid_max(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 10) - 0.25) <=
          1e-12);
    CHECK(simplex_grid_max(ComplexMatrix(3), 6) == 0.0);
    CHECK_THROWS_WITH_AS((void)simplex_grid_max(ComplexMatrix(6), 10),
                         "oracle size limit: n <= 5 and denominator <= 30", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)simplex_grid_max(ComplexMatrix(3), 31),
                         "oracle size limit: n <= 5 and denominator <= 30", std::invalid_argument);
}

TEST_CASE("decomposition and halving identities on saturated matrices") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const ComplexMatrix a = saturate(random_zero_one(rng, n, rng.uniform01()));
        const auto [b, c] = symmetrize_support(a);
        const SimplexVector x = random_simplex_point(rng, n);
        const double bx = quadratic_form(b, x);
        const double cx = quadratic_form(c, x);
        const double ax = quadratic_form(a, x);
        const double remainder = 1.0 - norm_sq(x);
        CHECK(std::abs(bx + 2.0 * cx - remainder) <= 1e-12);
        CHECK(std::abs(ax - 0.5 * remainder - 0.5 * bx) <= 1e-12);
    }
}

TEST_CASE("general_simplex_max stays below the closed-form bound") {
    Rng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const ComplexMatrix a = random_zero_one(rng, n, rng.uniform01());
        const int w = omega_exact(extract_pattern(a, 0.0));
        const MSResult ms = general_simplex_max(a, 20, rng.next_u64());
        CHECK(ms.value <= lemma1_bound(w, n) + 1e-8);
        CHECK(std::abs(ms.value - quadratic_form(a, ms.argmax)) <= 1e-10);
    }
}

TEST_CASE("replicator attains 1 - 1/omega on symmetric adjacency matrices") {
    Rng rng(39);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const ComplexMatrix a = random_adjacency(rng, n, rng.uniform01());
        const int w = omega_exact(extract_pattern(a, 0.0));
        const MSResult ms = replicator_max(a, 20, rng.next_u64());
        CHECK(ms.value >= 1.0 - 1.0 / w - 1e-4);
        CHECK(ms.value <= 1.0 - 1.0 / w + 1e-9);
    }
}

TEST_CASE("solver dominates the grid oracle on small instances") {
    Rng rng(44);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.uniform_int(2, 5);
        const ComplexMatrix a = random_zero_one(rng, n, rng.uniform01());
        const double grid = simplex_grid_max(a, 24);
        const double solved = general_simplex_max(a, 20, rng.next_u64()).value;
        CHECK(solved >= grid - 1e-9);
    }
}

TEST_CASE("replicator runs are deterministic in (input, seed)") {
    Rng rng(50);
    const ComplexMatrix a = random_zero_one(rng, 8, 0.5);
    const MSResult first = general_simplex_max(a, 20, 1234);
    const MSResult second = general_simplex_max(a, 20, 1234);
    CHECK(first.value == second.value);
    CHECK(first.argmax.coords == second.argmax.coords);
    CHECK(first.converged == second.converged);
}
