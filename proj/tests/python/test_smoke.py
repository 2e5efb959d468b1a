"""Smoke tests for the compiled numrad extension."""

import math

import pytest

numrad = pytest.importorskip("numrad")


def test_numerical_radius_of_nilpotent():
    a = numrad.Matrix([[0, 1], [0, 0]])
    r = numrad.numerical_radius(a)
    assert abs(r.value - 0.5) < 1e-9
    assert 0.0 <= r.theta_star < 2 * math.pi
    assert len(r.witness) == 2


def test_turan_construction_and_omega():
    t = numrad.turan_partite_filled(4, 2)
    assert numrad.frobenius_norm_sq(t) == 10.0
    assert numrad.omega(t) == 2
    assert numrad.has_zero_diagonal(t)


def test_theorem1_equality_on_clique():
    a = numrad.clique_plus_isolated(5, 3)
    rep = numrad.check_theorem1(a)
    assert rep.holds
    assert abs(rep.slack) < 1e-8
    assert rep.params.omega == 3


def test_theorem2_on_turan_matrix():
    rep = numrad.check_theorem2(numrad.turan_partite_filled(6, 3))
    assert rep.holds
    assert abs(rep.slack) < 1e-6 * rep.params.frob_sq


def test_simplex_max_on_triangle():
    ms = numrad.general_simplex_max(numrad.clique_plus_isolated(3, 3), seed=5)
    assert abs(ms.value - 2.0 / 3.0) < 1e-6
    assert ms.converged
    assert abs(sum(ms.argmax) - 1.0) < 1e-12
    assert ms.value >= numrad.simplex_grid_max(numrad.clique_plus_isolated(3, 3), 12) - 1e-9


def test_saturation_and_bounds():
    z = numrad.Matrix(3)
    s = numrad.saturate(z)
    assert numrad.frobenius_norm_sq(s) == 3.0
    assert numrad.lemma1_bound(2, 4) == 0.625
    assert numrad.ms_bound_symmetric(2) == 0.5
    with pytest.raises(ValueError):
        numrad.lemma1_bound(5, 4)


def test_equality_certificate_roundtrip():
    x = [3 ** -0.5] * 3 + [0.0, 0.0]
    a = numrad.proposition_matrix([1, 2, 3, 0, 0], x, 3.0)
    cert = numrad.check_equality_conditions(a, x)
    assert cert.overall
    assert cert.equality_holds
    assert cert.partition == [1, 2, 3, 0, 0]


def test_matrix_json_roundtrip():
    a = numrad.Matrix([[0, 1j], [-1j, 0]])
    back = numrad.matrix_from_json(numrad.matrix_to_json(a))
    assert back.to_rows() == a.to_rows()
    assert numrad.is_hermitian(back)


def test_hermitian_agreement():
    a = numrad.clique_plus_isolated(6, 4)
    assert abs(numrad.numerical_radius(a).value - numrad.spectral_radius_hermitian(a)) < 1e-10


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        numrad.spectral_radius_hermitian(numrad.Matrix([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        numrad.general_simplex_max(numrad.Matrix([[0, 0.5], [0.5, 0]]))
