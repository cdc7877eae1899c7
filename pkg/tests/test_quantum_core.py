import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import KET0, KET1, MINUS, PLUS, SQRT2, random_distribution, random_phases
from conjvar.encoding import encode
from conjvar.errors import DimensionMismatchError, InvalidStateError
from conjvar.quantum_core import (
    as_density,
    commutator,
    eig_hermitian,
    expand_transition_probability,
    expectation,
    frobenius_norm,
    global_phase_multiply,
    inner_product,
    operator_expectation,
    outer,
    projector,
    random_density,
    random_pure_state,
    spectral_norm,
    trace,
    trace_product,
    transition_probability,
)


def test_inner_product_examples():
    assert inner_product(KET0, KET0) == 1 + 0j
    assert inner_product(KET0, KET1) == 0j
    assert inner_product(PLUS, KET0) == pytest.approx(1 / SQRT2, abs=1e-15)


def test_inner_product_conjugate_symmetric(rng):
    for _ in range(50):
        a, b = random_pure_state(4, rng), random_pure_state(4, rng)
        assert inner_product(a, b) == pytest.approx(np.conj(inner_product(b, a)), abs=1e-14)


def test_inner_product_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        inner_product(KET0, np.ones(3) / np.sqrt(3))


def test_transition_probability_examples(rng):
    assert transition_probability(PLUS, KET0) == pytest.approx(0.5, abs=1e-15)
    psi = random_pure_state(5, rng)
    assert transition_probability(psi, psi) == pytest.approx(1.0, abs=1e-14)


def test_transition_probability_rejects_unnormalized():
    with pytest.raises(InvalidStateError):
        transition_probability(np.array([1.0, 1.0]), KET0)


def test_transition_probability_matches_expansion_3d(rng):
    p, q = random_distribution(3, rng), random_distribution(3, rng)
    phi, chi = random_phases(3, rng), random_phases(3, rng)
    direct = transition_probability(encode(q, chi), encode(p, phi))
    assert direct == pytest.approx(expand_transition_probability(p, q, phi - chi), abs=1e-12)


@pytest.mark.parametrize(
    "p, q, gamma, expected",
    [
        ((0.5, 0.5), (0.5, 0.5), (0.0, 0.0), 1.0),
        ((0.5, 0.5), (0.5, 0.5), (0.0, np.pi), 0.0),
        ((1.0, 0.0), (0.0, 1.0), (0.3, -2.0), 0.0),
    ],
)
def test_expand_transition_probability_examples(p, q, gamma, expected):
    assert expand_transition_probability(p, q, gamma) == pytest.approx(expected, abs=1e-15)


def test_expand_transition_probability_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        expand_transition_probability([0.5, 0.5], [1.0], [0.0, 0.0])


def test_expectation_examples():
    assert expectation(np.eye(2) / 2, KET0) == pytest.approx(0.5)
    assert expectation(outer(PLUS), PLUS) == pytest.approx(1.0, abs=1e-15)
    assert expectation(outer(PLUS), KET0) == pytest.approx(0.5, abs=1e-15)


def test_expectation_of_pure_state_is_transition_probability(rng):
    for _ in range(20):
        psi, chi = random_pure_state(3, rng), random_pure_state(3, rng)
        assert expectation(outer(psi), chi) == pytest.approx(transition_probability(psi, chi), abs=1e-14)


def test_expectation_rejects_non_density():
    with pytest.raises(InvalidStateError):
        expectation(np.diag([1.5, -0.5]), KET0)


def test_trace_examples(rng):
    assert trace(np.eye(2)) == 2
    assert trace(projector(random_pure_state(4, rng))) == pytest.approx(1.0, abs=1e-14)


def test_trace_is_cyclic(rng):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert trace(a @ b) == pytest.approx(trace(b @ a), abs=1e-12)
    assert trace_product(a, b) == pytest.approx(trace(a @ b), abs=1e-12)


def test_trace_of_density_pairs_is_bounded_and_real(rng):
    for _ in range(1000):
        d = int(rng.integers(2, 7))
        rho, sigma = random_density(d, rng), random_density(d, rng)
        t = trace_product(rho, sigma)
        assert -1e-12 <= t.real <= 1 + 1e-12
        assert abs(t.imag) <= 1e-12


def test_frobenius_norm_examples(rng):
    assert frobenius_norm(np.zeros((3, 3))) == 0.0
    assert frobenius_norm(np.eye(5)) == pytest.approx(np.sqrt(5))
    assert frobenius_norm(projector(random_pure_state(3, rng))) == pytest.approx(1.0, abs=1e-14)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert frobenius_norm(a) == pytest.approx(np.sqrt(trace(a.conj().T @ a).real), abs=1e-12)


def test_commutator_examples(rng):
    a = rng.standard_normal((3, 3))
    np.testing.assert_array_equal(commutator(np.eye(3), a), np.zeros((3, 3)))
    np.testing.assert_array_equal(commutator(a, a), np.zeros((3, 3)))
    c = commutator(outer(PLUS), outer(KET0))
    np.testing.assert_allclose(c, 0.5 * np.array([[0, -1], [1, 0]]), atol=1e-15)


def test_spectral_norm_examples():
    assert spectral_norm(np.eye(3)) == pytest.approx(1.0, abs=1e-14)
    assert spectral_norm(np.diag([0.3, -0.7])) == pytest.approx(0.7, abs=1e-14)
    assert spectral_norm(commutator(outer(PLUS), outer(KET0))) == pytest.approx(0.5, abs=1e-12)


def test_spectral_norm_matches_svd(rng):
    for n in (2, 3, 5):
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        assert spectral_norm(a) == pytest.approx(np.linalg.svd(a, compute_uv=False)[0], rel=1e-12)


def test_eig_hermitian_diagonal():
    w, v = eig_hermitian(np.diag([0.8, 0.2]))
    np.testing.assert_allclose(w, [0.2, 0.8])
    np.testing.assert_allclose(np.abs(v), [[0, 1], [1, 0]])


def test_eig_hermitian_rank_one():
    w, _ = eig_hermitian(outer(PLUS))
    np.testing.assert_allclose(w, [0.0, 1.0], atol=1e-15)


@pytest.mark.parametrize("n", [2, 3, 4, 8, 16])
def test_eig_hermitian_reconstructs(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    a = a + a.conj().T
    w, v = eig_hermitian(a)
    assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - a)) < 1e-9
    assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-9
    np.testing.assert_allclose(w, np.linalg.eigvalsh(a), atol=1e-10)


def test_eig_hermitian_rejects_non_hermitian():
    with pytest.raises(InvalidStateError):
        eig_hermitian(np.array([[0, 1], [0, 0]]))


def test_density_spectrum(rng):
    for _ in range(200):
        rho = random_density(int(rng.integers(2, 7)), rng)
        w, _ = eig_hermitian(rho)
        assert w.min() >= -1e-10
        assert w.sum() == pytest.approx(1.0, abs=1e-10)


def test_global_phase_examples(rng):
    psi = random_pure_state(3, rng)
    np.testing.assert_array_equal(global_phase_multiply(psi, 0.0), psi)
    flipped = global_phase_multiply(KET0, np.pi)
    np.testing.assert_allclose(flipped, [-1, 0], atol=1e-15)
    assert expectation(outer(KET0), flipped) == pytest.approx(1.0)
    rotated = global_phase_multiply(PLUS, np.pi / 3)
    assert transition_probability(rotated, KET0) == pytest.approx(0.5, abs=1e-15)


def test_global_phase_range():
    with pytest.raises(ValueError):
        global_phase_multiply(KET0, 4.0)


@settings(max_examples=200, deadline=None)
@given(phi=st.floats(min_value=-np.pi, max_value=np.pi), seed=st.integers(0, 2**32 - 1))
def test_expectation_invariant_under_global_phase(phi, seed):
    rng = np.random.default_rng(seed)
    psi = random_pure_state(3, rng)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    before = operator_expectation(a, psi)
    after = operator_expectation(a, global_phase_multiply(psi, phi))
    assert abs(before - after) <= 1e-12


def test_completeness_of_basis_projectors(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        psi = random_pure_state(n, rng)
        total = sum(operator_expectation(outer(np.eye(n)[x]), psi).real for x in range(n))
        assert total == pytest.approx(1.0, abs=1e-12)


def test_projector_and_complement(rng):
    for _ in range(100):
        psi, chi = random_pure_state(3, rng), random_pure_state(3, rng)
        p = projector(psi)
        total = operator_expectation(p, chi) + operator_expectation(np.eye(3) - p, chi)
        assert total.real == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(p @ p, p, atol=1e-12)


def test_as_density_validation():
    as_density(np.eye(2) / 2)
    with pytest.raises(InvalidStateError):
        as_density(np.eye(2))
    with pytest.raises(InvalidStateError):
        as_density(np.array([[0.5, 1j], [0.0, 0.5]]))
    with pytest.raises(InvalidStateError):
        as_density(outer(MINUS) * 1.5 - np.eye(2) * 0.25)
