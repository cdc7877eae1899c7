import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import KET0, KET1, MINUS, PLUS, random_distribution, random_phases
from conjvar.encoding import (
    bloch_from_density,
    bloch_from_qubit,
    bloch_many,
    decode,
    encode,
    qubit_distance,
    qubit_distance_surface,
    unit_axis,
)
from conjvar.errors import DimensionMismatchError, InvalidDistributionError, InvalidStateError
from conjvar.metrics import no_name_distance_pure
from conjvar.quantum_core import global_phase_multiply, outer, random_pure_state, transition_probability


def test_encode_examples():
    np.testing.assert_allclose(encode([0.5, 0.5], [0, 0]), PLUS, atol=1e-15)
    np.testing.assert_allclose(encode([0.5, 0.5], [0, np.pi]), MINUS, atol=1e-15)
    psi = encode([1.0, 0.0], [2.1, -0.4])
    assert transition_probability(psi, KET0) == pytest.approx(1.0)


def test_encode_errors():
    with pytest.raises(DimensionMismatchError):
        encode([0.5, 0.5], [0.0])
    with pytest.raises(InvalidDistributionError):
        encode([0.5, 0.6], [0.0, 0.0])


def test_decode_examples():
    np.testing.assert_allclose(decode(PLUS), [0.5, 0.5])
    np.testing.assert_allclose(decode(KET0), [1, 0])
    np.testing.assert_allclose(decode(encode([0.3, 0.7], [0.4, -1.1])), [0.3, 0.7], atol=1e-12)
    with pytest.raises(InvalidStateError):
        decode(np.array([1.0, 1.0]))


def test_round_trip(rng):
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        p, phi = random_distribution(n, rng), random_phases(n, rng)
        np.testing.assert_allclose(decode(encode(p, phi)), p, rtol=0, atol=1e-12)


@settings(max_examples=200, deadline=None)
@given(
    p=st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6).map(lambda w: np.array(w) / sum(w)),
    data=st.data(),
)
def test_amplitudes_on_sphere_of_radius_sqrt_p(p, data):
    phases = np.array(data.draw(st.lists(st.floats(-np.pi, np.pi), min_size=len(p), max_size=len(p))))
    np.testing.assert_allclose(np.abs(encode(p, phases)), np.sqrt(p), atol=1e-15)


def test_bloch_from_qubit_examples():
    np.testing.assert_allclose(bloch_from_qubit(KET0), [0, 0, 1])
    np.testing.assert_allclose(bloch_from_qubit(KET1), [0, 0, -1], atol=1e-15)
    np.testing.assert_allclose(bloch_from_qubit(PLUS), [1, 0, 0], atol=1e-15)


def test_bloch_from_qubit_wrong_dim():
    with pytest.raises(InvalidStateError):
        bloch_from_qubit(np.ones(3) / np.sqrt(3))


@settings(max_examples=200, deadline=None)
@given(phi=st.floats(-np.pi, np.pi), seed=st.integers(0, 2**32 - 1))
def test_bloch_unit_and_phase_invariant(phi, seed):
    psi = random_pure_state(2, np.random.default_rng(seed))
    r = np.array(bloch_from_qubit(psi))
    assert np.linalg.norm(r) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(bloch_from_qubit(global_phase_multiply(psi, phi)), r, atol=1e-12)
    np.testing.assert_allclose(bloch_many(psi[None, :])[0], r, atol=1e-12)
    np.testing.assert_allclose(bloch_from_density(outer(psi)), r, atol=1e-12)


def test_bloch_from_density_examples():
    assert bloch_from_density(np.eye(2) / 2) == (0.0, 0.0, 0.0)
    np.testing.assert_allclose(bloch_from_density(outer(KET0)), [0, 0, 1])
    np.testing.assert_allclose(bloch_from_density(outer(PLUS)), [1, 0, 0], atol=1e-15)
    with pytest.raises(InvalidStateError):
        bloch_from_density(np.eye(2))


def test_bloch_of_mixed_states_inside_ball(rng):
    for _ in range(100):
        a, b = random_pure_state(2, rng), random_pure_state(2, rng)
        w = rng.uniform()
        r = np.array(bloch_from_density(w * outer(a) + (1 - w) * outer(b)))
        assert np.linalg.norm(r) <= 1 + 1e-12


def test_antipodal_iff_orthogonal(rng):
    for _ in range(500):
        a = random_pure_state(2, rng)
        orth = np.exp(1j * rng.uniform(-np.pi, np.pi)) * np.array([-np.conj(a[1]), np.conj(a[0])])
        other = random_pure_state(2, rng)
        for b in (orth, other):
            is_orth = abs(np.vdot(a, b)) < 1e-10
            antipodal = np.linalg.norm(np.add(bloch_from_qubit(a), bloch_from_qubit(b))) < 1e-9
            assert is_orth == antipodal


# -- surfaces ------------------------------------------------------------


def test_qubit_distance_matches_general(rng):
    for _ in range(200):
        px, qx = rng.uniform(size=2)
        g = rng.uniform(-np.pi, np.pi)
        psi = encode([px, 1 - px], [g, 0.0])
        xi = encode([qx, 1 - qx])
        assert qubit_distance(px, qx, g) == pytest.approx(no_name_distance_pure(psi, xi), abs=1e-12)


def test_fix_phase_perfect_correlation():
    s = qubit_distance_surface("fix_phase", 51, dgamma=0.0)
    np.testing.assert_array_equal(np.diag(s.values), np.zeros(51))


def test_fix_phase_anti_correlation():
    s = qubit_distance_surface("fix_phase", 51, dgamma=np.pi)
    np.testing.assert_allclose(np.fliplr(s.values).diagonal(), np.ones(51), atol=1e-12)


def test_fix_phase_half_pi_formula():
    s = qubit_distance_surface("fix_phase", 41, dgamma=np.pi / 2)
    p, q = np.meshgrid(s.rows, s.cols, indexing="ij")
    np.testing.assert_allclose(s.values ** 2, 1 - p * q - (1 - p) * (1 - q), atol=1e-12)


@pytest.mark.parametrize("mode, kw", [("fix_p", {"p": 0.3}), ("fix_phase", {"dgamma": 1.0}), ("p_equals_q", {})])
def test_surface_range(mode, kw):
    s = qubit_distance_surface(mode, 33, **kw)
    assert s.values.shape == (33, 33)
    assert np.all((s.values >= 0) & (s.values <= 1))


def test_fix_p_zero_at_identical_state():
    s = qubit_distance_surface("fix_p", 101, p=0.5)
    assert s.rows[50] == 0.5 and s.cols[0] == 0.0
    assert s.values[50, 0] == 0.0


def test_surface_symmetric_in_phase(rng):
    px, qx = rng.uniform(size=(2, 200))
    g = rng.uniform(0, np.pi, 200)
    np.testing.assert_allclose(qubit_distance(px, qx, g), qubit_distance(px, qx, -g), atol=1e-12)


def test_p_equals_q_zero_phase_column():
    s = qubit_distance_surface("p_equals_q", 65)
    np.testing.assert_array_equal(s.values[:, 0], 0.0)


def test_surface_errors():
    with pytest.raises(ValueError):
        qubit_distance_surface("nope", 10)
    with pytest.raises(ValueError):
        qubit_distance_surface("fix_p", 10, p=1.5)
    with pytest.raises(ValueError):
        qubit_distance_surface("fix_phase", 1, dgamma=0.0)


def test_unit_axis_exact():
    a = unit_axis(101)
    assert a[0] == 0.0 and a[50] == 0.5 and a[-1] == 1.0
