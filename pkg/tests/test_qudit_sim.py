import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussqc import (
    LinearCode,
    Polynomial,
    PrimeField,
    StateVector,
    apply_all,
    apply_single,
    character_sum,
    dual,
    fidelity,
    from_generator_poly,
    hadamard_matrix,
    prepare_coset_state,
    run_css_protocol,
)
from gaussqc.errors import CapacityExceeded, NotACodeword, NotNested

F5 = PrimeField("2+i")
UNITS = ["1", "-1", "i", "-i"]

# exponent pattern of the printed 5x5 Hadamard display, row s, column t
PRINTED_EXPONENTS = [
    [0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4],
    [0, 2, 4, 1, 3],
    [0, 3, 1, 4, 2],
    [0, 4, 3, 2, 1],
]


def n4_pairs():
    """Nested pairs of length 4 over G_{2+i} built from divisors of x^4 - 1."""
    M = Polynomial.x_n_minus(4, 1, F5)
    rep = from_generator_poly(M // Polynomial.parse("-1, 1", F5), 4, -1)  # all-equal vectors, d = 4
    even = from_generator_poly(Polynomial.parse("-1, 1", F5), 4, -1)  # coordinate sum zero
    h1 = Polynomial.parse("i, -1, -i, 1", F5)
    g2 = Polynomial.parse("-i, -1, i, 1", F5)
    table_pair = (from_generator_poly(M // h1, 4, -1), from_generator_poly(g2, 4, -1))
    return {
        "rep>0": (rep, LinearCode.zero(F5, 4)),
        "full>even": (LinearCode.full(F5, 4), even),
        "table": table_pair,
    }


def single_errors(n):
    zero = ["0"] * n
    for pos, u in itertools.product(range(n), UNITS):
        e = list(zero)
        e[pos] = u
        yield e


def test_hadamard_matches_display():
    H = hadamard_matrix(F5)
    xi = np.exp(2j * np.pi / 5)
    expected = np.array([[xi**e for e in row] for row in PRINTED_EXPONENTS]) / np.sqrt(5)
    assert np.max(np.abs(H - expected)) <= 1e-12
    assert np.allclose(np.abs(H), 1 / np.sqrt(5), atol=1e-12)
    assert np.max(np.abs(H @ H.conj().T - np.eye(5))) <= 1e-12


def test_hadamard_conjugates_shift_to_phase():
    """H X(1) H^-1 = Z(1): the Fourier transform turns a shift into a phase."""
    H = hadamard_matrix(F5)
    X = np.roll(np.eye(5), 1, axis=0)
    D = H @ X @ H.conj().T
    assert np.max(np.abs(D - np.diag(np.diag(D)))) <= 1e-12
    xi = np.exp(2j * np.pi / 5)
    assert np.allclose(np.diag(D), [xi**s for s in range(5)])


@pytest.mark.parametrize("pi", ["2+i", "3+2i"])
def test_gaussian_and_prime_field_gates_agree(pi):
    """X_a, Z_b with a, b in G_pi act as X, Z with the integer labels of a, b."""
    F = PrimeField(pi)
    xi = np.exp(2j * np.pi / F.p)
    for u, a in itertools.product(F.residues, repeat=2):
        s = StateVector.basis(F, [u])
        shifted = apply_single(s, 0, "X", a)
        assert shifted.amplitude([F.add(a, u)]) == pytest.approx(1)
        phased = apply_single(s, 0, "Z", a)
        # exponent: the product a*u reduced mod pi, then mapped to its label
        expected = xi ** F.project(F.reduce(a * u))
        assert phased.amplitude([u]) == pytest.approx(expected)
        assert np.allclose(apply_single(s, 0, "Z", F.project(a)).amps, phased.amps)


def test_hadamard_inverse_round_trip():
    rng = np.random.default_rng(1)
    amps = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    s = StateVector(F5, 2, amps / np.linalg.norm(amps))
    back = apply_all(apply_all(s, "H"), "Hinv")
    assert fidelity(s, back) == pytest.approx(1, abs=1e-12)


def test_state_cap():
    with pytest.raises(CapacityExceeded):
        StateVector(PrimeField("4+i"), 8)


def test_coset_state(p5_pair):
    C1, C2 = p5_pair
    x = C1.labels[0]
    s = prepare_coset_state(C1, C2, x)
    assert s.support().shape[0] == C2.size
    assert s.norm() == pytest.approx(1)
    y = (x + C2.labels[0]) % 5
    assert fidelity(s, prepare_coset_state(C1, C2, y)) == pytest.approx(1)
    outside = next(v for v in itertools.product(range(5), repeat=4) if not C1.contains(np.array(v)))
    with pytest.raises(NotACodeword):
        prepare_coset_state(C1, C2, np.array(outside))
    with pytest.raises(NotNested):
        prepare_coset_state(C2, C1, C2.labels[0])


@pytest.mark.parametrize("name", ["rep>0", "full>even", "table"])
def test_character_sum_lemma(name):
    _, C2 = n4_pairs()[name]
    D = dual(C2)
    for z in itertools.product(range(5), repeat=4):
        z = np.array(z)
        val = character_sum(C2, z)
        assert abs(val - (C2.size if D.contains(z) else 0)) <= 1e-9


@pytest.mark.parametrize("name", ["rep>0", "full>even", "table"])
def test_zero_error_round_trip(name):
    C1, C2 = n4_pairs()[name]
    x = C1.labels[-1]
    state, tr = run_css_protocol(C1, C2, x, ["0"] * 4, ["0"] * 4)
    assert tr.corrected and tr.fidelity == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("name", ["rep>0", "full>even", "table"])
def test_every_correctable_single_error(name):
    C1, C2 = n4_pairs()[name]
    x = C1.labels[0]
    corrected = 0
    for e in single_errors(4):
        for e1, e2 in ((e, ["0"] * 4), (["0"] * 4, e)):
            _, tr = run_css_protocol(C1, C2, x, e1, e2, seed=3)
            if not tr.within_capacity:
                continue
            assert tr.corrected and tr.fidelity >= 1 - 1e-9
            corrected += 1
            # within capacity, syndrome-only mode agrees with the full simulation
            _, lite = run_css_protocol(C1, C2, x, e1, e2, mode="syndrome-only")
            assert lite.corrected
            assert lite.recovered_e1 == tr.recovered_e1 and lite.recovered_e2 == tr.recovered_e2
    t1, t2 = tr.t1, tr.t2
    assert corrected == 16 * ((t1 >= 1) + (t2 >= 1))


def test_pairs_have_expected_radii():
    radii = {}
    for name, (C1, C2) in n4_pairs().items():
        _, tr = run_css_protocol(C1, C2, C1.labels[0], ["0"] * 4, ["0"] * 4, mode="syndrome-only")
        radii[name] = (tr.t1, tr.t2)
    assert radii == {"rep>0": (1, 0), "full>even": (0, 1), "table": (0, 0)}


def test_harmless_combined_errors():
    """X error inside the radius plus a phase error from dual(C1), which acts trivially."""
    C1, C2 = n4_pairs()["rep>0"]
    e1, e2 = ["0", "i", "0", "0"], ["1", "-1", "0", "0"]
    assert dual(C1).contains(F5.to_labels(e2))
    for x in C1.codeword_labels():
        _, tr = run_css_protocol(C1, C2, x, e1, e2, seed=5)
        assert not tr.within_capacity
        assert tr.corrected and tr.fidelity >= 1 - 1e-9
        _, lite = run_css_protocol(C1, C2, x, e1, e2, mode="syndrome-only")
        assert lite.corrected


def test_full_over_diagonal_n2():
    """C2 = span{(1,1)} inside the full space: both radii are 0, only the trivial run is correctable."""
    C1, C2 = LinearCode.full(F5, 2), LinearCode(F5, 2, [[1, 1]])
    _, tr = run_css_protocol(C1, C2, [1, 0], ["0", "0"], ["0", "0"])
    assert tr.corrected and (tr.t1, tr.t2) == (0, 0)
    _, tr = run_css_protocol(C1, C2, [1, 0], ["i", "0"], ["0", "0"])
    assert not tr.within_capacity


def test_beyond_capacity_is_reported():
    C1, C2 = n4_pairs()["rep>0"]
    _, tr = run_css_protocol(C1, C2, C1.labels[0], ["1", "1", "0", "0"], ["0"] * 4, seed=0)
    assert not tr.within_capacity
    assert not tr.corrected and tr.notes


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3))
def test_x_then_z_commutation_phase(a, b, pos):
    """Z_b X_a = xi^(ab) X_a Z_b on one qudit, inside a 4-qudit register."""
    rng = np.random.default_rng(a * 31 + b)
    amps = rng.normal(size=(5,) * 4) + 1j * rng.normal(size=(5,) * 4)
    s = StateVector(F5, 4, amps / np.linalg.norm(amps))
    lhs = apply_single(apply_single(s, pos, "X", a), pos, "Z", b)
    rhs = apply_single(apply_single(s, pos, "Z", b), pos, "X", a)
    assert np.allclose(lhs.amps, np.exp(2j * np.pi * a * b / 5) * rhs.amps)
