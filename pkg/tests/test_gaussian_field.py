import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PRIMES
from gaussqc import GaussInt, PrimeField, format_gauss, parse_gauss, reduce_mod
from gaussqc.errors import InvalidField, OutOfRange, ParseError, ZeroInverse

RESIDUES_4_PLUS_I = {
    "0", "1", "-1", "i", "-i", "2", "-2", "2i", "-2i", "1+i", "-1-i",
    "1-i", "-1+i", "2-i", "-2+i", "1+2i", "-1-2i",
}

gauss = st.builds(GaussInt, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
fields = st.sampled_from(sorted(PRIMES.values()))


@pytest.mark.parametrize(
    "text, value",
    [("3", (3, 0)), ("-1+1i", (-1, 1)), ("1+i", (1, 1)), ("2-i", (2, -1)), ("-i", (0, -1)),
     ("2i", (0, 2)), ("i", (0, 1)), ("−1−2i", (-1, -2)), (" 4 + i ", (4, 1))],
)
def test_parse_literals(text, value):
    assert parse_gauss(text) == GaussInt(*value)


@pytest.mark.parametrize("text", ["", "i2", "1+", "1.5", "a+bi", "++1", "1+2j"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_gauss(text)


@given(gauss)
def test_format_round_trip(z):
    assert parse_gauss(format_gauss(z)) == z


def test_format_examples():
    assert [format_gauss(GaussInt(*v)) for v in [(-1, 1), (0, -1), (2, -1), (0, 0), (5, 0)]] == [
        "-1+1i", "-1i", "2-1i", "0", "5",
    ]


def test_residue_set_4_plus_i(F17):
    assert {F17.residues[g] for g in range(17)} == {parse_gauss(s) for s in RESIDUES_4_PLUS_I}
    assert F17.residues[0] == GaussInt(0, 0) and F17.residues[1] == GaussInt(1, 0)


def test_reduction_examples(F17):
    assert F17.reduce(4) == GaussInt(0, -1)
    assert F17.reduce(-4) == GaussInt(0, 1)
    assert F17.reduce("4+i") == GaussInt(0, 0)


@pytest.mark.parametrize("pi", ["1+i", "3", "2+2i", "0", "7", "11"])
def test_invalid_moduli(pi):
    with pytest.raises(InvalidField):
        PrimeField(pi)


def test_lift_out_of_range(F5):
    with pytest.raises(OutOfRange):
        F5.lift(5)
    with pytest.raises(OutOfRange):
        F5.lift(-1)


def test_zero_has_no_inverse(F17):
    with pytest.raises(ZeroInverse):
        F17.invert(0)


@pytest.mark.parametrize("pi, pair", [("4+i", ("-1-i", "2-i")), ("3+2i", ("-1-i", "2")), ("2+i", ("i", "-i"))])
def test_alpha_pair(pi, pair):
    F = PrimeField(pi)
    assert (F.alpha1, F.alpha2) == tuple(parse_gauss(s) for s in pair)


@pytest.mark.parametrize("pi", sorted(PRIMES.values()))
def test_alpha_pair_properties(pi):
    F = PrimeField(pi)
    q = (F.p - 1) // 4
    assert F.order(F.alpha1) == F.p - 1 and F.order(F.alpha2) == F.p - 1
    assert F.power(F.alpha1, q) == F.reduce("i")
    assert F.power(F.alpha2, q) == F.reduce("-i")


def test_explicit_alpha_is_validated(F17):
    F = PrimeField("4+i", alpha1="-1-i", alpha2="2-i")
    assert F.alpha1 == F17.alpha1
    with pytest.raises(InvalidField):
        PrimeField("4+i", alpha1="1", alpha2="2-i")


@pytest.mark.parametrize("pi", sorted(PRIMES.values()))
def test_field_axioms_exhaustive(pi):
    """Every axiom on every pair (and associativity/distributivity on every triple)."""
    F = PrimeField(pi)
    R = F.residues
    zero, one = F.reduce(0), F.reduce(1)
    for a in R:
        assert F.is_canonical(a)
        assert F.reduce(a) == a
        assert F.add(a, zero) == a and F.mul(a, one) == a
        assert F.add(a, F.neg(a)) == zero
        if a != zero:
            assert F.mul(a, F.invert(a)) == one
        for b in R:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.add(a, b) in F._index and F.mul(a, b) in F._index
    # the labels form a ring isomorphism with Z/p
    for g, h in itertools.product(range(F.p), repeat=2):
        assert F.project(F.add(R[g], R[h])) == (g + h) % F.p
        assert F.project(F.mul(R[g], R[h])) == g * h % F.p
    small = R if F.p <= 17 else R[:12]
    for a, b, c in itertools.product(small, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@given(gauss, fields)
def test_reduce_idempotent_and_congruent(z, pi):
    F = PrimeField(pi)
    r = F.reduce(z)
    assert F.reduce(r) == r
    assert F.pi.divides(z - r)
    # a rounding remainder has at most half the norm of the modulus
    assert 2 * r.norm() <= F.p


@given(st.data(), fields)
def test_lift_project_bijection(data, pi):
    F = PrimeField(pi)
    g = data.draw(st.integers(0, F.p - 1))
    assert F.project(F.lift(g)) == g
    a = data.draw(st.sampled_from(F.residues))
    assert F.lift(F.project(a)) == a


@given(gauss, gauss, fields)
def test_reduction_is_a_homomorphism(a, b, pi):
    F = PrimeField(pi)
    assert F.reduce(a + b) == F.add(F.reduce(a), F.reduce(b))
    assert F.reduce(a * b) == F.mul(F.reduce(a), F.reduce(b))


def test_reduce_mod_non_prime_modulus():
    # the rounding reduction also makes sense for composite moduli
    assert reduce_mod(GaussInt(7, 0), GaussInt(3, 0)) == GaussInt(1, 0)


def test_mannheim_weights(F17):
    by_weight = {w: len(v) for w, v in F17.residues_by_weight().items()}
    assert by_weight == {1: 4, 2: 8, 3: 4}
    assert int(F17.weight_table.max()) == 3
    assert list(F17.hamming_table) == [0] + [1] * 16
