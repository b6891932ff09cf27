import pytest
from hypothesis import settings

from gaussqc import PrimeField, Polynomial, from_generator_matrix, from_generator_poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PRIMES = {5: "2+i", 13: "3+2i", 17: "4+i", 29: "5+2i"}

G1 = "1+2i, -1+1i, -1i, 1"
G2 = "1-1i, 2-1i, -1+1i, -1i, -1i, 1"


@pytest.fixture(scope="session")
def F17():
    return PrimeField("4+i")


@pytest.fixture(scope="session")
def F5():
    return PrimeField("2+i")


@pytest.fixture(scope="session")
def len2_code(F17):
    return from_generator_matrix([["-1+i", "1"]], F17)


@pytest.fixture(scope="session")
def pair_8(F17):
    C1 = from_generator_poly(Polynomial.parse(G1, F17), 8, 1)
    C2 = from_generator_poly(Polynomial.parse(G2, F17), 8, 1)
    return C1, C2


@pytest.fixture(scope="session")
def p5_pair(F5):
    """Nested [4,3] > [4,1] pair at p = 5 built from divisors of x^4 - 1."""
    M = Polynomial.x_n_minus(4, 1, F5)
    h1 = Polynomial.parse("i, -1, -i, 1", F5)
    g2 = Polynomial.parse("-i, -1, i, 1", F5)
    C1 = from_generator_poly(M // h1, 4, -1)
    C2 = from_generator_poly(g2, 4, -1)
    return C1, C2


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
