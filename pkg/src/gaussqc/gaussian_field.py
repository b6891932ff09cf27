"""Gaussian integers and the residue fields G_pi = Z[i]/(pi).

A residue field is built from a Gaussian prime ``pi`` whose norm ``p`` is a
rational prime with ``p % 4 == 1``.  Residues are kept in the canonical form
produced by the rounding reduction

    reduce(z) = z - round(z * conj(pi) / p) * pi

where ``round`` rounds real and imaginary parts separately.  Internally every
residue also has an integer label in ``0..p-1`` (``project``); the labelling is
a ring isomorphism onto Z/pZ, so vectorised code works on labels and converts
back to Gaussian integers only at the edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InternalInvariant, InvalidField, OutOfRange, ParseError, ZeroInverse

MAX_NORM = 10_000


@dataclass(frozen=True, order=True)
class GaussInt:
    """Exact Gaussian integer ``re + im*i``."""

    re: int = 0
    im: int = 0

    def __post_init__(self):
        if not isinstance(self.re, (int, np.integer)) or not isinstance(self.im, (int, np.integer)):
            raise TypeError(f"GaussInt components must be integers, got {self.re!r}, {self.im!r}")
        object.__setattr__(self, "re", int(self.re))
        object.__setattr__(self, "im", int(self.im))

    @classmethod
    def coerce(cls, value) -> GaussInt:
        """Accept a GaussInt, an int, a ``[re, im]`` pair, a complex or a literal string."""
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, (int, np.integer)):
            return cls(int(value), 0)
        if isinstance(value, str):
            return parse_gauss(value)
        if isinstance(value, complex):
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise ParseError(f"complex value {value!r} is not a Gaussian integer")
            return cls(int(value.real), int(value.imag))
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return cls(int(value[0]), int(value[1]))
        raise ParseError(f"cannot interpret {value!r} as a Gaussian integer")

    def __add__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[i]")
        out, base = GaussInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divides(self, other: GaussInt) -> bool:
        """True when ``other / self`` is a Gaussian integer."""
        if not self:
            return not other
        num = other * self.conjugate()
        n = self.norm()
        return num.re % n == 0 and num.im % n == 0

    def __complex__(self):
        return complex(self.re, self.im)

    def __str__(self):
        return format_gauss(self)

    def __repr__(self):
        return f"GaussInt({self})"


def _as_gauss(value):
    if isinstance(value, GaussInt):
        return value
    if isinstance(value, (int, np.integer)):
        return GaussInt(int(value), 0)
    return None


I = GaussInt(0, 1)
ONE = GaussInt(1, 0)
ZERO = GaussInt(0, 0)

_LITERAL = re.compile(
    r"""^(?:
        (?P<re>[+-]?\d+)(?:(?P<isign>[+-])(?P<icoef>\d*)i)?   # a, a+bi, a-i
        |(?P<pim>[+-]?\d*)i                                    # i, -i, 2i
    )$""",
    re.VERBOSE,
)


def parse_gauss(text: str) -> GaussInt:
    """Parse a literal such as ``"3"``, ``"-1+1i"``, ``"2-i"``, ``"-i"`` or ``"2i"``."""
    s = text.strip().replace("−", "-").replace(" ", "")
    m = _LITERAL.match(s)
    if not m:
        raise ParseError(f"not a Gaussian integer literal: {text!r}")
    if m.group("re") is not None:
        re_part = int(m.group("re"))
        if m.group("isign") is None:
            return GaussInt(re_part, 0)
        coef = int(m.group("icoef")) if m.group("icoef") else 1
        return GaussInt(re_part, coef if m.group("isign") == "+" else -coef)
    pim = m.group("pim")
    if pim in ("", "+"):
        return GaussInt(0, 1)
    if pim == "-":
        return GaussInt(0, -1)
    return GaussInt(0, int(pim))


def format_gauss(z: GaussInt) -> str:
    """Canonical literal: ``a+bi`` / ``a-bi`` without spaces, zero parts omitted."""
    if z.im == 0:
        return str(z.re)
    if z.re == 0:
        return f"{z.im}i"
    sign = "+" if z.im > 0 else "-"
    return f"{z.re}{sign}{abs(z.im)}i"


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den; an exact half raises (impossible for odd den)."""
    q, r = divmod(2 * num + den, 2 * den)
    if r == 0:
        raise InternalInvariant("rounding tie in modular reduction")
    return q


def reduce_mod(z: GaussInt, pi: GaussInt) -> GaussInt:
    """The rounding reduction of ``z`` modulo ``pi``; works for any nonzero ``pi``."""
    n = pi.norm()
    if n == 0:
        raise ZeroInverse("reduction modulo zero")
    num = z * pi.conjugate()
    q = GaussInt(_round_div(num.re, n), _round_div(num.im, n))
    return z - q * pi


def mannheim_weight(a: GaussInt) -> int:
    """``|Re a| + |Im a|`` of a canonical residue."""
    return abs(a.re) + abs(a.im)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The residue field G_pi for a Gaussian prime ``pi`` with ``N(pi) = 1 mod 4``.

    ``pi`` is used exactly as given; ``4+i`` and ``4-i`` are different moduli
    with different canonical residue sets.  Residues are ordered by their label
    ``project(a)``, i.e. ``residues[g] == lift(g)``.

    ``alpha1`` and ``alpha2`` may be supplied to pin a particular primitive
    pair; they are validated.  Otherwise the first qualifying elements in label
    order are used (see :meth:`find_alpha_pair`).
    """

    def __init__(self, pi, alpha1=None, alpha2=None):
        pi = GaussInt.coerce(pi)
        p = pi.norm()
        if not is_prime(p) or p % 4 != 1:
            raise InvalidField(f"N({pi}) = {p} is not a prime congruent to 1 mod 4")
        if p >= MAX_NORM:
            raise InvalidField(f"N({pi}) = {p} exceeds the supported bound {MAX_NORM}")
        self.pi = pi
        self.p = p
        self.residues: tuple[GaussInt, ...] = tuple(reduce_mod(GaussInt(g), pi) for g in range(p))
        self._index = {a: g for g, a in enumerate(self.residues)}
        if len(self._index) != p:
            raise InternalInvariant(f"reduction of 0..{p - 1} modulo {pi} is not injective")
        self.i_label = self._index[reduce_mod(I, pi)]
        if alpha1 is None or alpha2 is None:
            found1, found2 = self.find_alpha_pair()
        self.alpha1 = self._check_alpha(alpha1, "i") if alpha1 is not None else found1
        self.alpha2 = self._check_alpha(alpha2, "-i") if alpha2 is not None else found2

    def __repr__(self):
        return f"PrimeField(pi={self.pi}, p={self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.pi == other.pi

    def __hash__(self):
        return hash(("PrimeField", self.pi))

    def __reduce__(self):
        return (PrimeField, (self.pi, self.alpha1, self.alpha2))

    # label <-> residue

    def reduce(self, z) -> GaussInt:
        return reduce_mod(GaussInt.coerce(z), self.pi)

    def lift(self, g: int) -> GaussInt:
        """Residue with label ``g`` (the reduction of the rational integer g)."""
        if not 0 <= g < self.p:
            raise OutOfRange(f"{g} is outside 0..{self.p - 1}")
        return self.residues[g]

    def project(self, a) -> int:
        """Label in ``0..p-1`` of a residue; non-canonical input is reduced first."""
        a = GaussInt.coerce(a)
        g = self._index.get(a)
        if g is None:
            g = self._index[self.reduce(a)]
        return g

    def is_canonical(self, a) -> bool:
        return GaussInt.coerce(a) in self._index

    # arithmetic on residues

    def add(self, a, b) -> GaussInt:
        return self.reduce(GaussInt.coerce(a) + GaussInt.coerce(b))

    def sub(self, a, b) -> GaussInt:
        return self.reduce(GaussInt.coerce(a) - GaussInt.coerce(b))

    def mul(self, a, b) -> GaussInt:
        return self.reduce(GaussInt.coerce(a) * GaussInt.coerce(b))

    def neg(self, a) -> GaussInt:
        return self.reduce(-GaussInt.coerce(a))

    def power(self, a, k: int) -> GaussInt:
        return self.lift(pow(self.project(a), k, self.p))

    def invert(self, a) -> GaussInt:
        """Multiplicative inverse, computed as ``a**(p-2)`` on the label."""
        g = self.project(a)
        if g == 0:
            raise ZeroInverse("zero has no inverse")
        return self.lift(pow(g, self.p - 2, self.p))

    def order(self, a) -> int:
        g = self.project(a)
        if g == 0:
            raise ZeroInverse("zero has no multiplicative order")
        k, x = 1, g
        while x != 1:
            x = x * g % self.p
            k += 1
        return k

    # primitive pair

    def find_alpha_pair(self) -> tuple[GaussInt, GaussInt]:
        """First elements, in label order, of order p-1 whose (p-1)/4-th power is i, resp. -i."""
        p, q = self.p, (self.p - 1) // 4
        i_lbl, minus_i_lbl = self.i_label, (-self.i_label) % p
        a1 = a2 = None
        for g in range(2, p):
            if self._label_order(g) != p - 1:
                continue
            r = pow(g, q, p)
            if a1 is None and r == i_lbl:
                a1 = g
            elif a2 is None and r == minus_i_lbl:
                a2 = g
            if a1 is not None and a2 is not None:
                return self.residues[a1], self.residues[a2]
        # p = 5: labels 2 and 3 are i and -i, found above; reaching here is a bug
        raise InternalInvariant(f"no primitive pair found for {self.pi}")

    def _label_order(self, g: int) -> int:
        p = self.p
        for f in _prime_factors(p - 1):
            if pow(g, (p - 1) // f, p) == 1:
                return 0
        return p - 1

    def _check_alpha(self, a, target: str) -> GaussInt:
        a = self.reduce(a)
        g = self.project(a)
        want = self.i_label if target == "i" else (-self.i_label) % self.p
        if g == 0 or self._label_order(g) != self.p - 1 or pow(g, (self.p - 1) // 4, self.p) != want:
            raise InvalidField(f"{a} is not a primitive element with a^((p-1)/4) = {target} mod {self.pi}")
        return a

    # lookup tables for vectorised code

    @cached_property
    def weight_table(self) -> np.ndarray:
        """Mannheim weight indexed by label."""
        return np.array([mannheim_weight(a) for a in self.residues], dtype=np.int64)

    @cached_property
    def hamming_table(self) -> np.ndarray:
        t = np.ones(self.p, dtype=np.int64)
        t[0] = 0
        return t

    def residues_by_weight(self) -> dict[int, list[int]]:
        """Labels of nonzero residues grouped by Mannheim weight."""
        groups: dict[int, list[int]] = {}
        for g in range(1, self.p):
            groups.setdefault(int(self.weight_table[g]), []).append(g)
        return groups

    def to_labels(self, values) -> np.ndarray:
        return np.array([self.project(v) for v in values], dtype=np.int64)

    def from_labels(self, labels) -> list[GaussInt]:
        return [self.residues[int(g)] for g in np.asarray(labels).ravel()]


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out
