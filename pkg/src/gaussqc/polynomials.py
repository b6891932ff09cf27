"""Univariate polynomials over G_pi and the root schedules that split x^m -+ i."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DivisionByZeroPoly, FieldMismatch, ParseError
from .gaussian_field import GaussInt, PrimeField, format_gauss, parse_gauss


class Polynomial:
    """Polynomial with canonical coefficients in ascending degree.

    Arithmetic is done on integer labels (``F.project``) modulo p and the
    result is lifted back, so coefficients are always canonical residues.
    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("field", "_labels")

    def __init__(self, coeffs, field: PrimeField):
        self.field = field
        labels = [field.project(c) for c in coeffs]
        while labels and labels[-1] == 0:
            labels.pop()
        self._labels = tuple(labels)

    @classmethod
    def from_labels(cls, labels, field: PrimeField) -> Polynomial:
        poly = cls.__new__(cls)
        poly.field = field
        labels = [int(g) % field.p for g in labels]
        while labels and labels[-1] == 0:
            labels.pop()
        poly._labels = tuple(labels)
        return poly

    @classmethod
    def parse(cls, text: str, field: PrimeField) -> Polynomial:
        """Parse ``"1+2i, -1+1i, -1i, 1"`` (comma separated, ascending degree)."""
        parts = [t for t in text.split(",")]
        if not text.strip():
            return cls([], field)
        try:
            return cls([parse_gauss(t) for t in parts], field)
        except ParseError as exc:
            raise ParseError(f"bad polynomial {text!r}: {exc}") from None

    @classmethod
    def monomial(cls, degree: int, field: PrimeField, coeff=1) -> Polynomial:
        return cls.from_labels([0] * degree + [field.project(coeff)], field)

    @classmethod
    def x_n_minus(cls, n: int, c, field: PrimeField) -> Polynomial:
        """``x**n - c``."""
        labels = [0] * (n + 1)
        labels[n] = 1
        labels[0] = (labels[0] - field.project(c)) % field.p
        return cls.from_labels(labels, field)

    @property
    def coeffs(self) -> tuple[GaussInt, ...]:
        return tuple(self.field.residues[g] for g in self._labels)

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def degree(self) -> int:
        return len(self._labels) - 1

    def is_zero(self) -> bool:
        return not self._labels

    def leading(self) -> GaussInt:
        return self.field.residues[self._labels[-1]] if self._labels else self.field.residues[0]

    def monic(self) -> Polynomial:
        if self.is_zero():
            raise DivisionByZeroPoly("the zero polynomial has no monic associate")
        p = self.field.p
        inv = pow(self._labels[-1], p - 2, p)
        return Polynomial.from_labels([g * inv for g in self._labels], self.field)

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        return Polynomial([GaussInt.coerce(other)], self.field)

    def __add__(self, other):
        other = self._check(other)
        a, b = self._labels, other._labels
        m = max(len(a), len(b))
        return Polynomial.from_labels(
            [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(m)], self.field
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial.from_labels([-g for g in self._labels], self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        a, b, p = self._labels, other._labels, self.field.p
        if not a or not b:
            return Polynomial.from_labels([], self.field)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return Polynomial.from_labels(out, self.field)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        p = self.field.p
        r = list(self._labels)
        d = other._labels
        inv = pow(d[-1], p - 2, p)
        q = [0] * max(len(r) - len(d) + 1, 0)
        for shift in range(len(r) - len(d), -1, -1):
            c = r[shift + len(d) - 1] * inv % p
            q[shift] = c
            if c:
                for j, y in enumerate(d):
                    r[shift + j] = (r[shift + j] - c * y) % p
        return Polynomial.from_labels(q, self.field), Polynomial.from_labels(r, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        out = Polynomial.from_labels([1], self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self._labels == other._labels
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self._labels))

    def __call__(self, a) -> GaussInt:
        return evaluate(self, a)

    def reciprocal(self) -> Polynomial:
        """``x**deg * f(1/x)``, the coefficient reversal."""
        return Polynomial.from_labels(self._labels[::-1], self.field)

    def to_text(self) -> str:
        return ", ".join(format_gauss(c) for c in self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(format_gauss(c))
            elif c == GaussInt(1):
                terms.append(mono)
            elif c.im == 0 or c.re == 0:
                terms.append(f"{format_gauss(c)}*{mono}")
            else:
                terms.append(f"({format_gauss(c)})*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial([{self.to_text()}] over {self.field.pi})"


def evaluate(f: Polynomial, a) -> GaussInt:
    """Horner evaluation in G_pi."""
    F, p = f.field, f.field.p
    x = F.project(a)
    acc = 0
    for g in reversed(f.labels):
        acc = (acc * x + g) % p
    return F.residues[acc]


def divides(g: Polynomial, f: Polynomial) -> bool:
    return divmod(f, g)[1].is_zero()


def product_of_linear(roots: Sequence, field: PrimeField) -> Polynomial:
    """``prod (x - r)`` over the given roots."""
    out = Polynomial.from_labels([1], field)
    for r in roots:
        out = out * Polynomial.from_labels([-field.project(r), 1], field)
    return out


def quartic_root_factor(F: PrimeField, sign: str) -> list[GaussInt]:
    """Roots ``alpha**1, alpha**5, ..., alpha**(p-4)`` of ``x**((p-1)/4) - i`` (sign ``"-i"``)
    using ``F.alpha1``, or of ``x**((p-1)/4) + i`` (sign ``"+i"``) using ``F.alpha2``."""
    if sign not in ("-i", "+i"):
        raise ValueError(f"sign must be '-i' or '+i', got {sign!r}")
    alpha = F.alpha1 if sign == "-i" else F.alpha2
    return [F.power(alpha, e) for e in range(1, F.p - 3, 4)]


@dataclass
class FactorizationReport:
    field: PrimeField
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_global_factorizations(F: PrimeField) -> FactorizationReport:
    """Check that the alpha-power roots split x^m - i, x^m + i (m = (p-1)/4),
    x^(2m) + 1 and x^(4m) - 1, comparing coefficients exactly."""
    m = (F.p - 1) // 4
    i = GaussInt(0, 1)
    report = FactorizationReport(F)

    roots_minus = quartic_root_factor(F, "-i")
    roots_plus = quartic_root_factor(F, "+i")
    targets = {
        "x^m - i": (roots_minus, Polynomial.x_n_minus(m, i, F)),
        "x^m + i": (roots_plus, Polynomial.x_n_minus(m, -i, F)),
        "x^2m + 1": (roots_minus + roots_plus, Polynomial.x_n_minus(2 * m, -1, F)),
    }
    for name, (roots, target) in targets.items():
        got = product_of_linear(roots, F)
        report.checks[name] = got == target
        if got != target:
            for r in roots:
                if evaluate(target, r):
                    report.failures.append(f"{name}: {format_gauss(r)} is not a root")
            if not report.failures:
                report.failures.append(f"{name}: product {got} != {target}")

    # every nonzero residue is a power of alpha1, so these p - 1 roots split x^(4m) - 1
    got = product_of_linear([F.power(F.alpha1, e) for e in range(4 * m)], F)
    ok = got == Polynomial.x_n_minus(4 * m, 1, F)
    report.checks["x^4m - 1"] = ok
    if not ok:
        report.failures.append(f"x^4m - 1: product of (x - alpha1^e) = {got}")
    return report
