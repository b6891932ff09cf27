"""CSS quantum codes from nested pairs C2 <= C1 over G_pi.

Two views of the same construction are provided.  :func:`build_css` gives the
``[[n, k1 - k2, d]]`` parameters with ``d = min(d(C1), d(dual C2))``.
:func:`build_symplectic` forms ``S = (C2 | dual C1)`` in G_pi^(2n), its dual
under the alternating form ``(u|v) * (u'|v') = v.u' - v'.u``, and the pair
weight distance over ``dual(S) minus S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import EnumerationTooLarge, LengthMismatch, NoLogicalOperators, NotNested
from .gaussian_field import GaussInt, PrimeField
from .linear_codes import (
    DEFAULT_CAP,
    METRICS,
    LinearCode,
    _digits,
    _same_ambient,
    dual,
    is_subcode,
    min_distance,
    min_distance_search,
    nullspace,
    rref,
)

SYMPLECTIC_CAP = 10**7


@dataclass
class DistanceValue:
    """A distance that is exact, or only known to lie in ``lower..value``."""

    value: int
    exact: bool = True
    lower: int = 1

    def __str__(self):
        if self.exact:
            return str(self.value)
        return f"{self.lower}..{self.value}" if self.lower > 1 else f"<={self.value}"


@dataclass
class CssCode:
    C1: LinearCode
    C2: LinearCode
    n: int
    K: int
    d_M: DistanceValue
    d_H: DistanceValue
    components: dict[str, dict[str, DistanceValue]] = field(default_factory=dict)

    @property
    def field(self) -> PrimeField:
        return self.C1.field

    @property
    def dimension(self) -> int:
        """Dimension of the code space, N(pi)**K."""
        return self.field.p**self.K

    def label(self, metric: str = "mannheim") -> str:
        d = self.d_M if metric == "mannheim" else self.d_H
        return f"[[{self.n},{self.K},{d}]]_{self.field.pi}"


def component_distance(C: LinearCode, metric: str, cap: int = DEFAULT_CAP, workers: int = 1) -> DistanceValue:
    """Exact distance by codeword enumeration, else by low-weight search, else bounds."""
    if C.k == 0:
        # no nonzero codewords: n + 1 so it never limits a minimum
        return DistanceValue(C.n + 1)
    try:
        return DistanceValue(min_distance(C, metric, cap=cap, workers=workers))
    except EnumerationTooLarge as exc:
        upper = exc.bound
    try:
        return DistanceValue(min_distance_search(C, metric, budget=cap))
    except EnumerationTooLarge as exc:
        if upper is not None and exc.lower >= upper:
            return DistanceValue(upper)
        return DistanceValue(upper, exact=False, lower=exc.lower)


def _distance_or_bound(C: LinearCode, cap: int, workers: int) -> dict[str, DistanceValue]:
    return {m: component_distance(C, m, cap, workers) for m in METRICS}


def _min_value(a: DistanceValue, b: DistanceValue) -> DistanceValue:
    value, lower = min(a.value, b.value), min(a.lower, b.lower)
    exact = (a.exact and b.exact) or (a.exact and a.value <= b.lower) or (b.exact and b.value <= a.lower)
    return DistanceValue(value, exact, value if exact else lower)


def build_css(C1: LinearCode, C2: LinearCode, distance_cap: int = DEFAULT_CAP, workers: int = 1) -> CssCode:
    """Parameters of the CSS code of the nested pair ``C2 <= C1``.

    A component code with more than ``distance_cap`` codewords is measured by
    :func:`min_distance_search` instead; if that also exceeds the cap the
    distance is reported as an inexact range.
    """
    _same_ambient(C1, C2)
    if not is_subcode(C2, C1):
        raise NotNested("C2 is not contained in C1")
    D2 = dual(C2)
    comp = {
        "C1": _distance_or_bound(C1, distance_cap, workers),
        "C2_dual": _distance_or_bound(D2, distance_cap, workers),
    }
    return CssCode(
        C1=C1,
        C2=C2,
        n=C1.n,
        K=C1.k - C2.k,
        d_M=_min_value(comp["C1"]["mannheim"], comp["C2_dual"]["mannheim"]),
        d_H=_min_value(comp["C1"]["hamming"], comp["C2_dual"]["hamming"]),
        components=comp,
    )


@dataclass(frozen=True)
class ErrorCountReport:
    n: int
    d: int
    t: int
    metric: str
    count: int


def correctable_count(n: int, d: int, metric: str = "mannheim", p: int | None = None) -> ErrorCountReport:
    """``sum_{j=1..t} m**j * C(n, j)`` with ``t = (d-1)//2``; m = 4 (Mannheim) or p - 1 (Hamming)."""
    if metric == "mannheim":
        m = 4
    elif metric == "hamming":
        if p is None:
            raise ValueError("the Hamming count needs the field size p")
        m = p - 1
    else:
        raise ValueError(f"unknown metric {metric!r}")
    t = max((d - 1) // 2, 0)
    return ErrorCountReport(n, d, t, metric, sum(m**j * comb(n, j) for j in range(1, t + 1)))


@dataclass(frozen=True)
class SingletonCheck:
    attains: bool
    slack: int


def check_singleton(n: int, K: int, d_H: int, p: int | None = None) -> SingletonCheck:
    """Quantum Singleton bound ``K <= n - 2d + 2`` for a Hamming distance ``d_H``."""
    slack = (n - 2 * d_H + 2) - K
    return SingletonCheck(slack == 0, slack)


# symplectic view


def _pair_labels(w, F: PrimeField) -> np.ndarray:
    if isinstance(w, np.ndarray) and w.dtype.kind in "iu":
        return w.astype(np.int64)
    if isinstance(w, tuple) and len(w) == 2 and not isinstance(w[0], (int, np.integer, GaussInt, str)):
        u, v = w
        return np.concatenate([F.to_labels(u), F.to_labels(v)])
    return F.to_labels(w)


def pair_weight(w, F: PrimeField) -> int:
    """Ceiling of half the total Mannheim weight of ``(u|v)`` over all 2n coordinates."""
    total = int(F.weight_table[_pair_labels(w, F)].sum())
    return -(-total // 2)


def star_product(a, b, F: PrimeField) -> GaussInt:
    """``(u|v) * (u'|v') = sum(v_i u'_i - v'_i u_i)`` reduced mod pi."""
    x, y = _pair_labels(a, F), _pair_labels(b, F)
    if x.shape != y.shape or x.size % 2:
        raise LengthMismatch(f"pair vectors of shapes {x.shape} and {y.shape}")
    n = x.size // 2
    val = int(x[n:] @ y[:n] - y[n:] @ x[:n]) % F.p
    return F.residues[val]


def _star_matrix(B: np.ndarray, p: int) -> np.ndarray:
    """Rows ``(-v | u)`` so that ``w * b == row . w``."""
    n = B.shape[1] // 2
    return np.concatenate([(-B[:, n:]) % p, B[:, :n]], axis=1)


class SymplecticCode:
    """Subspace of G_pi^(2n) written as rows ``(u|v)``."""

    def __init__(self, field: PrimeField, n: int, basis):
        self.field = field
        self.n = n
        B = np.asarray(basis, dtype=np.int64).reshape(-1, 2 * n)
        self.basis, _ = rref(B, field.p) if B.shape[0] else (np.zeros((0, 2 * n), np.int64), [])
        self.self_orthogonal = not (self.basis @ _star_matrix(self.basis, field.p).T % field.p).any()

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, w) -> bool:
        w = _pair_labels(w, self.field)
        H = nullspace(self.basis, self.field.p)
        return not (H @ w % self.field.p).any()

    def same_space(self, other: SymplecticCode) -> bool:
        return self.n == other.n and np.array_equal(self.basis, other.basis)

    def __repr__(self):
        return f"SymplecticCode(n={self.n}, dim={self.dim}, self_orthogonal={self.self_orthogonal})"


def symplectic_dual(S: SymplecticCode) -> SymplecticCode:
    p = S.field.p
    if S.dim == 0:
        return SymplecticCode(S.field, S.n, np.eye(2 * S.n, dtype=np.int64))
    return SymplecticCode(S.field, S.n, nullspace(_star_matrix(S.basis, p), p))


@dataclass
class SymplecticParameters:
    n: int
    K: int
    K_css: int
    dim_C: int
    dim_dual: int
    d_M: int | None
    examined: int


def pair_code(C1: LinearCode, C2: LinearCode) -> SymplecticCode:
    """``(C2 | dual C1)``: rows ``(c|0)`` for c in C2 and ``(0|h)`` for h in dual(C1)."""
    n, F = C1.n, C1.field
    H1 = C1.check_labels
    rows = [np.concatenate([c, np.zeros(n, np.int64)]) for c in C2.labels]
    rows += [np.concatenate([np.zeros(n, np.int64), h]) for h in H1]
    return SymplecticCode(F, n, np.array(rows, dtype=np.int64).reshape(-1, 2 * n))


def build_symplectic(
    C1: LinearCode,
    C2: LinearCode,
    cap: int = SYMPLECTIC_CAP,
    samples: int = 100_000,
    seed: int = 0,
) -> tuple[SymplecticCode, SymplecticParameters]:
    """Symplectic code ``S = (C2 | dual C1)`` and the distance over ``dual(S) minus S``.

    ``K`` is ``dim dual(S) - dim S``; ``K_css`` is ``k1 - k2`` for comparison.
    When ``dual(S)`` has more than ``cap`` vectors, ``samples`` random members
    are drawn and :class:`EnumerationTooLarge` is raised carrying the smallest
    sampled weight as ``bound`` (the true distance is at most that).
    Raises :class:`NoLogicalOperators` when ``dual(S) == S``.
    """
    _same_ambient(C1, C2)
    if not is_subcode(C2, C1):
        raise NotNested("C2 is not contained in C1")
    F, p, n = C1.field, C1.field.p, C1.n
    S = pair_code(C1, C2)
    Sd = symplectic_dual(S)
    if Sd.dim == S.dim:
        raise NoLogicalOperators("the symplectic dual equals the code; no logical operators")

    total = p**Sd.dim
    if total <= cap:
        msgs = _digits(np.arange(total, dtype=np.int64), p, Sd.dim)
        exact, examined = True, total
    else:
        rng = np.random.default_rng(seed)
        msgs = rng.integers(0, p, size=(samples, Sd.dim))
        exact, examined = False, samples
    d_best = None
    H_S = nullspace(S.basis, p) if S.dim else np.eye(2 * n, dtype=np.int64)
    for start in range(0, msgs.shape[0], 1 << 16):
        W = msgs[start : start + (1 << 16)] @ Sd.basis % p
        outside = (W @ H_S.T % p).any(axis=1)
        if not outside.any():
            continue
        tot = F.weight_table[W[outside]].sum(axis=1)
        d = int(-(-tot.min() // 2))
        d_best = d if d_best is None else min(d_best, d)

    if not exact:
        raise EnumerationTooLarge(
            f"{total} vectors exceed the cap {cap}; sampled bound {d_best}", total, cap, d_best, samples
        )
    params = SymplecticParameters(
        n=n,
        K=Sd.dim - S.dim,
        K_css=C1.k - C2.k,
        dim_C=S.dim,
        dim_dual=Sd.dim,
        d_M=d_best,
        examined=examined,
    )
    return S, params
