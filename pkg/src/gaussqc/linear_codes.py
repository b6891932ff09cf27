"""Linear and polynomial (cyclic / negacyclic) codes over G_pi.

Codes are stored by a reduced row-echelon generator matrix of integer labels
(see ``PrimeField.project``), so all linear algebra is plain arithmetic mod p.
Minimum distances are found by exhaustive enumeration of the message space,
vectorised with numpy and optionally split over worker processes.
"""

from __future__ import annotations

import itertools
from math import comb
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    Ambiguous,
    EnumerationTooLarge,
    FieldMismatch,
    InternalInvariant,
    LengthMismatch,
    NoDecode,
    NotACodeword,
    NotADivisor,
    ZeroCode,
)
from .gaussian_field import GaussInt, PrimeField
from .polynomials import Polynomial, divides

METRICS = ("mannheim", "hamming")
DEFAULT_CAP = 10**8
_INNER_ROWS = 1 << 16


# linear algebra mod p


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p with zero rows dropped; returns (R, pivot columns)."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("matrix must be two dimensional")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(M, p: int) -> np.ndarray:
    """Basis (as rows) of ``{v : M v = 0}`` mod p; M must be two dimensional."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(M, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, c in enumerate(pivots):
            basis[j, c] = (-R[i, f]) % p
    return basis


# codes


class LinearCode:
    """A linear code of length ``n`` over ``field`` given by its row space.

    ``origin`` records ``(generator polynomial, sign)`` for codes built from a
    divisor of ``x**n - 1`` (sign -1) or ``x**n + 1`` (sign +1).
    """

    def __init__(self, field: PrimeField, n: int, labels, origin=None, name: str | None = None):
        self.field = field
        self.n = n
        G = np.asarray(labels, dtype=np.int64).reshape(-1, n) if n else np.zeros((0, 0), np.int64)
        self._G, self._pivots = rref(G, field.p) if G.size else (np.zeros((0, n), np.int64), [])
        self.origin = origin
        self.name = name
        self._distance: dict[str, int] = {}
        self._H: np.ndarray | None = None

    @classmethod
    def zero(cls, field: PrimeField, n: int) -> LinearCode:
        return cls(field, n, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, field: PrimeField, n: int) -> LinearCode:
        return cls(field, n, np.eye(n, dtype=np.int64))

    @property
    def k(self) -> int:
        return self._G.shape[0]

    @property
    def size(self) -> int:
        return self.field.p**self.k

    @property
    def labels(self) -> np.ndarray:
        """Generator matrix as integer labels (reduced row echelon form)."""
        return self._G.copy()

    @property
    def gen_matrix(self) -> list[list[GaussInt]]:
        return [self.field.from_labels(row) for row in self._G]

    @property
    def check_labels(self) -> np.ndarray:
        """Parity-check matrix (generator of the dual) as labels."""
        if self._H is None:
            self._H = nullspace(self._G, self.field.p)
        return self._H

    def syndrome(self, vec) -> np.ndarray:
        v = self._vector_labels(vec)
        return self.check_labels @ v % self.field.p

    def contains(self, vec) -> bool:
        return not self.syndrome(vec).any()

    def _vector_labels(self, vec) -> np.ndarray:
        if isinstance(vec, np.ndarray) and vec.dtype.kind in "iu":
            v = vec.astype(np.int64)
        else:
            v = self.field.to_labels(vec)
        if v.shape != (self.n,):
            raise LengthMismatch(f"expected a length-{self.n} vector, got shape {v.shape}")
        return v

    def encode(self, msg) -> list[GaussInt]:
        return self.field.from_labels(self.encode_labels(self.field.to_labels(msg)))

    def encode_labels(self, msg: np.ndarray) -> np.ndarray:
        msg = np.asarray(msg, dtype=np.int64)
        if msg.shape[-1] != self.k:
            raise LengthMismatch(f"message length {msg.shape[-1]} != dimension {self.k}")
        return msg @ self._G % self.field.p

    def message_of(self, vec) -> np.ndarray:
        """Message labels encoding ``vec`` (the pivot coordinates of the echelon basis)."""
        v = self._vector_labels(vec)
        if not self.contains(v):
            raise NotACodeword("vector is not in the code")
        return v[self._pivots].copy()

    def codeword_labels(self) -> np.ndarray:
        """All codewords as a (p**k, n) label array; only for small codes."""
        p, k = self.field.p, self.k
        msgs = _digits(np.arange(p**k, dtype=np.int64), p, k)
        return msgs @ self._G % p

    def codewords(self) -> Iterator[tuple[GaussInt, ...]]:
        for row in self.codeword_labels():
            yield tuple(self.field.from_labels(row))

    def same_space(self, other: LinearCode) -> bool:
        return (
            self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self._G, other._G)
        )

    def cached_distance(self, metric: str) -> int | None:
        return self._distance.get(metric)

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"LinearCode({label}[{self.n}, {self.k}] over G_{self.field.pi})"


def _digits(idx: np.ndarray, p: int, k: int) -> np.ndarray:
    """Base-p digits, least significant first, as an (len(idx), k) array."""
    out = np.empty((idx.size, k), dtype=np.int64)
    rest = idx.copy()
    for j in range(k):
        out[:, j] = rest % p
        rest //= p
    return out


def from_generator_matrix(rows, field: PrimeField, name: str | None = None) -> LinearCode:
    rows = [list(r) for r in rows]
    if not rows:
        raise ZeroCode("no generator rows given")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise LengthMismatch("generator rows have different lengths")
    labels = np.array([field.to_labels(r) for r in rows], dtype=np.int64)
    code = LinearCode(field, n, labels, name=name)
    if code.k == 0:
        raise ZeroCode("all generator rows are zero")
    return code


def code_modulus(n: int, sign: int, field: PrimeField) -> Polynomial:
    """``x**n + 1`` for sign +1, ``x**n - 1`` for sign -1."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return Polynomial.x_n_minus(n, -sign, field)


def from_generator_poly(g: Polynomial, n: int, sign: int, name: str | None = None) -> LinearCode:
    """Code generated by ``g`` in G_pi[x] / (x**n + sign); g is made monic first."""
    F = g.field
    if g.is_zero() or g.degree >= n:
        raise ValueError(f"generator must be nonzero with degree < n = {n}")
    modulus = code_modulus(n, sign, F)
    g = g.monic()
    if not divides(g, modulus):
        raise NotADivisor(f"{g} does not divide {modulus}")
    k = n - g.degree
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i : i + g.degree + 1] = g.labels
    return LinearCode(F, n, rows, origin=(g, sign), name=name)


def dual(C: LinearCode) -> LinearCode:
    """Dual under the bilinear form ``sum u_i v_i`` (no conjugation)."""
    return LinearCode(C.field, C.n, C.check_labels)


def is_subcode(C2: LinearCode, C1: LinearCode) -> bool:
    _same_ambient(C1, C2)
    if C2.k == 0:
        return True
    return not (C1.check_labels @ C2.labels.T % C1.field.p).any()


def _same_ambient(A: LinearCode, B: LinearCode):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.n != B.n:
        raise LengthMismatch(f"lengths {A.n} and {B.n} differ")


# weights and minimum distance


def weight_table(field: PrimeField, metric: str) -> np.ndarray:
    if metric == "mannheim":
        return field.weight_table
    if metric == "hamming":
        return field.hamming_table
    raise ValueError(f"unknown metric {metric!r}")


def vector_weight(vec, field: PrimeField, metric: str) -> int:
    labels = vec if isinstance(vec, np.ndarray) else field.to_labels(vec)
    return int(weight_table(field, metric)[labels].sum())


def _min_weights_chunk(G: np.ndarray, p: int, tables: np.ndarray, k_in: int, start: int, stop: int) -> list[int]:
    """Minimum nonzero weight per table over codewords whose outer message index is in [start, stop)."""
    k = G.shape[0]
    inner = _digits(np.arange(p**k_in, dtype=np.int64), p, k_in) @ G[k - k_in :] % p
    outer_rows = G[: k - k_in]
    best = [np.iinfo(np.int64).max] * len(tables)
    for o in range(start, stop):
        if outer_rows.shape[0]:
            offset = _digits(np.array([o], dtype=np.int64), p, outer_rows.shape[0])[0] @ outer_rows % p
            cw = inner + offset
            cw[cw >= p] -= p
        else:
            cw = inner
        block = cw[1:] if o == 0 else cw
        for t, table in enumerate(tables):
            w = int(table[block].sum(axis=1).min()) if block.shape[0] else best[t]
            if w < best[t]:
                best[t] = w
    return best


def _split_enumeration(k: int, p: int) -> int:
    k_in = 1
    while k_in < k and p ** (k_in + 1) <= _INNER_ROWS:
        k_in += 1
    return min(k_in, k)


def _exhaustive_min(C: LinearCode, metrics: Sequence[str], workers: int) -> dict[str, int]:
    p, k = C.field.p, C.k
    G = C.labels
    tables = np.stack([weight_table(C.field, m) for m in metrics])
    k_in = _split_enumeration(k, p)
    n_outer = p ** (k - k_in)
    if workers <= 1 or n_outer < 2:
        best = _min_weights_chunk(G, p, tables, k_in, 0, n_outer)
    else:
        bounds = np.linspace(0, n_outer, min(workers, n_outer) + 1).astype(int)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_min_weights_chunk, G, p, tables, k_in, int(a), int(b))
                for a, b in zip(bounds[:-1], bounds[1:])
                if b > a
            ]
            parts = [f.result() for f in futures]
        best = [min(part[t] for part in parts) for t in range(len(metrics))]
    return dict(zip(metrics, best))


def _low_weight_messages(k: int, p: int, budget: int) -> np.ndarray:
    """Messages of increasing Hamming weight (1, 2, ...) up to ``budget`` of them."""
    out, count = [], 0
    for w in range(1, k + 1):
        for support in itertools.combinations(range(k), w):
            for values in itertools.product(range(1, p), repeat=w):
                m = np.zeros(k, dtype=np.int64)
                m[list(support)] = values
                out.append(m)
                count += 1
                if count >= budget:
                    return np.array(out)
    return np.array(out) if out else np.zeros((0, k), dtype=np.int64)


def distance_bound(C: LinearCode, metric: str, budget: int = 100_000) -> tuple[int, int]:
    """Smallest weight over the codewords of low-weight messages in echelon form.

    Returns ``(bound, examined)``; the true minimum distance is at most ``bound``.
    """
    msgs = _low_weight_messages(C.k, C.field.p, budget)
    cws = msgs @ C.labels % C.field.p
    w = weight_table(C.field, metric)[cws].sum(axis=1)
    return int(w.min()), int(msgs.shape[0])


def min_distance(
    C: LinearCode,
    metric: str = "mannheim",
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    bound_budget: int = 100_000,
) -> int:
    """Exact minimum weight of a nonzero codeword, by enumerating all p**k - 1 of them.

    Both metrics are computed in one pass and cached on the code.  Raises
    :class:`EnumerationTooLarge` when ``p**k > cap``; the exception carries
    an upper bound from a partial enumeration of ``bound_budget`` messages.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if C.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    if metric in C._distance:
        return C._distance[metric]
    total = C.size
    if total > cap:
        bound, examined = distance_bound(C, metric, bound_budget) if bound_budget else (None, 0)
        raise EnumerationTooLarge(
            f"{total} codewords exceed the enumeration cap {cap}", total, cap, bound, examined
        )
    C._distance.update(_exhaustive_min(C, METRICS, workers))
    return C._distance[metric]


# decoding


@dataclass(frozen=True)
class DecodeResult:
    codeword: tuple[GaussInt, ...]
    error: tuple[GaussInt, ...]
    metric: str
    weight: int


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _weight_classes(field: PrimeField, weight: int, metric: str) -> Iterator[tuple[tuple[int, ...], list[np.ndarray]]]:
    """(support size, per-position value arrays) blocks covering all vectors of one weight."""
    if metric == "hamming":
        yield (1,) * weight, [np.arange(1, field.p)] * weight
    elif metric == "mannheim":
        groups = {w: np.array(v) for w, v in field.residues_by_weight().items()}
        for s in range(1, weight + 1):
            for comp in _compositions(weight, s):
                if all(c in groups for c in comp):
                    yield comp, [groups[c] for c in comp]
    else:
        raise ValueError(f"unknown metric {metric!r}")


def count_patterns(field: PrimeField, n: int, weight: int, metric: str) -> int:
    """Number of length-n vectors of exactly the given weight."""
    if weight == 0:
        return 1
    total = 0
    for comp, values in _weight_classes(field, weight, metric):
        if len(comp) <= n:
            total += comb(n, len(comp)) * int(np.prod([len(v) for v in values]))
    return total


def iter_error_patterns(field: PrimeField, n: int, weight: int, metric: str) -> Iterator[np.ndarray]:
    """Blocks (2-d label arrays) that together hold every vector of exactly ``weight``."""
    if weight == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    for comp, values in _weight_classes(field, weight, metric):
        s = len(comp)
        if s > n:
            continue
        grid = np.stack(np.meshgrid(*values, indexing="ij"), axis=-1).reshape(-1, s)
        for support in itertools.combinations(range(n), s):
            block = np.zeros((grid.shape[0], n), dtype=np.int64)
            block[:, support] = grid
            yield block


def error_patterns(field: PrimeField, n: int, weight: int, metric: str) -> np.ndarray:
    """All length-n label vectors of exactly the given weight, as rows."""
    blocks = list(iter_error_patterns(field, n, weight, metric))
    return np.concatenate(blocks) if blocks else np.zeros((0, n), dtype=np.int64)


def min_distance_search(C: LinearCode, metric: str = "mannheim", budget: int = DEFAULT_CAP) -> int:
    """Minimum distance by scanning ambient vectors of weight 1, 2, ... for codewords.

    Complements :func:`min_distance`: its cost depends on n and the distance,
    not on p**k, so it suits high-rate codes.  Raises
    :class:`EnumerationTooLarge` with ``lower`` set to the first weight not
    fully ruled out once more than ``budget`` vectors would be scanned.
    """
    if C.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    H, p = C.check_labels, C.field.p
    if H.shape[0] == 0:
        return 1
    scanned = 0
    for w in range(1, weight_table(C.field, metric).max() * C.n + 1):
        count = count_patterns(C.field, C.n, w, metric)
        if scanned + count > budget:
            raise EnumerationTooLarge(
                f"scanning weight {w} needs {scanned + count} vectors, over the budget {budget}",
                scanned + count, budget, lower=w,
            )
        scanned += count
        for block in iter_error_patterns(C.field, C.n, w, metric):
            if (~(block @ H.T % p).any(axis=1)).any():
                return w
    raise InternalInvariant("a nonzero code must contain a vector of bounded weight")


def search_errors(C: LinearCode, syndrome: np.ndarray, metric: str, t: int) -> tuple[int, np.ndarray]:
    """Lowest-weight error patterns (weight <= t) with the given syndrome.

    Returns ``(weight, patterns)``; raises :class:`NoDecode` if none exists.
    """
    H, p = C.check_labels, C.field.p
    syndrome = np.asarray(syndrome, dtype=np.int64) % p
    for w in range(t + 1):
        E = error_patterns(C.field, C.n, w, metric)
        if E.shape[0] == 0:
            continue
        hits = ~((E @ H.T % p) != syndrome).any(axis=1) if H.shape[0] else np.ones(E.shape[0], bool)
        if hits.any():
            return w, E[hits]
    raise NoDecode(f"no error pattern of {metric} weight <= {t} matches the syndrome")


def decode_syndrome(C: LinearCode, syndrome, metric: str, t: int) -> np.ndarray:
    """Unique minimum-weight error labels for a syndrome, or Ambiguous / NoDecode."""
    w, E = search_errors(C, syndrome, metric, t)
    if E.shape[0] > 1:
        tied = [tuple(C.field.from_labels(e)) for e in E]
        raise Ambiguous(f"{E.shape[0]} error patterns of weight {w} share the syndrome", tied, w)
    return E[0]


def decode_bounded(C: LinearCode, r, metric: str = "mannheim", t: int = 1) -> DecodeResult:
    """Nearest codeword to ``r`` within distance ``t``.

    Error patterns are tried in order of increasing weight; the answer must be
    unique at the smallest weight that yields a codeword.
    """
    F, p = C.field, C.field.p
    rl = C._vector_labels(r)
    w, E = search_errors(C, C.syndrome(rl), metric, t)
    cws = (rl - E) % p
    if E.shape[0] > 1:
        tied = [tuple(F.from_labels(c)) for c in cws]
        raise Ambiguous(f"{len(tied)} codewords at {metric} distance {w}", tied, w)
    return DecodeResult(tuple(F.from_labels(cws[0])), tuple(F.from_labels(E[0])), metric, w)


def correction_radius(d: int) -> int:
    return max((d - 1) // 2, 0)

