"""JSON spec documents in, report documents out.

Input documents::

    field spec  {"pi": [re, im]}
    code spec   {"p": int, "pi": [re, im], "n": int, "modulus": "+1" | "-1",
                 "generator_poly": [[re, im], ...]}     or "generator_matrix"
    css spec    {"c1": <code spec>, "c2": <code spec>, "distance_cap": int}
    run spec    {"css": <css spec>, "x": vector, "e1": vector, "e2": vector,
                 "mode": "full" | "syndrome-only"}

Scalars may be ``[re, im]`` pairs, integers or literals such as ``"1-2i"``;
a generator polynomial may also be one comma separated string.
"""

from __future__ import annotations

import json
from pathlib import Path

from .css import CssCode, DistanceValue, build_css, check_singleton, component_distance, correctable_count
from .errors import GaussQCError, ParseError
from .gaussian_field import GaussInt, PrimeField, format_gauss
from .linear_codes import DEFAULT_CAP, LinearCode, dual, from_generator_matrix, from_generator_poly
from .polynomials import Polynomial
from .qudit_sim import ProtocolTranscript


def load_document(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def dump_document(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    return doc[key]


def _scalar(value, where: str) -> GaussInt:
    try:
        return GaussInt.coerce(value)
    except (GaussQCError, TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def _vector(value, where: str) -> list[GaussInt]:
    if isinstance(value, str):
        value = [t for t in value.split(",")]
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list of scalars")
    return [_scalar(v, f"{where}[{i}]") for i, v in enumerate(value)]


def parse_field(doc: dict, where: str = "spec") -> PrimeField:
    pi = _scalar(_require(doc, "pi", where), f"{where}.pi")
    try:
        F = PrimeField(pi)
    except GaussQCError as exc:
        raise ParseError(f"{where}.pi: {exc}") from None
    if "p" in doc and doc["p"] != F.p:
        raise ParseError(f"{where}.p: {doc['p']} does not equal N({pi}) = {F.p}")
    return F


def parse_code(doc: dict, where: str = "spec") -> LinearCode:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected an object")
    F = parse_field(doc, where)
    try:
        if "generator_poly" in doc:
            n = _require(doc, "n", where)
            modulus = str(doc.get("modulus", "+1")).strip()
            if modulus not in ("+1", "-1", "1"):
                raise ParseError(f"{where}.modulus: expected '+1' or '-1', got {modulus!r}")
            g = Polynomial(_vector(doc["generator_poly"], f"{where}.generator_poly"), F)
            return from_generator_poly(g, int(n), -1 if modulus == "-1" else 1)
        if "generator_matrix" in doc:
            rows = _require(doc, "generator_matrix", where)
            if not isinstance(rows, list):
                raise ParseError(f"{where}.generator_matrix: expected a list of rows")
            matrix = [_vector(r, f"{where}.generator_matrix[{i}]") for i, r in enumerate(rows)]
            code = from_generator_matrix(matrix, F)
            if "n" in doc and doc["n"] != code.n:
                raise ParseError(f"{where}.n: {doc['n']} does not match the matrix width {code.n}")
            return code
    except ParseError:
        raise
    except GaussQCError as exc:
        raise ParseError(f"{where}: {type(exc).__name__}: {exc}") from None
    raise ParseError(f"{where}: needs 'generator_poly' or 'generator_matrix'")


def parse_css(doc: dict, where: str = "spec") -> tuple[LinearCode, LinearCode, int]:
    C1 = parse_code(_require(doc, "c1", where), f"{where}.c1")
    C2 = parse_code(_require(doc, "c2", where), f"{where}.c2")
    cap = int(doc.get("distance_cap", DEFAULT_CAP))
    if cap < 1:
        raise ParseError(f"{where}.distance_cap: must be at least 1")
    return C1, C2, cap


def parse_run(doc: dict, where: str = "spec") -> dict:
    C1, C2, cap = parse_css(_require(doc, "css", where), f"{where}.css")
    x = _vector(_require(doc, "x", where), f"{where}.x")
    if len(x) == C1.k and len(x) != C1.n:
        x = C1.encode(x)
    elif len(x) != C1.n:
        raise ParseError(f"{where}.x: length {len(x)} is neither k1 = {C1.k} nor n = {C1.n}")
    run = {"C1": C1, "C2": C2, "cap": cap, "x": x}
    for key in ("e1", "e2"):
        vec = _vector(doc.get(key, [0] * C1.n), f"{where}.{key}")
        if len(vec) != C1.n:
            raise ParseError(f"{where}.{key}: length {len(vec)} != n = {C1.n}")
        run[key] = vec
    mode = doc.get("mode", "full")
    if mode not in ("full", "syndrome-only"):
        raise ParseError(f"{where}.mode: expected 'full' or 'syndrome-only', got {mode!r}")
    run["mode"] = mode
    return run


# reports


def _distance_doc(v: DistanceValue):
    return v.value if v.exact else str(v)


def _gauss_list(values) -> list[str]:
    return [format_gauss(v) for v in values]


def field_report(F: PrimeField) -> dict:
    return {
        "pi": format_gauss(F.pi),
        "p": F.p,
        "residues": _gauss_list(F.residues),
        "alpha1": format_gauss(F.alpha1),
        "alpha2": format_gauss(F.alpha2),
        "residues_by_weight": {
            str(w): _gauss_list(F.residues[g] for g in labels) for w, labels in F.residues_by_weight().items()
        },
    }


def code_report(C: LinearCode, cap: int = DEFAULT_CAP, workers: int = 1) -> dict:
    D = dual(C)
    doc = {
        "pi": format_gauss(C.field.pi),
        "p": C.field.p,
        "n": C.n,
        "k": C.k,
        "generator_matrix": [_gauss_list(row) for row in C.gen_matrix],
        "d_M": _distance_doc(component_distance(C, "mannheim", cap, workers)),
        "d_H": _distance_doc(component_distance(C, "hamming", cap, workers)),
        "dual": {
            "k": D.k,
            "d_M": _distance_doc(component_distance(D, "mannheim", cap, workers)) if D.k else None,
            "d_H": _distance_doc(component_distance(D, "hamming", cap, workers)) if D.k else None,
        },
    }
    if C.origin is not None:
        g, sign = C.origin
        doc["generator_poly"] = g.to_text()
        doc["modulus"] = f"x^{C.n} {'+' if sign == 1 else '-'} 1"
    return doc


def css_report(q: CssCode) -> dict:
    p = q.field.p
    notes = []
    for name, comp in q.components.items():
        for metric, v in comp.items():
            if not v.exact:
                notes.append(f"{metric} distance of {name} is only bounded: {v}")
    counts = {
        "mannheim": correctable_count(q.n, q.d_M.value, "mannheim"),
        "hamming": correctable_count(q.n, q.d_H.value, "hamming", p),
    }
    single = check_singleton(q.n, q.K, q.d_H.value, p)
    return {
        "pi": format_gauss(q.field.pi),
        "p": p,
        "n": q.n,
        "k1": q.C1.k,
        "k2": q.C2.k,
        "K": q.K,
        "d_M": _distance_doc(q.d_M),
        "d_H": _distance_doc(q.d_H),
        "mannheim_params": q.label("mannheim"),
        "hamming_params": q.label("hamming"),
        "components": {
            name: {m: _distance_doc(v) for m, v in comp.items()} for name, comp in q.components.items()
        },
        "counts": {m: {"t": r.t, "count": r.count} for m, r in counts.items()},
        "singleton": {"attains": single.attains, "slack": single.slack, "metric": "hamming"},
        "interpretation_notes": notes,
    }


def css_from_spec(doc: dict, workers: int = 1, cap: int | None = None) -> CssCode:
    C1, C2, spec_cap = parse_css(doc)
    return build_css(C1, C2, distance_cap=cap or spec_cap, workers=workers)


def transcript_report(t: ProtocolTranscript) -> dict:
    def vec(v):
        return None if v is None else _gauss_list(v)

    return {
        "mode": t.mode,
        "bit_syndrome": vec(t.bit_syndrome),
        "phase_syndrome": vec(t.phase_syndrome),
        "recovered_e1": vec(t.recovered_e1),
        "recovered_e2": vec(t.recovered_e2),
        "within_capacity": t.within_capacity,
        "corrected": t.corrected,
        "fidelity": None if t.fidelity is None else round(t.fidelity, 12),
        "t1": t.t1,
        "t2": t.t2,
        "notes": list(t.notes),
    }
