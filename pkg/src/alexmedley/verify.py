"""Independent checks of emitted certificates and JSON reports.

Nothing here imports the assembling code: certificates are re-read from
their JSON form and every identity is recomputed with plain fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import jsonschema

RATIONAL = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
RVECTOR = {"type": "array", "items": RATIONAL}
POLY = {
    "type": "object",
    "required": ["rank", "rendered", "terms"],
    "properties": {
        "rank": {"type": "integer", "minimum": 1},
        "rendered": {"type": "string"},
        "terms": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
    },
}
POLYTOPE = {
    "type": "object",
    "required": ["dim", "vertices", "facets"],
    "properties": {
        "dim": {"type": "integer"},
        "vertices": {"type": "array", "items": RVECTOR},
        "facets": {"type": "array", "items": {"type": "object", "required": ["u", "rhs"],
                                              "properties": {"u": RVECTOR, "rhs": RATIONAL}}},
    },
}

SCHEMAS: dict[str, dict] = {
    "alexander": {
        "type": "object",
        "required": ["b1", "torsion", "delta_sharp", "classes"],
        "properties": {
            "b1": {"type": "integer"},
            "torsion": {"type": "array", "items": {"type": "integer"}},
            "delta_sharp": POLY,
            "classes": {"type": "array", "items": {
                "type": "object",
                "required": ["psi", "delta_psi", "nonvanishing", "degree", "betti_bound"],
                "properties": {"psi": {"type": "array", "items": {"type": "integer"}},
                               "delta_psi": POLY, "nonvanishing": {"type": "boolean"}},
            }},
        },
    },
    "covers": {
        "type": "object",
        "required": ["psi", "table"],
        "properties": {"table": {"type": "array", "items": {
            "type": "object", "required": ["m", "b1"]}}},
    },
    "normball": {
        "type": "object",
        "required": ["ball", "dual_ball"],
        "properties": {"ball": POLYTOPE, "dual_ball": POLYTOPE},
    },
    "certify": {
        "type": "object",
        "required": ["psi", "m_star", "search_bound", "face", "v0", "mu", "D", "block_counts",
                     "target_w", "pushforward_check", "norm_check"],
        "properties": {
            "psi": {"type": "array", "items": {"type": "integer"}},
            "m_star": {"type": "integer", "minimum": 1},
            "search_bound": {"type": "integer", "minimum": 0},
            "face": {"type": "object", "required": ["vertices"], "properties": {"vertices": {"type": "array", "items": RVECTOR}}},
            "v0": {"type": "object", "required": ["point", "cover_degree", "provenance"],
                   "properties": {"point": RVECTOR, "cover_degree": {"type": "integer", "minimum": 1},
                                  "provenance": {"enum": ["assumed", "fixture", "vertex"]}}},
            "mu": RVECTOR,
            "D": {"type": "integer", "minimum": 1},
            "block_counts": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "target_w": RVECTOR,
            "pushforward_check": {"type": "boolean"},
            "norm_check": {"type": "boolean"},
        },
    },
    "scan": {
        "type": "object",
        "required": ["radius", "vanishing"],
        "properties": {"vanishing": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}},
    },
    "examples": {"type": "object"},
}

ENVELOPE = {
    "type": "object",
    "required": ["tool", "version", "command", "inputs", "status", "result"],
    "properties": {
        "tool": {"type": "string"},
        "version": {"type": "string"},
        "command": {"type": "array", "items": {"type": "string"}},
        "inputs": {"type": "object", "additionalProperties": {"type": "string", "pattern": "^[0-9a-f]{64}$"}},
        "status": {"enum": ["ok", "error", "inconclusive"]},
    },
}


def validate_report(envelope: dict) -> None:
    """Schema-check an envelope and, for ok results, its payload."""
    jsonschema.validate(envelope, ENVELOPE)
    if envelope["status"] == "error":
        return
    name = envelope["command"][0] if envelope["command"] else ""
    schema = SCHEMAS.get(name)
    if schema is not None:
        jsonschema.validate(envelope["result"], schema)
    if name == "certify":
        problems = verify_certificate(envelope["result"])
        if problems:
            raise ValueError("; ".join(problems))


def _q(pair: Any) -> Fraction:
    num, den = pair
    if den <= 0:
        raise ValueError(f"bad denominator in {pair}")
    return Fraction(num, den)


def _qv(xs) -> list[Fraction]:
    return [_q(x) for x in xs]


def _inner(a, b) -> Fraction:
    total = Fraction(0)
    for x, y in zip(a, b):
        total += x * y
    return total


def verify_certificate(cert: dict) -> list[str]:
    """Return a list of problems; an empty list means the certificate checks out.

    Checked: weights are nonnegative with μ0 > 0 and sum 1; block counts are
    ``μ_i·D/d`` and integral; the mixture equals ``w``; the pushforward
    identity ``m0'(d·v0) + Σ m_i'(d·v_i) = D·w``; and ``||w||* = 1`` through
    the witness point of the dual face.
    """
    out = []
    mu = _qv(cert["mu"])
    big = cert["D"]
    d = cert["v0"]["cover_degree"]
    counts = cert["block_counts"]
    v0 = _qv(cert["v0"]["point"])
    verts = [_qv(v) for v in cert["face"]["vertices"]]
    w = _qv(cert["target_w"])
    dim = len(w)

    if sum(mu) != 1:
        out.append("weights do not sum to 1")
    if not mu or mu[0] <= 0:
        out.append("μ0 is not positive")
    if any(x < 0 for x in mu):
        out.append("negative weight")
    if len(mu) != len(verts) + 1 or len(counts) != len(mu):
        out.append("weights, counts and face vertices have inconsistent lengths")
        return out
    if big < 1 or d < 1:
        out.append("degrees must be positive")
        return out
    for x, c in zip(mu, counts):
        if x * big / d != c:
            out.append(f"count {c} differs from μ·D/d = {x * big / d}")
    if counts[0] < 1:
        out.append("base multiplicity is zero")
    if big % d:
        out.append("D is not a multiple of the base cover degree")

    mix = [mu[0] * v0[i] + sum((m * v[i] for m, v in zip(mu[1:], verts)), Fraction(0)) for i in range(dim)]
    if mix != w:
        out.append("μ0·v0 + Σ μi·vi differs from w")
    push = [counts[0] * d * v0[i] + sum((c * d * v[i] for c, v in zip(counts[1:], verts)), Fraction(0))
            for i in range(dim)]
    if push != [big * x for x in w]:
        out.append("pushforward identity fails")
    if "pushforward" in cert and _qv(cert["pushforward"]) != push:
        out.append("recorded pushforward disagrees with the recomputation")

    # ||w||* = 1: w is a convex combination of points of B* and pairs to 1 with a point of B
    funcs = [_qv(u) for u in cert.get("functionals", [])]
    x = _qv(cert.get("dual_face_witness", []))
    if funcs and x:
        signed = {tuple(u) for u in funcs} | {tuple(-c for c in u) for u in funcs}
        if any(tuple(v) not in signed for v in verts):
            out.append("a face vertex is not ± a defining functional")
        if max(abs(_inner(u, x)) for u in funcs) > 1:
            out.append("witness lies outside the norm ball")
        if any(_inner(v, x) != 1 for v in verts):
            out.append("witness does not support the face")
        if _inner(w, x) != 1:
            out.append("w does not pair to 1 with the witness")
        lam = _qv(cert["v0"].get("weights", []))
        if len(lam) != len(verts) or any(c < 0 for c in lam) or sum(lam) != 1 or \
                [sum((c * v[i] for c, v in zip(lam, verts)), Fraction(0)) for i in range(dim)] != v0:
            out.append("v0 is not certified to lie on the face")
    else:
        out.append("missing ball functionals or witness for the norm check")
    return out
