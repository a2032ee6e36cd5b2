"""Arithmetic of the medley construction and realization certificates.

A cover plan stacks ``m0`` copies of the base block ``B0`` (the manifold
cut along surfaces ``S_1..S_n``) together with ``m_i`` copies of each
``X_i`` (the manifold cut along ``S_i`` alone) into a cyclic cover.  The
Euler class of the resulting foliation pushes forward to
``m0·e0 + Σ m_i·e_i``.  A certificate records the convex weights, cover
degrees and block counts that realize a target class ``w`` this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .alexander import alexander_poly_psi, betti_bound
from .linprog import lexmin, solve_lp
from .polytopes import (
    NormBallPair,
    dot,
    dual_face,
    face_of,
    frac_json,
    in_cone_over_interior,
    vec,
)
from .presentations import Presentation, betti_of_cyclic_cover, check_primitive


class PlanError(ValueError):
    """Invalid multiplicities, block order, or frontier labels."""


class RealizationError(ValueError):
    """No admissible convex weights exist for the requested target."""


class CertificateError(ValueError):
    """A precondition of certificate assembly fails; ``reason`` names which."""

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(f"{reason}: {message}")


# -- cover plans ---------------------------------------------------------------

BASE = "B0"


def block_name(i: int) -> str:
    return BASE if i == 0 else f"X{i}"


@dataclass(frozen=True)
class Piece:
    """A slab of the cover between two frontier surfaces.

    ``R{i},{j}`` is part of a base copy running from ``S_i`` to ``S_j``;
    ``X{i}`` runs from ``S_i`` back to ``S_i``.
    """

    name: str
    inward: int
    outward: int


@dataclass(frozen=True)
class CoverPlan:
    n: int
    multiplicities: tuple[int, ...]
    block_sequence: tuple[str, ...]
    pieces: tuple[Piece, ...]

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    def frontier_counts(self) -> dict[int, int]:
        """Number of frontier lifts labeled ``S_i`` (each piece's inward frontier)."""
        counts = {i: 0 for i in range(1, self.n + 1)}
        for p in self.pieces:
            counts[p.inward] += 1
        return counts

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "multiplicities": list(self.multiplicities),
            "degree": self.degree,
            "block_sequence": list(self.block_sequence),
            "pieces": [p.name for p in self.pieces],
            "frontier_counts": {f"S{i}": c for i, c in self.frontier_counts().items()},
        }


def _base_chain(n: int) -> list[Piece]:
    return [Piece(f"R{i},{i % n + 1}", i, i % n + 1) for i in range(1, n + 1)]


def _expand(n: int, seq: Sequence[str]) -> list[Piece]:
    """Turn a block sequence into pieces; each X_i goes to the S_i frontier of the preceding B0."""
    first = seq.index(BASE)
    rot = list(seq[first:]) + list(seq[:first])  # cyclic: leading X blocks belong to the last B0
    pieces: list[Piece] = []
    k = 0
    while k < len(rot):
        k += 1
        run = []
        while k < len(rot) and rot[k] != BASE:
            run.append(int(rot[k][1:]))
            k += 1
        if run != sorted(run):
            raise PlanError(f"frontier label mismatch: blocks {['X%d' % i for i in run]} "
                            "do not follow the cyclic order of the surfaces")
        chain = _base_chain(n)
        out: list[Piece] = []
        for piece in chain:
            out.extend(Piece(f"X{i}", i, i) for i in run if i == piece.inward)
            out.append(piece)
        pieces.extend(out)
    return pieces


def build_cover_plan(n: int, multiplicities: Sequence[int], order: Sequence[str] | None = None) -> CoverPlan:
    """Validated plan for a cyclic cover of degree ``m0 + m1 + ... + mn``."""
    mult = tuple(int(m) for m in multiplicities)
    if n < 1:
        raise PlanError("need at least one surface")
    if len(mult) != n + 1:
        raise PlanError(f"expected {n + 1} multiplicities, got {len(mult)}")
    if mult[0] < 1:
        raise PlanError("m0 >= 1 is required")
    if any(m < 0 for m in mult):
        raise PlanError("multiplicities must be nonnegative")
    if order is None:
        seq = [BASE] * mult[0]
        for i in range(1, n + 1):
            seq += [block_name(i)] * mult[i]
    else:
        seq = list(order)
        for s in seq:
            if s != BASE and not (s.startswith("X") and s[1:].isdigit() and 1 <= int(s[1:]) <= n):
                raise PlanError(f"unknown block {s!r}")
        for i in range(n + 1):
            if seq.count(block_name(i)) != mult[i]:
                raise PlanError(f"order has {seq.count(block_name(i))} copies of {block_name(i)}, expected {mult[i]}")
    plan = CoverPlan(n, mult, tuple(seq), tuple(_expand(n, seq)))
    validate_plan(plan)
    return plan


def validate_plan(plan: CoverPlan) -> None:
    """Check frontier matching and the lift counts; raises :class:`PlanError`."""
    pieces = plan.pieces
    for a, b in zip(pieces, pieces[1:] + pieces[:1]):
        if a.outward != b.inward:
            raise PlanError(f"frontier label mismatch between {a.name} and {b.name}")
    if len(plan.block_sequence) != plan.degree:
        raise PlanError("block sequence length differs from the degree")
    m0 = plan.multiplicities[0]
    for i, c in plan.frontier_counts().items():
        if c != m0 + plan.multiplicities[i]:
            raise PlanError(f"S{i} has {c} lifts, expected {m0 + plan.multiplicities[i]}")


def pushforward_euler(plan: CoverPlan, classes: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """``Σ m_i·e_i``; depends only on the multiplicities."""
    if len(classes) != plan.n + 1:
        raise PlanError(f"expected {plan.n + 1} Euler classes, got {len(classes)}")
    vs = [vec(e) for e in classes]
    b = len(vs[0])
    if any(len(v) != b for v in vs):
        raise ValueError("Euler classes of different ranks")
    return tuple(sum((m * v[j] for m, v in zip(plan.multiplicities, vs)), Fraction(0)) for j in range(b))


# -- weights and degrees ---------------------------------------------------------


def convex_realization(w: Sequence, v0: Sequence, vertices: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Weights ``(μ0, μ1..μn)`` with ``w = μ0·v0 + Σ μi·vi``, ``Σμ = 1``, ``μ0 > 0``.

    μ0 is as large as possible; the rest is the lexicographically least
    solution with that μ0.
    """
    w = vec(w)
    pts = [vec(v0)] + [vec(v) for v in vertices]
    n = len(pts)
    a = [[p[i] for p in pts] for i in range(len(w))] + [[1] * n]
    b = list(w) + [1]
    best = solve_lp([1] + [0] * (n - 1), a, b, maximize=True)
    if not best.ok:
        raise RealizationError("target is not in the convex hull of the face")
    if best.value <= 0:
        raise RealizationError("no weighting with μ0 > 0: target on the boundary of the face")
    fix = [1] + [0] * (n - 1)
    res = lexmin(a + [fix], b + [best.value], list(range(1, n)), n)
    return res.x


def convex_weights(x: Sequence, points: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Lexicographically least barycentric weights of ``x`` over ``points``."""
    x = vec(x)
    pts = [vec(p) for p in points]
    n = len(pts)
    a = [[p[i] for p in pts] for i in range(len(x))] + [[1] * n]
    res = lexmin(a, list(x) + [1], list(range(n)), n)
    if not res.ok:
        raise RealizationError("point is not in the convex hull")
    return res.x


def divisibility_degree(mu: Sequence, d: int) -> tuple[int, tuple[int, ...]]:
    """Least ``D`` with every ``μi·D/d`` integral, and those counts."""
    mu = [Fraction(x) for x in mu]
    if d < 1:
        raise ValueError("cover degree must be positive")
    if sum(mu) != 1 or mu[0] <= 0 or any(x < 0 for x in mu):
        raise ValueError("weights must be nonnegative, sum to 1, with μ0 > 0")
    den = 1
    for x in mu:
        den = lcm(den, x.denominator)
    big = d * den
    counts = tuple(int(x * big / d) for x in mu)
    return big, counts


@dataclass(frozen=True)
class Stabilization:
    m_star: int
    b_max: int
    search_bound: int
    table: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"m_star": self.m_star, "b_max": self.b_max, "search_bound": self.search_bound,
                "table": [list(r) for r in self.table]}


def stabilize_betti(p: Presentation, psi: Sequence[int], search_bound: int | None = None) -> Stabilization:
    """Smallest cyclic-cover degree attaining the largest b1 among degrees up to the bound."""
    bound = betti_bound(p, psi)
    limit = search_bound if search_bound is not None else 4 * bound
    table = tuple((m, betti_of_cyclic_cover(p, psi, m)) for m in range(1, limit + 1))
    b_max = max(b for _, b in table)
    m_star = min(m for m, b in table if b == b_max)
    return Stabilization(m_star, b_max, limit, table)


# -- certificates ----------------------------------------------------------------


@dataclass
class MedleyCertificate:
    psi: tuple[int, ...]
    mode: str  # "medley" or "vertex_axiom"
    stabilization: Stabilization | None
    face_vertices: tuple[tuple[Fraction, ...], ...]
    dual_face_witness: tuple[Fraction, ...]
    v0: tuple[Fraction, ...]
    v0_weights: tuple[Fraction, ...]
    cover_degree: int
    provenance: str
    mu: tuple[Fraction, ...]
    D: int
    block_counts: tuple[int, ...]
    target_w: tuple[Fraction, ...]
    functionals: tuple[tuple[Fraction, ...], ...]
    plan: CoverPlan | None
    pushforward: tuple[Fraction, ...]
    pushforward_check: bool
    norm_check: bool

    def to_json(self) -> dict:
        def v(x):
            return [frac_json(c) for c in x]

        stab = self.stabilization
        return {
            "psi": list(self.psi),
            "mode": self.mode,
            "m_star": stab.m_star if stab else 1,
            "b_max": stab.b_max if stab else None,
            "search_bound": stab.search_bound if stab else 0,
            "face": {"vertices": [v(x) for x in self.face_vertices]},
            "dual_face_witness": v(self.dual_face_witness),
            "v0": {"point": v(self.v0), "cover_degree": self.cover_degree,
                   "provenance": self.provenance, "weights": v(self.v0_weights)},
            "mu": v(self.mu),
            "D": self.D,
            "block_counts": list(self.block_counts),
            "target_w": v(self.target_w),
            "functionals": [v(u) for u in self.functionals],
            "plan": self.plan.to_json() if self.plan else None,
            "pushforward": v(self.pushforward),
            "pushforward_check": self.pushforward_check,
            "norm_check": self.norm_check,
        }


def _project(projection, psi) -> tuple[Fraction, ...]:
    if projection is None:
        return vec(psi)
    return tuple(dot(vec(r), vec(psi)) for r in projection)


def certify_virtual_realization(presentation: Presentation, ball: NormBallPair, w: Sequence, psi: Sequence[int],
                                v0: Sequence | None = None, d: int = 1, projection=None,
                                search_bound: int | None = None) -> MedleyCertificate:
    """Assemble a realization certificate for the rational class ``w``.

    ``w`` lives in the coordinates of ``ball``; ``projection`` carries ψ
    there when the ball is only known on a quotient.  ``v0`` with cover degree
    ``d`` is the class contributed by the base foliation; when omitted, the
    barycenter of the face is used with ``d = 1`` and marked as assumed.
    """
    w = vec(w)
    psi = check_primitive(psi)
    dual = ball.dual_ball
    if len(w) != dual.dim:
        raise CertificateError("dimension", f"w has {len(w)} coordinates, ball has {dual.dim}")
    norm = dual.gauge(w)
    if norm != 1:
        raise CertificateError("not_on_boundary", f"dual norm of w is {norm}, not 1")
    face = face_of(w, dual)
    back = dual_face(face, ball.ball)
    if not in_cone_over_interior(_project(projection, psi), back):
        raise CertificateError("psi_cone", "ψ is not in the cone over the interior of the dual face")
    delta = alexander_poly_psi(presentation, psi)
    if delta.is_zero():
        raise CertificateError("vanishing", "the Alexander polynomial of ψ vanishes")
    witness = back.barycenter()
    verts = tuple(face.vertices)

    if face.dim == 0:
        # vertex targets are realized directly, no cover needed
        plan = build_cover_plan(1, (1, 0))
        push = pushforward_euler(plan, [w, w])
        return MedleyCertificate(
            psi, "vertex_axiom", None, (w,), witness, w, (Fraction(1),), 1, "vertex", (Fraction(1), Fraction(0)),
            1, (1, 0), w, ball.functionals, plan, push, push == w, ball.dual_norm(push) == 1,
        )

    stab = stabilize_betti(presentation, psi, search_bound)
    if v0 is None:
        v0 = face.barycenter()
        d = 1
        provenance = "assumed"
    else:
        v0 = vec(v0)
        provenance = "fixture"
        if not face.contains(v0):
            raise CertificateError("v0_not_in_face", "v0 does not lie on the face of w")
    v0_weights = convex_weights(v0, verts)
    try:
        mu = convex_realization(w, v0, verts)
    except RealizationError as exc:
        raise CertificateError("realization", str(exc)) from exc
    big, counts = divisibility_degree(mu, d)
    plan = build_cover_plan(len(verts), counts)
    classes = [tuple(d * x for x in v0)] + [tuple(d * x for x in v) for v in verts]
    push = pushforward_euler(plan, classes)
    target = tuple(big * x for x in w)
    realized = tuple(x / big for x in push)
    return MedleyCertificate(
        psi, "medley", stab, verts, witness, v0, v0_weights, d, provenance, tuple(mu), big, counts, w,
        ball.functionals, plan, push, push == target, ball.dual_norm(realized) == 1,
    )
