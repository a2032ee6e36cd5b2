"""Fox calculus and Alexander polynomials of finite presentations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

from .laurent import (
    LaurentPoly,
    canonicalize,
    doteq,
    floating_degree,
    gcd_many,
    is_primitive_covector,
    specialize,
)
from .presentations import (
    AbelianizationData,
    Letter,
    Presentation,
    check_primitive,
    homology,
)


class VanishingError(ValueError):
    """The Alexander polynomial vanishes where a nonvanishing one is required."""


# -- Fox calculus -------------------------------------------------------------


def fox_derivative(word: Sequence[Letter], x: int, ab: AbelianizationData) -> LaurentPoly:
    """Abelianized free derivative ∂word/∂x as an element of Z[H]."""
    if not 0 <= x < len(ab.free_map):
        raise IndexError(f"unknown generator index {x}")
    rank = max(ab.b, 1)
    prefix = [0] * rank
    out: dict = {}
    for g, k in word:
        step = ab.free_map[g] if ab.b else (0,)
        if g == x:
            if k > 0:
                for i in range(k):
                    e = tuple(p + i * s for p, s in zip(prefix, step))
                    out[e] = out.get(e, 0) + 1
            else:
                for i in range(1, -k + 1):
                    e = tuple(p - i * s for p, s in zip(prefix, step))
                    out[e] = out.get(e, 0) - 1
        prefix = [p + k * s for p, s in zip(prefix, step)]
    return LaurentPoly(rank, out)


def group_element(word: Sequence[Letter], ab: AbelianizationData) -> LaurentPoly:
    e = ab.image(word) if ab.b else (0,)
    return LaurentPoly.monomial(e)


@dataclass
class AlexanderMatrix:
    """Fox Jacobian over Z[H]: rows are relators, columns generators."""

    entries: list
    presentation: Presentation
    ab: AbelianizationData

    @property
    def rank(self) -> int:
        return max(self.ab.b, 1)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.presentation.gens)

    def row_identity_holds(self) -> bool:
        """Σ_j (∂r/∂x_j)(x_j - 1) = r - 1 = 0 in Z[H] for every relator row."""
        for row in self.entries:
            total = LaurentPoly.zero(self.rank)
            for j, d in enumerate(row):
                xj = LaurentPoly.monomial(self.ab.free_map[j] if self.ab.b else (0,))
                total = total + d * (xj - 1)
            if not total.is_zero():
                return False
        return True

    def specialize(self, psi: Sequence[int]) -> list:
        return [[specialize(e, psi) for e in row] for row in self.entries]


def alexander_matrix(p: Presentation, ab: AbelianizationData | None = None) -> AlexanderMatrix:
    ab = ab or homology(p)
    rows = [[fox_derivative(r, j, ab) for j in range(len(p.gens))] for r in p.relators]
    return AlexanderMatrix(rows, p, ab)


# -- minors -------------------------------------------------------------------


def _row_minors(rows: Sequence[Sequence[LaurentPoly]], ncols: int, rank: int) -> dict:
    """All k×k minors of the k given rows, keyed by sorted column tuples.

    Laplace expansion along successive rows with memoisation over column
    subsets; fraction free.
    """
    level = {(): LaurentPoly.const(rank, 1)}
    for j, row in enumerate(rows):
        nxt: dict = {}
        for cols, minor in level.items():
            if minor.is_zero():
                continue
            for c in range(ncols):
                if c in cols or row[c].is_zero():
                    continue
                # position of c among cols ∪ {c}; expanding along the last row
                pos = sum(1 for x in cols if x < c)
                sign = -1 if (j + pos) % 2 else 1
                key = tuple(sorted(cols + (c,)))
                term = row[c] * minor
                if sign < 0:
                    term = -term
                nxt[key] = nxt[key] + term if key in nxt else term
        level = nxt
    return level


def minors(matrix: Sequence[Sequence[LaurentPoly]], k: int, rank: int):
    """Yield every k×k minor (by row subset then column subset)."""
    n = len(matrix)
    ncols = len(matrix[0]) if n else 0
    if k == 0:
        yield LaurentPoly.const(rank, 1)
        return
    if k > n or k > ncols:
        return
    for rows in itertools.combinations(range(n), k):
        for minor in _row_minors([matrix[i] for i in rows], ncols, rank).values():
            if not minor.is_zero():
                yield minor


def determinant(matrix: Sequence[Sequence[LaurentPoly]], rank: int) -> LaurentPoly:
    n = len(matrix)
    if n == 0:
        return LaurentPoly.const(rank, 1)
    got = _row_minors(matrix, n, rank)
    return got.get(tuple(range(n)), LaurentPoly.zero(rank))


def eliminate_units(matrix: Sequence[Sequence[LaurentPoly]], k: int, rank: int):
    """Pivot away unit entries.  Returns ``(matrix', k')`` with the ideal of
    k×k minors of ``matrix`` equal to the ideal of k'×k' minors of ``matrix'``.
    """
    mat = [list(row) for row in matrix]
    while k > 0 and mat:
        pivot = None
        for i, row in enumerate(mat):
            for j, e in enumerate(row):
                if e.is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        inv = mat[i][j] ** -1
        new = []
        for r, row in enumerate(mat):
            if r == i:
                continue
            f = row[j] * inv
            if f.is_zero():
                new.append([e for c, e in enumerate(row) if c != j])
            else:
                new.append([e - f * mat[i][c] for c, e in enumerate(row) if c != j])
        mat = new
        k -= 1
    return mat, k


def elementary_ideal_gcd(matrix: Sequence[Sequence[LaurentPoly]], ncols: int, rank: int) -> LaurentPoly:
    """Canonical GCD of the (ncols-1)×(ncols-1) minors (the first elementary ideal)."""
    k = ncols - 1
    if k < 0:
        return LaurentPoly.zero(rank)
    if len(matrix) < k:
        return LaurentPoly.zero(rank)
    mat, k = eliminate_units(matrix, k, rank)
    if k == 0:
        return LaurentPoly.const(rank, 1)
    return gcd_many(minors(mat, k, rank), rank)


def elementary_ideal_gcd_plain(matrix, ncols: int, rank: int) -> LaurentPoly:
    """Same ideal GCD without unit elimination: every minor is expanded."""
    k = ncols - 1
    if k < 0 or len(matrix) < k:
        return LaurentPoly.zero(rank)
    return gcd_many(minors(matrix, k, rank), rank)


# -- Alexander polynomials ----------------------------------------------------


def _require_b(ab: AbelianizationData) -> None:
    if ab.b == 0:
        raise ValueError("free abelianization is trivial (b1 = 0)")


def _check_psi(psi, ab: AbelianizationData) -> tuple[int, ...]:
    if len(psi) != ab.b:
        raise ValueError(f"ψ has length {len(psi)} but b1 = {ab.b}")
    if not is_primitive_covector(psi):
        raise ValueError(f"ψ = {tuple(psi)} is not primitive")
    return check_primitive(psi)


def multivariable_alexander(p: Presentation, ab: AbelianizationData | None = None) -> LaurentPoly:
    """Δ^# as the canonical GCD of the first elementary ideal of the Fox Jacobian."""
    ab = ab or homology(p)
    _require_b(ab)
    am = alexander_matrix(p, ab)
    return elementary_ideal_gcd(am.entries, len(p.gens), ab.b)


def psi_from_sharp(delta_sharp: LaurentPoly, psi: Sequence[int], b: int) -> LaurentPoly:
    """Δ^ψ = ψ_*(Δ^#)·(t-1)^2 for b >= 2, ψ_*(Δ^#) for b = 1, canonicalized."""
    spec = specialize(delta_sharp, psi)
    if b >= 2:
        t1 = LaurentPoly.from_coeffs([-1, 1])
        spec = spec * t1 * t1
    return canonicalize(spec)


def alexander_poly_psi(p: Presentation, psi: Sequence[int], ab: AbelianizationData | None = None,
                       delta_sharp: LaurentPoly | None = None) -> LaurentPoly:
    ab = ab or homology(p)
    _require_b(ab)
    psi = _check_psi(psi, ab)
    if delta_sharp is None:
        delta_sharp = multivariable_alexander(p, ab)
    return psi_from_sharp(delta_sharp, psi, ab.b)


def alexander_poly_psi_direct(p: Presentation, psi: Sequence[int], ab: AbelianizationData | None = None) -> LaurentPoly:
    """Δ^ψ from the ψ-specialized Fox Jacobian over Z[t, t^-1]."""
    ab = ab or homology(p)
    _require_b(ab)
    psi = _check_psi(psi, ab)
    am = alexander_matrix(p, ab)
    return elementary_ideal_gcd(am.specialize(psi), len(p.gens), 1)


def is_nonvanishing(p: Presentation, psi: Sequence[int], **kw) -> bool:
    return not alexander_poly_psi(p, psi, **kw).is_zero()


def betti_bound(p: Presentation, psi: Sequence[int], **kw) -> int:
    """floating degree of Δ^ψ plus one; the ceiling on b1 of cyclic covers dual to ψ."""
    d = alexander_poly_psi(p, psi, **kw)
    if d.is_zero():
        raise VanishingError(f"Δ^ψ vanishes for ψ = {tuple(psi)}; no Betti bound")
    return floating_degree(d) + 1


def primitive_box(b: int, radius: int) -> list[tuple[int, ...]]:
    """Primitive integer covectors in [-r, r]^b, one per ± pair (first nonzero entry positive)."""
    out = []
    for v in itertools.product(range(-radius, radius + 1), repeat=b):
        nz = [x for x in v if x]
        if not nz or nz[0] < 0:
            continue
        g = 0
        for x in nz:
            g = igcd(g, x)
        if g == 1:
            out.append(v)
    return out


def scan_vanishing_classes(p: Presentation, box_radius: int, ab: AbelianizationData | None = None,
                           delta_sharp: LaurentPoly | None = None) -> list[tuple[int, ...]]:
    if box_radius < 1:
        raise ValueError("box radius must be at least 1")
    ab = ab or homology(p)
    _require_b(ab)
    if delta_sharp is None:
        delta_sharp = multivariable_alexander(p, ab)
    return [
        psi for psi in primitive_box(ab.b, box_radius)
        if psi_from_sharp(delta_sharp, psi, ab.b).is_zero()
    ]


def primitive_multiple(v: Sequence) -> tuple[int, ...]:
    """The primitive integer vector on the ray through a nonzero rational vector."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // igcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = igcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


@dataclass
class SemicontinuityReport:
    psi: tuple[int, ...]
    bound: int
    samples: list = field(default_factory=list)  # (delta, phi, nonvanishing)
    radius: Fraction = Fraction(0)

    def to_json(self) -> dict:
        return {
            "psi": list(self.psi),
            "denominator_bound": self.bound,
            "radius": [self.radius.numerator, self.radius.denominator],
            "samples": [
                {"delta": [[x.numerator, x.denominator] for x in d], "phi": list(phi), "nonvanishing": nv}
                for d, phi, nv in self.samples
            ],
        }


def semicontinuity_witness(p: Presentation, psi: Sequence[int], denominator_bound: int,
                           ab: AbelianizationData | None = None,
                           delta_sharp: LaurentPoly | None = None) -> SemicontinuityReport:
    """Sample primitive classes near ψ and report which have nonvanishing Δ.

    Perturbations δ have entries k/q with q <= bound and |δ|_∞ <= 1/bound.  The
    reported radius is the largest sampled |δ|_∞ below which every sample
    (at that radius or smaller) is nonvanishing.
    """
    if denominator_bound < 1:
        raise ValueError("denominator bound must be at least 1")
    ab = ab or homology(p)
    _require_b(ab)
    psi = _check_psi(psi, ab)
    if delta_sharp is None:
        delta_sharp = multivariable_alexander(p, ab)
    if psi_from_sharp(delta_sharp, psi, ab.b).is_zero():
        raise VanishingError(f"Δ^ψ vanishes for ψ = {psi}")
    cap = Fraction(1, denominator_bound)
    steps = sorted({Fraction(k, q) for q in range(1, denominator_bound + 1)
                    for k in range(-q, q + 1) if abs(Fraction(k, q)) <= cap})
    report = SemicontinuityReport(psi, denominator_bound)
    by_radius: dict = {}
    for delta in itertools.product(steps, repeat=ab.b):
        point = [x + d for x, d in zip(psi, delta)]
        if not any(point):
            continue
        phi = primitive_multiple(point)
        nv = not psi_from_sharp(delta_sharp, phi, ab.b).is_zero()
        report.samples.append((delta, phi, nv))
        r = max(abs(d) for d in delta)
        by_radius[r] = by_radius.get(r, True) and nv
    radius = Fraction(0)
    for r in sorted(by_radius):
        if not by_radius[r]:
            break
        radius = r
    report.radius = radius
    return report


# -- fibered check ------------------------------------------------------------


def charpoly(matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    """det(t·I - A) as a rank-1 polynomial."""
    n = len(matrix)
    t = LaurentPoly.var(1, 0)
    rows = [
        [(t if i == j else LaurentPoly.zero(1)) - LaurentPoly.const(1, matrix[i][j]) for j in range(n)]
        for i in range(n)
    ]
    return determinant(rows, 1)


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    rows = [[LaurentPoly.const(1, x) for x in row] for row in matrix]
    d = determinant(rows, 1)
    return d.coeff((0,))


def fibered_degree_check(monodromy: Sequence[Sequence[int]], delta_phi: LaurentPoly) -> bool:
    """True iff Δ^φ agrees up to units with the characteristic polynomial of the monodromy."""
    if abs(integer_det(monodromy)) != 1:
        raise ValueError("monodromy matrix is not invertible over the integers")
    return doteq(delta_phi, charpoly(monodromy))


# -- reports ------------------------------------------------------------------


@dataclass
class ClassEntry:
    psi: tuple[int, ...]
    delta_psi: LaurentPoly
    nonvanishing: bool
    degree: int
    betti_bound: int | None

    def to_json(self) -> dict:
        return {
            "psi": list(self.psi),
            "delta_psi": self.delta_psi.to_json(),
            "nonvanishing": self.nonvanishing,
            "degree": self.degree,
            "betti_bound": self.betti_bound,
        }


@dataclass
class AlexanderReport:
    ab: AbelianizationData
    delta_sharp: LaurentPoly
    classes: list

    def to_json(self) -> dict:
        return {
            "b1": self.ab.b,
            "torsion": list(self.ab.torsion),
            "delta_sharp": self.delta_sharp.to_json(),
            "classes": [c.to_json() for c in self.classes],
        }


def alexander_report(p: Presentation, psis: Sequence[Sequence[int]] = ()) -> AlexanderReport:
    ab = homology(p)
    _require_b(ab)
    ds = multivariable_alexander(p, ab)
    classes = []
    for psi in psis:
        psi = _check_psi(psi, ab)
        d = psi_from_sharp(ds, psi, ab.b)
        nv = not d.is_zero()
        classes.append(ClassEntry(psi, d, nv, floating_degree(d), floating_degree(d) + 1 if nv else None))
    return AlexanderReport(ab, ds, classes)
