"""Exact rational polytopes: hulls, polars, faces, and norm balls.

Every coordinate is a :class:`fractions.Fraction`; no tolerance appears
anywhere.  Hulls are computed by facet enumeration inside the affine hull of
the input, which is plenty for the small dimensions (at most six) of
homology lattices met in practice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd, lcm
from typing import Iterable, Sequence

from .linprog import solve_lp

Vector = tuple[Fraction, ...]


class PolytopeError(ValueError):
    """Invalid polytope input or a query outside an operation's domain."""


class DegenerateNormError(PolytopeError):
    """The functionals do not span: the norm is only a seminorm."""


class MembershipError(PolytopeError):
    """A point is not where the operation needs it (boundary, face, ...)."""


def vec(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _sub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _scale(c, a) -> Vector:
    return tuple(c * x for x in a)


# -- exact linear algebra --------------------------------------------------


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    if not a:
        return a, pivots
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """A basis of ``{x : rows @ x = 0}``."""
    r, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(r, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def primitive_integer(v: Sequence[Fraction]) -> Vector:
    """Positive multiple of ``v`` with coprime integer entries."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = igcd(g, x)
    g = g or 1
    return tuple(Fraction(x // g) for x in ints)


@dataclass(frozen=True)
class AffineFrame:
    """Coordinates on the affine hull of a point set: ``x = origin + basis·y``."""

    origin: Vector
    basis: tuple[Vector, ...]  # direction vectors
    pivots: tuple[int, ...]  # ambient coordinates that determine y

    @property
    def dim(self) -> int:
        return len(self.basis)

    def local(self, x: Sequence) -> Vector:
        d = _sub(vec(x), self.origin)
        # solve basis·y = d on the pivot coordinates
        if not self.basis:
            return ()
        rows = [[b[p] for b in self.basis] + [d[p]] for p in self.pivots]
        r, _ = rref(rows)
        return tuple(row[-1] for row in r)

    def lift_functional(self, a: Sequence[Fraction]) -> Vector:
        """An ambient covector ``c`` with ``c·(x - origin) = a·local(x)`` on the hull."""
        n = len(self.origin)
        k = self.dim
        if not k:
            return (Fraction(0),) * n
        sub = [[self.basis[j][p] for j in range(k)] for p in self.pivots]  # k×k, sub·y = d[pivots]
        inv = _inverse(sub)
        c = [Fraction(0)] * n
        for i, p in enumerate(self.pivots):
            c[p] = sum((a[j] * inv[j][i] for j in range(k)), Fraction(0))
        return tuple(c)

    def equations(self) -> list[tuple[Vector, Fraction]]:
        """Affine equations ``c·x = beta`` cutting out the hull."""
        n = len(self.origin)
        out = []
        for c in nullspace([list(b) for b in self.basis], n) if self.basis else [
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
        ]:
            c = primitive_integer(c)
            out.append((c, dot(c, self.origin)))
        return out


def _inverse(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    k = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise PolytopeError("singular matrix")
    return [row[k:] for row in r]


def affine_frame(points: Sequence[Vector]) -> AffineFrame:
    origin = points[0]
    basis: list[Vector] = []
    for p in points[1:]:
        d = _sub(p, origin)
        if rank([list(b) for b in basis] + [list(d)]) > len(basis):
            basis.append(d)
    pivots: tuple[int, ...] = ()
    if basis:
        _, piv = rref([list(b) for b in basis])
        pivots = tuple(piv)
    return AffineFrame(origin, tuple(basis), pivots)


# -- polytopes ---------------------------------------------------------------


@dataclass(frozen=True)
class Facet:
    """Half-space ``normal·x <= rhs`` (rhs is 1 when the origin is interior)."""

    normal: Vector
    rhs: Fraction

    def value(self, x: Sequence) -> Fraction:
        return dot(self.normal, x)

    def to_json(self) -> dict:
        return {"u": [frac_json(x) for x in self.normal], "rhs": frac_json(self.rhs)}


def frac_json(x) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


@dataclass(frozen=True)
class RationalPolytope:
    """A polytope carrying both its vertices and its facet inequalities.

    ``equations`` cut out the affine hull when the polytope is not full
    dimensional; facets are then relative to that hull.
    """

    dim: int
    vertices: tuple[Vector, ...]
    facets: tuple[Facet, ...]
    equations: tuple[tuple[Vector, Fraction], ...] = ()
    affine_dim: int = 0
    incidence: tuple[frozenset, ...] = field(default=(), compare=False, repr=False)

    # -- basic predicates --------------------------------------------------

    @property
    def full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        return all(dot(c, x) == b for c, b in self.equations) and all(f.value(x) <= f.rhs for f in self.facets)

    def origin_interior(self) -> bool:
        return self.full_dimensional and all(f.rhs > 0 for f in self.facets)

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertex_set() == other.vertex_set()

    def __hash__(self) -> int:
        return hash((self.dim, self.vertex_set()))

    # -- gauge / norm --------------------------------------------------------

    def _require_origin_interior(self) -> None:
        if not self.origin_interior():
            raise PolytopeError("operation needs a full-dimensional polytope with 0 in its interior")

    def gauge(self, x: Sequence) -> Fraction:
        """Minkowski functional from the facets: max over facets of ``u·x`` (rhs 1)."""
        self._require_origin_interior()
        x = vec(x)
        return max(f.value(x) / f.rhs for f in self.facets)

    def gauge_lp(self, x: Sequence) -> Fraction:
        """The same functional from the vertices: min Σc_j with x = Σ c_j v_j, c >= 0."""
        self._require_origin_interior()
        x = vec(x)
        nv = len(self.vertices)
        a = [[v[i] for v in self.vertices] for i in range(self.dim)]
        res = solve_lp([1] * nv, a, list(x))
        if not res.ok:
            raise PolytopeError(f"gauge LP failed: {res.status}")
        return res.value

    def classify(self, x: Sequence) -> str:
        """One of ``interior``, ``boundary``, ``exterior`` (relative to the affine hull)."""
        x = vec(x)
        if not all(dot(c, x) == b for c, b in self.equations):
            return "exterior"
        vals = [f.value(x) - f.rhs for f in self.facets]
        if any(v > 0 for v in vals):
            return "exterior"
        if any(v == 0 for v in vals):
            return "boundary"
        return "interior"

    def tight(self, x: Sequence) -> frozenset:
        x = vec(x)
        return frozenset(i for i, f in enumerate(self.facets) if f.value(x) == f.rhs)

    # -- faces ---------------------------------------------------------------

    def face_from_active(self, active: Iterable[int]) -> "Face":
        active = frozenset(active)
        verts = frozenset(range(len(self.vertices)))
        for i in active:
            verts &= self.incidence[i]
        if not verts:
            raise MembershipError("empty face")
        # close up: every facet containing all of these vertices is active
        closed = frozenset(i for i, inc in enumerate(self.incidence) if verts <= inc)
        return Face(self, closed, verts, _points_dim([self.vertices[j] for j in verts]))

    def face_from_vertices(self, idx: Iterable[int]) -> "Face":
        idx = frozenset(idx)
        if not idx:
            raise MembershipError("empty face")
        active = frozenset(i for i, inc in enumerate(self.incidence) if idx <= inc)
        face = self.face_from_active(active)
        if face.vertex_ids != idx:
            raise MembershipError("vertex set does not span a face")
        return face

    def faces(self) -> list["Face"]:
        """All nonempty proper faces, by closing facet incidences under intersection."""
        seen = set()
        out = []
        frontier = [inc for inc in self.incidence]
        while frontier:
            nxt = []
            for s in frontier:
                if not s or s in seen:
                    continue
                seen.add(s)
                out.append(self.face_from_vertices(s))
                for inc in self.incidence:
                    t = s & inc
                    if t and t not in seen:
                        nxt.append(t)
            frontier = nxt
        out.sort(key=lambda f: (f.dim, sorted(f.vertex_ids)))
        return out

    def f_vector(self) -> list[int]:
        counts = [0] * max(self.affine_dim, 0)
        for f in self.faces():
            counts[f.dim] += 1
        return counts

    def vertex_index(self, v: Sequence) -> int:
        v = vec(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            raise MembershipError(f"{v} is not a vertex") from None

    def barycenter(self) -> Vector:
        n = len(self.vertices)
        return tuple(sum((v[i] for v in self.vertices), Fraction(0)) / n for i in range(self.dim))

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "vertices": [[frac_json(x) for x in v] for v in self.vertices],
            "facets": [f.to_json() for f in self.facets],
        }
        if self.equations:
            out["equations"] = [{"u": [frac_json(x) for x in c], "rhs": frac_json(b)} for c, b in self.equations]
        return out


def _points_dim(points: Sequence[Vector]) -> int:
    if not points:
        return -1
    return rank([list(_sub(p, points[0])) for p in points[1:]]) if len(points) > 1 else 0


@dataclass(frozen=True)
class Face:
    parent: RationalPolytope = field(repr=False, compare=False)
    active: frozenset
    vertex_ids: frozenset
    dim: int

    @property
    def vertices(self) -> list[Vector]:
        return [self.parent.vertices[i] for i in sorted(self.vertex_ids)]

    def barycenter(self) -> Vector:
        vs = self.vertices
        return tuple(sum((v[i] for v in vs), Fraction(0)) / len(vs) for i in range(self.parent.dim))

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        return self.parent.contains(x) and all(self.parent.facets[i].value(x) == self.parent.facets[i].rhs
                                               for i in self.active)

    def in_relative_interior(self, x: Sequence) -> bool:
        """Exact test: ``x`` lies on the face and on no smaller face."""
        x = vec(x)
        return self.contains(x) and self.parent.tight(x) == self.active

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [[frac_json(c) for c in v] for v in self.vertices],
            "active_facets": sorted(self.active),
        }


def convex_hull(points: Iterable[Sequence]) -> RationalPolytope:
    """Exact convex hull with irredundant vertices and facets."""
    pts = []
    seen = set()
    for p in points:
        v = vec(p)
        if v not in seen:
            seen.add(v)
            pts.append(v)
    if not pts:
        raise PolytopeError("convex hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise PolytopeError("points of different dimensions")
    frame = affine_frame(pts)
    k = frame.dim
    eqs = tuple(frame.equations())
    if k == 0:
        return RationalPolytope(n, (pts[0],), (), eqs, 0, ())
    loc = [frame.local(p) for p in pts]

    # facets in local coordinates
    if k == 1:
        lo, hi = min(loc), max(loc)
        local_facets = [((Fraction(1),), hi[0]), ((Fraction(-1),), -lo[0])]
    else:
        local_facets = _beneath_beyond(loc, k)

    # vertices: points whose tight facets pin them down
    verts = []
    for p, q in zip(pts, loc):
        tight = [list(a) for a, b in local_facets if dot(a, q) == b]
        if rank(tight) == k:
            verts.append(p)
    verts.sort()

    facets = []
    origin_loc = (Fraction(0),) * k  # local coordinates of frame.origin
    for a, beta in local_facets:
        c = frame.lift_functional(a)
        rhs = beta - dot(a, origin_loc) + dot(c, frame.origin)
        facets.append(_normalize_facet(c, rhs))
    facets.sort(key=lambda f: (f.normal, f.rhs))
    incidence = tuple(frozenset(j for j, v in enumerate(verts) if f.value(v) == f.rhs) for f in facets)
    return RationalPolytope(n, tuple(verts), tuple(facets), eqs, k, incidence)


def _hyperplane(pts: Sequence[Vector], k: int, inside: Vector) -> tuple[Vector, Fraction]:
    """Primitive normal and offset of the hyperplane through ``k`` points, oriented away from ``inside``."""
    base = pts[0]
    ns = nullspace([list(_sub(q, base)) for q in pts[1:]], k)
    a = primitive_integer(ns[0])
    beta = dot(a, base)
    if dot(a, inside) > beta:
        a, beta = tuple(-x for x in a), -beta
    return a, beta


def _beneath_beyond(loc: Sequence[Vector], k: int) -> list[tuple[Vector, Fraction]]:
    """Facets of a full-dimensional point set, by incremental insertion.

    The boundary is kept as simplices; a new point replaces the simplices it
    strictly sees by cones from their horizon.  Coplanar simplices are merged
    at the end, giving the true facets.
    """
    simplex = [0]
    for i in range(1, len(loc)):
        trial = simplex + [i]
        if rank([list(_sub(loc[j], loc[trial[0]])) for j in trial[1:]]) == len(trial) - 1:
            simplex = trial
            if len(simplex) == k + 1:
                break
    inside = tuple(sum((loc[j][c] for j in simplex), Fraction(0)) / (k + 1) for c in range(k))
    facets: dict[frozenset, tuple[Vector, Fraction]] = {}
    for drop in simplex:
        ids = frozenset(j for j in simplex if j != drop)
        facets[ids] = _hyperplane([loc[j] for j in sorted(ids)], k, inside)
    used = set(simplex)
    for i, p in enumerate(loc):
        if i in used:
            continue
        visible = [f for f, (a, b) in facets.items() if dot(a, p) > b]
        if not visible:
            continue
        ridges: dict[frozenset, int] = {}
        for f in visible:
            for j in f:
                r = f - {j}
                ridges[r] = ridges.get(r, 0) + 1
        for f in visible:
            del facets[f]
        for r, count in ridges.items():
            if count == 1:
                ids = r | {i}
                facets[ids] = _hyperplane([loc[j] for j in sorted(ids)], k, inside)
    return sorted(set(facets.values()))


def _normalize_facet(c: Vector, rhs: Fraction) -> Facet:
    if rhs > 0:
        return Facet(tuple(x / rhs for x in c), Fraction(1))
    if rhs < 0:
        return Facet(tuple(x / -rhs for x in c), Fraction(-1))
    return Facet(primitive_integer(c), Fraction(0))


def polar(p: RationalPolytope) -> RationalPolytope:
    """``{y : x·y <= 1 for all x in p}``, built as the hull of the facet normals."""
    if not p.origin_interior():
        raise PolytopeError("polar needs a full-dimensional polytope with 0 in its interior")
    return convex_hull(f.normal for f in p.facets)


def minkowski_difference_hull(p: RationalPolytope) -> RationalPolytope:
    """``P - P = {x - y}``, the centrally symmetric body whose support function is the width."""
    return convex_hull(_sub(a, b) for a in p.vertices for b in p.vertices)


def symmetric_hull(points: Iterable[Sequence]) -> RationalPolytope:
    pts = [vec(p) for p in points]
    return convex_hull(pts + [tuple(-x for x in p) for p in pts])


# -- faces and cones ---------------------------------------------------------


def face_of(w: Sequence, p: RationalPolytope) -> Face:
    """The face whose relative interior contains the boundary point ``w``."""
    w = vec(w)
    where = p.classify(w)
    if where != "boundary":
        raise MembershipError(f"point is {where}, not on the boundary")
    return p.face_from_active(p.tight(w))


def dual_face(face: Face, target: RationalPolytope) -> Face:
    """``F^∨ = {x in target : u·x = 1 for all u in F}`` for ``target`` the polar of F's parent."""
    if not face.vertex_ids:
        raise MembershipError("empty face")
    us = face.vertices
    idx = [j for j, x in enumerate(target.vertices) if all(dot(u, x) == 1 for u in us)]
    if not idx:
        raise MembershipError("face is not contained in a supporting hyperplane of the polar")
    # the hyperplanes u·x = 1 are facets of target; use them as the active set
    active = frozenset(i for i, f in enumerate(target.facets) if f.rhs == 1 and f.normal in set(us))
    if active:
        return target.face_from_active(active)
    return target.face_from_vertices(idx)


def in_cone_over_interior(x: Sequence, face: Face) -> bool:
    """Whether ``x = λ·y`` with λ > 0 and ``y`` in the relative interior of ``face``."""
    x = vec(x)
    parent = face.parent
    if not face.active:
        # the face is the whole polytope; its cone over the interior is everything
        return parent.origin_interior() or parent.classify(x) == "interior"
    if not any(x):
        return False
    scale = max(parent.facets[i].value(x) for i in face.active)
    if scale <= 0:
        return False
    y = _scale(1 / scale, x)
    return face.in_relative_interior(y)


# -- norm balls ---------------------------------------------------------------


def _check_functionals(us: Sequence[Sequence], require_even: bool) -> list[Vector]:
    if not us:
        raise DegenerateNormError("no functionals given")
    out = [vec(u) for u in us]
    n = len(out[0])
    if any(len(u) != n for u in out):
        raise PolytopeError("functionals of different lengths")
    if require_even:
        for u in out:
            if any(x.denominator != 1 or x.numerator % 2 for x in u):
                raise PolytopeError(f"functional {u} is not an even lattice point")
    if rank([list(u) for u in out]) < n:
        raise DegenerateNormError("functionals do not span: the norm is degenerate (a seminorm)")
    return out


@dataclass(frozen=True)
class NormBallPair:
    """A norm ball ``B = {x : |u_i·x| <= 1}`` and its dual ``B* = conv{±u_i}``."""

    functionals: tuple[Vector, ...]
    ball: RationalPolytope
    dual_ball: RationalPolytope

    @property
    def dim(self) -> int:
        return self.ball.dim

    def norm(self, x: Sequence) -> Fraction:
        x = vec(x)
        return max(abs(dot(u, x)) for u in self.functionals)

    def dual_norm(self, w: Sequence) -> Fraction:
        return self.dual_ball.gauge(w)

    def to_json(self) -> dict:
        return {
            "functionals": [[frac_json(x) for x in u] for u in self.functionals],
            "ball": self.ball.to_json(),
            "dual_ball": self.dual_ball.to_json(),
        }


def ball_from_functionals(us: Sequence[Sequence], require_even: bool = True) -> NormBallPair:
    funcs = _check_functionals(us, require_even)
    dual = symmetric_hull(funcs)
    return NormBallPair(tuple(funcs), polar(dual), dual)


@dataclass(frozen=True)
class AlexanderNormBall:
    """The Alexander seminorm α ↦ deg_α(Δ) as the support function of P − P."""

    newton: RationalPolytope
    difference: RationalPolytope
    degenerate: bool
    ball: RationalPolytope | None  # unit ball, present when the norm is nondegenerate

    def norm(self, alpha: Sequence) -> Fraction:
        a = vec(alpha)
        return max(dot(a, v) for v in self.difference.vertices)

    def to_json(self) -> dict:
        return {
            "newton": self.newton.to_json(),
            "difference": self.difference.to_json(),
            "degenerate": self.degenerate,
            "ball": None if self.ball is None else self.ball.to_json(),
        }


def alexander_norm_ball(delta) -> AlexanderNormBall:
    from .laurent import newton_polytope

    if delta.is_zero():
        raise PolytopeError("the zero polynomial has no Alexander norm ball")
    newton = newton_polytope(delta)
    diff = minkowski_difference_hull(newton)
    if diff.full_dimensional:
        return AlexanderNormBall(newton, diff, False, polar(diff))
    return AlexanderNormBall(newton, diff, True, None)


# -- Thurston lower bound ----------------------------------------------------


@dataclass
class BoundSample:
    alpha: Vector
    degree: Fraction
    thurston: Fraction
    bound: Fraction

    @property
    def ok(self) -> bool:
        return self.degree <= self.bound

    @property
    def equality(self) -> bool:
        return self.degree == self.bound

    def to_json(self) -> dict:
        return {
            "alpha": [frac_json(x) for x in self.alpha],
            "degree": frac_json(self.degree),
            "thurston": frac_json(self.thurston),
            "bound": frac_json(self.bound),
            "ok": self.ok,
        }


@dataclass
class BoundReport:
    correction: int
    samples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.samples)

    @property
    def equality_attained(self) -> bool:
        return any(s.equality and s.degree > 0 for s in self.samples)

    def failures(self) -> list:
        return [s for s in self.samples if not s.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "correction": self.correction,
            "equality_attained": self.equality_attained,
            "samples": [s.to_json() for s in self.samples],
        }


def rational_grid(b: int, count: int, seed: int = 0, height: int = 4) -> list[Vector]:
    """Deterministic pseudo-random rational covectors (numerators and denominators up to ``height``)."""
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = tuple(Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(b))
        if any(v):
            out.append(v)
    return out


def right_inverse(proj: Sequence[Sequence]) -> list[list[Fraction]]:
    """A rational ``R`` with ``proj @ R = I`` (proj has full row rank)."""
    p = [[Fraction(x) for x in r] for r in proj]
    k = len(p)
    gram = [[dot(p[i], p[j]) for j in range(k)] for i in range(k)]
    inv = _inverse(gram)
    b = len(p[0])
    return [[sum((p[j][r] * inv[j][c] for j in range(k)), Fraction(0)) for c in range(k)] for r in range(b)]


def thurston_lower_bound_check(delta_sharp, ball: NormBallPair, b: int,
                               projection: Sequence[Sequence] | None = None,
                               samples: int = 100, seed: int = 0) -> BoundReport:
    """Check ``deg_α(Δ^#) <= ||α||_Th + (0 if b >= 2 else 2)`` at many α.

    α is in cohomology coordinates of rank ``b``; ``projection`` (a k×b
    integer matrix) maps it to the coordinates of ``ball`` when the norm is
    only known on a quotient.  Tested α: lifts of the vertices of both balls
    and a deterministic rational sample.
    """
    from .laurent import deg_alpha

    if projection is None:
        projection = [[int(i == j) for j in range(b)] for i in range(b)]
    proj = [vec(r) for r in projection]
    if len(proj) != ball.dim or any(len(r) != b for r in proj):
        raise PolytopeError("projection shape does not match the ball and the rank")
    lift = right_inverse(proj)
    correction = 0 if b >= 2 else 2
    report = BoundReport(correction)

    def add(alpha):
        y = tuple(dot(r, alpha) for r in proj)
        th = ball.norm(y)
        deg = deg_alpha(delta_sharp, alpha)
        report.samples.append(BoundSample(alpha, deg, th, th + correction))

    for v in list(ball.dual_ball.vertices) + list(ball.ball.vertices):
        add(tuple(sum((lift[r][c] * v[c] for c in range(len(v))), Fraction(0)) for r in range(b)))
    for alpha in rational_grid(b, samples, seed):
        add(alpha)
    return report
