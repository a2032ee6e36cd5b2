"""Presentations for the example families and the Dehn-surgery formulas.

Circle bundles N(e) over the torus, mapping tori N(g, s) of products of
disjoint Dehn twists, torus bundles, and p/q fillings of knot complements
sitting inside a ball (free products with a knot group).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

from .alexander import alexander_poly_psi
from .laurent import LaurentPoly, NotDivisible, canonicalize
from .presentations import Letter, Presentation, homology, parse_word, reduce_word


def circle_bundle_presentation(e: int) -> Presentation:
    """π1 of the circle bundle over the torus with Euler number ``e``."""
    rels = ["a z a^-1 z^-1", "b z b^-1 z^-1"]
    last = "a b a^-1 b^-1" + (f" z^{-e}" if e else "")
    return Presentation.build(["a", "b", "z"], rels + [last])


def surface_gens(g: int) -> list[str]:
    out = []
    for i in range(1, g + 1):
        out += [f"a{i}", f"b{i}"]
    return out


def mapping_torus_presentation(g: int, s: int) -> Presentation:
    """Mapping torus of the product of Dehn twists along a_1, ..., a_s on the genus-g surface.

    The twist along a_i acts by b_i -> b_i a_i and fixes every other generator;
    the suspension generator is ``tau``.
    """
    if g < 2 or not 0 <= s <= g:
        raise ValueError(f"need g >= 2 and 0 <= s <= g, got g={g}, s={s}")
    gens = surface_gens(g) + ["tau"]
    surface = " ".join(f"a{i} b{i} a{i}^-1 b{i}^-1" for i in range(1, g + 1))
    rels = [surface]
    for i in range(1, g + 1):
        rels.append(f"tau a{i} tau^-1 a{i}^-1")
        if i <= s:
            rels.append(f"tau b{i} tau^-1 a{i}^-1 b{i}^-1")
        else:
            rels.append(f"tau b{i} tau^-1 b{i}^-1")
    return Presentation.build(gens, rels)


def mapping_torus_monodromy(g: int, s: int) -> list[list[int]]:
    """Action on H1(S) in the basis a1, b1, ..., ag, bg (columns are images)."""
    n = 2 * g
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(s):
        m[2 * i][2 * i + 1] = 1  # b_i -> b_i + a_i
    return m


def torus_bundle_presentation(matrix: Sequence[Sequence[int]]) -> Presentation:
    """Mapping torus of the torus for a 2×2 integer matrix of determinant ±1."""
    (p, q), (r, s) = matrix
    if abs(p * s - q * r) != 1:
        raise ValueError("monodromy must have determinant ±1")

    def img(x, y):
        parts = []
        if x:
            parts.append(f"a^{x}")
        if y:
            parts.append(f"b^{y}")
        return " ".join(parts)

    fa, fb = img(p, r), img(q, s)

    def inv(word):
        toks = word.split()[::-1]
        out = []
        for t in toks:
            name, _, k = t.partition("^")
            out.append(f"{name}^{-int(k)}")
        return " ".join(out)

    rels = ["a b a^-1 b^-1", f"tau a tau^-1 {inv(fa)}".strip(), f"tau b tau^-1 {inv(fb)}".strip()]
    return Presentation.build(["a", "b", "tau"], rels)


def torus_knot_23() -> tuple[Presentation, str, str]:
    """Trefoil complement with meridian and a precomputed longitude word."""
    p = Presentation.build(["x", "y"], ["x y x y^-1 x^-1 y^-1"])
    return p, "x", "x y x y x y x^-6"


def unknot_complement() -> tuple[Presentation, str, str]:
    return Presentation.build(["x"], []), "x", ""


# -- surgery -------------------------------------------------------------------


@dataclass(frozen=True)
class SurgerySpec:
    complement: Presentation
    meridian: tuple[Letter, ...]
    longitude: tuple[Letter, ...]
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("p must be nonnegative")
        if self.q == 0 and self.p != 1:
            raise ValueError("q = 0 is only allowed for the meridian filling 1/0")
        if igcd(self.p, self.q) != 1:
            raise ValueError(f"p/q = {self.p}/{self.q} is not in lowest terms")

    @classmethod
    def from_words(cls, complement: Presentation, meridian: str, longitude: str, p: int, q: int):
        idx = {g: i for i, g in enumerate(complement.gens)}
        return cls(complement, parse_word(meridian, idx), parse_word(longitude, idx), p, q)


def _power(w: Sequence[Letter], k: int) -> tuple[Letter, ...]:
    if k >= 0:
        return reduce_word(tuple(w) * k)
    inv = tuple((g, -e) for g, e in reversed(w))
    return reduce_word(inv * (-k))


def filling_word(spec: SurgerySpec) -> tuple[Letter, ...]:
    """μ^p λ^q, the slope that bounds a disk in the filling solid torus."""
    return reduce_word(_power(spec.meridian, spec.p) + _power(spec.longitude, spec.q))


def surgered_presentation(spec: SurgerySpec) -> Presentation:
    return spec.complement.with_relators([filling_word(spec)])


def knot_in_ball(base: Presentation, knot: Presentation, meridian: str, longitude: str) -> tuple[Presentation, str, str]:
    """Complement of a knot inside a ball of ``base``: the free product with the knot group.

    Generator names of the knot group are renamed on collision; the meridian
    and longitude words are translated accordingly.
    """
    joint = base.free_product(knot)
    off = len(base.gens)
    rename = {old: joint.gens[off + i] for i, old in enumerate(knot.gens)}

    def tr(word: str) -> str:
        out = []
        for tok in word.split():
            name, sep, k = tok.partition("^")
            out.append(rename[name] + (sep + k if sep else ""))
        return " ".join(out)

    return joint, tr(meridian), tr(longitude)


@dataclass
class SurgeryCheck:
    p: int
    q: int
    delta_filled: LaurentPoly
    expected: LaurentPoly
    content_ratio: Fraction | None
    status: str  # "ok", "failed", "inconclusive"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "delta_filled": self.delta_filled.to_json(),
            "expected": self.expected.to_json(),
            "content_ratio": None if self.content_ratio is None
            else [self.content_ratio.numerator, self.content_ratio.denominator],
            "status": self.status,
        }


@dataclass
class SurgeryReport:
    psi: tuple[int, ...]
    base_delta: LaurentPoly
    trnh: bool
    checks: list = field(default_factory=list)

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if "failed" in states:
            return "failed"
        if "inconclusive" in states:
            return "inconclusive"
        return "ok"

    def to_json(self) -> dict:
        return {
            "psi": list(self.psi),
            "base_delta": self.base_delta.to_json(),
            "trnh": self.trnh,
            "status": self.status,
            "checks": [c.to_json() for c in self.checks],
        }


def _restrict_psi(psi, base: Presentation, filled: Presentation) -> tuple[int, ...]:
    """Carry ψ from the base's H^1 to the filled presentation's H^1.

    Both free maps are in Hermite form and the filled group's free part is the
    base's, so the coordinates must agree on the base generators.
    """
    hb, hf = homology(base), homology(filled)
    if hb.b != hf.b or hf.free_map[: len(base.gens)] != hb.free_map:
        raise ValueError("filled presentation does not have the base's free abelianization")
    return tuple(psi)


def verify_surgery_scaling(base: Presentation, complement: Presentation, meridian: str, longitude: str,
                           fills: Sequence[tuple[int, int]], psi: Sequence[int], trnh: bool = True) -> SurgeryReport:
    """Check Δ^ψ(filled) ≐ p·Δ^ψ(base) for each p/q in ``fills``.

    ``complement`` is the knot complement presentation whose first generators
    are those of ``base``.  Without the totally rationally null-homologous
    flag a mismatch is reported as inconclusive rather than failed.
    """
    base_delta = alexander_poly_psi(base, psi)
    report = SurgeryReport(tuple(psi), base_delta, trnh)
    for p, q in fills:
        if p == 0:
            raise ValueError("p/q = 0 is handled by zero_surgery_formula")
        spec = SurgerySpec.from_words(complement, meridian, longitude, p, q)
        filled = surgered_presentation(spec)
        try:
            fpsi = _restrict_psi(psi, base, filled)
            got = alexander_poly_psi(filled, fpsi)
        except ValueError:
            got = None
        expected = canonicalize(base_delta.scale(p))
        if got is None:
            report.checks.append(SurgeryCheck(p, q, LaurentPoly.zero(1), expected, None,
                                              "failed" if trnh else "inconclusive"))
            continue
        ratio = None
        if not base_delta.is_zero() and not got.is_zero():
            ratio = Fraction(got.content(), base_delta.content())
        ok = got == expected and (base_delta.is_zero() or ratio == p)
        status = "ok" if ok else ("failed" if trnh else "inconclusive")
        report.checks.append(SurgeryCheck(p, q, got, expected, ratio, status))
    return report


@dataclass
class ZeroSurgeryResult:
    delta: LaurentPoly
    unbounded_betti: bool = False

    def to_json(self) -> dict:
        return {"delta": self.delta.to_json(), "unbounded_betti": self.unbounded_betti}


class FormulaViolation(ArithmeticError):
    """The zero-surgery division is not exact for the given inputs."""


def zero_surgery_formula(delta_complement: LaurentPoly, psi_mu: int, b1_complement: int) -> ZeroSurgeryResult:
    """Δ^ψ of the 0-surgery from the complement's Δ^ψ and ψ(meridian).

    Δ_{M0} = Δ_{M∖K}·(t^{ψμ} - 1)/(t - 1) when b1 >= 2, divided by (t - 1)^2
    when b1 = 1.  ψ(μ) = 0 gives the vanishing polynomial (unbounded Betti
    numbers of the cyclic covers).
    """
    if delta_complement.rank != 1:
        raise ValueError("complement polynomial must be rank 1")
    if b1_complement < 1:
        raise ValueError("complement must have b1 >= 1")
    if psi_mu == 0:
        return ZeroSurgeryResult(LaurentPoly.zero(1), unbounded_betti=True)
    k = abs(psi_mu)
    num = delta_complement * (LaurentPoly.monomial((k,)) - 1)
    t1 = LaurentPoly.from_coeffs([-1, 1])
    den = t1 if b1_complement >= 2 else t1 * t1
    try:
        q = num.divexact(den)
    except NotDivisible as exc:
        raise FormulaViolation(f"({num}) is not divisible by ({den})") from exc
    return ZeroSurgeryResult(canonicalize(q))


# -- fixture manifolds ---------------------------------------------------------


def mapping_torus_fixture(g: int, s: int):
    """N(g, s) with its dual Thurston ball: the interval ±(2g-2)Γ on the τ axis."""
    from .fixtures import FixtureManifold

    p = mapping_torus_presentation(g, s)
    b = homology(p).b
    proj = [[0] * (b - 1) + [1]]
    return FixtureManifold(p, functionals=[[2 * g - 2]], projection=proj)


def surgery_fixture():
    """The 3-torus with a trefoil tied in a ball: complement, meridian, longitude."""
    from .fixtures import FixtureManifold

    knot, mu, lam = torus_knot_23()
    joint, m, l = knot_in_ball(circle_bundle_presentation(0), knot, mu, lam)
    return FixtureManifold(joint, meridian=m, longitude=l, flags={"trnh"})


def square_fixture(e: int = 1):
    """N(e) with a synthetic square dual ball conv{±(2,2), ±(2,-2)}."""
    from .fixtures import FixtureManifold

    return FixtureManifold(circle_bundle_presentation(e), functionals=[[2, 2], [2, -2]])
