"""Integer Laurent polynomials over a free abelian group of rank ``b``.

Elements of Z[H] with H = Z^b, and Z[t, t^-1] as the rank-1 case.  Values
are immutable; every binary operation requires equal ranks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Mapping, Sequence

from . import _dmp


class RankMismatch(ValueError):
    """Raised when polynomials (or covectors) of different rank are combined."""


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def _check_rank(p: "LaurentPoly", q: "LaurentPoly") -> None:
    if p.rank != q.rank:
        raise RankMismatch(f"rank {p.rank} != rank {q.rank}")


def grlex_key(exps: Sequence[int]) -> tuple:
    """Sort key for graded-lexicographic order (larger key = larger term)."""
    return (sum(exps), tuple(exps))


class LaurentPoly:
    """A finitely supported map from Z^rank to nonzero integers."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], int] | None = None):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank:
                raise RankMismatch(f"exponent {exps} does not have length {rank}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
                if not clean[exps]:
                    del clean[exps]
        self.rank = rank
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank)

    @classmethod
    def const(cls, rank: int, c: int) -> "LaurentPoly":
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, rank: int, i: int) -> "LaurentPoly":
        e = [0] * rank
        e[i] = 1
        return cls(rank, {tuple(e): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        """Rank-1 polynomial ``sum coeffs[i] t^(low + i)``."""
        return cls(1, {(low + i,): c for i, c in enumerate(coeffs) if c})

    # -- basic accessors ----------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[tuple]:
        return sorted(self._terms, key=grlex_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.rank, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def coeff(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def content(self) -> int:
        """Positive GCD of the coefficients (0 for the zero polynomial)."""
        c = 0
        for v in self._terms.values():
            c = igcd(c, v)
        return c

    def leading_term(self) -> tuple[tuple, int]:
        exps = max(self._terms, key=grlex_key)
        return exps, self._terms[exps]

    def min_exponents(self) -> tuple:
        return tuple(min(e[i] for e in self._terms) for i in range(self.rank))

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.const(self.rank, other)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        _check_rank(self, other)
        return other

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (e, c), = self._terms.items()
            return LaurentPoly(self.rank, {tuple(n * x for x in e): c ** (-n)})
        result = LaurentPoly.const(self.rank, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly(
            self.rank, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: c * v for e, v in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in the Laurent ring; raises :class:`NotDivisible`."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        ms, mo = self.min_exponents(), other.min_exponents()
        f = _dmp.from_terms(self.shift([-x for x in ms])._terms, self.rank)
        g = _dmp.from_terms(other.shift([-x for x in mo])._terms, self.rank)
        try:
            q = _dmp.divexact(f, g, self.rank)
        except _dmp.NotDivisible as exc:
            raise NotDivisible(f"{self} is not divisible by {other}") from exc
        return LaurentPoly(self.rank, _dmp.to_terms(q, self.rank)).shift(
            [a - b for a, b in zip(ms, mo)]
        )

    def divides(self, other: "LaurentPoly") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        if self.is_zero():
            return other.is_zero()
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        """Evaluate at a point with nonzero rational coordinates."""
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    # -- rendering ----------------------------------------------------------

    def var_names(self) -> list[str]:
        return ["t"] if self.rank == 1 else [f"x{i + 1}" for i in range(self.rank)]

    def render(self, names: Sequence[str] | None = None) -> str:
        return render(self, names)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.rank}, '{self.render()}')"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "rendered": self.render(),
            "terms": [[list(e), c] for e, c in sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls(data["rank"], {tuple(e): c for e, c in data["terms"]})


def _monomial_str(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, exps):
        if k == 0:
            continue
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


def render(p: LaurentPoly, names: Sequence[str] | None = None) -> str:
    """Render terms in decreasing graded-lex order, e.g. ``t^2 - 2*t + 1``."""
    names = list(names) if names is not None else p.var_names()
    if p.is_zero():
        return "0"
    out = []
    for i, e in enumerate(sorted(p._terms, key=grlex_key, reverse=True)):
        c = p._terms[e]
        mono = _monomial_str(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def parse_poly(text: str, rank: int, names: Sequence[str] | None = None) -> LaurentPoly:
    """Parse the rendering produced by :func:`render` (sums of ``c*x^k`` terms)."""
    names = list(names) if names is not None else (["t"] if rank == 1 else [f"x{i + 1}" for i in range(rank)])
    index = {n: i for i, n in enumerate(names)}
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentPoly.zero(rank)
    tokens = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^":
            tokens.append(cur)
            cur = ch
        else:
            cur += ch
    tokens.append(cur)
    out: dict = {}
    for tok in tokens:
        if not tok:
            continue
        sign = -1 if tok[0] == "-" else 1
        tok = tok.lstrip("+-")
        coeff = 1
        exps = [0] * rank
        for factor in tok.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            base, _, power = factor.partition("^")
            if base not in index:
                raise ValueError(f"unknown variable {base!r} in {text!r}")
            exps[index[base]] += int(power) if power else 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + sign * coeff
    return LaurentPoly(rank, out)


# -- canonical forms and unit equivalence ----------------------------------


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """Unique representative of the orbit of ``p`` under multiplication by ± monomials.

    The support is shifted so its componentwise minimum is the zero vector and
    the sign is fixed so the graded-lex leading coefficient is positive.
    """
    if p.is_zero():
        return p
    q = p.shift([-m for m in p.min_exponents()])
    if q.leading_term()[1] < 0:
        q = -q
    return q


def is_canonical(p: LaurentPoly) -> bool:
    return canonicalize(p) == p


def doteq(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Equality up to a unit ± monomial."""
    _check_rank(p, q)
    return canonicalize(p) == canonicalize(q)


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Canonical GCD in Z[H], integer content included."""
    _check_rank(p, q)
    if p.is_zero():
        return canonicalize(q)
    if q.is_zero():
        return canonicalize(p)
    if p.is_unit() or q.is_unit():
        return LaurentPoly.const(p.rank, 1)
    k = p.rank
    f = _dmp.from_terms(canonicalize(p)._terms, k)
    g = _dmp.from_terms(canonicalize(q)._terms, k)
    h = _dmp.gcd(f, g, k)
    return canonicalize(LaurentPoly(k, _dmp.to_terms(h, k)))


def gcd_many(polys: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    """GCD of a family, stopping early once it reaches 1."""
    acc = LaurentPoly.zero(rank)
    one = LaurentPoly.const(rank, 1)
    for p in polys:
        acc = gcd(acc, p)
        if acc == one:
            break
    return acc


def primitive_part(p: LaurentPoly) -> LaurentPoly:
    c = p.content()
    if c <= 1:
        return p
    return LaurentPoly(p.rank, {e: v // c for e, v in p.items()})


# -- specialization and degrees --------------------------------------------


def _as_int_covector(psi: Sequence) -> tuple[int, ...]:
    out = []
    for x in psi:
        fx = Fraction(x)
        if fx.denominator != 1:
            raise ValueError(f"covector entry {x} is not an integer")
        out.append(int(fx))
    return tuple(out)


def specialize(p: LaurentPoly, psi: Sequence) -> LaurentPoly:
    """Push ``p`` forward along the integer covector ``psi``: h -> t^psi(h)."""
    psi = _as_int_covector(psi)
    if len(psi) != p.rank:
        raise RankMismatch(f"covector of length {len(psi)} on rank {p.rank}")
    out: dict = {}
    for e, c in p.items():
        k = sum(a * b for a, b in zip(psi, e))
        out[(k,)] = out.get((k,), 0) + c
    return LaurentPoly(1, out)


def deg_alpha(p: LaurentPoly, alpha: Sequence) -> Fraction:
    """Width of the support of ``p`` under the rational covector ``alpha``."""
    if len(alpha) != p.rank:
        raise RankMismatch(f"covector of length {len(alpha)} on rank {p.rank}")
    if p.is_zero():
        return Fraction(0)
    alpha = [Fraction(a) for a in alpha]
    values = [sum(a * x for a, x in zip(alpha, e)) for e in p._terms]
    return max(values) - min(values)


def floating_degree(p: LaurentPoly) -> int:
    """Top exponent minus bottom exponent of a rank-1 polynomial; 0 for zero."""
    if p.rank != 1:
        raise RankMismatch(f"floating degree needs rank 1, got rank {p.rank}")
    if p.is_zero():
        return 0
    exps = [e[0] for e in p._terms]
    return max(exps) - min(exps)


def newton_polytope(p: LaurentPoly):
    """Convex hull of the exponent vectors in the support."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    from .polytopes import convex_hull

    return convex_hull([list(e) for e in p.support()])


def is_primitive_covector(psi: Sequence) -> bool:
    try:
        ints = _as_int_covector(psi)
    except ValueError:
        return False
    g = 0
    for x in ints:
        g = igcd(g, x)
    return g == 1
