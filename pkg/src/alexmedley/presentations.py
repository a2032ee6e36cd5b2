"""Finite group presentations: parsing, abelianization, cyclic covers.

File format (``#`` starts a comment)::

    gens a b
    rel a b a^-1 b^-1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd as igcd
from typing import Sequence

from .snf import column_hermite_form, smith_normal_form

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^([+-]?\d+))?\Z")


class PresentationError(ValueError):
    """Malformed presentation input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


Letter = tuple[int, int]


def reduce_word(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Merge adjacent powers of the same generator and drop zero exponents."""
    out: list[Letter] = []
    for g, k in letters:
        if k == 0:
            continue
        if out and out[-1][0] == g:
            k += out[-1][1]
            out.pop()
            if k:
                out.append((g, k))
        else:
            out.append((g, k))
    return tuple(out)


def invert_word(w: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple((g, -k) for g, k in reversed(w))


def cyclic_reduce(w: Sequence[Letter]) -> tuple[Letter, ...]:
    w = list(reduce_word(w))
    while len(w) >= 2 and w[0][0] == w[-1][0]:
        g = w[0][0]
        k = w[0][1] + w[-1][1]
        w = w[1:-1]
        if k:
            w = [(g, k)] + w
        w = list(reduce_word(w))
    return tuple(w)


def expand_word(w: Sequence[Letter]):
    """Yield single letters ``(gen, ±1)``."""
    for g, k in w:
        step = 1 if k > 0 else -1
        for _ in range(abs(k)):
            yield g, step


@dataclass(frozen=True)
class Presentation:
    gens: tuple[str, ...]
    relators: tuple[tuple[Letter, ...], ...] = ()

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise PresentationError("duplicate generator name")
        n = len(self.gens)
        for r in self.relators:
            for g, k in r:
                if not 0 <= g < n:
                    raise PresentationError(f"relator references generator index {g}")
                if k == 0:
                    raise PresentationError("zero exponent in relator")

    @classmethod
    def build(cls, gens: Sequence[str], relators: Sequence) -> "Presentation":
        """Construct from relators given as strings or letter sequences."""
        index = {g: i for i, g in enumerate(gens)}
        rels = []
        for r in relators:
            if isinstance(r, str):
                r = parse_word(r, index)
            rels.append(reduce_word(r))
        return cls(tuple(gens), tuple(rels))

    def index(self, name: str) -> int:
        try:
            return self.gens.index(name)
        except ValueError:
            raise PresentationError(f"undeclared generator {name!r}") from None

    def word(self, text: str) -> tuple[Letter, ...]:
        return parse_word(text, {g: i for i, g in enumerate(self.gens)})

    def word_str(self, w: Sequence[Letter]) -> str:
        return format_word(w, self.gens)

    def to_text(self) -> str:
        lines = ["gens " + " ".join(self.gens)]
        for r in self.relators:
            lines.append("rel " + self.word_str(r))
        return "\n".join(lines) + "\n"

    def exponent_matrix(self) -> list[list[int]]:
        """Rows are relators, columns generators, entries exponent sums."""
        rows = []
        for r in self.relators:
            row = [0] * len(self.gens)
            for g, k in r:
                row[g] += k
            rows.append(row)
        return rows

    def free_product(self, other: "Presentation") -> "Presentation":
        names = list(self.gens)
        for g in other.gens:
            new = g
            i = 1
            while new in names:
                new = f"{g}_{i}"
                i += 1
            names.append(new)
        off = len(self.gens)
        rels = list(self.relators) + [tuple((g + off, k) for g, k in r) for r in other.relators]
        return Presentation(tuple(names), tuple(rels))

    def with_relators(self, extra: Sequence[Sequence[Letter]]) -> "Presentation":
        return Presentation(self.gens, self.relators + tuple(reduce_word(r) for r in extra))


def format_word(w: Sequence[Letter], names: Sequence[str]) -> str:
    if not w:
        return ""
    return " ".join(names[g] if k == 1 else f"{names[g]}^{k}" for g, k in w)


def parse_word(text: str, index: dict, line: int | None = None) -> tuple[Letter, ...]:
    letters = []
    for tok in text.split():
        m = TOKEN.match(tok)
        if not m:
            raise PresentationError(f"malformed token {tok!r}", line)
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise PresentationError(f"undeclared generator {name!r}", line)
        k = int(power) if power is not None else 1
        if k == 0:
            raise PresentationError(f"zero exponent in token {tok!r}", line)
        letters.append((index[name], k))
    return reduce_word(letters)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_gens_line(rest: str, lineno: int) -> list[str]:
    names = rest.split()
    seen = set()
    for n in names:
        if not IDENT.match(n):
            raise PresentationError(f"invalid generator name {n!r}", lineno)
        if n in seen:
            raise PresentationError(f"duplicate generator name {n!r}", lineno)
        seen.add(n)
    return names


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented ``gens``/``rel`` format."""
    gens: list[str] | None = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, _, rest = line.partition(" ")
        key = key.rstrip(":")
        if key == "gens":
            if gens is not None:
                raise PresentationError("second gens line", lineno)
            gens = parse_gens_line(rest, lineno)
        elif key == "rel":
            index = {g: i for i, g in enumerate(gens or [])}
            rels.append(parse_word(rest, index, lineno))
        else:
            raise PresentationError(f"unknown directive {key!r}", lineno)
    if gens is None:
        gens = []
    return Presentation(tuple(gens), tuple(rels))


# -- homology ---------------------------------------------------------------


@dataclass(frozen=True)
class AbelianizationData:
    """H_1 = Z^b + torsion, with a map from generators onto the free part.

    ``free_map[j]`` is the coordinate vector in H = Z^b of generator ``j``.
    The map is put in column Hermite form, so it depends only on the group
    presentation, not on choices made during the Smith reduction.
    """

    b: int
    torsion: tuple[int, ...]
    free_map: tuple[tuple[int, ...], ...]
    gens: tuple[str, ...] = field(default=())

    def image(self, w: Sequence[Letter]) -> tuple[int, ...]:
        v = [0] * self.b
        for g, k in w:
            for i, x in enumerate(self.free_map[g]):
                v[i] += k * x
        return tuple(v)

    def psi_values(self, psi: Sequence[int]) -> list[int]:
        """The integer ψ(x) of every generator ``x``."""
        if len(psi) != self.b:
            raise ValueError(f"covector of length {len(psi)} on free rank {self.b}")
        return [sum(a * x for a, x in zip(psi, row)) for row in self.free_map]

    def to_json(self) -> dict:
        return {
            "b1": self.b,
            "torsion": list(self.torsion),
            "free_map": {g: list(r) for g, r in zip(self.gens, self.free_map)},
        }


def homology(p: Presentation) -> AbelianizationData:
    """First homology of the presented group via Smith normal form."""
    g = len(p.gens)
    a = p.exponent_matrix()
    if not a or not g:
        rank = 0
        torsion: list[int] = []
        v = [[int(i == j) for j in range(g)] for i in range(g)]
    else:
        d, _, v = smith_normal_form(a)
        diag = [d[i][i] for i in range(min(len(a), g))]
        rank = sum(1 for x in diag if x)
        torsion = [x for x in diag if x > 1]
    # generator j maps to row j of v; coordinates >= rank are free
    raw = [row[rank:] for row in v] if g else []
    b = g - rank
    if b:
        h, _ = column_hermite_form(raw)
        free_map = tuple(tuple(row) for row in h)
    else:
        free_map = tuple(() for _ in range(g))
    return AbelianizationData(b, tuple(torsion), free_map, p.gens)


# -- cyclic covers ----------------------------------------------------------


def check_primitive(psi: Sequence[int]) -> tuple[int, ...]:
    psi = tuple(int(x) for x in psi)
    if not any(psi):
        raise ValueError("ψ is zero")
    g = 0
    for x in psi:
        g = igcd(g, x)
    if g != 1:
        raise ValueError(f"ψ = {psi} is not primitive")
    return psi


def schreier_transversal(values: Sequence[int], m: int):
    """Prefix-closed coset representatives of Z/m as words in the generators.

    With a generator ``w`` whose value is a unit mod ``m`` the representatives
    are the powers ``w^k``, k = 0..m-1; otherwise a breadth-first spanning
    tree of the Schreier graph.  Returns ``(reps, tree)`` where ``tree`` holds
    the ``(coset, generator)`` edges whose Schreier generators are trivial.
    """
    for i, v in enumerate(values):
        if igcd(v % m, m) == 1:
            reps = {(k * v) % m: (((i, k),) if k else ()) for k in range(m)}
            tree = {(((k - 1) * v) % m, i) for k in range(1, m)}
            return reps, tree
    reps = {0: ()}
    tree = set()
    frontier = [0]
    while frontier:
        nxt = []
        for c in frontier:
            for i, v in enumerate(values):
                for s in (1, -1):
                    d = (c + s * v) % m
                    if d not in reps:
                        reps[d] = reduce_word(reps[c] + ((i, s),))
                        tree.add((c, i) if s > 0 else (d, i))
                        nxt.append(d)
        frontier = nxt
    if len(reps) != m:
        raise ValueError("generator values do not generate Z/m")
    return reps, tree


@dataclass(frozen=True)
class CoverData:
    """A Reidemeister–Schreier presentation with its bookkeeping."""

    presentation: Presentation
    m: int
    transversal: dict
    schreier_generators: tuple  # (coset, generator) per surviving generator


def rs_cover(p: Presentation, psi: Sequence[int], m: int, simplify: bool = True) -> CoverData:
    if m < 1:
        raise ValueError("m must be at least 1")
    psi = check_primitive(psi)
    ab = homology(p)
    values = ab.psi_values(psi)
    if m == 1:
        return CoverData(p, 1, {0: ()}, tuple((0, i) for i in range(len(p.gens))))
    reps, tree = schreier_transversal(values, m)
    labels = {}
    names = []
    taken = set(p.gens)
    for c in range(m):
        for i, g in enumerate(p.gens):
            if (c, i) in tree:
                continue
            name = f"{g}_{c}"
            while name in taken:
                name += "_"
            taken.add(name)
            labels[(c, i)] = len(names)
            names.append(name)
    rels = []
    for r in p.relators:
        for c in range(m):
            cur = c
            out = []
            for g, s in expand_word(r):
                if s > 0:
                    key = (cur, g)
                    cur = (cur + values[g]) % m
                else:
                    cur = (cur - values[g]) % m
                    key = (cur, g)
                if key in labels:
                    out.append((labels[key], s))
            w = reduce_word(out)
            if simplify and not w:
                continue
            rels.append(w)
    pres = Presentation(tuple(names), tuple(rels))
    return CoverData(pres, m, reps, tuple(sorted(labels, key=labels.get)))


def cyclic_cover_presentation(p: Presentation, psi: Sequence[int], m: int) -> Presentation:
    """Presentation of the kernel of π1 -> H -> Z -> Z/m (ψ then mod m)."""
    return rs_cover(p, psi, m).presentation


def betti_of_cyclic_cover(p: Presentation, psi: Sequence[int], m: int) -> int:
    return homology(cyclic_cover_presentation(p, psi, m)).b
