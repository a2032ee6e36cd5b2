"""Fixture manifolds: a presentation plus optional norm-ball and surgery data.

A fixture file is a presentation file with extra directives::

    gens a b tau
    rel ...
    ball: 2 0               # one even functional per line
    ball_projection: 0 0 1  # rows of the map from H^1 to ball coordinates
    euler: e0 2 0           # labeled class, rational entries allowed
    meridian: x
    longitude: x y x^-2
    flags: trnh
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polytopes import NormBallPair, ball_from_functionals
from .presentations import Presentation, PresentationError, parse_presentation

DIRECTIVES = ("ball", "ball_projection", "euler", "meridian", "longitude", "flags")


@dataclass
class FixtureManifold:
    presentation: Presentation
    functionals: list = field(default_factory=list)
    projection: list | None = None
    euler: dict = field(default_factory=dict)
    meridian: str | None = None
    longitude: str | None = None
    flags: set = field(default_factory=set)

    @property
    def trnh(self) -> bool:
        """Knot flagged totally rationally null-homologous."""
        return "trnh" in self.flags

    def ball(self) -> NormBallPair | None:
        if not self.functionals:
            return None
        return ball_from_functionals(self.functionals)

    def to_text(self) -> str:
        lines = [self.presentation.to_text().rstrip("\n")]
        for u in self.functionals:
            lines.append("ball: " + " ".join(str(x) for x in u))
        for r in self.projection or []:
            lines.append("ball_projection: " + " ".join(str(x) for x in r))
        for label, v in self.euler.items():
            lines.append(f"euler: {label} " + " ".join(str(x) for x in v))
        if self.meridian is not None:
            lines.append(f"meridian: {self.meridian}")
        if self.longitude is not None:
            lines.append(f"longitude: {self.longitude}")
        if self.flags:
            lines.append("flags: " + " ".join(sorted(self.flags)))
        return "\n".join(lines) + "\n"


def _numbers(rest: str, lineno: int, integer: bool) -> list:
    out = []
    for tok in rest.split():
        try:
            x = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise PresentationError(f"malformed number {tok!r}", lineno) from None
        if integer and x.denominator != 1:
            raise PresentationError(f"expected an integer, got {tok!r}", lineno)
        out.append(int(x) if integer else x)
    if not out:
        raise PresentationError("empty row", lineno)
    return out


def parse_fixture(text: str) -> FixtureManifold:
    pres_lines = []
    fx = FixtureManifold(Presentation(()))
    projection = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        key, sep, rest = line.partition(":")
        key = key.strip()
        if sep and key in DIRECTIVES:
            rest = rest.strip()
            if key == "ball":
                fx.functionals.append(_numbers(rest, lineno, integer=True))
            elif key == "ball_projection":
                projection.append(_numbers(rest, lineno, integer=True))
            elif key == "euler":
                label, _, vals = rest.partition(" ")
                if not label:
                    raise PresentationError("euler line needs a label", lineno)
                fx.euler[label] = _numbers(vals, lineno, integer=False)
            elif key == "flags":
                fx.flags.update(rest.split())
            else:
                setattr(fx, key, rest)
            pres_lines.append("")  # keep line numbers aligned
        else:
            pres_lines.append(raw)
    fx.presentation = parse_presentation("\n".join(pres_lines))
    fx.projection = projection or None
    return fx


def read_fixture(path) -> FixtureManifold:
    with open(path, encoding="utf-8") as fh:
        return parse_fixture(fh.read())
