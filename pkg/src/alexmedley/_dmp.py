"""Dense recursive integer polynomials.

A polynomial in ``k`` variables is a list of coefficients, lowest degree
first, in the main variable; each coefficient is a polynomial in the
remaining ``k - 1`` variables.  Level 0 is a plain ``int``.  The zero
polynomial at level ``k >= 1`` is the empty list.  Lists are never mutated
after construction.
"""

from math import gcd as igcd


def is_zero(f, k):
    return f == 0 if k == 0 else not f


def _strip(f):
    while f and (f[-1] == 0 if isinstance(f[-1], int) else not f[-1]):
        f = f[:-1]
    return f


def zero(k):
    return 0 if k == 0 else []


def one(k):
    return 1 if k == 0 else [one(k - 1)]


def add(f, g, k):
    if k == 0:
        return f + g
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = add(out[i], c, k - 1)
    return _strip(out)


def neg(f, k):
    if k == 0:
        return -f
    return [neg(c, k - 1) for c in f]


def sub(f, g, k):
    return add(f, neg(g, k), k)


def mul(f, g, k):
    if k == 0:
        return f * g
    if not f or not g:
        return []
    out = [zero(k - 1)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if is_zero(a, k - 1):
            continue
        for j, b in enumerate(g):
            if is_zero(b, k - 1):
                continue
            out[i + j] = add(out[i + j], mul(a, b, k - 1), k - 1)
    return _strip(out)


def scale(f, c, k):
    """Multiply ``f`` by a level ``k - 1`` coefficient ``c``."""
    if is_zero(c, k - 1):
        return []
    return _strip([mul(a, c, k - 1) for a in f])


def shift(f, n, k):
    """Multiply by the main variable to the power ``n >= 0``."""
    if not f:
        return f
    return [zero(k - 1)] * n + list(f)


def degree(f):
    return len(f) - 1


def lc(f):
    return f[-1]


class NotDivisible(ArithmeticError):
    pass


def divexact(f, g, k):
    """Exact quotient ``f / g``; raises :class:`NotDivisible` otherwise."""
    if k == 0:
        if g == 0:
            raise ZeroDivisionError("division by zero polynomial")
        q, r = divmod(f, g)
        if r:
            raise NotDivisible(f"{f} is not divisible by {g}")
        return q
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return []
    dg = degree(g)
    r = list(f)
    if degree(r) < dg:
        raise NotDivisible("degree too small")
    q = [zero(k - 1)] * (degree(r) - dg + 1)
    while r and degree(r) >= dg:
        c = divexact(lc(r), lc(g), k - 1)
        e = degree(r) - dg
        q[e] = c
        r = sub(r, shift(scale(g, c, k), e, k), k)
    if r:
        raise NotDivisible("nonzero remainder")
    return _strip(q)


def prem(f, g, k):
    """A pseudo-remainder of ``f`` by ``g``: ``c * f mod g`` with ``c`` a power of lc(g)."""
    dg = degree(g)
    r = f
    lg = lc(g)
    while r and degree(r) >= dg:
        e = degree(r) - dg
        r = sub(scale(r, lg, k), shift(scale(g, lc(r), k), e, k), k)
    return r


def content(f, k):
    """GCD of the main-variable coefficients (a level ``k - 1`` polynomial)."""
    c = zero(k - 1)
    for a in f:
        c = gcd(c, a, k - 1)
        if is_unit(c, k - 1):
            return c
    return c


def is_unit(f, k):
    if k == 0:
        return f in (1, -1)
    return len(f) == 1 and is_unit(f[0], k - 1)


def primitive(f, k):
    c = content(f, k)
    if is_zero(c, k - 1):
        return c, f
    return c, _strip([divexact(a, c, k - 1) for a in f])


def normalize_sign(f, k):
    """Make the recursive leading coefficient positive."""
    if sign(f, k) < 0:
        return neg(f, k)
    return f


def sign(f, k):
    while k > 0:
        if not f:
            return 0
        f = f[-1]
        k -= 1
    return (f > 0) - (f < 0)


def gcd(f, g, k):
    """GCD in Z[x_1..x_k], normalized to a positive recursive leading coefficient."""
    if k == 0:
        return igcd(f, g)
    if not f:
        return normalize_sign(g, k)
    if not g:
        return normalize_sign(f, k)
    if degree(f) == 0 or degree(g) == 0:
        cf = content(f, k)
        cg = content(g, k)
        return [gcd(cf, cg, k - 1)]
    cf, pf = primitive(f, k)
    cg, pg = primitive(g, k)
    c = gcd(cf, cg, k - 1)
    if degree(pf) < degree(pg):
        pf, pg = pg, pf
    while pg:
        r = prem(pf, pg, k)
        if not r:
            break
        if degree(r) == 0:
            pg = one(k)
            break
        _, r = primitive(r, k)
        pf, pg = pg, r
    _, pg = primitive(pg, k)
    return normalize_sign(scale(pg, c, k), k)


def from_terms(terms, k):
    """Build from ``{exponent tuple: int}`` with nonnegative exponents."""
    if k == 0:
        return sum(terms.values()) if terms else 0
    buckets = {}
    for exps, c in terms.items():
        buckets.setdefault(exps[0], {})[exps[1:]] = c
    if not buckets:
        return []
    top = max(buckets)
    out = [zero(k - 1)] * (top + 1)
    for e, sub_terms in buckets.items():
        out[e] = from_terms(sub_terms, k - 1)
    return _strip(out)


def to_terms(f, k):
    if k == 0:
        return {(): f} if f else {}
    out = {}
    for e, a in enumerate(f):
        for rest, c in to_terms(a, k - 1).items():
            out[(e,) + rest] = c
    return out
