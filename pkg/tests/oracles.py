"""Reference computations that share no code with the package.

Words here are plain lists of (generator index, ±1) letters; ranks are
computed by fraction-exact elimination written out locally.
"""

from __future__ import annotations

from fractions import Fraction

import sympy


def letters(word):
    """Expand package-style (gen, exponent) pairs into ±1 letters."""
    out = []
    for g, k in word:
        s = 1 if k > 0 else -1
        out.extend([(g, s)] * abs(k))
    return out


def rational_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    n = len(a[0])
    rk = 0
    for c in range(n):
        piv = None
        for i in range(rk, len(a)):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for i in range(len(a)):
            if i != rk and a[i][c] != 0:
                f = a[i][c] / a[rk][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk


def betti_one(ngens, relators):
    """Free rank of H1 of ⟨gens | relators⟩."""
    rows = []
    for r in relators:
        row = [0] * ngens
        for g, s in letters(r):
            row[g] += s
        rows.append(row)
    return ngens - rational_rank(rows)


def cover_betti(ngens, relators, values, m):
    """b1 of the kernel of the map to Z/m sending generator j to values[j] mod m.

    Breadth-first Schreier transversal, one generator per (coset, letter),
    tree edges identified with the identity.
    """
    reps = {0: []}
    tree = set()
    order = [0]
    while order:
        c = order.pop(0)
        for j in range(ngens):
            for s in (1, -1):
                d = (c + s * values[j]) % m
                if d not in reps:
                    reps[d] = reps[c] + [(j, s)]
                    tree.add((c, j) if s == 1 else (d, j))
                    order.append(d)
    assert len(reps) == m, "values do not generate Z/m"
    index = {}
    for c in range(m):
        for j in range(ngens):
            if (c, j) not in tree:
                index[(c, j)] = len(index)
    rels = []
    for r in relators:
        for c in range(m):
            cur = c
            w = []
            for j, s in letters(r):
                if s == 1:
                    key = (cur, j)
                    cur = (cur + values[j]) % m
                else:
                    cur = (cur - values[j]) % m
                    key = (cur, j)
                if key in index:
                    w.append((index[key], s))
            rels.append(w)
    return betti_one(len(index), rels)


def sympy_gcd(p, q):
    """GCD of two LaurentPoly values via sympy, after clearing monomials."""
    syms = sympy.symbols(f"x0:{p.rank}")

    def to_expr(f):
        mins = [min(e[i] for e in f.terms) for i in range(f.rank)] if f.terms else [0] * f.rank
        expr = 0
        for e, c in f.terms.items():
            term = sympy.Integer(c)
            for s, k, lo in zip(syms, e, mins):
                term *= s ** (k - lo)
            expr += term
        return expr

    return sympy.Poly(sympy.gcd(to_expr(p), to_expr(q)), *syms)


def poly_to_sympy(f, syms):
    mins = [min(e[i] for e in f.terms) for i in range(f.rank)] if f.terms else [0] * f.rank
    expr = sympy.Integer(0)
    for e, c in f.terms.items():
        term = sympy.Integer(c)
        for s, k, lo in zip(syms, e, mins):
            term *= s ** (k - lo)
        expr += term
    return expr


def fox_row_sympy(word, ngens, images):
    """Abelianized Fox derivatives of one relator with sympy expressions.

    ``images[j]`` is the sympy monomial of generator j; computed letter by letter.
    """
    row = [sympy.Integer(0)] * ngens
    prefix = sympy.Integer(1)
    for j, s in letters(word):
        if s == 1:
            row[j] += prefix
            prefix = prefix * images[j]
        else:
            prefix = prefix / images[j]
            row[j] -= prefix
    return [sympy.expand(x) for x in row]
