"""Reference computations that share no code with the package."""

import itertools
from fractions import Fraction

import sympy

T = sympy.Symbol("t", positive=True)


def traced_components(doubled):
    """Count boundary curves by following ribbon edges around a 3-belt.

    Each ribbon has a left and right edge with a top and bottom end.  A ribbon
    with an odd number of half twists carries its left edge to the bottom
    right.  At both disks the right edge of ribbon i runs into the left edge
    of ribbon i+1.
    """
    adj = {}

    def link(p, q):
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)

    for i, d in enumerate(doubled):
        if d % 2:
            link((i, "L", "top"), (i, "R", "bot"))
            link((i, "R", "top"), (i, "L", "bot"))
        else:
            link((i, "L", "top"), (i, "L", "bot"))
            link((i, "R", "top"), (i, "R", "bot"))
        for end in ("top", "bot"):
            link((i, "R", end), ((i + 1) % 3, "L", end))
    assert len(adj) == 12 and all(len(v) == 2 for v in adj.values())
    seen = set()
    count = 0
    for start in adj:
        if start in seen:
            continue
        count += 1
        stack = [start]
        while stack:
            p = stack.pop()
            if p in seen:
                continue
            seen.add(p)
            stack.extend(adj[p])
    return count


# twist vectors and permutations of the generators, written out independently
_GEN = {
    1: ((1, 1, -1), (1, 0, 2)),
    2: ((-1, 1, 1), (0, 2, 1)),
    3: ((1, -1, 1), (2, 1, 0)),
}


def brute_evaluate(tokens, start=(0, 0, 0)):
    """Doubled twist vector of a token list, applying the rightmost token first."""
    x = list(start)
    for tok in reversed(tokens):
        v, src = _GEN[abs(tok)]
        sign = 1 if tok > 0 else -1
        x = [x[src[j]] + sign * v[j] for j in range(3)]
    return tuple(x)


def all_words(length):
    return itertools.product((1, 2, 3, -1, -2, -3), repeat=length)


def to_sympy(poly):
    """LaurentPoly -> sympy expression in t."""
    return sum((c * T ** Fraction(e, 2) for e, c in poly.terms), sympy.Integer(0))


def half_odd_range(bound_doubled):
    return range(-bound_doubled, bound_doubled + 1, 2)
