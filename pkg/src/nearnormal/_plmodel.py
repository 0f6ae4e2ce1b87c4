"""Dyadic piecewise-linear homeomorphisms of [0,1].

A faithful model for the Thompson-group oracle cross-checks: breakpoints
are dyadic rationals, slopes are powers of two.  Maps are canonical
(no collinear interior breakpoints), so two words represent the same
group element exactly when their maps compare equal.

Composition order is fixed so that word_pl is a homomorphism:
word_pl(uv) = compose(word_pl(u), word_pl(v)) with compose(f, g) meaning
"apply g first, then f".
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import Word

ZERO = Fraction(0)
ONE = Fraction(1)


class PLMap:
    """Increasing PL bijection of [0,1]; xs/ys are matched breakpoint lists."""

    __slots__ = ("xs", "ys")

    def __init__(self, xs, ys):
        xs = [Fraction(x) for x in xs]
        ys = [Fraction(y) for y in ys]
        if len(xs) != len(ys) or len(xs) < 2:
            raise ValueError("breakpoint lists must match and have length >= 2")
        if xs[0] != ZERO or xs[-1] != ONE or ys[0] != ZERO or ys[-1] != ONE:
            raise ValueError("maps must fix the endpoints 0 and 1")
        if any(a >= b for a, b in zip(xs, xs[1:])) or any(a >= b for a, b in zip(ys, ys[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        # canonical form: drop interior breakpoints that do not change slope
        cxs, cys = [xs[0]], [ys[0]]
        for k in range(1, len(xs) - 1):
            left = (ys[k] - cys[-1]) / (xs[k] - cxs[-1])
            right = (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k])
            if left != right:
                cxs.append(xs[k])
                cys.append(ys[k])
        cxs.append(xs[-1])
        cys.append(ys[-1])
        self.xs = tuple(cxs)
        self.ys = tuple(cys)

    def __eq__(self, other):
        return isinstance(other, PLMap) and self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((self.xs, self.ys))

    def __repr__(self):
        pts = ", ".join(f"({x},{y})" for x, y in zip(self.xs, self.ys))
        return f"PLMap[{pts}]"

    def __call__(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if not ZERO <= t <= ONE:
            raise ValueError("argument outside [0,1]")
        xs, ys = self.xs, self.ys
        lo, hi = 0, len(xs) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if xs[mid] <= t:
                lo = mid
            else:
                hi = mid
        slope = (ys[lo + 1] - ys[lo]) / (xs[lo + 1] - xs[lo])
        return ys[lo] + slope * (t - xs[lo])

    def is_identity(self) -> bool:
        return self.xs == self.ys and len(self.xs) == 2


def identity_pl() -> PLMap:
    return PLMap([0, 1], [0, 1])


def invert_pl(f: PLMap) -> PLMap:
    return PLMap(f.ys, f.xs)


def compose(f: PLMap, g: PLMap) -> PLMap:
    """The map t -> f(g(t))."""
    ginv = invert_pl(g)
    cuts = sorted(set(g.xs) | {ginv(x) for x in f.xs})
    return PLMap(cuts, [f(g(t)) for t in cuts])


def _scaled_on_tail(f: PLMap, a: Fraction) -> PLMap:
    """Identity on [0,a], a scaled copy of f on [a,1]."""
    width = ONE - a
    xs = [ZERO] + [a + width * x for x in f.xs]
    ys = [ZERO] + [a + width * y for y in f.ys]
    return PLMap(xs, ys)


@lru_cache(maxsize=None)
def generator_pl(n: int) -> PLMap:
    """The map of generator x_n, oriented so word_pl kills the relators
    x_i^-1 x_j x_i x_{j+1}^-1 (i < j)."""
    base = PLMap([0, Fraction(1, 2), Fraction(3, 4), 1], [0, Fraction(1, 4), Fraction(1, 2), 1])
    if n == 0:
        return base
    return _scaled_on_tail(base, ONE - Fraction(1, 2**n))


def letter_pl(letter) -> PLMap:
    index, sign = letter
    f = generator_pl(index)
    return f if sign == 1 else invert_pl(f)


def word_pl(w: Word) -> PLMap:
    """Homomorphic image of w; extending by one letter is one composition."""
    acc = identity_pl()
    for letter in w:
        acc = compose(acc, letter_pl(letter))
    return acc


def pl_equal(u: Word, v: Word) -> bool:
    """Faithful equality test for words in the Thompson group."""
    return word_pl(u) == word_pl(v)
