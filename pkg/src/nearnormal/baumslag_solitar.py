"""BS(m,n) Britton normal forms, specialized to the BS(2,3) fixture.

Generators x (index 0) and y (index 1) with the single relation
y^-1 x^m y = x^n.  Words reduce to a canonical pinch-free form

    x^{a0} y^{e1} x^{a1} ... y^{ek} x^{ak}

by pushing x-powers rightward through the stable letters: x^a y splits as
x^r y x^{(n/m)(a-r)} with r = a mod m, and x^a y^-1 as x^r y^-1 x^{(m/n)(a-r)}
with r = a mod n.  A pinch (zero remainder against an opposite stable pair)
cancels the pair and cascades.  Interior exponents are therefore reduced
residues, so equal elements have identical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .words import Word, generator, invert

X, Y = 0, 1


@dataclass(frozen=True)
class BrittonForm:
    """head = leading x-exponent; tail = ((y-sign, following x-exponent), ...)."""

    head: int
    tail: tuple[tuple[int, int], ...]
    m: int = 2
    n: int = 3

    def is_power_of_x(self) -> bool:
        return not self.tail

    def is_trivial(self) -> bool:
        return self.head == 0 and not self.tail

    def syllable_count(self) -> int:
        return len(self.tail)

    def stable_signs(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.tail)

    def word(self) -> Word:
        w = generator(X, self.head)
        for e, a in self.tail:
            w = w * generator(Y, e) * generator(X, a)
        return w

    def key(self) -> tuple:
        return (self.head, self.tail)


class _Reducer:
    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError("stable-letter exponents must be positive")
        self.m = m
        self.n = n
        # parts[0] = head exponent; then alternating (sign, exponent)
        self.head = 0
        self.tail: list[list[int]] = []

    def push_x(self, e: int) -> None:
        if self.tail:
            self.tail[-1][1] += e
        else:
            self.head += e

    def push_y(self, sign: int) -> None:
        m, n = self.m, self.n
        trailing = self.tail[-1][1] if self.tail else self.head
        modulus, scale = (m, n) if sign == 1 else (n, m)
        r = trailing % modulus
        carried = (trailing - r) // modulus * scale
        if r == 0 and self.tail and self.tail[-1][0] == -sign:
            # pinch: y^-sign x^(q*modulus) y^sign collapses into x-power
            self.tail.pop()
            self.push_x(carried)
            return
        if self.tail:
            self.tail[-1][1] = r
        else:
            self.head = r
        self.tail.append([sign, carried])


def britton_reduce(w: Word, m: int = 2, n: int = 3) -> BrittonForm:
    """Canonical form of w; sound and complete for the word problem."""
    red = _Reducer(m, n)
    for index, sign in w:
        if index == X:
            red.push_x(sign)
        elif index == Y:
            red.push_y(sign)
        else:
            raise ValueError(f"BS words use generators x0 (x) and x1 (y); got index {index}")
    return BrittonForm(red.head, tuple((e, a) for e, a in red.tail), m, n)


def bs_is_trivial(w: Word, m: int = 2, n: int = 3) -> bool:
    return britton_reduce(w, m, n).is_trivial()


def bs_equal(u: Word, v: Word, m: int = 2, n: int = 3) -> bool:
    return bs_is_trivial(u * invert(v), m, n)


def power_of_x_in(w: Word, k: int, m: int = 2, n: int = 3) -> bool:
    """Membership of w in <x^k>: the form is x^a with k | a."""
    form = britton_reduce(w, m, n)
    return form.is_power_of_x() and form.head % k == 0


def power_conjugate(g: Word, a_bound: int, m: int = 2, n: int = 3):
    """Least positive a <= a_bound with g^-1 x^a g = x^b; (a, b) or None."""
    giv = invert(g)
    for a in range(1, a_bound + 1):
        form = britton_reduce(giv * generator(X, a) * g, m, n)
        if form.is_power_of_x():
            return (a, form.head)
    return None


def _least_power_in_conjugate(w: Word, a: int, t_bound: int, m: int, n: int) -> int | None:
    """Least t >= 1 with x^t in <x^a>^w, i.e. w x^t w^-1 a power x^(a l)."""
    wi = invert(w)
    for t in range(1, t_bound + 1):
        form = britton_reduce(w * generator(X, t) * wi, m, n)
        if form.is_power_of_x() and form.head % a == 0:
            return t
    return None


def family_axiom_check(conjugators: list[Word], a_bound: int, conj_len: int = 1,
                       m: int = 2, n: int = 3) -> dict:
    """Check the truncation {<x^a>^w : 1 <= a <= a_bound, w short} of the
    family of subgroups containing a positive power of x.

    Conjugation closure: each node conjugated by each conjugator still
    contains a positive power of x (witness found by a bounded scan).
    Directedness: each pair of nodes has a common <x^e> below both,
    e computed through least contained powers and lcm, then re-verified.
    """
    words: list[Word] = [Word()]
    frontier = [Word()]
    for _ in range(conj_len):
        frontier = [w * c for w in frontier for c in conjugators]
        words.extend(frontier)
    seen = {}
    for w in words:
        seen.setdefault(britton_reduce(w, m, n).key(), w)
    conj_words = list(seen.values())

    nodes = [(a, w) for a in range(1, a_bound + 1) for w in conj_words]
    t_bound = max(m, n) ** (conj_len + 1) * a_bound * 2

    closure = []
    closure_pass = True
    for a, w in nodes:
        for c in conjugators:
            wc = w * c
            j = _least_power_in_conjugate(wc, a, t_bound, m, n)
            entry = {
                "power": a,
                "conjugator_len": len(wc),
                "witness": j,
                "in_truncation": j is not None and j <= a_bound,
            }
            if j is None:
                closure_pass = False
            closure.append(entry)

    directed = []
    directed_pass = True
    for idx1 in range(len(nodes)):
        for idx2 in range(idx1, len(nodes)):
            a1, w1 = nodes[idx1]
            a2, w2 = nodes[idx2]
            t1 = _least_power_in_conjugate(w1, a1, t_bound, m, n)
            t2 = _least_power_in_conjugate(w2, a2, t_bound, m, n)
            if t1 is None or t2 is None:
                directed_pass = False
                directed.append({"pair": (idx1, idx2), "witness": None})
                continue
            e = t1 * t2 // gcd(t1, t2)
            ok = (
                _verify_power_in_conjugate(w1, a1, e, m, n)
                and _verify_power_in_conjugate(w2, a2, e, m, n)
            )
            if not ok:
                directed_pass = False
            directed.append({"pair": (idx1, idx2), "witness": e if ok else None})

    return {
        "nodes": len(nodes),
        "closure": closure,
        "closure_pass": closure_pass,
        "directed": directed,
        "directed_pass": directed_pass,
        "all_pass": closure_pass and directed_pass,
    }


def _verify_power_in_conjugate(w: Word, a: int, e: int, m: int, n: int) -> bool:
    form = britton_reduce(w * generator(X, e) * invert(w), m, n)
    return form.is_power_of_x() and form.head % a == 0


# -- naive rewriting oracle (reference, exponential; small inputs only) ------


def _bs_neighbors(word: tuple, m: int, n: int, len_cap: int):
    """One free cancellation/insertion or one relation rewrite away.

    The relation moves replace x^m y <-> y x^n and x^n y^-1 <-> y^-1 x^m
    as subwords (both orientations of y^-1 x^m y = x^n read as equations).
    """
    L = len(word)
    for t in range(L - 1):
        (i1, s1), (i2, s2) = word[t], word[t + 1]
        if i1 == i2 and s1 == -s2:
            yield word[:t] + word[t + 2:]
    if L + 2 <= len_cap:
        for t in range(L + 1):
            for letter in ((X, 1), (X, -1), (Y, 1), (Y, -1)):
                ins = (letter, (letter[0], -letter[1]))
                yield word[:t] + ins + word[t:]
    pats = []
    xm = ((X, 1),) * m
    xn = ((X, 1),) * n
    xm_i = ((X, -1),) * m
    xn_i = ((X, -1),) * n
    yp, yn_ = ((Y, 1),), ((Y, -1),)
    pats.append((xm + yp, yp + xn))          # x^m y -> y x^n
    pats.append((xm_i + yp, yp + xn_i))      # x^-m y -> y x^-n
    pats.append((xn + yn_, yn_ + xm))        # x^n y^-1 -> y^-1 x^m
    pats.append((xn_i + yn_, yn_ + xm_i))
    all_pats = pats + [(b, a) for a, b in pats]
    for lhs, rhs in all_pats:
        if L - len(lhs) + len(rhs) > len_cap:
            continue
        for t in range(L - len(lhs) + 1):
            if word[t:t + len(lhs)] == lhs:
                yield word[:t] + rhs + word[t + len(lhs):]


def bs_naive_equal(u: Word, v: Word, m: int = 2, n: int = 3,
                   len_slack: int = 4, max_states: int = 500_000):
    """Breadth-first equality search by raw relation moves; True, False
    (search space exhausted), or "unknown" at the state cap."""
    start, goal = tuple(u.letters), tuple(v.letters)
    len_cap = max(len(start), len(goal)) + len_slack
    seen = {start}
    frontier = [start]
    while frontier:
        if goal in seen:
            return True
        nxt = []
        for word in frontier:
            for nb in _bs_neighbors(word, m, n, len_cap):
                if nb not in seen:
                    if len(seen) >= max_states:
                        return "unknown"
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return goal in seen
