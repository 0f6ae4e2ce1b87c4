"""Group presentations, word-problem oracles, and Todd-Coxeter coset enumeration.

A GroupContext pairs a presentation with the strategy that decides its word
problem.  Strategies are declared, never inferred: a preset or presentation
file names one of

    coset-table           enumerate cosets of the trivial subgroup (finite groups)
    britton               Britton normal forms for BS(m,n)
    thompson-normal-form  the normal-form engine for Thompson's group F
    free-abelian          exponent-vector comparison for Z^n
    free                  free reduction alone (no relators)

Coset enumeration uses the HLT strategy with a hard live-coset bound.
Hitting the bound returns an Incomplete value rather than raising: infinite
index is an expected outcome, not an error.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import baumslag_solitar as bs
from . import thompson
from .words import Letter, Word, exponent_vector, format_word, generator, invert

ORACLES = ("coset-table", "britton", "thompson-normal-form", "free-abelian", "free")


@dataclass(frozen=True)
class Presentation:
    """Finite presentation, or the infinite relator schema of Thompson's F."""

    generator_names: tuple[str, ...] | None
    relators: tuple[Word, ...] = ()
    schema: str | None = None

    def __post_init__(self):
        if self.schema is not None:
            if self.schema != "thompson":
                raise ValueError(f"unknown relator schema {self.schema!r}")
            if self.generator_names is not None or self.relators:
                raise ValueError("schema presentations carry no explicit generators or relators")
            return
        if self.generator_names is None:
            raise ValueError("non-schema presentations need explicit generator names")
        for r in self.relators:
            if not r:
                raise ValueError("relators must be nonempty after reduction")
            for index, _ in r.letters:
                if index >= len(self.generator_names):
                    raise ValueError(f"relator {format_word(r)} uses an undeclared generator")

    @property
    def generator_count(self) -> int | None:
        if self.schema is not None:
            return None
        return len(self.generator_names)


@dataclass(frozen=True)
class GroupContext:
    presentation: Presentation
    oracle: str
    bs_params: tuple[int, int] | None = None
    table_limit: int = 20_000
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.oracle not in ORACLES:
            raise ValueError(f"unknown oracle {self.oracle!r}")
        if self.oracle == "britton" and self.bs_params is None:
            raise ValueError("britton oracle needs bs_params (m, n)")

    @property
    def generator_names(self) -> tuple[str, ...] | None:
        return self.presentation.generator_names

    @property
    def generator_count(self) -> int | None:
        return self.presentation.generator_count


@dataclass(frozen=True)
class Incomplete:
    """A coset enumeration that hit its live-coset bound before closing."""

    live_cosets: int
    limit: int


@dataclass(frozen=True)
class CosetTable:
    """Closed table of the right cosets of a subgroup.

    Column 2i is the action of generator i, column 2i+1 of its inverse.
    Coset 0 is the base coset (the subgroup itself); representatives[c] is
    the first word reaching coset c in breadth-first column order, so
    representatives are deterministic and representatives[0] is empty.
    """

    ngens: int
    action: tuple[tuple[int, ...], ...]
    representatives: tuple[Word, ...]

    @property
    def coset_count(self) -> int:
        return len(self.action)

    def step(self, coset: int, letter: Letter) -> int:
        index, sign = letter
        return self.action[coset][2 * index + (0 if sign > 0 else 1)]

    def coset_of(self, w: Word, start: int = 0) -> int:
        c = start
        for letter in w.letters:
            c = self.step(c, letter)
        return c


def _letter_code(letter: Letter) -> int:
    index, sign = letter
    return 2 * index + (0 if sign > 0 else 1)


def _code_letter(code: int) -> Letter:
    return (code // 2, 1 if code % 2 == 0 else -1)


class _BoundHit(Exception):
    pass


class _Enumeration:
    """HLT coset enumeration with coincidence handling (union-find on cosets)."""

    def __init__(self, ngens: int, limit: int):
        self.nl = 2 * ngens
        self.rows: list[list[int | None]] = [[None] * self.nl]
        self.parent = [0]
        self.n_live = 1
        self.limit = limit

    def rep(self, k: int) -> int:
        r = k
        while self.parent[r] != r:
            r = self.parent[r]
        while self.parent[k] != r:
            self.parent[k], k = r, self.parent[k]
        return r

    def _define(self, alpha: int, code: int) -> None:
        if self.n_live >= self.limit:
            raise _BoundHit
        beta = len(self.rows)
        row: list[int | None] = [None] * self.nl
        row[code ^ 1] = alpha
        self.rows.append(row)
        self.parent.append(beta)
        self.n_live += 1
        self.rows[alpha][code] = beta

    def _merge(self, k: int, l: int, queue: deque) -> None:
        k, l = self.rep(k), self.rep(l)
        if k != l:
            keep, drop = (k, l) if k < l else (l, k)
            self.parent[drop] = keep
            self.n_live -= 1
            queue.append(drop)

    def _coincidence(self, a: int, b: int) -> None:
        queue: deque[int] = deque()
        self._merge(a, b, queue)
        while queue:
            gamma = queue.popleft()
            row = self.rows[gamma]
            for code in range(self.nl):
                delta = row[code]
                if delta is None:
                    continue
                self.rows[delta][code ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                other = self.rows[mu][code]
                if other is not None:
                    self._merge(nu, other, queue)
                else:
                    back = self.rows[nu][code ^ 1]
                    if back is not None:
                        self._merge(mu, back, queue)
                    else:
                        self.rows[mu][code] = nu
                        self.rows[nu][code ^ 1] = mu

    def scan_and_fill(self, alpha: int, codes: tuple[int, ...]) -> None:
        while self.parent[alpha] == alpha:
            fwd, i = alpha, 0
            end = len(codes)
            while i < end:
                nxt = self.rows[fwd][codes[i]]
                if nxt is None:
                    break
                fwd, i = nxt, i + 1
            if i == end:
                if fwd != alpha:
                    self._coincidence(fwd, alpha)
                return
            back, j = alpha, end - 1
            while j >= i:
                nxt = self.rows[back][codes[j] ^ 1]
                if nxt is None:
                    break
                back, j = nxt, j - 1
            if j < i:
                self._coincidence(fwd, back)
                return
            if j == i:
                self.rows[fwd][codes[i]] = back
                self.rows[back][codes[i] ^ 1] = fwd
                return
            self._define(fwd, codes[i])


def todd_coxeter(ctx: GroupContext, subgroup_gens: list[Word], limit: int) -> CosetTable | Incomplete:
    """Enumerate cosets of <subgroup_gens>; Incomplete once live cosets exceed limit."""
    pres = ctx.presentation
    if pres.schema is not None:
        raise ValueError("coset enumeration needs a finite presentation")
    ngens = pres.generator_count
    enum = _Enumeration(ngens, limit)
    rel_codes = [tuple(_letter_code(l) for l in r.letters) for r in pres.relators]
    gen_codes = [tuple(_letter_code(l) for l in w.letters) for w in subgroup_gens]
    try:
        for codes in gen_codes:
            enum.scan_and_fill(0, codes)
        alpha = 0
        while alpha < len(enum.rows):
            if enum.parent[alpha] == alpha:
                for codes in rel_codes:
                    enum.scan_and_fill(alpha, codes)
                    if enum.parent[alpha] != alpha:
                        break
                if enum.parent[alpha] == alpha:
                    for code in range(enum.nl):
                        if enum.rows[alpha][code] is None:
                            enum._define(alpha, code)
            alpha += 1
    except _BoundHit:
        return Incomplete(live_cosets=enum.n_live, limit=limit)
    return _compact(enum, ngens, subgroup_gens, pres.relators)


def _compact(enum: _Enumeration, ngens: int, subgroup_gens: list[Word],
             relators: tuple[Word, ...]) -> CosetTable:
    # Renumber live cosets in breadth-first column order from the base; the
    # BFS word discovering each coset becomes its representative.
    base = enum.rep(0)
    order = {base: 0}
    reps = [Word(())]
    queue = deque([base])
    rows = []
    while queue:
        old = queue.popleft()
        row = []
        for code in range(enum.nl):
            target = enum.rep(enum.rows[old][code])
            if target not in order:
                order[target] = len(order)
                reps.append(reps[order[old]] * generator(*_code_letter(code)))
                queue.append(target)
            row.append(order[target])
        rows.append(row)
    if len(order) != enum.n_live:
        raise RuntimeError("closed table has unreachable cosets")
    # rows were appended in BFS (= new id) order already
    action = tuple(tuple(r) for r in rows)
    table = CosetTable(ngens=ngens, action=action, representatives=tuple(reps))
    _validate_table(table, subgroup_gens, relators)
    return table


def _validate_table(table: CosetTable, subgroup_gens: list[Word], relators: tuple[Word, ...]) -> None:
    n = table.coset_count
    for i in range(table.ngens):
        fwd = [table.action[c][2 * i] for c in range(n)]
        bwd = [table.action[c][2 * i + 1] for c in range(n)]
        if sorted(fwd) != list(range(n)) or any(bwd[fwd[c]] != c for c in range(n)):
            raise RuntimeError(f"generator {i} does not act as a permutation")
    for r in relators:
        if any(table.coset_of(r, start=c) != c for c in range(n)):
            raise RuntimeError("relator does not act trivially")
    for w in subgroup_gens:
        if table.coset_of(w) != 0:
            raise RuntimeError("subgroup generator moves the base coset")


@lru_cache(maxsize=None)
def regular_table(ctx: GroupContext, limit: int | None = None) -> CosetTable | Incomplete:
    """Coset table of the trivial subgroup (the regular representation)."""
    return todd_coxeter(ctx, [], ctx.table_limit if limit is None else limit)


def group_elements(ctx: GroupContext) -> tuple[Word, ...]:
    """All elements of a finite coset-table group, as table representatives."""
    table = regular_table(ctx)
    if isinstance(table, Incomplete):
        raise ValueError(f"group not finished within {table.limit} cosets")
    return table.representatives


def is_trivial(ctx: GroupContext, w: Word):
    """True / False / "unknown" (only coset-table enumeration can be inconclusive)."""
    if not w:
        return True
    if ctx.oracle == "coset-table":
        table = regular_table(ctx)
        if isinstance(table, Incomplete):
            return "unknown"
        return table.coset_of(w) == 0
    if ctx.oracle == "britton":
        return bs.bs_is_trivial(w, *ctx.bs_params)
    if ctx.oracle == "thompson-normal-form":
        return thompson.f_normal_form(w).is_identity()
    if ctx.oracle == "free-abelian":
        return not any(exponent_vector(w, ctx.generator_count))
    return not w.letters


def equal_in(ctx: GroupContext, u: Word, v: Word):
    return is_trivial(ctx, u * invert(v))


def element_key(ctx: GroupContext, w: Word):
    """Canonical hashable key: equal group elements get equal keys."""
    if ctx.oracle == "coset-table":
        table = regular_table(ctx)
        if isinstance(table, Incomplete):
            raise ValueError("no canonical key: regular enumeration incomplete")
        return table.coset_of(w)
    if ctx.oracle == "britton":
        return bs.britton_reduce(w, *ctx.bs_params).key()
    if ctx.oracle == "thompson-normal-form":
        nf = thompson.f_normal_form(w)
        return (nf.positive, nf.negative)
    if ctx.oracle == "free-abelian":
        return exponent_vector(w, ctx.generator_count)
    return w.letters


# ---------------------------------------------------------------------------
# presentation text format


class PresentationError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?\d+")


class _WordScanner:
    def __init__(self, text: str, line: int, col_base: int, names: tuple[str, ...]):
        self.text = text
        self.line = line
        self.col_base = col_base
        self.names = names
        self.pos = 0

    def error(self, message: str, at: int | None = None):
        col = self.col_base + (self.pos if at is None else at)
        raise PresentationError(message, self.line, col)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _exponent(self) -> int:
        if self.pos < len(self.text) and self.text[self.pos] == "^":
            self.pos += 1
            m = _INT_RE.match(self.text, self.pos)
            if not m:
                self.error("expected an integer exponent after '^'")
            self.pos = m.end()
            e = int(m.group())
            if e == 0:
                self.error("zero exponent", at=m.start())
            return e
        return 1

    def parse(self, stop_at_paren: bool = False) -> Word:
        out = Word(())
        while True:
            self._skip_ws()
            if self.pos >= len(self.text):
                if stop_at_paren:
                    self.error("unclosed '('")
                return out
            ch = self.text[self.pos]
            if ch == ")":
                if not stop_at_paren:
                    self.error("unmatched ')'")
                self.pos += 1
                return out
            if ch == "(":
                self.pos += 1
                inner = self.parse(stop_at_paren=True)
                out = out * (inner ** self._exponent())
                continue
            m = _NAME_RE.match(self.text, self.pos)
            if not m:
                self.error(f"unexpected character {ch!r}")
            name = m.group()
            start = self.pos
            self.pos = m.end()
            if name in self.names:
                index = self.names.index(name)
            elif re.fullmatch(r"x\d+", name):
                index = int(name[1:])
                if self.names and index >= len(self.names):
                    self.error(f"undeclared generator {name!r}", at=start)
            else:
                self.error(f"undeclared generator {name!r}", at=start)
            out = out * (generator(index) ** self._exponent())


def parse_relator_text(text: str, names: tuple[str, ...], line: int = 1, col_base: int = 1) -> list[Word]:
    """Whitespace-separated word expressions; parentheses group subwords."""
    scanner = _WordScanner(text, line, col_base, names)
    words = []
    while True:
        scanner._skip_ws()
        if scanner.pos >= len(scanner.text):
            return words
        start = scanner.pos
        # each top-level atom or group is one relator entry
        ch = scanner.text[scanner.pos]
        if ch == "(":
            scanner.pos += 1
            w = scanner.parse(stop_at_paren=True) ** scanner._exponent()
        elif ch == ")":
            scanner.error("unmatched ')'")
        else:
            m = _NAME_RE.match(scanner.text, scanner.pos)
            if not m:
                scanner.error(f"unexpected character {ch!r}")
            one = _WordScanner(scanner.text[start:m.end()], line, col_base + start, names)
            scanner.pos = m.end()
            w = one.parse() ** scanner._exponent()
        words.append(w)


def parse_presentation(text: str) -> tuple[Presentation, str]:
    """Parse the line-based format; returns (presentation, oracle tag).

    gens: a b
    rels: a^2 b^2 (a b)^3
    oracle: coset-table
    """
    names: tuple[str, ...] | None = None
    relators: list[Word] = []
    oracle: str | None = None
    seen_rels_at: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = re.match(r"(\w+):", stripped)
        if not m:
            raise PresentationError("expected 'gens:', 'rels:' or 'oracle:'",
                                    lineno, raw.index(stripped[0]) + 1)
        key = m.group(1)
        body_col = raw.index(stripped) + m.end() + 1
        body = stripped[m.end():].strip()
        if key == "gens":
            if names is not None:
                raise PresentationError("duplicate gens line", lineno, 1)
            parts = body.split()
            for p in parts:
                if not _NAME_RE.fullmatch(p):
                    raise PresentationError(f"bad generator name {p!r}", lineno, body_col)
            if len(set(parts)) != len(parts):
                raise PresentationError("repeated generator name", lineno, body_col)
            names = tuple(parts)
        elif key == "rels":
            if names is None:
                raise PresentationError("rels before gens", lineno, 1)
            seen_rels_at = (lineno, body_col)
            relators.extend(parse_relator_text(body, names, lineno, body_col))
        elif key == "oracle":
            if body not in ORACLES:
                raise PresentationError(f"unknown oracle {body!r}", lineno, body_col)
            oracle = body
        else:
            raise PresentationError(f"unknown section {key!r}", lineno, 1)
    if names is None:
        raise PresentationError("missing gens line", max(1, text.count("\n") + 1), 1)
    for w in relators:
        if not w:
            line, col = seen_rels_at
            raise PresentationError("relator reduces to the empty word", line, col)
    if oracle is None:
        oracle = "coset-table" if relators else "free"
    return Presentation(generator_names=names, relators=tuple(relators)), oracle


def serialize_presentation(pres: Presentation, oracle: str) -> str:
    if pres.schema is not None:
        raise ValueError("schema presentations have no text form")
    names = pres.generator_names
    lines = ["gens: " + " ".join(names)]
    parts = []
    for r in pres.relators:
        text = format_word(r, names)
        # a relator with embedded spaces must stay one token on the line
        parts.append(f"({text})" if " " in text else text)
    lines.append(("rels: " + " ".join(parts)).rstrip())
    lines.append(f"oracle: {oracle}")
    return "\n".join(lines) + "\n"


def context_from_text(text: str, **kwargs) -> GroupContext:
    pres, oracle = parse_presentation(text)
    return GroupContext(presentation=pres, oracle=oracle, **kwargs)


# ---------------------------------------------------------------------------
# presets


def _commutator(i: int, j: int) -> Word:
    return generator(i, -1) * generator(j, -1) * generator(i) * generator(j)


_PRESET_RE = re.compile(r"([a-z-]+[a-z0-9-]*?)(?:\((\d+)(?:,(\d+))?\))?$")


def preset(name: str) -> GroupContext:
    """Built-in contexts: sym3, bs(m,n), zn(k), thompson-f, free(k), cyclic(k)."""
    m = _PRESET_RE.match(name.replace(" ", ""))
    if not m:
        raise ValueError(f"unknown preset {name!r}")
    base, arg1, arg2 = m.group(1), m.group(2), m.group(3)
    if base == "sym3" and arg1 is None:
        a, b = generator(0), generator(1)
        pres = Presentation(("a", "b"), (a * a, b * b, (a * b) ** 3))
        return GroupContext(pres, "coset-table", name="sym3")
    if base == "klein4" and arg1 is None:
        a, b = generator(0), generator(1)
        pres = Presentation(("a", "b"), (a * a, b * b, a * b * a * b))
        return GroupContext(pres, "coset-table", name="klein4")
    if base == "cyclic" and arg1 is not None and arg2 is None:
        k = int(arg1)
        if k < 1:
            raise ValueError("cyclic(k) needs k >= 1")
        pres = Presentation(("a",), (generator(0) ** k,))
        return GroupContext(pres, "coset-table", name=f"cyclic({k})")
    if base == "bs" and arg1 is not None and arg2 is not None:
        p, q = int(arg1), int(arg2)
        rel = generator(1, -1) * generator(0, p) * generator(1) * generator(0, -q)
        pres = Presentation(("x", "y"), (rel,))
        return GroupContext(pres, "britton", bs_params=(p, q), name=f"bs({p},{q})")
    if base == "zn" and arg1 is not None and arg2 is None:
        k = int(arg1)
        if k < 1:
            raise ValueError("zn(k) needs k >= 1")
        names = tuple("uvw"[:k]) if k <= 3 else tuple(f"u{i}" for i in range(k))
        rels = tuple(_commutator(i, j) for i in range(k) for j in range(i + 1, k))
        return GroupContext(Presentation(names, rels), "free-abelian", name=f"zn({k})")
    if base == "free" and arg1 is not None and arg2 is None:
        k = int(arg1)
        if k < 1:
            raise ValueError("free(k) needs k >= 1")
        names = tuple("abcd"[:k]) if k <= 4 else tuple(f"a{i}" for i in range(k))
        return GroupContext(Presentation(names, ()), "free", name=f"free({k})")
    if base == "thompson-f" and arg1 is None:
        pres = Presentation(None, (), schema="thompson")
        return GroupContext(pres, "thompson-normal-form", name="thompson-f")
    raise ValueError(f"unknown preset {name!r}")
