"""Coset graphs, ends-of-pair estimation, and almost-invariant set checks.

The graph on left cosets gL has an edge (gL, gxL) for every generator x of
the chosen set X.  Balls are built breadth-first with deterministic discovery
order, so vertex representatives are canonical.  Ends of the pair (G, L) are
estimated by counting annulus components that reach the outer sphere over an
increasing radius schedule; the result is a report with a stabilization flag,
never a certificate.

Almost-invariant subsets B live at two levels: as a vertex subset of the ball
(B = BL, a union of cosets) and as an element predicate on the group (needed
for right translates Bx, which do not descend to cosets).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import baumslag_solitar as bs
from . import groups
from .subgroups import CosetSet, SubgroupHandle, _right_coset_key_fn, same_coset
from .words import Word, format_word, invert

Edge = tuple[int, int, int]  # vertex index, vertex index, X index


class CosetOracleError(ValueError):
    """Coset equality could not be decided by the subgroup's oracle."""


@dataclass(frozen=True, eq=False)
class CosetGraphBall:
    ctx: groups.GroupContext
    sub: SubgroupHandle
    gens: tuple  # the generating set X
    radius: int
    vertices: tuple  # canonical representatives, BFS discovery order
    depth: tuple
    edges: tuple  # (u, v, label) with label an index into gens
    key_to_index: dict = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def vertex_index(self, g: Word) -> int | None:
        """Classify an arbitrary element's coset within the ball."""
        key = _left_key(self.sub, g)
        if key is not None:
            return self.key_to_index.get(key)
        for i, rep in enumerate(self.vertices):
            hit = same_coset(self.sub, rep, g, "left")
            if hit is True:
                return i
            if hit == "unknown":
                raise CosetOracleError("coset equality undecided")
        return None


@dataclass(frozen=True, eq=False)
class VertexSet:
    ball: CosetGraphBall
    indices: frozenset

    def __post_init__(self):
        if any(i < 0 or i >= self.ball.vertex_count for i in self.indices):
            raise ValueError("vertex set escapes the ball")

    def complement(self) -> "VertexSet":
        return VertexSet(self.ball, frozenset(range(self.ball.vertex_count)) - self.indices)


def vertex_set(ball: CosetGraphBall, predicate) -> VertexSet:
    """The vertex subset where the predicate holds on the canonical
    representative."""
    return VertexSet(ball, frozenset(
        i for i, rep in enumerate(ball.vertices) if predicate(rep)))


def _left_key(sub: SubgroupHandle, g: Word):
    # gL = g'L iff Lg^-1 = Lg'^-1, so a right-coset key applied to g^-1 is
    # canonical for the left coset gL.
    fn = _right_coset_key_fn(sub)
    if fn is None:
        return None
    return fn(invert(g))


def coset_graph_ball(ctx, sub: SubgroupHandle, gens, radius: int) -> CosetGraphBall:
    """Cosets of all elements of length at most radius, with every edge
    (gL, gxL) witnessed by a ball element g.

    Edges must be collected from every element, not only from the canonical
    vertex representatives: when the subgroup is not normal, a coset can gain
    extra neighbors through its non-canonical members (the coset graph of a
    commensurated subgroup has finite but nontrivial local degree)."""
    gens = tuple(gens)
    has_key = _right_coset_key_fn(sub) is not None
    vertices: list = []
    depth: list = []
    key_to_index: dict = {}

    def classify(g: Word) -> int | None:
        if has_key:
            return key_to_index.get(_left_key(sub, g))
        for i, rep in enumerate(vertices):
            hit = same_coset(sub, rep, g, "left")
            if hit is True:
                return i
            if hit == "unknown":
                raise CosetOracleError("coset equality undecided during expansion")
        return None

    def add_vertex(g: Word, r: int):
        if classify(g) is None:
            if has_key:
                key_to_index[_left_key(sub, g)] = len(vertices)
            vertices.append(g)
            depth.append(r)

    elements = [Word(())]
    add_vertex(Word(()), 0)
    seen_elements = {groups.element_key(ctx, Word(()))}
    frontier = [Word(())]
    for r in range(1, radius + 1):
        nxt = []
        for e in frontier:
            for x in gens:
                for step in (x, invert(x)):
                    cand = e * step
                    ekey = groups.element_key(ctx, cand)
                    if ekey not in seen_elements:
                        seen_elements.add(ekey)
                        elements.append(cand)
                        nxt.append(cand)
                        add_vertex(cand, r)
        frontier = nxt
    edges = []
    seen_edges = set()
    for g in elements:
        source = classify(g)
        for label, x in enumerate(gens):
            target = classify(g * x)
            if target is None:
                continue
            edge = (source, target, label)
            if edge not in seen_edges:
                seen_edges.add(edge)
                edges.append(edge)
    return CosetGraphBall(ctx=ctx, sub=sub, gens=gens, radius=radius,
                          vertices=tuple(vertices), depth=tuple(depth),
                          edges=tuple(edges), key_to_index=key_to_index)


# ---------------------------------------------------------------------------
# ends estimation


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[ri] = rj


def _annulus_components(ball: CosetGraphBall, inner: int, outer: int) -> int:
    """Components of the subgraph on depths in (inner, outer] that contain a
    vertex on the outer sphere."""
    members = [i for i in range(ball.vertex_count) if inner < ball.depth[i] <= outer]
    if not members:
        return 0
    uf = _UnionFind(members)
    member_set = set(members)
    for u, v, _ in ball.edges:
        if u in member_set and v in member_set:
            uf.union(u, v)
    touching = {uf.find(i) for i in members if ball.depth[i] == outer}
    return len(touching)


def ends_estimate(ctx, sub: SubgroupHandle, gens, radii) -> dict:
    """Annulus component counts over the radius schedule; the estimate is the
    final count and stabilized means the trailing counts agree."""
    radii = list(radii)
    if any(b <= a for a, b in zip(radii, radii[1:])) or not radii:
        raise ValueError("radii must be strictly increasing and nonempty")
    ball = coset_graph_ball(ctx, sub, gens, radii[-1])
    counts = [_annulus_components(ball, r1, r2) for r1, r2 in zip(radii, radii[1:])]
    if not counts:
        counts = [_annulus_components(ball, 0, radii[0])]
    stabilized = len(counts) >= 2 and counts[-1] == counts[-2]
    return {"radii": radii, "counts": counts, "estimate": counts[-1],
            "stabilized": stabilized}


# ---------------------------------------------------------------------------
# almost-invariant sets


def boundary_edges(b: VertexSet, ball: CosetGraphBall):
    """Edges with exactly one endpoint in the vertex set."""
    if b.ball is not ball:
        raise ValueError("vertex set belongs to a different ball")
    return [(u, v, label) for u, v, label in ball.edges
            if (u in b.indices) != (v in b.indices)]


def element_ball(ctx, gens, radius: int):
    """Distinct group elements of length at most radius over the given set."""
    identity = Word(())
    seen = {groups.element_key(ctx, identity)}
    out = [identity]
    frontier = [identity]
    for _ in range(radius):
        nxt = []
        for e in frontier:
            for x in gens:
                for step in (x, invert(x)):
                    cand = e * step
                    key = groups.element_key(ctx, cand)
                    if key not in seen:
                        seen.add(key)
                        out.append(cand)
                        nxt.append(cand)
        frontier = nxt
    return out


def claim3_check(predicate, ball: CosetGraphBall, gens=None) -> dict:
    """For an element-level predicate B with B = BL: computes the vertex set
    Y = (union over x of (B + Bx^-1) and (B + Bx)) L inside the ball, checks
    every boundary edge of B has both endpoints in Y, and reports the
    boundary-edge count per radius."""
    gens = ball.gens if gens is None else tuple(gens)
    elements = element_ball(ball.ctx, gens, ball.radius)
    for e in elements:
        vi = ball.vertex_index(e)
        if vi is not None and predicate(e) != predicate(ball.vertices[vi]):
            raise ValueError("predicate is not constant on cosets: B != BL")
    b_vertices = vertex_set(ball, predicate)
    y_indices = set()
    for e in elements:
        if any(predicate(e) != predicate(e * x) or predicate(e) != predicate(e * invert(x))
               for x in gens):
            vi = ball.vertex_index(e)
            if vi is not None:
                y_indices.add(vi)
    border = boundary_edges(b_vertices, ball)
    per_radius = []
    for r in range(1, ball.radius + 1):
        per_radius.append(sum(1 for u, v, _ in border
                              if ball.depth[u] <= r and ball.depth[v] <= r))
    contained = all(u in y_indices and v in y_indices for u, v, _ in border)
    return {"boundary_count_per_radius": per_radius,
            "contained_in_Y": contained,
            "y_vertex_count": len(y_indices),
            "y_vertices": frozenset(y_indices)}


def double_coset_membership(b: CosetSet, sub: SubgroupHandle, ball_radius: int):
    """Within the ball of subgroup elements of the given radius: True when B
    is closed under left multiplication of its representatives by subgroup
    elements, False on a certified escape, otherwise unknown."""
    if b.side != "left":
        raise ValueError("double-coset test expects a union of left cosets")
    sub_elements = element_ball(sub.ctx, sub.generators, ball_radius)
    undecided = False
    for g in b.representatives:
        for h in sub_elements:
            cand = h * g
            hit_any = False
            cand_undecided = False
            for rep in b.representatives:
                hit = same_coset(sub, rep, cand, "left")
                if hit is True:
                    hit_any = True
                    break
                if hit == "unknown":
                    cand_undecided = True
            if not hit_any:
                if cand_undecided:
                    undecided = True
                else:
                    return False
    return "unknown" if undecided else True


def double_coset_orbit(sub: SubgroupHandle, g: Word, ball_radius: int) -> CosetSet:
    """The left cosets inside HgH reachable with subgroup elements of the
    given radius: representatives h*g de-duplicated by coset equality."""
    reps = []
    for h in element_ball(sub.ctx, sub.generators, ball_radius):
        cand = h * g
        if not any(same_coset(sub, r, cand, "left") is True for r in reps):
            reps.append(cand)
    return CosetSet(sub, tuple(reps), "left")


# ---------------------------------------------------------------------------
# fixture side predicates and DOT output


def bs_side_predicate(ctx):
    """Classifies an element of an HNN fixture by the sign of the first
    stable letter of its normal form; pure base elements land on False.
    Constant on left cosets of any base-group subgroup."""
    if ctx.oracle != "britton":
        raise ValueError("side predicate is defined for britton contexts")
    m, n = ctx.bs_params

    def side(w: Word) -> bool:
        form = bs.britton_reduce(w, m, n)
        return bool(form.tail) and form.tail[0][0] == 1

    return side


def to_dot(ball: CosetGraphBall, highlight: VertexSet | None = None,
           names=None) -> str:
    """The ball as an undirected DOT graph; highlighted vertices are filled."""
    marked = highlight.indices if highlight is not None else frozenset()
    lines = ["graph ball {", "  node [shape=circle];"]
    for i, rep in enumerate(ball.vertices):
        label = format_word(rep, names) if rep else "1"
        style = ' style=filled fillcolor="lightgray"' if i in marked else ""
        lines.append(f'  v{i} [label="{label}"{style}];')
    for u, v, label in ball.edges:
        x = format_word(ball.gens[label], names)
        lines.append(f'  v{u} -- v{v} [label="{x}"];')
    lines.append("}")
    return "\n".join(lines)
