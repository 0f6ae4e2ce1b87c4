"""Coset graph balls, ends estimation, and almost-invariant boundaries."""

import pytest

from nearnormal.ends import (
    CosetOracleError, boundary_edges, bs_side_predicate, claim3_check,
    coset_graph_ball, double_coset_membership, double_coset_orbit,
    element_ball, ends_estimate, to_dot, vertex_set,
)
from nearnormal.groups import preset
from nearnormal.subgroups import (
    CosetSet, finite_subgroup, lattice_subgroup, power_subgroup,
    same_coset, subgroup, trivial_subgroup, whole_group,
)
from nearnormal.words import Word, exponent_vector, generator, invert, parse_word


def bfs_components(ball, members):
    """Connected components of the induced subgraph, computed directly."""
    members = set(members)
    adj = {i: set() for i in members}
    for u, v, _ in ball.edges:
        if u in members and v in members:
            adj[u].add(v)
            adj[v].add(u)
    seen = set()
    comps = []
    for start in sorted(members):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            cur = queue.pop()
            for nb in adj[cur]:
                if nb not in comp:
                    comp.add(nb)
                    queue.append(nb)
        seen |= comp
        comps.append(comp)
    return comps


def test_line_ball_shape():
    ctx = preset("zn(1)")
    sub = trivial_subgroup(ctx)
    ball = coset_graph_ball(ctx, sub, (generator(0),), 3)
    assert ball.vertex_count == 7
    assert sorted(ball.depth) == [0, 1, 1, 2, 2, 3, 3]
    # an undirected line: six distinct edges
    assert len(ball.edges) == 6
    comps = bfs_components(ball, range(ball.vertex_count))
    assert len(comps) == 1


def test_line_has_two_ends():
    ctx = preset("zn(1)")
    sub = trivial_subgroup(ctx)
    report = ends_estimate(ctx, sub, (generator(0),), range(1, 21))
    assert report["estimate"] == 2
    assert report["stabilized"] is True
    assert all(c == 2 for c in report["counts"][1:])


def test_plane_has_one_end():
    ctx = preset("zn(2)")
    sub = trivial_subgroup(ctx)
    gens = (generator(0), generator(1))
    report = ends_estimate(ctx, sub, gens, [2, 4, 6, 8])
    assert report["estimate"] == 1
    assert report["stabilized"] is True


def test_line_quotient_of_plane_has_two_ends():
    ctx = preset("zn(2)")
    sub = lattice_subgroup(ctx, [(1, 0)])
    gens = (generator(0), generator(1))
    report = ends_estimate(ctx, sub, gens, [2, 4, 6, 8])
    assert report["estimate"] == 2
    assert report["stabilized"] is True


def test_quotient_ball_vertices_and_loops():
    ctx = preset("zn(2)")
    sub = lattice_subgroup(ctx, [(1, 0)])
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 2)
    # cosets are classified by the v-exponent alone
    assert ball.vertex_count == 5
    loops = [(u, v, l) for u, v, l in ball.edges if u == v]
    assert len(loops) == 5
    assert all(l == 0 for _, _, l in loops)


def test_ends_estimate_validates_radii():
    ctx = preset("zn(1)")
    sub = trivial_subgroup(ctx)
    with pytest.raises(ValueError):
        ends_estimate(ctx, sub, (generator(0),), [4, 2])
    with pytest.raises(ValueError):
        ends_estimate(ctx, sub, (generator(0),), [])


def test_ball_refuses_undecidable_cosets():
    # a bare handle with no membership oracle cannot decide coset equality
    ctx = preset("free(2)")
    sub = subgroup(ctx, (generator(0),))
    with pytest.raises(CosetOracleError):
        coset_graph_ball(ctx, sub, (generator(0), generator(1)), 2)


# --- boundaries --------------------------------------------------------------

def half_line_predicate(w):
    return exponent_vector(w, 2)[1] > 0


def test_boundary_edges_of_a_half_line():
    ctx = preset("zn(2)")
    sub = lattice_subgroup(ctx, [(1, 0)])
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 4)
    half = vertex_set(ball, half_line_predicate)
    border = boundary_edges(half, ball)
    assert len(border) == 1
    assert boundary_edges(half.complement(), ball) == border
    everything = vertex_set(ball, lambda w: True)
    assert boundary_edges(everything, ball) == []


def test_boundary_of_a_single_interior_vertex():
    ctx = preset("zn(1)")
    sub = trivial_subgroup(ctx)
    ball = coset_graph_ball(ctx, sub, (generator(0),), 3)
    one = vertex_set(ball, lambda w: w == generator(0))
    assert len(boundary_edges(one, ball)) == 2


def test_vertex_set_validation():
    ctx = preset("zn(1)")
    sub = trivial_subgroup(ctx)
    ball3 = coset_graph_ball(ctx, sub, (generator(0),), 3)
    ball2 = coset_graph_ball(ctx, sub, (generator(0),), 2)
    half = vertex_set(ball3, lambda w: True)
    with pytest.raises(ValueError):
        boundary_edges(half, ball2)


def test_claim3_half_line_boundary_is_bounded():
    ctx = preset("zn(2)")
    sub = lattice_subgroup(ctx, [(1, 0)])
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 4)
    report = claim3_check(half_line_predicate, ball)
    assert report["contained_in_Y"] is True
    assert report["y_vertex_count"] == 2
    assert report["boundary_count_per_radius"] == [1, 1, 1, 1]


def test_claim3_trivial_predicate():
    ctx = preset("zn(2)")
    sub = lattice_subgroup(ctx, [(1, 0)])
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 4)
    report = claim3_check(lambda w: False, ball)
    assert report["y_vertex_count"] == 0
    assert report["boundary_count_per_radius"] == [0, 0, 0, 0]
    assert report["contained_in_Y"] is True


def test_claim3_rejects_non_coset_predicates():
    ctx = preset("zn(2)")
    sub = lattice_subgroup(ctx, [(1, 0)])
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 3)
    with pytest.raises(ValueError):
        claim3_check(lambda w: exponent_vector(w, 2)[0] > 0, ball)


# --- the HNN fixture ---------------------------------------------------------

def test_bs_ball_matches_pairwise_classification():
    ctx = preset("bs(2,3)")
    sub = power_subgroup(ctx, 1)
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 2)
    for i in range(ball.vertex_count):
        for j in range(i + 1, ball.vertex_count):
            assert same_coset(sub, ball.vertices[i], ball.vertices[j], "left") is False
    elements = element_ball(ctx, gens, 2)
    expected = []
    for e in elements:
        if not any(same_coset(sub, r, e, "left") is True for r in expected):
            expected.append(e)
    assert ball.vertex_count == len(expected)


def test_bs_edges_come_from_all_coset_members():
    # xyL != yL, yet the coset xL reaches xyL through its member x: the edge
    # (L, x)(x y)L exists only because x y L = (x)(y)L with x in L
    ctx = preset("bs(2,3)")
    sub = power_subgroup(ctx, 1)
    x, y = generator(0), generator(1)
    ball = coset_graph_ball(ctx, sub, (x, y), 2)
    base = ball.vertex_index(Word(()))
    xy = ball.vertex_index(x * y)
    yv = ball.vertex_index(y)
    assert xy is not None and yv is not None and xy != yv
    assert any((u, v) in ((base, xy), (xy, base))
               for u, v, label in ball.edges if label == 1)


def test_bs_subgroup_side_has_two_or_more_ends():
    ctx = preset("bs(2,3)")
    sub = power_subgroup(ctx, 2)
    gens = (generator(0), generator(1))
    report = ends_estimate(ctx, sub, gens, [2, 3, 4, 5])
    assert report["estimate"] >= 2


def test_bs_side_predicate_truth_table():
    ctx = preset("bs(2,3)")
    side = bs_side_predicate(ctx)
    x, y = generator(0), generator(1)
    assert side(y * x) is True
    assert side(Word(())) is False
    assert side(x) is False
    assert side(y) is True
    assert side(invert(y) * x ** 2 * y) is False  # reduces to x^3
    with pytest.raises(ValueError):
        bs_side_predicate(preset("sym3"))


def test_claim3_on_the_bs_side_predicate():
    ctx = preset("bs(2,3)")
    sub = power_subgroup(ctx, 1)
    gens = (generator(0), generator(1))
    ball = coset_graph_ball(ctx, sub, gens, 4)
    report = claim3_check(bs_side_predicate(ctx), ball)
    assert report["contained_in_Y"] is True
    counts = report["boundary_count_per_radius"]
    assert counts == sorted(counts)  # cumulative by construction


# --- double cosets -----------------------------------------------------------

def test_double_coset_membership_fixtures():
    ctx = preset("sym3")
    h = finite_subgroup(ctx, [parse_word("a", ("a", "b"))])
    only_h = CosetSet(h, (Word(()),), "left")
    assert double_coset_membership(only_h, h, 3) is True
    just_b = CosetSet(h, (parse_word("b", ("a", "b")),), "left")
    assert double_coset_membership(just_b, h, 3) is False
    orbit = double_coset_orbit(h, parse_word("b", ("a", "b")), 3)
    assert len(orbit.representatives) == 2
    assert double_coset_membership(orbit, h, 3) is True
    with pytest.raises(ValueError):
        double_coset_membership(CosetSet(h, (Word(()),), "right"), h, 3)


def test_to_dot_output():
    ctx = preset("zn(1)")
    sub = trivial_subgroup(ctx)
    ball = coset_graph_ball(ctx, sub, (generator(0),), 2)
    text = to_dot(ball)
    assert text.startswith("graph ball {")
    assert text.rstrip().endswith("}")
    assert text.count(" -- ") == len(ball.edges)
    marked = to_dot(ball, highlight=vertex_set(ball, lambda w: not w))
    assert "fillcolor" in marked
    assert 'label="1"' in marked
