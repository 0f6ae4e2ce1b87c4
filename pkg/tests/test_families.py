"""Subgroup-family truncations, finite modules, and the degree-0/1 functors."""

import itertools
import random

import pytest

from nearnormal import modp
from nearnormal.families import (
    check_admissible, check_stable, derivation_eval, finite_module, h0_G_mod_S,
    h0_S, h1_derivations, h1_trivial_expected, node_fixed_space,
    parse_module_matrices, permutation_module, regular_module, restrict_to_h0s,
    trivial_module, truncation, word_matrix,
)
from nearnormal.groups import preset, todd_coxeter
from nearnormal.words import Word, generator, invert, parse_word


def w(text):
    return parse_word(text, ("a", "b"))


def sym3_full_lattice():
    ctx = preset("sym3")
    fam = truncation(ctx, [[], [w("a")], [w("b")], [w("a b a")],
                           [w("a b")], [w("a"), w("b")]])
    return ctx, fam


# --- truncations -------------------------------------------------------------

def test_full_lattice_is_admissible_and_stable():
    ctx, fam = sym3_full_lattice()
    assert len(fam.nodes) == 6
    report = check_admissible(fam)
    assert report["conjugation_closed"] is True
    assert report["downward_directed"] is True
    assert report["violations"] == []
    stab = check_stable(fam)
    assert stab["stable"] is True and stab["witness"] is None
    assert all(v is not None for v in stab["choices"].values())


def test_conjugation_closure_adds_missing_nodes():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a")], [w("a"), w("b")]])
    # the two other order-2 subgroups arrive by closure
    assert len(fam.nodes) == 4
    report = check_admissible(fam)
    assert report["conjugation_closed"] is True
    assert report["downward_directed"] is False
    assert report["violations"]
    stab = check_stable(fam)
    assert stab["stable"] is False
    assert stab["witness"] is not None
    assert stab["choices"] is None


def test_close_false_rejects_an_open_node_set():
    ctx = preset("sym3")
    with pytest.raises(ValueError):
        truncation(ctx, [[w("a")], [w("a"), w("b")]], close=False)


def test_normal_node_needs_no_closure():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a b")], [w("a"), w("b")]])
    assert len(fam.nodes) == 2
    assert check_admissible(fam)["conjugation_closed"] is True
    assert check_stable(fam)["stable"] is True


def test_truncation_requires_a_coset_table_group():
    with pytest.raises(ValueError):
        truncation(preset("zn(2)"), [[]])


def test_conjugation_action_is_an_action():
    ctx, fam = sym3_full_lattice()
    rng = random.Random(0)
    for _ in range(40):
        node = rng.randrange(len(fam.nodes))
        u = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(4)])
        v = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(4)])
        assert fam.conj_by_word(node, u * v) == fam.conj_by_word(fam.conj_by_word(node, u), v)
        assert fam.conj_by_word(fam.conj_by_word(node, u), invert(u)) == node


def test_bottom_is_the_global_lower_bound():
    ctx, fam = sym3_full_lattice()
    bottom = fam.bottom()
    assert all(fam.leq(bottom, j) for j in range(len(fam.nodes)))
    assert fam.members[bottom] == (Word(()),)


def test_order_matches_membership():
    ctx, fam = sym3_full_lattice()
    from nearnormal.groups import element_key
    key_sets = [frozenset(element_key(ctx, m) for m in ms) for ms in fam.members]
    for i in range(len(fam.nodes)):
        for j in range(len(fam.nodes)):
            assert fam.leq(i, j) == (key_sets[i] <= key_sets[j])


# --- modules -----------------------------------------------------------------

def test_finite_module_validation():
    ctx = preset("cyclic(2)")
    with pytest.raises(ValueError):
        finite_module(ctx, [((1, 1), (1, 1))])  # singular
    with pytest.raises(ValueError):
        finite_module(ctx, [((0, 1), (1, 1))])  # a^2 does not act as identity
    with pytest.raises(ValueError):
        finite_module(ctx, [((1, 0),)])  # not square
    with pytest.raises(ValueError):
        finite_module(preset("sym3"), [modp.identity_matrix(2)])  # wrong count
    with pytest.raises(ValueError):
        finite_module(preset("thompson-f"), [])
    swap = ((0, 1), (1, 0))
    module = finite_module(ctx, [swap])
    assert module.dimension == 2
    assert module.inverses[0] == swap


def test_word_matrix_is_a_homomorphism():
    ctx = preset("sym3")
    module = regular_module(ctx)
    assert module.dimension == 6
    rng = random.Random(5)
    for _ in range(30):
        u = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(5)])
        v = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(5)])
        assert word_matrix(module, u * v) == modp.mat_mul(
            word_matrix(module, u), word_matrix(module, v), module.p)
    assert word_matrix(module, Word(())) == modp.identity_matrix(6)


def test_permutation_module_on_coset_table():
    ctx = preset("sym3")
    table = todd_coxeter(ctx, [w("a")], 100)
    module = permutation_module(ctx, table)
    assert module.dimension == 3
    # row c has a single 1 at the image coset
    for mat in module.matrices:
        for row in mat:
            assert sum(row) == 1


def test_parse_module_matrices():
    text = "1 0\n0 1\n\n0 1\n1 0\n"
    assert parse_module_matrices(text) == (((1, 0), (0, 1)), ((0, 1), (1, 0)))
    with_comments = "# swap\n0 1\n1 0\n"
    assert parse_module_matrices(with_comments) == (((0, 1), (1, 0)),)
    with pytest.raises(ValueError):
        parse_module_matrices("1 0\n")


# --- degree 0 ----------------------------------------------------------------

def test_h0_s_is_the_bottom_fixed_space():
    ctx, fam = sym3_full_lattice()
    module = regular_module(ctx)
    basis = h0_S(module, fam)
    assert len(basis) == 6  # bottom node is trivial, so everything is fixed
    assert h0_S(trivial_module(ctx), fam) == ((1,),)


def test_h0_s_on_a_normal_family():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a b")], [w("a"), w("b")]])
    module = regular_module(ctx)
    basis = h0_S(module, fam)
    assert len(basis) == 2
    # members of the C3 node really fix the basis vectors
    bottom = fam.bottom()
    for g in fam.members[bottom]:
        mat = word_matrix(module, g)
        for v in basis:
            assert modp.vec_mat(v, mat, module.p) == v


def test_node_fixed_space_sizes():
    ctx, fam = sym3_full_lattice()
    module = regular_module(ctx)
    sizes = sorted(len(node_fixed_space(module, fam, i)) for i in range(6))
    # trivial, three order-2 nodes, C3, G
    assert sizes == [1, 2, 3, 3, 3, 6]


def test_h0_g_mod_s_needs_a_subcategory_object():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a b")], [w("a"), w("b")]])
    module = regular_module(ctx)
    with pytest.raises(ValueError):
        h0_G_mod_S(module, fam)
    sub, basis = restrict_to_h0s(module, fam)
    assert sub.dimension == 2
    fixed = h0_G_mod_S(sub, fam)
    assert len(fixed) == 1


def test_restricted_module_action_matches():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a b")], [w("a"), w("b")]])
    module = regular_module(ctx)
    sub, basis = restrict_to_h0s(module, fam)
    p = module.p
    rng = random.Random(7)
    for _ in range(20):
        g = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(4)])
        big = word_matrix(module, g)
        small = word_matrix(sub, g)
        for coeffs, v in zip(small, basis):
            moved = modp.vec_mat(v, big, p)
            rebuilt = modp.zero_vector(module.dimension)
            for c, row in zip(coeffs, basis):
                rebuilt = modp.vec_add(rebuilt, modp.vec_scale(row, c, p), p)
            assert rebuilt == moved


# --- degree 1 ----------------------------------------------------------------

def test_derivation_cocycle_law():
    ctx = preset("sym3")
    module = regular_module(ctx)
    rng = random.Random(9)
    for _ in range(20):
        delta = tuple(tuple(rng.randrange(2) for _ in range(6)) for _ in range(2))
        u = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(4)])
        v = Word([(rng.randrange(2), rng.choice((1, -1))) for _ in range(4)])
        left = derivation_eval(module, delta, u * v)
        right = modp.vec_add(
            modp.vec_mat(derivation_eval(module, delta, u), word_matrix(module, v), 2),
            derivation_eval(module, delta, v), 2)
        assert left == right


def brute_force_derivation_count(ctx, module):
    """Count generator assignments satisfying every relator, directly."""
    n = ctx.generator_count
    d = module.dimension
    p = module.p
    count = 0
    for flat in itertools.product(range(p), repeat=n * d):
        delta = tuple(tuple(flat[i * d:(i + 1) * d]) for i in range(n))
        if all(not any(derivation_eval(module, delta, r))
               for r in ctx.presentation.relators):
            count += 1
    return count


def brute_force_inner_count(ctx, module):
    n = ctx.generator_count
    p = module.p
    seen = set()
    for m in itertools.product(range(p), repeat=module.dimension):
        delta = tuple(modp.vec_sub(modp.vec_mat(m, module.matrices[i], p), m, p)
                      for i in range(n))
        seen.add(delta)
    return len(seen)


H1_CASES = [
    ("cyclic(2)", "trivial", (1, 0, 1)),
    ("cyclic(2)", "regular", (1, 1, 0)),
    ("sym3", "trivial", (1, 0, 1)),
    ("klein4", "trivial", (2, 0, 2)),
    ("sym3", "regular", None),
]


@pytest.mark.parametrize("name,kind,dims", H1_CASES)
def test_h1_dimensions_match_brute_force(name, kind, dims):
    ctx = preset(name)
    module = trivial_module(ctx) if kind == "trivial" else regular_module(ctx)
    got = h1_derivations(ctx, module)
    assert got["dim_der"] - got["dim_ider"] == got["dim_h1"]
    assert 2 ** got["dim_der"] == brute_force_derivation_count(ctx, module)
    assert 2 ** got["dim_ider"] == brute_force_inner_count(ctx, module)
    if dims is not None:
        assert (got["dim_der"], got["dim_ider"], got["dim_h1"]) == dims


@pytest.mark.parametrize("name,expected", [
    ("cyclic(2)", 1), ("cyclic(3)", 0), ("cyclic(4)", 1),
    ("sym3", 1), ("klein4", 2), ("zn(1)", 1), ("zn(2)", 2), ("free(2)", 2),
])
def test_h1_trivial_expected_from_abelianization(name, expected):
    ctx = preset(name)
    assert h1_trivial_expected(ctx) == expected
    got = h1_derivations(ctx, trivial_module(ctx))
    assert got["dim_h1"] == expected


def test_h1_rejects_schema_presentations():
    with pytest.raises(ValueError):
        h1_derivations(preset("thompson-f"), None)
