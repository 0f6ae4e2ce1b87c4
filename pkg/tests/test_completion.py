"""The completion monoid along a truncated family: laws, inverses, limits."""

import itertools

import pytest

from nearnormal import modp
from nearnormal.completion import (
    CompletionElement, MissingNodeError, act, completion_is_group, conj_node,
    embed, enumerate_completion, identity_element, invert_stable,
    invertibility_scan, multiply, profinite_compare, truncated_completion,
)
from nearnormal.families import h0_S, regular_module, truncation
from nearnormal.groups import group_elements, preset
from nearnormal.words import Word, invert, parse_word


def w(text):
    return parse_word(text, ("a", "b"))


def sym3_normal_family():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a b")], [w("a"), w("b")]])
    return ctx, fam, truncated_completion(fam)


def sym3_all_subgroups():
    ctx = preset("sym3")
    fam = truncation(ctx, [[], [w("a")], [w("b")], [w("a b a")],
                           [w("a b")], [w("a"), w("b")]])
    return ctx, fam, truncated_completion(fam)


def test_element_counts():
    _, _, tc = sym3_normal_family()
    assert len(tc.elements) == 2
    _, _, tc6 = sym3_all_subgroups()
    assert len(tc6.elements) == 6
    ctx = preset("cyclic(4)")
    fam = truncation(ctx, [[parse_word("a^2", ("a",))], [parse_word("a", ("a",))]])
    assert len(truncated_completion(fam).elements) == 2


def test_enumeration_ceiling():
    ctx, fam, _ = sym3_all_subgroups()
    with pytest.raises(ValueError):
        truncated_completion(fam, ceiling=3)


def test_enumerate_completion_recomputes():
    _, _, tc = sym3_all_subgroups()
    assert enumerate_completion(tc) == list(tc.elements)


def test_identity_laws():
    _, _, tc = sym3_all_subgroups()
    e = identity_element(tc)
    assert e in tc.elements
    for f in tc.elements:
        assert multiply(tc, e, f) == f
        assert multiply(tc, f, e) == f


def test_associativity_exhaustive():
    _, _, tc = sym3_all_subgroups()
    for f1, f2, f3 in itertools.product(tc.elements, repeat=3):
        assert multiply(tc, multiply(tc, f1, f2), f3) == multiply(tc, f1, multiply(tc, f2, f3))


def test_embed_is_an_injective_homomorphism():
    ctx, _, tc = sym3_all_subgroups()
    elements = group_elements(ctx)
    images = {embed(g, tc) for g in elements}
    assert len(images) == 6
    for g1 in elements:
        for g2 in elements:
            assert embed(g1 * g2, tc) == multiply(tc, embed(g1, tc), embed(g2, tc))
    assert embed(Word(()), tc) == identity_element(tc)


def test_conjugation_cocycle():
    _, fam, tc = sym3_all_subgroups()
    for f1 in tc.elements:
        for f2 in tc.elements:
            prod = multiply(tc, f1, f2)
            for node in range(len(fam.nodes)):
                assert conj_node(tc, node, prod) == conj_node(
                    tc, conj_node(tc, node, f1), f2)


def test_inverses_exist_and_are_involutive():
    _, _, tc = sym3_all_subgroups()
    e = identity_element(tc)
    for f in tc.elements:
        g = invert_stable(tc, f)
        assert multiply(tc, f, g) == e
        assert multiply(tc, g, f) == e
        assert invert_stable(tc, g) == f


def test_invert_matches_group_inverse_on_embeds():
    ctx, _, tc = sym3_all_subgroups()
    for g in group_elements(ctx):
        assert invert_stable(tc, embed(g, tc)) == embed(invert(g), tc)


def test_inverse_antihomomorphism():
    _, _, tc = sym3_all_subgroups()
    for f1 in tc.elements:
        for f2 in tc.elements:
            lhs = invert_stable(tc, multiply(tc, f1, f2))
            rhs = multiply(tc, invert_stable(tc, f2), invert_stable(tc, f1))
            assert lhs == rhs


def test_inverse_necessary_condition():
    # an inverse must assign at H^f the coset of x^-1 for x representing f(H)
    _, fam, tc = sym3_all_subgroups()
    for f in tc.elements:
        g = invert_stable(tc, f)
        for node in range(len(fam.nodes)):
            table = fam.nodes[node].coset_table
            xrep = table.representatives[f.assignment[node]]
            hf = conj_node(tc, node, f)
            assert g.assignment[hf] == fam.nodes[hf].coset_table.coset_of(invert(xrep))


def test_invertibility_scan_group_case():
    _, _, tc = sym3_all_subgroups()
    report = invertibility_scan(tc)
    assert report == {"total": 6, "invertible": 6, "non_invertible_witnesses": []}
    assert completion_is_group(tc)


def test_multiplication_is_representative_independent():
    ctx, fam, tc = sym3_all_subgroups()
    # recompute every product through all alternative coset representatives
    elements = group_elements(ctx)
    for f1 in tc.elements:
        for f2 in tc.elements:
            expected = multiply(tc, f1, f2)
            for node in range(len(fam.nodes)):
                table = fam.nodes[node].coset_table
                for x in elements:
                    if table.coset_of(x) != f1.assignment[node]:
                        continue
                    hf = fam.conj_by_word(node, x)
                    t2 = fam.nodes[hf].coset_table
                    for x2 in elements:
                        if t2.coset_of(x2) != f2.assignment[hf]:
                            continue
                        assert table.coset_of(x * x2) == expected.assignment[node]


def test_non_stable_family_has_non_invertible_elements():
    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a")], [w("a"), w("b")]])
    tc = truncated_completion(fam)
    assert len(tc.elements) == 27
    with pytest.raises(ValueError):
        invert_stable(tc, tc.elements[0])
    report = invertibility_scan(tc)
    assert report["total"] == 27
    assert report["non_invertible_witnesses"]
    assert not completion_is_group(tc)
    # the monoid laws still hold
    e = identity_element(tc)
    for f in tc.elements:
        assert multiply(tc, e, f) == f and multiply(tc, f, e) == f


def test_profinite_comparison_on_normal_families():
    ctx = preset("cyclic(4)")
    fam = truncation(ctx, [[parse_word("a^2", ("a",))], [parse_word("a", ("a",))]])
    assert profinite_compare(truncated_completion(fam)) is True

    ctx = preset("klein4")
    fam = truncation(ctx, [[], [w("a")], [w("b")], [w("a b")], [w("a"), w("b")]])
    tc = truncated_completion(fam)
    assert len(tc.elements) == 4
    assert profinite_compare(tc) is True

    ctx = preset("sym3")
    fam = truncation(ctx, [[w("a"), w("b")]])
    tc = truncated_completion(fam)
    assert len(tc.elements) == 1
    assert profinite_compare(tc) is True


def test_profinite_comparison_rejects_non_normal_nodes():
    _, _, tc = sym3_all_subgroups()
    with pytest.raises(ValueError):
        profinite_compare(tc)


def test_mismatched_elements_rejected():
    _, _, tc = sym3_all_subgroups()
    with pytest.raises(ValueError):
        multiply(tc, identity_element(tc), CompletionElement((0,)))


# --- module action -----------------------------------------------------------

def test_action_through_h0s():
    ctx, fam, tc = sym3_normal_family()
    module = regular_module(ctx)
    basis = h0_S(module, fam)
    e = identity_element(tc)
    for v in basis:
        assert act(tc, v, e, module) == v
    # embedded elements act as their word matrix
    from nearnormal.families import word_matrix
    for g in group_elements(ctx):
        f = embed(g, tc)
        for v in basis:
            assert act(tc, v, f, module) == modp.vec_mat(
                v, word_matrix(module, g), module.p)


def test_action_is_compatible_with_multiplication():
    ctx, fam, tc = sym3_normal_family()
    module = regular_module(ctx)
    basis = h0_S(module, fam)
    for f1 in tc.elements:
        for f2 in tc.elements:
            prod = multiply(tc, f1, f2)
            for v in basis:
                assert act(tc, act(tc, v, f1, module), f2, module) == act(
                    tc, v, prod, module)


def test_action_rejects_vectors_outside_h0s():
    ctx, fam, tc = sym3_normal_family()
    module = regular_module(ctx)
    outside = (1, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        act(tc, outside, identity_element(tc), module)
