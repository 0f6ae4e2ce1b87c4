"""Scan kernel backends and the dyadic PL model they are checked against."""

import random
from fractions import Fraction

import pytest

from nearnormal import scan
from nearnormal._plmodel import (
    PLMap, compose, generator_pl, identity_pl, invert_pl, letter_pl,
    pl_equal, word_pl,
)
from nearnormal._scan_py import thompson_agreement_scan as scan_py
from nearnormal.thompson import f_normal_form
from nearnormal.words import Word, generator, invert


def reduced_word_count(max_len, max_index):
    """Freely reduced words of length <= max_len over x_0..x_max_index."""
    letters = 2 * (max_index + 1)
    total, layer = 1, 1
    for _ in range(max_len):
        layer *= letters if layer == 1 else letters - 1
        total += layer
    return total


def test_backend_tag():
    assert scan.BACKEND in ("compiled", "python")


def test_python_backend_counts_and_passes():
    for max_len, max_index in ((2, 1), (3, 2)):
        report = scan_py(max_len, max_index)
        assert report["words"] == reduced_word_count(max_len, max_index)
        assert report["failures"] == []
        assert report["backend"] == "python"


def test_backend_parity():
    compiled = pytest.importorskip("nearnormal._scan_cy")
    for max_len, max_index in ((3, 2), (4, 2)):
        a = compiled.thompson_agreement_scan(max_len, max_index)
        b = scan_py(max_len, max_index)
        assert a["backend"] == "compiled"
        assert a["words"] == b["words"] == reduced_word_count(max_len, max_index)
        assert a["failures"] == b["failures"] == []


def test_compiled_depth_guard():
    compiled = pytest.importorskip("nearnormal._scan_cy")
    with pytest.raises(ValueError):
        compiled.thompson_agreement_scan(13, 2)


def test_facade_exports_active_backend():
    report = scan.thompson_agreement_scan(2, 1)
    assert report["backend"] == scan.BACKEND
    assert report["words"] == reduced_word_count(2, 1)
    assert report["failures"] == []


# -- PL model ---------------------------------------------------------------


def random_word(rng, max_len, max_index):
    n = rng.randrange(max_len + 1)
    return Word(tuple((rng.randrange(max_index + 1), rng.choice((1, -1)))
                      for _ in range(n)))


def test_identity_and_generator_shapes():
    assert identity_pl().is_identity()
    g0 = generator_pl(0)
    assert g0.xs == (0, Fraction(1, 2), Fraction(3, 4), 1)
    assert g0.ys == (0, Fraction(1, 4), Fraction(1, 2), 1)
    g1 = generator_pl(1)
    assert g1.xs[0] == 0 and g1.xs[-1] == 1
    # x_1 is the identity left of 1/2
    assert g1(Fraction(1, 3)) == Fraction(1, 3)
    assert g1(Fraction(1, 2)) == Fraction(1, 2)
    assert g1(Fraction(3, 4)) == Fraction(5, 8)


def test_canonical_form_drops_collinear_points():
    f = PLMap([0, Fraction(1, 2), 1], [0, Fraction(1, 2), 1])
    assert f.is_identity()
    assert len(f.xs) == 2


def test_plmap_validation():
    with pytest.raises(ValueError):
        PLMap([0, 1], [0])
    with pytest.raises(ValueError):
        PLMap([0, Fraction(1, 2)], [0, Fraction(1, 2)])
    with pytest.raises(ValueError):
        PLMap([0, Fraction(1, 2), Fraction(1, 2), 1], [0, Fraction(1, 4), Fraction(1, 2), 1])
    with pytest.raises(ValueError):
        identity_pl()(Fraction(3, 2))


def test_inverse_and_composition():
    rng = random.Random(11)
    for _ in range(30):
        w = random_word(rng, 6, 2)
        f = word_pl(w)
        assert compose(f, invert_pl(f)).is_identity()
        assert compose(invert_pl(f), f).is_identity()
    # compose(f, g) applies g first
    f = generator_pl(0)
    g = generator_pl(1)
    h = compose(f, g)
    t = Fraction(7, 8)
    assert h(t) == f(g(t))


def test_word_pl_is_a_homomorphism():
    rng = random.Random(12)
    for _ in range(40):
        u = random_word(rng, 5, 2)
        v = random_word(rng, 5, 2)
        assert word_pl(u * v) == compose(word_pl(u), word_pl(v))
    assert word_pl(Word(())) == identity_pl()


def test_defining_relations_hold_in_model():
    # x_i^-1 x_j x_i = x_{j+1} for i < j
    for i in range(4):
        for j in range(i + 1, 5):
            lhs = invert(generator(i)) * generator(j) * generator(i)
            assert word_pl(lhs) == generator_pl(j + 1)


def test_letter_pl_signs():
    assert letter_pl((0, 1)) == generator_pl(0)
    assert letter_pl((2, -1)) == invert_pl(generator_pl(2))


def test_pl_equal_matches_normal_form_engine():
    """Exhaustive cross-check on all short words: the PL model and the
    normal-form engine induce the same equality relation."""
    words = [Word(())]
    frontier = [()]
    letters = [(i, s) for i in (0, 1) for s in (1, -1)]
    for _ in range(3):
        nxt = []
        for w in frontier:
            for l in letters:
                if w and w[-1][0] == l[0] and w[-1][1] == -l[1]:
                    continue
                nxt.append(w + (l,))
        frontier = nxt
        words.extend(Word(w) for w in frontier)
    maps = [word_pl(w) for w in words]
    keys = [(f_normal_form(w).positive, f_normal_form(w).negative) for w in words]
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            assert (maps[a] == maps[b]) == (keys[a] == keys[b])
            assert pl_equal(words[a], words[b]) == (maps[a] == maps[b])


def test_normal_form_word_has_same_map():
    rng = random.Random(13)
    for _ in range(60):
        w = random_word(rng, 7, 3)
        nf = f_normal_form(w)
        assert word_pl(nf.word()) == word_pl(w)
