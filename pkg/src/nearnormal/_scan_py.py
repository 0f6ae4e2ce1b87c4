"""Pure-Python scan kernel; same contract as the compiled one.

Used automatically when the compiled extension is not built.  Orders of
magnitude slower, which only matters for the full acceptance-scale scan;
correctness is identical and the two backends are cross-checked in tests.
"""

from __future__ import annotations

from ._plmodel import compose, identity_pl, letter_pl, word_pl
from .thompson import f_normal_form
from .words import Word


def thompson_agreement_scan(max_len: int, max_index: int, failure_cap: int = 10) -> dict:
    """Check engine-vs-model agreement on every freely reduced word of
    length <= max_len over indices <= max_index."""
    letters = [(i, s) for i in range(max_index + 1) for s in (1, -1)]
    letter_maps = {l: letter_pl(l) for l in letters}
    failures: list = []
    words = 0

    stack = [((), identity_pl())]
    while stack:
        word, plw = stack.pop()
        words += 1
        nf = f_normal_form(Word(word))
        if word_pl(nf.word()) != plw:
            if len(failures) < failure_cap:
                failures.append((word, (nf.positive, nf.negative)))
        if len(word) < max_len:
            # push in reverse so letters pop in ascending code order
            for l in reversed(letters):
                if word and word[-1][0] == l[0] and word[-1][1] == -l[1]:
                    continue
                stack.append((word + (l,), compose(plw, letter_maps[l])))

    return {"words": words, "failures": failures, "backend": "python"}
