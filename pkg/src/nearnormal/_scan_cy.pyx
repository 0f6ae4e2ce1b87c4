# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scan kernel.

Exhaustively enumerates freely reduced words over signed generators
x_0..x_max_index up to a length bound, and checks at every node that the
normal-form engine's output denotes the same dyadic PL homeomorphism as
the word itself.  All arithmetic is exact: coordinates are multiples of
2^-48, slopes are powers of two, and the bounds guarantee int64 never
overflows (x-coordinates need at most ~22 fractional bits at depth 12,
y-values at most ~30, both far below 48).

Unreduced words are covered for free: the word type reduces eagerly, so
every raw word's normal form factors through its free reduction.
"""

from libc.stdint cimport int64_t

DEF MAXPTS = 96
DEF MAXDEPTH = 14
DEF MAXRUNS = 32
DEF EXP = 48

cdef int64_t ONE = (<int64_t>1) << EXP


cdef struct PL:
    int n
    int64_t xs[MAXPTS]
    int64_t ys[MAXPTS]


cdef void pl_identity(PL *f) noexcept nogil:
    f.n = 2
    f.xs[0] = 0
    f.ys[0] = 0
    f.xs[1] = ONE
    f.ys[1] = ONE


cdef void pl_canonicalize(PL *f) noexcept nogil:
    # drop interior points where the slope exponent does not change
    cdef int out = 1
    cdef int k
    for k in range(1, f.n - 1):
        if _slope_exp(f, out - 1, f.xs[k], f.ys[k]) != _seg_exp(f.xs[k], f.ys[k], f.xs[k + 1], f.ys[k + 1]):
            f.xs[out] = f.xs[k]
            f.ys[out] = f.ys[k]
            out += 1
    f.xs[out] = f.xs[f.n - 1]
    f.ys[out] = f.ys[f.n - 1]
    f.n = out + 1


cdef inline int _seg_exp(int64_t x0, int64_t y0, int64_t x1, int64_t y1) noexcept nogil:
    # slope exponent of the segment; dy = dx * 2^sigma exactly
    cdef int64_t dx = x1 - x0
    cdef int64_t dy = y1 - y0
    cdef int sigma = 0
    if dy >= dx:
        while (dx << sigma) < dy:
            sigma += 1
    else:
        while (dy << (-sigma)) < dx:
            sigma -= 1
    return sigma


cdef inline int _slope_exp(PL *f, int seg, int64_t x1, int64_t y1) noexcept nogil:
    return _seg_exp(f.xs[seg], f.ys[seg], x1, y1)


cdef void pl_generator(PL *f, int idx, bint inverse) noexcept nogil:
    # x_idx: identity on [0, 1 - 2^-idx], scaled copy of the base map after;
    # base sends 1/2 -> 1/4 and 3/4 -> 1/2
    cdef int64_t a = ONE - (ONE >> idx)
    cdef int64_t w = ONE >> idx
    cdef int64_t q = w >> 2
    cdef int k
    f.n = 5
    f.xs[0] = 0
    f.ys[0] = 0
    f.xs[1] = a
    f.ys[1] = a
    f.xs[2] = a + 2 * q
    f.ys[2] = a + q
    f.xs[3] = a + 3 * q
    f.ys[3] = a + 2 * q
    f.xs[4] = ONE
    f.ys[4] = ONE
    if idx == 0:
        for k in range(1, 4):
            f.xs[k] = f.xs[k + 1]
            f.ys[k] = f.ys[k + 1]
        f.n = 4
    cdef int64_t t
    if inverse:
        for k in range(f.n):
            t = f.xs[k]
            f.xs[k] = f.ys[k]
            f.ys[k] = t


cdef void pl_compose_letter(PL *dst, PL *F, PL *g) noexcept nogil:
    """dst = F after g (apply g first); g is a letter map, slopes in {1/2,1,2}."""
    cdef int64_t cuts[MAXPTS]
    cdef int ncuts = 0
    cdef int i = 0, j = 0
    cdef int seg, sigma
    cdef int64_t pre, t, gy
    # merge g's breakpoints with g^-1(F's breakpoints), both ascending
    cdef int64_t nxt_g, nxt_f
    cdef int fi = 0, gi = 0
    while gi < g.n or fi < F.n:
        nxt_g = g.xs[gi] if gi < g.n else ONE + 1
        if fi < F.n:
            # preimage of F.xs[fi] under g
            pre = _pl_preimage(g, F.xs[fi])
        else:
            pre = ONE + 1
        if nxt_g <= pre:
            t = nxt_g
            gi += 1
            if nxt_g == pre:
                fi += 1
        else:
            t = pre
            fi += 1
        if ncuts == 0 or cuts[ncuts - 1] != t:
            cuts[ncuts] = t
            ncuts += 1
    dst.n = ncuts
    for i in range(ncuts):
        gy = _pl_eval(g, cuts[i])
        dst.xs[i] = cuts[i]
        dst.ys[i] = _pl_eval(F, gy)
    pl_canonicalize(dst)


cdef inline int64_t _pl_preimage(PL *g, int64_t y) noexcept nogil:
    cdef int lo = 0, hi = g.n - 1, mid
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if g.ys[mid] <= y:
            lo = mid
        else:
            hi = mid
    cdef int sigma = _seg_exp(g.xs[lo], g.ys[lo], g.xs[lo + 1], g.ys[lo + 1])
    cdef int64_t dy = y - g.ys[lo]
    if sigma >= 0:
        return g.xs[lo] + (dy >> sigma)
    return g.xs[lo] + (dy << (-sigma))


cdef inline int64_t _pl_eval(PL *f, int64_t t) noexcept nogil:
    cdef int lo = 0, hi = f.n - 1, mid
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if f.xs[mid] <= t:
            lo = mid
        else:
            hi = mid
    cdef int sigma = _seg_exp(f.xs[lo], f.ys[lo], f.xs[lo + 1], f.ys[lo + 1])
    cdef int64_t dt = t - f.xs[lo]
    if sigma >= 0:
        return f.ys[lo] + (dt << sigma)
    return f.ys[lo] + (dt >> (-sigma))


cdef bint pl_equal(PL *a, PL *b) noexcept nogil:
    cdef int k
    if a.n != b.n:
        return False
    for k in range(a.n):
        if a.xs[k] != b.xs[k] or a.ys[k] != b.ys[k]:
            return False
    return True


# -- normal-form engine on run arrays ----------------------------------------

cdef struct NF:
    int np
    int nn
    int pos[MAXRUNS][2]
    int neg[MAXRUNS][2]


cdef void nf_copy(NF *dst, NF *src) noexcept nogil:
    cdef int k
    dst.np = src.np
    dst.nn = src.nn
    for k in range(src.np):
        dst.pos[k][0] = src.pos[k][0]
        dst.pos[k][1] = src.pos[k][1]
    for k in range(src.nn):
        dst.neg[k][0] = src.neg[k][0]
        dst.neg[k][1] = src.neg[k][1]


cdef void nf_mul_letter(NF *f, int index, int sign) noexcept nogil:
    cdef int k = index
    cdef int t = 0, s, r
    if sign == -1:
        while t < f.nn:
            if f.neg[t][0] < k:
                k += f.neg[t][1]
                t += 1
            elif f.neg[t][0] == k:
                f.neg[t][1] += 1
                return
            else:
                break
        for s in range(f.nn, t, -1):
            f.neg[s][0] = f.neg[s - 1][0]
            f.neg[s][1] = f.neg[s - 1][1]
        f.neg[t][0] = k
        f.neg[t][1] = 1
        f.nn += 1
        return
    t = 0
    while t < f.nn:
        if f.neg[t][0] < k:
            k += f.neg[t][1]
            t += 1
        elif f.neg[t][0] == k:
            f.neg[t][1] -= 1
            if f.neg[t][1] == 0:
                for s in range(t, f.nn - 1):
                    f.neg[s][0] = f.neg[s + 1][0]
                    f.neg[s][1] = f.neg[s + 1][1]
                f.nn -= 1
            return
        else:
            break
    for s in range(t, f.nn):
        f.neg[s][0] += 1
    s = f.np
    while s > 0:
        if f.pos[s - 1][0] > k:
            f.pos[s - 1][0] += 1
            s -= 1
        elif f.pos[s - 1][0] == k:
            f.pos[s - 1][1] += 1
            return
        else:
            break
    for r in range(f.np, s, -1):
        f.pos[r][0] = f.pos[r - 1][0]
        f.pos[r][1] = f.pos[r - 1][1]
    f.pos[s][0] = k
    f.pos[s][1] = 1
    f.np += 1


cdef void nf_cleanup(NF *f) noexcept nogil:
    # uniqueness condition: index in both parts needs index+1 in one of them
    cdef int pi, ni, i, k
    cdef bint again = True
    while again:
        again = False
        pi = 0
        ni = 0
        while pi < f.np and ni < f.nn:
            if f.pos[pi][0] < f.neg[ni][0]:
                pi += 1
            elif f.pos[pi][0] > f.neg[ni][0]:
                ni += 1
            else:
                i = f.pos[pi][0]
                if not _nf_has_index(f, i + 1):
                    _nf_drop_pair(f, i)
                    again = True
                    break
                pi += 1
                ni += 1


cdef inline bint _nf_has_index(NF *f, int i) noexcept nogil:
    cdef int k
    for k in range(f.np):
        if f.pos[k][0] == i:
            return True
    for k in range(f.nn):
        if f.neg[k][0] == i:
            return True
    return False


cdef void _nf_drop_pair(NF *f, int i) noexcept nogil:
    cdef int k, s
    for k in range(f.np):
        if f.pos[k][0] == i:
            f.pos[k][1] -= 1
        elif f.pos[k][0] > i:
            f.pos[k][0] -= 1
    for k in range(f.nn):
        if f.neg[k][0] == i:
            f.neg[k][1] -= 1
        elif f.neg[k][0] > i:
            f.neg[k][0] -= 1
    s = 0
    for k in range(f.np):
        if f.pos[k][1] > 0:
            f.pos[s][0] = f.pos[k][0]
            f.pos[s][1] = f.pos[k][1]
            s += 1
    f.np = s
    s = 0
    for k in range(f.nn):
        if f.neg[k][1] > 0:
            f.neg[s][0] = f.neg[k][0]
            f.neg[s][1] = f.neg[k][1]
            s += 1
    f.nn = s


cdef void pl_of_nf(PL *dst, NF *f, PL *gens, int maxgen) noexcept nogil:
    """PL map of the normal-form word, composed letter by letter."""
    cdef PL tmp
    cdef int k, c
    pl_identity(dst)
    for k in range(f.np):
        for c in range(f.pos[k][1]):
            pl_compose_letter(&tmp, dst, &gens[2 * f.pos[k][0]])
            dst[0] = tmp
    for k in range(f.nn - 1, -1, -1):
        for c in range(f.neg[k][1]):
            pl_compose_letter(&tmp, dst, &gens[2 * f.neg[k][0] + 1])
            dst[0] = tmp


def thompson_agreement_scan(int max_len, int max_index, int failure_cap=10):
    """Check engine-vs-model agreement on every freely reduced word of
    length <= max_len over indices <= max_index.  Returns a dict with the
    word count, distinct failure examples, and the backend tag."""
    if max_len > MAXDEPTH - 2:
        raise ValueError(f"max_len too large for compiled kernel (<= {MAXDEPTH - 2})")
    cdef int ngen = max_index + 1 + max_len + 2  # headroom: shifts raise indices
    if ngen > 40:
        raise ValueError("index range too large")
    cdef PL gens[84]
    cdef int k
    for k in range(ngen):
        pl_generator(&gens[2 * k], k, False)
        pl_generator(&gens[2 * k + 1], k, True)

    cdef PL plstack[MAXDEPTH]
    cdef NF nfstack[MAXDEPTH]
    cdef int letter_ix[MAXDEPTH]   # current letter code per depth
    cdef int word_ix[MAXDEPTH]
    cdef int word_sg[MAXDEPTH]
    cdef PL plnf
    cdef int nletters = 2 * (max_index + 1)
    cdef long long words = 0
    cdef int depth = 0
    cdef int code, idx, sg, prev
    failures = []

    pl_identity(&plstack[0])
    nfstack[0].np = 0
    nfstack[0].nn = 0
    letter_ix[0] = -1

    # check the empty word
    pl_of_nf(&plnf, &nfstack[0], gens, ngen)
    words += 1
    if not pl_equal(&plnf, &plstack[0]):
        failures.append(((), ()))

    while depth >= 0:
        letter_ix[depth] += 1
        code = letter_ix[depth]
        if code >= nletters or depth >= max_len:
            depth -= 1
            continue
        idx = code >> 1
        sg = 1 if (code & 1) == 0 else -1
        if depth > 0 and word_ix[depth - 1] == idx and word_sg[depth - 1] == -sg:
            continue  # not freely reduced
        word_ix[depth] = idx
        word_sg[depth] = sg
        pl_compose_letter(&plstack[depth + 1], &plstack[depth], &gens[2 * idx + (0 if sg == 1 else 1)])
        nf_copy(&nfstack[depth + 1], &nfstack[depth])
        nf_mul_letter(&nfstack[depth + 1], idx, sg)
        nf_cleanup(&nfstack[depth + 1])
        words += 1
        pl_of_nf(&plnf, &nfstack[depth + 1], gens, ngen)
        if not pl_equal(&plnf, &plstack[depth + 1]):
            if len(failures) < failure_cap:
                word = tuple((word_ix[d], word_sg[d]) for d in range(depth + 1))
                nfw = _nf_tuple(&nfstack[depth + 1])
                failures.append((word, nfw))
        depth += 1
        letter_ix[depth] = -1

    return {"words": int(words), "failures": failures, "backend": "compiled"}


cdef _nf_tuple(NF *f):
    pos = tuple((f.pos[k][0], f.pos[k][1]) for k in range(f.np))
    neg = tuple((f.neg[k][0], f.neg[k][1]) for k in range(f.nn))
    return (pos, neg)
