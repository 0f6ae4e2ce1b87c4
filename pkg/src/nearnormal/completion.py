"""Truncated completion of a group along a finite subgroup family.

An element assigns to every truncation node H a right coset of H, subject to
compatibility: the projection K\\G -> H\\G induced by an inclusion K <= H must
carry the K-value to the H-value.  The product twists the right factor by the
conjugate node, f.f'(H) = f(H) f'(H^f), which makes the set a monoid; over a
stable family the explicit inversion algorithm makes it a group.

Assignments are tuples of coset ids aligned with fam.nodes.  Representative
words are always the stored table representatives, so every operation is
deterministic; well-definedness under different choices is a property checked
by the test suite, not assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import modp
from .families import FamilyTruncation, FiniteModule, check_stable, word_matrix
from .words import Word, invert

ENUM_CEILING = 10 ** 6


class MissingNodeError(ValueError):
    """The inversion algorithm needs a node the truncation does not contain."""


@dataclass(frozen=True)
class CompletionElement:
    assignment: tuple  # coset id per truncation node, in fam.nodes order


@dataclass(frozen=True)
class TruncatedCompletion:
    fam: FamilyTruncation
    elements: tuple  # every compatible assignment, sorted


def _tables(fam: FamilyTruncation):
    return [h.coset_table for h in fam.nodes]


def _compatible_pair(fam: FamilyTruncation, i: int, j: int, ci: int, cj: int) -> bool:
    rep = fam.nodes[i].coset_table.representatives[ci]
    return fam.nodes[j].coset_table.coset_of(rep) == cj


def is_compatible(fam: FamilyTruncation, assignment) -> bool:
    n = len(fam.nodes)
    for i in range(n):
        for j in range(n):
            if i != j and fam.leq(i, j):
                if not _compatible_pair(fam, i, j, assignment[i], assignment[j]):
                    return False
    return True


def _enumerate_assignments(fam: FamilyTruncation, ceiling: int):
    tables = _tables(fam)
    n = len(tables)
    out = []
    assignment = [0] * n

    def fill(pos: int):
        if pos == n:
            out.append(tuple(assignment))
            if len(out) > ceiling:
                raise ValueError(f"completion enumeration exceeds ceiling {ceiling}")
            return
        for c in range(tables[pos].coset_count):
            ok = True
            for prev in range(pos):
                if fam.leq(prev, pos) and not _compatible_pair(fam, prev, pos,
                                                               assignment[prev], c):
                    ok = False
                    break
                if fam.leq(pos, prev) and not _compatible_pair(fam, pos, prev,
                                                               c, assignment[prev]):
                    ok = False
                    break
            if ok:
                assignment[pos] = c
                fill(pos + 1)
        assignment[pos] = 0

    fill(0)
    return sorted(out)


def truncated_completion(fam: FamilyTruncation, ceiling: int = ENUM_CEILING) -> TruncatedCompletion:
    elems = tuple(CompletionElement(a) for a in _enumerate_assignments(fam, ceiling))
    return TruncatedCompletion(fam=fam, elements=elems)


def enumerate_completion(tc: TruncatedCompletion) -> list:
    """Recomputes the compatible assignments from scratch."""
    return [CompletionElement(a) for a in _enumerate_assignments(tc.fam, ENUM_CEILING)]


def identity_element(tc: TruncatedCompletion) -> CompletionElement:
    return CompletionElement(tuple(0 for _ in tc.fam.nodes))


def embed(g: Word, tc: TruncatedCompletion) -> CompletionElement:
    return CompletionElement(tuple(h.coset_table.coset_of(g) for h in tc.fam.nodes))


def _representative(tc: TruncatedCompletion, node: int, f: CompletionElement) -> Word:
    return tc.fam.nodes[node].coset_table.representatives[f.assignment[node]]


def conj_node(tc: TruncatedCompletion, node: int, f: CompletionElement) -> int:
    """The node H^f = H^x for any representative x of f(H)."""
    return tc.fam.conj_by_word(node, _representative(tc, node, f))


def multiply(tc: TruncatedCompletion, f: CompletionElement,
             f2: CompletionElement) -> CompletionElement:
    """f.f'(H) = f(H) f'(H^f), evaluated through table representatives."""
    if len(f.assignment) != len(f2.assignment) or len(f.assignment) != len(tc.fam.nodes):
        raise ValueError("elements belong to different truncations")
    values = []
    for node in range(len(tc.fam.nodes)):
        x = _representative(tc, node, f)
        x2 = _representative(tc, conj_node(tc, node, f), f2)
        values.append(tc.fam.nodes[node].coset_table.coset_of(x * x2))
    out = tuple(values)
    if not is_compatible(tc.fam, out):
        raise RuntimeError("product violates the compatibility invariant")
    return CompletionElement(out)


def _node_index(fam: FamilyTruncation, node: int) -> int:
    return fam.nodes[node].coset_table.coset_count


def invert_stable(tc: TruncatedCompletion, f: CompletionElement) -> CompletionElement:
    """Inversion over a stable family: per node H, with x a representative of
    f(H), pick a node K <= H meet H^f normal in H^f, take t representing the
    value at K^(x^-1), and set the H-value to the coset of t^-1.  Nodes K are
    tried in increasing index order."""
    fam = tc.fam
    stab = check_stable(fam)
    if not stab["stable"]:
        raise ValueError(f"family is not stable, witness {stab['witness']}")
    n = len(fam.nodes)
    values = []
    for node in range(n):
        x = _representative(tc, node, f)
        hf = conj_node(tc, node, f)
        candidates = [k for k in range(n)
                      if fam.leq(k, node) and fam.leq(k, hf) and (k, hf) in fam.normal_in]
        if not candidates:
            raise MissingNodeError(
                f"no truncation node below nodes {node} and {hf} is normal in {hf}")
        k = min(candidates, key=lambda c: (_node_index(fam, c), c))
        kx = fam.conj_by_word(k, invert(x))
        t = _representative(tc, kx, f)
        values.append(fam.nodes[node].coset_table.coset_of(invert(t)))
    out = CompletionElement(tuple(values))
    e = identity_element(tc)
    if multiply(tc, out, f) != e or multiply(tc, f, out) != e:
        raise RuntimeError("inversion output fails the two-sided inverse law")
    return out


def act(tc: TruncatedCompletion, m, f: CompletionElement, module: FiniteModule):
    """Module action m.f = m.x where x represents f(H) for any node H whose
    generators all fix m."""
    fam = tc.fam
    vec = modp.vec_mod(m, module.p)
    for node in range(len(fam.nodes)):
        if all(modp.vec_mat(vec, word_matrix(module, g), module.p) == vec
               for g in fam.nodes[node].generators):
            x = _representative(tc, node, f)
            return modp.vec_mat(vec, word_matrix(module, x), module.p)
    raise ValueError("no truncation node fixes the vector: it is outside h0_S")


def invertibility_scan(tc: TruncatedCompletion) -> dict:
    """Exhaustive two-sided inverse search; reports elements with none."""
    e = identity_element(tc)
    witnesses = []
    for f in tc.elements:
        if not any(multiply(tc, f, g) == e and multiply(tc, g, f) == e
                   for g in tc.elements):
            witnesses.append(f.assignment)
    return {"total": len(tc.elements),
            "invertible": len(tc.elements) - len(witnesses),
            "non_invertible_witnesses": witnesses}


def profinite_compare(tc: TruncatedCompletion) -> bool:
    """When every node is normal in the ambient group, the completion must
    agree with the inverse limit of the quotient groups: same underlying
    tuples, and the twisted product equals the componentwise coset product.
    Compares the full multiplication tables."""
    fam = tc.fam
    letters = []
    for i in range(fam.ctx.generator_count):
        letters.extend(((i, 1), (i, -1)))
    for node in range(len(fam.nodes)):
        if any(fam.conj(node, letter) != node for letter in letters):
            raise ValueError(f"node {node} is not normal in the ambient group")
    quotient_product = []
    for h in fam.nodes:
        table = h.coset_table
        reps = table.representatives
        quotient_product.append(
            tuple(tuple(table.coset_of(reps[c1] * reps[c2])
                        for c2 in range(table.coset_count))
                  for c1 in range(table.coset_count)))
    element_set = {f.assignment for f in tc.elements}
    if identity_element(tc).assignment not in element_set:
        return False
    for f in tc.elements:
        for f2 in tc.elements:
            limit = tuple(quotient_product[node][f.assignment[node]][f2.assignment[node]]
                          for node in range(len(fam.nodes)))
            if limit not in element_set:
                return False
            if multiply(tc, f, f2).assignment != limit:
                return False
    return True


def completion_is_group(tc: TruncatedCompletion) -> bool:
    report = invertibility_scan(tc)
    return not report["non_invertible_witnesses"]
