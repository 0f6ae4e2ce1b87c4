"""Finite truncations of subgroup families, the admissibility and stability
axioms, and the degree-0 / degree-1 cohomological functors on finite modules.

A FamilyTruncation is explicit certified data over a finite coset-table
group: nodes (subgroup handles with tables), the inclusion order, the
conjugation action by ambient generator letters, and the verified
normal-inclusion pairs.  Nothing is inferred at check time; checks re-verify
the certificates they rely on.

Module convention: right action of the group on row vectors over F_p.
Derivations satisfy d(gh) = d(g).h + d(h), hence d(x^-1) = -d(x).x^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import modp
from .groups import GroupContext, Incomplete, element_key, group_elements, is_trivial, regular_table
from .subgroups import SubgroupHandle, contains, finite_subgroup
from .words import Word, exponent_vector, generator, invert

Letter = tuple[int, int]


@dataclass(frozen=True)
class FamilyTruncation:
    ctx: GroupContext
    nodes: tuple[SubgroupHandle, ...]
    members: tuple[tuple[Word, ...], ...]
    order: frozenset  # pairs (i, j): node i <= node j, reflexive
    conjugation_action: tuple  # sorted ((node, letter), node) pairs, total
    normal_in: frozenset  # pairs (i, j): node i normal in node j

    def conj(self, node: int, letter: Letter) -> int:
        return self._conj_map[(node, letter)]

    @property
    def _conj_map(self) -> dict:
        return dict(self.conjugation_action)

    def conj_by_word(self, node: int, w: Word) -> int:
        for letter in w.letters:
            node = self.conj(node, letter)
        return node

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def bottom(self) -> int:
        for i in range(len(self.nodes)):
            if all(self.leq(i, j) for j in range(len(self.nodes))):
                return i
        raise ValueError("truncation has no global lower-bound node")


def _node_members(ctx: GroupContext, handle: SubgroupHandle) -> tuple[Word, ...]:
    return tuple(g for g in group_elements(ctx) if handle.coset_table.coset_of(g) == 0)


def _key_set(ctx: GroupContext, elements) -> frozenset:
    return frozenset(element_key(ctx, e) for e in elements)


def _signed_letters(ctx: GroupContext) -> list[Letter]:
    out = []
    for i in range(ctx.generator_count):
        out.append((i, 1))
        out.append((i, -1))
    return out


def truncation(ctx: GroupContext, node_generator_lists, close: bool = True) -> FamilyTruncation:
    """Build a certified truncation over a finite coset-table group.

    Starts from the given generator lists, optionally closes the node set
    under conjugation by ambient generator letters, and certifies order,
    conjugation action, and normality pairs exhaustively."""
    if ctx.oracle != "coset-table":
        raise ValueError("truncations are built over finite coset-table groups")
    if isinstance(regular_table(ctx), Incomplete):
        raise ValueError("ambient group enumeration incomplete")
    handles = []
    key_sets = []
    for gens in node_generator_lists:
        h = finite_subgroup(ctx, tuple(gens))
        ks = _key_set(ctx, _node_members(ctx, h))
        if ks not in key_sets:
            key_sets.append(ks)
            handles.append(h)
    letters = _signed_letters(ctx)
    i = 0
    while i < len(handles):
        h = handles[i]
        for letter in letters:
            l_word = generator(*letter)
            conj_gens = tuple(invert(l_word) * g * l_word for g in h.generators)
            ks = _key_set(ctx, (invert(l_word) * m * l_word for m in _node_members(ctx, h)))
            if ks not in key_sets:
                if not close:
                    raise ValueError("node set is not closed under conjugation")
                key_sets.append(ks)
                handles.append(finite_subgroup(ctx, conj_gens))
        i += 1
    members = tuple(_node_members(ctx, h) for h in handles)
    n = len(handles)
    order = frozenset((i, j) for i in range(n) for j in range(n)
                      if key_sets[i] <= key_sets[j])
    conj_pairs = []
    for i in range(n):
        for letter in letters:
            l_word = generator(*letter)
            ks = _key_set(ctx, (invert(l_word) * m * l_word for m in members[i]))
            conj_pairs.append(((i, letter), key_sets.index(ks)))
    normal = set()
    for i, j in order:
        ok = all(element_key(ctx, invert(h) * m * h) in key_sets[i]
                 for h in members[j] for m in members[i])
        if ok:
            normal.add((i, j))
    return FamilyTruncation(ctx=ctx, nodes=tuple(handles), members=members,
                            order=order, conjugation_action=tuple(sorted(conj_pairs)),
                            normal_in=frozenset(normal))


def check_admissible(fam: FamilyTruncation) -> dict:
    """Re-verifies conjugation closure and downward directedness."""
    violations = []
    letters = _signed_letters(fam.ctx)
    conj_map = fam._conj_map
    key_sets = [_key_set(fam.ctx, ms) for ms in fam.members]
    conj_ok = True
    for i in range(len(fam.nodes)):
        for letter in letters:
            target = conj_map.get((i, letter))
            if target is None:
                conj_ok = False
                violations.append(f"no conjugation target for node {i} by letter {letter}")
                continue
            l_word = generator(*letter)
            ks = _key_set(fam.ctx, (invert(l_word) * m * l_word for m in fam.members[i]))
            if ks != key_sets[target]:
                conj_ok = False
                violations.append(f"conjugate of node {i} by {letter} is not node {target}")
    directed = True
    for i in range(len(fam.nodes)):
        for j in range(i, len(fam.nodes)):
            if not any(fam.leq(l, i) and fam.leq(l, j) for l in range(len(fam.nodes))):
                directed = False
                violations.append(f"nodes ({i}, {j}) have no lower bound in the truncation")
    return {"conjugation_closed": conj_ok, "downward_directed": directed,
            "violations": violations}


def check_stable(fam: FamilyTruncation) -> dict:
    """For every certified inclusion K <= H, finds a node L <= K normal in H
    (normality re-verified at generator level).  Returns the failing pair as
    the witness otherwise."""
    choices = {}
    for (k, h) in sorted(fam.order):
        found = None
        for l in range(len(fam.nodes)):
            if not (fam.leq(l, k) and (l, h) in fam.normal_in):
                continue
            if _reverify_normal(fam, l, h):
                found = l
                break
        if found is None:
            return {"stable": False, "witness": (k, h), "choices": None}
        choices[(k, h)] = found
    return {"stable": True, "witness": None, "choices": choices}


def _reverify_normal(fam: FamilyTruncation, l: int, h: int) -> bool:
    node_l = fam.nodes[l]
    for hg in fam.nodes[h].generators:
        for sign in (1, -1):
            conj = hg if sign == 1 else invert(hg)
            for lg in node_l.generators:
                if contains(node_l, invert(conj) * lg * conj) is not True:
                    return False
    return True


# ---------------------------------------------------------------------------
# finite modules


@dataclass(frozen=True)
class FiniteModule:
    dimension: int
    p: int
    matrices: tuple  # one per ambient generator, right action on rows
    inverses: tuple


def finite_module(ctx: GroupContext, matrices, p: int = 2) -> FiniteModule:
    """Validated module: matrices invertible, relators act as the identity."""
    mats = tuple(modp.mat_mod(m, p) for m in matrices)
    if ctx.presentation.schema is not None:
        raise ValueError("finite modules need a finitely generated presentation")
    if len(mats) != ctx.generator_count:
        raise ValueError("one matrix per ambient generator required")
    dim = len(mats[0]) if mats else 0
    inverses = []
    for m in mats:
        if len(m) != dim or any(len(row) != dim for row in m):
            raise ValueError("matrices must be square and of equal size")
        inv = modp.mat_inverse(m, p)
        if inv is None:
            raise ValueError("generator matrix is singular")
        inverses.append(inv)
    module = FiniteModule(dimension=dim, p=p, matrices=mats, inverses=tuple(inverses))
    for r in ctx.presentation.relators:
        if word_matrix(module, r) != modp.identity_matrix(dim):
            raise ValueError("a relator does not act as the identity matrix")
    return module


def word_matrix(module: FiniteModule, w: Word):
    acc = modp.identity_matrix(module.dimension)
    for index, sign in w.letters:
        m = module.matrices[index] if sign > 0 else module.inverses[index]
        acc = modp.mat_mul(acc, m, module.p)
    return acc


def trivial_module(ctx: GroupContext, dim: int = 1, p: int = 2) -> FiniteModule:
    eye = modp.identity_matrix(dim)
    return finite_module(ctx, tuple(eye for _ in range(ctx.generator_count)), p)


def permutation_module(ctx: GroupContext, table, p: int = 2) -> FiniteModule:
    """Module on the cosets of a table; generator g sends e_c to e_{c.g}."""
    dim = table.coset_count
    mats = []
    for i in range(table.ngens):
        rows = [[0] * dim for _ in range(dim)]
        for c in range(dim):
            rows[c][table.action[c][2 * i]] = 1
        mats.append(tuple(tuple(r) for r in rows))
    return finite_module(ctx, tuple(mats), p)


def regular_module(ctx: GroupContext, p: int = 2) -> FiniteModule:
    table = regular_table(ctx)
    if isinstance(table, Incomplete):
        raise ValueError("regular module needs a finished enumeration")
    return permutation_module(ctx, table, p)


def parse_module_matrices(text: str):
    """Row-major integer matrices, one block per generator, blank-line separated."""
    blocks = [b for b in text.replace("\r", "").split("\n\n") if b.strip()]
    mats = []
    for block in blocks:
        rows = []
        for line in block.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append(tuple(int(tok) for tok in line.split()))
        if rows and any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix blocks must be square")
        mats.append(tuple(rows))
    return tuple(mats)


# ---------------------------------------------------------------------------
# degree-0 functors


def node_fixed_space(module: FiniteModule, fam: FamilyTruncation, node: int):
    gens = fam.nodes[node].generators
    mats = [word_matrix(module, g) for g in gens]
    return modp.fixed_space(mats, module.p, dim=module.dimension)


def h0_S(module: FiniteModule, fam: FamilyTruncation):
    """Union of the node fixed subspaces = fixed space of the bottom node.

    Verifies the union claim (every node's fixed space sits inside the
    bottom one) and closure under every ambient generator matrix."""
    bottom = fam.bottom()
    basis = node_fixed_space(module, fam, bottom)
    for node in range(len(fam.nodes)):
        for v in node_fixed_space(module, fam, node):
            if not modp.in_span(basis, v, module.p):
                raise RuntimeError("node fixed space escapes the bottom node: "
                                   "truncation is not downward directed")
    for m in module.matrices:
        for v in basis:
            if not modp.in_span(basis, modp.vec_mat(v, m, module.p), module.p):
                raise RuntimeError("computed subspace is not a submodule")
    return basis


def h0_G_mod_S(module: FiniteModule, fam: FamilyTruncation):
    """Simultaneous fixed space of the ambient generators; input must equal
    its own h0_S (an object of the subcategory)."""
    basis = h0_S(module, fam)
    if len(basis) != module.dimension:
        raise ValueError("module is not an object of the subcategory: "
                         "h0_S is a proper subspace")
    return modp.fixed_space(list(module.matrices), module.p, dim=module.dimension)


def restrict_to_h0s(module: FiniteModule, fam: FamilyTruncation):
    """The submodule on the h0_S basis; returns (module, basis rows)."""
    basis = h0_S(module, fam)
    p = module.p
    mats = []
    for m in module.matrices:
        rows = []
        for v in basis:
            coords = modp.solve_linear_combination(basis, modp.vec_mat(v, m, p), p)
            if coords is None:
                raise RuntimeError("h0_S basis is not closed under the action")
            rows.append(coords)
        mats.append(tuple(rows))
    sub = FiniteModule(dimension=len(basis), p=p, matrices=tuple(mats),
                       inverses=tuple(modp.mat_inverse(m, p) for m in mats))
    return sub, basis


# ---------------------------------------------------------------------------
# derivations


def derivation_eval(module: FiniteModule, delta, w: Word):
    """Evaluate the derivation with generator values delta on a word via
    d(u l) = d(u).l + d(l)."""
    p = module.p
    acc = modp.zero_vector(module.dimension)
    for index, sign in w.letters:
        if sign > 0:
            step = delta[index]
            mat = module.matrices[index]
        else:
            inv = module.inverses[index]
            step = modp.vec_scale(modp.vec_mat(delta[index], inv, p), p - 1, p)
            mat = inv
        acc = modp.vec_add(modp.vec_mat(acc, mat, p), step, p)
    return acc


def h1_derivations(ctx: GroupContext, module: FiniteModule) -> dict:
    """Solve the relator-expansion linear system for derivations and quotient
    by inner derivations; returns dimensions and bases."""
    pres = ctx.presentation
    if pres.schema is not None:
        raise ValueError("derivation computation needs explicit relators")
    n = ctx.generator_count
    d = module.dimension
    p = module.p
    relators = pres.relators
    # Unknown row vector: concatenation of d(x_0), ..., d(x_{n-1}).
    columns = []
    for r in relators:
        blocks = [[modp.zero_vector(d) for _ in range(d)] for _ in range(n)]
        letters = r.letters
        for t, (index, sign) in enumerate(letters):
            suffix = Word(letters[t + 1:])
            smat = word_matrix(module, suffix)
            if sign > 0:
                coeff = smat
            else:
                coeff = modp.mat_mul(module.inverses[index], smat, p)
                coeff = tuple(modp.vec_scale(row, p - 1, p) for row in coeff)
            blocks[index] = [modp.vec_add(blocks[index][row], coeff[row], p)
                             for row in range(d)]
        columns.append(blocks)
    if relators:
        big = []
        for i in range(n):
            for row in range(d):
                flat = []
                for blocks in columns:
                    flat.extend(blocks[i][row])
                big.append(tuple(flat))
        der_basis = modp.left_nullspace(tuple(big), p)
    else:
        der_basis = modp.identity_matrix(n * d)
    ider_rows = []
    for j in range(d):
        e = tuple(1 if t == j else 0 for t in range(d))
        flat = []
        for i in range(n):
            moved = modp.vec_mat(e, module.matrices[i], p)
            flat.extend(modp.vec_sub(moved, e, p))
        ider_rows.append(tuple(flat))
    ider_basis = modp.row_space(ider_rows, p)
    for v in ider_basis:
        if not modp.in_span(der_basis, v, p) and relators:
            raise RuntimeError("inner derivation fails the relator system")
    for v in der_basis:
        delta = tuple(v[i * d:(i + 1) * d] for i in range(n))
        for r in relators:
            if any(derivation_eval(module, delta, r)):
                raise RuntimeError("solution fails the independent relator re-check")
    dim_der = len(der_basis)
    dim_ider = len(ider_basis)
    return {"dim_der": dim_der, "dim_ider": dim_ider, "dim_h1": dim_der - dim_ider,
            "der_basis": der_basis, "ider_basis": ider_basis}


def h1_trivial_expected(ctx: GroupContext, p: int = 2) -> int:
    """dim H^1(G, F_p trivial) from the abelianization: free rank plus the
    count of p-divisible elementary divisors of the relator exponent matrix."""
    from ._intlinalg import smith_diagonal

    n = ctx.generator_count
    rows = [exponent_vector(r, n) for r in ctx.presentation.relators]
    diag = smith_diagonal(rows, n)
    free_rank = n - len(diag)
    torsion = sum(1 for dd in diag if dd and dd % p == 0)
    return free_rank + torsion
