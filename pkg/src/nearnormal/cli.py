"""Command-line front end: group loading, subgroup checks, suite reports.

Subcommands cover presentations and presets (group), commensurability
oracles (subgroup), directed subgroup families with the degree-0/1 functors
(family), the completion monoid along a truncated family (completion),
coset graphs and end counting (ends), the Thompson and Baumslag-Solitar
fixtures (thompson, bs), and the named check suites (suite).

Output is JSON on stdout; --format text renders the same data as indented
key/value lines.  Word syntax everywhere: whitespace-separated atoms with
optional ^exponents (``y^-1 x y``); commas separate the words of a list;
semicolons separate family nodes.
"""

from __future__ import annotations

import itertools
import json
import pathlib
import sys

import click

from . import baumslag_solitar as bs
from . import completion, ends, families, groups, scan, subgroups, suites, thompson
from .words import Word, exponent_vector, format_word, generator, invert, parse_word

_format_option = click.option(
    "--format", "fmt", type=click.Choice(("json", "text")), default="json",
    show_default=True, help="Report format.")


def _emit(data, fmt):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2, sort_keys=True, default=str))
    else:
        for line in _text_lines(data, 0):
            click.echo(line)


def _text_lines(data, depth):
    pad = "  " * depth
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list, tuple)) and value:
                yield f"{pad}{key}:"
                yield from _text_lines(value, depth + 1)
            else:
                yield f"{pad}{key}: {_scalar(value)}"
    elif isinstance(data, (list, tuple)):
        for item in data:
            if isinstance(item, (dict, list, tuple)) and item:
                yield f"{pad}-"
                yield from _text_lines(item, depth + 1)
            else:
                yield f"{pad}- {_scalar(item)}"
    else:
        yield pad + _scalar(data)


def _scalar(value):
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, dict):
        return "{}"
    if isinstance(value, (list, tuple)):
        return "[]"
    return str(value)


# ---------------------------------------------------------------------------
# input helpers


def _load_context(spec: str) -> groups.GroupContext:
    """Accept a preset name, a presentation file path, or inline text."""
    try:
        if "\n" in spec or ":" in spec:
            return groups.context_from_text(spec)
        path = pathlib.Path(spec)
        if path.is_file():
            return groups.context_from_text(path.read_text())
        return groups.preset(spec)
    except groups.PresentationError as exc:
        raise click.ClickException(f"parse error: {exc}")
    except (OSError, ValueError) as exc:
        raise click.ClickException(str(exc))


def _word(ctx_obj: groups.GroupContext, text: str) -> Word:
    if text.strip() in ("", "1", "-"):
        return Word(())
    try:
        w = parse_word(text, ctx_obj.generator_names)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    rank = ctx_obj.generator_count
    if rank is not None:
        for index, _ in w.letters:
            if index >= rank:
                raise click.ClickException(
                    f"word {text!r} uses generator index {index}, "
                    f"but the group has rank {rank}")
    return w


def _word_list(ctx_obj, text: str) -> list:
    return [_word(ctx_obj, part) for part in text.split(",") if part.strip()]


def _default_gens(ctx_obj, text, what: str) -> list:
    if text:
        return _word_list(ctx_obj, text)
    rank = ctx_obj.generator_count
    if rank is None:
        raise click.ClickException(f"pass {what} explicitly for this group")
    return [generator(i) for i in range(rank)]


def _subgroup_from_words(ctx_obj, ws) -> subgroups.SubgroupHandle:
    """Attach the richest membership oracle the ambient context supports."""
    if not ws or all(not w for w in ws):
        return subgroups.trivial_subgroup(ctx_obj)
    if ctx_obj.oracle == "coset-table":
        return subgroups.finite_subgroup(ctx_obj, tuple(ws))
    if ctx_obj.oracle == "free-abelian":
        vectors = [exponent_vector(w, ctx_obj.generator_count) for w in ws]
        return subgroups.lattice_subgroup(ctx_obj, vectors)
    if ctx_obj.oracle == "free" and len(ws) == 1:
        return subgroups.free_cyclic_subgroup(ctx_obj, ws[0])
    if ctx_obj.oracle == "britton" and len(ws) == 1:
        handle = _britton_subgroup(ctx_obj, ws[0])
        if handle is not None:
            return handle
    raise click.ClickException(
        f"no membership oracle for this generating set under "
        f"the {ctx_obj.oracle!r} context")


def _britton_subgroup(ctx_obj, w: Word):
    """Conjugates of powers of x are the decidable one-generator case."""
    mp, np = ctx_obj.bs_params
    form = bs.britton_reduce(w, mp, np)
    if form.is_power_of_x():
        if form.head == 0:
            return subgroups.trivial_subgroup(ctx_obj)
        return subgroups.power_subgroup(ctx_obj, abs(form.head))
    letters = list(w.letters)
    strip = 0
    while (len(letters) >= 2 and letters[0][0] == letters[-1][0]
           and letters[0][1] == -letters[-1][1]):
        letters.pop()
        letters.pop(0)
        strip += 1
    if strip == 0 or not letters:
        return None
    core = bs.britton_reduce(Word(tuple(letters)), mp, np)
    if not core.is_power_of_x() or core.head == 0:
        return None
    conjugator = Word(w.letters[len(w.letters) - strip:])
    return subgroups.conjugate(
        subgroups.power_subgroup(ctx_obj, abs(core.head)), conjugator)


# ---------------------------------------------------------------------------


@click.group()
def main():
    """Commensurability, subgroup families, completions, and ends."""


# ---------------------------------------------------------------------------
# group


@main.group(name="group")
def group_cmd():
    """Load, canonicalize, and summarize group presentations."""


@group_cmd.command(name="parse")
@click.argument("spec")
def group_parse(spec):
    """Print the canonical text form of SPEC.

    SPEC is a preset name, a presentation file path, or inline text in the
    ``gens:``/``rels:``/``oracle:`` format.  Malformed input is rejected
    with a line/column diagnostic.
    """
    ctx_obj = _load_context(spec)
    try:
        text = groups.serialize_presentation(ctx_obj.presentation, ctx_obj.oracle)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(text, nl=False)


@group_cmd.command(name="show")
@click.argument("spec")
@_format_option
def group_show(spec, fmt):
    """Summarize generators, relators, oracle, and order when finite."""
    ctx_obj = _load_context(spec)
    pres = ctx_obj.presentation
    names = pres.generator_names
    data = {
        "name": ctx_obj.name or None,
        "oracle": ctx_obj.oracle,
        "schema": pres.schema,
        "generators": list(names) if names is not None else None,
        "relators": [format_word(r, names) for r in pres.relators],
        "order": None,
    }
    if ctx_obj.oracle == "coset-table":
        table = groups.regular_table(ctx_obj)
        if isinstance(table, groups.Incomplete):
            data["order"] = f"unknown (enumeration incomplete at {table.limit} cosets)"
        else:
            data["order"] = table.coset_count
    _emit(data, fmt)


# ---------------------------------------------------------------------------
# subgroup


@main.group(name="subgroup")
def subgroup_cmd():
    """Commensurability and near-normality of subgroup pairs."""


@subgroup_cmd.command(name="commensurable")
@click.option("--group", "group_spec", required=True,
              help="Ambient group (preset, file, or inline text).")
@click.option("--h", "h_text", required=True,
              help="Generators of H, comma-separated words.")
@click.option("--k", "k_text", required=True,
              help="Generators of K, comma-separated words.")
@click.option("--bound", default=50, show_default=True,
              help="Index search bound.")
@_format_option
def subgroup_commensurable(group_spec, h_text, k_text, bound, fmt):
    """Decide whether H and K share a finite-index common subgroup."""
    ctx_obj = _load_context(group_spec)
    h = _subgroup_from_words(ctx_obj, _word_list(ctx_obj, h_text))
    k = _subgroup_from_words(ctx_obj, _word_list(ctx_obj, k_text))
    report = subgroups.commensurability_report(h, k, bound)
    _emit({"group": group_spec, "h": h_text, "k": k_text, "bound": bound,
           "result": report["result"], "indices": report["indices"],
           "certificate": report["certificate"]}, fmt)


@subgroup_cmd.command(name="near-normal")
@click.option("--group", "group_spec", required=True)
@click.option("--h", "h_text", required=True,
              help="Generators of H, comma-separated words.")
@click.option("--gens", "gens_text", default=None,
              help="Conjugating elements; defaults to the group generators.")
@click.option("--bound", default=50, show_default=True)
@_format_option
def subgroup_near_normal(group_spec, h_text, gens_text, bound, fmt):
    """Check that each conjugator keeps H commensurable with itself."""
    ctx_obj = _load_context(group_spec)
    h = _subgroup_from_words(ctx_obj, _word_list(ctx_obj, h_text))
    gens = _default_gens(ctx_obj, gens_text, "--gens")
    verdict = subgroups.near_normal_on(h, gens, bound)
    _emit({"group": group_spec, "h": h_text, "bound": bound,
           "conjugators": [format_word(g, ctx_obj.generator_names) for g in gens],
           "near_normal": verdict}, fmt)


# ---------------------------------------------------------------------------
# family


@main.group(name="family")
def family_cmd():
    """Directed subgroup families: axioms and low-degree functors."""


def _parse_nodes(ctx_obj, text: str) -> list:
    nodes = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk in ("", "-", "1"):
            nodes.append([])
        else:
            nodes.append(_word_list(ctx_obj, chunk))
    return nodes


def _build_family(ctx_obj, nodes_text: str) -> families.FamilyTruncation:
    try:
        return families.truncation(ctx_obj, _parse_nodes(ctx_obj, nodes_text))
    except ValueError as exc:
        raise click.ClickException(str(exc))


def _node_summaries(fam: families.FamilyTruncation) -> list:
    names = fam.ctx.generator_names
    out = []
    for i, node in enumerate(fam.nodes):
        out.append({
            "node": i,
            "generators": [format_word(g, names) for g in node.generators] or ["1"],
            "order": len(fam.members[i]),
            "index": node.coset_table.coset_count,
        })
    return out


def _load_module(ctx_obj, spec: str, p: int, dim: int) -> families.FiniteModule:
    if ctx_obj.generator_count is None:
        raise click.ClickException("modules need a finitely presented context")
    try:
        if spec == "trivial":
            return families.trivial_module(ctx_obj, dim=dim, p=p)
        if spec == "regular":
            return families.regular_module(ctx_obj, p=p)
        path = pathlib.Path(spec)
        if path.is_file():
            mats = families.parse_module_matrices(path.read_text())
            return families.finite_module(ctx_obj, mats, p=p)
    except (OSError, ValueError) as exc:
        raise click.ClickException(str(exc))
    raise click.ClickException(
        f"module {spec!r} is neither 'trivial', 'regular', nor a matrix file")


@family_cmd.command(name="check")
@click.option("--group", "group_spec", required=True)
@click.option("--nodes", "nodes_text", required=True,
              help="Semicolon-separated nodes, each a comma-separated "
                   "generator list; '-' is the trivial subgroup.")
@_format_option
def family_check(group_spec, nodes_text, fmt):
    """Certify a truncation: conjugation closure, directedness, stability."""
    ctx_obj = _load_context(group_spec)
    fam = _build_family(ctx_obj, nodes_text)
    adm = families.check_admissible(fam)
    stab = families.check_stable(fam)
    data = {
        "group": group_spec,
        "nodes": _node_summaries(fam),
        "admissible": adm,
        "stable": {
            "stable": stab["stable"],
            "witness": list(stab["witness"]) if stab["witness"] else None,
            "choices": ([{"pair": list(pair), "node": node}
                         for pair, node in sorted(stab["choices"].items())]
                        if stab["choices"] else None),
        },
    }
    _emit(data, fmt)


@family_cmd.command(name="h0")
@click.option("--group", "group_spec", required=True)
@click.option("--nodes", "nodes_text", required=True)
@click.option("--module", "module_spec", default="trivial", show_default=True,
              help="trivial, regular, or a matrix file (row-major integer "
                   "blocks, one per generator, blank-line separated).")
@click.option("--p", default=2, show_default=True, help="Field size (prime).")
@click.option("--dim", default=1, show_default=True,
              help="Dimension of the trivial module.")
@_format_option
def family_h0(group_spec, nodes_text, module_spec, p, dim, fmt):
    """Vectors fixed by the family, and by the ambient group when legal."""
    ctx_obj = _load_context(group_spec)
    fam = _build_family(ctx_obj, nodes_text)
    module = _load_module(ctx_obj, module_spec, p, dim)
    basis = families.h0_S(module, fam)
    data = {
        "group": group_spec, "module": module_spec, "p": module.p,
        "module_dimension": module.dimension,
        "h0_dimension": len(basis),
        "h0_basis": [list(v) for v in basis],
    }
    try:
        quotient = families.h0_G_mod_S(module, fam)
        data["ambient_fixed_dimension"] = len(quotient)
        data["ambient_fixed_basis"] = [list(v) for v in quotient]
    except ValueError:
        data["ambient_fixed_dimension"] = None
        data["ambient_fixed_basis"] = None
    _emit(data, fmt)


@family_cmd.command(name="h1")
@click.option("--group", "group_spec", required=True)
@click.option("--module", "module_spec", default="trivial", show_default=True)
@click.option("--p", default=2, show_default=True)
@click.option("--dim", default=1, show_default=True)
@_format_option
def family_h1(group_spec, module_spec, p, dim, fmt):
    """Derivations modulo inner derivations."""
    ctx_obj = _load_context(group_spec)
    module = _load_module(ctx_obj, module_spec, p, dim)
    try:
        report = families.h1_derivations(ctx_obj, module)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    _emit({"group": group_spec, "module": module_spec, "p": module.p,
           "module_dimension": module.dimension,
           "dim_derivations": report["dim_der"],
           "dim_inner": report["dim_ider"],
           "dim_h1": report["dim_h1"]}, fmt)


# ---------------------------------------------------------------------------
# completion


@main.group(name="completion")
def completion_cmd():
    """The completion monoid along a truncated subgroup family."""


_NAMED_FAMILIES = {
    ("sym3", "normal-order3"): "a b; a,b",
    ("sym3", "all-subgroups"): "-; a; b; a b a; a b; a,b",
    ("cyclic(4)", "index2"): "a^2; a",
    ("klein4", "all-subgroups"): "-; a; b; a b; a,b",
}


def _family_for(ctx_obj, family_name, nodes_text) -> families.FamilyTruncation:
    if nodes_text:
        return _build_family(ctx_obj, nodes_text)
    if not family_name:
        raise click.UsageError("pass --family NAME or --nodes LIST")
    key = (ctx_obj.name, family_name)
    if key not in _NAMED_FAMILIES:
        known = sorted(f"{g}:{f}" for g, f in _NAMED_FAMILIES)
        raise click.UsageError(
            f"no built-in family {family_name!r} for group "
            f"{ctx_obj.name or 'custom'}; built-ins: {', '.join(known)}; "
            f"or pass --nodes")
    return _build_family(ctx_obj, _NAMED_FAMILIES[key])


def _completion_options(fn):
    for opt in reversed((
            click.option("--group", "group_spec", required=True),
            click.option("--family", "family_name", default=None,
                         help="Built-in family name (normal-order3, "
                              "all-subgroups, index2)."),
            click.option("--nodes", "nodes_text", default=None,
                         help="Custom nodes, as in 'family check'."),
            click.option("--ceiling", default=completion.ENUM_CEILING,
                         show_default=True, help="Element enumeration ceiling."))):
        fn = opt(fn)
    return fn


def _completion_of(fam, ceiling):
    try:
        return completion.truncated_completion(fam, ceiling)
    except ValueError as exc:
        raise click.ClickException(str(exc))


@completion_cmd.command(name="build")
@_completion_options
@_format_option
def completion_build(group_spec, family_name, nodes_text, ceiling, fmt):
    """Enumerate the compatible coset tuples along the family."""
    ctx_obj = _load_context(group_spec)
    fam = _family_for(ctx_obj, family_name, nodes_text)
    tc = _completion_of(fam, ceiling)
    _emit({"group": group_spec, "family": family_name or "custom",
           "nodes": _node_summaries(fam),
           "element_count": len(tc.elements),
           "group_order": groups.regular_table(ctx_obj).coset_count,
           "is_group": completion.completion_is_group(tc)}, fmt)


def _law_table(ctx_obj, fam, tc):
    laws = {}
    witnesses = {}

    def record(name, ok, witness=None):
        laws[name] = "pass" if ok is True else ("fail" if ok is False else str(ok))
        if witness is not None:
            witnesses[name] = witness

    e = completion.identity_element(tc)
    bad = next((f for f in tc.elements
                if completion.multiply(tc, e, f) != f
                or completion.multiply(tc, f, e) != f), None)
    record("identity", bad is None, bad and list(bad.assignment))
    bad = next(((f, g, h) for f, g, h in itertools.product(tc.elements, repeat=3)
                if completion.multiply(tc, completion.multiply(tc, f, g), h)
                != completion.multiply(tc, f, completion.multiply(tc, g, h))), None)
    record("associativity", bad is None,
           bad and [list(t.assignment) for t in bad])
    bad = next(((f, g, node) for f, g in itertools.product(tc.elements, repeat=2)
                for node in range(len(fam.nodes))
                if completion.conj_node(tc, node, completion.multiply(tc, f, g))
                != completion.conj_node(tc, completion.conj_node(tc, node, f), g)),
               None)
    record("conjugation-cocycle", bad is None,
           bad and {"f": list(bad[0].assignment),
                    "g": list(bad[1].assignment), "node": bad[2]})
    elements = groups.group_elements(ctx_obj)
    names = ctx_obj.generator_names
    bad = next(((g1, g2) for g1 in elements for g2 in elements
                if completion.multiply(tc, completion.embed(g1, tc),
                                       completion.embed(g2, tc))
                != completion.embed(g1 * g2, tc)), None)
    record("embed-homomorphism", bad is None,
           bad and [format_word(w, names) for w in bad])
    stable = families.check_stable(fam)
    if not stable["stable"]:
        record("inverses", "unknown",
               {"reason": "family is not stable",
                "witness": list(stable["witness"])})
        record("inverse-anti-homomorphism", "unknown")
        record("inverse-necessary-condition", "unknown")
        return laws, witnesses
    try:
        inverses = {f: completion.invert_stable(tc, f) for f in tc.elements}
    except (RuntimeError, ValueError) as exc:
        record("inverses", False, str(exc))
        record("inverse-anti-homomorphism", "unknown")
        record("inverse-necessary-condition", "unknown")
        return laws, witnesses
    record("inverses", True)
    bad = next(((f, g) for f, g in itertools.product(tc.elements, repeat=2)
                if completion.invert_stable(tc, completion.multiply(tc, f, g))
                != completion.multiply(tc, inverses[g], inverses[f])), None)
    record("inverse-anti-homomorphism", bad is None,
           bad and [list(t.assignment) for t in bad])
    necessary = True
    witness = None
    for f, finv in inverses.items():
        for node in range(len(fam.nodes)):
            xrep = fam.nodes[node].coset_table.representatives[f.assignment[node]]
            hf = completion.conj_node(tc, node, f)
            if finv.assignment[hf] != fam.nodes[hf].coset_table.coset_of(invert(xrep)):
                necessary = False
                witness = {"f": list(f.assignment), "node": node}
    record("inverse-necessary-condition", necessary, witness)
    return laws, witnesses


@completion_cmd.command(name="laws")
@_completion_options
@_format_option
def completion_laws(group_spec, family_name, nodes_text, ceiling, fmt):
    """Exhaustively verify the monoid and inversion laws."""
    ctx_obj = _load_context(group_spec)
    fam = _family_for(ctx_obj, family_name, nodes_text)
    tc = _completion_of(fam, ceiling)
    laws, witnesses = _law_table(ctx_obj, fam, tc)
    _emit({"group": group_spec, "family": family_name or "custom",
           "element_count": len(tc.elements),
           "laws": laws, "witnesses": witnesses}, fmt)


@completion_cmd.command(name="scan")
@_completion_options
@_format_option
def completion_scan(group_spec, family_name, nodes_text, ceiling, fmt):
    """Search every element for a two-sided inverse."""
    ctx_obj = _load_context(group_spec)
    fam = _family_for(ctx_obj, family_name, nodes_text)
    tc = _completion_of(fam, ceiling)
    report = completion.invertibility_scan(tc)
    _emit({"group": group_spec, "family": family_name or "custom",
           "element_count": report["total"],
           "invertible": report["invertible"],
           "non_invertible": report["total"] - report["invertible"],
           "non_invertible_witnesses":
               [list(a) for a in report["non_invertible_witnesses"]]}, fmt)


# ---------------------------------------------------------------------------
# ends


@main.group(name="ends")
def ends_cmd():
    """Coset graphs and end counting."""


@ends_cmd.command(name="estimate")
@click.option("--group", "group_spec", required=True)
@click.option("--l", "l_text", required=True,
              help="Generators of the subgroup L, comma-separated.")
@click.option("--gens", "gens_text", default=None,
              help="Edge generating set; defaults to the group generators.")
@click.option("--radii", default="2,4,6,8", show_default=True,
              help="Strictly increasing comma-separated radii.")
@_format_option
def ends_estimate(group_spec, l_text, gens_text, radii, fmt):
    """Count unbounded annulus components of the coset graph."""
    ctx_obj = _load_context(group_spec)
    sub = _subgroup_from_words(ctx_obj, _word_list(ctx_obj, l_text))
    gens = _default_gens(ctx_obj, gens_text, "--gens")
    try:
        schedule = tuple(int(r) for r in radii.split(","))
    except ValueError:
        raise click.UsageError(f"bad radii {radii!r}")
    try:
        report = ends.ends_estimate(ctx_obj, sub, gens, schedule)
    except (ValueError, ends.CosetOracleError) as exc:
        raise click.ClickException(str(exc))
    _emit({"group": group_spec, "l": l_text,
           "gens": [format_word(g, ctx_obj.generator_names) for g in gens],
           "radii": list(report["radii"]), "counts": list(report["counts"]),
           "estimate": report["estimate"],
           "stabilized": report["stabilized"]}, fmt)


@ends_cmd.command(name="graph")
@click.option("--group", "group_spec", required=True)
@click.option("--l", "l_text", required=True,
              help="Generators of the subgroup L, comma-separated.")
@click.option("--gens", "gens_text", default=None)
@click.option("--radius", default=3, show_default=True)
@click.option("--dot", "dot_flag", is_flag=True,
              help="Emit DOT text instead of JSON.")
@_format_option
def ends_graph(group_spec, l_text, gens_text, radius, dot_flag, fmt):
    """Materialize a ball of the coset graph."""
    ctx_obj = _load_context(group_spec)
    sub = _subgroup_from_words(ctx_obj, _word_list(ctx_obj, l_text))
    gens = _default_gens(ctx_obj, gens_text, "--gens")
    try:
        ball = ends.coset_graph_ball(ctx_obj, sub, gens, radius)
    except (ValueError, ends.CosetOracleError) as exc:
        raise click.ClickException(str(exc))
    names = ctx_obj.generator_names
    if dot_flag:
        click.echo(ends.to_dot(ball, None, names))
        return
    _emit({"group": group_spec, "l": l_text, "radius": radius,
           "vertex_count": ball.vertex_count,
           "vertices": [{"index": i,
                         "representative": format_word(rep, names),
                         "depth": ball.depth[i]}
                        for i, rep in enumerate(ball.vertices)],
           "edges": [[u, v, format_word(gens[label], names)]
                     for u, v, label in ball.edges]}, fmt)


# ---------------------------------------------------------------------------
# thompson


@main.group(name="thompson")
def thompson_cmd():
    """Normal forms in Thompson's group F and the tail-subgroup lemma."""


_SHIFT_WORDS = ("x0^2", "x0^-2", "x0 x1", "x1 x0^-1", "x0^2 x1^-2")


@thompson_cmd.command(name="verify")
@click.option("--suite", "which", type=click.Choice(("lemma", "scan")),
              default="lemma", show_default=True)
@click.option("--identity-bound", default=10, show_default=True,
              help="Conjugation identities for 0 <= m < n <= this.")
@click.option("--pair-bound", default=12, show_default=True,
              help="Commutation of pair generators with indices up to this.")
@click.option("--shift-bound", default=20, show_default=True,
              help="Shift property checked for n up to this.")
@click.option("--m-bound", default=8, show_default=True,
              help="Tail-subgroup search bound.")
@click.option("--max-len", default=5, show_default=True,
              help="Scan: word length bound.")
@click.option("--max-index", default=2, show_default=True,
              help="Scan: generator index bound.")
@_format_option
def thompson_verify(which, identity_bound, pair_bound, shift_bound, m_bound,
                    max_len, max_index, fmt):
    """Run the lemma grids or the normal-form agreement scan."""
    if which == "scan":
        report = scan.thompson_agreement_scan(max_len, max_index)
        _emit({"suite": "scan", "max_len": max_len, "max_index": max_index,
               "backend": report["backend"], "words": report["words"],
               "failures": [list(f) for f in report["failures"]],
               "pass": not report["failures"]}, fmt)
        return
    data = {"suite": "lemma"}
    id_failures = [[m, n] for n in range(1, identity_bound + 1)
                   for m in range(n)
                   if not thompson.verify_conjugation_identity(m, n)]
    data["conjugation_identities"] = {
        "bound": identity_bound,
        "checked": identity_bound * (identity_bound + 1) // 2,
        "failures": id_failures, "pass": not id_failures}
    comm_failures = []
    for i in range(pair_bound):
        for j in range(i + 1, pair_bound + 1):
            ai, aj = thompson.a_generator(i), thompson.a_generator(j)
            if not thompson.f_equal(ai * aj, aj * ai):
                comm_failures.append([i, j])
    data["pair_commutation"] = {"bound": pair_bound,
                                "failures": comm_failures,
                                "pass": not comm_failures}
    shift = {}
    for text in _SHIFT_WORDS:
        g = parse_word(text)
        report = thompson.verify_shift(g, range(2, shift_bound + 1))
        shift[text] = {"threshold": report["threshold"], "j": report["j"],
                       "pass": report["all_pass"]}
    data["shift"] = shift
    inter = {}
    for text in _SHIFT_WORDS:
        g = parse_word(text)
        try:
            result = thompson.am_in_conjugate_intersection([g], m_bound)
            inter[text] = {"m": result["m"], "pass": True}
        except (ValueError, thompson.BoundExhausted) as exc:
            inter[text] = {"m": None, "pass": False, "reason": str(exc)}
    data["conjugate_intersection"] = inter
    data["pass"] = (data["conjugation_identities"]["pass"]
                    and data["pair_commutation"]["pass"]
                    and all(v["pass"] for v in shift.values())
                    and all(v["pass"] for v in inter.values()))
    _emit(data, fmt)


# ---------------------------------------------------------------------------
# bs


@main.group(name="bs")
def bs_cmd():
    """Britton reduction and the power-conjugation family in BS(m,n)."""


@bs_cmd.command(name="verify")
@click.option("--suite", "which", type=click.Choice(("family",)),
              default="family", show_default=True)
@click.option("--bound", default=12, show_default=True,
              help="Largest power of x in the truncation.")
@click.option("--conjugators", default="y,y^-1", show_default=True,
              help="Comma-separated conjugator words.")
@click.option("--conj-len", default=1, show_default=True,
              help="Conjugator word-length bound.")
@click.option("--m", "m_param", default=2, show_default=True)
@click.option("--n", "n_param", default=3, show_default=True)
@_format_option
def bs_verify(which, bound, conjugators, conj_len, m_param, n_param, fmt):
    """Check conjugation closure and directedness of the power family."""
    ctx_obj = groups.preset(f"bs({m_param},{n_param})")
    words = _word_list(ctx_obj, conjugators)
    report = bs.family_axiom_check(words, bound, conj_len, m_param, n_param)
    _emit({"suite": which, "m": m_param, "n": n_param, "a_bound": bound,
           "conjugators": [format_word(w, ctx_obj.generator_names) for w in words],
           "nodes": report["nodes"],
           "closure_checked": len(report["closure"]),
           "closure_failures": [e for e in report["closure"]
                                if e["witness"] is None],
           "closure_pass": report["closure_pass"],
           "directed_checked": len(report["directed"]),
           "directed_failures": [{"pair": list(d["pair"])} for d in report["directed"]
                                 if d["witness"] is None],
           "directed_pass": report["directed_pass"],
           "all_pass": report["all_pass"]}, fmt)


@bs_cmd.command(name="reduce")
@click.option("--word", "word_text", required=True)
@click.option("--m", "m_param", default=2, show_default=True)
@click.option("--n", "n_param", default=3, show_default=True)
@_format_option
def bs_reduce(word_text, m_param, n_param, fmt):
    """Britton-reduce a word to its pushed-right form."""
    ctx_obj = groups.preset(f"bs({m_param},{n_param})")
    w = _word(ctx_obj, word_text)
    form = bs.britton_reduce(w, m_param, n_param)
    _emit({"word": word_text, "m": m_param, "n": n_param,
           "head": form.head, "tail": [list(t) for t in form.tail],
           "is_power_of_x": form.is_power_of_x()}, fmt)


# ---------------------------------------------------------------------------
# suite


@main.command(name="suite")
@click.argument("name")
@click.option("--seed", default=0, show_default=True)
@click.option("--timing", is_flag=True,
              help="Include wall-clock seconds (breaks byte determinism).")
@_format_option
def suite_cmd(name, seed, timing, fmt):
    """Run a named check suite or 'all'; exit 1 if any check fails."""
    try:
        report = suites.run_suite(name, seed=seed, timing=timing)
    except suites.UnknownSuiteError as exc:
        raise click.UsageError(str(exc))
    if fmt == "json":
        click.echo(json.dumps(report, indent=2, sort_keys=True))
    else:
        for rec in report["checks"]:
            mark = {"pass": "PASS", "fail": "FAIL"}.get(rec["outcome"], "????")
            click.echo(f"{mark} {rec['id']}")
            if rec["outcome"] == "fail":
                click.echo(f"     law: {rec['law']}")
                click.echo(f"     witness: {rec['witness']}")
        failed = len(suites.report_failures(report))
        total = len(report["checks"])
        click.echo(f"{total - failed}/{total} checks passed")
        if report["timing"]:
            click.echo(f"elapsed: {report['timing']['seconds']}s")
    if suites.report_failures(report):
        sys.exit(1)


if __name__ == "__main__":
    main()
