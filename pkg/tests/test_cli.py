"""Command-line interface: output contracts, exit codes, determinism."""

import json
from importlib import resources

import jsonschema
import pytest
from click.testing import CliRunner

from nearnormal import groups, suites
from nearnormal.cli import main


def load_schema():
    text = resources.files("nearnormal").joinpath("data/report_schema.json").read_text()
    return json.loads(text)


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, expect=0):
    result = runner.invoke(main, args)
    if result.exit_code != expect:  # pragma: no cover - debugging aid
        raise AssertionError(f"exit {result.exit_code} for {args}:\n{result.output}")
    return result


def test_group_parse_preset(runner):
    result = invoke(runner, ["group", "parse", "sym3"])
    ctx = groups.preset("sym3")
    assert result.output == groups.serialize_presentation(ctx.presentation, ctx.oracle)
    # canonical output is a fixed point of parsing
    again = invoke(runner, ["group", "parse", result.output])
    assert again.output == result.output


def test_group_parse_error_has_position(runner):
    result = runner.invoke(main, ["group", "parse", "gens: a\nrels: b"])
    assert result.exit_code == 1
    assert "parse error" in result.output
    assert "line 2" in result.output and "column" in result.output


def test_group_show_reports_order(runner):
    result = invoke(runner, ["group", "show", "sym3"])
    data = json.loads(result.output)
    assert data["order"] == 6
    assert data["generators"] == ["a", "b"]
    assert data["oracle"] == "coset-table"


def test_subgroup_commensurable_bs(runner):
    result = invoke(runner, [
        "subgroup", "commensurable", "--group", "bs(2,3)",
        "--h", "x", "--k", "y^-1 x y"])
    data = json.loads(result.output)
    assert data["result"] is True
    assert data["indices"] == [3, 2]
    assert data["certificate"] is None


def test_subgroup_near_normal(runner):
    result = invoke(runner, [
        "subgroup", "near-normal", "--group", "bs(2,3)", "--h", "x"])
    data = json.loads(result.output)
    assert data["near_normal"] is True
    assert data["conjugators"] == ["x", "y"]
    result2 = invoke(runner, [
        "subgroup", "near-normal", "--group", "free(2)", "--h", "a"])
    assert json.loads(result2.output)["near_normal"] is False


def test_family_check(runner):
    result = invoke(runner, [
        "family", "check", "--group", "sym3", "--nodes", "a b; a,b"])
    data = json.loads(result.output)
    assert data["admissible"]["conjugation_closed"] is True
    assert data["admissible"]["downward_directed"] is True
    assert data["stable"]["stable"] is True
    orders = sorted(n["order"] for n in data["nodes"])
    assert orders == [3, 6]


def test_family_h0_and_h1(runner):
    result = invoke(runner, [
        "family", "h0", "--group", "sym3", "--nodes", "a b; a,b",
        "--module", "regular"])
    data = json.loads(result.output)
    assert data["h0_dimension"] == 2
    assert data["ambient_fixed_dimension"] is None  # full module is not h0-trivial
    triv = invoke(runner, [
        "family", "h0", "--group", "sym3", "--nodes", "a b; a,b"])
    tdata = json.loads(triv.output)
    assert tdata["h0_dimension"] == 1
    assert tdata["ambient_fixed_dimension"] == 1
    h1 = invoke(runner, ["family", "h1", "--group", "cyclic(2)"])
    assert json.loads(h1.output)["dim_h1"] == 1


def test_completion_build_and_laws(runner):
    result = invoke(runner, [
        "completion", "build", "--group", "sym3", "--family", "normal-order3"])
    data = json.loads(result.output)
    assert data["element_count"] == 2
    assert data["group_order"] == 6
    assert data["is_group"] is True
    laws = invoke(runner, [
        "completion", "laws", "--group", "cyclic(4)", "--family", "index2"])
    ldata = json.loads(laws.output)
    assert set(ldata["laws"].values()) == {"pass"}


def test_completion_scan_non_directed(runner):
    result = invoke(runner, [
        "completion", "scan", "--group", "sym3", "--nodes", "a; a,b"])
    data = json.loads(result.output)
    assert data["element_count"] == 27
    assert data["invertible"] + data["non_invertible"] == 27
    assert data["non_invertible_witnesses"]


def test_completion_unknown_family(runner):
    result = runner.invoke(main, [
        "completion", "build", "--group", "sym3", "--family", "nope"])
    assert result.exit_code == 2
    assert "built-ins" in result.output


def test_ends_estimate_line(runner):
    result = invoke(runner, [
        "ends", "estimate", "--group", "zn(1)", "--l", "-",
        "--radii", "2,4,6,8"])
    data = json.loads(result.output)
    assert data["estimate"] == 2
    assert data["stabilized"] is True


def test_ends_graph_dot(runner):
    result = invoke(runner, [
        "ends", "graph", "--group", "sym3", "--l", "a", "--radius", "2",
        "--dot"])
    assert result.output.startswith("graph ball {")
    assert " -- " in result.output
    plain = invoke(runner, [
        "ends", "graph", "--group", "sym3", "--l", "a", "--radius", "2"])
    data = json.loads(plain.output)
    assert data["vertex_count"] == 3
    assert all(len(e) == 3 for e in data["edges"])


def test_thompson_verify_lemma(runner):
    result = invoke(runner, [
        "thompson", "verify", "--identity-bound", "5", "--pair-bound", "6",
        "--shift-bound", "8"])
    data = json.loads(result.output)
    assert data["pass"] is True
    assert data["conjugation_identities"]["failures"] == []
    assert data["pair_commutation"]["failures"] == []
    assert all(v["pass"] for v in data["shift"].values())
    assert all(v["pass"] for v in data["conjugate_intersection"].values())


def test_thompson_verify_scan(runner):
    result = invoke(runner, [
        "thompson", "verify", "--suite", "scan", "--max-len", "3",
        "--max-index", "1"])
    data = json.loads(result.output)
    assert data["words"] == 53
    assert data["pass"] is True


def test_bs_verify_and_reduce(runner):
    result = invoke(runner, [
        "bs", "verify", "--bound", "6", "--conjugators", "y,y^-1"])
    data = json.loads(result.output)
    assert data["all_pass"] is True
    assert data["closure_failures"] == []
    assert data["directed_failures"] == []
    reduce_result = invoke(runner, ["bs", "reduce", "--word", "y^-1 x^2 y"])
    rdata = json.loads(reduce_result.output)
    assert rdata["head"] == 3
    assert rdata["tail"] == []
    assert rdata["is_power_of_x"] is True


def test_suite_json_is_schema_valid(runner):
    result = invoke(runner, ["suite", "words"])
    report = json.loads(result.output)
    jsonschema.validate(report, load_schema())
    assert report["timing"] is None
    timed = invoke(runner, ["suite", "words", "--timing"])
    treport = json.loads(timed.output)
    jsonschema.validate(treport, load_schema())
    assert treport["timing"]["seconds"] >= 0


def test_suite_byte_determinism(runner):
    first = invoke(runner, ["suite", "words", "--seed", "7"])
    second = invoke(runner, ["suite", "words", "--seed", "7"])
    assert first.output == second.output


def test_suite_unknown_name_exits_2(runner):
    result = runner.invoke(main, ["suite", "nope"])
    assert result.exit_code == 2
    assert "unknown suite" in result.output


def test_suite_failure_exits_1(runner, monkeypatch):
    def failing(seed):
        return [{"id": "toy/broken", "law": "l", "inputs": {},
                 "outcome": "fail", "witness": "w"}]

    monkeypatch.setitem(suites.SUITES, "toy", failing)
    result = runner.invoke(main, ["suite", "toy", "--format", "text"])
    assert result.exit_code == 1
    assert "FAIL toy/broken" in result.output
    assert "0/1 checks passed" in result.output


def test_text_format_renders_scalars(runner):
    result = invoke(runner, [
        "group", "show", "sym3", "--format", "text"])
    assert "order: 6" in result.output
    assert "oracle: coset-table" in result.output
