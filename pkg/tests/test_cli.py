import json
import subprocess
import sys

import pytest

from mideal.cli import main

from conftest import RP2_TEXT, VERONESE_TEXT


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out), out


@pytest.fixture(scope="module")
def j2_text():
    from mideal.core import power
    from mideal.parsing import parse_ideal_with_names

    p = parse_ideal_with_names(RP2_TEXT)
    from mideal.core import format_ideal

    return format_ideal(power(p.ideal, 2), p.names)


def test_analyze_rp2_square(capsys, j2_text):
    data, _ = run_json(capsys, "analyze", j2_text)
    assert data["is_intersection_type"] is False
    assert data["canonical_decomposition"] is None
    diag = data["diagnostics"][0]
    assert diag["prime"] == "(x,y,z,t,u,v)"
    assert (diag["min_degree"], diag["socle_degree"]) == (6, 6)
    assert diag["witness"] == "x*y*z*t*u*v"
    assert data["coefficient_field"] == "QQ (characteristic 0)"


def test_decompose_veronese_in_canonical_order(capsys):
    data, _ = run_json(capsys, "decompose", VERONESE_TEXT)
    assert [(c["prime"], c["exponent"]) for c in data["components"]] == [
        ("(x1)", 1), ("(x1,x2)", 3), ("(x1,x3)", 2), ("(x2,x3)", 1), ("(x1,x2,x3)", 4)]
    assert data["irredundant"] is True


def test_graph_square_type(capsys):
    data, _ = run_json(capsys, "graph", "square-type", "--edges", "1-2,1-3,2-3,3-4,4-5")
    assert data["square_is_intersection_type"] is False
    assert data["extra_primes"] == ["(x1,x2,x3,x4)"]


def test_graph_from_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("1 2\n1 3\n2 3\n3 4\n4 5\n")
    data, _ = run_json(capsys, "graph", "powers", "--file", str(f), "-k", "3")
    assert [p["witness_degree"] for p in data["powers"]] == [3, 5]


def test_json_is_stable_across_runs_and_jobs(capsys, j2_text):
    outs = set()
    for jobs in ("1", "1", "2"):
        _, out = run_json(capsys, "--jobs", jobs, "analyze", j2_text)
        outs.add(out)
    assert len(outs) == 1
    # keys are sorted
    data = json.loads(outs.pop())
    assert list(data) == sorted(data)


def test_global_flags_after_subcommand(capsys):
    data, _ = run_json(capsys, "ass", "a*b, b*c", "--vars", "a,b,c,d")
    assert data["n"] == 4 and data["associated_primes"] == ["(b)", "(a,c)"]


@pytest.mark.parametrize("argv,code", [
    (["ass", "x+y"], 2),
    (["ass", "x*w", "--vars", "x,y"], 2),
    (["decompose", "1", "--vars", "x,y"], 3),
    (["graph", "powers", "--edges", "1-2,2-3"], 3),
    (["polymatroid", "rank", "x^2, y^2"], 3),
    (["ass", "x1*x2*x3", "--max-n", "2"], 4),
])
def test_exit_codes(capsys, argv, code):
    c, _, err = run(capsys, *argv)
    assert c == code
    assert err.startswith("error:")


def test_size_guard_and_force(capsys):
    from mideal.core import PrimeIdeal, format_ideal, prime_power

    big = format_ideal(prime_power(PrimeIdeal.maximal(3), 9))  # 55 generators
    code, _, _ = run(capsys, "betti", big, "--method", "taylor")
    assert code == 4


def test_consistency_exit_code(capsys, monkeypatch):
    import mideal.cli as cli
    from mideal.errors import ConsistencyError

    def boom(ctx, a):
        raise ConsistencyError("reassembly mismatch", "left side", "right side")

    monkeypatch.setattr(cli, "cmd_ass", boom)
    code, _, err = run(capsys, "ass", "x")
    assert code == 5
    assert "left side" in err and "right side" in err


def test_every_subcommand_runs(capsys):
    cases = [
        ["betti", "x^2,x*y,y^2"],
        ["reg", "x^2,x*y,y^2", "--characteristic", "2"],
        ["power", "x,y", "-k", "3"],
        ["localize", VERONESE_TEXT, "-p", "x1,x2"],
        ["analyze", VERONESE_TEXT, "--local-reg"],
        ["polymatroid", "rank", VERONESE_TEXT],
        ["polymatroid", "tau", VERONESE_TEXT],
        ["polymatroid", "tau-decomp", VERONESE_TEXT],
        ["polymatroid", "veronese", "-d", "4", "--caps", "3,2,1"],
        ["polymatroid", "transversal", "--sets", "1,2;2,3"],
        ["polymatroid", "borel", "--principal", "1,2"],
        ["polymatroid", "borel", "x1, x2^2"],
        ["graph", "edge-ideal", "--edges", "1-2,2-3"],
        ["graph", "central-cycles", "--edges", "1-2,1-3,2-3,3-4"],
        ["newton", "hyperplanes", VERONESE_TEXT],
        ["newton", "closed", "x^2,y^2"],
        ["newton", "symbolic", "x*y,x*z,y*z", "-t", "2"],
        ["newton", "containment", VERONESE_TEXT, "-k", "1"],
    ]
    for argv in cases:
        code, out, err = run(capsys, *argv)
        assert code == 0, (argv, err)
        assert out.strip()
        code, out, err = run(capsys, *argv, "--json")
        assert code == 0 and json.loads(out)


def test_human_output_shares_the_data_model(capsys):
    code, out, _ = run(capsys, "newton", "closed", "x^2, y^2")
    assert "is_integrally_closed: false" in out
    assert "gaps: [x*y]" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mideal", "--json", "ass", "x*y"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["associated_primes"] == ["(x)", "(y)"]
