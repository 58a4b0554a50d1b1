import io
import json
import subprocess
import sys

import pytest

from parabolic.cli import RunConfig, UsageError, build_parser, main


def run(*argv, env=None):
    out = io.StringIO()
    code = main(list(argv), env=env or {}, stream=out)
    return code, out.getvalue()


def test_homs_count():
    assert run("homs", "--cat", "fi", "--n", "2", "--from", "2,0", "--to", "1,1", "--count") == (0, "2\n")
    assert run("homs", "--cat", "fi", "--from", "∅", "--to", "1,2", "--count") == (0, "1\n")
    assert run("homs", "--from", "0,1", "--to", "1,0", "--count") == (0, "0\n")


def test_homs_listing_json():
    code, out = run("homs", "--from", "1", "--to", "2", "--format", "json")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(records) == 2
    assert all(r["schema"] == "parabolic/1" for r in records)
    assert sorted(r["morphism"] for r in records) == [[[1, 1, 1, 1]], [[1, 1, 1, 2]]]


@pytest.mark.parametrize(
    "argv",
    [
        ["homs", "--from", "x", "--to", "1"],
        ["homs", "--from", "1,0", "--to", "1"],
        ["homs", "--cat", "c3", "--from", "1", "--to", "1"],
        ["verify", "no-such-suite"],
        ["ideal", "contains", "[(0,1)]"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv, env={}) == 2


def test_ideal_commands():
    assert run("ideal", "sum", "[(1,3),(0,1)]") == (0, "[(0,1)]\n")
    assert run("ideal", "sum", "[(1,1)]", "[(0,3)]", "--n", "2") == (0, "[(1,1),(0,3)]\n")
    assert run("ideal", "contains", "[(0,1)]", "[(1,1)]", "--n", "2") == (0, "true\n")
    assert run("ideal", "radical", "[(1,2),(0,5)]") == (0, "[(0,1)]\n")
    assert run("ideal", "prime", "[(0,2)]") == (0, "false\n")
    code, out = run("ideal", "chain", "--n", "4", "--format", "json")
    assert json.loads(out)["length"] == 4


def test_hilbert_class_basis():
    code, out = run("hilbert", "class", "--basis", "1", "--N", "2")
    assert code == 0 and out == "1 + t11 + 1/2*t11^2 + t12\n"


def test_hilbert_symelt():
    assert run("hilbert", "symelt", "--elt", "[[1,1]]", "--N", "2") == (0, "1/2*t11^2 + -1*t12\n")


def test_kclass_scale_is_bilinear():
    def scaled(by):
        _, out = run("kclass", "scale", "--basis", "1", "--by", by, "--format", "json", "--max", "3")
        return json.loads(out)["class"]

    assert scaled("[[1],[]]")[1] == [{"numerator": 1, "denominator": 1, "partition_tuple": [[1], []]}]
    both = '[{"partition_tuple": [[1], []], "numerator": 1}, {"partition_tuple": [[], [1]], "numerator": 1}]'
    key = lambda t: json.dumps(t, sort_keys=True)  # noqa: E731
    assert sorted(scaled(both)[1], key=key) == sorted(scaled("[[1],[]]")[1] + scaled("[[],[1]]")[1], key=key)


def test_other_queries():
    assert run("character", "--lam", "2,1", "--mu", "1,1,1") == (0, "2\n")
    assert run("lr", "--lam", "1", "--mu", "1", "--nu", "1,1") == (0, "1\n")
    assert run("day", "--a", "1", "--b", "1", "--c", "2") == (0, "2\n")
    assert run("model", "homq", "--from", "2,0", "--to", "1,1") == (0, "2\n")
    assert run("model", "kernel", "--d", "2", "--to", "1,1", "--k", "3") == (0, "6\n")


def test_verify_pass_and_json_is_deterministic(tmp_path):
    code, text = run("verify", "hom-equivalence", "--n", "2", "--max", "3")
    assert code == 0 and "FAIL" not in text
    first = run("verify", "multiplicativity", "--n", "1", "--max", "2", "--seed", "7", "--format", "json")
    second = run("verify", "multiplicativity", "--n", "1", "--max", "2", "--seed", "7", "--format", "json")
    assert first == second and first[0] == 0
    code, out = run("verify", "prime-chain", "--n", "4", "--plot-dir", str(tmp_path))
    assert code == 0 and "length 4" in out
    assert (tmp_path / "prime-chain.png").stat().st_size > 0
    assert (tmp_path / "summary.png").exists()


def test_verify_failure_exits_1(monkeypatch):
    from parabolic import verify

    def broken(cfg):
        check = verify.Check("always wrong")
        check.record(False, "case", 1, 2)
        return verify.SuiteReport("broken", "AC0", [check])

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, out = run("verify", "broken")
    assert code == 1 and "FAIL" in out and "counterexamples" in out


def test_config_precedence():
    args = build_parser().parse_args(["homs", "--from", "1", "--to", "1", "--k", "5"])
    cfg = RunConfig.resolve(args, {"PARABOLIC_K": "3", "PARABOLIC_N": "2", "PARABOLIC_FORMAT": "json"})
    assert (cfg.k, cfg.n, cfg.format, cfg.seed) == (5, 2, "json", 0)
    with pytest.raises(UsageError):
        RunConfig(n=0)
    with pytest.raises(UsageError):
        RunConfig.resolve(args, {"PARABOLIC_N": "two"})


def test_env_drives_output_format():
    code, out = run("character", "--lam", "2", "--mu", "2", env={"PARABOLIC_FORMAT": "json"})
    assert json.loads(out)["value"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "parabolic", "homs", "--from", "2,0", "--to", "1,1", "--count"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"
