"""Command-line front end.

Every subcommand accepts the shared flags ``--n --k --D --N --max --seed
--format``.  Each flag can also come from the environment as ``PARABOLIC_<NAME>``
(for example ``PARABOLIC_N=2``); an explicit flag wins over the environment,
which wins over the built-in default.

Exit codes: 0 success, 1 a verification failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import ast
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import categories as cat
from . import fimodules as fim
from . import flagmodel as fm
from . import hilbert as hb
from . import ideals as idl
from .partitions import PartitionTuple, composition, lr_coefficient, mn_character
from .symfunc import TensorSymElt

SCHEMA = "parabolic/1"
EMPTY_MARKERS = {"∅", "", "empty", "()"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    n: int | None = None
    k: int | None = None
    D: int | None = None
    N: int | None = None
    max: int | None = None
    seed: int = 0
    format: str = "text"

    def __post_init__(self):
        for name in ("n", "k", "N"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"--{name} must be at least 1")
        for name in ("D", "max"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name} must be nonnegative")
        if self.format not in ("text", "json"):
            raise UsageError("--format must be text or json")

    @classmethod
    def resolve(cls, args: argparse.Namespace, env: dict | None = None) -> "RunConfig":
        env = os.environ if env is None else env
        values: dict[str, Any] = {}
        for name, default in (("n", None), ("k", None), ("D", None), ("N", None), ("max", None), ("seed", 0), ("format", "text")):
            flag = getattr(args, name, None)
            raw = env.get(f"PARABOLIC_{name.upper()}")
            if flag is not None:
                values[name] = flag
            elif raw not in (None, ""):
                if name == "format":
                    values[name] = raw
                else:
                    try:
                        values[name] = int(raw)
                    except ValueError as exc:
                        raise UsageError(f"PARABOLIC_{name.upper()}={raw!r} is not an integer") from exc
            else:
                values[name] = default
        return cls(**values)


# ---------------------------------------------------------------------------
# parsing helpers


def parse_tuple(text: str, n: int | None = None) -> tuple[int, ...]:
    text = text.strip()
    if text in EMPTY_MARKERS:
        if n is None:
            raise UsageError("an empty tuple needs --n or a second tuple to fix the arity")
        return (0,) * n
    try:
        out = composition(int(x) for x in text.strip("()[]").split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"malformed tuple {text!r}: {exc}") from exc
    if n is not None and len(out) != n:
        raise UsageError(f"tuple {text!r} has arity {len(out)}, expected {n}")
    return out


def parse_pair_of_tuples(left: str, right: str, n: int | None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse two tuples; an empty marker takes its arity from the other one."""
    if n is None:
        for t in (left, right):
            if t.strip() not in EMPTY_MARKERS:
                n = len(parse_tuple(t))
                break
    return parse_tuple(left, n), parse_tuple(right, n)


def parse_literal(text: str, what: str):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise UsageError(f"malformed {what}: {text!r}") from exc


def parse_ideal(text: str, n: int | None) -> idl.PIdeal:
    if text.strip() == "A":
        if n is None:
            raise UsageError("the unit ideal needs --n")
        return idl.PIdeal.unit_ideal(n)
    raw = parse_literal(text, "ideal")
    if not isinstance(raw, (list, tuple)) or any(len(t) != 2 for t in raw):
        raise UsageError(f"an ideal is a list of (index, exponent) pairs, got {text!r}")
    if n is None:
        n = max((int(i) for i, _ in raw), default=0) + 1
    try:
        return idl.canonicalize(n, raw)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_partition_tuple(text: str) -> PartitionTuple:
    raw = parse_literal(text, "partition tuple")
    try:
        return PartitionTuple(raw)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"malformed partition tuple {text!r}: {exc}") from exc


def parse_symelt(text: str, n: int | None, bound: int | None) -> TensorSymElt:
    """A JSON payload of terms, or a bare partition tuple meaning one Schur function."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        payload = parse_literal(text, "symmetric function")
    if payload and isinstance(payload, list) and isinstance(payload[0], dict):
        return TensorSymElt.from_json(payload, n, bound)
    lam = PartitionTuple(payload)
    return TensorSymElt.schur(lam, bound if bound is not None else lam.size)


# ---------------------------------------------------------------------------
# output


class Printer:
    def __init__(self, cfg: RunConfig, stream=None):
        self.cfg = cfg
        self.stream = stream or sys.stdout

    def emit(self, record: dict, text: str) -> None:
        if self.cfg.format == "json":
            record = {"schema": SCHEMA, **record}
            self.stream.write(json.dumps(record, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n")
        else:
            self.stream.write(text + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_homs(args, cfg: RunConfig, out: Printer) -> int:
    try:
        flavor = cat.CategoryFlavor.parse(args.cat, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    b, a = parse_pair_of_tuples(args.source, args.target, cfg.n)
    try:
        flavor.check_arity(len(a))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.count:
        count = cat.hom_count(flavor, b, a)
        out.emit({"command": "homs", "category": str(flavor), "from": list(b), "to": list(a), "count": count}, str(count))
        return 0
    for f in cat.iter_homs(flavor, b, a):
        out.emit({"command": "homs", "category": str(flavor), "from": list(b), "to": list(a), "morphism": f.to_json()},
                 " ".join(f"({x[0]},{x[1]})->({y[0]},{y[1]})" for x, y in zip(cat.elements(b), f.images)) or "(empty map)")
    return 0


def cmd_verify(args, cfg: RunConfig, out: Printer) -> int:
    from .verify import SUITES, SuiteConfig, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(name not in SUITES for name in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    scfg = SuiteConfig(n=cfg.n, k=cfg.k, D=cfg.D, N=cfg.N, max=cfg.max, seed=cfg.seed)
    reports = []
    for name in names:
        report = run_suite(name, scfg)
        reports.append(report)
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            text = f"{status} [{report.criterion}] {report.suite}: {check.identity} ({check.cases} cases)"
            if check.failures:
                text += "\n    counterexamples: " + json.dumps(check.failures, ensure_ascii=False)
            out.emit({"command": "verify", "suite": report.suite, "criterion": report.criterion, **check.to_json()}, text)
        for note in report.notes:
            out.emit({"command": "verify", "suite": report.suite, "note": note}, f"     note: {note}")
        out.emit({"command": "verify", "suite": report.suite, "criterion": report.criterion, "passed": report.passed, "summary": True},
                 f"{'PASS' if report.passed else 'FAIL'} {report.suite} ({report.elapsed:.2f}s)")
    if args.plot_dir:
        from .plotting import plot_suite, plot_summary

        directory = Path(args.plot_dir)
        directory.mkdir(parents=True, exist_ok=True)
        paths = [plot_suite(r, directory / f"{r.suite}.png") for r in reports]
        paths.append(plot_summary(reports, directory / "summary.png"))
        for p in paths:
            out.emit({"command": "verify", "figure": p.name}, f"wrote {p}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_hilbert(args, cfg: RunConfig, out: Printer) -> int:
    N = cfg.N if cfg.N is not None else 4
    if args.what == "exp":
        n = cfg.n or args.d
        series = _call(hb.exp_T, args.d, N, n)
    elif args.what == "symelt":
        x = parse_symelt(args.elt, cfg.n, cfg.max)
        series = hb.hseries_of_symelt(x, N)
    else:
        if args.basis is not None:
            n = cfg.n or max(args.basis, 1)
            K = _call(hb.KClass.basis, args.basis, n, cfg.max or 0)
        elif args.kclass:
            payload = json.loads(args.kclass)
            n = len(payload) - 1
            sizes = [sum(map(sum, t["partition_tuple"])) for coord in payload for t in coord]
            bound = cfg.max if cfg.max is not None else max(sizes, default=0)
            K = _call(hb.KClass.from_json, n, bound, payload)
        else:
            raise UsageError("hilbert class needs --basis or --class")
        series = hb.hseries_of_class(K, N)
    out.emit({"command": "hilbert", "n": series.n, "N": series.N, "series": series.to_json()}, series.to_text())
    return 0


def cmd_kclass(args, cfg: RunConfig, out: Printer) -> int:
    bound = cfg.max if cfg.max is not None else 4
    v = parse_symelt(args.by, cfg.n, bound)
    n = v.n
    if args.basis is not None:
        K = _call(hb.KClass.basis, args.basis, n, bound)
    elif args.kclass:
        K = hb.KClass.from_json(n, bound, json.loads(args.kclass))
    else:
        raise UsageError("kclass scale needs --basis or --class")
    result = _call(hb.kclass_scale, K, v)
    text = "\n".join(f"[A_{d}]: {c!r}" for d, c in enumerate(result.coeffs) if not c.is_zero()) or "0"
    out.emit({"command": "kclass", "class": result.to_json()}, text)
    return 0


def cmd_ideal(args, cfg: RunConfig, out: Printer) -> int:
    n = cfg.n
    op = args.op
    if op == "chain":
        if n is None:
            raise UsageError("ideal chain needs --n")
        chain = idl.prime_chain(n)
        out.emit({"command": "ideal", "op": op, "chain": [p.to_json() for p in chain], "length": len(chain) - 1},
                 " ⊂ ".join(str(p) for p in chain) + f"  (length {len(chain) - 1})")
        return 0
    ideals = [parse_ideal(t, n) for t in args.ideals]
    if n is None and len({I.n for I in ideals}) > 1:
        width = max(I.n for I in ideals)
        ideals = [parse_ideal(t, width) for t in args.ideals]
    expected = {"contains": 2, "radical": 1, "prime": 1, "canonical": 1}.get(op)
    if expected is not None and len(ideals) != expected:
        raise UsageError(f"ideal {op} takes {expected} ideal(s)")
    if op == "sum":
        if not ideals:
            raise UsageError("ideal sum takes at least one ideal")
        r = ideals[0]
        for J in ideals[1:]:
            r = idl.ideal_sum(r, J)
        out.emit({"command": "ideal", "op": op, "result": None if r.unit else r.to_json()}, str(r))
    elif op == "contains":
        r = idl.contains(*ideals)
        out.emit({"command": "ideal", "op": op, "result": r}, str(r).lower())
    elif op == "radical":
        r = idl.radical(ideals[0])
        out.emit({"command": "ideal", "op": op, "result": None if r.unit else r.to_json()}, str(r))
    elif op == "prime":
        r = idl.is_prime(ideals[0])
        out.emit({"command": "ideal", "op": op, "result": r}, str(r).lower())
    else:
        r = ideals[0]
        out.emit({"command": "ideal", "op": op, "result": None if r.unit else r.to_json()}, str(r))
    return 0


def cmd_model(args, cfg: RunConfig, out: Printer) -> int:
    what = args.what
    if what == "homq":
        b, a = parse_pair_of_tuples(args.source, args.target, cfg.n)
        k = cfg.k if cfg.k is not None else max(a + b) + 1
        D = cfg.D if cfg.D is not None else sum(a)
        value = _call(fm.hom_dim_Q, a, b, k, D)
        out.emit({"command": "model", "what": what, "a": list(a), "b": list(b), "k": k, "D": D, "dim": value}, str(value))
    elif what == "kernel":
        a = parse_tuple(args.target, cfg.n)
        k = cfg.k if cfg.k is not None else 3
        value = _call(fm.kernel_intersection_dim, args.d, a, k)
        out.emit({"command": "model", "what": what, "a": list(a), "d": args.d, "k": k, "dim": value,
                  "formula": fm.kernel_formula(args.d, a, k)}, str(value))
    elif what == "weight":
        a = parse_tuple(args.target, cfg.n)
        b = parse_tuple(args.source, len(a))
        k = cfg.k if cfg.k is not None else max(a + b) + 1
        M = fm.Q_module(fm.FlagModel(len(a), k), b, cfg.D or 0)
        value = fm.weight_space_dim(M, fm.weight_of_tuple(a))
        out.emit({"command": "model", "what": what, "a": list(a), "b": list(b), "dim": value}, str(value))
    else:
        raise UsageError(f"unknown model query {what!r}")
    return 0


def cmd_character(args, cfg: RunConfig, out: Printer) -> int:
    lam, mu = parse_tuple(args.lam), parse_tuple(args.mu)
    value = _call(mn_character, lam, mu)
    out.emit({"command": "character", "lambda": list(lam), "mu": list(mu), "value": value}, str(value))
    return 0


def cmd_lr(args, cfg: RunConfig, out: Printer) -> int:
    lam, mu, nu = parse_tuple(args.lam), parse_tuple(args.mu), parse_tuple(args.nu)
    value = lr_coefficient(lam, mu, nu)
    out.emit({"command": "lr", "lambda": list(lam), "mu": list(mu), "nu": list(nu), "value": value}, str(value))
    return 0


def cmd_day(args, cfg: RunConfig, out: Printer) -> int:
    a = parse_tuple(args.a, cfg.n)
    n = len(a)
    b, c = parse_tuple(args.b, n), parse_tuple(args.c, n)
    value = fim.day_tensor_dim(fim.PrincipalProjectiveSpec(a), fim.PrincipalProjectiveSpec(b), c)
    out.emit({"command": "day", "a": list(a), "b": list(b), "c": list(c), "dim": value}, str(value))
    return 0


def _call(fn, *args):
    try:
        return fn(*args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("shared options")
    g.add_argument("--n", type=int, help="arity (number of flag steps)")
    g.add_argument("--k", type=int, help="columns per graded piece in the flag model")
    g.add_argument("--D", type=int, help="polynomial degree bound in the flag model")
    g.add_argument("--N", type=int, help="series truncation size")
    g.add_argument("--max", type=int, help="size bound for exhaustive suites / degree bound for classes")
    g.add_argument("--seed", type=int, help="seed for sampled checks")
    g.add_argument("--format", choices=("text", "json"), help="text, or newline-delimited JSON records")

    parser = argparse.ArgumentParser(prog="parabolic", description=__doc__.split("\n\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homs", parents=[common], help="enumerate or count morphisms b -> a")
    p.add_argument("--cat", default="fi", help="fi, fb, fbt or c<d>")
    p.add_argument("--d", type=int, default=None, help="d for --cat c")
    p.add_argument("--from", dest="source", required=True, help="source tuple b, e.g. 2,0 (∅ for empty)")
    p.add_argument("--to", dest="target", required=True, help="target tuple a")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite (or 'all')")
    p.add_argument("suite")
    p.add_argument("--plot-dir", default=None, help="write figures here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hilbert", parents=[common], help="enhanced Hilbert series")
    p.add_argument("what", choices=("class", "symelt", "exp"))
    p.add_argument("--basis", type=int, default=None, help="d for the class [A_d]")
    p.add_argument("--class", dest="kclass", default=None, help="class as JSON (n+1 term lists)")
    p.add_argument("--elt", default=None, help="symmetric function as JSON terms or a partition tuple")
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("kclass", parents=[common], help="Grothendieck group arithmetic")
    p.add_argument("op", choices=("scale",))
    p.add_argument("--basis", type=int, default=None)
    p.add_argument("--class", dest="kclass", default=None)
    p.add_argument("--by", required=True, help="scalar as JSON terms or a partition tuple")
    p.set_defaults(func=cmd_kclass)

    p = sub.add_parser("ideal", parents=[common], help="ideal lattice operations")
    p.add_argument("op", choices=("sum", "contains", "radical", "prime", "canonical", "chain"))
    p.add_argument("ideals", nargs="*", help='ideals such as "[(1,3),(0,1)]" or A')
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("model", parents=[common], help="flag-model dimensions")
    p.add_argument("what", choices=("homq", "kernel", "weight"))
    p.add_argument("--from", dest="source", default="∅")
    p.add_argument("--to", dest="target", default="∅")
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("character", parents=[common], help="symmetric group character value")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("day", parents=[common], help="dim (P_a ⊗ P_b)(c)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(func=cmd_day)
    return parser


def main(argv: Sequence[str] | None = None, env: dict | None = None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.resolve(args, env)
        return args.func(args, cfg, Printer(cfg, stream))
    except UsageError as exc:
        sys.stderr.write(f"parabolic: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
