"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 budget exceeded, 4 property violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from typing import Sequence

from . import __version__
from ._config import override
from .errors import BudgetExceededError, MapentError
from .gallery import d3, dicke, ghz, random_state, schmidt_state
from .locc import fuzz_monotonicity, summarize
from .measures import is_genuinely_entangled, level_ranks, mems
from .state import PureState, read_state
from .sweeps import check_ghz, sweep_d3, sweep_dicke

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_VIOLATION = 0, 2, 3, 4


class CliParseError(MapentError, ValueError):
    pass


def num(x: float) -> str:
    return f"{x:.12g}"


def _kv(body: str) -> dict[str, str]:
    out = {}
    for item in filter(None, body.split(",")):
        if "=" not in item:
            raise CliParseError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


_FAMILIES = {
    "dicke": ({"n", "l1"}, lambda p: dicke(int(p["n"]), int(p["l1"]))),
    "ghz": ({"n", "d"}, lambda p: ghz(int(p["n"]), int(p["d"]))),
    "d3": ({"n", "l1", "l2"}, lambda p: d3(int(p["n"]), int(p["l1"]), int(p["l2"]))),
    "schmidt": (
        {"n", "p"},
        lambda p: schmidt_state(int(p["n"]), math.sqrt(float(p["p"])), math.sqrt(1 - float(p["p"]))),
    ),
    "random": (
        {"dims", "seed"},
        lambda p: random_state(tuple(int(x) for x in p["dims"].split("x")), int(p["seed"])),
    ),
}


def parse_state_source(source: str) -> PureState:
    """Build a gallery state from ``family:key=value,...``.

    Examples: ``dicke:n=6,l1=3``, ``ghz:n=4,d=3``, ``d3:n=9,l1=3,l2=3``,
    ``schmidt:n=5,p=0.9``, ``random:dims=2x2x2,seed=42``.
    """
    family, _, body = source.partition(":")
    if family not in _FAMILIES:
        raise CliParseError(f"unknown state family {family!r}; choose from {sorted(_FAMILIES)}")
    keys, build = _FAMILIES[family]
    params = _kv(body)
    if set(params) != keys:
        raise CliParseError(f"{family} needs keys {sorted(keys)}, got {sorted(params)}")
    try:
        return build(params)
    except BudgetExceededError:
        raise
    except (ValueError, MapentError) as exc:
        raise CliParseError(f"{source}: {exc}") from exc


def parse_int_list(text: str) -> list[int]:
    """``"2-7"`` -> 2..7, ``"3,6,9"`` -> [3, 6, 9]; the forms may be mixed."""
    out: list[int] = []
    try:
        for part in filter(None, text.split(",")):
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise CliParseError(f"bad integer list {text!r}") from exc
    if not out:
        raise CliParseError(f"empty integer list {text!r}")
    return out


def _emit(header: list[str], rows: list[list[str]], fmt: str, out) -> None:
    if fmt == "pretty":
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for r in rows:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _sweep_table(rows, param_keys: list[str]) -> tuple[list[str], list[list[str]]]:
    width = max(len(r.mems) for r in rows)
    header = param_keys + [f"S{l}" for l in range(1, width + 1)] + ["mape", "rank_half", "rank_uniform"]
    body = []
    for r in rows:
        s = [num(v) for v in r.mems] + [""] * (width - len(r.mems))
        body.append([str(r.params[k]) for k in param_keys] + s + [num(r.mape), str(r.rank_half), str(int(r.rank_uniform))])
    return header, body


# --- subcommands ----------------------------------------------------------------


def cmd_measure(args, out) -> int:
    state = read_state(args.file, normalize=args.normalize) if args.file else parse_state_source(args.state)
    vec = mems(state, args.tol)
    verdict = is_genuinely_entangled(state, args.tol)
    rank_summary = []
    for l in range(1, state.n // 2 + 1):
        r = level_ranks(state, l, args.tol)
        rank_summary.append(str(r.min()) if r.min() == r.max() else f"{r.min()}-{r.max()}")
    fmt = args.format or "pretty"
    if fmt == "pretty":
        out.write(f"n          {state.n}\n")
        out.write(f"dims       {'x'.join(map(str, state.dims))}\n")
        out.write(f"mems       ({', '.join(num(v) for v in vec)})\n")
        out.write(f"mape       {num(vec.l1())}\n")
        out.write(f"l2_ape     {num(vec.l2())}\n")
        witness = "" if verdict.genuine else f" (witness rows={verdict.witness})"
        out.write(f"genuine    {str(verdict.genuine).lower()}{witness}\n")
        for l, r in enumerate(rank_summary, 1):
            out.write(f"rank[l={l}]  {r}\n")
        return EXIT_OK
    header = ["n", "dims"] + [f"S{l}" for l in range(1, len(vec) + 1)] + ["mape", "l2_ape", "genuine", "witness"]
    header += [f"rank_l{l}" for l in range(1, len(vec) + 1)]
    row = [str(state.n), "x".join(map(str, state.dims))] + [num(v) for v in vec]
    row += [num(vec.l1()), num(vec.l2()), str(verdict.genuine).lower(), str(verdict.witness or "")]
    _emit(header, [row + rank_summary], "csv", out)
    return EXIT_OK


def cmd_sweep_dicke(args, out) -> int:
    rows = sweep_dicke(parse_int_list(args.n), args.tol, args.workers)
    _emit(*_sweep_table(rows, ["n", "l1"]), args.format or "csv", out)
    return EXIT_OK


def cmd_sweep_d3(args, out) -> int:
    rows = sweep_d3(args.n, args.l1, args.tol, args.workers)
    _emit(*_sweep_table(rows, ["n", "l1", "l2", "l0"]), args.format or "csv", out)
    return EXIT_OK


def cmd_check_ghz(args, out) -> int:
    rows = check_ghz(parse_int_list(args.n), parse_int_list(args.d))
    header = ["n", "d", "mape", "expected", "abs_err", "pass"]
    body = [[str(r.n), str(r.d), num(r.mape), num(r.expected), num(r.abs_err), "pass" if r.passed else "FAIL"] for r in rows]
    _emit(header, body, args.format or "csv", out)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_VIOLATION


def cmd_check_locc(args, out) -> int:
    if args.trials < 1:
        raise CliParseError("--trials must be >= 1")
    seed = 0 if args.seed is None else args.seed
    records = fuzz_monotonicity(args.trials, seed, args.measure, workers=args.workers)
    header = ["seed", "dims", "before", "avg_after", "violated"]
    body = [
        [str(r.seed), "x".join(map(str, r.dims)), num(r.before), num(r.avg_after), str(r.violated).lower()]
        for r in records
    ]
    _emit(header, body, args.format or "csv", out)
    s = summarize(records)
    print(
        f"measure={args.measure} trials={s.trials} violations={s.violations} max_excess={num(s.max_excess)}",
        file=sys.stderr,
    )
    if args.measure == "l2":
        if s.violations:
            print(f"l2 counterexamples found at seeds {list(s.violating_seeds)}", file=sys.stderr)
        else:
            print("no l2 counterexample found", file=sys.stderr)
        return EXIT_OK
    return EXIT_VIOLATION if s.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--tol", type=float, default=None, help="relative rank tolerance (default 1e-10)")
    common.add_argument("--format", choices=["csv", "pretty"], default=None)
    common.add_argument("--budget", type=int, default=None, help="maximum amplitudes per state")
    common.add_argument("--workers", type=int, default=None, help="thread pool size for sweeps/trials")

    p = argparse.ArgumentParser(prog="mapent", description="MAPE entanglement of multipartite pure states")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", parents=[common], help="measures for one state")
    m.add_argument("state", nargs="?", help="gallery source, e.g. ghz:n=4,d=2")
    m.add_argument("--file", help="state file ('dims:' header + 're im' lines)")
    m.add_argument("--normalize", action="store_true", help="rescale file amplitudes to unit norm")
    m.set_defaults(func=cmd_measure)

    sd = sub.add_parser("sweep-dicke", parents=[common], help="Dicke family sweep")
    sd.add_argument("--n", default="3,6,9", help="qubit counts, e.g. 3,6,9 or 2-8")
    sd.set_defaults(func=cmd_sweep_dicke)

    s3 = sub.add_parser("sweep-d3", parents=[common], help="qutrit D3 family sweep")
    s3.add_argument("--n", type=int, default=9)
    s3.add_argument("--l1", type=int, default=None, help="fix l1 to take a slice")
    s3.set_defaults(func=cmd_sweep_d3)

    g = sub.add_parser("check-ghz", parents=[common], help="GHZ closed-form check")
    g.add_argument("--n", default="2-7")
    g.add_argument("--d", default="2-4")
    g.set_defaults(func=cmd_check_ghz)

    lc = sub.add_parser("check-locc", parents=[common], help="random LOCC monotonicity trials")
    lc.add_argument("--trials", type=int, default=500)
    lc.add_argument("--measure", choices=["mape", "l2"], default="mape")
    lc.set_defaults(func=cmd_check_locc)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "measure" and not (args.state or args.file):
        print("mapent measure: give a state source or --file", file=sys.stderr)
        return EXIT_PARSE
    budget = {} if args.budget is None else {"max_total_dim": args.budget}
    buf = io.StringIO()
    try:
        with override(**budget):
            code = args.func(args, buf)
    except BudgetExceededError as exc:
        print(f"mapent: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MapentError, ValueError, OSError) as exc:
        print(f"mapent: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
