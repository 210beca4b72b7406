"""Command-line entry point: generate, analyze, sweep, compare."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .chaos import ChaosParams, hex_to_float
from .literature import LITERATURE
from .metrics import analyze, format_row
from .pipeline import IterationCapError, generate_sbox
from .sboxio import SBoxFormatError, format_grid, read_grid

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_PIPELINE = 5

# additive-recurrence (R2) low-discrepancy sequence in the unit square
_PLASTIC = 1.32471795724474602596
_R2_STEP = (1.0 / _PLASTIC, 1.0 / _PLASTIC**2)
_GRID_LO, _GRID_SPAN = 0.001, 0.998


def sweep_grid(count: int) -> list:
    """Deterministic, well-spread (x0, p) pairs, all inside [0.001, 0.999]."""
    out = []
    for i in range(1, count + 1):
        u = (0.5 + i * _R2_STEP[0]) % 1.0
        v = (0.5 + i * _R2_STEP[1]) % 1.0
        out.append(ChaosParams(_GRID_LO + _GRID_SPAN * u, _GRID_LO + _GRID_SPAN * v))
    return out


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _real(text: str, is_hex: bool) -> float:
    return hex_to_float(text) if is_hex else float(text)


def _load(path, hex: bool):
    try:
        return read_grid(path, hex=hex)
    except OSError as e:
        raise SBoxFormatError(str(e)) from None


def cmd_generate(args) -> int:
    try:
        x0 = _real(args.x0_hex, True) if args.x0_hex else _real(args.x0, False)
        p = _real(args.p_hex, True) if args.p_hex else _real(args.p, False)
        params = ChaosParams(x0, p)
    except (TypeError, ValueError) as e:
        _err(f"invalid parameters: {e}")
        return EXIT_VALIDATION
    try:
        s, trace = generate_sbox(params)
    except IterationCapError as e:
        _err(str(e))
        return EXIT_PIPELINE
    comment = f"x0_hex={params.x0_hex} p_hex={params.p_hex}"
    Path(args.out).write_text(format_grid(s, hex=args.hex, comment=comment), encoding="utf-8")
    if args.trace:
        Path(args.trace).write_text(trace.to_json(verbose=args.trace_verbose) + "\n", encoding="utf-8")
    print(analyze(s).format_table("generated"))
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        s = _load(args.path, args.hex)
    except SBoxFormatError as e:
        _err(f"cannot parse {args.path}: {e}")
        return EXIT_PARSE
    report = analyze(s)
    if not report.bijective:
        print("warning: S-box is not bijective (repeated output values)", file=sys.stderr)
    if args.json:
        print(report.to_json())
    else:
        print(report.format_table(Path(args.path).name))
    return EXIT_OK


def _score(params: ChaosParams) -> dict:
    rec = {"x0_hex": params.x0_hex, "p_hex": params.p_hex, "x0": repr(params.x0), "p": repr(params.p)}
    try:
        s, _ = generate_sbox(params)
    except IterationCapError as e:
        rec["error"] = str(e)
        return rec
    r = analyze(s)
    rec.update(bijective=r.bijective, nl_min=r.nl_min, nl_mean=r.nl_mean, sac_avg=r.sac_avg, du=r.du)
    return rec


def rank_key(rec: dict):
    return (-rec["nl_min"], -rec["nl_mean"], rec["du"], rec["x0_hex"], rec["p_hex"])


def run_sweep(params: list, jobs: int = 1) -> tuple:
    """Score every parameter pair; returns (ranked results, failures)."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            recs = list(ex.map(_score, params))
    else:
        recs = [_score(p) for p in params]
    ok = sorted((r for r in recs if "error" not in r), key=rank_key)
    failed = [r for r in recs if "error" in r]
    return ok, failed


def cmd_sweep(args) -> int:
    try:
        if args.param:
            params = []
            for item in args.param:
                x0, p = item.split(",")
                params.append(ChaosParams(float(x0), float(p)))
        else:
            if args.count < 1:
                raise ValueError("--count must be positive")
            params = sweep_grid(args.count)
    except ValueError as e:
        _err(f"invalid sweep parameters: {e}")
        return EXIT_VALIDATION
    ok, failed = run_sweep(params, args.jobs)
    if args.top:
        ok = ok[: args.top]
    lines = [json.dumps(r) for r in ok + failed]
    Path(args.out).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    for rank, r in enumerate(ok, 1):
        print(f"{rank:4d}  x0={float(r['x0']):.10f} p={float(r['p']):.10f}  "
              f"nl_min={r['nl_min']} nl_mean={r['nl_mean']:.4f} sac={r['sac_avg']:.4f} du={r['du']}")
    for r in failed:
        print(f"failed  x0_hex={r['x0_hex']} p_hex={r['p_hex']}: {r['error']}", file=sys.stderr)
    return EXIT_OK


def comparison_rows(s, label: str = "analyzed") -> list:
    """The analyzed S-box plus the literature rows, ordered by mean nonlinearity."""
    r = analyze(s)
    rows = [(label, r.nl, r.nl_min, r.nl_max, r.nl_mean, f"{r.nl_mean:.4f}")]
    rows += [(c.label, list(c.nl), c.nl_min, c.nl_max, c.nl_mean, f"{c.nl_mean:g}") for c in LITERATURE]
    # stable sort keeps the analyzed row first among ties
    return sorted(rows, key=lambda row: -row[4])


def cmd_compare(args) -> int:
    try:
        s = _load(args.path, args.hex)
    except SBoxFormatError as e:
        _err(f"cannot parse {args.path}: {e}")
        return EXIT_PARSE
    head = ["S-box"] + [f"n{k + 1}" for k in range(8)] + ["min", "max", "mean"]
    print(format_row(head))
    for label, nl, lo, hi, _, mean in comparison_rows(s, Path(args.path).name):
        print(format_row([label] + [str(v) for v in nl] + [str(lo), str(hi), mean]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tspsbox", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="synthesize an S-box from chaotic parameters")
    g.add_argument("--x0", help="initial condition in (0, 1), decimal")
    g.add_argument("--p", help="control parameter in (0, 1), decimal")
    g.add_argument("--x0-hex", help="initial condition as 16-hex-digit IEEE-754 bit pattern")
    g.add_argument("--p-hex", help="control parameter as 16-hex-digit IEEE-754 bit pattern")
    g.add_argument("--out", required=True, help="output grid file")
    g.add_argument("--trace", help="write the generation trace as JSON")
    g.add_argument("--trace-verbose", action="store_true", help="include S-box snapshots in the trace")
    g.add_argument("--hex", action="store_true", help="write the grid in hex")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="score an S-box grid file")
    a.add_argument("path")
    a.add_argument("--json", action="store_true", help="print the report as JSON")
    a.add_argument("--hex", action="store_true", help="grid values are hex")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="generate and rank many parameter pairs")
    s.add_argument("--count", type=int, default=1, help="number of grid points")
    s.add_argument("--param", action="append", metavar="X0,P", help="explicit pair (repeatable; overrides --count)")
    s.add_argument("--top", type=int, default=0, help="keep only the best K results")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", required=True, help="JSON-lines output file")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("compare", help="compare against published S-box nonlinearities")
    c.add_argument("path")
    c.add_argument("--hex", action="store_true")
    c.set_defaults(func=cmd_compare)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate" and (args.x0 is None) == (args.x0_hex is None):
        _err("give exactly one of --x0 / --x0-hex")
        return EXIT_VALIDATION
    if args.command == "generate" and (args.p is None) == (args.p_hex is None):
        _err("give exactly one of --p / --p-hex")
        return EXIT_VALIDATION
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
