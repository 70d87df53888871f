"""Command-line front end: ``dims``, ``bricks`` and ``verify``.

Exit status: 0 when every check passes, 1 when a mathematical inconsistency
is detected, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from . import characters as ch
from . import checks
from . import kernels
from . import verlinde as vl
from .symplectic import SignConvention

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2

# The decomposition cross-check enumerates 2^(2g) irreducibles.
DECOMPOSE_MAX_GENUS = 4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    genera: list[int]
    levels: list[int]
    sign: SignConvention
    fmt: str
    suites: list[str]
    precision_bits: int
    seed: int
    check_oracle: bool
    mode: str


def parse_range(text: str, what: str) -> list[int]:
    """``"A"`` or ``"A..B"`` (inclusive) of positive integers."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad {what} range {text!r}; expected A or A..B") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad {what} range {text!r}; need 1 <= A <= B")
    return list(range(lo, hi + 1))


def _parse_epsilon(text: str) -> SignConvention:
    if text in ("+1", "1", "+"):
        return SignConvention(1)
    if text in ("-1", "-"):
        return SignConvention(-1)
    raise UsageError(f"epsilon must be +1 or -1, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", default="1..3", help="genus A or range A..B")
    common.add_argument("--level", default="1..4", help="level A or range A..B")
    common.add_argument("--epsilon", default="+1", help="sign convention, +1 or -1")
    common.add_argument("--format", dest="fmt", choices=("table", "csv", "json"), default="table")
    common.add_argument("--check-oracle", action="store_true", help="cross-check with the trigonometric sums")
    common.add_argument("--precision-bits", type=int, default=None, help="working precision of the float oracle")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="verlinde-bricks", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="Verlinde dimensions d_g(k), d'_g(k)")
    bricks = sub.add_parser("bricks", parents=[common], help="brick dimensions")
    bricks.add_argument(
        "--mode",
        choices=("auto", ch.MOD4_ZERO, ch.MOD4_TWO, ch.ODD),
        default="auto",
        help="force a brick formula instead of dispatching on k mod 4",
    )
    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", default="all", help="comma-separated suites or 'all': " + ", ".join(checks.SUITES))
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    precision = args.precision_bits
    if precision is None:
        try:
            precision = vl.default_precision_bits()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if precision < vl.MIN_PRECISION_BITS:
        raise UsageError(f"--precision-bits must be at least {vl.MIN_PRECISION_BITS}")
    suites: list[str] = []
    if getattr(args, "suite", None):
        names = [s.strip() for s in args.suite.split(",") if s.strip()]
        for name in names:
            if name == "all":
                suites.extend(checks.SUITES)
            elif name in checks.SUITES:
                suites.append(name)
            else:
                raise UsageError(f"unknown suite {name!r}")
    return RunConfig(
        genera=parse_range(args.genus, "genus"),
        levels=parse_range(args.level, "level"),
        sign=_parse_epsilon(args.epsilon),
        fmt=args.fmt,
        suites=list(dict.fromkeys(suites)),
        precision_bits=precision,
        seed=args.seed,
        check_oracle=args.check_oracle,
        mode=getattr(args, "mode", "auto"),
    )


# -- commands -------------------------------------------------------------------

def cmd_dims(cfg: RunConfig) -> tuple[list[dict], list[str]]:
    rows, problems = [], []
    for g in cfg.genera:
        for k in cfg.levels:
            d, dt = vl.verlinde_dim(g, k), vl.verlinde_dim_twisted(g, k)
            rows.append({"g": g, "k": k, "d": d, "d_twisted": dt})
            if cfg.check_oracle:
                for twisted, exact in ((False, d), (True, dt)):
                    try:
                        got = vl.float_oracle(g, k, twisted, cfg.precision_bits)
                    except vl.OraclePrecisionError as exc:
                        problems.append(str(exc))
                        continue
                    if got != exact:
                        problems.append(f"oracle {got} != exact {exact} at g={g}, k={k}, twisted={twisted}")
    return rows, problems


def _closed_bricks(g: int, k: int, mode: str, twisted: bool) -> list[tuple[str, int, int]]:
    """``(index, number of indices, dimension)`` from the closed forms."""
    n = 1 << (2 * g)
    if mode == ch.MOD4_ZERO:
        d0, d1 = ch.brick_dims_mod4zero(g, k, twisted)
        return [("h=0", 1, d0), ("h!=0", n - 1, d1)]
    if mode == ch.MOD4_TWO:
        d0, d1 = ch.brick_dims_mod4two(g, k, twisted)
        even, odd = 2 ** (g - 1) * (2**g + 1), 2 ** (g - 1) * (2**g - 1)
        return [("Arf=0", even, d0), ("Arf=1", odd, d1)]
    m, conj = ch.odd_level_factor(g, k)
    return [("conj(Z1)" if conj else "Z1", m, 1 << g)]


def cmd_bricks(cfg: RunConfig) -> tuple[list[dict], list[str]]:
    rows, problems = [], []
    for g in cfg.genera:
        for k in cfg.levels:
            mode = ch.brick_mode(k) if cfg.mode == "auto" else cfg.mode
            spaces = [False] if mode == ch.ODD or k % 2 else [False, True]
            for twisted in spaces:
                space = "Z'" if twisted else "Z"
                try:
                    entries = _closed_bricks(g, k, mode, twisted)
                except (ch.InconsistencyError, ValueError) as exc:
                    problems.append(f"g={g}, k={k}, {space}, mode {mode}: {exc}")
                    continue
                total = vl.verlinde_dim_twisted(g, k) if twisted else vl.verlinde_dim(g, k)
                reassembled = sum(c * d for _, c, d in entries)
                ok = reassembled == total
                if not ok:
                    problems.append(f"g={g}, k={k}, {space}: bricks reassemble to {reassembled}, not {total}")
                checked = g <= DECOMPOSE_MAX_GENUS
                if checked:
                    try:
                        seen = ch.brick_table(g, k, cfg.sign, twisted).grouped()
                    except ch.InconsistencyError as exc:
                        problems.append(f"g={g}, k={k}, {space}: {exc}")
                        seen = {}
                    if mode == ch.ODD:
                        m, conj = ch.odd_level_factor(g, k)
                        label = ch.z1_label(cfg.sign.flipped() if conj else cfg.sign)
                        want = {f"svn{label[1]:+d}": m}
                        got = {name: dim for name, (_, dim) in seen.items() if dim}
                    else:
                        want = {idx: dim for idx, _, dim in entries}
                        got = {name: dim for name, (_, dim) in seen.items()}
                    if got != want:
                        problems.append(f"g={g}, k={k}, {space}: decomposition {got} != closed form {want}")
                for index, count, dim in entries:
                    rows.append(
                        {
                            "g": g,
                            "k": k,
                            "mode": mode,
                            "space": space,
                            "index": index,
                            "count": count,
                            "dim": dim,
                            "total": total,
                            "reassembly": "ok" if ok else "FAIL",
                            "decomposition": ("checked" if checked else "skipped"),
                        }
                    )
    return rows, problems


def cmd_verify(cfg: RunConfig) -> tuple[list[dict], list[str]]:
    ccfg = checks.CheckConfig(
        genera=cfg.genera,
        levels=cfg.levels,
        sign=cfg.sign,
        seed=cfg.seed,
        check_oracle=cfg.check_oracle,
        precision_bits=cfg.precision_bits,
    )
    results = checks.run_suites(cfg.suites, ccfg)
    rows = [
        {"suite": r.suite, "check": r.name, "status": "PASS" if r.passed else "FAIL", "detail": r.detail}
        for r in results
    ]
    problems = [f"{r.suite}/{r.name}: {r.detail}" for r in results if not r.passed]
    return rows, problems


# -- output ---------------------------------------------------------------------

def _cell(v) -> str:
    return str(v)


def emit(rows: list[dict], cfg: RunConfig, command: str, out=None) -> None:
    out = out or sys.stdout
    if cfg.fmt == "json":
        doc = {
            "meta": {
                "version": __version__,
                "command": command,
                "epsilon": cfg.sign.epsilon,
                "seed": cfg.seed,
                "backend": kernels.BACKEND,
            },
            # Integers as decimal strings: they outgrow 64 bits quickly.
            "rows": [{key: (str(v) if isinstance(v, int) else v) for key, v in row.items()} for row in rows],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    if not rows:
        return
    header = list(rows[0])
    if cfg.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row[h]) for h in header])
        return
    if command == "verify":
        for row in rows:
            out.write(f"{row['status']} [{row['suite']}] {row['check']}: {row['detail']}\n")
        return
    cells = [[_cell(row[h]) for h in header] for row in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for c in cells:
        out.write("  ".join(x.rjust(w) for x, w in zip(c, widths)) + "\n")


COMMANDS = {"dims": cmd_dims, "bricks": cmd_bricks, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = make_config(args)
    except UsageError as exc:
        print(f"verlinde-bricks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows, problems = COMMANDS[args.command](cfg)
    emit(rows, cfg, args.command)
    if problems:
        for p in problems:
            print(f"inconsistency: {p}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
