"""Command-line interface.

Subcommands::

    info    print the [n,k,d] parameters of a code file
    mp      expand an MP description into a code file
    dual    compute the l-Galois dual of an MP description
    check   run the self-orthogonality or dual-containment checker
    verify  cross-check structured results against the brute-force oracle
    search  look for constituents meeting checker conditions

Exit codes are a stable contract: 0 = success / condition holds,
1 = condition fails / verification disagreement, 2 = inconclusive,
10 = usage or parse error, 11 = validation error, 12 = cap exceeded,
13 = infeasible search.  With ``--machine`` every fact is printed as one
``key: value`` line.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .gf import FieldMismatchError
from .lincode import DistanceBudget, DistanceResult, LinearCode, UndefinedDistanceError
from .matgf import MatGF, RankDeficientError
from .mpcode import (
    MPCode,
    Verdict,
    check_dual_containing_full_rank,
    check_dual_containing_general,
    check_self_orthogonal,
    dual_full_rank,
    dual_general,
    expand,
    row_partition,
)
from . import io as fmt
from . import oracle
from .search import InfeasibleSearchError, SearchRequest, search_mp_codes

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 10
EXIT_VALIDATION = 11
EXIT_CAP = 12
EXIT_INFEASIBLE = 13

_VERDICT_EXIT = {
    Verdict.HOLDS: EXIT_HOLDS,
    Verdict.FAILS: EXIT_FAILS,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


@dataclass(frozen=True)
class RunConfig:
    """Flags shared by the subcommands."""

    ell: int = 0
    enum_cap: int = DistanceBudget.enum_cap
    lw_cap: int = DistanceBudget.lw_cap
    search_cap: int = 2000
    seed: int = 0
    machine: bool = False
    out: str | None = None

    @property
    def budget(self) -> DistanceBudget:
        return DistanceBudget(enum_cap=self.enum_cap, lw_cap=self.lw_cap)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 10, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _params_str(n: int, k: int, dist: DistanceResult | None) -> str:
    if k == 0:
        return f"[{n},0,-]"
    assert dist is not None
    return f"[{n},{k},{dist}]"


def _distance(code: LinearCode, cfg: RunConfig) -> DistanceResult | None:
    if code.k == 0:
        return None
    return code.min_distance(cfg.budget)


def _print_params(code: LinearCode, cfg: RunConfig, prefix: str = "parameters"):
    dist = _distance(code, cfg)
    if cfg.machine:
        print(f"n: {code.n}")
        print(f"k: {code.k}")
        if dist is None:
            print("d: -")
            print("strategy: undefined")
        elif dist.exact:
            print(f"d: {dist.d}")
            print(f"strategy: {dist.strategy}")
        else:
            print(f"d_lower: {dist.lower}")
            print(f"d_upper: {dist.upper}")
            print(f"strategy: {dist.strategy}")
    else:
        tag = "undefined distance" if dist is None else f"strategy: {dist.strategy}"
        print(f"{prefix}: {_params_str(code.n, code.k, dist)} ({tag})")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(EXIT_USAGE, f"cannot read {path}: {exc}") from None


def _write_out(cfg: RunConfig, text: str, what: str):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{what}: {cfg.out}" if cfg.machine else f"wrote {what} to {cfg.out}")
    else:
        sys.stdout.write(text)


def _load_mp(path: str, *, strict: bool = True):
    try:
        return fmt.load_mp(_read(path), strict=strict)
    except fmt.ParseError as exc:
        raise _CliError(EXIT_USAGE, f"{path}: {exc}") from None
    except (ValueError, FieldMismatchError) as exc:
        raise _CliError(EXIT_VALIDATION, f"{path}: {exc}") from None


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_info(args) -> int:
    cfg = _config(args)
    try:
        code = fmt.load_code(_read(args.codefile))
    except fmt.ParseError as exc:
        raise _CliError(EXIT_USAGE, f"{args.codefile}: {exc}") from None
    _print_params(code, cfg)
    return EXIT_HOLDS


def cmd_mp(args) -> int:
    cfg = _config(args)
    mp, _ = _load_mp(args.mpfile)
    code = expand(mp)
    _print_params(code, cfg)
    _write_out(cfg, fmt.dump_code(code), "code")
    return EXIT_HOLDS


def cmd_dual(args) -> int:
    cfg = _config(args)
    mp, _ = _load_mp(args.mpfile)
    a = mp.defmatrix
    if a.rank() == a.rows:
        dual_mp, dual_code = dual_full_rank(mp, cfg.ell)
        path = "full-rank"
    else:
        dual_code = dual_general(mp, cfg.ell)
        dual_mp = None
        blocks = row_partition(a).blocks
        path = "partition{" + "|".join(
            ",".join(str(i) for i in b) for b in blocks
        ) + "}"
    print(f"path: {path}")
    _print_params(dual_code, cfg, prefix="dual-parameters")
    if dual_mp is not None and not cfg.machine:
        print("dual MP form: constituent duals "
              + " ".join(f"[{c.n},{c.k}]" for c in dual_mp.constituents)
              + " mixed by:")
        for line in fmt.dump_matrix(dual_mp.defmatrix).splitlines()[1:]:
            print("  " + line)
    _write_out(cfg, fmt.dump_code(dual_code), "dual code")
    return EXIT_HOLDS


def cmd_check(args) -> int:
    cfg = _config(args)
    mp, _ = _load_mp(args.mpfile)
    try:
        if args.mode == "so":
            report = check_self_orthogonal(mp, cfg.ell)
        else:
            report = check_dual_containing_general(mp, cfg.ell)
    except ValueError as exc:
        raise _CliError(EXIT_VALIDATION, str(exc)) from None
    for line in fmt.report_lines(report):
        print(line)
    return _VERDICT_EXIT[report.verdict]


def cmd_verify(args) -> int:
    cfg = _config(args)
    mp, claims = _load_mp(args.mpfile, strict=False)
    lines: list[tuple[str, str]] = []  # (check name, agree|disagree|skip ...)

    for i, (_, declared_k, actual_k) in enumerate(claims.constituent_claims, 1):
        ok = declared_k == actual_k
        lines.append(
            (
                f"claim constituent {i}",
                "agree" if ok else f"disagree (declared k={declared_k}, rank={actual_k})",
            )
        )

    code = expand(mp)
    spec = mp.spec
    dual = dual_general(mp, cfg.ell)

    # dual correctness by definition: dimensions complementary and every
    # basis vector orthogonal (in the l-Galois product) to every
    # generator row; together these certify the dual exactly.
    dims_ok = code.k + dual.k == code.n
    prods_ok = all(
        oracle.scalar_inner(
            spec,
            [int(x) for x in g],
            [int(y) for y in h],
            cfg.ell,
        )
        == 0
        for g in code.gen.data
        for h in dual.gen.data
    )
    lines.append(
        ("dual definition", "agree" if dims_ok and prods_ok else "disagree")
    )

    # full set-level oracle comparison when within cap
    try:
        brute = oracle.dual_by_definition(code, cfg.ell, cap=args.oracle_cap)
        lines.append(
            ("dual oracle", "agree" if brute == dual else "disagree")
        )
    except oracle.OracleCapError as exc:
        lines.append(("dual oracle", f"skip ({exc})"))

    so_report = check_self_orthogonal(mp, cfg.ell)
    so_truth = oracle.so_by_definition(code, cfg.ell, cap=args.oracle_cap)
    lines.append(
        (
            "self-orthogonal",
            "agree" if (so_report.verdict is Verdict.HOLDS) == so_truth else "disagree",
        )
    )

    dc_report = check_dual_containing_general(mp, cfg.ell)
    containment = dual.is_subcode(code)
    if dc_report.verdict is Verdict.INCONCLUSIVE:
        lines.append(("dual-containing", f"skip (inconclusive; containment={containment})"))
    else:
        ok = (dc_report.verdict is Verdict.HOLDS) == containment
        lines.append(("dual-containing", "agree" if ok else "disagree"))
    try:
        if containment:
            sub_ok = oracle.is_subset_by_enumeration(dual, code, cap=args.oracle_cap)
            lines.append(
                ("dual-containing oracle", "agree" if sub_ok else "disagree")
            )
    except oracle.OracleCapError as exc:
        lines.append(("dual-containing oracle", f"skip ({exc})"))

    bad = 0
    for name, status in lines:
        print(f"check {name}: {status}")
        if status.startswith("disagree"):
            bad += 1
    print(f"result: {'all-agree' if bad == 0 else f'{bad} disagreement(s)'}")
    return EXIT_HOLDS if bad == 0 else EXIT_FAILS


def cmd_search(args) -> int:
    cfg = _config(args)
    try:
        a = fmt.load_matrix(_read(args.matrix))
    except fmt.ParseError as exc:
        raise _CliError(EXIT_USAGE, f"{args.matrix}: {exc}") from None
    dims = tuple(int(x) for x in args.dims.split(","))
    req = SearchRequest(
        mode=args.mode,
        ell=cfg.ell,
        n=args.n,
        dims=dims,
        target=args.target,
        seed=cfg.seed,
        count=args.count,
        max_candidates=cfg.search_cap,
        budget=cfg.budget,
    )
    try:
        hits = search_mp_codes(a, req)
    except InfeasibleSearchError as exc:
        print(f"infeasible: {exc}")
        return EXIT_INFEASIBLE
    except ValueError as exc:
        raise _CliError(EXIT_VALIDATION, str(exc)) from None
    for idx, hit in enumerate(hits, start=1):
        big = expand(hit.mp)
        print(f"candidate {idx}: [{big.n},{big.k},{hit.distance}] attempt {hit.attempt}")
        text = fmt.dump_mp(hit.mp)
        if cfg.out:
            path = f"{cfg.out}{idx}.mp"
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(f"file: {path}")
        else:
            sys.stdout.write(text)
    if not hits:
        print("no candidate found within the search cap")
        return EXIT_INCONCLUSIVE
    return EXIT_HOLDS


# ----------------------------------------------------------------------
# wiring
# ----------------------------------------------------------------------

def _config(args) -> RunConfig:
    return RunConfig(
        ell=getattr(args, "ell", 0),
        enum_cap=getattr(args, "enum_cap", DistanceBudget.enum_cap),
        lw_cap=getattr(args, "lw_cap", DistanceBudget.lw_cap),
        search_cap=getattr(args, "search_cap", 2000),
        seed=getattr(args, "seed", 0),
        machine=getattr(args, "machine", False),
        out=getattr(args, "out", None),
    )


def _add_common(p: argparse.ArgumentParser, *, ell: bool = True):
    if ell:
        p.add_argument("--ell", type=int, default=0, help="Galois level (0 = Euclidean)")
    p.add_argument("--enum-cap", dest="enum_cap", type=int,
                   default=DistanceBudget.enum_cap,
                   help="max q^k for full codeword enumeration")
    p.add_argument("--lw-cap", dest="lw_cap", type=int,
                   default=DistanceBudget.lw_cap,
                   help="max membership tests in the low-weight search")
    p.add_argument("--machine", action="store_true",
                   help="machine-readable one-fact-per-line output")
    p.add_argument("--out", default=None, help="output file path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mpcodes", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="parameters of a code file")
    p.add_argument("codefile")
    _add_common(p, ell=False)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("mp", help="expand an MP description")
    p.add_argument("mpfile")
    _add_common(p, ell=False)
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("dual", help="l-Galois dual of an MP description")
    p.add_argument("mpfile")
    _add_common(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("check", help="self-orthogonality / dual-containment check")
    p.add_argument("mpfile")
    p.add_argument("--mode", choices=("so", "dc"), required=True)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="cross-check against the brute-force oracle")
    p.add_argument("mpfile")
    p.add_argument("--oracle-cap", dest="oracle_cap", type=int,
                   default=oracle.DEFAULT_CAP,
                   help="max codewords the oracle may enumerate")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search constituents meeting a check")
    p.add_argument("--matrix", required=True, help="defining matrix file")
    p.add_argument("--mode", choices=("so", "dc"), required=True)
    p.add_argument("--n", type=int, required=True, help="constituent length")
    p.add_argument("--dims", required=True,
                   help="comma-separated constituent dimensions")
    p.add_argument("--target", type=int, default=None,
                   help="required exact minimum distance of the expansion")
    p.add_argument("--count", type=int, default=1, help="hits to emit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--search-cap", dest="search_cap", type=int, default=2000,
                   help="max candidate constructions")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except RankDeficientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except UndefinedDistanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # internal errors still honour the >=10 contract
        print(f"internal error: {exc}", file=sys.stderr)
        return 20


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
