"""Command-line front end.

Every command prints one report to stdout in JSON, CSV or text and exits with
0 (pass), 1 (something verified false), 2 (usage or hypothesis error) or
3 (resource cap).  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Callable

from .catalog import CATALOG, FamilyParams, catalog_document, family_claims, get_entry
from .dissection import f_dissection, psi_dissection
from .engine import SearchConfig, resolve_cap, search_congruences, verify_claims
from .errors import HypothesisViolation, SpecParseError, TruncationBudgetExceeded
from .partitions import PartitionFunction, check_bp_prime_relation, function_series
from .theta import (
    EtaQuotientSpec,
    eta_quotient_series,
    euler_series,
    jacobi_cube_series,
    psi_series,
    ramanujan5_check,
    verify_euler_product,
    verify_jacobi_cube,
    verify_jtp,
    verify_psi_product,
    verify_quintuple,
)

SCHEMA_VERSION = 1
FORMATS = ("json", "csv", "text")
DEFAULT_MAX_COUNT = 100_000


class Exit(IntEnum):
    OK = 0
    FALSE = 1
    USAGE = 2
    CAP = 3


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every command."""

    truncation: int | None = None
    modulus: int = 0
    fmt: str = "json"
    max_truncation: int | None = None
    max_count: int = DEFAULT_MAX_COUNT
    jobs: int = 1
    timing: bool = False

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.max_count < 1 or (self.max_truncation is not None and self.max_truncation < 1):
            raise ValueError("caps must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("--mod must be 0 (exact) or at least 2")
        if self.truncation is not None and self.truncation < 0:
            raise ValueError("--n must be nonnegative")

    @property
    def cap(self) -> int:
        return resolve_cap(self.max_truncation)

    def check_truncation(self, N: int) -> None:
        if N > self.cap:
            raise TruncationBudgetExceeded(f"truncation {N} exceeds the cap {self.cap}")

    def check_count(self, count: int) -> None:
        if count < 1:
            raise ValueError("--count must be at least 1")
        if count > self.max_count:
            raise TruncationBudgetExceeded(f"--count {count} exceeds the cap {self.max_count}")


@dataclass
class Outcome:
    params: dict[str, Any]
    results: list[dict[str, Any]]
    code: Exit = Exit.OK


# -- rendering ---------------------------------------------------------------------


def _flatten(row: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + "."))
        elif isinstance(value, (list, tuple)):
            flat[name] = json.dumps(value, separators=(",", ":"))
        elif value is None:
            flat[name] = ""
        else:
            flat[name] = value
    return flat


def render(command: str, outcome: Outcome, fmt: str, timing_ms: float | None) -> str:
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "params": outcome.params,
            "results": outcome.results,
            "timing_ms": timing_ms,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    rows = [_flatten(r) for r in outcome.results]
    if fmt == "csv":
        header: list[str] = []
        for r in rows:
            header.extend(k for k in r if k not in header)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = [f"# {command} " + " ".join(f"{k}={v}" for k, v in outcome.params.items())]
    for r in rows:
        lines.append("  ".join(f"{k}={v}" for k, v in r.items()))
    if timing_ms is not None:
        lines.append(f"# {timing_ms:.1f} ms")
    return "\n".join(lines) + "\n"


# -- expand ----------------------------------------------------------------------------

_BUILTINS: dict[str, Callable] = {
    "psi": psi_series,
    "euler": euler_series,
    "f": euler_series,
    "jacobi-cube": jacobi_cube_series,
}


def _expand_series(spec: str, N: int, modulus: int):
    key = spec.strip()
    if key in _BUILTINS:
        return _BUILTINS[key](N, modulus)
    if "^" not in key:
        try:
            fn = PartitionFunction.parse(key)
        except SpecParseError:
            raise SpecParseError(
                f"unknown series {spec!r}: use psi, euler, f, jacobi-cube, p, b<l>, b'<p> "
                f"or an eta quotient such as 5^1,1^-1") from None
        return function_series(fn, N, modulus)
    return eta_quotient_series(EtaQuotientSpec.parse(key), N, modulus)


def cmd_expand(args, cfg: RunConfig) -> Outcome:
    N = 20 if cfg.truncation is None else cfg.truncation
    cfg.check_truncation(N)
    s = _expand_series(args.spec, N, cfg.modulus)
    rows = [{"n": n, "coefficient": c} for n, c in enumerate(s.tolist())]
    return Outcome({"spec": args.spec, "n": N, "mod": cfg.modulus}, rows)


# -- verify-identity -------------------------------------------------------------------------


def _int_field(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None


def _sign(text: str) -> int:
    table = {"+": 1, "1": 1, "+1": 1, "-": -1, "-1": -1}
    if text not in table:
        raise ValueError(f"sign must be + or -, got {text!r}")
    return table[text]


def _identity_reports(ident: str, N: int | None, cfg: RunConfig) -> tuple[int, list]:
    name, *rest = ident.split(":")

    def arity(k: int):
        if len(rest) != k:
            raise ValueError(f"identity {name!r} takes {k} parameter(s), got {ident!r}")

    if name in ("euler-product", "psi-product", "jacobi-cube", "ramanujan5"):
        arity(0)
        N = 500 if N is None else N
        cfg.check_truncation(N)
        if name == "ramanujan5":
            check = ramanujan5_check(N)
            return N, [check.report.to_dict(), check.replay.to_dict()]
        fn = {"euler-product": verify_euler_product, "psi-product": verify_psi_product,
              "jacobi-cube": verify_jacobi_cube}[name]
        return N, [fn(N).to_dict()]
    if name == "jtp":
        arity(2)
        t, sign = _int_field(rest[0], "t"), _sign(rest[1])
        if t < 1:
            raise HypothesisViolation("jtp needs t >= 1")
        N = 500 if N is None else N
        cfg.check_truncation(N)
        return N, [verify_jtp(t, sign, N).to_dict()]
    if name == "quintuple":
        arity(2)
        u, v = _int_field(rest[0], "u"), _int_field(rest[1], "v")
        if u < 1 or v < 1:
            raise HypothesisViolation("quintuple needs u, v >= 1")
        N = 500 if N is None else N
        cfg.check_truncation(N)
        return N, [verify_quintuple(u, v, N).to_dict()]
    if name in ("psi-dissect", "f-dissect", "bp-prime"):
        arity(1)
        p = _int_field(rest[0], "p")
        if name == "bp-prime":
            N = 1000 if N is None else N
            cfg.check_truncation(p * N + p * p)
            return N, [check_bp_prime_relation(p, N).to_dict()]
        N = max(3 * p * p, 600) if N is None else N
        cfg.check_truncation(N)
        build = psi_dissection if name == "psi-dissect" else f_dissection
        return N, [build(p, N).to_dict()]
    raise ValueError(
        f"unknown identity {ident!r}; expected euler-product, psi-product, jacobi-cube, "
        f"jtp:t:sign, quintuple:u:v, ramanujan5, psi-dissect:p, f-dissect:p or bp-prime:p")


def _matched(row: dict) -> bool:
    return row["match"]["matched"] if "match" in row else row["matched"]


def cmd_verify_identity(args, cfg: RunConfig) -> Outcome:
    N, rows = _identity_reports(args.id, cfg.truncation, cfg)
    code = Exit.OK if all(_matched(r) for r in rows) else Exit.FALSE
    return Outcome({"id": args.id, "n": N}, rows, code)


# -- verify-family ------------------------------------------------------------------------------


def parse_range(text: str | None) -> list[int | None]:
    """``"3"`` -> [3], ``"0..2"`` -> [0, 1, 2], None -> [None]."""
    if text is None:
        return [None]
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = _int_field(lo, "range start"), _int_field(hi, "range end")
        if hi_i < lo_i:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [_int_field(text, "value")]


def _primes_arg(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(_int_field(t, "prime") for t in text.split(","))


def family_params(args) -> list[FamilyParams]:
    entry = get_entry(args.id)
    given = {name: getattr(args, name) for name in ("i", "j", "r") if getattr(args, name) is not None}
    if len(given) > 1:
        raise ValueError("give at most one of --i, --j, --r")
    index = None
    if given:
        (flag, index), = given.items()
        if entry.index_name != flag:
            expected = f"--{entry.index_name}" if entry.index_name else "no index"
            raise HypothesisViolation(f"{entry.id} takes {expected}, not --{flag}")
    return [
        FamilyParams(entry.id, p=args.p, alpha=a, index=index, primes=_primes_arg(args.primes),
                     k=args.k, family=args.family)
        for a in parse_range(args.alpha)
    ]


def cmd_verify_family(args, cfg: RunConfig) -> Outcome:
    count = args.count
    cfg.check_count(count)
    claims = {}
    for fp in family_params(args):
        for c in family_claims(fp):
            claims.setdefault(c.key(), c)
    ordered = [claims[k] for k in sorted(claims)]
    results = verify_claims(ordered, count, cfg.cap, jobs=cfg.jobs, partial=args.partial)
    params = {"id": args.id, "p": args.p, "alpha": args.alpha, "i": args.i, "j": args.j,
              "r": args.r, "k": args.k, "primes": args.primes, "family": args.family,
              "count": count, "partial": args.partial}
    params = {k: v for k, v in params.items() if v not in (None, False)}
    if not all(r.verified for r in results):
        code = Exit.FALSE
    elif not all(r.scanned for r in results):
        code = Exit.CAP
    else:
        code = Exit.OK
    return Outcome(params, [r.to_dict() for r in results], code)


# -- support, search, catalog -------------------------------------------------------------------


def cmd_support(args, cfg: RunConfig) -> Outcome:
    name = {"psi": "psi", "f": "f_neg", "f_neg": "f_neg"}.get(args.function)
    if name is None:
        raise ValueError(f"--function must be psi or f, got {args.function!r}")
    build = psi_dissection if name == "psi" else f_dissection
    report = build(args.p)
    row = {
        "function": args.function,
        "p": args.p,
        "support": list(report.support),
        "special_class": report.special_class,
        "special_k": report.special_k,
        "components": [c.describe() for c in report.components],
        "matched": report.match.matched,
    }
    return Outcome({"function": args.function, "p": args.p}, [row],
                   Exit.OK if report.match.matched else Exit.FALSE)


def cmd_search(args, cfg: RunConfig) -> Outcome:
    cfg.check_count(args.count)
    fn = PartitionFunction.parse(args.function)
    config = SearchConfig(fn, cfg.modulus, args.a_max, args.b_max, args.count)
    found = search_congruences(config, cfg.cap)
    rows = [dict(rank=n, **r.to_dict()) for n, r in enumerate(found, start=1)]
    for row in rows:
        row.pop("provenance", None)
    params = {"function": args.function, "mod": cfg.modulus, "a_max": args.a_max,
              "b_max": args.b_max, "count": args.count}
    return Outcome({k: v for k, v in params.items() if v is not None}, rows)


def cmd_catalog(args, cfg: RunConfig) -> Outcome:
    doc = catalog_document()
    entries = doc["entries"]
    if args.id:
        entries = [get_entry(args.id).to_dict()]
    return Outcome({"catalog_schema_version": doc["schema_version"], "id": args.id}, entries)


# -- argument parsing -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--max-truncation", type=int, default=None,
                        help="largest series index any command may compute "
                             "(default: $REGULUS_MAX_TRUNCATION or 10^7)")
    common.add_argument("--max-count", type=int, default=DEFAULT_MAX_COUNT)
    common.add_argument("--timing", action="store_true",
                        help="report wall time in timing_ms (otherwise null)")

    parser = argparse.ArgumentParser(prog="regulus",
                                     description="theta-function dissections and partition congruences")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="list series coefficients")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--mod", type=int, default=0)

    p = sub.add_parser("verify-identity", parents=[common], help="check an identity")
    p.add_argument("--id", required=True)
    p.add_argument("--n", type=int)

    p = sub.add_parser("verify-family", parents=[common], help="scan a catalog family")
    p.add_argument("--id", required=True, choices=list(CATALOG))
    p.add_argument("--p", type=int)
    p.add_argument("--alpha", help="a value or an inclusive range such as 0..2")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--primes", help="comma-separated primes for multi-prime entries")
    p.add_argument("--family", type=int, help="member number within a bundled entry")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--partial", action="store_true",
                   help="scan over-cap claims on the longest prefix that fits")

    p = sub.add_parser("support", parents=[common], help="residue support of a dissection")
    p.add_argument("--function", required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("search", parents=[common], help="look for progressions of zeros")
    p.add_argument("--function", required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int)
    p.add_argument("--count", type=int, default=500)

    p = sub.add_parser("catalog", parents=[common], help="print the congruence catalog")
    p.add_argument("--id")
    return parser


COMMANDS = {
    "expand": cmd_expand,
    "verify-identity": cmd_verify_identity,
    "verify-family": cmd_verify_family,
    "support": cmd_support,
    "search": cmd_search,
    "catalog": cmd_catalog,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        cfg = RunConfig(
            truncation=getattr(args, "n", None),
            modulus=getattr(args, "mod", 0) or 0,
            fmt=args.format,
            max_truncation=args.max_truncation,
            max_count=args.max_count,
            jobs=getattr(args, "jobs", 1),
            timing=args.timing,
        )
        outcome = COMMANDS[args.command](args, cfg)
    except TruncationBudgetExceeded as exc:
        print(f"regulus: resource cap: {exc}", file=stderr)
        return Exit.CAP
    except (HypothesisViolation, SpecParseError, ValueError) as exc:
        print(f"regulus: error: {exc}", file=stderr)
        return Exit.USAGE
    timing = round((time.perf_counter() - start) * 1000, 3) if cfg.timing else None
    stdout.write(render(args.command, outcome, cfg.fmt, timing))
    return int(outcome.code)


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
