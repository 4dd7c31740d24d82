"""Command line front end.

    toricpoisson --space cpn --dim 2 --poisson std --mode both

Exit codes: 0 success (or agreement), 1 usage error, 2 disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import traceback
from dataclasses import dataclass

from .engine import cohomology, infinite_patterns
from .oracle import cohomology_oracle, compare
from .report import CohomologyReport
from .toric import PoissonStructure, Space, standard_structure

__all__ = ["RunConfig", "UsageError", "parse_args", "run", "main"]

EXIT_OK, EXIT_USAGE, EXIT_DIFF = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    space: Space | None
    poisson: PoissonStructure | None
    poisson_source: str = "std"
    k_max: int = 0
    mode: str = "closed"
    degree_bound: int | None = None
    fmt: str = "table"
    with_basis: bool = False
    seed: int | None = None
    verify_report: str | None = None


def _build_parser() -> _Parser:
    p = _Parser(prog="toricpoisson", description="Poisson cohomology of toric Poisson structures on CP^n and C^n.")
    p.add_argument("--space", choices=["cpn", "cn"], default="cpn")
    p.add_argument("--dim", type=int, help="n, the complex dimension")
    p.add_argument(
        "--poisson",
        default="std",
        help="std, zero, random, an inline JSON entry list, or @FILE with JSON",
    )
    p.add_argument("--k", type=int, dest="k_max", help="highest degree (default n)")
    p.add_argument("--mode", choices=["closed", "oracle", "both"], default="closed")
    p.add_argument("--degree-bound", type=int, help="positive-degree bound for weights on C^n")
    p.add_argument("--format", choices=["table", "json"], default="table", dest="fmt")
    p.add_argument("--basis", action="store_true", help="list basis elements (closed form)")
    p.add_argument("--seed", type=int, help="seed for --poisson random")
    p.add_argument("--verify-report", metavar="FILE", help="recompute a saved JSON report and check it")
    return p


def _load_poisson(source: str, n: int, seed: int | None) -> PoissonStructure:
    if source == "std":
        return standard_structure(n)
    if source == "zero":
        return PoissonStructure.zero(n)
    if source == "random":
        return PoissonStructure.random(n, random.Random(seed))
    text = source
    if source.startswith("@"):
        path = source[1:]
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--poisson: not std/zero/random and not valid JSON ({exc.msg})") from None
    try:
        return PoissonStructure.from_json(data, n=n)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"--poisson: malformed entry ({exc})") from None
    except ValueError as exc:
        raise UsageError(f"--poisson: {exc}") from None


def parse_args(argv=None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    if ns.verify_report:
        return RunConfig(None, None, fmt=ns.fmt, verify_report=ns.verify_report)
    if ns.dim is None:
        raise UsageError("--dim is required")
    n = ns.dim
    if n < 1:
        raise UsageError("--dim must be at least 1")
    space = Space.projective(n) if ns.space == "cpn" else Space.affine(n)
    k_max = n if ns.k_max is None else ns.k_max
    if k_max < 0:
        raise UsageError("--k must be nonnegative")
    if ns.degree_bound is not None and ns.degree_bound < 0:
        raise UsageError("--degree-bound must be nonnegative")
    if ns.seed is not None and ns.poisson != "random":
        raise UsageError("--seed only applies to --poisson random")
    Pi = _load_poisson(ns.poisson, n, ns.seed)
    if not space.is_projective and ns.degree_bound is None:
        if ns.mode != "closed":
            raise UsageError(f"--degree-bound is required for the oracle on {space}")
        patterns = infinite_patterns(space, Pi, k_max)
        if patterns:
            shown = " ".join("{" + ",".join(map(str, t)) + "}" for t in patterns)
            raise UsageError(f"{space} with this structure has infinite weight families ({shown}); pass --degree-bound")
    return RunConfig(
        space=space,
        poisson=Pi,
        poisson_source=ns.poisson,
        k_max=k_max,
        mode=ns.mode,
        degree_bound=ns.degree_bound if not space.is_projective else None,
        fmt=ns.fmt,
        with_basis=ns.basis,
        seed=ns.seed,
    )


def _render(reports: dict, fmt: str, diff=None) -> str:
    if fmt == "json":
        if len(reports) == 1:
            return next(iter(reports.values())).dumps()
        data = {name: r.to_json() for name, r in reports.items()}
        data["diff"] = list(diff or [])
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    out = "\n".join(r.to_table() for r in reports.values())
    if diff is not None:
        out += "agreement: yes\n" if not diff else "agreement: NO\n" + "".join(f"  {d}\n" for d in diff)
    return out


def _recompute(report: CohomologyReport) -> CohomologyReport:
    with_basis = any(e.basis is not None for e in report.entries)
    if report.source == "oracle":
        return cohomology_oracle(report.space, report.poisson, report.k_max, report.degree_bound)
    return cohomology(report.space, report.poisson, report.k_max, report.degree_bound, with_basis=with_basis)


def _verify(config: RunConfig, out) -> int:
    try:
        with open(config.verify_report, encoding="utf-8") as fh:
            saved = CohomologyReport.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {config.verify_report}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{config.verify_report} is not a cohomology report ({exc})") from None
    fresh = _recompute(saved)
    if fresh.dumps() != saved.dumps():
        print("report does not match a fresh computation", file=sys.stderr)
        for d in compare(fresh, saved) if saved.source != "oracle" else compare(saved, fresh):
            print(f"  {d}", file=sys.stderr)
        out.write(_render({"recomputed": fresh}, config.fmt))
        return EXIT_DIFF
    out.write(_render({saved.source: saved}, config.fmt))
    return EXIT_OK


def run(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if config.verify_report:
        return _verify(config, out)
    reports = {}
    if config.mode in ("closed", "both"):
        reports["closed"] = cohomology(
            config.space, config.poisson, config.k_max, config.degree_bound, with_basis=config.with_basis
        )
    if config.mode in ("oracle", "both"):
        reports["oracle"] = cohomology_oracle(config.space, config.poisson, config.k_max, config.degree_bound)
    diff = compare(reports["closed"], reports["oracle"]) if config.mode == "both" else None
    out.write(_render(reports, config.fmt, diff))
    return EXIT_DIFF if diff else EXIT_OK


def _module_of(exc: BaseException) -> str:
    frames = traceback.extract_tb(exc.__traceback__)
    for fr in reversed(frames):
        if f"{os.sep}toricpoisson{os.sep}" in fr.filename:
            return os.path.splitext(os.path.basename(fr.filename))[0]
    return "toricpoisson"


def main(argv=None) -> int:
    try:
        config = parse_args(argv)
        return run(config)
    except UsageError as exc:
        print(f"toricpoisson: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"toricpoisson: {_module_of(exc)}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
