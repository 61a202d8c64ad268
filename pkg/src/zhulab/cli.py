"""Command line entry point.

    zhulab [--config PATH] [--cutoff N] [--threads T] [--out PATH] [--format json|csv]
           describe | algebra --n N | bimodule --n N --m M
           | module --kind fock|verma [--lambda L] [--h H]
           | check --suite NAME | semisimple --n N

Exit status: 0 success, 1 a check failed (the report carries the witness),
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .config import Config, ConfigError, load_config
from .linalg import parse_rational
from .modules import FOCK, VERMA, AdmissibleModule, check_grading, check_zhu_action
from .quotients import (ClosureViolation, algebra_on_quotient, bimodule_on_quotient, build_quotients,
                        partial_checks, required_cutoff)
from .report import render
from .suites import SUITES, run_suite, semisimple_report
from .voa import CutoffExceeded, VOA

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, found {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="configuration file")
    common.add_argument("--cutoff", type=_nonneg, default=argparse.SUPPRESS,
                        help="truncation N (overrides the config)")
    common.add_argument("--threads", type=_nonneg, default=argparse.SUPPRESS,
                        help="worker threads for generator enumeration (default 1)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="report path (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="zhulab", parents=[common],
                                description="Exact Zhu algebra and bimodule computations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("describe", parents=[common], help="presentation and graded dimensions")
    a = sub.add_parser("algebra", parents=[common], help="truncated A_n(V)")
    a.add_argument("--n", type=_nonneg, required=True)
    b = sub.add_parser("bimodule", parents=[common], help="truncated A_{n,m}(V)")
    b.add_argument("--n", type=_nonneg, required=True)
    b.add_argument("--m", type=_nonneg, required=True)
    mo = sub.add_parser("module", parents=[common], help="Fock or Verma module checks")
    mo.add_argument("--kind", choices=(FOCK, VERMA), required=True)
    mo.add_argument("--lambda", dest="lam", type=_rational_arg)
    mo.add_argument("--h", type=_rational_arg)
    c = sub.add_parser("check", parents=[common], help="run a named check suite")
    c.add_argument("--suite", choices=sorted(SUITES), required=True)
    s = sub.add_parser("semisimple", parents=[common], help="semisimplicity of truncated A_n(V)")
    s.add_argument("--n", type=_nonneg, required=True)
    return p


def _all_passed(checks) -> bool:
    return all(c["passed"] if isinstance(c, dict) else c.passed for c in checks)


def cmd_describe(cfg: Config, threads: int):
    N = cfg.N
    P = cfg.presentation(N)
    dims = [P.dim(w) for w in range(N + 1)]
    rep = {"command": "describe", "config": cfg.effective(), "presentation": P.describe(),
           "dims_by_weight": dims}
    if P.quotient is not None:
        rep["ideal_dims_by_weight"] = [P.quotient.dim(w) for w in range(N + 1)]
    return rep, True


def cmd_algebra(cfg: Config, n: int, threads: int):
    N = cfg.N
    P = cfg.presentation(required_cutoff(N, n, schedule=cfg.schedule))
    data = algebra_on_quotient(P, n, N, schedule=cfg.schedule, threads=threads)
    extra = partial_checks(data, P)
    rep = {"command": "algebra", "config": cfg.effective(), "algebra": data.as_dict(),
           "partial_checks": [c.as_dict() for c in extra]}
    ok = _all_passed(data.checks) and _all_passed(extra) and data.quotient.stabilized
    return rep, ok


def cmd_bimodule(cfg: Config, n: int, m: int, threads: int):
    N = cfg.N
    aux = N if cfg.aux_cap is None else cfg.aux_cap
    P = cfg.presentation(required_cutoff(N, n, m, cfg.p_cap, cfg.schedule))
    qs = build_quotients(P, n, m, N, cfg.schedule, cfg.p_cap, aux, threads)
    data = bimodule_on_quotient(P, n, m, N, quotients=qs)
    rep = {"command": "bimodule", "config": cfg.effective(), "bimodule": data.as_dict()}
    ok = _all_passed(data.checks) and all(q.stabilized for q in qs)
    return rep, ok


def cmd_module(cfg: Config, kind: str, lam, h, threads: int):
    N = cfg.N
    V = VOA(cfg.kind, max(2 * N + 2, 8), cfg.central_charge)
    if kind == FOCK and V.kind != "heisenberg-rank1":
        raise UsageError("fock modules need voa.kind = heisenberg-rank1")
    if kind == VERMA and V.kind != "virasoro":
        raise UsageError("verma modules need voa.kind = virasoro")
    W = AdmissibleModule(V, kind, N, lam=cfg.lam if lam is None else lam,
                         h=cfg.h if h is None else h)
    checks = check_zhu_action(W, cap=min(4, N), levels=min(2, N)) + [check_grading(W, cap=min(4, N))]
    rep = {"command": "module", "config": cfg.effective(), "module": W.describe(),
           "checks": [c.as_dict() for c in checks]}
    return rep, _all_passed(checks)


def cmd_check(cfg: Config, suite: str, threads: int):
    rep = run_suite(suite, cfg, threads)
    rep = dict(rep, command="check")
    return rep, rep["passed"]


def cmd_semisimple(cfg: Config, n: int, threads: int):
    N = cfg.N
    P = cfg.presentation(required_cutoff(N, n, schedule=cfg.schedule))
    rep = semisimple_report(P, n, N, schedule=cfg.schedule, threads=threads)
    out = {"command": "semisimple", "config": cfg.effective(), "report": rep,
           "dim": rep["dim"], "semisimple": rep["semisimple"],
           "omega_eigenvalues": rep.get("omega_eigenvalues")}
    ok = rep["closed"] and rep["stabilized"] and _all_passed(rep["checks"])
    return out, ok


def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    ns = vars(args)
    logging.basicConfig(level=logging.INFO if ns.get("verbose") else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = load_config(ns["config"]) if "config" in ns else Config()
    except ConfigError as e:
        print(f"zhulab: config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    cfg = cfg.with_overrides(cutoff=ns.get("cutoff"), output_path=ns.get("out"),
                             output_format=ns.get("format"))
    threads = max(1, ns.get("threads", 1))
    try:
        cmd = args.command
        if cmd == "describe":
            rep, ok = cmd_describe(cfg, threads)
        elif cmd == "algebra":
            rep, ok = cmd_algebra(cfg, args.n, threads)
        elif cmd == "bimodule":
            rep, ok = cmd_bimodule(cfg, args.n, args.m, threads)
        elif cmd == "module":
            rep, ok = cmd_module(cfg, args.kind, args.lam, args.h, threads)
        elif cmd == "check":
            rep, ok = cmd_check(cfg, args.suite, threads)
        else:
            rep, ok = cmd_semisimple(cfg, args.n, threads)
    except UsageError as e:
        print(f"zhulab: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CutoffExceeded, ClosureViolation) as e:
        print(f"zhulab: {e} (raise the cutoff)", file=sys.stderr)
        return EXIT_FAIL
    try:
        text = render(rep, cfg.output_format)
    except ValueError as e:
        print(f"zhulab: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, cfg.output_path)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
