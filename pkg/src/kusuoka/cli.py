"""Command-line front end.

Every subcommand writes one JSON report to stdout (or ``--out``) with the keys
``command``, ``inputs``, ``value``, ``witness``, ``checks`` and ``exit_status``.
Exit codes: 0 success, 1 a ``verify`` check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Sequence

from . import formats
from .dominance import prune_measures, prune_spectral
from .errors import DegenerateDistribution, KusuokaError
from .families import (
    HigherOrderParams,
    SemidevParams,
    absolute_semidev_kusuoka,
    higher_order_dual,
    higher_order_risk,
    semideviation_risk,
    semidev_witness,
)
from .regularity import nonregularity_condition
from .riskcore import KusuokaSet, avar_variational, finite_max_risk, kusuoka_eval, spectral_risk
from .transform import t_forward, t_inverse
from .verify import run_checks

DEFAULT_TOL = 1e-9
COMMANDS = (
    "avar",
    "spectral",
    "kusuoka",
    "higher-order",
    "semidev",
    "semidev-kusuoka",
    "transform",
    "prune",
    "regularity",
    "verify",
)


class UsageError(KusuokaError):
    """A flag required by the chosen subcommand is missing."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kusuoka", description="Law-invariant coherent risk measures on discrete distributions.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--dist", help="distribution file (JSON atoms or CSV samples)")
    parser.add_argument("--measure", help="mixing measure on [0,1) (JSON)")
    parser.add_argument("--spectral", help="step spectral function (JSON)")
    parser.add_argument("--set", dest="set_file", help="finite set of measures or spectra (JSON)")
    parser.add_argument("--space", help="atomic probability space for 'regularity' (JSON)")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--c", type=float)
    parser.add_argument("--p", type=float)
    parser.add_argument("--lambda", dest="lam", type=float)
    parser.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--tol", type=float, help=f"verification tolerance (default {DEFAULT_TOL:g}, or $RISK_TOL)")
    return parser


def resolve_tol(flag: float | None) -> float:
    if flag is not None:
        return flag
    env = os.environ.get("RISK_TOL")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise UsageError(f"RISK_TOL={env!r} is not a number") from exc
    return DEFAULT_TOL


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + {"set_file": "set", "lam": "lambda"}.get(n, n) for n in missing)
        raise UsageError(f"{args.command} requires {flags}")


def _set_obj(kind: str, items: list) -> dict:
    if kind == "measures":
        return {"measures": [formats.measure_to_obj(m) for m in items]}
    return {"spectra": [formats.spectral_to_obj(s) for s in items]}


def _dispatch(args: argparse.Namespace, tol: float) -> dict[str, Any]:
    """Run one subcommand; returns the report without ``command``/``exit_status``."""
    cmd = args.command
    inputs: dict[str, Any] = {}
    value = None
    witness: Any = None
    checks: list[dict] = []

    d = None
    if args.dist is not None:
        d = formats.load_distribution(args.dist)
        inputs["dist"] = formats.distribution_to_obj(d)

    if cmd == "avar":
        _need(args, "dist", "alpha")
        inputs["alpha"] = args.alpha
        res = avar_variational(d, args.alpha)
        value, witness = res.value, {"t_star": res.argmin}

    elif cmd == "spectral":
        _need(args, "dist", "spectral")
        sigma = formats.load_spectral(args.spectral)
        inputs["spectral"] = formats.spectral_to_obj(sigma)
        value = spectral_risk(d, sigma)

    elif cmd == "kusuoka":
        _need(args, "dist", "set_file")
        kind, items = formats.load_set(args.set_file)
        inputs["set"] = _set_obj(kind, items)
        if kind == "measures":
            res = kusuoka_eval(d, KusuokaSet.of(items))
            value, witness = res.value, {"measure": formats.measure_to_obj(res.argmax)}
        else:
            res = finite_max_risk(d, items)
            value = res.value
            witness = {"index": res.index, "spectral": formats.spectral_to_obj(items[res.index])}

    elif cmd == "higher-order":
        _need(args, "dist", "c", "p")
        params = HigherOrderParams(args.c, args.p)
        inputs.update(c=args.c, p=args.p)
        res = higher_order_risk(d, params)
        value, witness = res.value, {"t_star": res.argmin}
        if args.p > 1 and d.n >= 2:
            witness["spectral"] = formats.spectral_to_obj(higher_order_dual(d, params).sigma)

    elif cmd == "semidev":
        _need(args, "dist", "lam")
        params = SemidevParams(args.lam, 1.0 if args.p is None else args.p)
        inputs.update(lam=params.lam, p=params.p)
        value = semideviation_risk(d, params)
        try:
            witness = {"zeta": list(semidev_witness(d, params))}
        except DegenerateDistribution:
            witness = None

    elif cmd == "semidev-kusuoka":
        _need(args, "dist", "lam")
        inputs["lam"] = args.lam
        res = absolute_semidev_kusuoka(d, args.lam)
        value, witness = res.value, {"kappa": res.argmin}

    elif cmd == "transform":
        inputs["direction"] = args.direction
        if args.direction == "forward":
            _need(args, "measure")
            mu = formats.load_measure(args.measure)
            inputs["measure"] = formats.measure_to_obj(mu)
            witness = {"spectral": formats.spectral_to_obj(t_forward(mu))}
        else:
            _need(args, "spectral")
            sigma = formats.load_spectral(args.spectral)
            inputs["spectral"] = formats.spectral_to_obj(sigma)
            witness = {"measure": formats.measure_to_obj(t_inverse(sigma, max(tol, 1e-12)))}

    elif cmd == "prune":
        _need(args, "set_file")
        kind, items = formats.load_set(args.set_file)
        inputs["set"] = _set_obj(kind, items)
        kept = list(prune_measures(KusuokaSet.of(items)).members) if kind == "measures" else prune_spectral(items)
        witness = _set_obj(kind, kept)

    elif cmd == "regularity":
        _need(args, "space")
        space = formats.load_space(args.space)
        inputs["space"] = {"probs": list(space.probs), "p_hat": space.p_hat}
        verdict = nonregularity_condition(space)
        witness = {"holds": verdict.holds, "status": verdict.status, "k": verdict.k}

    elif cmd == "verify":
        _need(args, "dist")
        c = 2.0 if args.c is None else args.c
        p = 2.0 if args.p is None else args.p
        lam = 0.5 if args.lam is None else args.lam
        extra = {}
        if args.measure is not None:
            extra["measures"] = [formats.load_measure(args.measure)]
        if args.spectral is not None:
            extra["spectra"] = [formats.load_spectral(args.spectral)]
        # validate parameters up front so bad flags are input errors, not failed checks
        HigherOrderParams(c, p)
        SemidevParams(lam, p)
        inputs.update(c=c, p=p, lam=lam, tol=tol)
        alphas = [args.alpha] if args.alpha is not None else None
        checks = [ch.as_dict() for ch in run_checks(d, tol=tol, alphas=alphas, c=c, p=p, lam=lam, **extra)]

    return {"inputs": inputs, "value": value, "witness": witness, "checks": checks}


def _summary(report: dict) -> str:
    if report["checks"]:
        failed = [c["name"] for c in report["checks"] if not c["passed"]]
        n = len(report["checks"])
        return f"{report['command']}: {n - len(failed)}/{n} checks passed" + (f" (failed: {', '.join(failed)})" if failed else "")
    if report["value"] is not None:
        return f"{report['command']}: {report['value']:.17g}"
    return f"{report['command']}: done"


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tol = resolve_tol(args.tol)
        report = _dispatch(args, tol)
    except KusuokaError as exc:
        print(f"kusuoka {args.command}: error: {exc}", file=sys.stderr)
        return 2
    status = 1 if any(not c["passed"] for c in report["checks"]) else 0
    report = {"command": args.command, **report, "exit_status": status}
    text = formats.dumps(report) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"kusuoka {args.command}: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    print(_summary(report), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
