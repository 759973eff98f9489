"""Command-line interface.

Subcommands: g, rkron, lr, verify, scan-max, identity.  Output formats:
plain (default), json, csv; json and csv carry identical numeric content and
every integer is a decimal string.  Exit codes: 0 success/pass, 1
verification fail or identity discrepancy, 2 usage/parse error, 3 budget
exceeded / not desk-feasible.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
import time

from . import __version__
from .characters import default_cache, load_or_new, set_default_cache
from .coefficients import kronecker, lr
from .partitions import Partition, format_partition, parse_partition, partitions_of
from .reduced import (
    kronecker_via_bor,
    reduced_bdo,
    reduced_kronecker,
    reduced_stable,
    validate_bor_sign,
    BOR_SIGN,
)
from .verifiers import (
    BudgetExceeded,
    DEFAULT_GBAR_BUDGET,
    FAIL,
    NOT_DESK_FEASIBLE,
    PASS,
    max_scan,
    scan_respects_bound,
    theorem12_chain,
    verify_family,
    verify_saturation_counterexample,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return os.path.join(base, "kroncalc")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kroncalc",
        description="Exact Kronecker / Littlewood-Richardson / reduced Kronecker "
        "coefficients and theorem verifiers.",
    )
    parser.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    parser.add_argument(
        "--cache-dir",
        default=_default_cache_dir(),
        help="character cache directory (default: per-user cache dir)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker cap for scans (default: available parallelism)",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_GBAR_BUDGET,
        help="padded-degree cap for direct computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("g", help="Kronecker coefficient g(lam, mu, nu)")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")

    p = sub.add_parser("rkron", help="reduced Kronecker coefficient")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    p.add_argument("--method", choices=("auto", "stable", "bdo"), default="auto")

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lam_{mu nu}")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")

    p = sub.add_parser("verify", help="verify a theorem certificate")
    p.add_argument("claim", choices=("prop24", "thm12", "family", "custom"))
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--gamma", default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--N", type=int, default=2, dest="n_scale")

    p = sub.add_parser("scan-max", help="exhaustive reduced-coefficient maximum")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("identity", help="cross-check an identity exhaustively")
    p.add_argument("name", choices=("bdo", "bor"))
    p.add_argument("--total", type=int, default=8, help="total size bound (bdo)")
    p.add_argument("--n", type=int, default=5, help="degree bound (bor)")

    return parser


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if fmt == "csv":
        rows = []

        def flat(prefix, value):
            if isinstance(value, dict):
                for k in sorted(value):
                    flat(f"{prefix}.{k}" if prefix else str(k), value[k])
            elif isinstance(value, list):
                for i, v in enumerate(value):
                    flat(f"{prefix}[{i}]", v)
            else:
                rows.append(f"{prefix},{value}")

        flat("", doc)
        return "\n".join(rows)
    lines = []

    def plain(prefix, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            if prefix:
                lines.append(f"{pad}{prefix}:")
            for k in sorted(value):
                plain(k, value[k], indent + bool(prefix))
        elif isinstance(value, list):
            lines.append(f"{pad}{prefix}:")
            for v in value:
                plain("-", v, indent + 1)
        else:
            lines.append(f"{pad}{prefix}: {value}")

    plain("", doc)
    return "\n".join(lines)


def _doc(inputs: dict, *, result=None, method=None, extra=None, t0: float) -> dict:
    doc = {
        "version": __version__,
        "inputs": inputs,
        "timing": {"seconds": f"{time.perf_counter() - t0:.3f}"},
    }
    if result is not None:
        doc["result"] = str(result)
    if method is not None:
        doc["method"] = method
    if extra:
        doc.update(extra)
    return doc


def _parse3(*texts):
    return tuple(parse_partition(t) for t in texts)


@contextlib.contextmanager
def _cache_session(cache_dir: str):
    """Exclusive advisory lock on the cache directory for the whole run."""
    os.makedirs(cache_dir, exist_ok=True)
    lock_path = os.path.join(cache_dir, ".lock")
    cache_path = os.path.join(cache_dir, "characters.cache")
    with open(lock_path, "w") as lock_fh:
        try:
            import fcntl

            fcntl.flock(lock_fh, fcntl.LOCK_EX)
        except ImportError:
            pass
        set_default_cache(load_or_new(cache_path))
        try:
            yield
        finally:
            default_cache().save(cache_path)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()

    try:
        with _cache_session(args.cache_dir):
            doc, exit_code = _dispatch(args, t0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    print(_render(doc, args.format))
    return exit_code


def _dispatch(args, t0):
    if args.command == "g":
        lam, mu, nu = _parse3(args.lam, args.mu, args.nu)
        value = kronecker(lam, mu, nu)
        inputs = {
            "lam": format_partition(lam),
            "mu": format_partition(mu),
            "nu": format_partition(nu),
        }
        return _doc(inputs, result=value, method="classsum", t0=t0), EXIT_OK

    if args.command == "rkron":
        alpha, beta, gamma = _parse3(args.alpha, args.beta, args.gamma)
        value, used = reduced_kronecker(alpha, beta, gamma, method=args.method)
        inputs = {
            "alpha": format_partition(alpha),
            "beta": format_partition(beta),
            "gamma": format_partition(gamma),
        }
        return _doc(inputs, result=value, method=used, t0=t0), EXIT_OK

    if args.command == "lr":
        lam, mu, nu = _parse3(args.lam, args.mu, args.nu)
        value = lr(lam, mu, nu)
        inputs = {
            "lam": format_partition(lam),
            "mu": format_partition(mu),
            "nu": format_partition(nu),
        }
        return _doc(inputs, result=value, method="tableau", t0=t0), EXIT_OK

    if args.command == "verify":
        report = _run_verify(args)
        inputs = {"claim": args.claim}
        doc = _doc(inputs, extra={"report": report.to_dict()}, t0=t0)
        code = {PASS: EXIT_OK, FAIL: EXIT_FAIL, NOT_DESK_FEASIBLE: EXIT_BUDGET}[
            report.status
        ]
        return doc, code

    if args.command == "scan-max":
        bound, best, argmax, gmax = max_scan(
            args.n, gbar_budget=args.budget, jobs=max(1, args.jobs)
        )
        inputs = {"n": str(args.n)}
        table = [
            {
                "alpha": format_partition(a),
                "beta": format_partition(b),
                "gamma": format_partition(c),
            }
            for a, b, c in argmax
        ]
        extra = {
            "table": {
                "total_bound": str(bound),
                "max_reduced": str(best),
                "argmax": table,
                "max_kronecker_at_n": str(gmax),
                "respects_upper_bound": str(scan_respects_bound(args.n, best)),
            }
        }
        return _doc(inputs, result=best, method="auto", extra=extra, t0=t0), EXIT_OK

    if args.command == "identity":
        return _run_identity(args, t0)

    raise ValueError(f"unknown command {args.command!r}")


def _run_verify(args):
    if args.claim == "prop24":
        return verify_saturation_counterexample(
            Partition((1,) * 5), Partition((1,) * 5), Partition((3, 3)), 2,
            gbar_budget=args.budget,
        )
    if args.claim == "thm12":
        return theorem12_chain(args.k, gbar_budget=args.budget)
    if args.claim == "family":
        if args.gamma is None:
            raise ValueError("verify family requires --gamma")
        return verify_family(parse_partition(args.gamma))
    if args.alpha is None or args.beta is None or args.gamma is None:
        raise ValueError("verify custom requires --alpha, --beta and --gamma")
    return verify_saturation_counterexample(
        parse_partition(args.alpha),
        parse_partition(args.beta),
        parse_partition(args.gamma),
        args.n_scale,
        gbar_budget=args.budget,
    )


def _run_identity(args, t0):
    if args.name == "bdo":
        checked = 0
        for total in range(args.total + 1):
            for a in range(total + 1):
                for b in range(total - a + 1):
                    for al in partitions_of(a):
                        for be in partitions_of(b):
                            for ga in partitions_of(total - a - b):
                                checked += 1
                                x = reduced_bdo(al, be, ga)
                                y = reduced_stable(al, be, ga)
                                if x != y:
                                    doc = _doc(
                                        {"total": str(args.total)},
                                        extra={
                                            "discrepancy": {
                                                "alpha": format_partition(al),
                                                "beta": format_partition(be),
                                                "gamma": format_partition(ga),
                                                "bdo": str(x),
                                                "stable": str(y),
                                            }
                                        },
                                        t0=t0,
                                    )
                                    return doc, EXIT_FAIL
        doc = _doc(
            {"total": str(args.total)},
            result=checked,
            method="bdo=stable",
            extra={"checked": str(checked)},
            t0=t0,
        )
        return doc, EXIT_OK

    # bor
    checked = 0
    for n in range(1, args.n + 1):
        parts = list(partitions_of(n))
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    checked += 1
                    x = kronecker_via_bor(lam, mu, nu)
                    y = kronecker(lam, mu, nu)
                    if x != y:
                        doc = _doc(
                            {"n": str(args.n)},
                            extra={
                                "discrepancy": {
                                    "lam": format_partition(lam),
                                    "mu": format_partition(mu),
                                    "nu": format_partition(nu),
                                    "bor": str(x),
                                    "classsum": str(y),
                                }
                            },
                            t0=t0,
                        )
                        return doc, EXIT_FAIL
    sign = validate_bor_sign(min(args.n, 5)) if args.n >= 1 else BOR_SIGN
    doc = _doc(
        {"n": str(args.n)},
        result=checked,
        method="bor=classsum",
        extra={"checked": str(checked), "validated_sign": str(sign)},
        t0=t0,
    )
    return doc, EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
