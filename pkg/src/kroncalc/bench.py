"""Benchmark the compiled kernel against the pure-Python twin.

Run as ``python -m kroncalc.bench`` (add ``--full`` for the heavier ladder).
Each case is computed on both lanes, results are asserted equal, and the
speedup is reported.
"""

from __future__ import annotations

import argparse
import time

from .kernel import _pykernel
from .partitions import pad, partitions_of

try:
    from .kernel import _ckernel
except ImportError:
    _ckernel = None


def _char_table_case(n):
    parts = [tuple(p) for p in partitions_of(n)]

    def run(mod):
        return sum(mod.char_value(lam, rho) ** 2 for lam in parts for rho in parts)

    return f"character table n={n}", run


def _kron_case(lam, mu, nu, label):
    def run(mod):
        return mod.kron_classsum(lam, mu, nu)

    return label, run


def cases(full: bool):
    yield _char_table_case(8)
    yield _char_table_case(12 if full else 10)
    yield _kron_case(
        (8, 2, 2, 2, 2, 2), (8, 2, 2, 2, 2, 2), (6, 6, 6), "g(8 2^5, 8 2^5, 6^3) n=18"
    )
    a = tuple(pad((2,) * 5, 24))
    yield _kron_case(a, a, tuple(pad((6, 6), 24)), "padded triple n=24")
    if full:
        b = tuple(pad((2,) * 10, 32))
        yield _kron_case(b, b, tuple(pad((6, 6, 6, 2), 32)), "padded triple n=32")
        c = tuple(pad((7, 1, 1, 1, 1, 1, 1), 40))
        yield _kron_case(c, c, tuple(pad((5, 4, 3, 1), 40)), "padded triple n=40")


def _time(mod, run):
    mod.clear_caches()
    t0 = time.perf_counter()
    value = run(mod)
    return value, time.perf_counter() - t0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python -m kroncalc.bench")
    parser.add_argument("--full", action="store_true", help="heavier case ladder")
    args = parser.parse_args(argv)

    if _ckernel is None:
        print("compiled kernel unavailable; timing the pure lane only")
    header = f"{'case':<34} {'pure[s]':>9} {'compiled[s]':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, run in cases(args.full):
        v_pure, t_pure = _time(_pykernel, run)
        if _ckernel is None:
            print(f"{label:<34} {t_pure:>9.3f} {'-':>12} {'-':>8}")
            continue
        v_c, t_c = _time(_ckernel, run)
        assert v_pure == v_c, f"lane mismatch on {label}: {v_pure} != {v_c}"
        print(f"{label:<34} {t_pure:>9.3f} {t_c:>12.3f} {t_pure / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
