"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set KRONCALC_PURE=1 to force the pure lane.  Both lanes expose the same
functions with identical exact semantics; `BACKEND` names the active one.
On the (never yet observed) OverflowError from the compiled coefficient
guard, the affected call is transparently retried on the pure lane.
"""

import os

from . import _pykernel

if os.environ.get("KRONCALC_PURE"):
    _active = _pykernel
else:
    try:
        from . import _ckernel as _active  # type: ignore[no-redef]
    except ImportError:
        _active = _pykernel

BACKEND = _active.BACKEND


def char_value(lam, rho):
    """chi^lam(rho), |lam| = |rho|, rho weakly decreasing."""
    try:
        return _active.char_value(lam, rho)
    except OverflowError:
        return _pykernel.char_value(lam, rho)


def kron_classsum(lam, mu, nu):
    """Exact Kronecker coefficient via the class sum over all cycle types."""
    try:
        return _active.kron_classsum(lam, mu, nu)
    except OverflowError:
        return _pykernel.kron_classsum(lam, mu, nu)


def clear_caches():
    _active.clear_caches()
    if _active is not _pykernel:
        _pykernel.clear_caches()
