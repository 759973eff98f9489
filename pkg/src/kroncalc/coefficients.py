"""Structure constants over S_n: Kronecker, Littlewood-Richardson, multi-LR.

kronecker() is the exact class sum (p(n) terms, division by n! deferred to a
single asserted-exact step inside the kernel).  lr() counts lattice-word skew
tableaux by column-strict backtracking; a much slower induced-character inner
product is kept alongside as an independent oracle and is never the
production path.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from . import kernel
from .characters import character
from .partitions import Partition, centralizer_order, partitions_of


def kronecker(lam, mu, nu) -> int:
    """g(lam, mu, nu) = <chi^lam chi^mu, chi^nu>, an exact non-negative integer."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not (lam.size == mu.size == nu.size):
        raise ValueError(
            f"kronecker needs equal sizes, got {lam.size}, {mu.size}, {nu.size}"
        )
    return _kron_cached(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _kron_cached(lam, mu, nu):
    return kernel.kron_classsum(lam, mu, nu)


def lr(lam, mu, nu) -> int:
    """c^lam_{mu nu}: LR skew tableaux of shape lam/mu and content nu.

    Requires |mu| + |nu| = |lam|; returns 0 (not an error) when mu is not
    contained in lam.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size + nu.size != lam.size:
        raise ValueError(
            f"lr needs |mu| + |nu| = |lam|, got {mu.size} + {nu.size} != {lam.size}"
        )
    return _lr_cached(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _lr_cached(lam, mu, nu):
    if len(mu) > len(lam) or any(mu[i] > lam[i] for i in range(len(mu))):
        return 0
    if not nu:
        return 1
    # Cells of lam/mu in reverse reading order (top to bottom, right to left):
    # filling in this order makes the lattice-word prefix condition a simple
    # running-count check, pruning branches as early as possible.
    cells = []
    for r in range(len(lam)):
        lo = mu[r] if r < len(mu) else 0
        for c in range(lam[r] - 1, lo - 1, -1):
            cells.append((r, c))
    nvals = len(nu)
    grid = [[0] * p for p in lam]
    counts = [0] * (nvals + 1)
    total = 0

    def fill(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < lam[r] else nvals + 1
        above = grid[r - 1][c] if r > 0 else 0  # 0 when the cell above is in mu
        for v in range(1, min(right, nvals) + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice prefix would fail
            if above >= v:
                continue  # columns must strictly increase
            grid[r][c] = v
            counts[v] += 1
            fill(idx + 1)
            counts[v] -= 1
            grid[r][c] = 0

    fill(0)
    return total


def lr3(lam, alpha, beta, gamma) -> int:
    """Iterated coefficient c^lam_{alpha beta gamma} = sum_tau c^lam_{alpha tau} c^tau_{beta gamma}."""
    lam, alpha, beta, gamma = (Partition(p) for p in (lam, alpha, beta, gamma))
    if alpha.size + beta.size + gamma.size != lam.size:
        raise ValueError("lr3 needs |alpha| + |beta| + |gamma| = |lam|")
    return _lr3_cached(tuple(lam), tuple(alpha), tuple(beta), tuple(gamma))


@lru_cache(maxsize=None)
def _lr3_cached(lam, alpha, beta, gamma):
    # the sum over tau is sparse: skip tau unless lam/alpha is LR-positive
    total = 0
    for tau in partitions_of(sum(beta) + sum(gamma)):
        c1 = _lr_cached(lam, alpha, tuple(tau))
        if c1:
            total += c1 * _lr_cached(tuple(tau), beta, gamma)
    return total


def lr_induced_oracle(lam, mu, nu) -> int:
    """<chi^lam, chi^mu x chi^nu induced>: slow two-fold class sum, test oracle only.

    By Frobenius reciprocity this is sum over (rho1, rho2) of
    chi^lam(rho1 u rho2) chi^mu(rho1) chi^nu(rho2) / (z_rho1 z_rho2); the sum
    is accumulated over the common denominator k!m! and divided once, exactly.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size + nu.size != lam.size:
        raise ValueError("size mismatch")
    k, m = mu.size, nu.size
    common = factorial(k) * factorial(m)
    total = 0
    for rho1 in partitions_of(k):
        c_mu = character(mu, rho1)
        if not c_mu:
            continue
        w1 = common // centralizer_order(rho1)
        for rho2 in partitions_of(m):
            c_nu = character(nu, rho2)
            if not c_nu:
                continue
            merged = Partition(sorted(tuple(rho1) + tuple(rho2), reverse=True))
            weight = w1 // centralizer_order(rho2)
            total += c_mu * c_nu * character(lam, merged) * weight
    if total % common:
        raise ArithmeticError("induced-character sum not integral")
    value = total // common
    if value < 0:
        raise ArithmeticError("negative induced multiplicity")
    return value


def lr3_induced_oracle(lam, alpha, beta, gamma) -> int:
    """<chi^lam, chi^alpha x chi^beta x chi^gamma induced>: three-fold oracle."""
    lam, alpha, beta, gamma = (Partition(p) for p in (lam, alpha, beta, gamma))
    if alpha.size + beta.size + gamma.size != lam.size:
        raise ValueError("size mismatch")
    a, b, c = alpha.size, beta.size, gamma.size
    common = factorial(a) * factorial(b) * factorial(c)
    total = 0
    for r1 in partitions_of(a):
        x1 = character(alpha, r1)
        if not x1:
            continue
        w1 = common // centralizer_order(r1)
        for r2 in partitions_of(b):
            x2 = character(beta, r2)
            if not x2:
                continue
            for r3 in partitions_of(c):
                x3 = character(gamma, r3)
                if not x3:
                    continue
                merged = Partition(sorted(tuple(r1) + tuple(r2) + tuple(r3), reverse=True))
                weight = w1 // centralizer_order(r2) // centralizer_order(r3)
                total += x1 * x2 * x3 * character(lam, merged) * weight
    if total % common:
        raise ArithmeticError("induced-character sum not integral")
    value = total // common
    if value < 0:
        raise ArithmeticError("negative induced multiplicity")
    return value
