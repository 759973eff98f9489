"""Pure-Python twin of the compiled kernel.

Same algorithms, same exact results: Murnaghan-Nakayama border-strip
expansion for character values, and a depth-first sweep over all cycle
types of S_n carrying the three strip expansions at once for the
Kronecker class sum.  The compiled lane in ``_ckernel.pyx`` mirrors this
file operation for operation.
"""

from functools import lru_cache
from math import factorial

BACKEND = "pure"


@lru_cache(maxsize=None)
def strip_transitions(shape, t):
    """All ways to remove a border strip of length t: ((new_shape, sign), ...).

    Beta-number formulation: with betas b_i = shape_i + (L-1-i), a strip of
    length t removable at row i corresponds to b_i - t >= 0 and not already a
    beta; the sign is (-1)^(number of betas strictly between b_i - t and b_i).
    """
    L = len(shape)
    betas = tuple(shape[i] + (L - 1 - i) for i in range(L))
    bset = set(betas)
    out = []
    for b in betas:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in betas if nb < x < b)
        nbetas = sorted(bset - {b} | {nb}, reverse=True)
        m = len(nbetas)
        new = tuple(
            x - (m - 1 - i) for i, x in enumerate(nbetas) if x - (m - 1 - i) > 0
        )
        out.append((new, -1 if height & 1 else 1))
    return tuple(out)


def _apply_strip(expansion, t):
    """Remove a t-strip from every shape in the expansion, merging coefficients."""
    out = {}
    for shape, c in expansion.items():
        for new, s in strip_transitions(shape, t):
            acc = out.get(new, 0) + (c if s > 0 else -c)
            if acc:
                out[new] = acc
            elif new in out:
                del out[new]
    return out


def char_value(lam, rho):
    """chi^lam(rho) for |lam| = |rho|, rho weakly decreasing."""
    expansion = {tuple(lam): 1}
    for t in rho:
        expansion = _apply_strip(expansion, t)
        if not expansion:
            return 0
    return expansion.get((), 0)


def kron_classsum(lam, mu, nu):
    """Kronecker coefficient g(lam, mu, nu) as the exact class sum.

    Accumulates sum over classes rho of (n!/z_rho) * chi^lam * chi^mu * chi^nu
    as one integer and divides by n! at the end, asserting exact divisibility
    and non-negativity (either failing indicates a character bug).
    """
    n = sum(lam)
    nf = factorial(n)
    total = 0

    def rec(m, bound, d1, d2, d3, z, lastpart, lastmult):
        nonlocal total
        if m == 0:
            c1 = d1.get((), 0)
            c2 = d2.get((), 0) if c1 else 0
            c3 = d3.get((), 0) if c2 else 0
            if c3:
                total += (nf // z) * c1 * c2 * c3
            return
        for t in range(min(m, bound), 0, -1):
            e1 = _apply_strip(d1, t)
            if not e1:
                continue
            e2 = _apply_strip(d2, t)
            if not e2:
                continue
            e3 = _apply_strip(d3, t)
            if not e3:
                continue
            if t == lastpart:
                rec(m - t, t, e1, e2, e3, z * t * (lastmult + 1), t, lastmult + 1)
            else:
                rec(m - t, t, e1, e2, e3, z * t, t, 1)

    rec(n, n, {tuple(lam): 1}, {tuple(mu): 1}, {tuple(nu): 1}, 1, 0, 0)
    if total % nf:
        raise ArithmeticError("class sum not divisible by n!: character defect")
    q = total // nf
    if q < 0:
        raise ArithmeticError("negative Kronecker total: character defect")
    return q


def clear_caches():
    strip_transitions.cache_clear()
