"""Reduced Kronecker coefficients by two independent routes, and the inversion
recovering ordinary Kronecker coefficients from them.

Route 1 (stabilization): pad all three partitions with a long first row to the
degree where the sequence of Kronecker coefficients has provably stabilized
and evaluate one class sum there.

Route 2 (LR expansion): the identity expressing the stable coefficient as a
positive sum of products of two multi-LR coefficients, one plain LR
coefficient and one small Kronecker coefficient, over five nested indices.
The two routes are cross-validated exhaustively in the test suite.

The inversion writes g(lam, mu, nu) as an alternating sum of reduced
coefficients of first-row-stripped shapes; the global sign of that sum is
fixed once by validation against the class sum (see BOR_SIGN) and shipped
frozen with a regression test.
"""

from __future__ import annotations

from functools import lru_cache

from .coefficients import _kron_cached, _lr3_cached, kronecker
from .partitions import Partition, pad, part, partitions_of

#: threshold on k = a + b - q above which the "auto" method pads instead;
#: both explicit methods remain available at any size.
AUTO_BDO_MAX_K = 16

#: global sign in front of the alternating sum sum_i (-1)^i gbar(lam^<i>, ...);
#: determined once by validate_bor_sign() and frozen here.
BOR_SIGN = -1


def stabilization_degree(alpha, beta, gamma) -> int:
    """Smallest padding degree this engine evaluates the stable limit at.

    max(|alpha|+|beta|+|gamma|, |alpha|+alpha_1, |beta|+beta_1, |gamma|+gamma_1):
    the first term is where the padded sequence is known to have stabilized,
    the others are where padding starts being defined at all.
    """
    sizes = [sum(p) for p in (alpha, beta, gamma)]
    firsts = [p[0] if len(p) else 0 for p in (alpha, beta, gamma)]
    return max(sum(sizes), *(s + f for s, f in zip(sizes, firsts)))


def reduced_stable(alpha, beta, gamma) -> int:
    """Stable limit of g(alpha[n], beta[n], gamma[n]), by direct padded evaluation."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    n0 = stabilization_degree(alpha, beta, gamma)
    return kronecker(pad(alpha, n0), pad(beta, n0), pad(gamma, n0))


def stable_sequence(alpha, beta, gamma, n_from: int, n_to: int):
    """[(n, g(alpha[n], beta[n], gamma[n]))] for n in [n_from, n_to]; weakly increasing."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    min_n = max(p.size + (p[0] if p else 0) for p in (alpha, beta, gamma))
    if n_from < min_n:
        raise ValueError(f"n_from = {n_from} below minimal valid padding degree {min_n}")
    if n_to < n_from:
        raise ValueError("empty range")
    return [
        (n, kronecker(pad(alpha, n), pad(beta, n), pad(gamma, n)))
        for n in range(n_from, n_to + 1)
    ]


def bracket(lam, i: int) -> Partition:
    """(lam_1+1, ..., lam_{i-1}+1, lam_{i+1}, lam_{i+2}, ...), always a partition.

    bracket(lam, 1) is the first-row strip lam~ = (lam_2, lam_3, ...).
    """
    if i < 1:
        raise ValueError("bracket index is 1-based")
    bumped = [part(lam, j) + 1 for j in range(1, i)]
    rest = [part(lam, j) for j in range(i + 1, len(lam) + 1)]
    return Partition([p for p in bumped + rest if p])


def _ordered_for_expansion(alpha, beta, gamma):
    """Deterministic reorder putting the largest size third (full symmetry of the
    reduced coefficient makes any order valid; this one minimizes k)."""
    return tuple(sorted((alpha, beta, gamma), key=lambda p: (sum(p), tuple(p))))


@lru_cache(maxsize=None)
def _g_sym(lam, mu, nu):
    """Kronecker factor for the expansion; canonicalized under S3 (Lemma-backed)."""
    key = tuple(sorted((lam, mu, nu)))
    return _kron_cached(*key)


def reduced_bdo(alpha, beta, gamma) -> int:
    """Reduced coefficient via the five-fold LR/Kronecker expansion.

    Arguments are reordered so the third slot has maximal size; if k = a+b-q
    is still negative no expansion applies and the stabilization route is
    used instead (no vanishing rule for k < 0 is assumed).  Index choices
    with a negative partition size contribute nothing, and k-2m = 0 forces
    the empty triple with g() = 1.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    return _bdo_cached(*(tuple(p) for p in _ordered_for_expansion(alpha, beta, gamma)))


@lru_cache(maxsize=None)
def _bdo_cached(alpha, beta, gamma):
    a, b, q = sum(alpha), sum(beta), sum(gamma)
    k = a + b - q
    if k < 0:
        return reduced_stable(alpha, beta, gamma)
    total = 0
    for m in range(k // 2 + 1):
        size_pi = q + m - b
        size_rho = q + m - a
        if size_pi < 0 or size_rho < 0:
            continue
        smalls = [tuple(p) for p in partitions_of(k - 2 * m)]
        sigmas = [tuple(p) for p in partitions_of(m)]
        for pi in partitions_of(size_pi):
            pi = tuple(pi)
            for rho in partitions_of(size_rho):
                rho = tuple(rho)
                on_gamma = {
                    nu: c for nu in smalls if (c := _lr3_cached(gamma, nu, pi, rho))
                }
                if not on_gamma:
                    continue
                for sigma in sigmas:
                    on_alpha = {
                        mu: c for mu in smalls if (c := _lr3_cached(alpha, mu, pi, sigma))
                    }
                    if not on_alpha:
                        continue
                    on_beta = {
                        lam: c for lam in smalls if (c := _lr3_cached(beta, lam, rho, sigma))
                    }
                    if not on_beta:
                        continue
                    for nu, c_g in on_gamma.items():
                        for mu, c_a in on_alpha.items():
                            prod = c_g * c_a
                            for lam, c_b in on_beta.items():
                                g = _g_sym(lam, mu, nu)
                                if g:
                                    total += prod * c_b * g
    return total


def choose_method(alpha, beta, gamma, threshold: int = AUTO_BDO_MAX_K) -> str:
    """Resolution of the "auto" method: expansion for small k, padding otherwise."""
    ordered = _ordered_for_expansion(Partition(alpha), Partition(beta), Partition(gamma))
    a, b, q = (p.size for p in ordered)
    k = a + b - q
    return "bdo" if 0 <= k <= threshold else "stable"


def reduced_kronecker(alpha, beta, gamma, method: str = "auto"):
    """Reduced Kronecker coefficient; returns (value, method actually used)."""
    if method == "auto":
        method = choose_method(alpha, beta, gamma)
    if method == "bdo":
        ordered = _ordered_for_expansion(Partition(alpha), Partition(beta), Partition(gamma))
        a, b, q = (p.size for p in ordered)
        if a + b - q < 0:
            return reduced_stable(alpha, beta, gamma), "stable"
        return reduced_bdo(alpha, beta, gamma), "bdo"
    if method == "stable":
        return reduced_stable(alpha, beta, gamma), "stable"
    raise ValueError(f"unknown method {method!r}")


class SignConventionError(Exception):
    """Neither global sign of the inversion identity reproduces the class sum."""


def kronecker_via_bor(lam, mu, nu, sign: int | None = None) -> int:
    """g(lam, mu, nu) recovered from reduced coefficients by the alternating sum

        BOR_SIGN * sum_{i=1}^{l(mu) l(nu)} (-1)^i gbar(lam^<i>, mu~, nu~),

    with every reduced term evaluated through reduced_bdo.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not (lam.size == mu.size == nu.size):
        raise ValueError("equal sizes required")
    sign = BOR_SIGN if sign is None else sign
    mu_t = Partition(mu[1:])
    nu_t = Partition(nu[1:])
    total = 0
    for i in range(1, len(mu) * len(nu) + 1):
        term = reduced_bdo(bracket(lam, i), mu_t, nu_t)
        total += -term if i & 1 else term
    return sign * total


def validate_bor_sign(max_n: int = 5) -> int:
    """Determine the global sign by checking both candidates against the class
    sum for all triples of degree <= max_n; raises if neither works."""
    candidates = {1: True, -1: True}
    for n in range(1, max_n + 1):
        parts = list(partitions_of(n))
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    g = kronecker(lam, mu, nu)
                    for eps in (1, -1):
                        if candidates[eps] and kronecker_via_bor(lam, mu, nu, sign=eps) != g:
                            candidates[eps] = False
        if not any(candidates.values()):
            break
    valid = [eps for eps, ok in candidates.items() if ok]
    if not valid:
        raise SignConventionError(
            f"neither sign reproduces the class sum up to n = {max_n}"
        )
    return valid[0] if len(valid) == 1 else BOR_SIGN
