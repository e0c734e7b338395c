"""Independent high-precision verification by generalized Gauss-Laguerre
quadrature.

Nodes come from the Jacobi matrix of the generalized Laguerre polynomials
(Golub-Welsch); weights from the orthonormal-recurrence identity
w_i = 1 / sum_k p_k(x_i)^2.  Working precision defaults to 50 significant
digits and can be overridden with the SALPETER_PRECISION environment
variable.  All integrands here are polynomials times the weight function, so
the rules are exact up to rounding and the two-rule convergence check is a
pure sanity assertion.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction

import mpmath
from mpmath import matrix, mp, mpf

from .states import (
    QuantumNumbers,
    UnsupportedDimension,
    energy_unperturbed,
    laguerre_eval,
    normalization,
    u_derivatives,
)

__all__ = [
    "working_precision",
    "gauss_laguerre_rule",
    "quad_expectation",
    "quad_matrix_element",
    "orthonormality_check",
    "sum_over_states_check",
    "radial_residual",
]

DEFAULT_DPS = 50

_rule_cache: dict = {}
_rule_lock = threading.Lock()


def working_precision() -> int:
    """Working precision in significant digits."""
    value = os.environ.get("SALPETER_PRECISION")
    if value is None:
        return DEFAULT_DPS
    digits = int(value)
    if digits < 15:
        raise ValueError(f"SALPETER_PRECISION must be >= 15, got {digits}")
    return digits


def _to_mpf(x) -> mpf:
    x = Fraction(x)
    return mpf(x.numerator) / x.denominator


def gauss_laguerre_rule(alpha, npoints: int) -> tuple[list, list]:
    """Nodes and weights for weight x^alpha e^(-x) on (0, inf).

    Exact for polynomial integrands of degree <= 2*npoints - 1.  Rules are
    memoized per (alpha, npoints, precision) behind a lock; the returned
    lists must not be mutated.
    """
    alpha = Fraction(alpha)
    if alpha <= -1:
        raise ValueError(f"alpha must be > -1, got {alpha}")
    if npoints < 1:
        raise ValueError(f"npoints must be >= 1, got {npoints}")
    dps = working_precision()
    key = (alpha, npoints, dps)
    with _rule_lock:
        if key in _rule_cache:
            return _rule_cache[key]
    with mp.workdps(dps + 10):
        alpha_f = _to_mpf(alpha)
        diag = [2 * k + alpha_f + 1 for k in range(npoints)]
        off = [mp.sqrt(k * (k + alpha_f)) for k in range(1, npoints)]
        jacobi = matrix(npoints, npoints)
        for k in range(npoints):
            jacobi[k, k] = diag[k]
        for k in range(1, npoints):
            jacobi[k, k - 1] = off[k - 1]
            jacobi[k - 1, k] = off[k - 1]
        nodes = sorted(mpmath.eigsy(jacobi, eigvals_only=True))
        mu0 = mp.gamma(alpha_f + 1)
        weights = []
        for x in nodes:
            # orthonormal recurrence: b_{k+1} p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
            prev = mpf(0)
            curr = 1 / mp.sqrt(mu0)
            total = curr * curr
            for k in range(npoints - 1):
                nxt = ((x - diag[k]) * curr - (off[k - 1] if k > 0 else 0) * prev) / off[k]
                prev, curr = curr, nxt
                total += curr * curr
            weights.append(1 / total)
        rule = ([+x for x in nodes], weights)
    with _rule_lock:
        _rule_cache[key] = rule
    return rule


def _bracket(n1: int, n2: int, l: int, d: int, s: int, npoints: int) -> mpf:
    """(A1 A2 / 2) * integral of eta^(alpha+s) e^(-eta) L_n1 L_n2 deta."""
    alpha = l + Fraction(d, 2) - 1
    nodes, weights = gauss_laguerre_rule(alpha, npoints)
    q1 = QuantumNumbers(d, Fraction(n1), l)
    q2 = QuantumNumbers(d, Fraction(n2), l)
    prefactor = normalization(q1) * normalization(q2) / 2
    total = mpf(0)
    for x, w in zip(nodes, weights):
        total += w * x**s * laguerre_eval(n1, alpha, x) * laguerre_eval(n2, alpha, x)
    return prefactor * total


def quad_expectation(q: QuantumNumbers, s: int) -> mpf:
    """<eta^s> by quadrature, cross-checked on two node counts."""
    if q.d < 2:
        raise UnsupportedDimension("quadrature oracle requires d >= 2")
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    n = int(q.n)
    with mp.workdps(working_precision()):
        coarse = _bracket(n, n, q.l, q.d, s, n + s + 2)
        fine = _bracket(n, n, q.l, q.d, s, 2 * (n + s) + 8)
        rel = abs(coarse - fine) / abs(fine)
        if rel > mpf("1e-14"):
            raise ArithmeticError(f"quadrature failed to converge: rel diff {rel}")
        return fine


def quad_matrix_element(n1: int, n2: int, l: int, d: int, s: int) -> mpf:
    """<u_{n1,l}|eta^s|u_{n2,l}> by quadrature."""
    if d < 2:
        raise UnsupportedDimension("quadrature oracle requires d >= 2")
    with mp.workdps(working_precision()):
        degree = n1 + n2 + s
        coarse = _bracket(n1, n2, l, d, s, degree // 2 + 2)
        fine = _bracket(n1, n2, l, d, s, degree + 8)
        if abs(coarse - fine) > mpf("1e-14") * (1 + abs(fine)):
            raise ArithmeticError("quadrature failed to converge")
        return fine


def orthonormality_check(l: int, d: int, n_max: int) -> mpf:
    """max |<u_n1|u_n2> - delta| over n1, n2 <= n_max."""
    with mp.workdps(working_precision()):
        worst = mpf(0)
        for n1 in range(n_max + 1):
            for n2 in range(n1, n_max + 1):
                value = quad_matrix_element(n1, n2, l, d, 0)
                worst = max(worst, abs(value - (1 if n1 == n2 else 0)))
        return worst


def sum_over_states_check(q: QuantumNumbers, n_cutoff: int) -> mpf:
    """Second-order part II by brute-force sum over states.

    (1/128) sum_{n' != n, n' <= cutoff} <u_n'|eta^2|u_n>^2 / (n - n');
    cutoff-independent beyond n + 2 by sparsity.
    """
    n = int(q.n)
    if n_cutoff < n + 2:
        raise ValueError(f"cutoff must be >= n+2 = {n + 2}, got {n_cutoff}")
    with mp.workdps(working_precision()):
        total = mpf(0)
        for n_prime in range(n_cutoff + 1):
            if n_prime == n:
                continue
            element = quad_matrix_element(n_prime, n, q.l, q.d, 2)
            total += element * element / (n - n_prime)
        return total / 128


def radial_residual(q: QuantumNumbers, sample_etas, energy=None) -> mpf:
    """Max relative residual of the radial equation at the sample points.

    `energy` overrides the eigenvalue (used to confirm the test has power:
    a wrong energy must produce a large residual).
    """
    if q.d < 2:
        raise UnsupportedDimension("radial residual requires d >= 2")
    e = _to_mpf(energy_unperturbed(q) if energy is None else energy)
    ang = q.d - 3 + q.l * (q.l + q.d - 2)
    with mp.workdps(working_precision()):
        worst = mpf(0)
        for eta in sample_etas:
            r = mp.sqrt(_to_mpf(eta))
            u, du, d2u = u_derivatives(q, r)
            terms = [
                d2u,
                (r * r - 2 * e + ang / (r * r)) * u,
                -((q.d - 3) / r) * du,
            ]
            residual = abs(terms[0] - terms[1] - terms[2])
            scale = max(abs(t) for t in terms)
            if scale == 0:
                # every term vanishes identically at this point (residual too)
                continue
            worst = max(worst, residual / scale)
        return worst
