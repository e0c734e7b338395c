"""Quantum numbers, unperturbed energies and radial eigenfunctions.

Everything here is expressed in dimensionless units hbar = m = omega = 1.
Energies are exact rationals (coefficients of hbar*omega); eigenfunction
evaluation is high-precision floating point via mpmath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp, mpf

__all__ = [
    "InvalidQuantumNumbers",
    "UnsupportedDimension",
    "QuantumNumbers",
    "RadialEigenfunction",
    "energy_unperturbed",
    "laguerre_coefficients",
    "series_coefficients",
    "laguerre_eval",
    "u_eval",
    "u_derivatives",
    "gamma_rational",
    "norm_squared_parts",
    "normalization",
]


class InvalidQuantumNumbers(ValueError):
    """Quantum numbers violate the domain invariants."""


class UnsupportedDimension(ValueError):
    """Operation not defined for this spatial dimension."""


@dataclass(frozen=True)
class QuantumNumbers:
    """State (d, n, l) of the isotropic oscillator in spherical coordinates.

    For d >= 2, n and l are non-negative integers.  For d = 1 the angular
    number l is identically 0 and n = N/2 may be a half-integer, N being
    the usual one-dimensional quantum number.
    """

    d: int
    n: Fraction
    l: int = 0

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidQuantumNumbers(f"dimension must be an integer >= 1, got {self.d}")
        if not isinstance(self.l, int) or self.l < 0:
            raise InvalidQuantumNumbers(f"l must be a non-negative integer, got {self.l}")
        object.__setattr__(self, "n", Fraction(self.n))
        if self.n < 0:
            raise InvalidQuantumNumbers(f"n must be non-negative, got {self.n}")
        if self.d == 1:
            if self.l != 0:
                raise InvalidQuantumNumbers("d=1 requires l=0")
            if (2 * self.n).denominator != 1:
                raise InvalidQuantumNumbers(f"d=1 requires 2n integer, got n={self.n}")
        else:
            if self.n.denominator != 1:
                raise InvalidQuantumNumbers(f"d>=2 requires integer n, got {self.n}")

    @classmethod
    def one_dim(cls, N: int) -> "QuantumNumbers":
        """One-dimensional state with principal number N (n = N/2, l = 0)."""
        if not isinstance(N, int) or N < 0:
            raise InvalidQuantumNumbers(f"N must be a non-negative integer, got {N}")
        return cls(1, Fraction(N, 2), 0)

    @property
    def big_N(self) -> int:
        """Principal quantum number N = 2n + l."""
        return int(2 * self.n + self.l)

    @property
    def alpha(self) -> Fraction:
        """Laguerre order alpha = l + d/2 - 1 of the radial eigenfunction."""
        return self.l + Fraction(self.d, 2) - 1


def energy_unperturbed(q: QuantumNumbers) -> Fraction:
    """Unperturbed energy 2n + l + d/2 in units of hbar*omega."""
    return 2 * q.n + q.l + Fraction(q.d, 2)


def laguerre_coefficients(n: int, alpha) -> list[Fraction]:
    """Monomial coefficients of the generalized Laguerre polynomial L_n^(alpha).

    Returns [c_0, ..., c_n] with L_n^(alpha)(x) = sum c_i x^i,
    c_i = (-1)^i binom(n+alpha, n-i) / i!, all exact.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n}")
    alpha = Fraction(alpha)
    coeffs = []
    for i in range(n + 1):
        binom = Fraction(1)
        for j in range(1, n - i + 1):
            binom *= (alpha + i + j) / j
        coeffs.append((-1) ** i * binom / math.factorial(i))
    return coeffs


def series_coefficients(q: QuantumNumbers, i_max: int) -> list[Fraction]:
    """Power-series coefficients a_i of f(r) from the two-term recursion.

    Seeded with a_0 = 1; odd coefficients vanish for d >= 2 and the series
    truncates at i = 2n.
    """
    if q.d < 2:
        raise UnsupportedDimension("series recursion requires d >= 2 (odd branch is d=1 only)")
    if i_max < 0:
        raise ValueError("i_max must be >= 0")
    a = [Fraction(0)] * (i_max + 1)
    a[0] = Fraction(1)
    for i in range(0, i_max - 1, 2):
        # (i+2)(i+d+2l) a_{i+2} = (2i + 2l + d - 2E) a_i with E = 2n + l + d/2
        a[i + 2] = Fraction(2 * i - 4 * q.n) * a[i] / ((i + 2) * (i + q.d + 2 * q.l))
    return a


def gamma_rational(x: Fraction) -> tuple[Fraction, bool]:
    """Gamma(x) for positive integer or half-integer x.

    Returns (value, has_sqrt_pi): Gamma(x) = value * sqrt(pi) if
    has_sqrt_pi else value.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"argument must be positive, got {x}")
    if x.denominator == 1:
        return Fraction(math.factorial(x.numerator - 1)), False
    if x.denominator == 2:
        # Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
        k = (x - Fraction(1, 2)).numerator
        return Fraction(math.factorial(2 * k), 4**k * math.factorial(k)), True
    raise ValueError(f"argument must be integer or half-integer, got {x}")


def norm_squared_parts(q: QuantumNumbers) -> tuple[Fraction, bool]:
    """A_nl^2 = 2 n! / Gamma(n + l + d/2), kept exact.

    Returns (value, divides_sqrt_pi): A^2 = value / sqrt(pi) when the flag
    is set (odd d), otherwise A^2 = value.
    """
    if q.n.denominator != 1:
        raise UnsupportedDimension("normalization requires integer n (d >= 2)")
    gamma_val, has_pi = gamma_rational(q.n + q.l + Fraction(q.d, 2))
    return 2 * math.factorial(int(q.n)) / gamma_val, has_pi


def normalization(q: QuantumNumbers) -> mpf:
    """Normalization constant A_nl as a high-precision real."""
    val, has_pi = norm_squared_parts(q)
    a2 = mpf(val.numerator) / val.denominator
    if has_pi:
        a2 = a2 / mp.sqrt(mp.pi)
    return mp.sqrt(a2)


def _to_mpf(x) -> mpf:
    """Convert a number (including Fraction) to mpf at working precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def laguerre_eval(n: int, alpha, x):
    """Evaluate L_n^(alpha)(x) with the stable three-term recurrence in n."""
    alpha = _to_mpf(alpha)
    if n < 0:
        return mpf(0)
    prev = mpf(1)
    if n == 0:
        return prev
    curr = 1 + alpha - x
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 + alpha - x) * curr - (k + alpha) * prev) / (k + 1)
    return curr


def u_eval(q: QuantumNumbers, eta) -> mpf:
    """Radial eigenfunction u_nl(eta) = A eta^((l+1)/2) e^(-eta/2) L_n^(alpha)(eta)."""
    if q.d < 2:
        raise UnsupportedDimension("u_eval is defined for d >= 2 only")
    eta = _to_mpf(eta)
    if eta < 0:
        raise ValueError("eta must be >= 0")
    n = int(q.n)
    value = laguerre_eval(n, q.alpha, eta)
    return normalization(q) * mp.power(eta, mpf(q.l + 1) / 2) * mp.exp(-eta / 2) * value


def u_derivatives(q: QuantumNumbers, r) -> tuple[mpf, mpf, mpf]:
    """(u, u', u'') at radius r > 0, derivatives taken analytically.

    Uses dL_n^(a)/dx = -L_{n-1}^(a+1) so the result is exact up to rounding.
    """
    if q.d < 2:
        raise UnsupportedDimension("u_derivatives is defined for d >= 2 only")
    r = _to_mpf(r)
    if r <= 0:
        raise ValueError("r must be > 0")
    n, l = int(q.n), q.l
    eta = r * r
    p0 = laguerre_eval(n, q.alpha, eta)
    p1 = -laguerre_eval(n - 1, q.alpha + 1, eta)
    p2 = laguerre_eval(n - 2, q.alpha + 2, eta)
    a = normalization(q)
    e = mp.exp(-eta / 2)
    # u = A r^(l+1) e^(-r^2/2) P(r^2)
    u = a * r ** (l + 1) * e * p0
    # h := e^(eta/2) u' / A
    h = (l + 1) * r**l * p0 - r ** (l + 2) * p0 + 2 * r ** (l + 2) * p1
    du = a * e * h
    hp = (
        l * (l + 1) * (r ** (l - 1) if l > 0 else 0) * p0
        + 2 * (l + 1) * r ** (l + 1) * p1
        - (l + 2) * r ** (l + 1) * p0
        - 2 * r ** (l + 3) * p1
        + 2 * (l + 2) * r ** (l + 1) * p1
        + 4 * r ** (l + 3) * p2
    )
    d2u = a * e * (hp - r * h)
    return u, du, d2u


@dataclass(frozen=True)
class RadialEigenfunction:
    """Exact polynomial data of a radial eigenstate plus its normalization."""

    q: QuantumNumbers
    coefficients: tuple[Fraction, ...] = field(default=None)

    def __post_init__(self):
        if self.q.d < 2:
            raise UnsupportedDimension("eigenfunction construction requires d >= 2")
        if self.coefficients is None:
            coeffs = tuple(laguerre_coefficients(int(self.q.n), self.q.alpha))
            object.__setattr__(self, "coefficients", coeffs)
        if len(self.coefficients) != int(self.q.n) + 1:
            raise ValueError("polynomial degree must equal n")

    @property
    def norm_constant(self) -> mpf:
        return normalization(self.q)

    def __call__(self, eta) -> mpf:
        return u_eval(self.q, eta)
