"""Closed-form relativistic correction formulas, exact in reduced units.

epsilon0 is the coefficient of hbar*omega, epsilon1 of lambda*hbar*omega and
epsilon2 of lambda^2*hbar*omega, where lambda = hbar*omega/(m c^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .states import QuantumNumbers, energy_unperturbed

__all__ = [
    "CorrectionTriple",
    "epsilon1_general",
    "epsilon1_rewritten",
    "epsilon2_general",
    "correction_triple",
]


@dataclass(frozen=True)
class CorrectionTriple:
    """Unperturbed energy plus first and second-order corrections."""

    epsilon0: Fraction
    epsilon1: Fraction
    epsilon2: Fraction

    def shifted_energy(self, lam: Fraction) -> Fraction:
        """Total energy coefficient epsilon0 + lam*epsilon1 + lam^2*epsilon2."""
        lam = Fraction(lam)
        return self.epsilon0 + lam * self.epsilon1 + lam * lam * self.epsilon2


def epsilon1_general(q: QuantumNumbers) -> Fraction:
    """First-order correction, always negative."""
    d, n, l = q.d, q.n, q.l
    bracket = (
        6 * n * n + l * l + 6 * n * l + 3 * n * d + l * d + l + Fraction(d * d + 2 * d, 4)
    )
    return -bracket / 8


def epsilon1_rewritten(q: QuantumNumbers) -> Fraction:
    """First-order correction in terms of the unperturbed energy.

    Equal to epsilon1_general for every valid state; exposes the fact that
    the shift at fixed energy grows (less negative) with l.
    """
    d, l = q.d, q.l
    e0 = energy_unperturbed(q)
    bracket = (
        Fraction(3, 2) * e0 * e0
        - Fraction(1, 2) * l * (l + d - 2)
        + Fraction(4 * d - d * d, 8)
    )
    return -bracket / 8


def epsilon2_general(q: QuantumNumbers) -> Fraction:
    """Second-order correction, always positive."""
    d, n, l = q.d, q.n, q.l
    bracket = (
        184 * n**3
        + 138 * n**2 * d
        + (27 * d * d + 30 * d + 44) * n
        + 8 * l**3
        + (12 * d + 30) * l**2
        + (6 * d * d + 30 * d + 22) * l
        + 276 * n**2 * l
        + 108 * n * l**2
        + (108 * d + 60) * n * l
        + (d * d + Fraction(15, 2) * d + 11) * d
    )
    return bracket / 256


def correction_triple(q: QuantumNumbers) -> CorrectionTriple:
    """Bundle (epsilon0, epsilon1, epsilon2) for a state."""
    return CorrectionTriple(
        epsilon0=energy_unperturbed(q),
        epsilon1=epsilon1_general(q),
        epsilon2=epsilon2_general(q),
    )
