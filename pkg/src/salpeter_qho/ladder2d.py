"""Method III: polar ladder operators for the two-dimensional oscillator.

States |N m> carry the energy number N and angular momentum m (|m| <= N,
N - m even).  Ladder amplitudes are square roots of rationals, so they are
stored as a sign plus an exact squared magnitude; sums of amplitudes are
combined by factoring a common radical, which every operator built here
admits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .states import InvalidQuantumNumbers, QuantumNumbers

__all__ = [
    "IncompatibleRadical",
    "FockState2D",
    "Amplitude",
    "Monomial",
    "LadderExpr",
    "GENERATORS",
    "apply_generator",
    "apply_monomial",
    "matrix_element_squared",
    "expectation",
    "p2_expr",
    "p4_operators",
    "p4_expr",
    "p6_zero_expr",
    "normal_order",
    "first_order_2d",
    "second_order_2d_partI",
    "second_order_2d_partII",
    "second_order_2d",
    "map_Nm_to_nl",
    "build_state",
]

GENERATORS = ("a", "ad", "b", "bd")


class IncompatibleRadical(ValueError):
    """Amplitudes with non-proportional radicals cannot be summed exactly."""


@dataclass(frozen=True)
class FockState2D:
    N: int
    m: int

    def __post_init__(self):
        if self.N < 0 or abs(self.m) > self.N or (self.N - self.m) % 2 != 0:
            raise InvalidQuantumNumbers(f"invalid 2D state (N={self.N}, m={self.m})")

    @property
    def n_a(self) -> int:
        return (self.N - self.m) // 2

    @property
    def n_b(self) -> int:
        return (self.N + self.m) // 2


@dataclass(frozen=True)
class Amplitude:
    """sign * sqrt(mag2) with mag2 an exact non-negative rational."""

    sign: int
    mag2: Fraction

    def __post_init__(self):
        if (self.sign == 0) != (self.mag2 == 0):
            raise ValueError("sign must be 0 exactly when the magnitude is 0")


ZERO_AMPLITUDE = Amplitude(0, Fraction(0))


@dataclass(frozen=True)
class Monomial:
    """coeff times an ordered product of generators, applied right-to-left."""

    coeff: Fraction
    gens: tuple[str, ...]


@dataclass(frozen=True)
class LadderExpr:
    """Formal rational-coefficient sum of generator monomials."""

    terms: tuple[Monomial, ...]

    @classmethod
    def mono(cls, *gens: str, coeff=1) -> "LadderExpr":
        for g in gens:
            if g not in GENERATORS:
                raise ValueError(f"unknown generator {g!r}")
        return cls((Monomial(Fraction(coeff), tuple(gens)),))

    @classmethod
    def one(cls, coeff=1) -> "LadderExpr":
        return cls((Monomial(Fraction(coeff), ()),))

    def __add__(self, other: "LadderExpr") -> "LadderExpr":
        return LadderExpr(self.terms + other.terms)

    def __sub__(self, other: "LadderExpr") -> "LadderExpr":
        return self + (-other)

    def __neg__(self) -> "LadderExpr":
        return LadderExpr(tuple(Monomial(-t.coeff, t.gens) for t in self.terms))

    def __mul__(self, other):
        if isinstance(other, LadderExpr):
            return LadderExpr(
                tuple(
                    Monomial(s.coeff * t.coeff, s.gens + t.gens)
                    for s in self.terms
                    for t in other.terms
                )
            )
        return LadderExpr(tuple(Monomial(t.coeff * Fraction(other), t.gens) for t in self.terms))

    __rmul__ = __mul__


def apply_generator(g: str, s: FockState2D) -> tuple[FockState2D | None, Amplitude]:
    """Act with one generator; annihilation past the vacuum gives amplitude 0."""
    N, m = s.N, s.m
    if g == "a":
        mag2 = Fraction(N - m, 2)
        target = (N - 1, m + 1)
    elif g == "b":
        mag2 = Fraction(N + m, 2)
        target = (N - 1, m - 1)
    elif g == "ad":
        mag2 = Fraction(N - m + 2, 2)
        target = (N + 1, m - 1)
    elif g == "bd":
        mag2 = Fraction(N + m + 2, 2)
        target = (N + 1, m + 1)
    else:
        raise ValueError(f"unknown generator {g!r}")
    if mag2 == 0:
        return None, ZERO_AMPLITUDE
    return FockState2D(*target), Amplitude(1, mag2)


def apply_monomial(mono: Monomial, s: FockState2D) -> tuple[FockState2D | None, Amplitude]:
    """Right-to-left composition; squared magnitudes multiply along the path."""
    sign = 1 if mono.coeff > 0 else -1 if mono.coeff < 0 else 0
    mag2 = mono.coeff * mono.coeff
    state = s
    for g in reversed(mono.gens):
        state, amp = apply_generator(g, state)
        if state is None:
            return None, ZERO_AMPLITUDE
        mag2 *= amp.mag2
    if sign == 0 or mag2 == 0:
        return None, ZERO_AMPLITUDE
    return state, Amplitude(sign, mag2)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    """sqrt(x) if it is rational, else None."""
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def _amplitude_sum(expr: LadderExpr, bra: FockState2D, ket: FockState2D) -> tuple[Fraction, Fraction]:
    """<bra|expr|ket> = c * sqrt(r) with c rational and r a common radicand."""
    base = None
    total = Fraction(0)
    for term in expr.terms:
        state, amp = apply_monomial(term, ket)
        if state != bra or amp.sign == 0:
            continue
        if base is None:
            base = amp.mag2
        ratio = _rational_sqrt(amp.mag2 / base)
        if ratio is None:
            raise IncompatibleRadical(
                f"amplitudes {amp.mag2} and {base} have non-proportional radicals"
            )
        total += amp.sign * ratio
    if base is None:
        return Fraction(0), Fraction(0)
    return total, base


def matrix_element_squared(expr: LadderExpr, bra: FockState2D, ket: FockState2D) -> Fraction:
    """|<bra|expr|ket>|^2, exact."""
    c, r = _amplitude_sum(expr, bra, ket)
    return c * c * r


def expectation(expr: LadderExpr, s: FockState2D) -> Fraction:
    """<s|expr|s>; diagonal radicands are perfect squares, so this is rational."""
    c, r = _amplitude_sum(expr, s, s)
    root = _rational_sqrt(r)
    if root is None:
        raise IncompatibleRadical(f"diagonal radicand {r} is not a perfect square")
    return c * root


def p2_expr() -> LadderExpr:
    """p^2 in units hbar m omega: ad.a + bd.b - ad.bd - a.b + 1."""
    m = LadderExpr.mono
    return m("ad", "a") + m("bd", "b") - m("ad", "bd") - m("a", "b") + LadderExpr.one()


def p4_operators() -> dict[str, LadderExpr]:
    """The five-block decomposition of p^4 (units hbar^2 m^2 omega^2).

    K0 conserves N, R4/L4 raise/lower it by 4 and R2/L2 by 2; all five
    leave m unchanged.
    """
    m = LadderExpr.mono
    k0 = (
        m("ad", "a", "ad", "a")
        + m("bd", "b", "bd", "b")
        + m("ad", "a", "bd", "b", coeff=4)
        + m("ad", "a", coeff=3)
        + m("bd", "b", coeff=3)
        + LadderExpr.one(2)
    )
    r4 = m("ad", "bd", "ad", "bd")
    l4 = m("a", "b", "a", "b")
    r2 = m("ad", "a", "ad", "bd", coeff=-2) + m("bd", "b", "ad", "bd", coeff=-2)
    l2 = (
        m("ad", "a", "a", "b", coeff=-2)
        + m("bd", "b", "a", "b", coeff=-2)
        + m("a", "b", coeff=-4)
    )
    return {"K0": k0, "R4": r4, "L4": l4, "R2": r2, "L2": l2}


def p4_expr() -> LadderExpr:
    """p^4 as printed, the sum of the five blocks."""
    ops = p4_operators()
    return ops["K0"] + ops["R4"] + ops["L4"] + ops["R2"] + ops["L2"]


def p6_zero_expr() -> LadderExpr:
    """N-conserving part of p^6: (ad.a + bd.b + 1) K0 - ad.bd L2 - a.b R2."""
    m = LadderExpr.mono
    ops = p4_operators()
    number_plus_one = m("ad", "a") + m("bd", "b") + LadderExpr.one()
    return number_plus_one * ops["K0"] - m("ad", "bd") * ops["L2"] - m("a", "b") * ops["R2"]


def _normal_order_species(seq: tuple[str, ...]) -> dict[tuple[int, int], Fraction]:
    """Normal order a single-species word ('+' = creation, '-' = annihilation)."""
    for i in range(len(seq) - 1):
        if seq[i] == "-" and seq[i + 1] == "+":
            swapped = _normal_order_species(seq[:i] + ("+", "-") + seq[i + 2 :])
            contracted = _normal_order_species(seq[:i] + seq[i + 2 :])
            for key, val in contracted.items():
                swapped[key] = swapped.get(key, Fraction(0)) + val
            return {k: v for k, v in swapped.items() if v != 0}
    return {(seq.count("+"), seq.count("-")): Fraction(1)}


def normal_order(expr: LadderExpr) -> dict[tuple[int, int, int, int], Fraction]:
    """Normal-ordered coefficients keyed by (ad, a, bd, b) exponents.

    The a- and b-species commute, so each is ordered independently with
    [a, ad] = [b, bd] = 1.
    """
    result: dict[tuple[int, int, int, int], Fraction] = {}
    for term in expr.terms:
        a_word = tuple("+" if g == "ad" else "-" for g in term.gens if g in ("a", "ad"))
        b_word = tuple("+" if g == "bd" else "-" for g in term.gens if g in ("b", "bd"))
        for (i, j), ca in _normal_order_species(a_word).items():
            for (k, l), cb in _normal_order_species(b_word).items():
                key = (i, j, k, l)
                result[key] = result.get(key, Fraction(0)) + term.coeff * ca * cb
    return {k: v for k, v in result.items() if v != 0}


def first_order_2d(s: FockState2D) -> Fraction:
    """epsilon1 = -<K0>/8, computed by applying the operator."""
    return -expectation(p4_operators()["K0"], s) / 8


def second_order_2d_partI(s: FockState2D) -> Fraction:
    """Diagonal second-order part, <p6_0>/16 by operator application."""
    return expectation(p6_zero_expr(), s) / 16


def second_order_2d_partII(s: FockState2D) -> Fraction:
    """Sum-over-states part from the squared R2/L2/R4/L4 transitions."""
    ops = p4_operators()
    hopping = ops["R2"] + ops["L2"] + ops["R4"] + ops["L4"]
    total = Fraction(0)
    for delta in (-4, -2, 2, 4):
        n_prime = s.N + delta
        if n_prime < 0 or abs(s.m) > n_prime:
            continue
        bra = FockState2D(n_prime, s.m)
        total += matrix_element_squared(hopping, bra, s) / (s.N - n_prime)
    return total / 64


def second_order_2d(s: FockState2D) -> Fraction:
    """Full two-dimensional second-order correction."""
    return second_order_2d_partI(s) + second_order_2d_partII(s)


def map_Nm_to_nl(s: FockState2D) -> QuantumNumbers:
    """Polar (N, m) to radial (d=2, n=(N-|m|)/2, l=|m|)."""
    return QuantumNumbers(2, Fraction(s.N - abs(s.m), 2), abs(s.m))


def build_state(N: int, m: int) -> tuple[FockState2D, Fraction]:
    """Build |N m> from the vacuum with raising operators.

    Returns the reached state and the squared amplitude normalized by
    n_a! n_b!, which is exactly 1 for every valid (N, m).
    """
    target = FockState2D(N, m)
    mono = Monomial(Fraction(1), ("ad",) * target.n_a + ("bd",) * target.n_b)
    state, amp = apply_monomial(mono, FockState2D(0, 0))
    norm = Fraction(math.factorial(target.n_a) * math.factorial(target.n_b))
    return state, amp.mag2 / norm
