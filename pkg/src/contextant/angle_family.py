"""Geometry of the tilted pair family.

The compatibility angle between successive measurement directions at tilt
theta, its inverse, the quantum pair correlation g, exact rational-angle
representation with parity classification, the step-orbit cycle structure,
and best rational approximation of a float angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

THETA_MIN = math.pi / 4
THETA_MAX = math.pi / 2
DELTA_MIN = math.pi / 2
DELTA_MAX = math.pi

# Fraction delta/2pi below which g >= 0 and the uniform assignment suffices;
# equals acos(-1/3)/2pi, the theta = pi/3 boundary.
G_SIGN_BOUNDARY = math.acos(-1.0 / 3.0) / (2.0 * math.pi)

_EPS = 1e-12


def delta_of_theta(theta: float) -> float:
    """Compatibility angle arccos(-cot^2 theta), for theta in [pi/4, pi/2].

    Directions at tilt theta separated by this azimuthal step are
    orthogonal; outside [pi/4, pi/2] no orthogonal pair exists.
    """
    if not (THETA_MIN - _EPS <= theta <= THETA_MAX + _EPS):
        raise ValueError(f"theta = {theta!r} outside [pi/4, pi/2]")
    c, s = math.cos(theta), math.sin(theta)
    arg = -(c * c) / (s * s)
    return math.acos(max(-1.0, min(1.0, arg)))


def theta_of_delta(delta: float) -> float:
    """Tilt angle with cot^2 theta = -cos(delta), for delta in [pi/2, pi]."""
    if not (DELTA_MIN - _EPS <= delta <= DELTA_MAX + _EPS):
        raise ValueError(f"delta = {delta!r} outside [pi/2, pi]")
    return math.atan2(1.0, math.sqrt(max(0.0, -math.cos(delta))))


def g_of_theta(theta: float) -> float:
    """Quantum pair correlation 1 - 4 cos^2 theta in the m=0 state."""
    if not (THETA_MIN - _EPS <= theta <= THETA_MAX + _EPS):
        raise ValueError(f"theta = {theta!r} outside [pi/4, pi/2]")
    c = math.cos(theta)
    return max(-1.0, min(1.0, 1.0 - 4.0 * c * c))


def g_of_delta(delta: float) -> float:
    """Pair correlation as a function of the step angle: (1+3cos)/(1-cos)."""
    if not (DELTA_MIN - _EPS <= delta <= DELTA_MAX + _EPS):
        raise ValueError(f"delta = {delta!r} outside [pi/2, pi]")
    c = math.cos(delta)
    return max(-1.0, min(1.0, (1.0 + 3.0 * c) / (1.0 - c)))


@dataclass(frozen=True)
class RationalAngle:
    """Step angle 2*pi*p/q with p, q coprime and p/q in [1/4, 1/2]."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("p and q must be positive")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p = {self.p} and q = {self.q} are not coprime")
        f = Fraction(self.p, self.q)
        if not (Fraction(1, 4) <= f <= Fraction(1, 2)):
            raise ValueError(f"p/q = {f} outside [1/4, 1/2]")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def delta(self) -> float:
        return 2.0 * math.pi * self.p / self.q

    @property
    def theta(self) -> float:
        return theta_of_delta(self.delta)


@dataclass(frozen=True)
class AngleClass:
    """Parity class of a step angle: even denominator, odd denominator, or
    irrational.  The irrational class is only produced for symbolic inputs,
    never inferred from a float."""

    parity: str  # "even" | "odd" | "irrational"
    n: int | None = None

    def __post_init__(self):
        if self.parity not in ("even", "odd", "irrational"):
            raise ValueError(f"unknown parity {self.parity!r}")
        if self.parity == "irrational" and self.n is not None:
            raise ValueError("irrational class carries no n")
        if self.parity != "irrational" and (self.n is None or self.n < 1):
            raise ValueError("rational class requires n >= 1")


IRRATIONAL = AngleClass("irrational")


def classify(angle: RationalAngle) -> AngleClass:
    """Even denominator q = 2n or odd denominator q = 2n+1."""
    if angle.q % 2 == 0:
        return AngleClass("even", angle.q // 2)
    return AngleClass("odd", angle.q // 2)


@dataclass(frozen=True)
class OrbitCycle:
    """The q-cycle traced by repeated steps of 2*pi*p/q.

    Position k along the cycle sits on arc k*p mod q, where the circle is
    split into q arcs of width 2*pi/q with arc j = [2*pi*j/q, 2*pi*(j+1)/q).
    Coprimality makes the position-to-arc map a bijection.
    """

    q: int
    step: int

    def arc_of_position(self, k: int) -> int:
        return (k * self.step) % self.q

    def arcs(self) -> tuple[int, ...]:
        return tuple(self.arc_of_position(k) for k in range(self.q))

    @property
    def arc_width(self) -> float:
        return 2.0 * math.pi / self.q


def orbit_cycle(angle: RationalAngle) -> OrbitCycle:
    return OrbitCycle(q=angle.q, step=angle.p)


def _best_approximations(x: Fraction, q_max: int) -> list[Fraction]:
    """Continued-fraction convergents and intermediate fractions of x with
    denominator <= q_max, in increasing order of denominator."""
    out: list[Fraction] = []
    # convergents h/k via the standard recurrence
    a_list: list[int] = []
    num, den = x.numerator, x.denominator
    while den:
        a = num // den
        a_list.append(a)
        num, den = den, num - a * den
    h_prev, k_prev = 1, 0
    h, k = a_list[0], 1
    out.append(Fraction(h, k))
    for i in range(1, len(a_list)):
        a = a_list[i]
        # semiconvergents c*h + h_prev for c = 1..a; the c = a case is the
        # next convergent
        for c in range(1, a + 1):
            hn, kn = c * h + h_prev, c * k + k_prev
            if kn > q_max:
                return out
            cand = Fraction(hn, kn)
            # a semiconvergent is a best approximation iff it beats the
            # previous convergent; check directly
            if abs(cand - x) < abs(Fraction(h, k) - x) or cand == x:
                out.append(cand)
        h_prev, k_prev, h, k = h, k, a * h + h_prev, a * k + k_prev
    return out


def rational_approximants(
    delta: float, q_max: int
) -> list[tuple[RationalAngle, float]]:
    """Best rational approximations of delta/2pi with denominator <= q_max.

    Returns (angle, |delta/2pi - p/q|) pairs sorted by distance; fractions
    outside [1/4, 1/2] are dropped.
    """
    if not (DELTA_MIN - _EPS <= delta <= DELTA_MAX + _EPS):
        raise ValueError(f"delta = {delta!r} outside [pi/2, pi]")
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    x = delta / (2.0 * math.pi)
    xf = Fraction(x)
    lo, hi = Fraction(1, 4), Fraction(1, 2)
    results = []
    for f in _best_approximations(xf, q_max):
        if not (lo <= f <= hi):
            continue
        results.append((RationalAngle(f.numerator, f.denominator), abs(x - f)))
    results.sort(key=lambda t: (t[1], t[0].q))
    return results
