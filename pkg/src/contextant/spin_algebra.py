"""Spin-1 operator algebra on 3x3 complex matrices.

Directions, spin operators, the dichotomic observables built from squared
spin components, density matrices, expectation values of commuting
products, and the orthogonal-triple product identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ALGEBRA_TOL = 1e-12
COMPAT_TOL = 1e-10

_SQ2 = 1.0 / math.sqrt(2.0)

# Spin-1 matrices in the S_z eigenbasis, ordered m = +1, 0, -1.
SPIN_X = np.array([[0, _SQ2, 0], [_SQ2, 0, _SQ2], [0, _SQ2, 0]], dtype=complex)
SPIN_Y = np.array(
    [[0, -1j * _SQ2, 0], [1j * _SQ2, 0, -1j * _SQ2], [0, 1j * _SQ2, 0]],
    dtype=complex,
)
SPIN_Z = np.diag([1.0, 0.0, -1.0]).astype(complex)
IDENTITY = np.eye(3, dtype=complex)


class CompatibilityError(ValueError):
    """Raised when an operation requires commuting observables and gets none."""


@dataclass(frozen=True)
class Direction:
    """Unit vector in R^3."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        n = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(n - 1.0) > 1e-12:
            raise ValueError(f"direction must be unit length, |d|^2 = {n!r}")

    def dot(self, other: "Direction") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __neg__(self) -> "Direction":
        return Direction(-self.x, -self.y, -self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def direction_from_angles(theta: float, phi: float) -> Direction:
    """Unit vector (cos(phi) sin(theta), sin(phi) sin(theta), cos(theta))."""
    st = math.sin(theta)
    v = np.array([math.cos(phi) * st, math.sin(phi) * st, math.cos(theta)])
    v /= np.linalg.norm(v)
    return Direction(v[0], v[1], v[2])


def spin_operator(d: Direction) -> np.ndarray:
    """Spin-1 operator for direction d; Hermitian with spectrum {+1, 0, -1}."""
    return d.x * SPIN_X + d.y * SPIN_Y + d.z * SPIN_Z


def dichotomic(d: Direction) -> np.ndarray:
    """Dichotomic observable 2 S_d^2 - I with spectrum {+1, +1, -1}.

    Even in d: the same observable is returned for d and -d.  Two of these
    commute exactly when their directions are orthogonal or collinear.
    """
    s = spin_operator(d)
    return 2.0 * (s @ s) - IDENTITY


def commutator_norm(a: np.ndarray, b: np.ndarray) -> float:
    """Frobenius norm of the commutator ab - ba."""
    return float(np.linalg.norm(a @ b - b @ a))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite 3x3 matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError("density matrix must be 3x3")
        if np.linalg.norm(m - m.conj().T) > ALGEBRA_TOL:
            raise ValueError("density matrix must be Hermitian")
        if abs(np.trace(m).real - 1.0) > ALGEBRA_TOL:
            raise ValueError("density matrix must have unit trace")
        if np.linalg.eigvalsh(m).min() < -ALGEBRA_TOL:
            raise ValueError("density matrix must be positive semidefinite")
        object.__setattr__(self, "matrix", m)


def expectation(rho: DensityMatrix, ops: list[np.ndarray]) -> float:
    """Tr(rho A B ...) for pairwise-commuting observables A, B, ...

    Raises CompatibilityError if any pair of the operators fails to commute
    within the compatibility tolerance; the product is only an observable
    for a commuting family.
    """
    if not ops:
        raise ValueError("expectation requires at least one operator")
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            c = commutator_norm(ops[i], ops[j])
            if c > COMPAT_TOL:
                raise CompatibilityError(
                    f"operators {i} and {j} do not commute (|[A,B]| = {c:.3e})"
                )
    prod = IDENTITY
    for op in ops:
        prod = prod @ op
    val = complex(np.trace(rho.matrix @ prod))
    if abs(val.imag) > COMPAT_TOL:
        raise CompatibilityError(f"expectation has imaginary part {val.imag:.3e}")
    return val.real


def minus_one_eigenprojector(a: np.ndarray) -> DensityMatrix:
    """Rank-1 projector onto the -1 eigenspace of a dichotomic observable.

    For a with a^2 = I and trace 1 the projector is (I - a)/2.
    """
    if np.linalg.norm(a @ a - IDENTITY) > COMPAT_TOL:
        raise ValueError("operator does not square to identity")
    if abs(np.trace(a).real - 1.0) > COMPAT_TOL:
        raise ValueError("operator does not have trace 1")
    return DensityMatrix((IDENTITY - a) / 2.0)


def triple_product_check(k: Direction, l: Direction, m: Direction) -> float:
    """Residual |A_k A_l A_m + I|_F for a mutually orthogonal triple."""
    for u, v in ((k, l), (k, m), (l, m)):
        d = abs(u.dot(v))
        if d > COMPAT_TOL:
            raise ValueError(f"directions not orthogonal (|dot| = {d:.3e})")
    prod = dichotomic(k) @ dichotomic(l) @ dichotomic(m)
    return float(np.linalg.norm(prod + IDENTITY))
