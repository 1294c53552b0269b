"""Real univariate polynomials and monic quadratics in polar form.

Coefficients are stored in ascending order: ``coeffs[k]`` multiplies ``x**k``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError, RealRootsError

# relative tolerance used when no explicit one is given
DEFAULT_RTOL = 1e-9
_CLAMP_GUARD = 1e-12


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]):
        c = [float(x) for x in coeffs]
        if not c:
            raise ValueError("a polynomial needs at least one coefficient")
        while len(c) > 1 and c[-1] == 0.0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse ``"2,-2,1"`` (ascending coefficients) into x^2 - 2x + 2."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(float(p) for p in parts)

    def to_text(self) -> str:
        return ",".join(repr(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1.0

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def scale(self) -> float:
        """Largest absolute coefficient."""
        return max(abs(c) for c in self.coeffs)

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=float)

    def __call__(self, x):
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return multiply(self, other)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0.0 and self.degree > 0:
                continue
            mag = format(abs(c), ".12g")
            if k == 0:
                body = mag
            else:
                body = ("" if mag == "1" else mag) + ("x" if k == 1 else f"x^{k}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class PolarQuadratic:
    """Monic quadratic ``x^2 - 2 r cos(theta) x + r^2`` with roots ``r e^{+-i theta}``."""

    r: float
    theta: float

    def __post_init__(self):
        if not (self.r > 0 and math.isfinite(self.r)):
            raise DomainError(f"modulus must be positive, got r={self.r}")
        if not (0.0 < self.theta < math.pi):
            raise DomainError(f"theta must lie in (0, pi), got {self.theta}")

    @property
    def a0(self) -> float:
        return self.r * self.r

    @property
    def a1(self) -> float:
        return -2.0 * self.r * math.cos(self.theta)


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(np.convolve(p.array(), q.array()))


def from_polar(pq: PolarQuadratic) -> Polynomial:
    return Polynomial((pq.a0, pq.a1, 1.0))


def to_polar(f: Polynomial) -> PolarQuadratic:
    """Polar form of a monic quadratic with non-real roots.

    Raises
    ------
    RealRootsError
        If the discriminant is non-negative.
    """
    if f.degree != 2 or not f.is_monic:
        raise DomainError(f"expected a monic quadratic, got degree {f.degree} with leading {f.leading}")
    a0, a1, _ = f.coeffs
    if a1 * a1 - 4.0 * a0 >= 0.0:
        raise RealRootsError(f"{f} has real roots (discriminant {a1 * a1 - 4.0 * a0:g} >= 0)")
    r = math.sqrt(a0)
    arg = -a1 / (2.0 * r)
    # roundoff can push |arg| past 1 near theta = 0 or pi
    if abs(arg) > 1.0 + _CLAMP_GUARD:
        raise RealRootsError(f"{f} has real roots (|cos theta| = {abs(arg):g})")
    theta = math.acos(min(1.0, max(-1.0, arg)))
    return PolarQuadratic(r, theta)


def default_tol(*polys: Polynomial, rtol: float = DEFAULT_RTOL) -> float:
    return rtol * max([1.0] + [p.scale() for p in polys])


def coeffs_nonneg(p: Polynomial, tol: float = 0.0) -> bool:
    return all(c >= -tol for c in p.coeffs)


class Positivity(enum.Enum):
    POSITIVE = "Positive"
    NOT_POSITIVE = "NotPositive"


def classify_positivity(p: Polynomial) -> Positivity:
    """Decide whether a monic ``p`` is positive on ``(0, inf)``.

    Degrees up to 2 are decided from the coefficients directly; higher
    degrees go through the numerical factorization in :mod:`poincare.composer`.
    """
    if not p.is_monic:
        raise DomainError("classify_positivity expects a monic polynomial")
    if coeffs_nonneg(p):
        return Positivity.POSITIVE
    if p.degree == 1:
        # x + a0 with a0 < 0 vanishes at -a0 > 0
        return Positivity.NOT_POSITIVE
    if p.degree == 2:
        a0, a1, _ = p.coeffs
        if a1 * a1 - 4.0 * a0 < 0.0:
            return Positivity.POSITIVE
        # real roots: both <= 0 iff sum = -a1 <= 0 and product = a0 >= 0,
        # which the nonneg-coefficient test above already covers
        return Positivity.NOT_POSITIVE

    from .composer import factor

    fac = factor(p)
    return Positivity.NOT_POSITIVE if fac.has_positive_root() else Positivity.POSITIVE
