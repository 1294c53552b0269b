"""Riggs versus monic Meissner: c-vectors, coefficient ratios, figure data."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegreeMismatch
from .multiplier import meissner_monic, optimal_degree, riggs_recurrence
from .poly import DEFAULT_RTOL, PolarQuadratic, Polynomial
from .tmatrix import build_framework

N_ANGLES = 10


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    pq: PolarQuadratic
    s: int
    c_R: np.ndarray
    c_M: np.ndarray
    coeff_ratios: np.ndarray
    g_R: Polynomial
    g_M: Polynomial
    equal: bool
    ordering_holds: bool

    def to_dict(self) -> dict:
        return {
            "r": self.pq.r,
            "theta": self.pq.theta,
            "s": self.s,
            "c_R": [float(x) for x in self.c_R],
            "c_M": [float(x) for x in self.c_M],
            "g_R": list(self.g_R.coeffs),
            "g_M_monic": list(self.g_M.coeffs),
            "coeff_ratios": [float(x) for x in self.coeff_ratios],
            "equal": self.equal,
            "ordering_holds": self.ordering_holds,
        }


def c_vector(g: Polynomial, pq: PolarQuadratic) -> np.ndarray:
    """``c = b R_s`` for ``g = b_0 + ... + b_s x^s``."""
    s = optimal_degree(pq.theta)
    if g.degree != s:
        raise DegreeMismatch(f"g has degree {g.degree}, expected s = {s}")
    return g.array() @ build_framework(pq, s).R


def meissner_c_closed(pq: PolarQuadratic) -> np.ndarray:
    """c-vector of the monic Meissner multiplier: zero except the last two entries."""
    s = optimal_degree(pq.theta)
    c = np.zeros(s + 1)
    c[s] = 1.0
    if s >= 1:
        th = pq.theta
        c[s - 1] = -pq.r * math.sin((s + 2) * th) / math.sin((s + 1) * th)
    return c


def ratio(theta: float, i: int, s: int | None = None) -> float:
    """``coeff(g_R, i) / coeff(g_M*, i)``; independent of the modulus ``r``."""
    if s is None:
        s = optimal_degree(theta)
    if not 0 <= i <= s:
        raise IndexError(f"coefficient index {i} outside 0..{s}")
    return (
        math.sin((s - i + 1) * theta)
        * math.sin((s + 1) * theta)
        / (math.sin(theta) * math.sin((i + 1) * theta))
    )


def compare(pq: PolarQuadratic, rtol: float = DEFAULT_RTOL) -> ComparisonReport:
    s = optimal_degree(pq.theta)
    g_R = riggs_recurrence(pq).g
    g_M = meissner_monic(pq).g
    c_R = c_vector(g_R, pq)
    c_M = c_vector(g_M, pq)
    ratios = np.array([ratio(pq.theta, i, s) for i in range(s + 1)])
    # c_M[s-1] scales like r; this matches the snap guard on pi/theta
    equal = s == 0 or abs(c_M[s - 1]) <= rtol * pq.r
    scale = max(1.0, g_R.scale(), g_M.scale())
    ordering = bool(
        np.all(c_R <= c_M + rtol * scale)
        and np.all(g_R.array() <= g_M.array() + rtol * scale)
    )
    return ComparisonReport(pq, s, c_R, c_M, ratios, g_R, g_M, bool(equal), ordering)


@dataclass(frozen=True, eq=False)
class RatioTable:
    s: int
    thetas: np.ndarray
    values: np.ndarray  # shape (N_ANGLES, s); column i is ratio(theta, i)

    def to_csv(self) -> str:
        header = ["theta"] + [f"i{i}" for i in range(self.s)]
        lines = [",".join(header)]
        for th, row in zip(self.thetas, self.values):
            lines.append(",".join([repr(float(th))] + [repr(float(v)) for v in row]))
        return "\n".join(lines) + "\n"


def ratio_table(s: int) -> RatioTable:
    """Ratios at ten angles stepping from ``pi/(s+2)`` toward ``pi/(s+1)``."""
    if s < 1:
        raise ValueError("ratio_table needs s >= 1")
    lo, hi = math.pi / (s + 2), math.pi / (s + 1)
    thetas = np.array([(1 - k / N_ANGLES) * lo + (k / N_ANGLES) * hi for k in range(N_ANGLES)])
    values = np.array([[ratio(th, i, s) for i in range(s)] for th in thetas])
    return RatioTable(s, thetas, values)


def limit_check(s: int, i: int, eps_sequence) -> list[float]:
    """``ratio(pi/(s+1) - eps, i)`` for each ``eps``.

    Only ``i < s`` tends to zero; ``ratio(theta, s)`` is identically 1.
    """
    if not 0 <= i < s:
        raise ValueError(f"index must satisfy 0 <= i < s, got i={i}, s={s}")
    top = math.pi / (s + 1)
    width = top - math.pi / (s + 2)
    out = []
    for eps in eps_sequence:
        if not 0.0 < eps <= width * (1 + 1e-12):
            raise ValueError(f"eps={eps} outside (0, {width}]")
        out.append(ratio(top - eps, i, s))
    return out
