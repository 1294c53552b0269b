"""Framework matrices for a monic quadratic ``f = x^2 + a1 x + a0``.

For a multiplier ``g = b_0 + ... + b_s x^s`` the coefficient row of ``g f`` is
``b [L_s | R_s]``, where ``L_s`` is ``(s+1) x 2`` and ``R_s`` is unit lower
triangular with ``a1`` on the first and ``a0`` on the second subdiagonal.
Writing ``c = b R_s`` and ``T_s = R_s^{-1} L_s`` turns the search for ``g``
into the search for ``c >= 0, c != 0`` with ``c T_s >= 0``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .numeric import scaled_rel_err
from .poly import PolarQuadratic

MAX_DEGREE = 10_000
# closed form vs recurrence disagreement that triggers a warning
MISMATCH_WARN_RTOL = 1e-6


class TMatrixMismatchWarning(RuntimeWarning):
    """Recurrence and closed-form T entries disagree; theta is likely near a sine zero."""


def _check_degree(s: int) -> int:
    s = int(s)
    if s < 0:
        raise ValueError(f"degree must be non-negative, got {s}")
    if s > MAX_DEGREE:
        raise ValueError(f"degree {s} exceeds the supported cap {MAX_DEGREE}")
    return s


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class FrameworkMatrices:
    s: int
    L: np.ndarray
    R: np.ndarray
    quadratic: PolarQuadratic


@dataclass(frozen=True, eq=False)
class TMatrix:
    s: int
    entries: np.ndarray
    quadratic: PolarQuadratic

    def envelope(self) -> np.ndarray:
        """Natural magnitude ``r^(k+2-j)`` of each entry."""
        return t_envelope(self.quadratic.r, self.s)

    def to_csv(self) -> str:
        lines = ["k,T_k0,T_k1"]
        for k, (t0, t1) in enumerate(self.entries):
            lines.append(f"{k},{float(t0)!r},{float(t1)!r}")
        return "\n".join(lines) + "\n"


def t_envelope(r: float, s: int) -> np.ndarray:
    k = np.arange(s + 1, dtype=float)[:, None]
    j = np.array([0.0, 1.0])[None, :]
    return r ** (k + 2 - j)


def build_framework(pq: PolarQuadratic, s: int) -> FrameworkMatrices:
    s = _check_degree(s)
    a0, a1 = pq.a0, pq.a1
    n = s + 1
    R = np.eye(n)
    idx = np.arange(n)
    R[idx[1:], idx[:-1]] = a1
    R[idx[2:], idx[:-2]] = a0
    L = np.zeros((n, 2))
    L[0, 0] = a0
    L[0, 1] = a1
    if n > 1:
        L[1, 1] = a0
    return FrameworkMatrices(s, _readonly(L), _readonly(R), pq)


def compute_T_recurrence(fm: FrameworkMatrices, check: bool = True) -> TMatrix:
    """Solve ``R T = L`` by banded forward substitution.

    ``R`` is unit lower triangular with bandwidth 3, so row ``k`` only needs
    rows ``k-1`` and ``k-2``. When ``check`` is set the result is compared with
    the trigonometric closed form and a :class:`TMatrixMismatchWarning` is
    emitted if they drift apart by more than ``MISMATCH_WARN_RTOL``.
    """
    R, L = fm.R, fm.L
    n = fm.s + 1
    sub1 = [0.0] + [float(R[k, k - 1]) for k in range(1, n)]
    sub2 = [0.0, 0.0] + [float(R[k, k - 2]) for k in range(2, n)]
    cols = []
    for j in range(2):
        rhs = L[:, j].tolist()
        t = [0.0] * n
        prev1 = prev2 = 0.0
        for k in range(n):
            cur = rhs[k] - sub1[k] * prev1 - sub2[k] * prev2
            t[k] = cur
            prev2, prev1 = prev1, cur
        cols.append(t)
    T = TMatrix(fm.s, _readonly(np.array(cols).T.reshape(n, 2)), fm.quadratic)
    if check:
        err = scaled_rel_err(T.entries, closed_form_T_matrix(fm.quadratic, fm.s), T.envelope())
        if err > MISMATCH_WARN_RTOL:
            warnings.warn(
                f"T recurrence and closed form differ by {err:.3g} (relative) at "
                f"theta={fm.quadratic.theta!r}, s={fm.s}",
                TMatrixMismatchWarning,
                stacklevel=2,
            )
    return T


def compute_T(pq: PolarQuadratic, s: int) -> TMatrix:
    return compute_T_recurrence(build_framework(pq, s))


def closed_form_T(pq: PolarQuadratic, k: int, j: int) -> float:
    """``T_k0 = r^(k+2) sin((k+1)t)/sin t`` and ``T_k1 = -r^(k+1) sin((k+2)t)/sin t``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    r, th = pq.r, pq.theta
    if j == 0:
        return r ** (k + 2) * math.sin((k + 1) * th) / math.sin(th)
    if j == 1:
        return -(r ** (k + 1)) * math.sin((k + 2) * th) / math.sin(th)
    raise ValueError(f"column index must be 0 or 1, got {j}")


def closed_form_T_matrix(pq: PolarQuadratic, s: int) -> np.ndarray:
    k = np.arange(s + 1, dtype=float)
    r, th = pq.r, pq.theta
    st = math.sin(th)
    col0 = r ** (k + 2) * np.sin((k + 1) * th) / st
    col1 = -(r ** (k + 1)) * np.sin((k + 2) * th) / st
    return np.column_stack([col0, col1])


def residual(fm: FrameworkMatrices, T: TMatrix) -> float:
    """Scaled residual of ``R T = L``; zero up to roundoff for a correct ``T``."""
    return scaled_rel_err(fm.R @ T.entries, fm.L, T.envelope())
