"""Lower bounds on the multiplier degree.

Two independent routes exclude a degree ``t``: the sign argument (every
``T_{k1}`` with ``k <= t`` is strictly negative, so no ``c >= 0`` can make the
second column of ``c T_t`` non-negative) and a planar cone-feasibility test
on the rows of ``T_t``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotRefutable, SearchExhausted
from .multiplier import optimal_degree
from .poly import PolarQuadratic
from .tmatrix import TMatrix, build_framework, compute_T_recurrence

# an entry is "< 0" only below -STRICT_RTOL * r^(k+1)
STRICT_RTOL = 1e-12
# snapping threshold for unit-normalized rows in the cone test
CONE_SNAP = 1e-12


class RefutationMethod(enum.Enum):
    SIGN_ARGUMENT = "SignArgument"
    CONE_ORACLE = "ConeOracle"


@dataclass(frozen=True)
class InfeasibilityWitness:
    t: int
    negative_column: tuple[float, ...]
    method: RefutationMethod
    # no degree below s = 0 exists, so there is nothing to refute
    vacuous: bool = False


def refute_degree(pq: PolarQuadratic, t: int) -> InfeasibilityWitness:
    """Show that no non-zero ``g`` of degree ``t`` gives ``coeffs(g f) >= 0``.

    Raises
    ------
    NotRefutable
        Some ``T_{k1}`` is not safely negative (``t >= s`` or a boundary angle).
    """
    if optimal_degree(pq.theta) == 0:
        return InfeasibilityWitness(t, (), RefutationMethod.SIGN_ARGUMENT, vacuous=True)
    if t < 0:
        raise ValueError("t must be non-negative")
    T = compute_T_recurrence(build_framework(pq, t), check=False)
    col = T.entries[:, 1]
    bound = -STRICT_RTOL * pq.r ** np.arange(1, t + 2, dtype=float)
    bad = np.nonzero(~(col < bound))[0]
    if bad.size:
        k = int(bad[0])
        raise NotRefutable(f"T[{k},1] = {col[k]!r} is not negative; degree {t} is not excluded")
    return InfeasibilityWitness(t, tuple(float(x) for x in col), RefutationMethod.SIGN_ARGUMENT)


def _cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


def cone_feasible(T: TMatrix | np.ndarray) -> bool:
    """Is there ``c >= 0, c != 0`` with ``c T >= 0`` (both columns)?

    The set ``{c T : c >= 0}`` is the cone spanned by the rows of ``T``.
    Rows are scaled to unit max-norm, which leaves the cone unchanged, and
    entries within ``CONE_SNAP`` of zero are set to zero. Then:

    * a row in the closed first quadrant settles it;
    * otherwise every row has angle in ``(pi/2, 2 pi)``, and the cone meets
      the quadrant iff the extreme angles are at least ``pi`` apart (the cone
      then wraps through angle 0, or contains a line through the origin).
    """
    rows = np.asarray(T.entries if isinstance(T, TMatrix) else T, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != 2 or rows.shape[0] == 0:
        raise ValueError("expected a non-empty (n, 2) array of rows")
    norms = np.max(np.abs(rows), axis=1)
    if np.any(norms == 0.0):
        return True  # a zero row: c = e_k gives c T = 0
    unit = rows / norms[:, None]
    unit[np.abs(unit) <= CONE_SNAP] = 0.0
    if bool(np.any((unit[:, 0] >= 0.0) & (unit[:, 1] >= 0.0))):
        return True
    ang = np.arctan2(unit[:, 1], unit[:, 0])
    ang = np.where(ang <= 0.0, ang + 2.0 * math.pi, ang)  # now in (pi/2, 2 pi)
    lo = unit[int(np.argmin(ang))]
    hi = unit[int(np.argmax(ang))]
    cr = _cross(lo, hi)
    if abs(cr) <= CONE_SNAP:
        # parallel extremes: opposite means the cone holds a line
        return bool(np.dot(lo, hi) < 0.0)
    return bool(cr < 0.0)


def minimal_degree_search(pq: PolarQuadratic, t_max: int) -> int:
    """Smallest ``t <= t_max`` whose ``T_t`` passes :func:`cone_feasible`."""
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    # T_t is the leading (t+1)-row block of T_{t_max}: forward substitution
    # never looks ahead, so one solve serves every prefix
    full = compute_T_recurrence(build_framework(pq, t_max), check=False)
    for t in range(t_max + 1):
        if cone_feasible(full.entries[: t + 1]):
            return t
    raise SearchExhausted(f"no feasible degree up to {t_max} for theta={pq.theta!r}")


def feasibility_table(pq: PolarQuadratic, t_max: int) -> list[tuple[int, bool]]:
    full = compute_T_recurrence(build_framework(pq, t_max), check=False)
    return [(t, cone_feasible(full.entries[: t + 1])) for t in range(t_max + 1)]
