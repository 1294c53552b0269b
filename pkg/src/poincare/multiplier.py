"""Optimal-degree Poincaré multipliers for a positive quadratic.

Three routes give the Riggs multiplier (the one whose c-vector is
``(0, ..., 0, 1)``): the coefficient recurrence, the banded determinant, and
the closed trigonometric form. Meissner's classical multiplier and its monic
normalization are provided for comparison. Every construction returns a
:class:`MultiplierCertificate` that can be re-checked with :func:`verify`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CertificateFailure, DomainError
from .poly import (
    DEFAULT_RTOL,
    PolarQuadratic,
    Polynomial,
    coeffs_nonneg,
    from_polar,
    multiply,
)
from .tmatrix import _check_degree, build_framework

# |pi/theta - k| below this counts as the integer k
SNAP_GUARD = 1e-9


class Provenance(enum.Enum):
    RIGGS_RECURRENCE = "RiggsRecurrence"
    RIGGS_DETERMINANT = "RiggsDeterminant"
    RIGGS_CLOSED_FORM = "RiggsClosedForm"
    MEISSNER = "Meissner"
    MEISSNER_MONIC = "MeissnerMonic"


MONIC_PROVENANCES = frozenset(p for p in Provenance if p is not Provenance.MEISSNER)


@dataclass(frozen=True)
class MultiplierCertificate:
    f: Polynomial
    g: Polynomial
    s: int
    c: tuple[float, ...]
    product: Polynomial
    provenance: Provenance
    tol: float
    composed: bool = False
    # "proven" for a single quadratic; composition carries no optimality claim
    optimality: str = "proven"

    def to_dict(self, verified: bool | None = None) -> dict:
        d = {
            "f": list(self.f.coeffs),
            "g": list(self.g.coeffs),
            "s": self.s,
            "c": list(self.c),
            "product": list(self.product.coeffs),
            "provenance": self.provenance.value,
            "tol": self.tol,
            "composed": self.composed,
            "optimality": self.optimality,
        }
        d["verified"] = verify(self) if verified is None else verified
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MultiplierCertificate":
        return cls(
            f=Polynomial(d["f"]),
            g=Polynomial(d["g"]),
            s=int(d["s"]),
            c=tuple(float(x) for x in d["c"]),
            product=Polynomial(d["product"]),
            provenance=Provenance(d["provenance"]),
            tol=float(d["tol"]),
            composed=bool(d.get("composed", False)),
            optimality=str(d.get("optimality", "proven")),
        )


def optimal_degree(theta: float) -> int:
    """Smallest multiplier degree ``ceil(pi/theta) - 2`` for roots ``r e^{+-i theta}``."""
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta must lie in (0, pi), got {theta}")
    q = math.pi / theta
    nearest = round(q)
    if abs(q - nearest) < SNAP_GUARD:
        q = nearest
    return max(0, math.ceil(q) - 2)


def certificate_tol(f: Polynomial, g: Polynomial, rtol: float = DEFAULT_RTOL) -> float:
    return rtol * max(1.0, f.scale(), g.scale())


def lower_band(f: Polynomial, s: int) -> np.ndarray:
    """The ``(s+1) x (s+1)`` block ``R`` of ``coeffs(g f) = b [L | R]``.

    Entry ``(i, j)`` is ``f[n + j - i]`` with ``n = deg f``; for a quadratic this
    is the unit lower triangular matrix with ``a1``, ``a0`` on the subdiagonals.
    """
    n = f.degree
    a = f.coeffs
    R = np.zeros((s + 1, s + 1))
    for i in range(s + 1):
        for j in range(max(0, i - n), i + 1):
            R[i, j] = a[n + j - i]
    return R


def c_of(g: Polynomial, f: Polynomial, s: int) -> np.ndarray:
    b = np.zeros(s + 1)
    b[: len(g.coeffs)] = g.coeffs[: s + 1]
    return b @ lower_band(f, s)


def certify(
    f: Polynomial,
    g: Polynomial,
    provenance: Provenance,
    tol: float | None = None,
    composed: bool = False,
) -> MultiplierCertificate:
    """Bundle ``g`` with its product and c-vector, failing loudly on a negative coefficient."""
    s = g.degree
    if tol is None:
        tol = certificate_tol(f, g)
    product = multiply(g, f)
    if not coeffs_nonneg(product, tol):
        worst = min(product.coeffs)
        raise CertificateFailure(
            f"{provenance.value} multiplier gives coefficient {worst!r} < -{tol!r} in g*f"
        )
    c = tuple(float(x) for x in c_of(g, f, s))
    return MultiplierCertificate(
        f=f,
        g=g,
        s=s,
        c=c,
        product=product,
        provenance=provenance,
        tol=tol,
        composed=composed,
        optimality="unknown" if composed else "proven",
    )


def riggs_coefficients(pq: PolarQuadratic, s: int | None = None) -> list[float]:
    """Riggs coefficients ``b_0..b_s`` via ``b_{s-j} = -a1 b_{s-j+1} - a0 b_{s-j+2}``."""
    if s is None:
        s = optimal_degree(pq.theta)
    s = _check_degree(s)
    a0, a1 = pq.a0, pq.a1
    b = [0.0] * (s + 2)  # b[s+1] = 0 keeps the first step uniform
    b[s] = 1.0
    for j in range(1, s + 1):
        b[s - j] = -b[s - j + 1] * a1 - b[s - j + 2] * a0
    return b[: s + 1]


def riggs_recurrence(pq: PolarQuadratic) -> MultiplierCertificate:
    g = Polynomial(riggs_coefficients(pq))
    return certify(from_polar(pq), g, Provenance.RIGGS_RECURRENCE)


def riggs_determinant(pq: PolarQuadratic) -> MultiplierCertificate:
    """Riggs multiplier as the banded determinant with last column ``x^0..x^s``.

    Laplace expansion along the last column gives the coefficient of ``x^k`` as
    ``(-1)^(k+s)`` times the minor with row ``k`` and the last column removed.
    Each minor is evaluated by LU with partial pivoting.
    """
    s = _check_degree(optimal_degree(pq.theta))
    R = build_framework(pq, s).R
    left = R[:, :s]
    coeffs = []
    for k in range(s + 1):
        if k == s:
            # unit lower-triangular minor; LU would return 1 +- eps
            coeffs.append(1.0)
            continue
        minor = np.delete(left, k, axis=0)
        coeffs.append((-1.0) ** (k + s) * float(np.linalg.det(minor)))
    return certify(from_polar(pq), Polynomial(coeffs), Provenance.RIGGS_DETERMINANT)


def riggs_closed_form(pq: PolarQuadratic) -> MultiplierCertificate:
    s = _check_degree(optimal_degree(pq.theta))
    r, th = pq.r, pq.theta
    j = np.arange(s + 1, dtype=float)
    by_j = r**j * np.sin((j + 1) * th) / math.sin(th)
    by_j[0] = 1.0
    return certify(from_polar(pq), Polynomial(by_j[::-1]), Provenance.RIGGS_CLOSED_FORM)


def meissner(pq: PolarQuadratic) -> MultiplierCertificate:
    s = _check_degree(optimal_degree(pq.theta))
    r, th = pq.r, pq.theta
    i = np.arange(s + 1, dtype=float)
    coeffs = r ** (2 - i) * np.sin((i + 1) * th) / math.sin(th)
    return certify(from_polar(pq), Polynomial(coeffs), Provenance.MEISSNER)


def meissner_monic(pq: PolarQuadratic) -> MultiplierCertificate:
    s = _check_degree(optimal_degree(pq.theta))
    r, th = pq.r, pq.theta
    i = np.arange(s + 1, dtype=float)
    coeffs = r ** (s - i) * np.sin((i + 1) * th) / math.sin((s + 1) * th)
    coeffs[s] = 1.0
    return certify(from_polar(pq), Polynomial(coeffs), Provenance.MEISSNER_MONIC)


METHODS = {
    "riggs": riggs_recurrence,
    "riggs-det": riggs_determinant,
    "riggs-closed": riggs_closed_form,
    "meissner": meissner,
    "meissner-monic": meissner_monic,
}


@dataclass
class VerificationReport:
    checks: dict[str, bool] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def check(cert: MultiplierCertificate) -> VerificationReport:
    """Recompute ``g f`` and ``c`` from scratch and test each certificate invariant."""
    rep = VerificationReport()
    tol = cert.tol
    rep.checks["tol"] = math.isfinite(tol) and tol >= 0
    rep.checks["degree"] = cert.g.degree == cert.s and len(cert.c) == cert.s + 1
    if cert.provenance in MONIC_PROVENANCES:
        rep.checks["monic"] = cert.g.is_monic
    product = multiply(cert.g, cert.f)
    same_len = len(product.coeffs) == len(cert.product.coeffs)
    rep.checks["product"] = same_len and bool(
        np.all(np.abs(product.array() - cert.product.array()) <= tol)
    )
    rep.checks["nonneg"] = coeffs_nonneg(product, tol)
    if rep.checks["degree"]:
        c = c_of(cert.g, cert.f, cert.s)
        rep.checks["c_vector"] = bool(np.all(np.abs(c - np.array(cert.c)) <= tol))
    else:
        rep.checks["c_vector"] = False
    return rep


def verify(cert: MultiplierCertificate) -> bool:
    return bool(check(cert))
