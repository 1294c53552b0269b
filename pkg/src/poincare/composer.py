"""Multipliers for higher-degree positive polynomials by factor-wise composition.

A monic positive ``f`` splits over the reals into linear factors with roots
``<= 0`` and quadratics with non-real roots. Linear factors of that kind and
quadratics with ``theta >= pi/2`` already have non-negative coefficients; the
remaining quadratics each get a Riggs multiplier, and the product of those is
a multiplier for ``f``. Its degree is not claimed to be minimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergence, NotPositiveError
from .multiplier import MultiplierCertificate, Provenance, certify, riggs_coefficients
from .poly import PolarQuadratic, Polynomial, Positivity, classify_positivity, from_polar, multiply

MAX_ITER = 200
STEP_RTOL = 1e-12
REAL_IMAG_TOL = 1e-8
CLUSTER_TOL = 1e-6
RESIDUAL_RTOL = 1e-7
COMPOSE_RTOL = 1e-7


def aberth(coeffs, max_iter: int = MAX_ITER, step_rtol: float = STEP_RTOL) -> np.ndarray:
    """All complex roots of a polynomial given in ascending coefficient order.

    Aberth-Ehrlich simultaneous iteration started on a circle of radius
    ``1 + max|a_k / a_n|`` with a fixed angular offset, so results are
    reproducible. A root is frozen once its step falls below ``step_rtol``
    relative to its modulus or its residual reaches the rounding level.
    """
    a = np.asarray(coeffs, dtype=float)
    n = len(a) - 1
    if n < 1:
        return np.zeros(0, dtype=complex)
    a = a / a[-1]
    desc = a[::-1]
    ddesc = np.polyder(desc)
    absdesc = np.abs(desc)
    radius = 1.0 + float(np.max(np.abs(a[:-1])))
    k = np.arange(n)
    z = radius * np.exp(1j * (2.0 * math.pi * k / n + 0.4)) * (1.0 + 0.01 * np.cos(1.7 * k))
    active = np.ones(n, dtype=bool)
    eps = np.finfo(float).eps
    for _ in range(max_iter):
        pz = np.polyval(desc, z)
        noise = 4.0 * n * eps * np.polyval(absdesc, np.abs(z))
        active &= np.abs(pz) > noise
        if not active.any():
            return z
        dpz = np.polyval(ddesc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        w = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = pz / dpz
            step = newton / (1.0 - newton * w)
        step = np.where(np.isfinite(step), step, 0.0)
        step[~active] = 0.0
        z = z - step
        small = np.abs(step) <= step_rtol * np.maximum(np.abs(z), eps)
        active &= ~small
        if not active.any():
            return z
    raise NonConvergence(f"root finder did not converge in {max_iter} iterations", roots=z)


@dataclass(frozen=True)
class Factorization:
    linear_factors: tuple[tuple[float, int], ...]  # (root, multiplicity)
    quadratic_factors: tuple[tuple[PolarQuadratic, int], ...]
    residual_error: float
    scale: float

    def expand(self) -> Polynomial:
        p = Polynomial([1.0])
        for root, m in self.linear_factors:
            for _ in range(m):
                p = multiply(p, Polynomial([-root, 1.0]))
        for pq, m in self.quadratic_factors:
            for _ in range(m):
                p = multiply(p, from_polar(pq))
        return p

    def has_positive_root(self, rtol: float = REAL_IMAG_TOL) -> bool:
        return any(root > rtol * max(1.0, abs(root)) for root, _ in self.linear_factors)

    def to_dict(self) -> dict:
        return {
            "linear_factors": [{"root": r, "multiplicity": m} for r, m in self.linear_factors],
            "quadratic_factors": [
                {"r": pq.r, "theta": pq.theta, "coeffs": list(from_polar(pq).coeffs), "multiplicity": m}
                for pq, m in self.quadratic_factors
            ],
            "residual_error": self.residual_error,
        }


def _clusters(z: np.ndarray, tol: float) -> list[list[int]]:
    """Single-linkage groups of roots closer than ``tol * max(1, |z|)``."""
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= tol * max(1.0, abs(z[i]), abs(z[j])):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def factor(f: Polynomial) -> Factorization:
    """Split a monic ``f`` into real linear and irreducible quadratic factors.

    Roots closer than ``CLUSTER_TOL`` are merged into one factor with
    multiplicity; a near-real conjugate pair inside that distance is therefore
    read as a repeated real root.
    """
    if f.degree < 1:
        raise DomainError("factor needs degree >= 1")
    if not f.is_monic:
        raise DomainError("factor expects a monic polynomial")
    z = aberth(f.coeffs)
    linear: list[tuple[float, int]] = []
    upper: list[tuple[complex, int]] = []
    lower: list[tuple[complex, int]] = []
    for grp in _clusters(z, CLUSTER_TOL):
        c = complex(np.mean(z[grp]))
        m = len(grp)
        if abs(c.imag) <= REAL_IMAG_TOL * max(1.0, abs(c)):
            linear.append((c.real, m))
        elif c.imag > 0:
            upper.append((c, m))
        else:
            lower.append((c, m))
    quads: list[tuple[PolarQuadratic, int]] = []
    for c, m in upper:
        if not lower:
            raise NonConvergence("unpaired complex root", roots=z)
        j = min(range(len(lower)), key=lambda idx: abs(lower[idx][0] - c.conjugate()))
        partner, m2 = lower.pop(j)
        if m2 != m:
            raise NonConvergence("conjugate root clusters have different sizes", roots=z)
        alpha = 0.5 * (c + partner.conjugate())
        quads.append((PolarQuadratic(abs(alpha), math.atan2(alpha.imag, alpha.real)), m))
    if lower:
        raise NonConvergence("unpaired complex root", roots=z)
    linear.sort()
    quads.sort(key=lambda item: (item[0].theta, item[0].r))
    fac = Factorization(tuple(linear), tuple(quads), 0.0, max(1.0, f.scale()))
    expanded = fac.expand()
    resid = float(np.max(np.abs(expanded.array() - f.array())))
    fac = Factorization(fac.linear_factors, fac.quadratic_factors, resid, fac.scale)
    if resid > RESIDUAL_RTOL * fac.scale:
        raise NonConvergence(f"factor reassembly error {resid:.3g} exceeds tolerance", roots=z)
    return fac


def compose_multiplier(f: Polynomial) -> MultiplierCertificate:
    """Multiplier for a positive monic ``f`` of any degree, as a product of per-factor Riggs multipliers."""
    if not f.is_monic:
        raise DomainError("compose_multiplier expects a monic polynomial")
    if classify_positivity(f) is not Positivity.POSITIVE:
        raise NotPositiveError(f"{f} has a root in (0, inf)")
    g = Polynomial([1.0])
    if min(f.coeffs) < 0.0:
        fac = factor(f)
        for pq, m in fac.quadratic_factors:
            if pq.theta >= math.pi / 2:
                continue
            gq = Polynomial(riggs_coefficients(pq))
            for _ in range(m):
                g = multiply(g, gq)
    tol = COMPOSE_RTOL * max(1.0, f.scale(), g.scale())
    return certify(f, g, Provenance.RIGGS_RECURRENCE, tol=tol, composed=True)
