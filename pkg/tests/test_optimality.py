import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from poincare import NotRefutable, PolarQuadratic, SearchExhausted, optimal_degree
from poincare.optimality import (
    RefutationMethod,
    cone_feasible,
    feasibility_table,
    minimal_degree_search,
    refute_degree,
)
from poincare.tmatrix import compute_T

from _sampling import random_quadratics


def _lp_feasible(rows):
    """Brute-force oracle: grid over the simplex for 2-3 rows, exact pairs otherwise."""
    rows = np.asarray(rows, dtype=float)
    n = len(rows)
    # cone meets the closed quadrant iff some single row or a pair does (planar Caratheodory)
    for i in range(n):
        if np.all(rows[i] >= -1e-12 * np.max(np.abs(rows[i]))):
            return True
    for i in range(n):
        for j in range(i + 1, n):
            u, v = rows[i], rows[j]
            # find lambda in [0,1] with (1-l)u + l v >= 0 componentwise
            lo, hi = 0.0, 1.0
            for d in range(2):
                a, b = u[d], v[d] - u[d]
                # a + l b >= 0
                if b > 0:
                    lo = max(lo, -a / b)
                elif b < 0:
                    hi = min(hi, -a / b)
                elif a < 0:
                    lo, hi = 1.0, 0.0
            if lo <= hi + 1e-12:
                return True
    return False


class TestRefute:
    def test_hept_degree_one(self):
        w = refute_degree(PolarQuadratic(1.0, 2 * math.pi / 7), 1)
        assert w.method is RefutationMethod.SIGN_ARGUMENT and not w.vacuous
        assert np.allclose(w.negative_column, [-1.2469796037174670611, -0.55495813208737119142], atol=1e-14)
        assert all(x < 0 for x in w.negative_column)

    def test_all_lower_degrees(self):
        for pq in random_quadratics(200, seed=11, max_s=40):
            s = optimal_degree(pq.theta)
            for t in range(s):
                refute_degree(pq, t)

    def test_not_refutable_at_s(self):
        for pq in random_quadratics(100, seed=12, max_s=40):
            s = optimal_degree(pq.theta)
            if s == 0:
                continue
            with pytest.raises(NotRefutable):
                refute_degree(pq, s)

    def test_vacuous(self):
        w = refute_degree(PolarQuadratic(2.0, 2.5), 0)
        assert w.vacuous

    def test_exact_angle_not_refutable(self):
        # theta = pi/4: T_{21} = 0 exactly, so degree 2 stays open
        with pytest.raises(NotRefutable):
            refute_degree(PolarQuadratic(math.sqrt(2), math.pi / 4), 2)


class TestCone:
    @pytest.mark.parametrize(
        "rows, expected",
        [
            ([[1.0, 0.0]], True),
            ([[-1.0, -1.0]], False),
            ([[0.0, 0.0]], True),
            ([[-1.0, 1.0], [1.0, -1.0]], True),  # a line through the origin
            ([[-1.0, 2.0], [2.0, -1.0]], True),
            ([[-2.0, 1.0], [1.0, -2.0]], False),
            ([[-1.0, -0.5], [-1.0, -2.0]], False),
            ([[-1.0, 1e-14]], False),
            ([[-1.0, 0.5], [0.5, -1.0], [-1.0, -1.0]], False),
        ],
    )
    def test_examples(self, rows, expected):
        assert cone_feasible(np.array(rows)) is expected

    @given(st.lists(st.tuples(st.floats(-10, 10), st.floats(-10, 10)), min_size=1, max_size=6))
    def test_matches_pairwise_oracle(self, rows):
        arr = np.array(rows)
        # skip configurations within snapping distance of the decision boundary
        norms = np.max(np.abs(arr), axis=1)
        if np.any((norms > 0) & (norms < 1e-6)):
            return
        unit = arr / np.where(norms > 0, norms, 1)[:, None]
        if np.any((np.abs(unit) > 0) & (np.abs(unit) < 1e-6)):
            return
        assert cone_feasible(arr) == _lp_feasible(arr)

    @given(st.lists(st.tuples(st.floats(-10, 10), st.floats(-10, 10)), min_size=1, max_size=6), st.floats(0.01, 100))
    def test_scale_invariant(self, rows, lam):
        arr = np.array(rows)
        assert cone_feasible(arr) == cone_feasible(lam * arr)

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            cone_feasible(np.zeros((0, 2)))


class TestSearch:
    @pytest.mark.parametrize(
        "theta, s",
        [(2 * math.pi / 7, 2), (math.pi / 4, 2), (3 * math.pi / 5, 0), (math.pi / 6 - 0.01, 5), (0.3, 9)],
    )
    def test_examples(self, theta, s):
        assert minimal_degree_search(PolarQuadratic(1.0, theta), 20) == s

    def test_matches_formula(self):
        for pq in random_quadratics(300, seed=13, r_range=(0.5, 2.0), max_s=40):
            assert minimal_degree_search(pq, 45) == optimal_degree(pq.theta)

    def test_exhausted(self):
        with pytest.raises(SearchExhausted):
            minimal_degree_search(PolarQuadratic(1.0, 0.1), 5)

    def test_monotone_table(self):
        for pq in random_quadratics(50, seed=14, max_s=20):
            flags = [ok for _, ok in feasibility_table(pq, 25)]
            first = flags.index(True)
            assert first == optimal_degree(pq.theta)
            assert all(flags[first:])

    def test_prefix_equals_direct(self):
        pq = PolarQuadratic(1.3, 0.4)
        full = compute_T(pq, 12).entries
        for t in range(13):
            assert np.allclose(full[: t + 1], compute_T(pq, t).entries, rtol=1e-13, atol=0)
