import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from poincare import NotPositiveError, PolarQuadratic, Polynomial, from_polar, verify
from poincare.composer import aberth, compose_multiplier, factor
from poincare.errors import NonConvergence


def _sorted_roots(z):
    return np.array(sorted(z, key=lambda w: (round(w.real, 6), w.imag)))


class TestAberth:
    @pytest.mark.parametrize(
        "coeffs",
        [[2, -2, 1], [2, 0, -1, 1], [-6, 11, -6, 1], [1, 0, 0, 0, 0, 1], [24, -50, 35, -10, 1]],
    )
    def test_matches_numpy_roots(self, coeffs):
        ours = _sorted_roots(aberth(coeffs))
        ref = _sorted_roots(np.roots(coeffs[::-1]))
        assert np.allclose(ours, ref, atol=1e-9)

    def test_deterministic(self):
        a = aberth([3, -1, 4, 1, -5, 1])
        b = aberth([3, -1, 4, 1, -5, 1])
        assert np.array_equal(a, b)

    def test_constant(self):
        assert aberth([5.0]).size == 0

    def test_nonconvergence_carries_roots(self):
        with pytest.raises(NonConvergence) as info:
            aberth([2, -2, 1], max_iter=1)
        assert info.value.roots is not None


class TestFactor:
    def test_cubic_example(self):
        fac = factor(Polynomial([2, 0, -1, 1]))
        assert len(fac.linear_factors) == 1
        root, m = fac.linear_factors[0]
        assert root == pytest.approx(-1.0, abs=1e-12) and m == 1
        (pq, m), = fac.quadratic_factors
        assert (pq.r, pq.theta) == (pytest.approx(math.sqrt(2)), pytest.approx(math.pi / 4))
        assert fac.residual_error <= 1e-12

    def test_repeated_root(self):
        fac = factor(Polynomial([1, 2, 1]))
        assert fac.linear_factors == ((pytest.approx(-1.0, abs=1e-6), 2),)

    def test_repeated_quadratic(self):
        q = from_polar(PolarQuadratic(1.0, 1.0))
        fac = factor(q * q)
        (pq, m), = fac.quadratic_factors
        assert m == 2 and pq.theta == pytest.approx(1.0, abs=1e-6)

    def test_positive_root_detected(self):
        assert factor(Polynomial([-6, 11, -6, 1])).has_positive_root()

    def test_requires_monic(self):
        with pytest.raises(ValueError):
            factor(Polynomial([1, 2]))

    @settings(max_examples=100)
    @given(
        st.lists(st.floats(-3, 0), max_size=3),
        st.lists(st.tuples(st.floats(0.5, 2), st.floats(0.1, math.pi - 0.1)), min_size=1, max_size=3),
    )
    def test_reassembles(self, lin, quads):
        f = Polynomial([1.0])
        for x in lin:
            f = f * Polynomial([-x, 1.0])
        for r, th in quads:
            f = f * from_polar(PolarQuadratic(r, th))
        try:
            fac = factor(f)
        except NonConvergence:
            # close root pairs can defeat the clustering; the reassembly guard then fires
            return
        assert fac.residual_error <= 1e-7 * fac.scale
        assert np.allclose(fac.expand().coeffs, f.coeffs, atol=1e-7 * fac.scale)


class TestCompose:
    def test_cubic(self):
        cert = compose_multiplier(Polynomial([2, 0, -1, 1]))
        assert np.allclose(cert.g.coeffs, [2, 2, 1], atol=1e-9)
        assert np.allclose(cert.product.coeffs, [4, 4, 0, 0, 1, 1], atol=1e-9)
        assert cert.composed and cert.optimality == "unknown"
        assert verify(cert)

    def test_nonneg_input_gets_one(self):
        cert = compose_multiplier(Polynomial([1, 3, 3, 1]))
        assert cert.g.coeffs == (1.0,)

    def test_two_quadratics(self):
        f = from_polar(PolarQuadratic(1.0, 2 * math.pi / 7)) * from_polar(PolarQuadratic(2.0, 0.5))
        cert = compose_multiplier(f)
        assert cert.s == 2 + 5
        assert verify(cert)

    def test_not_positive(self):
        with pytest.raises(NotPositiveError):
            compose_multiplier(Polynomial([-1, 0, 1]))

    @settings(max_examples=100)
    @given(
        st.lists(st.floats(-3, 0), max_size=2),
        st.lists(st.tuples(st.floats(0.5, 2), st.floats(0.1, math.pi - 0.1)), min_size=1, max_size=3),
    )
    def test_product_nonneg(self, lin, quads):
        f = Polynomial([1.0])
        for x in lin:
            f = f * Polynomial([-x, 1.0])
        for r, th in quads:
            f = f * from_polar(PolarQuadratic(r, th))
        try:
            cert = compose_multiplier(f)
        except NonConvergence:
            return
        assert verify(cert)
        assert min(cert.product.coeffs) >= -cert.tol
