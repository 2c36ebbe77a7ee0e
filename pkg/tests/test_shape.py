import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from trimedian.cevian import IDENTITY, EtaPair, apply, compose, from_eta
from trimedian.errors import PoleAtRho, TripleCollision
from trimedian.literals import parse_triangle
from trimedian.median import MedianLabel, median_eta
from trimedian.cevian import PQPair, eta_from_pq
from trimedian.scalar import I, OMEGA, OMEGA2, ONE, RHO, ZERO, Cyc12
from trimedian.shape import (
    BCLIFT_NAMES,
    ExtOp,
    FourierTriple,
    ProjPoint,
    bclift_suite,
    ceva,
    dr_similar,
    ext_apply,
    ext_compose,
    fourier,
    hajja,
    inverse_fourier,
    reduced_action,
    rv_similar,
    s_from_xi,
    shape,
    shape_cubed,
    xi,
)
from trimedian.triangle import Triangle, j_apply, swap_last

UNIT = Triangle(0, 1, I)
EQUILATERAL = Triangle(ONE, OMEGA, OMEGA2)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=15)
gaussian = st.builds(lambda a, b: Cyc12(a, 0, 0, b), rationals, rationals)
exact_triangles = st.builds(Triangle, gaussian, gaussian, gaussian)


def nondegenerate(d):
    f = fourier(d)
    return bool(f.psi1) or bool(f.psi2)


class TestFourier:
    def test_examples(self):
        assert fourier(EQUILATERAL) == FourierTriple(0, 1, 0)
        assert fourier(Triangle(ONE, OMEGA2, OMEGA)) == FourierTriple(0, 0, 1)
        f = fourier(Triangle(0, I, -I))
        assert f == FourierTriple(0, I * (OMEGA2 - OMEGA) / 3, I * (OMEGA - OMEGA2) / 3)
        assert complex(f.psi1) == pytest.approx(3**0.5 / 3)

    def test_numpy_fft_oracle(self):
        # psi1 = fft[1]/3 and psi2 = fft[2]/3 with numpy's e^{-2 pi i jk/3} kernel
        rng = np.random.default_rng(5)
        for _ in range(100):
            vec = rng.normal(size=3) + 1j * rng.normal(size=3)
            spectrum = np.fft.fft(vec) / 3
            f = fourier(Triangle(*vec))
            assert np.allclose([f.psi0, f.psi1, f.psi2], spectrum, atol=1e-12)

    def test_inverse_examples(self):
        assert inverse_fourier(FourierTriple(0, 1, 0)) == EQUILATERAL
        g = Cyc12.parse("2 - i")
        assert inverse_fourier(FourierTriple(g, 0, 0)) == Triangle(g, g, g)

    def test_roundtrip_figure1(self):
        d = parse_triangle("(0, 1, (7+8i)/10)")
        assert inverse_fourier(fourier(d)) == d

    @settings(max_examples=100, deadline=None)
    @given(exact_triangles)
    def test_roundtrip(self, d):
        assert inverse_fourier(fourier(d)) == d


class TestShape:
    def test_examples(self):
        assert shape(EQUILATERAL).is_zero()
        assert shape(Triangle(ONE, OMEGA2, OMEGA)).is_infinity()
        assert str(shape(Triangle(ONE, OMEGA2, OMEGA))) == "inf"
        with pytest.raises(TripleCollision):
            shape(Triangle(1, 1, 1))

    def test_multiplier_law_example(self):
        op = from_eta(EtaPair(2, 3))
        assert shape(apply(op, UNIT)) == shape(UNIT).scale(Fraction(2, 3))

    @settings(max_examples=100, deadline=None)
    @given(exact_triangles, gaussian, gaussian, gaussian)
    def test_multiplier_law(self, d, a, b, nu):
        assume(nondegenerate(d))
        out = apply(from_eta(EtaPair(a, b)), d)
        assume(nondegenerate(out))
        f = fourier(d)
        assert shape(out) == ProjPoint(a * f.psi2, b * f.psi1)
        # translation does not change the shape
        assert shape(d.map(lambda v: v + nu)) == shape(d)

    @settings(max_examples=100, deadline=None)
    @given(exact_triangles)
    def test_rotation_multiplies_by_omega(self, d):
        assume(nondegenerate(d))
        assert shape(j_apply(d)) == shape(d).scale(OMEGA)
        assert shape_cubed(d) == shape_cubed(j_apply(d)) == shape_cubed(j_apply(d, 2))

    def test_cubed_examples(self):
        assert shape_cubed(EQUILATERAL).is_zero()
        assert shape_cubed(UNIT) == shape_cubed(j_apply(UNIT))


class TestProjPoint:
    def test_zero_zero_rejected(self):
        with pytest.raises(TripleCollision):
            ProjPoint(0, 0)

    def test_cross_multiplication(self):
        assert ProjPoint(2, 4) == ProjPoint(1, 2)
        assert ProjPoint(1, 0) == ProjPoint(5, 0)
        assert ProjPoint(0, 3) != ProjPoint(1, 0)
        assert ProjPoint(1 + 0j, 1e-15 + 0j).equals(ProjPoint(1, 0))
        assert ProjPoint(2, 1).value() == 2 and ProjPoint(1, 0).value() is None


class TestSimilarity:
    def test_dr_examples(self):
        assert dr_similar(UNIT, j_apply(UNIT))
        lam, nu = Cyc12.parse("2 - 3*i"), Cyc12.parse("5 + i")
        assert dr_similar(UNIT, UNIT.map(lambda v: lam * v + nu))
        assert not dr_similar(UNIT, Triangle(0, I, 1))

    def test_rv_examples(self):
        assert rv_similar(UNIT, Triangle(0, I, 1))
        assert rv_similar(EQUILATERAL, Triangle(ONE, OMEGA2, OMEGA))
        s = Cyc12(2)
        assert rv_similar(ext_apply(ceva(s), UNIT), apply(hajja(s), UNIT))

    @settings(max_examples=50, deadline=None)
    @given(exact_triangles)
    def test_swap_is_reverse(self, d):
        assume(nondegenerate(d))
        assert rv_similar(d, swap_last(d))


class TestHajja:
    def test_examples(self):
        assert hajja(0) == from_eta(EtaPair(OMEGA, OMEGA2))
        assert hajja(0).coeffs == (ZERO, ZERO, ONE)
        assert hajja(Fraction(1, 2)).coeffs == (Cyc12(Fraction(1, 3)), Cyc12(Fraction(-1, 6)), Cyc12(Fraction(5, 6)))

    def test_matches_median_chain(self):
        rng = random.Random(8)
        for _ in range(30):
            s = Cyc12(Fraction(rng.randint(-20, 20), rng.randint(1, 7)))
            e = median_eta(MedianLabel.parse("00/12"), eta_from_pq(PQPair(0, 1 - s)))
            assert from_eta(e) == hajja(s)


class TestCeva:
    def test_fourier_action(self):
        s = Cyc12(2)
        f, g = fourier(UNIT), fourier(ext_apply(ceva(s), UNIT))
        assert g.psi1 == (s + OMEGA) * f.psi2
        assert g.psi2 == (s + OMEGA2) * f.psi1

    def test_square_is_scalar(self):
        s = Cyc12(2)
        sq = ext_compose(ceva(s), ceva(s))
        assert not sq.pre_swap
        k = s * s - s + 1
        assert sq.circ == from_eta(EtaPair(k, k))

    def test_hajja_square(self):
        s = Cyc12(3)
        lhs = compose(hajja(s), hajja(s))
        rhs = ext_compose(from_eta(EtaPair(-1, -1)), ext_compose(ceva(1 - s), ceva(s)))
        assert ExtOp(False, lhs) == rhs

    @settings(max_examples=50, deadline=None)
    @given(gaussian, exact_triangles)
    def test_ext_compose_matches_application(self, s, d):
        a, b = ceva(s), ExtOp(True, hajja(s + 1))
        assert ext_apply(ext_compose(a, b), d) == ext_apply(a, ext_apply(b, d))

    def test_reduced_action(self):
        pair = (Cyc12(2), Cyc12(3))
        assert reduced_action(IDENTITY, pair) == pair
        s = Cyc12(5)
        assert reduced_action(ceva(s), pair) == ((s + OMEGA2) * 3, (s + OMEGA) * 2)


class TestXi:
    def test_examples(self):
        s = Cyc12(2)
        assert xi(s) * xi(1 - s) == ONE
        assert xi(RHO.inverse()) == ZERO
        assert xi(0) == OMEGA2
        with pytest.raises(PoleAtRho):
            xi(RHO)

    @settings(max_examples=100, deadline=None)
    @given(gaussian)
    def test_inverse(self, s):
        assume(s != RHO and s != RHO.inverse())
        assert s_from_xi(xi(s)) == s
        assert xi(s) * xi(1 - s) == ONE

    def test_hajja_shape_multiplier(self):
        s = Cyc12(Fraction(3, 7))
        assert shape(apply(hajja(s), UNIT)) == shape(UNIT).scale(xi(s))


class TestSuite:
    def test_prop_examples(self):
        # (ii) at s = 2: C o C = 3 id; (i) at s = 0: H o H = -C_1 o C_0
        sq = ext_compose(ceva(2), ceva(2))
        assert sq.circ == from_eta(EtaPair(3, 3))
        lhs = compose(hajja(0), hajja(0))
        rhs = ext_compose(ceva(1), ceva(0))
        assert not rhs.pre_swap
        pair = (Cyc12(1), Cyc12(1))
        assert reduced_action(lhs, pair) == tuple(-v for v in reduced_action(rhs, pair))

    def test_suite_small(self):
        report = bclift_suite(seed=3, count=10)
        assert set(report) == set(BCLIFT_NAMES)
        assert all(entry["passed"] for entry in report.values())
