import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lazforge import (
    Phase,
    PreconditionError,
    SequenceSet,
    UnimodSequence,
    Zone,
    af_grid,
    af_row,
    aperiodic_af,
    delta_k,
    legendre_shifts,
    msequence_shifts,
    periodic_af,
    quad_lpnf,
    structural_af,
    theta_max,
)


def random_unimodular(length, seed):
    rng = np.random.default_rng(seed)
    return UnimodSequence.from_angles(2 * np.pi * rng.random(length))


def naive_periodic(a, b, tau, v):
    n = a.length
    av, bv = a.values, b.values
    return sum(
        av[t] * np.conj(bv[(t + tau) % n]) * cmath.exp(2j * cmath.pi * v * t / n)
        for t in range(n)
    )


def naive_aperiodic(a, b, tau, v):
    n = a.length
    if abs(tau) >= n:
        return 0j
    av, bv = a.values, b.values
    ts = range(0, n - tau) if tau >= 0 else range(-tau, n)
    return sum(
        av[t] * np.conj(bv[t + tau]) * cmath.exp(2j * cmath.pi * v * t / n)
        for t in ts
    )


class TestDeltaK:
    def test_values(self):
        assert delta_k(0, 5) == 5
        assert delta_k(10, 5) == 5
        assert delta_k(3, 5) == 0
        assert delta_k(-5, 5) == 5

    def test_bad_modulus(self):
        with pytest.raises(PreconditionError):
            delta_k(0, 0)


class TestPointEvaluation:
    def test_main_lobe(self):
        a = random_unimodular(13, 0)
        assert periodic_af(a, a, 0, 0) == pytest.approx(13)
        assert aperiodic_af(a, a, 0, 0) == pytest.approx(13)

    def test_all_ones_geometric_sum(self):
        a = UnimodSequence(tuple(Phase.one() for _ in range(8)))
        for v in range(1, 8):
            assert abs(periodic_af(a, a, 3, v)) == pytest.approx(0, abs=1e-12)
        assert periodic_af(a, a, 3, 8) == pytest.approx(8)

    def test_aperiodic_boundary_single_term(self):
        a, b = random_unimodular(9, 1), random_unimodular(9, 2)
        want = a.values[0] * np.conj(b.values[8])
        assert aperiodic_af(a, b, 8, 0) == pytest.approx(want)

    def test_aperiodic_zero_outside_support(self):
        a = random_unimodular(9, 3)
        assert aperiodic_af(a, a, 9, 0) == 0j
        assert aperiodic_af(a, a, -9, 4) == 0j

    def test_matches_naive_sums(self):
        a, b = random_unimodular(11, 4), random_unimodular(11, 5)
        for tau in (-10, -3, 0, 2, 7):
            for v in (-5, 0, 1, 9):
                assert periodic_af(a, b, tau, v) == pytest.approx(
                    naive_periodic(a, b, tau, v)
                )
                assert aperiodic_af(a, b, tau, v) == pytest.approx(
                    naive_aperiodic(a, b, tau, v)
                )

    def test_length_mismatch(self):
        with pytest.raises(PreconditionError):
            periodic_af(random_unimodular(4, 0), random_unimodular(5, 0), 0, 0)

    @given(st.integers(2, 16), st.integers(0, 10**6))
    @settings(max_examples=25)
    def test_magnitude_bounded_by_length(self, n, seed):
        rng = np.random.default_rng(seed)
        a = UnimodSequence.from_angles(2 * np.pi * rng.random(n))
        b = UnimodSequence.from_angles(2 * np.pi * rng.random(n))
        tau = int(rng.integers(-n, n + 1))
        v = int(rng.integers(-2 * n, 2 * n + 1))
        assert abs(periodic_af(a, b, tau, v)) <= n + 1e-9
        assert abs(aperiodic_af(a, b, tau, v)) <= n + 1e-9

    @given(st.integers(2, 12), st.integers(0, 10**6))
    @settings(max_examples=25)
    def test_conjugate_symmetry(self, n, seed):
        rng = np.random.default_rng(seed)
        a = UnimodSequence.from_angles(2 * np.pi * rng.random(n))
        b = UnimodSequence.from_angles(2 * np.pi * rng.random(n))
        tau = int(rng.integers(-n + 1, n))
        v = int(rng.integers(-n, n))
        lhs = abs(periodic_af(a, b, tau, v))
        rhs = abs(periodic_af(b, a, -tau, -v))
        assert lhs == pytest.approx(rhs, abs=1e-9)


class TestAfRow:
    @pytest.mark.parametrize("length", [7, 21, 49, 77])
    @pytest.mark.parametrize("kind", ["periodic", "aperiodic"])
    def test_matches_pointwise(self, length, kind):
        a = random_unimodular(length, length)
        b = random_unimodular(length, length + 1)
        direct = periodic_af if kind == "periodic" else aperiodic_af
        for tau in (0, 1, length // 2, -1):
            row = af_row(a, b, tau, kind)
            for v in (0, 1, length - 1, length // 3):
                assert row[v] == pytest.approx(direct(a, b, tau, v), abs=1e-9 * length)

    def test_tau0_periodic_row_is_transform_of_product(self):
        a, b = random_unimodular(12, 7), random_unimodular(12, 8)
        row = af_row(a, b, 0, "periodic")
        want = 12 * np.fft.ifft(a.values * np.conj(b.values))
        assert np.allclose(row, want, atol=1e-12)

    def test_all_ones_row(self):
        a = UnimodSequence(tuple(Phase.one() for _ in range(6)))
        row = af_row(a, a, 0, "periodic")
        assert np.allclose(row, [6, 0, 0, 0, 0, 0], atol=1e-12)

    def test_grid_matches_definition(self, set_7_7):
        g = af_grid(set_7_7[0], set_7_7[2], Zone(3, 4), "aperiodic", source=(0, 2))
        for r, tau in enumerate(g.delays):
            for c, v in enumerate(g.dopplers):
                want = aperiodic_af(set_7_7[0], set_7_7[2], tau, v)
                assert g.values[r, c] == pytest.approx(want, abs=1e-9 * 49)


class TestThetaMax:
    def test_all_ones_singleton(self):
        s = SequenceSet((UnimodSequence(tuple(Phase.one() for _ in range(5))),))
        rep = theta_max(s, Zone(1, 2), "periodic")
        assert rep.theta_a == pytest.approx(0, abs=1e-12)
        assert rep.theta_c == 0.0
        assert rep.theta_max == pytest.approx(0, abs=1e-12)

    def test_auto_doppler_cut_is_flat_zero(self, set_7_7):
        # on the tau = 0 cut every nonzero Doppler vanishes when 7 does not
        # divide v
        for i in range(7):
            for v in range(-48, 49):
                if v % 7:
                    assert abs(periodic_af(set_7_7[i], set_7_7[i], 0, v)) < 1e-9

    def test_zone_max_is_k(self, set_7_7):
        rep = theta_max(s=set_7_7, zone=Zone(7, 7), kind="periodic")
        assert rep.theta_max == pytest.approx(7, abs=1e-6)
        w = rep.witness
        got = periodic_af(set_7_7[w.i], set_7_7[w.j], w.tau, w.v)
        assert abs(got) == pytest.approx(w.magnitude, abs=1e-12)

    def test_threads_do_not_change_result(self, set_7_11):
        one = theta_max(set_7_11, Zone(7, 5), "aperiodic", threads=1)
        four = theta_max(set_7_11, Zone(7, 5), "aperiodic", threads=4)
        assert one == four

    def test_zone_must_fit(self, set_7_7):
        with pytest.raises(PreconditionError):
            theta_max(set_7_7, Zone(50, 5), "periodic")


class TestStructuralOracle:
    def test_matches_direct_on_7_7_zone(self, set_7_7):
        f = quad_lpnf(7, 1, 0, 7)
        h = legendre_shifts(7)
        for i, j in ((0, 0), (0, 1), (3, 5)):
            for tau in range(-6, 7):
                for v in range(-6, 7):
                    for kind, direct in (
                        ("periodic", periodic_af),
                        ("aperiodic", aperiodic_af),
                    ):
                        want = direct(set_7_7[i], set_7_7[j], tau, v)
                        got = structural_af(f, h, i, j, tau, v, kind)
                        assert got == pytest.approx(want, abs=1e-9 * 49), (
                            i, j, tau, v, kind,
                        )

    def test_matches_direct_on_7_11_sample(self, set_7_11):
        f = quad_lpnf(7, 1, 0, 11)
        h = msequence_shifts(3)
        rng = np.random.default_rng(42)
        for _ in range(120):
            i, j = (int(x) for x in rng.integers(0, 7, 2))
            tau = int(rng.integers(-76, 77))
            v = int(rng.integers(-80, 81))
            kind = "periodic" if rng.random() < 0.5 else "aperiodic"
            direct = periodic_af if kind == "periodic" else aperiodic_af
            want = direct(set_7_11[i], set_7_11[j], tau, v)
            got = structural_af(f, h, i, j, tau, v, kind)
            assert got == pytest.approx(want, abs=1e-9 * 77), (i, j, tau, v, kind)

    def test_main_lobe(self):
        f = quad_lpnf(7, 1, 0, 7)
        h = legendre_shifts(7)
        assert structural_af(f, h, 2, 2, 0, 0, "periodic") == pytest.approx(49)

    def test_aligned_doppler_reduces_to_modulated_row_sum(self, set_7_7):
        # tau2 = 0 and K | v: the AF collapses to K times the companion
        # matrix's modulated inner product
        f = quad_lpnf(7, 1, 0, 7)
        h = legendre_shifts(7)
        hm = h.matrix
        for v1 in range(7):
            want = 7 * np.sum(
                hm[1] * np.conj(hm[4]) * np.exp(2j * np.pi * np.arange(7) * v1 / 7)
            )
            got = structural_af(f, h, 1, 4, 0, 7 * v1, "periodic")
            assert got == pytest.approx(want, abs=1e-9 * 49)

    def test_aperiodic_triangle_bound(self, set_7_7):
        for i, j in ((0, 0), (2, 6)):
            for tau in range(-6, 7):
                for v in range(-6, 7):
                    ap = abs(aperiodic_af(set_7_7[i], set_7_7[j], tau, v))
                    per = abs(periodic_af(set_7_7[i], set_7_7[j], tau, v))
                    assert ap <= per + abs(tau) + 1e-9
