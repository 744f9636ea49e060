import math
import random

import pytest

from conftest import assert_multiset_close, digon, directed_cycle
from sidispec.charpoly import charpoly_exact
from sidispec.constructions import FamilySpec, assign_signs_for_class, family_theorem41
from sidispec.errors import OrderMismatch
from sidispec.generate import (
    random_bipartite_digraph,
    random_sidigraph,
    random_strongly_connected_digraph,
)
from sidispec.graphs import Sidigraph, is_bipartite, underlying_digraph
from sidispec.polynomials import IntPolynomial
from sidispec.spectra import (
    classify_spectrum,
    cospectral,
    energy_from_spectrum,
    equienergetic,
    graph_energy,
    graph_spectrum,
    quasi_cospectral_search,
    roots,
)

P = IntPolynomial.from_leading


class TestRoots:
    def test_integral_double_root(self):
        sp = roots(P([1, 0, -3, 2, 0]))
        assert_multiset_close(sp.roots, [-2, 0, 1, 1], tol=1e-8)
        assert dict(sp.clusters) == {(-2 + 0j): 1, 0j: 1, (1 + 0j): 2}

    def test_fourth_roots_of_unity(self):
        sp = roots(P([1, 0, 0, 0, -1]))
        assert_multiset_close(sp.roots, [1, -1, 1j, -1j], tol=1e-10)

    def test_imaginary_pair(self):
        assert_multiset_close(roots(P([1, 0, 1])).roots, [1j, -1j], tol=1e-12)

    def test_sorted_and_deterministic(self):
        sp1 = roots(P([1, 0, 0, 1, 0, 0, 1]))
        sp2 = roots(P([1, 0, 0, 1, 0, 0, 1]))
        assert sp1.roots == sp2.roots
        assert list(sp1.roots) == sorted(sp1.roots, key=lambda z: (z.real, z.imag))

    def test_degree_17_residuals(self):
        for mid in (3, 1):
            coeffs = [1] + [0] * 5 + [mid] + [0] * 5 + [1] + [0] * 5
            sp = roots(P(coeffs))
            assert len(sp.roots) == 17
            assert sp.max_residual <= 1e-10
            assert sum(1 for z in sp.roots if z == 0) == 5

    def test_conjugate_symmetry(self):
        rng = random.Random(20)
        for _ in range(25):
            s = random_sidigraph(rng, rng.randrange(2, 8), 0.5)
            sp = graph_spectrum(s)
            assert_multiset_close(
                sp.roots, [z.conjugate() for z in sp.roots], tol=1e-7
            )

    def test_companion_cross_check(self):
        rng = random.Random(21)
        for _ in range(20):
            s = random_sidigraph(rng, rng.randrange(2, 8), 0.5)
            p = charpoly_exact(s)
            assert_multiset_close(
                roots(p).roots, roots(p, method="companion").roots, tol=1e-7
            )

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            roots(P([5]))
        with pytest.raises(ValueError):
            roots(P([1, 0, -1]), method="newton")


class TestEnergy:
    def test_integral_spectrum(self):
        assert energy_from_spectrum(roots(P([1, 0, -3, 2, 0]))) == pytest.approx(4.0, abs=1e-12)

    def test_exact_two(self):
        e = energy_from_spectrum(roots(P([1, 0, 1, 0, -1, 0, -1])))
        assert abs(e - 2.0) <= 1e-9

    def test_paper_rounded_values(self):
        e1 = energy_from_spectrum(roots(P([1, 0, 2, 0, 0, 0, 1])))
        assert e1 == pytest.approx(2.4916, abs=5e-4)
        e2 = energy_from_spectrum(roots(P([1, 0, 1, 0, 0, 0, 1])))
        assert e2 == pytest.approx(2.9104, abs=5e-4)

    def test_arcless_energy_zero(self):
        assert graph_energy(Sidigraph(4)) == 0.0

    def test_energy_nonnegative(self):
        rng = random.Random(22)
        for _ in range(20):
            s = random_sidigraph(rng, rng.randrange(1, 7), 0.5)
            assert graph_energy(s) >= 0.0


class TestClassifySpectrum:
    def test_integral(self):
        cls = classify_spectrum(roots(P([1, 0, -3, 2, 0])))
        assert cls.integral and cls.real and cls.gaussian

    def test_real_not_integral(self):
        cls = classify_spectrum(roots(P([1, 0, -3, 0, 2])))
        assert cls.real and not cls.integral and not cls.gaussian
        assert_multiset_close(
            roots(P([1, 0, -3, 0, 2])).roots,
            [-math.sqrt(2), -1, 1, math.sqrt(2)],
            tol=1e-8,
        )

    def test_gaussian_not_real(self):
        cls = classify_spectrum(roots(P([1, 0, 0, 0, -1])))
        assert cls.gaussian and not cls.real and not cls.integral

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            classify_spectrum(roots(P([1, 0, 1])), tol=0)


class TestCospectral:
    def test_fixture_pair(self, fixtures):
        assert cospectral(fixtures["thm211_s1"], fixtures["thm211_s2"])

    def test_family_pair_not_cospectral(self):
        s1, s2 = family_theorem41(FamilySpec("theorem41_even", 6, 3))
        assert not cospectral(s1, s2)

    def test_self(self, fixtures):
        s = fixtures["thm213_s2"]
        assert cospectral(s, s)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            cospectral(Sidigraph(2), Sidigraph(3))


class TestEquienergetic:
    def test_even_pair(self):
        s1, s2 = family_theorem41(FamilySpec("theorem41_even", 6, 3))
        assert equienergetic(s1, s2)

    def test_self_is_not(self, fixtures):
        s = fixtures["thm211_s1"]
        assert not equienergetic(s, s)

    def test_odd_pair(self):
        s3, s4 = family_theorem41(FamilySpec("theorem41_odd", 7, 3))
        assert equienergetic(s3, s4)


class TestQuasiCospectralSearch:
    def test_identical_digraphs_trivial(self):
        d = Sidigraph(3, [(0, 1, 1), (1, 2, 1)])
        m = quasi_cospectral_search(d, d)
        assert m is not None and not m.strict
        assert m.signing1.n == m.signing2.n == 3
        assert charpoly_exact(m.signing1) == charpoly_exact(m.signing2) == m.charpoly

    def test_strong_witness_on_cospectral_underlyings(self, fixtures):
        d1 = underlying_digraph(fixtures["thm211_s1"])
        d2 = underlying_digraph(fixtures["thm211_s2"])
        m = quasi_cospectral_search(d1, d2)
        assert m is not None and m.strong and not m.strict
        from sidispec.graphs import classify

        assert not classify(m.signing1).is_cycle_balanced
        assert not classify(m.signing2).is_cycle_balanced
        assert charpoly_exact(m.signing1) == charpoly_exact(m.signing2)

    def test_no_match_possible(self):
        m = quasi_cospectral_search(digon(1, 1), Sidigraph(2, [(0, 1, 1)]))
        assert m is None

    def test_rejects_signed_input(self):
        with pytest.raises(ValueError):
            quasi_cospectral_search(digon(-1, 1), digon(1, 1))


class TestSpectralSymmetries:
    def test_bipartite_iff_invariant_for_strongly_connected_digraphs(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randrange(2, 6)
            bip = rng.random() < 0.5 and n % 2 == 0
            d = random_strongly_connected_digraph(rng, n, bipartite=bip)
            p = charpoly_exact(d)
            assert (p == p.reflected()) == is_bipartite(d)

    def test_rotation_between_delta_classes(self):
        # signings of one bipartite digraph in the two classes have spectra
        # related by multiplication by i, and the energy of one equals the
        # sum of |imaginary parts| of the other
        rng = random.Random(24)
        done = 0
        while done < 10:
            d = random_bipartite_digraph(rng, rng.randrange(4, 9), 0.5)
            s1 = assign_signs_for_class(d, "delta1")
            s2 = assign_signs_for_class(d, "delta2")
            if s1 is None or s2 is None:
                continue
            sp1 = graph_spectrum(s1)
            sp2 = graph_spectrum(s2)
            assert_multiset_close(sp1.roots, [1j * z for z in sp2.roots], tol=1e-7)
            e1 = energy_from_spectrum(sp1)
            assert e1 == pytest.approx(
                sum(abs(z.imag) for z in sp2.roots), abs=1e-7
            )
            done += 1
