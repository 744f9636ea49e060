import math
import random

import numpy as np
import pytest

from conftest import assert_multiset_close, digon, directed_cycle
from sidispec.charpoly import charpoly_exact
from sidispec.constructions import (
    FamilySpec,
    _solve_gf2,
    assign_signs_for_class,
    builtin_fixtures,
    cartesian_product,
    family_theorem41,
    power_family,
    search_by_charpoly,
    signed_cycle,
    theorem41_polynomials,
)
from sidispec.errors import (
    FixtureValidationFailure,
    InvalidFamilySpec,
    OrderMismatch,
    SearchBudgetExceeded,
    SizeOverflow,
)
from sidispec.generate import random_strongly_connected_digraph
from sidispec.graphs import (
    Sidigraph,
    adjacency_matrix,
    classify,
    enumerate_cycles,
    is_strongly_connected,
)
from sidispec.polynomials import IntPolynomial
from sidispec.spectra import cospectral, equienergetic, graph_spectrum

P = IntPolynomial.from_leading


class TestSignedCycle:
    def test_examples(self):
        assert signed_cycle(2, 1) == digon(1, 1)
        assert charpoly_exact(signed_cycle(2, 1)) == P([1, 0, -1])
        assert charpoly_exact(signed_cycle(4, -1)) == P([1, 0, 0, 0, 1])
        assert charpoly_exact(signed_cycle(3, 1)) == P([1, 0, 0, -1])

    def test_charpoly_is_zn_minus_sign(self):
        for n in range(2, 10):
            for sign in (1, -1):
                coeffs = [0] * (n + 1)
                coeffs[n] = 1
                coeffs[0] = -sign
                assert charpoly_exact(signed_cycle(n, sign)) == IntPolynomial(coeffs)

    def test_negative_arc_count(self):
        assert sum(1 for *_, s in signed_cycle(5, -1).arcs if s == -1) == 1
        assert signed_cycle(5, 1).is_all_positive()

    def test_validation(self):
        with pytest.raises(ValueError):
            signed_cycle(1, 1)
        with pytest.raises(ValueError):
            signed_cycle(3, 0)


class TestFamilySpec:
    def test_invalid_specs(self):
        with pytest.raises(InvalidFamilySpec):
            FamilySpec("theorem41_even", 5, 3)  # n must be even
        with pytest.raises(InvalidFamilySpec):
            FamilySpec("theorem41_even", 6, 4)  # j must be odd
        with pytest.raises(InvalidFamilySpec):
            FamilySpec("theorem41_odd", 7, 7)  # j <= n-2
        with pytest.raises(InvalidFamilySpec):
            FamilySpec("theorem41_odd", 4, 3)
        with pytest.raises(InvalidFamilySpec):
            FamilySpec("sandwich", 6, 3)
        with pytest.raises(InvalidFamilySpec):
            FamilySpec("power_family", 4, k=0)

    def test_family_rejects_power_kind(self):
        with pytest.raises(InvalidFamilySpec):
            family_theorem41(FamilySpec("power_family", 4, k=2))


class TestTheorem41Families:
    def test_even_example(self):
        spec = FamilySpec("theorem41_even", 6, 3)
        s1, s2 = family_theorem41(spec)
        assert charpoly_exact(s1) == P([1, 0, 0, 1, 0, 0, 1])
        assert charpoly_exact(s2) == P([1, 0, 0, -1, 0, 0, 1])

    def test_odd_coefficient_collision(self):
        spec = FamilySpec("theorem41_odd", 7, 3)
        s3, s4 = family_theorem41(spec)
        assert charpoly_exact(s3) == P([1, 0, 0, 2, 0, 0, 1, 0])
        assert charpoly_exact(s4) == P([1, 0, 0, -2, 0, 0, 1, 0])

    def test_odd_example(self):
        spec = FamilySpec("theorem41_odd", 9, 5)
        s3, s4 = family_theorem41(spec)
        assert charpoly_exact(s3) == P([1, 0, 0, 1, 0, 1, 0, 0, 1, 0])
        assert charpoly_exact(s4) == P([1, 0, 0, -1, 0, -1, 0, 0, 1, 0])

    def test_exact_polynomials_up_to_16(self):
        for n in range(4, 17):
            kind = "theorem41_even" if n % 2 == 0 else "theorem41_odd"
            top = n - 1 if n % 2 == 0 else n - 2
            for j in range(3, top + 1, 2):
                spec = FamilySpec(kind, n, j)
                s_a, s_b = family_theorem41(spec)
                p_a, p_b = theorem41_polynomials(spec)
                assert charpoly_exact(s_a) == p_a, (n, j)
                assert charpoly_exact(s_b) == p_b, (n, j)

    def test_spectral_negation_identity(self):
        for n, j in ((4, 3), (8, 5), (12, 7)):
            p1, p2 = theorem41_polynomials(FamilySpec("theorem41_even", n, j))
            assert p1.reflected() == p2  # phi_1(-z) = phi_2(z), n even
        for n, j in ((5, 3), (9, 5), (11, 7)):
            p3, p4 = theorem41_polynomials(FamilySpec("theorem41_odd", n, j))
            # phi_3(-z) = -phi_4(z), so (-1)^n phi_3(-z) = phi_4(z) for odd n
            assert p3.reflected() == p4

    def test_structural_flags(self):
        for spec in (FamilySpec("theorem41_even", 8, 5), FamilySpec("theorem41_odd", 9, 3)):
            s_a, s_b = family_theorem41(spec)
            for s in (s_a, s_b):
                assert is_strongly_connected(s)
                assert not classify(s).is_cycle_balanced
            assert not cospectral(s_a, s_b)
            assert equienergetic(s_a, s_b, tol=1e-9)


class TestCartesianProduct:
    def test_digon_square_spectrum(self):
        prod = cartesian_product(digon(1, 1), digon(1, 1))
        assert_multiset_close(graph_spectrum(prod).roots, [2, 0, 0, -2], tol=1e-8)

    def test_single_vertex_identity(self):
        s = Sidigraph(3, [(0, 1, -1), (1, 2, 1), (2, 0, 1)])
        assert cartesian_product(s, Sidigraph(1)) == s
        assert cartesian_product(Sidigraph(1), s) == s

    def test_mixed_digon_product_spectrum(self):
        prod = cartesian_product(digon(-1, 1), digon(1, 1))
        assert_multiset_close(
            graph_spectrum(prod).roots,
            [1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j],
            tol=1e-8,
        )

    def test_kronecker_sum_identity(self):
        rng = random.Random(40)
        for _ in range(20):
            n1, n2 = rng.randrange(1, 5), rng.randrange(1, 5)
            from sidispec.generate import random_sidigraph

            a = random_sidigraph(rng, n1, 0.5)
            b = random_sidigraph(rng, n2, 0.5)
            prod = cartesian_product(a, b)
            kron = np.kron(adjacency_matrix(a), np.eye(n2, dtype=np.int64)) + np.kron(
                np.eye(n1, dtype=np.int64), adjacency_matrix(b)
            )
            assert np.array_equal(adjacency_matrix(prod), kron)

    def test_strong_connectivity_preserved(self):
        rng = random.Random(41)
        for _ in range(25):
            n1, n2 = rng.randrange(2, 7), rng.randrange(2, 7)
            if n1 * n2 > 36:
                continue
            a = random_strongly_connected_digraph(rng, n1)
            b = random_strongly_connected_digraph(rng, n2)
            assert is_strongly_connected(cartesian_product(a, b))

    def test_balance_iff_factors_balanced(self):
        rng = random.Random(42)
        from sidispec.generate import random_sidigraph

        checked_unbalanced = 0
        for _ in range(40):
            a = random_sidigraph(rng, rng.randrange(2, 5), 0.6)
            b = random_sidigraph(rng, rng.randrange(2, 5), 0.6)
            if a.n * b.n > 16:
                continue
            prod_balanced = classify(cartesian_product(a, b)).is_cycle_balanced
            factors_balanced = (
                classify(a).is_cycle_balanced and classify(b).is_cycle_balanced
            )
            assert prod_balanced == factors_balanced
            checked_unbalanced += not factors_balanced
        assert checked_unbalanced > 0

    def test_size_overflow(self):
        with pytest.raises(SizeOverflow):
            cartesian_product(Sidigraph(70), Sidigraph(70))


class TestPowerFamily:
    def test_single_count(self, fixtures):
        s1, s2 = fixtures["thm211_s1"], fixtures["thm211_s2"]
        assert power_family(s1, s2, 1) == [s1]

    def test_order_16_cospectral(self, fixtures):
        fam = power_family(fixtures["thm211_s1"], fixtures["thm211_s2"], 2)
        assert [m.n for m in fam] == [16, 16]
        assert charpoly_exact(fam[0]) == charpoly_exact(fam[1])

    def test_gaussian_pair_shares_polynomial(self, fixtures):
        fam = power_family(fixtures["thm213_s2"], fixtures["thm213_s3"], 2)
        polys = {charpoly_exact(m) for m in fam}
        assert len(polys) == 1

    def test_validation(self, fixtures):
        with pytest.raises(OrderMismatch):
            power_family(digon(1, 1), directed_cycle(3), 2)
        with pytest.raises(ValueError):
            power_family(digon(1, 1), digon(1, 1), 0)
        with pytest.raises(SizeOverflow):
            power_family(fixtures["thm211_s1"], fixtures["thm211_s2"], 7)


class TestAssignSigns:
    def test_four_cycle_delta1(self):
        d = directed_cycle(4)
        s = assign_signs_for_class(d, "delta1")
        assert s is not None
        assert sum(1 for *_, sign in s.arcs if sign == -1) % 2 == 1
        assert classify(s).in_delta1

    def test_digon_delta2(self):
        s = assign_signs_for_class(digon(1, 1), "delta2")
        assert s is not None
        assert sum(1 for *_, sign in s.arcs if sign == -1) == 1
        assert classify(s).in_delta2

    def test_disjoint_digons_delta1_all_positive(self):
        d = Sidigraph(4, [(0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, 1)])
        s = assign_signs_for_class(d, "delta1")
        assert s == d  # length-2 cycles must stay positive; zero solution wins

    def test_validation(self):
        with pytest.raises(ValueError):
            assign_signs_for_class(directed_cycle(3), "delta1")  # not bipartite
        with pytest.raises(ValueError):
            assign_signs_for_class(digon(-1, 1), "delta2")  # not all-positive
        with pytest.raises(ValueError):
            assign_signs_for_class(digon(1, 1), "delta3")

    def test_gf2_solver(self):
        # x0 ^ x1 = 1, x1 = 1, x0 = 0 -> solution exists
        assert _solve_gf2([0b11, 0b10, 0b01], [1, 1, 0]) == 0b10
        # x0 = 0, x0 = 1 -> inconsistent
        assert _solve_gf2([0b1, 0b1], [0, 1]) is None
        # free variables default to 0
        assert _solve_gf2([0b11], [0]) == 0

    def test_outputs_always_classify(self):
        from sidispec.generate import random_bipartite_digraph

        rng = random.Random(43)
        hits = 0
        for _ in range(40):
            d = random_bipartite_digraph(rng, rng.randrange(2, 9), 0.5)
            for target, attr in (("delta1", "in_delta1"), ("delta2", "in_delta2")):
                s = assign_signs_for_class(d, target)
                if s is not None:
                    assert getattr(classify(s), attr)
                    hits += 1
        assert hits > 20


class TestSearchByCharpoly:
    def test_exhaustive_n2(self):
        found = search_by_charpoly(2, P([1, 0, 1]))
        assert found == [digon(-1, 1), digon(1, -1)]

    def test_unrealizable_target_is_empty(self):
        assert search_by_charpoly(2, P([1, 0, 5])) == []

    def test_validation(self):
        with pytest.raises(ValueError):
            search_by_charpoly(3, P([1, 0, 1]))  # degree mismatch

    @pytest.mark.slow
    def test_integral_fixture_target(self, fixtures):
        found = search_by_charpoly(
            4,
            P([1, 0, -3, 2, 0]),
            strongly_connected=True,
            non_cycle_balanced=True,
        )
        assert found
        arc_sets = {s.arcs for s in found}
        assert fixtures["thm211_s1"].arcs in arc_sets
        assert fixtures["thm211_s2"].arcs in arc_sets

    def test_randomized_mode_finds_match(self):
        # order 6 forces the randomized path; the all-positive digon pattern
        # z^6 - z^4 is easy to hit
        coeffs = [0] * 7
        coeffs[6] = 1
        coeffs[4] = -1
        found = search_by_charpoly(6, IntPolynomial(coeffs), budget=4000, seed=5)
        assert all(charpoly_exact(s) == IntPolynomial(coeffs) for s in found)

    def test_randomized_mode_budget_exhaustion(self):
        coeffs = [0] * 7
        coeffs[6] = 1
        coeffs[0] = 77  # impossible for +-1 arcs
        with pytest.raises(SearchBudgetExceeded):
            search_by_charpoly(6, IntPolynomial(coeffs), budget=50, seed=5)


class TestBuiltinFixtures:
    def test_full_inventory(self, fixtures):
        assert sorted(fixtures) == [
            "thm211_s1",
            "thm211_s2",
            "thm212_s1",
            "thm212_s2",
            "thm212_s3",
            "thm213_s1",
            "thm213_s2",
            "thm213_s3",
        ]
        for s in fixtures.values():
            assert s.n == 4

    def test_recorded_polynomials(self, fixtures):
        assert charpoly_exact(fixtures["thm211_s2"]) == P([1, 0, -3, 2, 0])
        assert charpoly_exact(fixtures["thm212_s2"]) == P([1, 0, -3, 0, 2])
        assert charpoly_exact(fixtures["thm212_s3"]) == P([1, 0, -3, 0, 2])
        assert charpoly_exact(fixtures["thm213_s2"]) == P([1, 0, 0, 0, -1])

    def test_balance_flags(self, fixtures):
        assert classify(fixtures["thm213_s1"]).is_cycle_balanced
        assert not classify(fixtures["thm213_s2"]).is_cycle_balanced
        assert not classify(fixtures["thm213_s3"]).is_cycle_balanced

    def test_validation_failure_on_broken_fixture(self, tmp_path, monkeypatch):
        from sidispec.constructions import FIXTURE_ENV_VAR

        for name in (
            "thm211_s1", "thm211_s2", "thm212_s1", "thm212_s2",
            "thm212_s3", "thm213_s1", "thm213_s2", "thm213_s3",
        ):
            (tmp_path / f"{name}.sidigraph").write_text(
                "sidigraph 4\n1 2 +\n", encoding="utf-8"
            )
        monkeypatch.setenv(FIXTURE_ENV_VAR, str(tmp_path))
        with pytest.raises(FixtureValidationFailure):
            builtin_fixtures()

    def test_missing_directory(self, monkeypatch):
        from sidispec.constructions import FIXTURE_ENV_VAR

        monkeypatch.setenv(FIXTURE_ENV_VAR, "/nonexistent-fixture-dir")
        with pytest.raises(FixtureValidationFailure):
            builtin_fixtures()
