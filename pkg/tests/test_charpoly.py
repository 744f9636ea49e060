import random

import pytest

from conftest import digon, directed_cycle
from sidispec.charpoly import (
    all_linear_subs,
    charpoly_exact,
    charpoly_minors,
    charpoly_via_theorem,
    coefficient_via_theorem,
    enumerate_linear_subs,
    neg_invariance_equivalences,
    poly_matches_form1,
    poly_matches_form2,
    type_census,
    verify_delta_form,
)
from sidispec.constructions import FamilySpec, family_theorem41
from sidispec.errors import OracleBoundExceeded, SizeOverflow
from sidispec.generate import all_sidigraphs, random_bipartite_digraph, random_sidigraph
from sidispec.graphs import Sidigraph, is_bipartite, negate
from sidispec.polynomials import IntPolynomial

P = IntPolynomial.from_leading


def two_disjoint_digons(sign_second: int = 1) -> Sidigraph:
    return Sidigraph(
        4, [(0, 1, 1), (1, 0, 1), (2, 3, sign_second), (3, 2, 1)]
    )


class TestCharpolyExact:
    def test_digons(self):
        assert charpoly_exact(digon(1, 1)) == P([1, 0, -1])
        assert charpoly_exact(digon(-1, 1)) == P([1, 0, 1])

    def test_fixture(self, fixtures):
        assert charpoly_exact(fixtures["thm211_s1"]) == P([1, 0, -3, 2, 0])

    def test_even_family_member(self):
        s1, _ = family_theorem41(FamilySpec("theorem41_even", 6, 3))
        assert charpoly_exact(s1) == P([1, 0, 0, 1, 0, 0, 1])

    def test_size_guard(self):
        with pytest.raises(SizeOverflow):
            charpoly_exact(Sidigraph(65))
        assert charpoly_exact(Sidigraph(3)) == P([1, 0, 0, 0])


class TestCharpolyMinors:
    def test_examples(self):
        assert charpoly_minors(digon(1, 1)) == P([1, 0, -1])
        assert charpoly_minors(digon(-1, 1)) == P([1, 0, 1])
        assert charpoly_minors(Sidigraph(5)) == IntPolynomial.monomial(5)

    def test_oracle_bound(self):
        with pytest.raises(OracleBoundExceeded):
            charpoly_minors(Sidigraph(13))


class TestLinearSubs:
    def test_positive_digon(self):
        subs = enumerate_linear_subs(digon(1, 1), 2)
        assert len(subs) == 1
        assert subs[0].components == 1 and subs[0].sign == 1 and subs[0].order == 2

    def test_two_disjoint_digons(self):
        s = two_disjoint_digons()
        (pair,) = enumerate_linear_subs(s, 4)
        assert pair.components == 2 and pair.sign == 1
        assert len(enumerate_linear_subs(s, 2)) == 2
        assert enumerate_linear_subs(s, 3) == []

    def test_even_family_censuses(self):
        n, j = 8, 5
        s1, _ = family_theorem41(FamilySpec("theorem41_even", n, j))
        for order in range(1, n + 1):
            count = len(enumerate_linear_subs(s1, order))
            assert count == (1 if order in (j, n) else 0)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            enumerate_linear_subs(digon(1, 1), 0)
        with pytest.raises(ValueError):
            enumerate_linear_subs(digon(1, 1), 3)

    def test_vertex_disjointness(self):
        rng = random.Random(10)
        for _ in range(15):
            s = random_sidigraph(rng, 6, 0.5)
            for sub in all_linear_subs(s):
                seen = set()
                for c in sub.cycles:
                    assert not (seen & set(c.vertices))
                    seen.update(c.vertices)
                assert sub.order == len(seen)


class TestCoefficientTheorem:
    def test_mixed_digon(self):
        assert coefficient_via_theorem(digon(-1, 1), 2) == 1
        assert charpoly_exact(digon(-1, 1)).coeff(0) == 1

    def test_even_family_coefficients(self):
        n, j = 10, 3
        s1, _ = family_theorem41(FamilySpec("theorem41_even", n, j))
        for order in range(1, n + 1):
            expected = 1 if order in (j, n) else 0
            assert coefficient_via_theorem(s1, order) == expected

    def test_negative_four_cycle(self):
        s = directed_cycle(4, negative_arcs=((0, 1),))
        assert coefficient_via_theorem(s, 4) == 1
        assert charpoly_exact(s) == P([1, 0, 0, 0, 1])


class TestThreeWayAgreement:
    def test_exhaustive_tiny(self):
        for n in (1, 2):
            for s in all_sidigraphs(n):
                p = charpoly_exact(s)
                assert p == charpoly_minors(s) == charpoly_via_theorem(s)

    def test_random_medium(self):
        rng = random.Random(11)
        for _ in range(80):
            s = random_sidigraph(rng, rng.randrange(3, 7), 0.45)
            p = charpoly_exact(s)
            assert p == charpoly_minors(s) == charpoly_via_theorem(s)
            n = s.n
            for j in range(1, n + 1):
                assert coefficient_via_theorem(s, j) == p.coeff(n - j)


class TestTypeCensus:
    def test_examples(self):
        t = type_census(digon(1, 1), 2)
        assert (t.count_a, t.count_b, t.count_c, t.count_d) == (0, 0, 1, 0)
        t = type_census(digon(-1, 1), 2)
        assert (t.count_a, t.count_b, t.count_c, t.count_d) == (1, 0, 0, 0)
        t = type_census(two_disjoint_digons(sign_second=-1), 4)
        assert (t.count_a, t.count_b, t.count_c, t.count_d) == (0, 0, 0, 1)

    def test_coefficient_identity(self):
        rng = random.Random(12)
        for _ in range(40):
            s = random_sidigraph(rng, rng.randrange(2, 7), 0.5)
            p = charpoly_exact(s)
            for j in range(1, s.n + 1):
                t = type_census(s, j)
                assert t.coefficient == p.coeff(s.n - j)
                assert t.total == len(enumerate_linear_subs(s, j))


class TestLemmaParityCensus:
    def test_bipartite_parity_and_component_counts(self):
        rng = random.Random(13)
        for _ in range(30):
            d = random_bipartite_digraph(rng, rng.randrange(2, 9), 0.5)
            p = charpoly_exact(d)
            n = d.n
            for j in range(1, n + 1, 2):
                assert p.coeff(n - j) == 0  # odd-order census is empty
                assert enumerate_linear_subs(d, j) == []
            for sub in all_linear_subs(d):
                two_mod_four = sum(1 for c in sub.cycles if c.length % 4 == 2)
                if sub.order % 4 == 0:
                    assert two_mod_four % 2 == 0
                else:
                    assert two_mod_four % 2 == 1


class TestNegInvariance:
    def test_bipartite_all_true(self):
        rep = neg_invariance_equivalences(directed_cycle(4))
        assert rep.spec_invariant and rep.odd_coeffs_zero and rep.census_balanced

    def test_positive_triangle_all_false(self):
        rep = neg_invariance_equivalences(directed_cycle(3))
        assert not (rep.spec_invariant or rep.odd_coeffs_zero or rep.census_balanced)

    def test_fixture_all_false(self, fixtures):
        rep = neg_invariance_equivalences(fixtures["thm211_s1"])
        assert not (rep.spec_invariant or rep.odd_coeffs_zero or rep.census_balanced)

    def test_three_booleans_always_agree(self):
        rng = random.Random(14)
        for _ in range(60):
            s = random_sidigraph(rng, rng.randrange(1, 7), 0.5)
            assert neg_invariance_equivalences(s).consistent

    def test_negation_reflects_charpoly(self):
        # phi of the negated graph always equals (-1)^n phi(-z); equality with
        # phi itself holds exactly when the invariance report is true
        rng = random.Random(15)
        for _ in range(40):
            s = random_sidigraph(rng, rng.randrange(1, 7), 0.5)
            p = charpoly_exact(s)
            assert charpoly_exact(negate(s)) == p.reflected()
            rep = neg_invariance_equivalences(s)
            assert (charpoly_exact(negate(s)) == p) == rep.spec_invariant


class TestDeltaForms:
    def test_negative_four_cycle(self):
        s = directed_cycle(4, negative_arcs=((0, 1),))
        rep = verify_delta_form(s)
        assert rep.form1_holds and rep.form2_holds and rep.c_values_match_census
        assert len(enumerate_linear_subs(s, 4)) == 1

    def test_positive_digon(self):
        rep = verify_delta_form(digon(1, 1))
        assert rep.form1_holds and rep.c_values_match_census
        assert not rep.form2_holds

    def test_form_shapes_on_outside_polynomials(self):
        # alternating shape satisfied by a graph outside the class
        assert poly_matches_form1(P([1, 0, -1, 0, 2, 0, 0]))  # z^6 - z^4 + 2z^2
        # all-nonnegative shape satisfied outside the class
        assert poly_matches_form2(P([1, 0, 1, 0, 0]))  # z^4 + z^2
        lead17 = [1] + [0] * 5 + [3] + [0] * 5 + [1] + [0] * 5
        assert poly_matches_form2(P(lead17))  # z^17 + 3z^11 + z^5
        lead17[6] = 1
        assert poly_matches_form2(P(lead17))  # z^17 + z^11 + z^5
        assert not poly_matches_form1(P([1, 0, 0, -1]))  # odd coefficient
        assert not poly_matches_form2(P([1, 0, -1]))  # negative even coefficient

    def test_members_satisfy_contract(self):
        from sidispec.constructions import assign_signs_for_class
        from sidispec.graphs import classify

        rng = random.Random(16)
        checked1 = checked2 = 0
        while checked1 < 10 or checked2 < 10:
            d = random_bipartite_digraph(rng, rng.randrange(3, 9), 0.5)
            for target in ("delta1", "delta2"):
                s = assign_signs_for_class(d, target)
                if s is None:
                    continue
                flags = classify(s)
                rep = verify_delta_form(s)
                if target == "delta1" and flags.in_delta1:
                    assert rep.form1_holds and rep.c_values_match_census
                    checked1 += 1
                if target == "delta2" and flags.in_delta2:
                    assert rep.form2_holds and rep.c_values_match_census
                    checked2 += 1
