"""Randomized property suites for arithmetic, order, metric, and calculus."""

import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzynewton import (
    FuzzyNumber,
    HukuharaNonexistence,
    ScalarizationConfig,
    add,
    build_fuzzy_polynomial,
    comparable,
    crisp,
    crisp_lift,
    discretize,
    distance,
    div,
    eval_fuzzy,
    hukuhara_diff,
    leq,
    levels_equal,
    lt,
    mul,
    negate,
    reciprocal,
    scalar_mul,
    scalarize,
    scalarize_many,
    square,
)
from helpers import (
    GRID_SIZES,
    assert_valid_fuzzy,
    finite,
    fuzzy_numbers,
    fuzzy_pairs,
    fuzzy_triples,
    positive_fuzzy_numbers,
    triangulars,
)

settings.register_profile("thorough", max_examples=200, deadline=None)
settings.load_profile("thorough")

CFG = ScalarizationConfig()


@st.composite
def division_pairs(draw):
    m = draw(st.sampled_from(GRID_SIZES))
    return draw(fuzzy_numbers(m=m)), draw(positive_fuzzy_numbers(m=m))


def tol_for(*numbers: FuzzyNumber) -> float:
    scale = max(
        1.0,
        *(float(np.max(np.abs(a.lo))) for a in numbers),
        *(float(np.max(np.abs(a.hi))) for a in numbers),
    )
    return 1e-9 * scale


class TestArithmeticPreservesInvariants:
    @given(fuzzy_pairs())
    def test_add(self, pair):
        a, b = pair
        assert_valid_fuzzy(add(a, b))

    @given(finite(-50.0, 50.0), fuzzy_numbers())
    def test_scalar_mul(self, c, a):
        assert_valid_fuzzy(scalar_mul(c, a))

    @given(fuzzy_pairs())
    def test_mul(self, pair):
        a, b = pair
        assert_valid_fuzzy(mul(a, b))

    @given(fuzzy_numbers())
    def test_square(self, a):
        assert_valid_fuzzy(square(a))

    @given(division_pairs())
    def test_div(self, pair):
        a, b = pair
        assert_valid_fuzzy(div(a, b))

    @given(positive_fuzzy_numbers())
    def test_reciprocal(self, a):
        assert_valid_fuzzy(reciprocal(a))

    @given(fuzzy_pairs())
    def test_add_commutes(self, pair):
        a, b = pair
        assert levels_equal(add(a, b), add(b, a))

    @given(fuzzy_pairs())
    def test_mul_commutes(self, pair):
        a, b = pair
        assert levels_equal(mul(a, b), mul(b, a), tol=tol_for(a, b))

    @given(finite(-20.0, 20.0), finite(-20.0, 20.0), fuzzy_numbers())
    def test_scalar_mul_composes(self, c1, c2, a):
        lhs = scalar_mul(c1, scalar_mul(c2, a))
        rhs = scalar_mul(c1 * c2, a)
        assert levels_equal(lhs, rhs, tol=max(tol_for(rhs), 1e-6))


class TestOrderAxioms:
    @given(fuzzy_numbers())
    def test_reflexive(self, a):
        assert leq(a, a)
        assert not lt(a, a)

    @given(fuzzy_pairs())
    def test_antisymmetric(self, pair):
        a, b = pair
        if leq(a, b) and leq(b, a):
            assert levels_equal(a, b)

    @given(fuzzy_triples(), finite(0.0, 10.0), finite(0.0, 10.0))
    def test_transitive_on_shifted_chain(self, triple, s1, s2):
        a, _, _ = triple
        b = add(a, crisp(s1, a.m))
        c = add(b, crisp(s2, a.m))
        assert leq(a, b) and leq(b, c) and leq(a, c)

    @given(fuzzy_triples())
    def test_transitive_in_general(self, triple):
        a, b, c = triple
        if leq(a, b) and leq(b, c):
            assert leq(a, c)

    @given(fuzzy_pairs(), finite(-10.0, 10.0))
    def test_translation_preserves_leq(self, pair, s):
        # weak inequalities survive shifting because rounding is monotone;
        # the converse can fail when a tiny gap is absorbed by the shift
        a, b = pair
        shift = crisp(s, a.m)
        if leq(a, b):
            assert leq(add(a, shift), add(b, shift))

    @given(fuzzy_pairs())
    def test_lt_implies_leq_and_not_equal(self, pair):
        a, b = pair
        if lt(a, b):
            assert leq(a, b)
            assert not levels_equal(a, b, tol=0.0)
            assert comparable(a, b)


class TestMetricAxioms:
    @given(fuzzy_numbers())
    def test_identity(self, a):
        assert distance(a, a) == 0.0

    @given(fuzzy_pairs())
    def test_symmetry(self, pair):
        a, b = pair
        assert distance(a, b) == distance(b, a)

    @given(fuzzy_pairs())
    def test_separates_points(self, pair):
        a, b = pair
        d = distance(a, b)
        assert d >= 0.0
        if levels_equal(a, b, tol=0.0):
            assert d == 0.0
        else:
            assert d > 0.0

    @given(fuzzy_triples())
    def test_triangle_inequality(self, triple):
        a, b, c = triple
        slack = tol_for(a, b, c)
        assert distance(a, c) <= distance(a, b) + distance(b, c) + slack

    @given(fuzzy_pairs(), finite(-10.0, 10.0))
    def test_translation_invariant(self, pair, s):
        a, b = pair
        shift = crisp(s, a.m)
        d0 = distance(a, b)
        d1 = distance(add(a, shift), add(b, shift))
        assert d1 == pytest.approx(d0, abs=tol_for(a, b) + abs(s) * 1e-12)


class TestHukuhara:
    @given(fuzzy_pairs())
    def test_roundtrip_when_difference_exists(self, pair):
        h0, b = pair
        a = add(h0, b)
        h = hukuhara_diff(a, b)
        assert isinstance(h, FuzzyNumber)
        assert levels_equal(add(h, b), a, tol=tol_for(a, b))

    @given(fuzzy_pairs())
    def test_either_roundtrip_or_verdict(self, pair):
        a, b = pair
        h = hukuhara_diff(a, b)
        if isinstance(h, HukuharaNonexistence):
            assert not h
            assert 0.0 <= h.alpha <= 1.0
            assert h.reason
        else:
            assert levels_equal(add(h, b), a, tol=tol_for(a, b))

    @given(fuzzy_numbers())
    def test_self_difference_is_zero(self, a):
        h = hukuhara_diff(a, a)
        assert isinstance(h, FuzzyNumber)
        assert levels_equal(h, crisp(0.0, a.m), tol=tol_for(a))


class TestSquareVsSelfProduct:
    @given(fuzzy_numbers())
    def test_square_contained_in_product(self, a):
        s, p = square(a), mul(a, a)
        slack = tol_for(a, s)
        assert np.all(s.lo >= p.lo - slack)
        assert np.all(s.hi <= p.hi + slack)


@st.composite
def polynomial_functions(draw):
    coeffs = tuple(
        draw(triangulars(lo=-5.0, span=3.0))
        for _ in range(draw(st.integers(1, 4)))
    )
    return build_fuzzy_polynomial(coeffs)


class TestScalarizationProperties:
    @given(polynomial_functions(), finite(-3.0, 3.0))
    def test_negation_antisymmetry(self, f, x):
        lhs = scalarize(negate(f), x, CFG)
        rhs = -scalarize(f, x, CFG)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)

    @given(finite(-5.0, 5.0), finite(-5.0, 5.0), finite(-5.0, 5.0),
           finite(-3.0, 3.0))
    def test_crisp_collapse_doubles_g(self, c0, c1, c2, x):
        g = lambda t: np.asarray(c0 + c1 * t + c2 * t * t)
        f = crisp_lift(g)
        assert scalarize(f, x, CFG) == pytest.approx(
            2.0 * float(g(x)), rel=1e-12, abs=1e-12
        )

    @given(polynomial_functions(), st.lists(finite(-3.0, 3.0), min_size=1,
                                            max_size=8))
    def test_scalarize_many_matches_loop(self, f, xs):
        many = scalarize_many(f, np.array(xs), CFG)
        single = [scalarize(f, x, CFG) for x in xs]
        np.testing.assert_allclose(many, single, rtol=0, atol=1e-10)

    @given(polynomial_functions(), finite(-3.0, 3.0),
           st.sampled_from([11, 51, 101]))
    def test_eval_fuzzy_always_valid(self, f, x, m):
        assert_valid_fuzzy(eval_fuzzy(f, x, m))

    @given(triangulars(lo=-10.0, span=5.0), finite(-3.0, 3.0))
    def test_constant_polynomial_scalarizes_to_level_mass(self, t, x):
        f = build_fuzzy_polynomial((t,))
        v = discretize(t, CFG.alpha_points)
        # quadrature of lo+hi equals (left+right)/2 + peak for triangles
        expected = (t.left + t.right) / 2.0 + t.peak
        assert scalarize(f, x, CFG) == pytest.approx(expected, abs=1e-9)
        assert eval_fuzzy(f, x, CFG.alpha_points) == v
