"""Sturm counting, root isolation, and the unit-circle root counts."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from knotsig import (
    IntPoly,
    delta_to_p,
    irr_r_factors,
    isolate_roots,
    parse_poly,
    rho_delta,
    rho_p,
    sturm_count,
)
from knotsig.realroots import interval_eval, refine_interval, sign_at_root
from conftest import make_delta_a
from oracles import count_real_roots_float

INF = float("inf")


def rat(text: str):
    return parse_poly(text).to_rat()


class TestSturmCount:
    def test_sqrt2_positive(self):
        assert sturm_count(rat("x^2 - 2"), 0, INF) == 1

    def test_no_real_roots(self):
        assert sturm_count(rat("x^2 + 1"), -INF, INF) == 0

    def test_trace_quartic(self):
        assert sturm_count(rat("x^2 - 3"), -2, 2) == 2

    def test_endpoint_root_raises(self):
        with pytest.raises(ValueError, match="endpoint"):
            sturm_count(rat("x^2 - 4"), 2, INF)

    def test_non_squarefree_raises(self):
        with pytest.raises(ValueError, match="squarefree"):
            sturm_count(rat("x^2 - 2*x + 1"), -INF, INF)

    def test_against_float_oracle(self):
        rng = random.Random(61)
        checked = 0
        while checked < 200:
            f = IntPoly([rng.randint(-9, 9) for _ in range(rng.randrange(2, 10))])
            if f.is_zero or f.degree < 1:
                continue
            fr = f.to_rat()
            from knotsig.polys import rat_gcd

            if rat_gcd(fr, fr.derivative()).degree > 0:
                continue
            a, b = sorted(rng.sample(range(-12, 13), 2))
            if fr.evaluate(a) == 0 or fr.evaluate(b) == 0:
                continue
            want = count_real_roots_float(f, a, b)
            if want is None:
                continue
            assert sturm_count(fr, a, b) == want, (f.coeffs, a, b)
            checked += 1


class TestIsolateRoots:
    def test_single(self):
        ivs = isolate_roots(rat("x^2 - 2"), 0, 3)
        assert len(ivs) == 1
        iv = ivs[0]
        assert iv.lo < Fraction(141421, 100000) < iv.hi

    def test_three_known_roots(self):
        ivs = isolate_roots(rat("-6,11,-6,1"), 0, 4)
        assert len(ivs) == 3
        for iv, root in zip(ivs, (1, 2, 3)):
            assert iv.lo < root < iv.hi

    def test_empty(self):
        assert isolate_roots(rat("x^2 + 1")) == []

    def test_disjoint_and_sorted(self):
        rng = random.Random(67)
        for _ in range(40):
            f = IntPoly([rng.randint(-9, 9) for _ in range(rng.randrange(2, 9))])
            fr = f.to_rat()
            from knotsig.polys import rat_gcd

            if f.is_zero or f.degree < 1 or rat_gcd(fr, fr.derivative()).degree > 0:
                continue
            ivs = isolate_roots(fr)
            assert len(ivs) == sturm_count(fr, -INF, INF)
            for a, b in zip(ivs, ivs[1:]):
                assert a.hi <= b.lo
            for iv in ivs:
                assert fr.evaluate(iv.lo) != 0 and fr.evaluate(iv.hi) != 0
                assert sturm_count(fr, iv.lo, iv.hi) == 1


class TestRho:
    def test_rho_delta_quartic(self, delta1):
        assert rho_delta(delta1) == 4

    def test_rho_delta_product(self, delta1, delta2):
        assert rho_delta(delta1 * delta2) == 8

    def test_rho_delta_example_one(self, g1, delta1):
        assert rho_delta(g1 * delta1) == 8

    @pytest.mark.parametrize("a", range(6))
    def test_rho_delta_a(self, a):
        assert rho_delta(make_delta_a(a)) == 4

    def test_rho_p_values(self, delta1, delta2):
        assert rho_p(delta_to_p(delta1)) == 4
        assert rho_p(delta_to_p(delta1 * delta2)) == 8
        assert rho_p(parse_poly("x^2 - x - 2")) == 0

    def test_rho_even_and_bounded(self):
        rng = random.Random(71)
        done = 0
        while done < 30:
            n = rng.randrange(1, 5)
            half = [rng.randint(-9, 9) for _ in range(n)]
            delta = IntPoly(half + [rng.randint(-9, 9)] + half[::-1])
            if delta.degree != 2 * n or delta.evaluate(1) == 0 or delta.evaluate(-1) == 0:
                continue
            from knotsig import is_squarefree_q

            if not is_squarefree_q(delta):
                continue
            r = rho_delta(delta)
            assert r % 2 == 0 and 0 <= r <= 2 * n
            done += 1

    def test_cross_check_rho_p_equals_rho_delta(self):
        rng = random.Random(73)
        done = 0
        while done < 100:
            n = rng.randrange(1, 6)
            half = [rng.randint(-9, 9) for _ in range(n)]
            delta = IntPoly(half + [rng.randint(-9, 9)] + half[::-1])
            if delta.degree != 2 * n or delta.evaluate(1) == 0 or delta.evaluate(-1) == 0:
                continue
            from knotsig import is_squarefree_q

            if not is_squarefree_q(delta):
                continue
            assert rho_delta(delta) == rho_p(delta_to_p(delta))
            done += 1

    def test_corpus_rho_divisible_by_four(self, delta1, delta2, g1):
        # observed on every worked example; asserted on the corpus only
        corpus = [delta1, delta2, delta1 * delta2, g1 * delta1] + [
            make_delta_a(a) for a in range(6)
        ]
        for delta in corpus:
            assert rho_delta(delta) % 4 == 0

    def test_preconditions_reported_distinctly(self, f1):
        with pytest.raises(ValueError, match="reciprocal"):
            rho_delta(parse_poly("x^2 + x + 2"))
        with pytest.raises(ValueError, match="squarefree"):
            rho_delta(parse_poly("x^2 + 3*x + 1") * parse_poly("x^2 + 3*x + 1"))
        with pytest.raises(ValueError, match="X = 1"):
            rho_delta(parse_poly("x^2 - 2*x + 1") * parse_poly("x^2 + 3*x + 1"))
        with pytest.raises(ValueError, match="symmetr|1-X"):
            rho_p(parse_poly("x^2 + 1"))


class TestIrrRFactors:
    def test_counts(self, delta1, delta2):
        assert len(irr_r_factors(delta_to_p(delta1))) == 2
        assert len(irr_r_factors(delta_to_p(delta1 * delta2))) == 4
        assert irr_r_factors(parse_poly("x^2 - x - 2")) == []

    def test_matches_rho(self, delta1, delta2, g1):
        for delta in (delta1, delta1 * delta2, g1 * delta1):
            p = delta_to_p(delta)
            assert 2 * len(irr_r_factors(p)) == rho_p(p)

    def test_intervals_disjoint_below_quarter(self, delta1, delta2):
        factors = irr_r_factors(delta_to_p(delta1 * delta2))
        for f in factors:
            assert f.v_root_interval.hi <= Fraction(-1, 4)
        for a, b in zip(factors, factors[1:]):
            assert a.v_root_interval.hi <= b.v_root_interval.lo


class TestCertifiedSigns:
    def test_interval_eval_contains_value(self):
        p = rat("x^3 - 2*x + 1")
        lo, hi = interval_eval(p, Fraction(1, 3), Fraction(1, 2))
        for x in (Fraction(1, 3), Fraction(2, 5), Fraction(1, 2)):
            assert lo <= p.evaluate(x) <= hi

    def test_sign_at_sqrt2(self):
        minpoly = rat("x^2 - 2")
        ivs = isolate_roots(minpoly, 0, 3)
        # sign of (x - 1) at sqrt(2) is +, sign of (x - 3/2) is -
        assert sign_at_root(rat("x - 1"), minpoly, ivs[0]) == 1
        assert sign_at_root(parse_poly("-3,2").to_rat() * Fraction(1, 2), minpoly, ivs[0]) == -1

    def test_refine_keeps_root(self):
        minpoly = rat("x^2 - 2")
        iv = isolate_roots(minpoly, 0, 3)[0]
        for _ in range(20):
            iv = refine_interval(minpoly, iv)
        assert iv.lo < Fraction(1414214, 1000000) and iv.hi > Fraction(1414213, 1000000)
