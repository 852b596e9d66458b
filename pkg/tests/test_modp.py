"""Arithmetic and factorization over F_p, and the symmetric-common-factor
decision procedure with its brute-force oracle."""

from __future__ import annotations

import random

import pytest

from knotsig import (
    FactorizationModP,
    PolyModP,
    factor_mod_p,
    gcd_mod_p,
    involution_image,
    is_symmetric_mod_p,
    symmetric_common_factor,
)
from knotsig.polys import parse_poly
from oracles import brute_force_symmetric_common_factor


def mod(text: str, p: int) -> PolyModP:
    return PolyModP.from_int_poly(parse_poly(text), p)


class TestGcd:
    def test_self(self):
        q = mod("x^2 + x + 1", 2)
        assert gcd_mod_p(q, q) == q

    def test_example_pair(self, f1, f2):
        a = PolyModP.from_int_poly(f1, 2)
        b = PolyModP.from_int_poly(f2, 2)
        expected = mod("x^2 + x + 1", 2)
        assert gcd_mod_p(a, b) == expected * expected

    def test_coprime(self):
        assert gcd_mod_p(mod("x", 2), mod("x + 1", 2)) == PolyModP.one(2)

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            gcd_mod_p(mod("x", 2), mod("x", 3))


class TestFactor:
    def test_square_of_quadratic(self):
        fac = factor_mod_p(mod("x^4 + x^2 + 1", 2))
        assert fac.factors == ((mod("x^2 + x + 1", 2), 2),)

    def test_x2_plus_1_mod2(self):
        fac = factor_mod_p(mod("x^2 + 1", 2))
        assert fac.factors == ((mod("x + 1", 2), 2),)

    def test_x2_plus_1_mod5(self):
        fac = factor_mod_p(mod("x^2 + 1", 5))
        assert fac.factors == ((mod("x + 2", 5), 1), (mod("x + 3", 5), 1))

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_product_identity_random(self, p):
        rng = random.Random(100 + p)
        for _ in range(500):
            coeffs = [rng.randrange(p) for _ in range(rng.randrange(1, 10))]
            f = PolyModP(p, coeffs)
            if f.is_zero:
                continue
            fac = factor_mod_p(f, seed=7)
            assert fac.product(p) == f
            for q, _ in fac.factors:
                assert q.is_monic and q.degree >= 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_mod_p(PolyModP.zero(5))

    def test_deterministic(self):
        f = mod("x^8 + 3*x^5 + x + 2", 7)
        assert factor_mod_p(f, seed=1) == factor_mod_p(f, seed=1)


class TestInvolution:
    def test_mod2_fixed_quadratic(self):
        q = mod("x^2 + x + 1", 2)
        assert involution_image(q) == q

    def test_linear(self):
        # image of X is the monic normalization of 1 - X
        for p in (3, 5, 7):
            assert involution_image(PolyModP.x(p)) == PolyModP(p, (p - 1, 1))

    def test_constant(self):
        assert involution_image(PolyModP.one(7)) == PolyModP.one(7)

    def test_involution_property(self):
        rng = random.Random(19)
        for p in (2, 3, 5, 7):
            for _ in range(100):
                coeffs = [rng.randrange(p) for _ in range(rng.randrange(1, 7))] + [1]
                h = PolyModP(p, coeffs)
                assert involution_image(involution_image(h)) == h

    def test_symmetric_iff_even_degree_fixed_point(self):
        # monic symmetric polynomials of degree >= 1 are exactly the even-degree
        # fixed points of the involution
        import itertools

        for p in (2, 3, 5):
            for deg in range(1, 5):
                for tail in itertools.product(range(p), repeat=deg):
                    h = PolyModP(p, tail + (1,))
                    if is_symmetric_mod_p(h):
                        assert int(h.degree) % 2 == 0
                        assert involution_image(h) == h
                    elif involution_image(h) == h and deg % 2 == 0:
                        raise AssertionError(f"even-degree fixed point not symmetric: {h}")


class TestSymmetricCommonFactor:
    def test_example_pair_at_two(self, f1, f2):
        a = PolyModP.from_int_poly(f1, 2)
        b = PolyModP.from_int_poly(f2, 2)
        ok, witness = symmetric_common_factor(a, b)
        assert ok and witness == mod("x^2 + x + 1", 2)

    def test_coprime_false(self):
        ok, witness = symmetric_common_factor(mod("x", 2), mod("x + 1", 2))
        assert not ok and witness is None

    def test_fixed_point_needs_multiplicity_two(self):
        half = mod("x + 2", 5)  # X - 3 = X - 1/2 mod 5
        assert involution_image(half) == half
        ok, _ = symmetric_common_factor(half, half)
        assert not ok
        sq = half * half
        ok2, witness = symmetric_common_factor(sq, sq)
        assert ok2 and witness == sq

    def test_witness_properties(self):
        rng = random.Random(43)
        for p in (2, 3, 5, 7):
            for _ in range(150):
                f = PolyModP(p, [rng.randrange(p) for _ in range(rng.randrange(1, 6))] + [1])
                g = PolyModP(p, [rng.randrange(p) for _ in range(rng.randrange(1, 6))] + [1])
                ok, witness = symmetric_common_factor(f, g, seed=3)
                ok_rev, _ = symmetric_common_factor(g, f, seed=3)
                assert ok == ok_rev
                if ok:
                    d = gcd_mod_p(f, g)
                    assert witness is not None and witness.degree >= 1
                    assert is_symmetric_mod_p(witness.monic())
                    assert (d % witness.monic()).is_zero

    def test_against_brute_force_oracle(self):
        rng = random.Random(47)
        agreements = 0
        for p in (2, 3, 5, 7):
            for _ in range(60):
                f = PolyModP(p, [rng.randrange(p) for _ in range(rng.randrange(1, 5))] + [1])
                g = PolyModP(p, [rng.randrange(p) for _ in range(rng.randrange(1, 5))] + [1])
                got, _ = symmetric_common_factor(f, g, seed=1)
                want = brute_force_symmetric_common_factor(f, g, max_deg=4)
                assert got == want, (p, f, g)
                agreements += 1
        assert agreements == 240
