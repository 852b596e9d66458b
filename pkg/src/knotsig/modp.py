"""Polynomial arithmetic and factorization over prime fields F_p.

Carries the decision procedure at the heart of the prime-set computation:
whether two polynomials acquire a common factor h mod p with h(1-X) = h(X).
The involution X -> 1-X acts on monic irreducible factors; a qualifying h
exists exactly when the gcd contains an orbit pair {q, q~}, an even-degree
fixed factor, or (p odd) the square of X - 1/2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polys import IntPoly


def _trimmed_mod(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PolyModP:
    """Dense polynomial over F_p, ascending coefficients in [0, p)."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        if p >= 1 << 62:
            raise ValueError("modulus exceeds the machine-word prime limit")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _trimmed_mod(coeffs, p))

    @staticmethod
    def from_int_poly(f: IntPoly, p: int) -> "PolyModP":
        return PolyModP(p, f.coeffs)

    @staticmethod
    def zero(p: int) -> "PolyModP":
        return PolyModP(p, ())

    @staticmethod
    def one(p: int) -> "PolyModP":
        return PolyModP(p, (1,))

    @staticmethod
    def x(p: int) -> "PolyModP":
        return PolyModP(p, (0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other: "PolyModP") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "PolyModP") -> "PolyModP":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return PolyModP(self.p, out)

    def __sub__(self, other: "PolyModP") -> "PolyModP":
        self._check(other)
        return self + (-other)

    def __neg__(self) -> "PolyModP":
        return PolyModP(self.p, (-c % self.p for c in self.coeffs))

    def __mul__(self, other: "PolyModP | int") -> "PolyModP":
        if isinstance(other, int):
            return PolyModP(self.p, (c * other % self.p for c in self.coeffs))
        self._check(other)
        if self.is_zero or other.is_zero:
            return PolyModP.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + c * d) % self.p
        return PolyModP(self.p, out)

    __rmul__ = __mul__

    def divrem(self, other: "PolyModP") -> tuple["PolyModP", "PolyModP"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv = pow(other.lc, -1, p)
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        quot = [0] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d:
            if rem[-1] == 0:
                rem.pop()
                continue
            k = len(rem) - 1 - d
            q = rem[-1] * inv % p
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] = (rem[k + i] - q * c) % p
            rem.pop()
        return PolyModP(p, quot), PolyModP(p, rem)

    def __floordiv__(self, other: "PolyModP") -> "PolyModP":
        return self.divrem(other)[0]

    def __mod__(self, other: "PolyModP") -> "PolyModP":
        return self.divrem(other)[1]

    def monic(self) -> "PolyModP":
        if self.is_zero or self.is_monic:
            return self
        return self * pow(self.lc, -1, self.p)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def derivative(self) -> "PolyModP":
        return PolyModP(self.p, (k * c % self.p for k, c in enumerate(self.coeffs) if k >= 1))

    def pow_mod(self, e: int, mod: "PolyModP") -> "PolyModP":
        """self**e reduced mod ``mod``."""
        result = PolyModP.one(self.p)
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"PolyModP(p={self.p}, coeffs={list(self.coeffs)})"


def gcd_mod_p(f: PolyModP, g: PolyModP) -> PolyModP:
    """Monic gcd over F_p."""
    f._check(g)
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def xgcd_mod_p(f: PolyModP, g: PolyModP) -> tuple[PolyModP, PolyModP, PolyModP]:
    """(d, u, v) with d = gcd monic and u*f + v*g = d over F_p."""
    f._check(g)
    p = f.p
    a, b = f, g
    ua, va = PolyModP.one(p), PolyModP.zero(p)
    ub, vb = PolyModP.zero(p), PolyModP.one(p)
    while not b.is_zero:
        q, r = a.divrem(b)
        a, b = b, r
        ua, ub = ub, ua - q * ub
        va, vb = vb, va - q * vb
    if a.is_zero:
        return a, ua, va
    inv = pow(a.lc, -1, p)
    return a * inv, ua * inv, va * inv


@dataclass(frozen=True)
class FactorizationModP:
    """unit * prod(factor^mult) over F_p; factors monic irreducible."""

    unit: int
    factors: tuple[tuple[PolyModP, int], ...]

    def product(self, p: int) -> PolyModP:
        acc = PolyModP(p, (self.unit,))
        for q, e in self.factors:
            for _ in range(e):
                acc = acc * q
        return acc


def _squarefree_parts(f: PolyModP) -> list[tuple[PolyModP, int]]:
    """Monic squarefree decomposition [(g_i, mult_i)] with prod g_i^mult_i = f."""
    p = f.p
    out: list[tuple[PolyModP, int]] = []

    def recurse(g: PolyModP, scale: int) -> None:
        if g.degree == 0:
            return
        dg = g.derivative()
        if dg.is_zero:
            # g = h(X^p) = h_frob(X)^p with c^(1/p) = c over F_p
            h = PolyModP(p, (g.coeff(i * p) for i in range(int(g.degree) // p + 1)))
            recurse(h.monic(), scale * p)
            return
        c = gcd_mod_p(g, dg)
        w = (g // c).monic()
        mult = 1
        while w.degree > 0:
            y = gcd_mod_p(w, c)
            part = (w // y).monic()
            if part.degree > 0:
                out.append((part, mult * scale))
            w = y
            c = c // y
            mult += 1
        if c.degree > 0:
            recurse(c.monic(), scale)

    recurse(f.monic(), 1)
    return out


def _distinct_degree(f: PolyModP) -> list[tuple[PolyModP, int]]:
    """Split monic squarefree f into [(product of irreducibles of degree d, d)]."""
    p = f.p
    out: list[tuple[PolyModP, int]] = []
    rem = f
    h = PolyModP.x(p)
    d = 0
    while int(rem.degree) >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, rem)
        g = gcd_mod_p(h - PolyModP.x(p), rem)
        if g.degree > 0:
            out.append((g, d))
            rem = (rem // g).monic()
            h = h % rem
    if rem.degree > 0:
        out.append((rem, int(rem.degree)))
    return out


def _random_poly(p: int, max_deg: int, rng: random.Random) -> PolyModP:
    coeffs = [rng.randrange(p) for _ in range(max_deg + 1)]
    return PolyModP(p, coeffs)


def _equal_degree_split(f: PolyModP, d: int, rng: random.Random) -> list[PolyModP]:
    """Cantor-Zassenhaus equal-degree factorization of monic squarefree f
    whose irreducible factors all have degree d."""
    p = f.p
    if int(f.degree) == d:
        return [f]
    while True:
        u = _random_poly(p, int(f.degree) - 1, rng)
        if u.degree < 1:
            continue
        g = gcd_mod_p(u, f)
        if 0 < g.degree < f.degree:
            w = g
        elif p == 2:
            # trace map over F_2: u + u^2 + u^4 + ... + u^(2^(d-1))
            t = PolyModP.zero(p)
            v = u % f
            for _ in range(d):
                t = (t + v) % f
                v = v * v % f
            w = gcd_mod_p(t, f)
        else:
            t = u.pow_mod((p**d - 1) // 2, f) - PolyModP.one(p)
            w = gcd_mod_p(t, f)
        if 0 < w.degree < f.degree:
            left = w.monic()
            right = (f // w).monic()
            return _equal_degree_split(left, d, rng) + _equal_degree_split(right, d, rng)


def factor_mod_p(f: PolyModP, seed: int = 0) -> FactorizationModP:
    """Complete factorization over F_p: squarefree decomposition, then
    distinct-degree, then seeded equal-degree splitting."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    unit = f.lc
    factors: list[tuple[PolyModP, int]] = []
    if f.degree >= 1:
        for part, mult in _squarefree_parts(f):
            for block, d in _distinct_degree(part):
                for q in _equal_degree_split(block, d, rng):
                    factors.append((q, mult))
    factors.sort(key=lambda fe: (int(fe[0].degree), fe[0].coeffs))
    return FactorizationModP(unit=unit, factors=tuple(factors))


def involution_image(h: PolyModP) -> PolyModP:
    """Monic normalization of h(1-X); an involution on monic polynomials."""
    p = h.p
    if h.is_zero:
        return h
    one_minus_x = PolyModP(p, (1, p - 1))
    acc = PolyModP.zero(p)
    for c in reversed(h.coeffs):
        acc = acc * one_minus_x + PolyModP(p, (c,))
    return acc.monic()


def is_symmetric_mod_p(h: PolyModP) -> bool:
    """True when h(1-X) = h(X) exactly (not just up to a unit)."""
    p = h.p
    one_minus_x = PolyModP(p, (1, p - 1))
    acc = PolyModP.zero(p)
    for c in reversed(h.coeffs):
        acc = acc * one_minus_x + PolyModP(p, (c,))
    return acc == h


def symmetric_common_factor(
    f: PolyModP, g: PolyModP, seed: int = 0
) -> tuple[bool, PolyModP | None]:
    """Decide whether some h with deg h >= 1 and h(1-X) = h(X) divides both
    f and g over F_p; returns a witness when one exists.

    Works on d = gcd(f, g): its irreducible factors are grouped into orbits
    of the involution.  A symmetric divisor exists iff (a) some orbit pair
    {q, q~} with q != q~ has both members in d (witness q*q~), (b) some
    fixed factor of even degree divides d (such a factor is itself
    symmetric; witness q), or (c) p is odd and X - 1/2 divides d with
    multiplicity >= 2 (witness its square; a single power is fixed only up
    to sign).
    """
    f._check(g)
    if f.is_zero or g.is_zero:
        raise ValueError("symmetric_common_factor needs nonzero polynomials")
    p = f.p
    d = gcd_mod_p(f, g)
    if d.degree < 1:
        return False, None
    fac = factor_mod_p(d, seed)
    mult = {q: e for q, e in fac.factors}
    for q, e in fac.factors:
        qt = involution_image(q)
        if qt == q:
            if int(q.degree) % 2 == 0:
                return True, q
            if p != 2 and e >= 2:
                return True, q * q
        elif qt in mult and q.coeffs < qt.coeffs:
            return True, q * qt
    return False, None
