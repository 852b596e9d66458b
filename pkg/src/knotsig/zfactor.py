"""Complete factorization of integer polynomials into irreducibles over Z.

Zassenhaus route: content/primitive split, Yun squarefree decomposition,
then per squarefree part a monic model is factored modulo a good prime,
Hensel-lifted (quadratic steps, binary factor tree) past the Mignotte
coefficient bound, and modular factors are recombined by subsets with
degree-pattern pruning from three auxiliary primes.  The modular factor
count is capped at 16; results are verified by re-multiplication and do
not depend on the splitting seed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceededError, KnotsigError
from .modp import PolyModP, factor_mod_p, gcd_mod_p, xgcd_mod_p
from .polys import IntPoly, divides, exact_div, gcd_z, symmetric_check

MAX_MODULAR_FACTORS = 16


@dataclass(frozen=True)
class FactorizationZ:
    """content * prod(factor^mult); factors primitive, positive leading
    coefficient, pairwise non-associate, sorted by (degree, coefficients)."""

    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def product(self) -> IntPoly:
        acc = IntPoly((self.content,))
        for q, e in self.factors:
            acc = acc * q**e
        return acc

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@dataclass(frozen=True)
class SymmetricFactorSet:
    """Irreducible factor set of P with the standing-assumption flags."""

    factors: tuple[IntPoly, ...]
    all_symmetric: bool
    squarefree: bool


# ---------------------------------------------------------------------------
# squarefree decomposition over Z (Yun)


def _yun(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Squarefree decomposition of a primitive positive-lc polynomial."""
    if f.degree <= 1:
        return [(f, 1)]
    a0 = gcd_z(f, f.derivative())
    if a0.degree == 0:
        return [(f, 1)]
    out: list[tuple[IntPoly, int]] = []
    b = exact_div(f, a0)
    d = exact_div(f.derivative(), a0) - b.derivative()
    i = 1
    while b.degree > 0:
        g = gcd_z(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = exact_div(b, g)
        d = exact_div(d, g) - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# Hensel lifting (monic, quadratic, binary factor tree)


def _pm_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pm_add(a, b, m) -> tuple[int, ...]:
    out = list(a) if len(a) >= len(b) else list(b)
    small = b if len(a) >= len(b) else a
    for i, c in enumerate(small):
        out[i] = (out[i] + c) % m
    return _pm_trim([c % m for c in out])


def _pm_sub(a, b, m) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _pm_trim([c % m for c in out])


def _pm_mul(a, b, m) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % m
    return _pm_trim(out)


def _pm_divrem_monic(a, b, m) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Division by a monic polynomial works over Z/m."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    d = len(b) - 1
    quot = [0] * max(len(rem) - d, 0)
    while len(rem) - 1 >= d:
        if rem[-1] == 0:
            rem.pop()
            continue
        k = len(rem) - 1 - d
        q = rem[-1] % m
        quot[k] = q
        for i, c in enumerate(b):
            rem[k + i] = (rem[k + i] - q * c) % m
        rem.pop()
    return _pm_trim(quot), _pm_trim(rem)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic step: from f = g*h and s*g + t*h = 1 (mod m) to the
    same congruences mod m^2, with g, h monic."""
    m2 = m * m
    one = (1,)
    e = _pm_sub(f, _pm_mul(g, h, m2), m2)
    q, r = _pm_divrem_monic(_pm_mul(s, e, m2), h, m2)
    g2 = _pm_add(_pm_add(g, _pm_mul(t, e, m2), m2), _pm_mul(q, g, m2), m2)
    h2 = _pm_add(h, r, m2)
    b = _pm_sub(_pm_add(_pm_mul(s, g2, m2), _pm_mul(t, h2, m2), m2), one, m2)
    c, d = _pm_divrem_monic(_pm_mul(s, b, m2), h2, m2)
    s2 = _pm_sub(s, d, m2)
    t2 = _pm_sub(_pm_sub(t, _pm_mul(t, b, m2), m2), _pm_mul(c, g2, m2), m2)
    return g2, h2, s2, t2


class _Node:
    __slots__ = ("poly", "left", "right", "s", "t")

    def __init__(self, poly, left=None, right=None):
        self.poly = poly  # coefficient tuple mod current modulus
        self.left = left
        self.right = right
        self.s = None
        self.t = None


def _build_tree(factors: list[PolyModP], p: int) -> _Node:
    if len(factors) == 1:
        return _Node(factors[0].coeffs)
    mid = len(factors) // 2
    left = _build_tree(factors[:mid], p)
    right = _build_tree(factors[mid:], p)
    g = PolyModP(p, left.poly if left.poly else ())
    h = PolyModP(p, right.poly)
    node = _Node(_pm_mul(left.poly, right.poly, p), left, right)
    d, u, v = xgcd_mod_p(g, h)
    if d.degree != 0:
        raise KnotsigError("modular factors are not coprime")
    # enforce deg(s) < deg(h), deg(t) < deg(g)
    u = u % h
    v = (PolyModP.one(p) - u * g) // h
    node.s, node.t = u.coeffs, v.coeffs
    return node


def _lift_round(node: _Node, f, m: int) -> None:
    node.poly = f
    if node.left is None:
        return
    g2, h2, s2, t2 = _hensel_step(f, node.left.poly, node.right.poly, node.s, node.t, m)
    node.s, node.t = s2, t2
    _lift_round(node.left, g2, m)
    _lift_round(node.right, h2, m)


def _collect_leaves(node: _Node, out: list[tuple[int, ...]]) -> None:
    if node.left is None:
        out.append(node.poly)
        return
    _collect_leaves(node.left, out)
    _collect_leaves(node.right, out)


def _hensel_lift(F: IntPoly, factors: list[PolyModP], p: int, target: int):
    """Lift the mod-p factorization of monic F until the modulus reaches
    ``target``; returns (leaf coefficient tuples, modulus)."""
    root = _build_tree(factors, p)
    m = p
    while m < target:
        _lift_round(root, tuple(c % (m * m) for c in F.coeffs), m)
        m = m * m
    leaves: list[tuple[int, ...]] = []
    _collect_leaves(root, leaves)
    return leaves, m


# ---------------------------------------------------------------------------
# Zassenhaus recombination


def _sym_int_poly(coeffs, m: int) -> IntPoly:
    """Symmetric-range representative in (-m/2, m/2]."""
    half = m // 2
    return IntPoly((c - m if c > half else c) for c in coeffs)


def _next_good_primes(G: IntPoly, lc_orig: int, count: int) -> list[int]:
    """Smallest odd primes p with p coprime to the original leading
    coefficient and G squarefree mod p."""
    from .intfactor import is_probable_prime

    out: list[int] = []
    p = 3
    while len(out) < count:
        if is_probable_prime(p) and lc_orig % p != 0:
            gp = PolyModP.from_int_poly(G, p)
            if gp.degree == G.degree and gcd_mod_p(gp, gp.derivative()).degree == 0:
                out.append(p)
        p += 2
    return out


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _mignotte_bound(G: IntPoly) -> int:
    """Coefficient bound for any monic divisor of monic G."""
    norm2 = math.isqrt(sum(c * c for c in G.coeffs)) + 1
    return (1 << int(G.degree)) * norm2


def _factor_squarefree(g: IntPoly, seed: int, trace: list[str] | None) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree positive-lc polynomial."""
    d = int(g.degree)
    if d <= 1:
        return [g]
    lc = g.lc
    if lc == 1:
        G = g
    else:
        # monic model l^(d-1) * g(X/l); factors map back by X -> l*X
        G = IntPoly(c * lc ** (d - 1 - k) for k, c in enumerate(g.coeffs))
    primes = _next_good_primes(G, lc, 4)
    p, aux = primes[0], primes[1:]
    fac = factor_mod_p(PolyModP.from_int_poly(G, p), seed)
    modular = [q for q, _ in fac.factors]
    if trace is not None:
        trace.append(f"prime {p}: modular degrees {[int(q.degree) for q in modular]}")
    if len(modular) == 1:
        return [g]
    if len(modular) > MAX_MODULAR_FACTORS:
        raise BudgetExceededError(
            f"{len(modular)} modular factors exceeds the recombination cap of {MAX_MODULAR_FACTORS}"
        )
    allowed = _subset_sums([int(q.degree) for q in modular])
    for q in aux:
        qa = factor_mod_p(PolyModP.from_int_poly(G, q), seed)
        degs = [int(h.degree) for h, e in qa.factors for _ in range(e)]
        allowed &= _subset_sums(degs)
        if trace is not None:
            trace.append(f"auxiliary prime {q}: modular degrees {degs}")
    bound = _mignotte_bound(G)
    lifted, modulus = _hensel_lift(G, modular, p, 2 * bound + 1)
    if trace is not None:
        trace.append(f"lifted {len(lifted)} factors to modulus {p}^k = {modulus}")

    def demonicize(H: IntPoly) -> IntPoly:
        if lc == 1:
            return H
        return IntPoly(c * lc**k for k, c in enumerate(H.coeffs)).primitive()

    found: list[IntPoly] = []
    alive = list(range(len(lifted)))
    current = G
    restart = True
    while restart:
        restart = False
        for size in range(1, len(alive) // 2 + 1):
            for combo in itertools.combinations(alive, size):
                degsum = sum(len(lifted[i]) - 1 for i in combo)
                if degsum not in allowed:
                    continue
                prod: tuple[int, ...] = (1,)
                for i in combo:
                    prod = _pm_mul(prod, lifted[i], modulus)
                cand = _sym_int_poly(prod, modulus)
                if not divides(cand, current):
                    continue
                found.append(demonicize(cand))
                current = exact_div(current, cand)
                alive = [i for i in alive if i not in combo]
                if trace is not None:
                    trace.append(f"accepted subset {list(combo)} of degree {degsum}")
                restart = True
                break
            if restart:
                break
    if current.degree > 0:
        found.append(demonicize(current))
    return found


def factor_z(f: IntPoly, seed: int = 0, trace: list[str] | None = None) -> FactorizationZ:
    """Factor f completely into irreducibles over Z.

    The seed steers internal randomized splitting only; the factor set is
    seed-independent.  Pass a list as ``trace`` to collect the prime
    choices and recombination events.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    content = f.content() if f.lc > 0 else -f.content()
    prim = f.primitive()
    if prim.degree == 0:
        return FactorizationZ(content=content, factors=())
    out: list[tuple[IntPoly, int]] = []
    for part, mult in _yun(prim):
        if trace is not None and part != prim:
            trace.append(f"squarefree part of multiplicity {mult}: {part}")
        for irr in _factor_squarefree(part, seed, trace):
            out.append((irr, mult))
    out.sort(key=lambda fe: (int(fe[0].degree), fe[0].coeffs))
    result = FactorizationZ(content=content, factors=tuple(out))
    if result.product() != f:
        raise KnotsigError("internal error: factorization failed re-multiplication")
    return result


def standing_assumptions(p_poly: IntPoly, seed: int = 0) -> SymmetricFactorSet:
    """Factor P and flag whether it is a product of distinct monic
    irreducible polynomials, each fixed by X -> 1-X."""
    fz = factor_z(p_poly, seed)
    squarefree = fz.is_squarefree
    all_symmetric = p_poly.is_monic and all(symmetric_check(q) for q, _ in fz.factors)
    return SymmetricFactorSet(
        factors=tuple(q for q, _ in fz.factors),
        all_symmetric=all_symmetric,
        squarefree=squarefree,
    )
