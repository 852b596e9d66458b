"""Seifert forms and Seifert pairs over Z, with exact invariants.

A form is a square integer matrix A whose symmetrization S = A + A^T is
unimodular (and automatically even).  A pair is an even unimodular
symmetric S with an injective integer endomorphism a satisfying
S(ax, y) = S(x, (1-a)y).  Bilinear forms evaluate as x^T M y throughout;
the correspondence A <-> (S, a) is A = a^T S, a = S^(-1) A^T, and all
public identities are convention-free.

Milnor signatures restrict S to the two-dimensional eigenspaces of
b = a^2 - a at the real eigenvalues lambda < -1/4 of the v-model of the
characteristic polynomial.  The eigenspace is computed exactly over the
number field Q[Y]/(minpoly of lambda); the one leftover analytic step,
choosing the correct real embedding, is certified by exact rational
interval refinement of the isolating interval of lambda.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import KnotsigError, PolyParseError
from .polys import IntPoly, RatPoly, is_squarefree_q, rat_gcd, v_polynomial
from .realroots import IrrRFactor, irr_r_factors, sign_at_root, sturm_count
from .zfactor import factor_z

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# exact integer/rational matrix helpers


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(c) for c in row) for row in rows)
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("matrix must be square and nonempty")
    return m


def parse_matrix(text: str) -> Matrix:
    """Row-major bracketed integers, e.g. ``[[0,2],[-1,0]]``."""
    try:
        rows = json.loads(text)
        return as_matrix(rows)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise PolyParseError(f"bad matrix: {text!r}") from exc


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(tuple(row[i] for row in a) for i in range(len(a)))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_det(a: Matrix) -> int:
    """Fraction-free Bareiss determinant."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def mat_inverse_unimodular(a: Matrix) -> Matrix:
    """Integer inverse of a matrix with determinant +-1."""
    n = len(a)
    det = mat_det(a)
    if det not in (1, -1):
        raise ValueError(f"matrix has determinant {det}, not +-1")
    work = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return tuple(tuple(int(x) for x in row[n:]) for row in work)


def pencil_det(m0: Matrix, m1: Matrix) -> IntPoly:
    """det(m0 + X*m1) by exact evaluation/interpolation."""
    n = len(m0)
    points = range(n + 1)
    values = [
        mat_det(tuple(tuple(m0[i][j] + x * m1[i][j] for j in range(n)) for i in range(n)))
        for x in points
    ]
    # Lagrange interpolation over Fraction; the result is integral.
    acc = RatPoly.zero()
    for i, xi in enumerate(points):
        term = RatPoly((Fraction(values[i]),))
        for j, xj in enumerate(points):
            if i == j:
                continue
            term = term * RatPoly((Fraction(-xj, 1), Fraction(1))) * Fraction(1, xi - xj)
        acc = acc + term
    if any(c.denominator != 1 for c in acc.coeffs):
        raise KnotsigError("internal error: interpolated determinant is not integral")
    return IntPoly(int(c) for c in acc.coeffs)


def charpoly(a: Matrix) -> IntPoly:
    """Monic characteristic polynomial det(X*I - a)."""
    return pencil_det(mat_neg(a), identity(len(a)))


# ---------------------------------------------------------------------------
# forms and pairs


@dataclass(frozen=True)
class Validation:
    ok: bool
    problems: tuple[str, ...]


@dataclass(frozen=True)
class SeifertPair:
    s: Matrix
    a: Matrix


@dataclass(frozen=True)
class MilnorAssignmentComputed:
    """Signature of S restricted to each unit-circle eigenplane, in the
    sorted order of the v-root intervals.  A zero value means the
    restriction is indefinite and deserves attention."""

    factors: tuple[IrrRFactor, ...]
    values: tuple[int, ...]
    kernel_dims: tuple[int, ...]
    total: int

    @property
    def has_zero_value(self) -> bool:
        return any(v == 0 for v in self.values)


def validate_form(a_rows: Sequence[Sequence[int]]) -> Validation:
    """A square integer matrix A is a Seifert form iff det(A + A^T) = +-1."""
    problems: list[str] = []
    try:
        a = as_matrix(a_rows)
    except ValueError as exc:
        return Validation(False, (str(exc),))
    d = mat_det(mat_add(a, transpose(a)))
    if d not in (1, -1):
        problems.append(f"symmetrization has determinant {d}, not +-1")
    return Validation(not problems, tuple(problems))


def validate_pair(s_rows: Sequence[Sequence[int]], a_rows: Sequence[Sequence[int]]) -> Validation:
    """S must be symmetric, even, unimodular; a injective with
    S(ax, y) = S(x, (1-a)y), i.e. a^T S + S a = S."""
    problems: list[str] = []
    try:
        s = as_matrix(s_rows)
        a = as_matrix(a_rows)
    except ValueError as exc:
        return Validation(False, (str(exc),))
    if len(s) != len(a):
        return Validation(False, ("S and a have different sizes",))
    if s != transpose(s):
        problems.append("S is not symmetric")
    if any(s[i][i] % 2 for i in range(len(s))):
        problems.append("S has an odd diagonal entry, so it is not even")
    ds = mat_det(s)
    if ds not in (1, -1):
        problems.append(f"S has determinant {ds}, not +-1")
    if mat_det(a) == 0:
        problems.append("a has determinant 0, so it is not injective")
    if mat_add(mat_mul(transpose(a), s), mat_mul(s, a)) != s:
        problems.append("the relation S(ax, y) = S(x, (1-a)y) fails")
    return Validation(not problems, tuple(problems))


def form_to_pair(a_rows: Sequence[Sequence[int]]) -> SeifertPair:
    """S = A + A^T and the unique companion a with A(x,y) = S(ax,y)."""
    a_mat = as_matrix(a_rows)
    val = validate_form(a_mat)
    if not val.ok:
        raise ValueError("; ".join(val.problems))
    if mat_det(a_mat) == 0:
        raise ValueError("degenerate form, no injective companion")
    s = mat_add(a_mat, transpose(a_mat))
    comp = mat_mul(mat_inverse_unimodular(s), transpose(a_mat))
    pair = SeifertPair(s=s, a=comp)
    check = validate_pair(pair.s, pair.a)
    if not check.ok:
        raise KnotsigError(f"internal error: companion pair invalid: {check.problems}")
    return pair


def pair_to_form(s_rows: Sequence[Sequence[int]], a_rows: Sequence[Sequence[int]]) -> Matrix:
    """The form A(x,y) = S(ax,y), i.e. A = a^T S."""
    val = validate_pair(s_rows, a_rows)
    if not val.ok:
        raise ValueError("; ".join(val.problems))
    s, a = as_matrix(s_rows), as_matrix(a_rows)
    return mat_mul(transpose(a), s)


def alexander_of_form(a_rows: Sequence[Sequence[int]]) -> IntPoly:
    """det(X*A + A^T), exact."""
    a = as_matrix(a_rows)
    val = validate_form(a)
    if not val.ok:
        raise ValueError("; ".join(val.problems))
    return pencil_det(transpose(a), a)


def charpoly_of_pair(s_rows: Sequence[Sequence[int]], a_rows: Sequence[Sequence[int]]) -> IntPoly:
    """Characteristic polynomial of the endomorphism of a valid pair."""
    val = validate_pair(s_rows, a_rows)
    if not val.ok:
        raise ValueError("; ".join(val.problems))
    return charpoly(as_matrix(a_rows))


def signature_exact(m_rows: Sequence[Sequence[int]]) -> int:
    """Signature of a nonsingular symmetric integer matrix by exact
    rational congruence diagonalization (2x2 hyperbolic blocks absorb
    zero-diagonal pivots)."""
    m = as_matrix(m_rows)
    if m != transpose(m):
        raise ValueError("signature needs a symmetric matrix")
    n = len(m)
    w = [[Fraction(c) for c in row] for row in m]
    active = list(range(n))
    sig = 0
    while active:
        piv = next((k for k in active if w[k][k] != 0), None)
        if piv is not None:
            d = w[piv][piv]
            sig += 1 if d > 0 else -1
            active.remove(piv)
            for i in active:
                if w[i][piv] != 0:
                    f = w[i][piv] / d
                    for j in active:
                        w[i][j] -= f * w[piv][j]
            for i in active:
                w[i][piv] = w[piv][i] = Fraction(0)
            continue
        off = next(
            ((k, l) for k in active for l in active if k < l and w[k][l] != 0), None
        )
        if off is None:
            raise ValueError("matrix is singular; signature undefined")
        k, l = off
        b = w[k][l]
        active.remove(k)
        active.remove(l)
        # hyperbolic block [[0, b], [b, 0]]: contributes +1 and -1
        for i in active:
            rk, rl = w[i][k] / b, w[i][l] / b
            if rk == 0 and rl == 0:
                continue
            for j in active:
                w[i][j] -= rk * w[l][j] + rl * w[k][j]
        for i in active:
            w[i][k] = w[k][i] = w[i][l] = w[l][i] = Fraction(0)
    return sig


def unimodular_t(a_rows: Sequence[Sequence[int]]) -> Matrix:
    """For a unimodular form A, the isometry t with A(tx,y) = -A(y,x);
    t preserves S = A + A^T and charpoly(t) = det(A) * Delta_A."""
    a = as_matrix(a_rows)
    val = validate_form(a)
    if not val.ok:
        raise ValueError("; ".join(val.problems))
    det_a = mat_det(a)
    if det_a not in (1, -1):
        raise ValueError(f"form has determinant {det_a}, not +-1")
    # t^T A = -A^T  =>  t = -(A^(-1))^T A
    t = mat_neg(mat_mul(transpose(mat_inverse_unimodular(a)), a))
    s = mat_add(a, transpose(a))
    if mat_mul(transpose(t), mat_mul(s, t)) != s:
        raise KnotsigError("internal error: t does not preserve the symmetrization")
    expected = det_a * alexander_of_form(a)
    if charpoly(t) != expected:
        raise KnotsigError("internal error: charpoly(t) != det(A) * Delta_A")
    return t


# ---------------------------------------------------------------------------
# Milnor signatures of a concrete pair


def _kmul(x: RatPoly, y: RatPoly, q: RatPoly) -> RatPoly:
    return (x * y) % q


def _kinv(x: RatPoly, q: RatPoly) -> RatPoly:
    """Inverse of x modulo the irreducible q over Q."""
    a, b = q, x % q
    ua, ub = RatPoly.zero(), RatPoly((Fraction(1),))
    while not b.is_zero:
        quo, rem = a.divrem(b)
        a, b = b, rem
        ua, ub = ub, ua - quo * ub
    if a.degree != 0:
        raise KnotsigError("internal error: non-invertible element in number field")
    return (ua * (1 / a.lc)) % q


def _kernel_basis_over_field(
    m: list[list[RatPoly]], q: RatPoly
) -> list[list[RatPoly]]:
    """Kernel basis of a matrix over Q[Y]/(q) by Gauss-Jordan elimination."""
    n = len(m)
    rows = [[entry % q for entry in row] for row in m]
    pivots: dict[int, int] = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if not rows[i][c].is_zero), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = _kinv(rows[r][c], q)
        rows[r] = [_kmul(x, inv, q) for x in rows[r]]
        for i in range(n):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [(x - _kmul(f, y, q)) % q for x, y in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    basis: list[list[RatPoly]] = []
    one = RatPoly((Fraction(1),))
    for free in (c for c in range(n) if c not in pivots):
        v = [RatPoly.zero()] * n
        v[free] = one
        for c, pr in pivots.items():
            v[c] = (-rows[pr][free]) % q
        basis.append(v)
    return basis


def milnor_signatures(
    s_rows: Sequence[Sequence[int]], a_rows: Sequence[Sequence[int]]
) -> MilnorAssignmentComputed:
    """Signature of S restricted to Ker(f(a)) for each monic irreducible
    real quadratic factor f = X^2 - X - lambda of the characteristic
    polynomial; requires the characteristic polynomial squarefree.

    Ker(f(a)) is the eigenspace of the S-self-adjoint b = a^2 - a at
    lambda; the restricted 2x2 Gram matrix lives in Q(lambda) and its
    signature is decided by certified interval signs.  The total is
    reconciled against signature_exact(S)."""
    val = validate_pair(s_rows, a_rows)
    if not val.ok:
        raise ValueError("; ".join(val.problems))
    s, a = as_matrix(s_rows), as_matrix(a_rows)
    p = charpoly(a)
    if not is_squarefree_q(p):
        raise ValueError("Milnor signatures need a squarefree characteristic polynomial")
    factors = irr_r_factors(p)
    total_expected = signature_exact(s)
    if not factors:
        return MilnorAssignmentComputed(factors=(), values=(), kernel_dims=(), total=0)
    q_model = v_polynomial(p)
    minpolys = [f for f, _ in factor_z(q_model).factors]
    b = mat_sub(mat_mul(a, a), a)
    n = len(a)
    values: list[int] = []
    dims: list[int] = []
    for factor in factors:
        iv = factor.v_root_interval
        q = next(
            (
                mp
                for mp in minpolys
                if sturm_count(mp.to_rat(), iv.lo, iv.hi) == 1
            ),
            None,
        )
        if q is None:
            raise KnotsigError("internal error: no minimal polynomial matches the root interval")
        q_rat = q.to_rat().monic()
        # entries of b - Y*I as elements of Q[Y]/(q)
        m = [
            [
                RatPoly((Fraction(b[i][j]), Fraction(-1))) if i == j else RatPoly((Fraction(b[i][j]),))
                for j in range(n)
            ]
            for i in range(n)
        ]
        basis = _kernel_basis_over_field(m, q_rat)
        dims.append(len(basis))
        if len(basis) != 2:
            raise KnotsigError(
                f"internal error: eigenspace dimension {len(basis)}, expected 2"
            )
        v1, v2 = basis

        def gram(u: list[RatPoly], w: list[RatPoly]) -> RatPoly:
            acc = RatPoly.zero()
            for i in range(n):
                if u[i].is_zero:
                    continue
                for j in range(n):
                    if s[i][j] and not w[j].is_zero:
                        acc = acc + s[i][j] * (u[i] * w[j])
            return acc % q_rat

        g11, g12, g22 = gram(v1, v1), gram(v1, v2), gram(v2, v2)
        det_g = (g11 * g22 - g12 * g12) % q_rat
        if det_g.is_zero:
            raise KnotsigError("internal error: restricted form is degenerate")
        if sign_at_root(det_g, q_rat, iv) < 0:
            values.append(0)
            continue
        values.append(2 * sign_at_root(g11, q_rat, iv))
    total = sum(values)
    if total != total_expected:
        raise KnotsigError(
            f"internal error: Milnor values sum to {total}, signature is {total_expected}"
        )
    return MilnorAssignmentComputed(
        factors=tuple(factors), values=tuple(values), kernel_dims=tuple(dims), total=total
    )


# ---------------------------------------------------------------------------
# standard fixtures


def e8_gram() -> Matrix:
    """Gram matrix of the E8 root lattice (simply-laced Dynkin diagram:
    chain 1-3-4-5-6-7-8 with node 2 attached to node 4)."""
    edges = {(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)}
    return tuple(
        tuple(
            2 if i == j else (-1 if (min(i, j), max(i, j)) in edges else 0)
            for j in range(8)
        )
        for i in range(8)
    )


def half_form(gram: Sequence[Sequence[int]]) -> Matrix:
    """Strict upper triangle plus half the (even) diagonal: a Seifert form
    whose symmetrization is the given even Gram matrix."""
    g = as_matrix(gram)
    n = len(g)
    if any(g[i][i] % 2 for i in range(n)):
        raise ValueError("gram matrix must be even")
    return tuple(
        tuple(g[i][i] // 2 if i == j else (g[i][j] if j > i else 0) for j in range(n))
        for i in range(n)
    )


def block_diag(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    am, bm = as_matrix(a), as_matrix(b)
    n, m = len(am), len(bm)
    out = []
    for i in range(n):
        out.append(tuple(am[i]) + (0,) * m)
    for i in range(m):
        out.append((0,) * n + tuple(bm[i]))
    return tuple(out)
