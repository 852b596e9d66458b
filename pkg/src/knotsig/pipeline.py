"""Decision pipeline: from (Delta, m, target) to a realizability verdict.

The verdict taxonomy is deliberately four-valued.  OUT_OF_SCOPE means the
input violates a structural assumption (conditions on Delta, or the
companion polynomial is not a squarefree product of symmetric factors).
NOT_ADMISSIBLE means an arithmetic gate fails: the signature must be
divisible by 8 (by 16 when m = 3), bounded by rho, and reachable by some
Milnor assignment.  When the gates pass, a trivial obstruction group means
REALIZABLE; a nonzero group means the answer depends on an evaluation this
tool does not perform, reported as OBSTRUCTION_UNKNOWN rather than guessed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .errors import KnotsigError
from .milnor import enumerate_sign_tuples, expected_count, mil_nonempty
from .polys import IntPoly, alexander_check, delta_to_p, poly_text, symmetric_check
from .realroots import rho_delta, rho_p
from .obstruction import ObstructionGroup, PiEntry, obstruction_group
from .zfactor import FactorizationZ, SymmetricFactorSet, factor_z
from .version import TOOL_VERSION

VERDICT_REALIZABLE = "REALIZABLE"
VERDICT_NOT_ADMISSIBLE = "NOT_ADMISSIBLE"
VERDICT_OBSTRUCTION_UNKNOWN = "OBSTRUCTION_UNKNOWN"
VERDICT_OUT_OF_SCOPE = "OUT_OF_SCOPE"

MAX_LISTED_ASSIGNMENTS = 128


@dataclass(frozen=True)
class AnalysisRequest:
    """A target: Delta plus the knot dimension m (3 mod 4), and either a
    signature s or an explicit assignment tau."""

    delta: IntPoly
    m: int
    signature: int | None = None
    tau: tuple[int, ...] | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 3 or self.m % 4 != 3:
            raise ValueError(f"knot dimension m = {self.m} must be >= 3 with m = 3 (mod 4)")
        if (self.signature is None) == (self.tau is None):
            raise ValueError("provide exactly one of a signature or an assignment tau")
        if self.tau is not None and any(v not in (-2, 2) for v in self.tau):
            raise ValueError("tau values must be -2 or +2")


@dataclass(eq=True)
class AnalysisReport:
    """Everything the pipeline computed, JSON-ready.  Polynomials appear
    as ascending coefficient lists."""

    verdict: str
    m: int
    s: int | None
    seed: int
    tool_version: str
    conditions: dict[str, Any] | None = None
    p: list[int] | None = None
    factors: dict[str, Any] | None = None
    rho: int | None = None
    pi_table: list[dict[str, Any]] | None = None
    group: dict[str, Any] | None = None
    mil: dict[str, Any] | None = None
    witnesses: dict[str, Any] = field(default_factory=dict)
    epsilon_status: str | None = None
    reason: str | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "AnalysisReport":
        return AnalysisReport(**data)


def _conditions_dict(delta: IntPoly) -> dict[str, Any]:
    rep = alexander_check(delta)
    return {
        "degree_even": rep.degree_even,
        "reciprocal": rep.cond_reciprocal,
        "value_at_one": rep.cond_at_one,
        "square_at_minus_one": rep.cond_at_minus_one,
        "n": rep.n,
        "delta_minus_one": rep.delta_minus_one,
        "square_root_witness": rep.square_root_witness,
    }


def _condition_failure(delta: IntPoly) -> str | None:
    rep = alexander_check(delta)
    if not rep.degree_even:
        return "the degree is odd, so Delta(X) = X^2n * Delta(1/X) fails"
    if not rep.cond_reciprocal:
        return "the coefficients are not palindromic: Delta(X) != X^2n * Delta(1/X)"
    if not rep.cond_at_one:
        return f"Delta(1) = {delta.evaluate(1)} instead of (-1)^n = {(-1) ** rep.n}"
    if not rep.cond_at_minus_one:
        return f"Delta(-1) = {rep.delta_minus_one} is not a perfect square"
    return None


def _factors_dict(fz: FactorizationZ, sfs: SymmetricFactorSet) -> dict[str, Any]:
    return {
        "content": fz.content,
        "factors": [
            {
                "coeffs": list(q.coeffs),
                "multiplicity": e,
                "symmetric": symmetric_check(q),
            }
            for q, e in fz.factors
        ],
        "squarefree": sfs.squarefree,
        "all_symmetric": sfs.all_symmetric,
    }


def _pi_table_dicts(table: list[PiEntry]) -> list[dict[str, Any]]:
    return [
        {
            "pair": list(entry.pair),
            "primes": list(entry.primes),
            "witnesses": [[p, list(w.coeffs)] for p, w in entry.witnesses],
        }
        for entry in table
    ]


def _group_dict(group: ObstructionGroup) -> dict[str, Any]:
    return {"components": [list(c) for c in group.components], "rank": group.rank}


def _first_assignment(k: int, s: int) -> list[int]:
    n_plus = (s + 2 * k) // 4
    return [2] * n_plus + [-2] * (k - n_plus)


def _indecomposability_note(delta: IntPoly, s: int, mod_required: int, seed: int) -> str | None:
    """When every irreducible factor of Delta has rho below the signature
    modulus, a nonzero-signature knot cannot split as a connected sum."""
    if s == 0:
        return None
    fz = factor_z(delta, seed)
    if len(fz.factors) < 2:
        return None
    rhos = []
    for q, _ in fz.factors:
        rep = alexander_check(q)
        if not rep.cond_reciprocal or q.evaluate(1) == 0 or q.evaluate(-1) == 0:
            return None
        r = rho_delta(q)
        if r >= mod_required:
            return None
        rhos.append(r)
    return (
        f"every irreducible factor of Delta has rho < {mod_required}, forcing factor "
        f"signature 0; a knot realizing signature {s} with this Alexander polynomial "
        "is therefore indecomposable"
    )


def _analyze_common(req: AnalysisRequest) -> tuple[AnalysisReport, SymmetricFactorSet | None]:
    """Stages shared by the signature and tau entry points: conditions on
    Delta, standing assumptions on P, and rho.  The obstruction group is
    attached later, only once the admissibility gates pass."""
    delta, m, seed = req.delta, req.m, req.seed
    report = AnalysisReport(
        verdict="",
        m=m,
        s=req.signature,
        seed=seed,
        tool_version=TOOL_VERSION,
    )
    report.conditions = _conditions_dict(delta)
    failure = _condition_failure(delta)
    if failure is not None:
        report.verdict = VERDICT_OUT_OF_SCOPE
        report.reason = failure
        return report, None

    p_poly = delta_to_p(delta)
    report.p = list(p_poly.coeffs)
    fz = factor_z(p_poly, seed)
    sfs = SymmetricFactorSet(
        factors=tuple(q for q, _ in fz.factors),
        all_symmetric=p_poly.is_monic and all(symmetric_check(q) for q, _ in fz.factors),
        squarefree=fz.is_squarefree,
    )
    report.factors = _factors_dict(fz, sfs)
    if not sfs.squarefree:
        report.verdict = VERDICT_OUT_OF_SCOPE
        report.reason = "the companion polynomial P is not squarefree"
        return report, None
    if not sfs.all_symmetric:
        bad = next(q for q, _ in fz.factors if not symmetric_check(q))
        report.verdict = VERDICT_OUT_OF_SCOPE
        report.reason = f"irreducible factor {poly_text(bad)} of P is not fixed by X -> 1-X"
        return report, None

    rho = rho_delta(delta)
    if rho != rho_p(p_poly):
        raise KnotsigError("internal error: rho(Delta) and rho(P) disagree")
    report.rho = rho
    return report, sfs


def _attach_group(report: AnalysisReport, sfs: SymmetricFactorSet, seed: int) -> int:
    """Compute the prime table and the obstruction group; returns the rank."""
    group, table = obstruction_group(sfs, seed)
    report.pi_table = _pi_table_dicts(table)
    report.group = _group_dict(group)
    report.epsilon_status = (
        "trivially zero" if group.rank == 0 else "requires external evaluation"
    )
    return group.rank


def analyze(req: AnalysisRequest) -> AnalysisReport:
    """Verdict for the target signature req.signature."""
    if req.signature is None:
        raise ValueError("analyze needs a target signature; use analyze_tau for assignments")
    report, sfs = _analyze_common(req)
    if report.verdict:
        return report
    assert sfs is not None
    s, m = req.signature, req.m
    rho = report.rho
    assert rho is not None
    mod_required = 16 if m == 3 else 8

    if s % mod_required != 0:
        report.verdict = VERDICT_NOT_ADMISSIBLE
        report.reason = (
            f"signature {s} is not divisible by {mod_required} "
            f"(required for knot dimension m = {m})"
        )
        return report
    if abs(s) > rho:
        report.verdict = VERDICT_NOT_ADMISSIBLE
        report.reason = f"|s| = {abs(s)} exceeds the unit-circle root count rho = {rho}"
        return report
    k = rho // 2
    count = expected_count(rho, s)
    report.mil = {"rho": rho, "s": s, "count": count}
    if count <= MAX_LISTED_ASSIGNMENTS:
        report.mil["assignments"] = [list(t) for t in enumerate_sign_tuples(k, s)]
    if not mil_nonempty(rho, s):
        report.verdict = VERDICT_NOT_ADMISSIBLE
        report.reason = f"no assignment of +-2 over {k} factors sums to {s}"
        return report

    rank = _attach_group(report, sfs, req.seed)
    if rank == 0:
        report.verdict = VERDICT_REALIZABLE
        report.witnesses["tau"] = _first_assignment(k, s)
        note = _indecomposability_note(req.delta, s, mod_required, req.seed)
        if note:
            report.notes.append(note)
    else:
        report.verdict = VERDICT_OBSTRUCTION_UNKNOWN
        report.notes.append(
            "the obstruction group is nonzero; deciding realizability needs an "
            "evaluation outside this tool's scope"
        )
    return report


def analyze_tau(req: AnalysisRequest) -> AnalysisReport:
    """Verdict for an explicit Milnor assignment tau (one value per
    unit-circle factor, in sorted interval order)."""
    if req.tau is None:
        raise ValueError("analyze_tau needs an assignment tau")
    report, sfs = _analyze_common(req)
    if report.verdict:
        return report
    assert sfs is not None
    rho = report.rho
    assert rho is not None
    k = rho // 2
    if len(req.tau) != k:
        raise ValueError(
            f"tau must assign one value to each of the {k} unit-circle factors; got {len(req.tau)}"
        )
    s = sum(req.tau)
    report.s = s
    report.mil = {"tau": list(req.tau), "sum": s}
    mod_required = 16 if req.m == 3 else 8
    if s % mod_required != 0:
        report.verdict = VERDICT_NOT_ADMISSIBLE
        report.reason = (
            f"the assignment sums to {s}, which is not divisible by {mod_required} "
            f"(required for knot dimension m = {req.m})"
        )
        return report
    rank = _attach_group(report, sfs, req.seed)
    if rank == 0:
        report.verdict = VERDICT_REALIZABLE
        report.witnesses["tau"] = list(req.tau)
    else:
        report.verdict = VERDICT_OBSTRUCTION_UNKNOWN
        report.notes.append(
            "the obstruction group is nonzero; deciding realizability needs an "
            "evaluation outside this tool's scope"
        )
    return report


# ---------------------------------------------------------------------------
# rendering


def report_render(report: AnalysisReport, fmt: str = "text") -> str:
    """Deterministic rendering; ``json`` round-trips through
    :func:`report_from_json`."""
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}; use 'json' or 'text'")
    lines = [f"verdict: {report.verdict}"]
    target = f"m = {report.m}" + (f", target signature s = {report.s}" if report.s is not None else "")
    lines.append(target)
    if report.reason:
        lines.append(f"reason: {report.reason}")
    if report.conditions:
        c = report.conditions
        lines.append(
            "conditions: even degree {0}, reciprocal {1}, Delta(1) = (-1)^n {2}, "
            "Delta(-1) square {3} (Delta(-1) = {4})".format(
                _yn(c["degree_even"]),
                _yn(c["reciprocal"]),
                _yn(c["value_at_one"]),
                _yn(c["square_at_minus_one"]),
                c["delta_minus_one"],
            )
        )
    if report.p is not None:
        lines.append(f"P = {poly_text(IntPoly(report.p))}")
    if report.factors is not None:
        for i, f in enumerate(report.factors["factors"]):
            tag = "symmetric" if f["symmetric"] else "NOT symmetric"
            mult = f" ^{f['multiplicity']}" if f["multiplicity"] > 1 else ""
            lines.append(f"  factor {i}: {poly_text(IntPoly(f['coeffs']))}{mult} ({tag})")
    if report.rho is not None:
        lines.append(f"rho = {report.rho}")
    if report.pi_table is not None:
        for entry in report.pi_table:
            i, j = entry["pair"]
            primes = "{" + ", ".join(map(str, entry["primes"])) + "}"
            lines.append(f"  primes({i},{j}) = {primes}")
            for p, w in entry["witnesses"]:
                lines.append(f"    witness mod {p}: {poly_text(IntPoly(w))}")
    if report.group is not None:
        comps = " | ".join("{" + ", ".join(map(str, c)) + "}" for c in report.group["components"])
        lines.append(f"components: {comps}")
        lines.append(f"group: rank {report.group['rank']} (order 2^{report.group['rank']})")
    if report.mil is not None:
        if "count" in report.mil:
            lines.append(f"Milnor assignments summing to {report.mil['s']}: {report.mil['count']}")
        else:
            lines.append(f"tau = {report.mil['tau']} (sum {report.mil['sum']})")
    if report.epsilon_status:
        lines.append(f"epsilon status: {report.epsilon_status}")
    if report.witnesses.get("tau"):
        lines.append(f"witness tau: {report.witnesses['tau']}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def report_from_json(text: str) -> AnalysisReport:
    return AnalysisReport.from_dict(json.loads(text))


def _yn(flag: bool) -> str:
    return "yes" if flag else "NO"
