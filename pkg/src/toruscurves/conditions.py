"""The three realizability conditions and the torus verdict pipeline.

A scheme with nonzero entries is realized on a torus iff

  * every index triple has equal pairwise gcds (the triangle condition),
  * every index quadruple satisfies the Pluecker relation
        m_ij*m_kl - m_ik*m_jl + m_il*m_jk = 0,
  * for every prime p below the curve count there remains an allowed
    residue class for the solution parameter kappa.

The last condition is classically stated as a bound toz(m;p) < p on an
exact-rational invariant built from p-valuations.  toz_report computes
that invariant literally; the verdict itself is decided by enumerating
kappa residues (solver.kappa_constraints), which is what the bound counts:
the two agree except that the per-column formula can double-count a
forbidden residue shared by two columns, so enumeration is authoritative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Union

from .errors import PreconditionViolated
from .intarith import factorize, valuation
from .scheme import (
    ReductionLog,
    Scheme,
    Unresolvable,
    curve,
    get,
    lift_system,
    reduce_zeros,
)
from .solver import (
    KappaConstraintSet,
    canonical_kappa,
    construct_witness,
    kappa_constraints,
    verify_system,
)

# ---------------------------------------------------------------------------
# Failure reasons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FailedTriangle:
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class FailedPluecker:
    i: int
    j: int
    k: int
    l: int


@dataclass(frozen=True)
class FailedToz:
    prime: int
    total: Fraction


@dataclass(frozen=True)
class UnresolvableZero:
    i: int
    j: int


Reason = Union[FailedTriangle, FailedPluecker, FailedToz, UnresolvableZero]


@dataclass(frozen=True)
class TriangleCheck:
    ok: bool
    failures: tuple  # tuple[FailedTriangle, ...]
    gcds: dict  # (i,j,k) -> common gcd, only on pass

    @property
    def failure(self) -> Optional[FailedTriangle]:
        return self.failures[0] if self.failures else None


@dataclass(frozen=True)
class PlueckerCheck:
    ok: bool
    failures: tuple  # tuple[FailedPluecker, ...]

    @property
    def failure(self) -> Optional[FailedPluecker]:
        return self.failures[0] if self.failures else None


# ---------------------------------------------------------------------------
# Triangle and Pluecker conditions
# ---------------------------------------------------------------------------


def check_triangle(s: Scheme) -> TriangleCheck:
    """Equal pairwise gcds on every index triple; exposes g_ijk on pass."""
    if any(e == 0 for e in s.entries):
        raise PreconditionViolated("zero entries: apply reduce_zeros first")
    failures = []
    gcds = {}
    for i, j, k in combinations(range(1, s.n + 1), 3):
        a, b, c = get(s, i, j), get(s, i, k), get(s, j, k)
        g1, g2, g3 = gcd(a, b), gcd(a, c), gcd(b, c)
        if g1 == g2 == g3:
            gcds[(i, j, k)] = g1
        else:
            failures.append(FailedTriangle(i, j, k))
    return TriangleCheck(not failures, tuple(failures), gcds if not failures else {})


def pluecker_mu(s: Scheme, i: int, j: int, k: int, l: int) -> int:
    """mu_ijkl = m_ij*m_kl - m_ik*m_jl + m_il*m_jk."""
    if not (1 <= i < j < k < l <= s.n):
        raise IndexError(f"need 1 <= i<j<k<l <= {s.n}, got ({i},{j},{k},{l})")
    return (
        get(s, i, j) * get(s, k, l)
        - get(s, i, k) * get(s, j, l)
        + get(s, i, l) * get(s, j, k)
    )


def check_pluecker_full(s: Scheme) -> PlueckerCheck:
    """All C(n,4) Pluecker relations; vacuous pass for n < 4."""
    failures = tuple(
        FailedPluecker(i, j, k, l)
        for i, j, k, l in combinations(range(1, s.n + 1), 4)
        if pluecker_mu(s, i, j, k, l) != 0
    )
    return PlueckerCheck(not failures, failures)


def check_pluecker_reduced(s: Scheme) -> PlueckerCheck:
    """Only the (n-3)(n-2)/2 relations mu_{1,i,i+1,j}; equivalent to the
    full check when no entry vanishes."""
    if any(e == 0 for e in s.entries):
        raise PreconditionViolated("zero entries: apply reduce_zeros first")
    failures = tuple(
        FailedPluecker(1, i, i + 1, j)
        for i in range(2, s.n - 1)
        for j in range(i + 2, s.n + 1)
        if pluecker_mu(s, 1, i, i + 1, j) != 0
    )
    return PlueckerCheck(not failures, failures)


def pluecker_identity(s: Scheme, a: int, b: int, c: int, d: int, e: int) -> int:
    """m_ae*mu_abcd - m_ad*mu_abce + m_ac*mu_abde - m_ab*mu_acde.

    Identically zero on any scheme; exposed as a self-test oracle.
    """
    idx = (a, b, c, d, e)
    if len(set(idx)) != 5 or not all(1 <= t <= s.n for t in idx):
        raise IndexError(f"need five distinct valid indices, got {idx}")

    def mu(p, q, r, t):
        return (
            get(s, p, q) * get(s, r, t)
            - get(s, p, r) * get(s, q, t)
            + get(s, p, t) * get(s, q, r)
        )

    return (
        get(s, a, e) * mu(a, b, c, d)
        - get(s, a, d) * mu(a, b, c, e)
        + get(s, a, c) * mu(a, b, d, e)
        - get(s, a, b) * mu(a, c, d, e)
    )


# ---------------------------------------------------------------------------
# toz
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeTozEntry:
    prime: int
    nu: int  # valuation of g_123
    valuations: dict  # (i,j) -> valuation of m_ij
    contributions: tuple  # Fractions, one per column j = 2..n
    total: Fraction


@dataclass(frozen=True)
class TozReport:
    base_gcd: int
    per_prime: tuple  # tuple[PrimeTozEntry, ...], one per prime of base_gcd
    checked_primes: tuple  # ((p, total) for primes p < n)

    def total_for(self, p: int) -> Fraction:
        for entry in self.per_prime:
            if entry.prime == p:
                return entry.total
        return Fraction(0)


def _primes_below(n: int):
    out = []
    for c in range(2, n):
        if all(c % p for p in out):
            out.append(c)
    return out


def toz_report(s: Scheme) -> TozReport:
    """Exact-rational valuation invariant with respect to the base triple.

    For each prime p | g_123 with nu = nu_p(g_123), column j contributes

        1                      j = 2,
        1                      j = 3 and nu_p(m_13) = nu_p(m_23) = nu_p(m_12) > 0,
        p^(nu_j - nu)          j >= 4 and 0 < nu_p(m_1j) = nu_p(m_2j) = nu_p(m_3j) = nu_j <= nu,
        0                      otherwise,

    and toz(m;p) is the column sum.  Primes not dividing g_123 total 0.
    """
    if s.n < 3:
        raise PreconditionViolated("toz needs at least 3 curves")
    if any(e == 0 for e in s.entries):
        raise PreconditionViolated("zero entries: apply reduce_zeros first")
    a, b, c = get(s, 1, 2), get(s, 1, 3), get(s, 2, 3)
    g1, g2, g3 = gcd(a, b), gcd(a, c), gcd(b, c)
    if not g1 == g2 == g3:
        raise PreconditionViolated(
            f"triangle condition fails on base triple: gcds {g1},{g2},{g3}"
        )
    g123 = g1
    per = []
    for p, nu in factorize(g123).pairs:
        vals = {
            (i, j): valuation(get(s, i, j), p)
            for j in range(2, s.n + 1)
            for i in range(1, j)
        }
        contribs = [Fraction(1)]  # column j = 2
        if s.n >= 3:
            v12, v13, v23 = vals[(1, 2)], vals[(1, 3)], vals[(2, 3)]
            contribs.append(
                Fraction(1) if 0 < v13 == v23 == v12 else Fraction(0)
            )
        for j in range(4, s.n + 1):
            v1, v2, v3 = vals[(1, j)], vals[(2, j)], vals[(3, j)]
            if 0 < v1 == v2 == v3 <= nu:
                contribs.append(Fraction(p) ** (v1 - nu))
            else:
                contribs.append(Fraction(0))
        per.append(
            PrimeTozEntry(p, nu, vals, tuple(contribs), sum(contribs))
        )
    totals = {e.prime: e.total for e in per}
    checked = tuple(
        (p, totals.get(p, Fraction(0))) for p in _primes_below(s.n)
    )
    return TozReport(g123, tuple(per), checked)


def check_circledast(s: Scheme):
    """Remaining-allowed-kappa condition for every prime below n.

    Returns None on pass, else FailedToz(p, total) for the first prime
    whose kappa residues are all forbidden; the reported total is the
    per-column toz value.  For primes not dividing g_123 the condition is
    vacuous.  Meaningful once the triangle and Pluecker conditions hold,
    which is the order decide_torus uses.
    """
    if s.n <= 2:
        return None
    report = toz_report(s)
    cons = kappa_constraints(s)
    empty = {
        pc.prime for pc in cons.per_prime if not pc.allowed
    }
    for p, total in report.checked_primes:
        if p in empty:
            return FailedToz(p, total)
    return None


def _circledast_failures(s: Scheme, cons: KappaConstraintSet, report: TozReport):
    empty = {pc.prime for pc in cons.per_prime if not pc.allowed}
    return tuple(
        FailedToz(p, total)
        for p, total in report.checked_primes
        if p in empty
    )


# ---------------------------------------------------------------------------
# Quick sufficient screens
# ---------------------------------------------------------------------------

SUFFICIENT_PASS = "sufficient_pass"
SUFFICIENT_FAIL = "sufficient_fail"
INCONCLUSIVE = "inconclusive"


def quick_screen(s: Scheme) -> str:
    """Shortcut verdicts that avoid the full valuation check.

    Assumes the triangle and Pluecker conditions are already verified.
    Passes when some triple gcd is 1 or has no prime factor below n+1;
    fails when some prime p < n has constant positive valuation on every
    entry; otherwise inconclusive.
    """
    tri = check_triangle(s)
    if not tri.ok:
        raise PreconditionViolated("triangle condition must hold first")
    primes = _primes_below(s.n + 1)
    for g in tri.gcds.values():
        if g == 1 or all(g % p for p in primes):
            return SUFFICIENT_PASS
    for p in _primes_below(s.n):
        vs = {valuation(e, p) for e in s.entries}
        if len(vs) == 1 and vs.pop() > 0:
            return SUFFICIENT_FAIL
    return INCONCLUSIVE


# ---------------------------------------------------------------------------
# Full verdict
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    reasons: tuple  # tuple[Reason, ...]; empty iff realizable
    witness: Optional[tuple]  # CurveSystem on the original indexing
    used_empty: bool
    reduction: Optional[ReductionLog]
    kappa: Optional[int] = None
    toz: Optional[TozReport] = None
    constraints: Optional[KappaConstraintSet] = None

    @property
    def status(self) -> str:
        return "Realizable" if self.realizable else "NotRealizable"


def _map_indices(survivors, *idx):
    return tuple(survivors[t - 1] for t in idx)


def decide_torus(s: Scheme) -> Verdict:
    """Full pipeline: zero reduction, triangle, Pluecker, kappa residues,
    witness construction.  Realizable verdicts carry a verified witness
    lifted back through the reduction; failure reasons use the original
    curve indices and list every failure found in the failing stage.
    """
    red = reduce_zeros(s)
    if isinstance(red, Unresolvable):
        return Verdict(
            False,
            (UnresolvableZero(red.i, red.j),),
            None,
            False,
            None,
        )
    r = red.reduced
    if r.n == 1:
        system = lift_system(red, (curve(1, 0),))
        return _realizable(s, red, system, None, None, None)
    if r.n == 2:
        m = get(r, 1, 2)
        rep = 0 if abs(m) == 1 else 1
        system = lift_system(red, (curve(1, 0), curve(rep, m)))
        return _realizable(s, red, system, rep, None, None)

    tri = check_triangle(r)
    if not tri.ok:
        reasons = tuple(
            FailedTriangle(*_map_indices(red.survivors, f.i, f.j, f.k))
            for f in tri.failures
        )
        return Verdict(False, reasons, None, False, red)

    plk = check_pluecker_full(r)
    if not plk.ok:
        reasons = tuple(
            FailedPluecker(*_map_indices(red.survivors, f.i, f.j, f.k, f.l))
            for f in plk.failures
        )
        return Verdict(False, reasons, None, False, red)

    report = toz_report(r)
    cons = kappa_constraints(r)
    toz_fail = _circledast_failures(r, cons, report)
    if toz_fail:
        return Verdict(False, toz_fail, None, False, red, toz=report,
                       constraints=cons)
    if not cons.feasible():
        # A prime >= n with no allowed residue cannot occur once the three
        # conditions hold; reaching this line means an internal fault.
        raise AssertionError(f"internal fault: empty kappa set on {r}")

    kappa = canonical_kappa(cons)
    witness = construct_witness(r, kappa)
    system = lift_system(red, witness.system)
    return _realizable(s, red, system, kappa, report, cons)


def _realizable(s, red, system, kappa, report, cons) -> Verdict:
    if not verify_system(s, system):
        raise AssertionError(
            f"internal fault: lifted witness fails verification on {s}"
        )
    used_empty = any(v.is_empty for v in system)
    return Verdict(True, (), system, used_empty, red, kappa=kappa,
                   toz=report, constraints=cons)
