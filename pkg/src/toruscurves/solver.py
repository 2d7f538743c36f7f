"""Witness construction for realizable schemes.

Every solution with gamma_1 = (1,0) has gamma_j = (r_j, m_1j), and all of
them are indexed by one integer parameter kappa:

    r_2 = x*m'_23 + kappa*m'_12        (m'_ij = m_ij / g_123)
    r_3 = y*m'_23 + kappa*m'_13
    g_123 * r_j = y*m_2j - x*m_3j + kappa*m_1j      (j >= 4)

where x*m'_13 - y*m'_12 = 1.  For each prime power p^e || g_123 the set of
workable kappa is a union of residue classes mod p^(e+1); we compute those
classes by direct enumeration rather than by transcribing the case analysis
that proves they are nonempty.  Shifting kappa by g_123 is the stabilizer
of (1,0), so orbits of normalized witnesses are kappa classes mod g_123.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (
    ConstraintViolation,
    DomainError,
    InvalidMatrix,
    InvalidShape,
    PreconditionViolated,
)
from .intarith import ResidueClass, crt, factorize, xgcd
from .scheme import Scheme, curve, get


@dataclass(frozen=True)
class XYWitness:
    """Bezout data for the base triple: x*m13p - y*m12p = 1."""

    x: int
    y: int
    g123: int
    m12p: int
    m13p: int
    m23p: int


@dataclass(frozen=True)
class PrimeConstraint:
    prime: int
    nu: int  # valuation of g_123 at this prime
    modulus: int  # prime ** (nu + 1)
    allowed: tuple  # sorted kappa residues mod modulus


@dataclass(frozen=True)
class KappaConstraintSet:
    per_prime: tuple  # tuple[PrimeConstraint, ...]
    unconstrained: bool

    def feasible(self) -> bool:
        return self.unconstrained or all(pc.allowed for pc in self.per_prime)


@dataclass(frozen=True)
class NormalizedWitness:
    """A witness (1,0), (r_2, m_12), ..., (r_N, m_1N).

    kappa is the solution parameter; for 2-schemes, where no base triple
    exists, it is the representative r itself.
    """

    kappa: int
    r: tuple
    system: tuple


def _require_nonzero(s: Scheme) -> None:
    if any(e == 0 for e in s.entries):
        raise PreconditionViolated("scheme has zero entries; reduce first")


def _base_triple(s: Scheme) -> tuple[int, int, int, int]:
    a, b, c = get(s, 1, 2), get(s, 1, 3), get(s, 2, 3)
    g1, g2, g3 = gcd(a, b), gcd(a, c), gcd(b, c)
    if not g1 == g2 == g3:
        raise PreconditionViolated(
            f"triangle condition fails on (1,2,3): gcds {g1},{g2},{g3}"
        )
    return g1, a, b, c


def solve_xy(s: Scheme) -> XYWitness:
    """Fix a Bezout pair for the base triple of a scheme with n >= 3."""
    if s.n < 3:
        raise DomainError("solve_xy needs at least 3 curves")
    _require_nonzero(s)
    g, a, b, c = _base_triple(s)
    m12p, m13p, m23p = a // g, b // g, c // g
    gg, u, v = xgcd(m13p, m12p)
    if gg != 1:
        raise PreconditionViolated(
            f"gcd(m'_13, m'_12) = {gg} != 1; triangle condition violated"
        )
    x, y = u, -v
    assert x * m13p - y * m12p == 1
    return XYWitness(x, y, g, m12p, m13p, m23p)


def _kappa_ok(s: Scheme, w: XYWitness, p: int, nu: int, kappa: int) -> bool:
    """Does this kappa residue keep every coordinate workable at prime p?

    r_2, r_3 must be units mod p (p always divides m_12 and m_13).  For
    j >= 4 the combination D_j = y*m_2j - x*m_3j + kappa*m_1j must be
    divisible by p^nu so that r_j = D_j / g_123 is integral, and when p
    also divides m_1j the valuation must be exactly nu so that r_j stays a
    unit (when p does not divide m_1j, p | r_j is harmless for gcd(r_j,
    m_1j) = 1).
    """
    r2 = w.x * w.m23p + kappa * w.m12p
    r3 = w.y * w.m23p + kappa * w.m13p
    if r2 % p == 0 or r3 % p == 0:
        return False
    pe = p**nu
    for j in range(4, s.n + 1):
        d = w.y * get(s, 2, j) - w.x * get(s, 3, j) + kappa * get(s, 1, j)
        if d % pe != 0:
            return False
        if get(s, 1, j) % p == 0 and d % (pe * p) == 0:
            return False
    return True


_ENUM_CAP = 10**7


def kappa_constraints(s: Scheme, w: Optional[XYWitness] = None) -> KappaConstraintSet:
    """Allowed kappa residues mod p^(nu_p+1) for each prime p | g_123.

    An empty allowed set for some prime certifies the scheme is not
    realizable; nonemptiness is guaranteed once the gcd, Pluecker and
    valuation conditions all hold.  The residue scan is exhaustive, so a
    prime-power modulus above 10^7 is refused rather than enumerated.
    """
    if w is None:
        w = solve_xy(s)
    if w.g123 == 1:
        return KappaConstraintSet((), unconstrained=True)
    per = []
    for p, nu in factorize(w.g123).pairs:
        modulus = p ** (nu + 1)
        if modulus > _ENUM_CAP:
            raise DomainError(
                f"residue modulus {p}^{nu + 1} exceeds the enumeration cap"
            )
        allowed = tuple(
            k for k in range(modulus) if _kappa_ok(s, w, p, nu, k)
        )
        per.append(PrimeConstraint(p, nu, modulus, allowed))
    return KappaConstraintSet(tuple(per), unconstrained=False)


def canonical_kappa(cons: KappaConstraintSet) -> int:
    """Smallest nonnegative CRT combination of per-prime minimal residues."""
    if cons.unconstrained:
        return 0
    if not cons.feasible():
        raise DomainError("no allowed kappa: scheme is not realizable")
    classes = [
        ResidueClass(pc.modulus, pc.allowed[0]) for pc in cons.per_prime
    ]
    return crt(classes).residue


def construct_witness(s: Scheme, kappa: int) -> NormalizedWitness:
    """Build and re-verify the normalized witness for an allowed kappa."""
    if s.n < 3:
        raise DomainError("construct_witness needs at least 3 curves")
    w = solve_xy(s)
    cons = kappa_constraints(s, w)
    if not cons.unconstrained:
        for pc in cons.per_prime:
            if kappa % pc.modulus not in pc.allowed:
                raise ConstraintViolation(
                    f"kappa={kappa} hits a forbidden class mod {pc.modulus}"
                )
    rs = [w.x * w.m23p + kappa * w.m12p, w.y * w.m23p + kappa * w.m13p]
    for j in range(4, s.n + 1):
        d = w.y * get(s, 2, j) - w.x * get(s, 3, j) + kappa * get(s, 1, j)
        if d % w.g123 != 0:
            raise ConstraintViolation(
                f"kappa={kappa} gives non-integral r_{j}"
            )
        rs.append(d // w.g123)
    system = (curve(1, 0),) + tuple(
        curve(rs[j - 2], get(s, 1, j)) for j in range(2, s.n + 1)
    )
    if not verify_system(s, system):
        raise AssertionError(
            f"internal fault: constructed witness fails verification "
            f"(kappa={kappa}, scheme={s})"
        )
    return NormalizedWitness(kappa, tuple(rs), system)


def solve_pair_orbits(m: int) -> list:
    """Orbit representatives (1,0),(r,m) for a single intersection number.

    There are phi(|m|) of them, one per r in [0,|m|) coprime to m; the
    convention 0 <= r < |m| covers negative m as well.
    """
    if m == 0:
        raise DomainError("m = 0 is handled by zero reduction, not here")
    out = []
    for r in range(abs(m)):
        if gcd(r, abs(m)) == 1:
            out.append(
                NormalizedWitness(r, (r,), (curve(1, 0), curve(r, m)))
            )
    return out


def enumerate_orbits(s: Scheme, limit: Optional[int] = None) -> list:
    """One normalized witness per allowed kappa class mod g_123.

    Orbits are classes of witnesses under the stabilizer of (1,0), which
    shifts every r_j by m_1j at once.  Raises DomainError when the scheme
    is not realizable.
    """
    if s.n == 1:
        return [NormalizedWitness(0, (), (curve(1, 0),))]
    if s.n == 2:
        reps = solve_pair_orbits(get(s, 1, 2))
        return reps if limit is None else reps[:limit]
    _require_nonzero(s)
    w = solve_xy(s)
    cons = kappa_constraints(s, w)
    if not cons.feasible():
        raise DomainError("scheme is not realizable on a torus")
    if cons.unconstrained:
        return [construct_witness(s, 0)]
    # Allowed classes mod g_123 combine independently across primes; pick,
    # for each projected residue mod p^nu, the smallest allowed lift.
    per_prime_choices = []
    for pc in cons.per_prime:
        proj: dict[int, int] = {}
        for k in pc.allowed:
            proj.setdefault(k % p_pow(pc), k)
        per_prime_choices.append(
            [(pc.modulus, lift) for _, lift in sorted(proj.items())]
        )
    out = []
    for combo in _product(per_prime_choices):
        kappa = crt([ResidueClass(m, r % m) for m, r in combo]).residue
        out.append(construct_witness(s, kappa))
        if limit is not None and len(out) >= limit:
            break
    return out


def p_pow(pc: PrimeConstraint) -> int:
    return pc.prime**pc.nu


def _product(choices):
    if not choices:
        yield ()
        return
    for head in choices[0]:
        for rest in _product(choices[1:]):
            yield (head,) + rest


def forbidden_count(s: Scheme, g_l: int) -> int:
    """Number of forbidden kappa residues mod a prime g_l | g_123 (n = 3).

    Equals 1 when g_l divides m'_12 m'_13 m'_23 and 2 otherwise; 0 when
    g_123 = 1, where no prime constrains kappa at all.
    """
    if s.n != 3:
        raise DomainError("forbidden_count is defined for 3-schemes")
    w = solve_xy(s)
    if w.g123 == 1:
        return 0
    if g_l < 2 or w.g123 % g_l != 0:
        raise DomainError(f"{g_l} does not divide g_123 = {w.g123}")
    allowed = sum(
        1
        for k in range(g_l)
        if (w.x * w.m23p + k * w.m12p) % g_l != 0
        and (w.y * w.m23p + k * w.m13p) % g_l != 0
    )
    return g_l - allowed


def sl2_act(a_matrix, system) -> tuple:
    """Apply an SL(2,Z) matrix to every non-Empty vector of a system."""
    (a, b), (c, d) = a_matrix
    if a * d - b * c != 1:
        raise InvalidMatrix(f"determinant is {a * d - b * c}, not 1")
    out = []
    for v in system:
        if v.is_empty:
            out.append(v)
        else:
            out.append(curve(a * v.p + b * v.q, c * v.p + d * v.q))
    return tuple(out)


def verify_system(s: Scheme, system) -> bool:
    """True iff every vector is primitive and all pairwise determinants
    match the scheme (Empty curves contribute 0)."""
    if len(system) != s.n:
        raise InvalidShape(
            f"system has {len(system)} curves, scheme expects {s.n}"
        )
    for v in system:
        if not v.is_primitive():
            return False
    for j in range(2, s.n + 1):
        for i in range(1, j):
            u, v = system[i - 1], system[j - 1]
            det = 0 if (u.is_empty or v.is_empty) else u.p * v.q - v.p * u.q
            if det != get(s, i, j):
                return False
    return True
