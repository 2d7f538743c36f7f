"""Exact integer kernels: extended gcd, prime-power inverses, CRT,
factorization, p-adic valuations and Euler's totient.

Everything here works on arbitrary-precision Python integers; there is no
overflow regime anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DomainError, InvalidModuli, NotInvertible

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_DIVISION_BOUND = 10**6


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes increasing."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


@dataclass(frozen=True)
class ResidueClass:
    """A residue class r mod m with 0 <= r < m."""

    modulus: int
    residue: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise DomainError(
                f"residue {self.residue} not in [0, {self.modulus})"
            )


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(|a|, |b|) >= 0 and a*x + b*y = g.

    The Bezout pair is whatever the iterative algorithm yields; only the
    identity is guaranteed.  gcd(0, 0) = 0.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def inv_mod_prime_power(a: int, p: int, e: int) -> int:
    """Inverse of a modulo p**e for prime p with p not dividing a."""
    if e < 1:
        raise DomainError(f"exponent must be >= 1, got {e}")
    if a % p == 0:
        raise NotInvertible(f"{a} is divisible by {p}")
    return pow(a, -1, p**e)


def crt(classes: list[ResidueClass]) -> ResidueClass:
    """Combine residue classes with pairwise coprime moduli.

    Returns the unique class modulo the product of the moduli that reduces
    to every input class.
    """
    if not classes:
        return ResidueClass(1, 0)
    modulus, residue = classes[0].modulus, classes[0].residue
    for cls in classes[1:]:
        g, x, _ = xgcd(modulus, cls.modulus)
        if g != 1:
            raise InvalidModuli(
                f"moduli {modulus} and {cls.modulus} share factor {g}"
            )
        # residue + modulus * t == cls.residue (mod cls.modulus)
        t = ((cls.residue - residue) * x) % cls.modulus
        residue = residue + modulus * t
        modulus *= cls.modulus
        residue %= modulus
    return ResidueClass(modulus, residue)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed, 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 1.

    Trial division up to 10^6, then Miller-Rabin plus Pollard rho for any
    leftover cofactor.  factorize(1) has no pairs.
    """
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2  # alternate 5,7,11,13,... (skip multiples of 2 and 3)
    bound = min(isqrt(n), _TRIAL_DIVISION_BOUND)
    while p <= bound:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
            bound = min(isqrt(n), _TRIAL_DIVISION_BOUND)
        p += step
        step = 6 - step
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_probable_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return Factorization(tuple(sorted(out.items())))


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n; n must be nonzero."""
    if n == 0:
        raise DomainError("valuation of 0 is undefined here")
    if p < 2:
        raise DomainError(f"p must be prime, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def euler_phi(m: int) -> int:
    """Euler's totient of m >= 1."""
    if m < 1:
        raise DomainError(f"euler_phi needs m >= 1, got {m}")
    out = m
    for p, _ in factorize(m).pairs:
        out = out // p * (p - 1)
    return out
