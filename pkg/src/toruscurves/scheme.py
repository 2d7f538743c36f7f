"""Intersection schemes and curve classes on the torus.

An n-scheme prescribes the pairwise algebraic intersection numbers m_ij of
n ordered curves.  Entries are stored in column order

    m_12; m_13, m_23; m_14, m_24, m_34; ...

so the block for column j holds (m_1j, ..., m_{j-1,j}).  A curve class on
the torus is a primitive integer vector (p, q); an Empty class intersects
everything zero times.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .errors import InvalidPermutation, InvalidShape


@dataclass(frozen=True)
class CurveClass:
    """Oriented isotopy class: an integer vector (p, q), or Empty.

    The Empty class is represented by p = q = None.  Primitivity is not
    enforced at construction; verify_system checks it where it matters.
    """

    p: Optional[int]
    q: Optional[int]

    @property
    def is_empty(self) -> bool:
        return self.p is None

    def is_primitive(self) -> bool:
        if self.is_empty:
            return True
        return (self.p, self.q) != (0, 0) and gcd(abs(self.p), abs(self.q)) == 1

    def negated(self) -> "CurveClass":
        if self.is_empty:
            return self
        return CurveClass(-self.p, -self.q)

    def __repr__(self) -> str:
        if self.is_empty:
            return "Empty"
        return f"({self.p},{self.q})"


EMPTY_CURVE = CurveClass(None, None)


def curve(p: int, q: int) -> CurveClass:
    return CurveClass(p, q)


CurveSystem = tuple  # tuple[CurveClass, ...]


@dataclass(frozen=True)
class Scheme:
    """Upper-triangular table of intersection numbers, column order."""

    n: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidShape(f"need n >= 1, got n={self.n}")
        want = self.n * (self.n - 1) // 2
        if len(self.entries) != want:
            raise InvalidShape(
                f"n={self.n} needs {want} entries, got {len(self.entries)}"
            )

    def get(self, i: int, j: int) -> int:
        return get(self, i, j)

    def __repr__(self) -> str:
        return f"Scheme(n={self.n}, {list(self.entries)})"


def new_scheme(n: int, entries) -> Scheme:
    """Validated scheme from an entry sequence in column order."""
    return Scheme(n, tuple(int(e) for e in entries))


def _pos(i: int, j: int) -> int:
    # column-order index of m_ij for 1 <= i < j
    return (j - 1) * (j - 2) // 2 + (i - 1)


def get(s: Scheme, i: int, j: int) -> int:
    """m_ij for i < j, -m_ji for i > j; the diagonal is undefined."""
    if i == j or not (1 <= i <= s.n and 1 <= j <= s.n):
        raise IndexError(f"bad index pair ({i},{j}) for n={s.n}")
    if i < j:
        return s.entries[_pos(i, j)]
    return -s.entries[_pos(j, i)]


def permute(s: Scheme, sigma) -> Scheme:
    """Relabel curves by sigma: entry (i,j) of the result is m_{sigma(i)sigma(j)}
    under the antisymmetric accessor (so a sign flips when sigma reverses
    the order of a pair).
    """
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, s.n + 1)):
        raise InvalidPermutation(f"{sigma} is not a permutation of 1..{s.n}")
    out = [
        get(s, sigma[i - 1], sigma[j - 1])
        for j in range(2, s.n + 1)
        for i in range(1, j)
    ]
    return Scheme(s.n, tuple(out))


def scheme_sum(a: Scheme, b: Scheme) -> Scheme:
    """Entrywise sum of two schemes of the same size."""
    if a.n != b.n:
        raise InvalidShape(f"size mismatch: {a.n} vs {b.n}")
    return Scheme(a.n, tuple(x + y for x, y in zip(a.entries, b.entries)))


def zero_scheme(n: int) -> Scheme:
    return Scheme(n, (0,) * (n * (n - 1) // 2))


# ---------------------------------------------------------------------------
# Zero-entry reduction
# ---------------------------------------------------------------------------

DUPLICATE = "duplicate_of"
EMPTY = "empty"


@dataclass(frozen=True)
class ReductionStep:
    """One curve removal.  Indices are 1-based positions in the scheme as it
    was just before this step."""

    removed_index: int
    reason: str  # DUPLICATE or EMPTY
    of_index: Optional[int] = None  # for DUPLICATE: the surviving twin
    sign: Optional[int] = None  # for DUPLICATE: +1 parallel, -1 reversed


@dataclass(frozen=True)
class ReductionLog:
    steps: tuple  # tuple[ReductionStep, ...]
    reduced: Scheme
    survivors: tuple  # original 1-based indices of the reduced curves


@dataclass(frozen=True)
class Unresolvable:
    """A zero entry admits no duplicate/empty resolution; this certifies
    non-realizability on the torus.  Indices are original positions."""

    i: int
    j: int
    steps: tuple
    partial: Scheme
    survivors: tuple


def _drop_curve(s: Scheme, k: int) -> Scheme:
    keep = [t for t in range(1, s.n + 1) if t != k]
    out = [
        get(s, keep[i], keep[j])
        for j in range(1, len(keep))
        for i in range(j)
    ]
    return Scheme(s.n - 1, tuple(out))


def _row_equal(s: Scheme, i: int, j: int, sign: int) -> bool:
    # rows compared on all indices other than i and j
    return all(
        get(s, i, k) == sign * get(s, j, k)
        for k in range(1, s.n + 1)
        if k not in (i, j)
    )


def _row_zero(s: Scheme, i: int) -> bool:
    return all(get(s, i, k) == 0 for k in range(1, s.n + 1) if k != i)


def reduce_zeros(s: Scheme) -> Union[ReductionLog, Unresolvable]:
    """Eliminate zero entries by dropping duplicate or empty curves.

    Zero pairs are scanned in lexicographic order and the first resolvable
    one is applied; for duplicates the larger index is dropped.  The result
    has no zero entries (n=1 has none by shape).  If a pass finds zero
    entries but can resolve none of them, that certifies the scheme is not
    realizable on a torus and Unresolvable is returned.
    """
    cur = s
    steps = []
    survivors = list(range(1, s.n + 1))
    while True:
        zero_pairs = [
            (i, j)
            for j in range(2, cur.n + 1)
            for i in range(1, j)
            if get(cur, i, j) == 0
        ]
        zero_pairs.sort()
        if not zero_pairs:
            return ReductionLog(tuple(steps), cur, tuple(survivors))
        resolved = False
        for i, j in zero_pairs:
            if _row_equal(cur, i, j, +1):
                steps.append(ReductionStep(j, DUPLICATE, of_index=i, sign=+1))
                cur = _drop_curve(cur, j)
                del survivors[j - 1]
            elif _row_equal(cur, i, j, -1):
                steps.append(ReductionStep(j, DUPLICATE, of_index=i, sign=-1))
                cur = _drop_curve(cur, j)
                del survivors[j - 1]
            elif _row_zero(cur, i):
                steps.append(ReductionStep(i, EMPTY))
                cur = _drop_curve(cur, i)
                del survivors[i - 1]
            elif _row_zero(cur, j):
                steps.append(ReductionStep(j, EMPTY))
                cur = _drop_curve(cur, j)
                del survivors[j - 1]
            else:
                continue
            resolved = True
            break
        if not resolved:
            i, j = zero_pairs[0]
            return Unresolvable(
                survivors[i - 1], survivors[j - 1], tuple(steps), cur,
                tuple(survivors),
            )


def replay_reduction(log: ReductionLog) -> Scheme:
    """Rebuild the original scheme from the log; inverse of reduce_zeros."""
    cur = log.reduced
    for step in reversed(log.steps):
        n_new = cur.n + 1
        r = step.removed_index

        def old_to_cur(t: int) -> int:
            return t if t < r else t - 1

        entries = []
        for j in range(2, n_new + 1):
            for i in range(1, j):
                if i != r and j != r:
                    entries.append(get(cur, old_to_cur(i), old_to_cur(j)))
                    continue
                other = j if i == r else i
                if step.reason == EMPTY:
                    entries.append(0)
                elif other == step.of_index:
                    entries.append(0)
                else:
                    val = step.sign * get(cur, old_to_cur(step.of_index),
                                          old_to_cur(other))
                    entries.append(val if i == r else -val)
        cur = Scheme(n_new, tuple(entries))
    return cur


def lift_system(log: ReductionLog, system) -> tuple:
    """Extend a curve system for the reduced scheme back to the original,
    re-inserting Empty curves and (possibly reversed) duplicates."""
    cur = list(system)
    for step in reversed(log.steps):
        r = step.removed_index
        if step.reason == EMPTY:
            new = EMPTY_CURVE
        else:
            of_cur = step.of_index - (1 if step.of_index > r else 0)
            twin = cur[of_cur - 1]
            new = twin if step.sign == +1 else twin.negated()
        cur.insert(r - 1, new)
    return tuple(cur)
