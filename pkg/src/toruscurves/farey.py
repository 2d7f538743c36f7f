"""Maximal packings of curve classes on the torus with bounded pairwise
intersection.

Unoriented primitive classes (p, q) are canonicalized to q > 0 (or (1, 0));
two classes meet |p1*q2 - p2*q1| times.  A maximum clique under the edge
relation 1 <= |det| <= d is found by normalizing the clique to contain
(1, 0) with its minimal-positive-q member reduced to an anchor (p0, q0),
0 <= p0 < q0 <= d, which confines all further members to a finite grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from multiprocessing import Pool

from .errors import DomainError


def canon_slope(p: int, q: int) -> tuple:
    """Canonical representative of the unoriented class of (p, q)."""
    if (p, q) == (0, 0):
        raise DomainError("(0,0) is not a curve class")
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return (p, q)


def is_primitive_slope(p: int, q: int) -> bool:
    return (p, q) != (0, 0) and gcd(abs(p), abs(q)) == 1


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple  # tuple[(p, q), ...]
    d: int


def candidate_vertices(d: int, anchor) -> list:
    """Every class that can join a clique normalized to {(1,0), anchor}.

    Members are primitive (p', q') with anchor_q <= q' <= d and
    |p'*anchor_q - anchor_p*q'| <= d; the grid is finite since q' <= d
    bounds the (1,0)-edge and the anchor edge bounds p'.
    """
    p0, q0 = anchor
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    if not is_primitive_slope(p0, q0) or not 0 <= p0 < q0 <= d:
        raise DomainError(f"bad anchor {anchor}: need 0 <= p < q <= d, primitive")
    out = {(1, 0), (p0, q0)}
    for q in range(q0, d + 1):
        # |p*q0 - p0*q| <= d
        lo = (p0 * q - d + q0 - 1) // q0  # ceil((p0*q - d)/q0)
        hi = (p0 * q + d) // q0
        for p in range(lo, hi + 1):
            if gcd(abs(p), q) == 1:
                out.add((p, q))
    return sorted(out)


def _edge(u, v, d: int) -> bool:
    det = abs(u[0] * v[1] - v[0] * u[1])
    return 1 <= det <= d


def max_clique(vertices, edge_fn) -> tuple:
    """Deterministic branch-and-bound maximum clique (greedy-coloring
    bound, degree-descending order, lexicographic tie-break)."""
    verts0 = sorted(set(vertices))
    n = len(verts0)
    if n == 0:
        return ()
    edges = [
        [edge_fn(verts0[i], verts0[j]) for j in range(n)] for i in range(n)
    ]
    degree = [sum(row) for row in edges]
    order = sorted(range(n), key=lambda i: (-degree[i], verts0[i]))
    verts = [verts0[i] for i in order]
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if edges[order[i]][order[j]]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    best: list = []

    def color_sort(cand_mask: int):
        # greedy coloring; returns vertices with color bounds, colors ascending
        uncolored = cand_mask
        colored = []
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                colored.append((v, color))
                avail &= ~adj[v]
                uncolored &= ~(1 << v)
                avail &= uncolored
        return colored

    def expand(cand_mask: int, current: list):
        nonlocal best
        colored = color_sort(cand_mask)
        for v, bound in reversed(colored):
            if len(current) + bound <= len(best):
                return
            current.append(v)
            sub = cand_mask & adj[v]
            if sub:
                expand(sub, current)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            cand_mask &= ~(1 << v)

    expand((1 << n) - 1, [])
    return tuple(verts[i] for i in sorted(best))


def _anchor_best(args):
    d, anchor = args
    verts = [
        v
        for v in candidate_vertices(d, anchor)
        if v not in ((1, 0), anchor)
    ]
    clique = max_clique(verts, lambda u, v: _edge(u, v, d))
    witness = ((1, 0), anchor) + clique
    return len(witness), witness


def max_packing(d: int, jobs: int = 1) -> CliqueResult:
    """Largest set of distinct classes with pairwise intersection in [1, d].

    Maximizes 2 + max-clique over all anchors; anchors are independent, so
    jobs > 1 fans them out to worker processes.
    """
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    anchors = [
        (p0, q0)
        for q0 in range(1, d + 1)
        for p0 in range(q0)
        if gcd(p0, q0) == 1
    ]
    tasks = [(d, a) for a in anchors]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_anchor_best, tasks)
    else:
        results = [_anchor_best(t) for t in tasks]
    best_size, best_witness = 2, ((0, 1), (1, 0))
    for size, witness in results:
        if size > best_size:
            best_size, best_witness = size, witness
    witness = tuple(sorted(best_witness))
    for i in range(len(witness)):
        for j in range(i + 1, len(witness)):
            assert _edge(witness[i], witness[j], d), "invalid packing witness"
    return CliqueResult(best_size, witness, d)
