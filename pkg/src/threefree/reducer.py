"""Geodesic reduction and the word problem.

``reduce`` reads a word left to right keeping a geodesic prefix ``u``.
Each new letter ``g`` either cancels ``l[u]``, extends ``u`` (when ``u g``
has no RRS), or triggers the optimal RRS of ``u g`` followed by one free
reduction.  Every step keeps the length at most that of the input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .dihedral import DihedralContext, critical_decompose, tau
from .presentation import INFINITY
from .rrs import (
    Event,
    ReductionTrace,
    apply_rrs,
    beta_structure_violations,
    find_any_rrs,
    find_optimal_rrs,
    optimality_violations,
)
from .words import invert, is_freely_reduced

DEFAULT_CAP = 100_000


class ContractViolation(AssertionError):
    """A guarantee of the reduction theory failed at run time (verify mode)."""


def is_geodesic(p, w):
    w = tuple(w)
    return is_freely_reduced(w) and find_any_rrs(p, w) is None


def reduce(p, w, verify=False):
    """Geodesic word equivalent to ``w`` and the trace of moves producing it.

    The trace replays on ``w`` itself: indices refer to the full word
    ``u + rest`` at each moment, which agrees with ``u`` on its prefix.
    """
    trace = ReductionTrace()
    u = ()
    for g in tuple(w):
        if u and u[-1] == -g:
            trace.events.append(Event("cancel", len(u) - 1))
            u = u[:-1]
            continue
        ug = u + (g,)
        if find_any_rrs(p, ug) is None:
            u = ug
            continue
        r = find_optimal_rrs(p, ug, verify=verify)
        u, sub = apply_rrs(p, ug, r)
        trace.extend(sub)
        if verify:
            problems = beta_structure_violations(p, r) + optimality_violations(p, r)
            if problems:
                raise ContractViolation(f"RRS of {ug}: {problems}")
            if not is_geodesic(p, u):
                raise ContractViolation(f"RRS plus free reduction left {u} outside the geodesic set")
    return u, trace


def reduce_word(p, w, verify=False):
    return reduce(p, w, verify=verify)[0]


def equal(p, w, v, verify=False):
    """Decide whether ``w`` and ``v`` represent the same group element."""
    return reduce(p, tuple(w) + invert(v), verify=verify)[0] == ()


@dataclass(frozen=True)
class GeodesicClass:
    representative: tuple
    members: frozenset
    overflow: bool = False
    move_edges: Optional[dict] = None

    def __contains__(self, word):
        return tuple(word) in self.members

    def __len__(self):
        return len(self.members)


def _moves(p, w):
    n = len(w)
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        if abs(x) != abs(y) and p.m_letters(x, y) == 2:
            yield w[:i] + (y, x) + w[i + 2:]
    for i in range(n):
        a = abs(w[i])
        b = None
        for j in range(i + 1, n):
            name = abs(w[j])
            if name != a and name != b:
                if b is not None:
                    break
                b = name
                m = p.m_letters(a, b)
                if m == INFINITY or m <= 2:
                    break
            if b is None or j + 1 - i < m:
                continue
            seg = w[i:j + 1]
            ctx = DihedralContext(a, b, m)
            d = critical_decompose(ctx, seg)
            if d is not None:
                yield w[:i] + tau(ctx, seg, d) + w[j + 1:]


def geodesic_closure(p, w, cap=DEFAULT_CAP, with_edges=False):
    """All words reachable from ``w`` by commutations and dihedral tau-moves.

    For geodesic ``w`` this is every geodesic spelling of its element.  When
    more than ``cap`` words are found the result is returned with
    ``overflow=True`` and a partial member set.
    """
    w = tuple(w)
    seen = {w}
    edges = {} if with_edges else None
    queue = deque([w])
    while queue:
        word = queue.popleft()
        nbrs = []
        for nxt in _moves(p, word):
            nbrs.append(nxt)
            if nxt in seen:
                continue
            if len(seen) >= cap:
                return GeodesicClass(w, frozenset(seen), True, edges)
            seen.add(nxt)
            queue.append(nxt)
        if with_edges:
            edges[word] = tuple(nbrs)
    return GeodesicClass(w, frozenset(seen), False, edges)


def odd_classes(p):
    """Generator numbers grouped by chains of odd finite exponents."""
    parent = list(range(p.rank + 1))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in p.finite_pairs():
        if p.m_letters(i, j) % 2 == 1:
            parent[find(i)] = find(j)
    groups = {}
    for g in range(1, p.rank + 1):
        groups.setdefault(find(g), []).append(g)
    return [tuple(v) for v in groups.values()]


def abelianized_image(p, w):
    """Exponent sums over odd-exponent classes, keyed by tuples of generator names."""
    image = {}
    owner = {}
    for cls in odd_classes(p):
        key = tuple(p.name(g) for g in cls)
        image[key] = 0
        for g in cls:
            owner[g] = key
    for x in w:
        image[owner[abs(x)]] += 1 if x > 0 else -1
    return image
