"""Brute-force verifiers that share no code with the reduction engine.

Only the presentation and plain tuple manipulation are used here, so a
disagreement between these functions and :mod:`threefree.reducer` points
at a real defect in one of them.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .presentation import INFINITY


@dataclass(frozen=True)
class BallSearchConfig:
    slack: int = 2
    node_cap: int = 200_000

    def __post_init__(self):
        if self.slack < 0 or self.node_cap < 0:
            raise ValueError("slack and node_cap must be non-negative")


@dataclass(frozen=True)
class BallResult:
    min_len: int
    witness: tuple
    exhausted: bool
    nodes: int

    def __iter__(self):
        return iter((self.min_len, self.witness, self.exhausted))


def _relator_sides(p):
    """Map each length-``m`` alternating word to the other side of its relation."""
    table = {}
    for i, j in p.finite_pairs():
        m = p.m_letters(i, j)
        for sgn in (1, -1):
            one = tuple(sgn * (i if k % 2 == 0 else j) for k in range(m))
            two = tuple(sgn * (j if k % 2 == 0 else i) for k in range(m))
            table[one] = two
            table[two] = one
    return table


def _neighbours(w, bound, letters, sides, lengths):
    n = len(w)
    for i in range(n - 1):
        if w[i] == -w[i + 1]:
            yield w[:i] + w[i + 2:]
    for k in lengths:
        for i in range(n - k + 1):
            other = sides.get(w[i:i + k])
            if other is not None:
                yield w[:i] + other + w[i + k:]
    if n + 2 <= bound:
        for i in range(n + 1):
            head, tail = w[:i], w[i:]
            for x in letters:
                yield head + (x, -x) + tail


def bfs_min_length(p, w, cfg=BallSearchConfig(), target=None):
    """Shortest word found in the rewrite ball of ``w``.

    Explores words reachable through relation flips and insertion or
    deletion of inverse pairs, never exceeding ``|w| + cfg.slack`` letters.
    Shorter words are expanded first.  ``exhausted`` is true when the whole
    bounded component was visited.  The search stops early once a word of
    length ``<= target`` is found.
    """
    w = tuple(w)
    bound = len(w) + cfg.slack
    letters = [g for g in range(1, p.rank + 1)] + [-g for g in range(1, p.rank + 1)]
    sides = _relator_sides(p)
    lengths = sorted({len(k) for k in sides})
    seen = {w}
    heap = [(len(w), 0, w)]
    counter = 1
    best = w
    while heap:
        length, _, word = heapq.heappop(heap)
        if length < len(best):
            best = word
        if target is not None and len(best) <= target:
            return BallResult(len(best), best, False, len(seen))
        for nxt in _neighbours(word, bound, letters, sides, lengths):
            if nxt in seen:
                continue
            if len(seen) >= cfg.node_cap:
                return BallResult(len(best), best, False, len(seen))
            seen.add(nxt)
            heapq.heappush(heap, (len(nxt), counter, nxt))
            counter += 1
    return BallResult(len(best), best, True, len(seen))


def equivalent(p, u, v, slack=0, node_cap=200_000):
    """True if ``u v^-1`` is seen to reduce to the empty word.

    ``False`` means "not shown equal within the ball", which is only a
    proof of inequality when the search exhausted.
    """
    probe = tuple(u) + tuple(-x for x in reversed(v))
    result = bfs_min_length(p, probe, BallSearchConfig(slack, node_cap), target=0)
    return result.min_len == 0


def dihedral_oracle(p, w):
    """Geodesic test for words in two generators with a finite exponent."""
    w = tuple(w)
    gens = sorted({abs(x) for x in w})
    if len(gens) > 2:
        raise ValueError("word is not 2-generated")
    for i in range(len(w) - 1):
        if w[i] + w[i + 1] == 0:
            return False
    if len(gens) < 2:
        return True
    m = p.m_letters(gens[0], gens[1])
    if m == INFINITY:
        raise ValueError("generators of the word have no finite relation")
    longest = {True: 0, False: 0}
    for i in range(len(w)):
        positive = w[i] > 0
        j = i + 1
        while j < len(w) and (w[j] > 0) == positive and abs(w[j]) != abs(w[j - 1]):
            j += 1
        longest[positive] = max(longest[positive], j - i)
    return min(longest[True], m) + min(longest[False], m) <= m


def commutation_oracle(p, w):
    """Shortest form in a right-angled presentation by commuting cancellation."""
    if not p.is_right_angled():
        raise ValueError("commutation oracle needs every finite exponent to be 2")
    word = list(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(word)):
            for j in range(i + 1, len(word)):
                if word[j] == -word[i]:
                    del word[j]
                    del word[i]
                    changed = True
                    break
                if abs(word[j]) != abs(word[i]) and p.m_letters(word[i], word[j]) != 2:
                    break
            if changed:
                break
    return tuple(word)
