"""Pseudo 2-generated (P2G) words.

A word is P2G in pseudo-generators ``{a, b}`` when every other letter can
be commuted out of the way, leaving a two-generator core.  Such a word is
equivalent to ``alpha rho hat beta`` where ``hat`` keeps only the letters
named ``a`` or ``b``; when ``hat`` is critical the word admits the
extended tau-move ``alpha rho tau(hat) beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .dihedral import CriticalDecomposition, DihedralContext, critical_decompose, tau
from .presentation import INFINITY

ALPHA, RHO1, RHO2, HAT, BETA = "alpha", "rho1", "rho2", "hat", "beta"


@dataclass(frozen=True)
class P2GDecomposition:
    pseudo_gens: tuple
    wp_end: int
    wq_end: int
    alpha: tuple
    rho1: tuple
    rho2: tuple
    hat: tuple
    beta: tuple
    # position_map[i] = (block, index of that letter in alpha+rho+hat+beta)
    position_map: tuple

    @property
    def rho(self):
        return self.rho1 + self.rho2

    def rearranged(self):
        return self.alpha + self.rho1 + self.rho2 + self.hat + self.beta

    def internal_letters(self):
        return self.alpha + self.rho1 + self.rho2 + self.beta


class P2GCritical(NamedTuple):
    decomposition: P2GDecomposition
    critical: CriticalDecomposition
    context: DihedralContext


def pseudo_generators(p, w):
    """``(name of f[w], first later letter name not commuting with it)``, or ``None``."""
    if not w:
        return None
    a = abs(w[0])
    for x in w[1:]:
        if not p.letters_commute(a, x):
            b = abs(x)
            m = p.m_letters(a, b)
            if m == INFINITY or m <= 2:
                return None
            return a, b
    return None


def recognize(p, w, a, b):
    """P2G decomposition of ``w`` in pseudo-generators ``a``, ``b`` or ``None``."""
    w = tuple(w)
    if not w:
        return None
    a, b = abs(a), abs(b)
    m = p.m_letters(a, b)
    if a == b or m == INFINITY or m <= 2:
        return None
    f, l = abs(w[0]), abs(w[-1])
    if f not in (a, b) or l not in (a, b):
        return None
    in_p = [abs(x) == a or abs(x) == b for x in w]
    n = len(w)
    wp_end = next((i for i in range(n) if in_p[i] and abs(w[i]) != f), None)
    if wp_end is None:
        return None
    last_other = max(i for i in range(n) if in_p[i] and abs(w[i]) != l)
    ws_start = max(last_other + 1, wp_end)

    for i in range(wp_end):
        if not p.letters_commute(w[i], f):
            return None
    for i in range(wp_end, ws_start):
        if not in_p[i] and not (p.letters_commute(w[i], a) and p.letters_commute(w[i], b)):
            return None
    for i in range(ws_start, n):
        if not p.letters_commute(w[i], l):
            return None

    alpha = [i for i in range(wp_end) if not in_p[i]]
    rho1 = [i for i in range(wp_end, ws_start) if not in_p[i]]
    rho2, beta = [], []
    for i in range(ws_start, n):
        if in_p[i]:
            continue
        x = w[i]
        if p.letters_commute(x, a) and p.letters_commute(x, b) and all(p.letters_commute(x, w[j]) for j in beta):
            rho2.append(i)
        else:
            beta.append(i)
    hat = [i for i in range(n) if in_p[i]]

    position_map = [None] * n
    pos = 0
    for block, indices in ((ALPHA, alpha), (RHO1, rho1), (RHO2, rho2), (HAT, hat), (BETA, beta)):
        for i in indices:
            position_map[i] = (block, pos)
            pos += 1

    def pick(indices):
        return tuple(w[i] for i in indices)

    return P2GDecomposition(
        pseudo_gens=(a, b),
        wp_end=wp_end,
        wq_end=ws_start,
        alpha=pick(alpha),
        rho1=pick(rho1),
        rho2=pick(rho2),
        hat=pick(hat),
        beta=pick(beta),
        position_map=tuple(position_map),
    )


def is_p2g_critical(p, w):
    """Return :class:`P2GCritical` when ``w`` is P2G critical, else ``None``."""
    gens = pseudo_generators(p, w)
    if gens is None:
        return None
    d = recognize(p, w, *gens)
    if d is None:
        return None
    ctx = DihedralContext(gens[0], gens[1], p.m_letters(*gens))
    crit = critical_decompose(ctx, d.hat)
    if crit is None:
        return None
    return P2GCritical(d, crit, ctx)


class NotP2GCriticalError(ValueError):
    pass


def p2g_tau(p, w, info=None):
    """Extended tau-move: ``(alpha rho tau(hat) beta, produced letter)``."""
    info = info or is_p2g_critical(p, w)
    if info is None:
        raise NotP2GCriticalError("not P2G critical")
    d = info.decomposition
    moved = tau(info.context, d.hat, info.critical)
    return d.alpha + d.rho + moved + d.beta, moved[-1]
