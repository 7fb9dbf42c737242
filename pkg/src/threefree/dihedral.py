"""Two-generator Artin groups: alternating words, p/n values, critical
words and the length-preserving involution ``tau`` on them.

For a freely reduced word ``w`` over ``{x, y}`` let ``r1`` (``r2``) be the
longest positive (negative) alternating factor.  With ``p = min(r1, m)``
and ``n = min(r2, m)``, ``w`` is the unique geodesic for its element when
``p + n < m``, one of several geodesics when ``p + n == m`` and not
geodesic when ``p + n > m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .presentation import INFINITY
from .words import is_freely_reduced


class NotCriticalError(ValueError):
    pass


@dataclass(frozen=True)
class DihedralContext:
    x: int
    y: int
    m: int

    def __post_init__(self):
        if self.x == self.y or self.x <= 0 or self.y <= 0:
            raise ValueError("a dihedral context needs two distinct generators")
        if self.m == INFINITY or self.m < 2:
            raise ValueError(f"dihedral context needs a finite exponent >= 2, got {self.m}")

    @classmethod
    def of(cls, p, g, h):
        """Context for generators ``g``, ``h`` (names or numbers) of ``p``."""
        i = p.index(g) if isinstance(g, str) else g
        j = p.index(h) if isinstance(h, str) else h
        return cls(i, j, p.m_letters(i, j))

    def other(self, g):
        """The generator number paired with ``g``."""
        g = abs(g)
        return self.y if g == self.x else self.x

    def check(self, w):
        for letter in w:
            if abs(letter) != self.x and abs(letter) != self.y:
                raise ValueError(f"letter {letter} is foreign to the context ({self.x}, {self.y})")


class PNValues(NamedTuple):
    r1: int
    r2: int
    p: int
    n: int


class Orientation(Enum):
    POSITIVE_PREFIX = "positive-prefix"
    POSITIVE_SUFFIX = "positive-suffix"
    NEGATIVE_PREFIX = "negative-prefix"
    NEGATIVE_SUFFIX = "negative-suffix"
    UNSIGNED_PN = "unsigned-PN"
    UNSIGNED_NP = "unsigned-NP"


@dataclass(frozen=True)
class CriticalDecomposition:
    """How a critical word splits as alternating prefix, ``eta``, alternating suffix.

    ``x``/``y`` name the generators of the leading alternation (``x`` first),
    ``z``/``t`` those of the trailing one (``t`` last).  For the one-sided
    orientations the missing side's pair is still recorded, as the
    assignment ``tau`` uses.
    """

    orientation: Orientation
    p: int
    n: int
    x: int
    y: int
    z: int
    t: int
    eta: tuple


class Geodesity(Enum):
    UNIQUE = "unique-geodesic"
    GEODESIC = "geodesic"
    NOT_GEODESIC = "not-geodesic"


def left_alt(x, y, k):
    """Alternating word of length ``k`` starting with ``x``."""
    return tuple(x if i % 2 == 0 else y for i in range(k))


def right_alt(x, y, k):
    """Alternating word of length ``k`` ending with ``y``."""
    return tuple(y if (k - 1 - i) % 2 == 0 else x for i in range(k))


def _runs(w):
    r1 = r2 = 0
    run = 0
    prev = 0
    for letter in w:
        if prev and (letter > 0) == (prev > 0) and abs(letter) != abs(prev):
            run += 1
        else:
            run = 1
        prev = letter
        if letter > 0:
            r1 = max(r1, run)
        else:
            r2 = max(r2, run)
    return r1, r2


def pn(ctx, w):
    ctx.check(w)
    r1, r2 = _runs(w)
    return PNValues(r1, r2, min(r1, ctx.m), min(r2, ctx.m))


def is_geodesic_dihedral(ctx, w):
    values = pn(ctx, w)
    total = values.p + values.n
    if total < ctx.m:
        return Geodesity.UNIQUE
    if total == ctx.m:
        return Geodesity.GEODESIC
    return Geodesity.NOT_GEODESIC


def _alternating(seg, positive):
    for i, letter in enumerate(seg):
        if (letter > 0) != positive:
            return False
        if i and abs(letter) == abs(seg[i - 1]):
            return False
    return True


def _alt_factor_starts(w, k, positive):
    return [i for i in range(len(w) - k + 1) if _alternating(w[i:i + k], positive)]


def critical_decompose(ctx, w):
    """Return the :class:`CriticalDecomposition` of ``w``, or ``None``."""
    ctx.check(w)
    if not is_freely_reduced(w):
        return None
    m = ctx.m
    r1, r2 = _runs(w)
    p, n = min(r1, m), min(r2, m)
    if p + n != m:
        return None
    length = len(w)
    if p and n:
        other = ctx.other
        x, t = abs(w[0]), abs(w[-1])
        if _alternating(w[:p], True) and _alternating(w[length - n:], False):
            return CriticalDecomposition(Orientation.UNSIGNED_PN, p, n, x, other(x), other(t), t, w[p:length - n])
        if _alternating(w[:n], False) and _alternating(w[length - p:], True):
            return CriticalDecomposition(Orientation.UNSIGNED_NP, p, n, x, other(x), other(t), t, w[n:length - p])
        return None
    positive = n == 0
    starts = _alt_factor_starts(w, m, positive)
    if len(starts) != 1:
        return None
    (start,) = starts
    x, t = abs(w[0]), abs(w[-1])
    if start == 0:
        kind = Orientation.POSITIVE_PREFIX if positive else Orientation.NEGATIVE_PREFIX
        return CriticalDecomposition(kind, p, n, x, ctx.other(x), ctx.other(t), t, w[m:])
    if start + m == length:
        kind = Orientation.POSITIVE_SUFFIX if positive else Orientation.NEGATIVE_SUFFIX
        return CriticalDecomposition(kind, p, n, x, ctx.other(x), ctx.other(t), t, w[:length - m])
    return None


def is_critical(ctx, w):
    return critical_decompose(ctx, w) is not None


def delta(ctx, w):
    """Identity for even ``m``; swaps the two generators for odd ``m``."""
    ctx.check(w)
    if ctx.m % 2 == 0:
        return tuple(w)
    return tuple(ctx.other(x) if x > 0 else -ctx.other(x) for x in w)


def tau(ctx, w, decomposition=None):
    """The involution on critical words; raises :class:`NotCriticalError` otherwise."""
    d = decomposition or critical_decompose(ctx, w)
    if d is None:
        raise NotCriticalError("not critical")
    m = ctx.m
    eta = delta(ctx, d.eta)
    kind = d.orientation
    if kind is Orientation.UNSIGNED_PN:
        return left_alt(-d.y, -d.x, d.n) + eta + right_alt(d.t, d.z, d.p)
    if kind is Orientation.UNSIGNED_NP:
        return left_alt(d.y, d.x, d.p) + eta + right_alt(-d.t, -d.z, d.n)
    s = 1 if kind in (Orientation.POSITIVE_PREFIX, Orientation.POSITIVE_SUFFIX) else -1
    if kind in (Orientation.POSITIVE_PREFIX, Orientation.NEGATIVE_PREFIX):
        # the block moves to the right end; its first letter must repeat l[delta(eta)]
        if d.eta:
            first_name = abs(eta[-1])
        else:
            first_name = ctx.other(d.x)
        second_name = ctx.other(first_name)
        return eta + left_alt(s * first_name, s * second_name, m)
    # suffix forms: the block moves to the left end; its last letter repeats f[delta(eta)]
    if d.eta:
        last_name = abs(eta[0])
        block = right_alt(s * ctx.other(last_name), s * last_name, m)
    else:
        block = left_alt(s * ctx.other(d.x), s * d.x, m)
    return block + eta


def critical_suffix(ctx, w, x):
    """Shortest critical suffix ``sigma`` of geodesic ``w`` with ``l[tau(sigma)] = x^-1``.

    Returns ``(start, decomposition)`` or ``None`` when ``w x`` is geodesic
    (or not freely reduced).
    """
    ctx.check(w)
    ctx.check((x,))
    wx = tuple(w) + (x,)
    if not is_freely_reduced(wx) or is_geodesic_dihedral(ctx, wx) is not Geodesity.NOT_GEODESIC:
        return None
    for start in range(len(w) - 1, -1, -1):
        sigma = tuple(w[start:])
        d = critical_decompose(ctx, sigma)
        if d is not None and tau(ctx, sigma, d)[-1] == -x:
            return start, d
    return None

