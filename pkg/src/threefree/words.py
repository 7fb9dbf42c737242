"""Words over the generators of a presentation and their inverses.

A letter is a nonzero ``int``: its absolute value is the 1-based generator
number (the letter's *name*) and its sign is the letter's sign.  A word is
a ``tuple`` of letters; the empty tuple is the trivial word.
"""

from __future__ import annotations

import re

EMPTY = ()

_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")


class WordError(ValueError):
    pass


def parse_word(p, text):
    """Parse ``"a c b^2 a^-1"`` style text over presentation ``p``."""
    letters = []
    for token in text.split():
        match = _TOKEN.match(token)
        if not match:
            raise WordError(f"malformed token {token!r}")
        name, power = match.groups()
        try:
            gen = p.index(name)
        except KeyError:
            raise WordError(f"unknown generator {name!r}") from None
        k = 1 if power is None else int(power)
        if k == 0:
            raise WordError(f"zero power in {token!r}")
        letters.extend([gen if k > 0 else -gen] * abs(k))
    return tuple(letters)


def format_word(p, w):
    """Run-length text form; the inverse of :func:`parse_word`."""
    if not w:
        return ""
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = (j - i) * (1 if w[i] > 0 else -1)
        name = p.name(abs(w[i]))
        out.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(out)


def name(x):
    return abs(x)


def sign(x):
    return 1 if x > 0 else -1


def essentially_different(x, y):
    return abs(x) != abs(y)


def free_reduce(w):
    stack = []
    for x in w:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_freely_reduced(w):
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def invert(w):
    return tuple(-x for x in reversed(w))


def concat(*words):
    out = ()
    for w in words:
        out += tuple(w)
    return out


def _nonempty(w, what):
    if not w:
        raise WordError(f"{what} of the empty word")


def first(w):
    _nonempty(w, "first letter")
    return w[0]


def last(w):
    _nonempty(w, "last letter")
    return w[-1]


def pref(w):
    """``w`` without its last letter."""
    _nonempty(w, "pref")
    return w[:-1]


def suf(w):
    """``w`` without its first letter."""
    _nonempty(w, "suf")
    return w[1:]


def names(w):
    return {abs(x) for x in w}


def is_positive(w):
    return all(x > 0 for x in w)


def is_negative(w):
    return all(x < 0 for x in w)
