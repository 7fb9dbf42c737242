"""Artin group presentations without braid relations.

A presentation is a list of generator names together with a Coxeter
exponent for every pair of distinct generators.  Pairs that are not
listed are free (exponent ``INFINITY``).  Exponent 3 is refused: the
reduction machinery in this package only works for 3-free groups.

File format::

    # comment
    generators a b c d
    m a b 4
    m b c 5
    m a c 2
    m c d inf
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

INFINITY = math.inf

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PresentationError(ValueError):
    """Raised for malformed or non 3-free presentations."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Presentation:
    """Generators plus a symmetric Coxeter matrix.

    Internally generator ``generators[i]`` is numbered ``i + 1`` so that a
    letter can be stored as a signed nonzero integer (see :mod:`threefree.words`).
    """

    generators: tuple[str, ...]
    coxeter: dict = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if len(set(gens)) != len(gens):
            dup = next(g for g in gens if gens.count(g) > 1)
            raise PresentationError(f"duplicate generator {dup!r}")
        for g in gens:
            if not _NAME.match(g):
                raise PresentationError(f"invalid generator name {g!r}")

        cox = {}
        for key, value in dict(self.coxeter).items():
            pair = frozenset(key)
            if len(pair) != 2:
                raise PresentationError(f"exponent key {tuple(key)!r} is not a pair of distinct generators")
            for g in pair:
                if g not in gens:
                    raise PresentationError(f"unknown generator {g!r}")
            cox[pair] = _check_exponent(value)
        for g, h in combinations(gens, 2):
            cox.setdefault(frozenset((g, h)), INFINITY)
        object.__setattr__(self, "coxeter", cox)

        index = {g: i + 1 for i, g in enumerate(gens)}
        n = len(gens)
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for pair, value in cox.items():
            g, h = tuple(pair)
            table[index[g]][index[h]] = table[index[h]][index[g]] = value
        commute = [[i == j or table[i][j] == 2 for j in range(n + 1)] for i in range(n + 1)]
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_m", tuple(tuple(row) for row in table))
        object.__setattr__(self, "_commute", tuple(tuple(row) for row in commute))

    def __hash__(self):
        return hash((self.generators, tuple(sorted((tuple(sorted(k)), v) for k, v in self.coxeter.items()))))

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.generators == other.generators and self.coxeter == other.coxeter

    @property
    def rank(self):
        return len(self.generators)

    def index(self, name):
        """1-based generator number of ``name``."""
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"undeclared generator {name!r}") from None

    def name(self, number):
        return self.generators[number - 1]

    def exponent(self, g, h):
        """Exponent of the relation between generators ``g`` and ``h``."""
        i, j = self.index(g), self.index(h)
        if i == j:
            raise ValueError(f"exponent undefined for a generator with itself ({g!r})")
        return self._m[i][j]

    def commutes(self, g, h):
        """True when ``g == h`` or the pair has exponent 2."""
        return self._commute[self.index(g)][self.index(h)]

    # letter-level fast paths: arguments are signed generator numbers

    def m_letters(self, x, y):
        return self._m[abs(x)][abs(y)]

    def letters_commute(self, x, y):
        return self._commute[abs(x)][abs(y)]

    def finite_pairs(self):
        """Unordered generator-number pairs with a finite exponent."""
        n = self.rank
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if self._m[i][j] != INFINITY]

    def is_right_angled(self):
        return all(self._m[i][j] == 2 for i, j in self.finite_pairs())


def _check_exponent(value, line=None):
    if value == INFINITY or value in ("inf", "infinity", "∞"):
        return INFINITY
    if isinstance(value, bool) or not isinstance(value, int):
        raise PresentationError(f"exponent must be an integer or inf, got {value!r}", line)
    if value == 3:
        raise PresentationError(
            "exponent 3 (braid relation): presentation is not 3-free; "
            "geodesic reduction by tau-moves fails for braid relations",
            line,
        )
    if value < 2:
        raise PresentationError(f"exponent {value} < 2", line)
    return value


def parse_presentation(text):
    """Parse presentation-file text into a validated :class:`Presentation`."""
    generators = None
    cox = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if generators is None:
            if tokens[0] != "generators" or len(tokens) < 2:
                raise PresentationError("expected 'generators <name>+'", lineno)
            generators = tokens[1:]
            seen = set()
            for g in generators:
                if not _NAME.match(g):
                    raise PresentationError(f"invalid generator name {g!r}", lineno)
                if g in seen:
                    raise PresentationError(f"duplicate generator {g!r}", lineno)
                seen.add(g)
            continue
        if tokens[0] != "m" or len(tokens) != 4:
            raise PresentationError(f"expected 'm <g> <h> <k|inf>', got {line!r}", lineno)
        _, g, h, k = tokens
        for name in (g, h):
            if name not in seen:
                raise PresentationError(f"unknown generator {name!r}", lineno)
        if g == h:
            raise PresentationError(f"exponent of {g!r} with itself", lineno)
        pair = frozenset((g, h))
        if pair in cox:
            raise PresentationError(f"duplicate entry for pair {g} {h}", lineno)
        if k.lower() in ("inf", "infinity"):
            value = INFINITY
        else:
            try:
                value = int(k)
            except ValueError:
                raise PresentationError(f"bad exponent {k!r}", lineno) from None
        cox[pair] = _check_exponent(value, lineno)
    if generators is None:
        raise PresentationError("missing 'generators' line")
    return Presentation(tuple(generators), cox)


def format_presentation(p):
    lines = ["generators " + " ".join(p.generators)]
    for g, h in combinations(p.generators, 2):
        k = p.exponent(g, h)
        if k != INFINITY:
            lines.append(f"m {g} {h} {k}")
    return "\n".join(lines) + "\n"


def load_presentation(path):
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def fixture(name):
    """Load one of the bundled presentations: ``p1``, ``p2``, ``fpc`` or ``braid``."""
    text = resources.files("threefree").joinpath("data", f"{name}.pres").read_text(encoding="utf-8")
    return parse_presentation(text)
