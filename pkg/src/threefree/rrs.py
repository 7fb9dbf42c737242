"""Rightward reducing sequences.

An RRS of a freely reduced word ``w = mu w_1 ... w_k w_{k+1} gamma`` is a
chain of P2G critical words ``u_1 = w_1`` and ``u_i = c_{i-1} beta_{i-1} w_i``
(``c`` the letter produced by the previous tau-move) followed by a last
word ``u_{k+1} = c_k v`` where ``c_k`` commutes with all of ``v`` and
cancels ``f[gamma]``.  Applying the chain shortens ``w`` by two letters
without ever lengthening it, so a word with an RRS is not geodesic.

Search state: ``(prefix, j)`` where ``prefix`` is the produced letter plus
beta carried into the next link and ``j`` indexes the first unread letter
of ``w``.  The first link starts from ``((w[s],), s + 1)``, which spells
``u_1 = w[s:e]`` with the same code path.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Optional

from .dihedral import tau
from .p2g import P2GCritical, is_p2g_critical
from .presentation import INFINITY
from .words import format_word, parse_word

log = logging.getLogger(__name__)


class RRSInvariantError(RuntimeError):
    """An RRS failed re-verification; signals a search bug."""


@dataclass(frozen=True)
class RRSStep:
    """One tau-move of the chain (``u_i`` for ``i <= k``)."""

    start: int  # offset of u_i in the word current when the move is applied
    word: tuple  # u_i
    info: P2GCritical
    tau_hat: tuple
    after: tuple  # alpha rho tau(hat) beta

    @property
    def produced(self):
        return self.tau_hat[-1]

    @property
    def beta(self):
        return self.info.decomposition.beta

    @property
    def alpha(self):
        return self.info.decomposition.alpha

    @property
    def pseudo_gens(self):
        return self.info.decomposition.pseudo_gens


@dataclass(frozen=True)
class RRS:
    word: tuple
    head_len: int
    chunks: tuple  # (start, end) spans of w_1 .. w_{k+1} in ``word``
    tail_start: int
    steps: tuple
    final: tuple  # u_{k+1}
    final_start: int

    @property
    def k(self):
        return len(self.steps)

    @property
    def head(self):
        return self.word[:self.head_len]

    @property
    def tail(self):
        return self.word[self.tail_start:]

    def chunk(self, i):
        """``w_i`` (1-based)."""
        a, b = self.chunks[i - 1]
        return self.word[a:b]


# ----------------------------------------------------------------------------
# search


class _Searcher:
    def __init__(self, p, w):
        self.p = p
        self.w = tuple(w)
        self.n = len(self.w)
        self.dead = set()

    def finals(self, prefix, j):
        """Tail starts ``e`` such that ``prefix + w[j:e]`` is ``c v`` with ``w[e] = c^-1``."""
        p, w = self.p, self.w
        c = prefix[0]
        for x in prefix[1:]:
            if not p.letters_commute(c, x):
                return
        for e in range(j, self.n):
            if w[e] == -c:
                yield e
            if not p.letters_commute(c, w[e]):
                return

    def links(self, prefix, j):
        """``(e, info)`` with ``prefix + w[j:e]`` P2G critical and ``e > j``."""
        p, w, n = self.p, self.w, self.n
        scan = _HatScan(p, prefix[0])
        u = list(prefix)
        for y in prefix[1:]:
            if not scan.feed(y):
                return
        for e in range(j + 1, n + 1):
            x = w[e - 1]
            u.append(x)
            if not scan.feed(x):
                return
            if scan.b is None or scan.total != scan.m or (abs(x) != scan.a and abs(x) != scan.b):
                continue
            info = is_p2g_critical(p, tuple(u))
            if info is not None:
                yield e, info

    def continuations(self, prefix, j):
        """All completions from a state as ``(links, tail_start)``."""
        for e in self.finals(prefix, j):
            yield [], e
        for e, info in self.links(prefix, j):
            _, produced, beta = _move(info)
            for rest, tail in self.continuations((produced,) + beta, e):
                yield [(j, e, info)] + rest, tail

    def completable(self, prefix, j):
        key = (prefix, j)
        if key in self.dead:
            return None
        for e in self.finals(prefix, j):
            return [], e
        for e, info in self.links(prefix, j):
            _, produced, beta = _move(info)
            found = self.completable((produced,) + beta, e)
            if found is not None:
                return [(j, e, info)] + found[0], found[1]
        self.dead.add(key)
        return None


class _HatScan:
    """Incremental necessary conditions for a growing candidate ``u``.

    ``feed`` returns False once no extension of the word read so far can be
    P2G critical: the pseudo-generators have no finite exponent above 2, the
    core stops being freely reduced, ``p + n`` exceeds ``m``, or a letter
    that commutes with neither pseudo-generator gets trapped.
    """

    def __init__(self, p, first):
        self.p = p
        self.a = abs(first)
        self.b = None
        self.m = 0
        self.buffer = [first]
        self.prev = 0
        self.run = self.r1 = self.r2 = 0
        self.total = 0
        self.stuck = []

    def feed(self, y):
        if self.b is None:
            self.buffer.append(y)
            if self.p.letters_commute(self.a, y):
                return True
            self.b = abs(y)
            self.m = self.p.m_letters(self.a, self.b)
            if self.m == INFINITY or self.m <= 2:
                return False
            # everything before the first b belongs to w_p: only its a-letters matter
            for z in self.buffer[:-1]:
                if abs(z) == self.a and not self._core(z):
                    return False
            return self._letter(y)
        return self._letter(y)

    def _core(self, y):
        if y == -self.prev:
            return False
        if self.prev and (y > 0) == (self.prev > 0) and abs(y) != abs(self.prev):
            self.run += 1
        else:
            self.run = 1
        self.prev = y
        if y > 0:
            self.r1 = max(self.r1, self.run)
        else:
            self.r2 = max(self.r2, self.run)
        self.total = min(self.r1, self.m) + min(self.r2, self.m)
        return self.total <= self.m

    def _letter(self, y):
        p = self.p
        name = abs(y)
        if name == self.a or name == self.b:
            if not self._core(y):
                return False
            for trapped, seen in self.stuck:
                seen.add(name)
                if len(seen) > 1 or not p.letters_commute(trapped, y):
                    return False
            return True
        if not (p.letters_commute(y, self.a) and p.letters_commute(y, self.b)):
            self.stuck.append((y, set()))
        return True


def _move(info):
    d = info.decomposition
    moved = tau(info.context, d.hat, info.critical)
    return moved, moved[-1], d.beta


def _build(p, w, s, links, tail):
    """Assemble an :class:`RRS` from search output starting at ``s``."""
    steps = []
    chunks = []
    start = s
    j = s + 1
    prefix = (w[s],)
    for idx, (jj, e, info) in enumerate(links):
        d = info.decomposition
        tau_hat = tau(info.context, d.hat, info.critical)
        after = d.alpha + d.rho + tau_hat + d.beta
        u = prefix + w[jj:e]
        steps.append(RRSStep(start, u, info, tau_hat, after))
        chunks.append((s if idx == 0 else jj, e))
        start = e - len(d.beta) - 1
        prefix = (tau_hat[-1],) + d.beta
        j = e
    final = prefix + w[j:tail]
    chunks.append((s if not links else j, tail))
    return RRS(tuple(w), s, tuple(chunks), tail, tuple(steps), final, start)


def _starts(w):
    return range(len(w) - 1, -1, -1)


def find_any_rrs(p, w):
    """Some RRS of ``w`` or ``None``; rightmost start first."""
    w = tuple(w)
    search = _Searcher(p, w)
    for s in _starts(w):
        found = search.completable((w[s],), s + 1)
        if found is not None:
            r = _build(p, w, s, *found)
            verify_rrs(p, r)
            return r
    return None


def all_rrs_at(p, w, s):
    w = tuple(w)
    search = _Searcher(p, w)
    return [_build(p, w, s, links, tail) for links, tail in search.continuations((w[s],), s + 1)]


def all_rrs(p, w):
    w = tuple(w)
    out = []
    for s in range(len(w)):
        out.extend(all_rrs_at(p, w, s))
    return out


class NonUniqueOptimalRRS(RuntimeError):
    pass


def find_optimal_rrs(p, w, verify=False):
    """The optimal RRS: longest head, no premature free reduction, shortest chain.

    With ``verify`` the uniqueness of the optimal RRS is asserted by
    comparing every RRS that starts at the chosen position.
    """
    w = tuple(w)
    search = _Searcher(p, w)
    for s in _starts(w):
        if search.completable((w[s],), s + 1) is None:
            continue
        candidates = all_rrs_at(p, w, s)
        optimal = [r for r in candidates if not optimality_violations(p, r)]
        if verify and len(optimal) > 1:
            raise NonUniqueOptimalRRS(f"{len(optimal)} optimal RRSs at start {s}")
        if not optimal:
            log.warning("no RRS at start %d meets every optimality condition", s)
            optimal = sorted(candidates, key=lambda r: (len(optimality_violations(p, r)), r.k))
            if verify:
                raise RRSInvariantError(f"no optimal RRS at start {s}: {optimality_violations(p, optimal[0])}")
        r = optimal[0]
        verify_rrs(p, r)
        return r
    return None


# ----------------------------------------------------------------------------
# checks


def verify_rrs(p, r):
    """Re-check the RRS definition on ``r``; raise :class:`RRSInvariantError`."""
    w = r.word

    def fail(msg):
        raise RRSInvariantError(msg)

    pieces = r.head
    for i in range(1, r.k + 2):
        pieces = pieces + r.chunk(i)
    if pieces + r.tail != w:
        fail("factorization does not spell the word")
    if r.chunks[0][0] != r.head_len or any(
        r.chunks[i][1] != r.chunks[i + 1][0] for i in range(len(r.chunks) - 1)
    ) or r.chunks[-1][1] != r.tail_start:
        fail("chunks are not contiguous")
    if not r.tail:
        fail("empty tail")
    prefix = None
    for i, step in enumerate(r.steps, start=1):
        chunk = r.chunk(i)
        if not chunk:
            fail(f"w_{i} is empty")
        expected = chunk if i == 1 else prefix + chunk
        if step.word != expected:
            fail(f"u_{i} does not match its chunk")
        info = is_p2g_critical(p, step.word)
        if info is None:
            fail(f"u_{i} is not P2G critical")
        d = info.decomposition
        tau_hat = tau(info.context, d.hat, info.critical)
        if tau_hat != step.tau_hat or step.after != d.alpha + d.rho + tau_hat + d.beta:
            fail(f"tau(u_{i}) mismatch")
        prefix = (tau_hat[-1],) + d.beta
    last = r.chunk(r.k + 1)
    expected = last if r.k == 0 else prefix + last
    if r.final != expected or not r.final:
        fail("u_{k+1} does not match")
    c = r.final[0]
    if any(not p.letters_commute(c, x) for x in r.final[1:]):
        fail("first letter of u_{k+1} does not commute with the rest")
    if c != -r.tail[0]:
        fail("f[u_{k+1}] is not f[gamma]^-1")


def beta_structure_violations(p, r):
    """Structural facts every RRS satisfies in a 3-free group."""
    out = []
    steps = r.steps
    if steps and steps[-1].beta:
        out.append("beta_k is not empty")
    for i in range(len(steps) - 1):
        beta = steps[i].beta
        if not beta:
            continue
        if steps[i + 1].alpha:
            out.append(f"beta_{i + 1} nonempty but alpha_{i + 2} nonempty")
        if len({abs(x) for x in beta}) != 1:
            out.append(f"beta_{i + 1} is not a power of a single generator")
        elif abs(beta[0]) not in steps[i + 1].pseudo_gens:
            out.append(f"beta_{i + 1} is not a power of a pseudo-generator of u_{i + 2}")
    return out


def optimality_violations(p, r):
    """Optimality conditions 2 and 3 (condition 1 is fixed by the search order)."""
    return no_early_cancel_violations(p, r) + shortest_chain_violations(p, r)


def no_early_cancel_violations(p, r):
    """Condition 2: no move before the last one sets up a free reduction."""
    out = []
    for i, step in enumerate(r.steps, start=1):
        nxt = r.chunk(i + 1)
        if nxt and step.after[-1] == -nxt[0]:
            out.append(f"tau(u_{i}) ends with the inverse of f[w_{i + 1}]")
    gamma_name = abs(r.tail[0])
    # for k = 0 the chunk is c v itself; only v counts
    rest = r.chunk(r.k + 1)[1:] if r.k == 0 else r.chunk(r.k + 1)
    if any(abs(x) == gamma_name for x in rest):
        out.append("f[gamma] appears in w_{k+1}")
    return out


def shortest_chain_violations(p, r):
    """Condition 3: consecutive links that could be merged into one."""
    out = []
    for l in range(1, len(r.steps)):
        prev, cur = r.steps[l - 1], r.steps[l]
        zt = cur.pseudo_gens
        if all(p.letters_commute(x, zt[0]) and p.letters_commute(x, zt[1]) for x in cur.alpha):
            if len(set(prev.pseudo_gens) & set(zt)) != 1:
                out.append(f"u_{l} and u_{l + 1} share both pseudo-generators")
    return out


# ----------------------------------------------------------------------------
# application and traces


@dataclass(frozen=True)
class Event:
    kind: str  # "tau" | "swap" | "cancel"
    at: int
    before: tuple = ()
    after: tuple = ()

    def to_dict(self, p):
        if self.kind == "tau":
            return {
                "kind": "tau",
                "at": self.at,
                "len": len(self.before),
                "before": format_word(p, self.before),
                "after": format_word(p, self.after),
            }
        return {"kind": self.kind, "at": self.at}


class TraceReplayError(ValueError):
    pass


@dataclass
class ReductionTrace:
    events: list = field(default_factory=list)
    # RRSs applied while building the trace; not serialized
    applied: list = field(default_factory=list)

    def extend(self, other):
        self.events.extend(other.events)
        self.applied.extend(other.applied)

    def to_dict(self, p):
        return {"events": [e.to_dict(p) for e in self.events]}

    def to_json(self, p):
        return json.dumps(self.to_dict(p))

    @classmethod
    def from_dict(cls, p, data):
        events = []
        for item in data["events"]:
            kind = item["kind"]
            if kind == "tau":
                events.append(Event("tau", item["at"], parse_word(p, item["before"]), parse_word(p, item["after"])))
            elif kind in ("swap", "cancel"):
                events.append(Event(kind, item["at"]))
            else:
                raise TraceReplayError(f"unknown event kind {kind!r}")
        return cls(events)

    @classmethod
    def from_json(cls, p, text):
        return cls.from_dict(p, json.loads(text))

    def replay(self, p, word, check_tau=True):
        """Apply the events to ``word``, checking each one; return the result."""
        w = list(word)
        for ev in self.events:
            if ev.kind == "tau":
                seg = tuple(w[ev.at:ev.at + len(ev.before)])
                if seg != ev.before or len(ev.after) != len(ev.before):
                    raise TraceReplayError(f"tau event at {ev.at} does not match the word")
                if check_tau:
                    info = is_p2g_critical(p, seg)
                    if info is None or _apply_step(info) != ev.after:
                        raise TraceReplayError(f"tau event at {ev.at} is not a tau-move")
                w[ev.at:ev.at + len(ev.before)] = ev.after
            elif ev.kind == "swap":
                if not (0 <= ev.at < len(w) - 1) or not p.letters_commute(w[ev.at], w[ev.at + 1]):
                    raise TraceReplayError(f"swap at {ev.at} of non-commuting letters")
                w[ev.at], w[ev.at + 1] = w[ev.at + 1], w[ev.at]
            else:
                if not (0 <= ev.at < len(w) - 1) or w[ev.at] != -w[ev.at + 1]:
                    raise TraceReplayError(f"cancel at {ev.at} is not an inverse pair")
                del w[ev.at:ev.at + 2]
        return tuple(w)


def _apply_step(info):
    d = info.decomposition
    return d.alpha + d.rho + tau(info.context, d.hat, info.critical) + d.beta


def apply_rrs(p, w, r):
    """Run the tau-moves of ``r``, commute the produced letter to ``gamma`` and cancel.

    Returns ``(word, trace)`` with ``|word| == |w| - 2``.
    """
    w = tuple(w)
    if r.word != w:
        raise RRSInvariantError("RRS belongs to a different word")
    cur = list(w)
    trace = ReductionTrace(applied=[r])
    for step in r.steps:
        seg = tuple(cur[step.start:step.start + len(step.word)])
        if seg != step.word:
            raise RRSInvariantError(f"u at {step.start} does not match the current word")
        cur[step.start:step.start + len(step.word)] = step.after
        trace.events.append(Event("tau", step.start, step.word, step.after))
    q = r.final_start
    if tuple(cur[q:r.tail_start]) != r.final:
        raise RRSInvariantError("u_{k+1} does not match the current word")
    for i in range(q, r.tail_start - 1):
        if not p.letters_commute(cur[i], cur[i + 1]):
            raise RRSInvariantError("produced letter blocked before the tail")
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
        trace.events.append(Event("swap", i))
    at = r.tail_start - 1
    if cur[at] != -cur[at + 1]:
        raise RRSInvariantError("no cancellation at the tail")
    del cur[at:at + 2]
    trace.events.append(Event("cancel", at))
    return tuple(cur), trace
