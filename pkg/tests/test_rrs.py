import random

import pytest

from conftest import random_presentation, random_word
from threefree.dihedral import DihedralContext, critical_decompose, tau
from threefree.oracle import equivalent
from threefree.presentation import INFINITY, fixture
from threefree.rrs import (
    RRSInvariantError,
    ReductionTrace,
    TraceReplayError,
    all_rrs,
    apply_rrs,
    beta_structure_violations,
    find_any_rrs,
    find_optimal_rrs,
    no_early_cancel_violations,
    optimality_violations,
    verify_rrs,
)
from threefree.words import format_word, is_freely_reduced, parse_word

P1 = fixture("p1")
W18 = "a c b a b^2 c d a b^-1 c^-1 b^-1 d^5 c^-1"
W18_REDUCED = "c d b a^2 b a c^-1 b^-1 c^-1 b d^5"


def w(text):
    return parse_word(P1, text)


def test_w18_structure():
    r = find_optimal_rrs(P1, w(W18), verify=True)
    assert r.k == 2
    assert r.head == ()
    assert r.tail == w("c^-1")
    assert [r.chunk(i) for i in (1, 2, 3)] == [w("a c b a b^2 c d a"), w("b^-1 c^-1 b^-1"), w("d^5")]
    one, two = r.steps
    d = one.info.decomposition
    assert (d.alpha, d.rho, d.hat, d.beta) == (w("c"), w("d"), w("a b a b^2 a"), w("c"))
    assert one.tau_hat == w("b a^2 b a b")
    assert two.word == w("b c b^-1 c^-1 b^-1")
    assert two.info.decomposition.hat == two.word
    assert two.tau_hat == w("c^-1 b^-1 c^-1 b c")
    assert r.final == w("c d^5")
    assert not beta_structure_violations(P1, r)
    assert not optimality_violations(P1, r)


def test_apply_w18():
    r = find_any_rrs(P1, w(W18))
    out, trace = apply_rrs(P1, w(W18), r)
    assert out == w(W18_REDUCED)
    assert trace.replay(P1, w(W18)) == out
    kinds = [e.kind for e in trace.events]
    assert kinds == ["tau", "tau"] + ["swap"] * 5 + ["cancel"]


def test_k0_and_k1():
    r = find_any_rrs(P1, w("a d a^-1"))
    assert r.k == 0 and r.chunk(1) == w("a d") and r.tail == w("a^-1")
    assert apply_rrs(P1, w("a d a^-1"), r)[0] == w("d")

    r = find_optimal_rrs(P1, w("a b a b a^-1"))
    assert r.k == 1
    assert r.steps[0].word == w("a b a b")
    assert r.final == w("a") and r.chunk(2) == ()
    assert r.tail == w("a^-1")
    assert apply_rrs(P1, w("a b a b a^-1"), r)[0] == w("b a b")


@pytest.mark.parametrize("text", ["a b a b^2 a", W18_REDUCED, "", "a", "a b", "c d b a^2 b a c^-1 b^-1 c^-1 b d^4"])
def test_no_rrs(text):
    assert find_any_rrs(P1, w(text)) is None
    assert find_optimal_rrs(P1, w(text)) is None


def test_verify_rejects_tampering():
    r = find_any_rrs(P1, w(W18))
    bad = type(r)(r.word, r.head_len, r.chunks, r.tail_start - 1, r.steps, r.final, r.final_start)
    with pytest.raises(RRSInvariantError):
        verify_rrs(P1, bad)
    with pytest.raises(RRSInvariantError):
        apply_rrs(P1, w("a b"), r)


def test_trace_json_round_trip():
    word = w(W18)
    out, trace = apply_rrs(P1, word, find_any_rrs(P1, word))
    text = trace.to_json(P1)
    again = ReductionTrace.from_json(P1, text)
    assert again.replay(P1, word) == out
    data = trace.to_dict(P1)
    assert data["events"][0] == {
        "kind": "tau", "at": 0, "len": 9,
        "before": "a c b a b^2 c d a", "after": "c d b a^2 b a b c",
    }
    data["events"][-1]["at"] += 1
    with pytest.raises(TraceReplayError):
        ReductionTrace.from_dict(P1, data).replay(P1, word)
    with pytest.raises(TraceReplayError):
        ReductionTrace.from_dict(P1, {"events": [{"kind": "flip", "at": 0}]})


def _random_rrs_words(count, seed, max_len=10):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = random_presentation(rng)
        word = random_word(rng, p, rng.randint(2, max_len))
        r = find_any_rrs(p, word)
        if r is not None:
            out.append((p, word, r))
    return out


SAMPLES = _random_rrs_words(150, 11)


def test_random_rrs_soundness():
    for p, word, r in SAMPLES:
        out, trace = apply_rrs(p, word, r)
        assert len(out) == len(word) - 2
        assert trace.replay(p, word) == out
        assert not beta_structure_violations(p, r)
    for p, word, r in SAMPLES[::5]:
        out, _ = apply_rrs(p, word, r)
        assert equivalent(p, word, out, slack=2, node_cap=50_000), (p, word)


def test_optimal_rrs_properties():
    for p, word, _ in SAMPLES:
        r = find_optimal_rrs(p, word, verify=True)
        assert not no_early_cancel_violations(p, r)
        # longest head: nothing starts further right
        assert all(other.head_len <= r.head_len for other in all_rrs(p, word))


def test_stable_under_commutation():
    for p, word, _ in SAMPLES:
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if abs(x) == abs(y) or p.m_letters(x, y) != 2:
                continue
            swapped = word[:i] + (y, x) + word[i + 2:]
            assert find_any_rrs(p, swapped) is not None


def test_stable_under_dihedral_tau():
    seen = 0
    for p, word, r in SAMPLES:
        n = r.tail_start
        for i in range(n):
            for j in range(i + 2, n + 1):
                seg = word[i:j]
                gens = {abs(x) for x in seg}
                if len(gens) != 2:
                    continue
                g, h = sorted(gens)
                m = p.m_letters(g, h)
                if m == INFINITY:
                    continue
                ctx = DihedralContext(g, h, m)
                d = critical_decompose(ctx, seg)
                if d is None:
                    continue
                seen += 1
                moved = word[:i] + tau(ctx, seg, d) + word[j:]
                assert not is_freely_reduced(moved) or find_any_rrs(p, moved) is not None, format_word(p, word)
    assert seen > 20
