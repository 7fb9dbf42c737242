import random

import pytest

from threefree.presentation import INFINITY, Presentation, fixture

EXPONENTS = (2, 4, 5, 6, INFINITY)

# (criterion, passed, detail) lines collected by the acceptance suite
ACCEPTANCE = []


def report(number, title, passed, detail=""):
    line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE.append(line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def random_presentation(rng, max_gens=4):
    n = rng.randint(2, max_gens)
    gens = tuple("abcd"[:n])
    cox = {(gens[i], gens[j]): rng.choice(EXPONENTS) for i in range(n) for j in range(i + 1, n)}
    return Presentation(gens, cox)


def random_word(rng, p, length, reduced=True):
    w = []
    while len(w) < length:
        x = rng.choice((1, -1)) * rng.randint(1, p.rank)
        if reduced and w and w[-1] == -x:
            continue
        w.append(x)
    return tuple(w)


def freely_reduced_words(gens, max_len):
    """Every freely reduced word over ``gens`` up to ``max_len``, shortest first."""
    frontier = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g in gens:
                for x in (g, -g):
                    if w and w[-1] == -x:
                        continue
                    nxt.append(w + (x,))
        yield from nxt
        frontier = nxt


@pytest.fixture(scope="session")
def p1():
    return fixture("p1")


@pytest.fixture(scope="session")
def p2():
    return fixture("p2")


@pytest.fixture(scope="session")
def fpc():
    return fixture("fpc")


@pytest.fixture
def rng():
    return random.Random(20240601)
