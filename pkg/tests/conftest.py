from __future__ import annotations

from hypothesis import settings, strategies as st

from bicyclic.core import Domain, Elem
from bicyclic.families import IndexSet

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# criterion number -> (passed, summary), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}
N_CRITERIA = 12


def record(n: int, ok: bool, summary: str = "") -> bool:
    ACCEPTANCE[n] = (bool(ok), summary)
    return ok


def coords(lo=-20, hi=20):
    return st.integers(lo, hi)


def bomega(hi=20):
    return st.builds(lambda i, j: Elem(i, j, Domain.BOMEGA), coords(0, hi), coords(0, hi))


def cz(lo=-20, hi=20):
    return st.builds(lambda i, j: Elem(i, j, Domain.CZ), coords(lo, hi), coords(lo, hi))


@st.composite
def index_sets(draw):
    prefix = sorted(draw(st.sets(st.integers(0, 40), max_size=6)))
    if draw(st.booleans()):
        start = (prefix[-1] if prefix else -1) + draw(st.integers(1, 5))
        return IndexSet(tuple(prefix), (start, draw(st.integers(1, 4))))
    if not prefix:
        prefix = [draw(st.integers(0, 10))]
    return IndexSet(tuple(prefix))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, N_CRITERIA + 1):
        if n in ACCEPTANCE:
            ok, summary = ACCEPTANCE[n]
            terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {summary}")
        else:
            terminalreporter.write_line(f"criterion {n:2d}: NOT RUN")
