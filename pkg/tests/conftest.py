import random
from pathlib import Path

import pytest

from dihedral import covers, pipeline
from dihedral.diagram import braid_crossings, code_from_crossings, enumerate_colorings

DATA = Path(__file__).resolve().parents[1] / "src" / "dihedral" / "data"
FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def six_one_path():
    return DATA / "six_one.knot"


@pytest.fixture
def alpha_path():
    return DATA / "alpha_11.knot"


@pytest.fixture
def six_one():
    return pipeline.load_problem(DATA / "six_one.knot")


@pytest.fixture
def alpha_11():
    return pipeline.load_problem(DATA / "alpha_11.knot")


def random_colored_link(seed, components=3):
    """
    A 3-colored closed braid: a knot plus ``components - 1`` curves whose
    lifts all close up.  Returns (components, signs, code) or None.
    """
    rng = random.Random(seed)
    for _ in range(2000):
        n = rng.choice([4, 5, 6])
        w = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(8, 20))]
        comps, signs = braid_crossings(w, n)
        if len(comps) != components:
            continue
        try:
            code = code_from_crossings(comps, signs, 0, tuple(range(1, components)))
        except ValueError:
            continue
        cols = [c for c in enumerate_colorings(code, 3) if c.nontrivial]
        if not cols:
            continue
        code = code.with_colors(cols[0].colors)
        try:
            covers.build_cover(code, 3)
        except covers.CoverError:
            continue            # some curve has a lift that does not close
        return comps, signs, code
    return None


def pytest_terminal_summary(terminalreporter):
    import acceptance_log
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.report():
            terminalreporter.write_line(line)
