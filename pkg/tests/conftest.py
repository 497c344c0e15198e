import functools
import itertools
import random

from hypothesis import settings
from hypothesis import strategies as st

from minkconn.graph import Graph, build_graph, enumerate_graphs, is_connected

# exhaustive oracles have uneven per-example cost; fix the seed so runs repeat
settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = build_graph(n, [p for p, b in zip(pairs, bits) if b])
    if connected and not is_connected(g):
        # thread a path through so the draw is not wasted
        g = g.with_edges([(i, i + 1) for i in range(n - 1)])
    return g


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


@functools.lru_cache(maxsize=None)
def corpus(n: int, min_degree: int = 0) -> tuple[Graph, ...]:
    return tuple(enumerate_graphs(n, min_degree))


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
