import random
from functools import lru_cache
from pathlib import Path

import pytest

from tabloidsched import ProcessorSystem, TaskGraph, parse_corpus

DATA = Path(__file__).resolve().parent.parent / "notebooks" / "data"

WORKED_CORPUS = """#shape 2,2
#kind tabloid
Y1,3,2,4  Y1,4,2,3  Y1,4,2,3  Y3,4,1,2  Y2,3,1,4
Y1,3,2,4  Y1,2,3,4  Y1,3,2,4
Y2,4,1,3  Y1,2,3,4  Y1,2,3,4  Y2,4,1,3
"""
WORKED_QUERY = ("Y1,3,2,4", "Y1,2,3,4")

# turnaround of each (2,2) tabloid on the four-task example with rates 5,5,10,10
WORKED_TURNAROUNDS = {
    "Y1,2,3,4": 15.0,
    "Y1,3,2,4": 23.0,
    "Y1,4,2,3": 20.0,
    "Y2,3,1,4": 23.0,
    "Y2,4,1,3": 20.0,
    "Y3,4,1,2": 28.0,
}


@pytest.fixture
def worked_corpus():
    return parse_corpus(WORKED_CORPUS)


@pytest.fixture
def chain_graph():
    return TaskGraph({1: 1, 2: 2, 3: 3, 4: 4}, {(1, 2): 0, (2, 3): 0, (3, 4): 0})


@pytest.fixture
def chain_system():
    return ProcessorSystem.consistent([1, 1, 2, 2])


def random_dag(rng: random.Random, n: int, density: float = 0.4, max_data: int = 6) -> TaskGraph:
    """Random DAG on 1..n: edges only go from a lower to a higher label under a hidden shuffle."""
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    reqs = {v: rng.randint(1, 9) for v in range(1, n + 1)}
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                edges[(labels[i], labels[j])] = rng.randint(0, max_data)
    return TaskGraph(reqs, edges)


def random_rates_for_shape(rng: random.Random, shape) -> list[float]:
    """One random rate per row, repeated across that row's processors."""
    rates = []
    for part in shape:
        r = rng.choice([1, 2, 3, 4, 5, 0.5, 1.5])
        rates.extend([r] * part)
    return rates


def brute_turnaround(g: TaskGraph, rates, link_rate: float, proc_of: dict) -> float:
    """Finish times by memoised recursion over predecessors, independent of the library's loop."""
    preds = {v: [u for (u, w) in g.edges if w == v] for v in g.requirements}

    @lru_cache(maxsize=None)
    def finish(v):
        ready = 0.0
        for u in preds[v]:
            comm = 0.0 if proc_of[u] == proc_of[v] else g.edges[(u, v)] / link_rate
            ready = max(ready, finish(u) + comm)
        return ready + g.requirements[v] / rates[proc_of[v] - 1]

    return max(finish(v) for v in g.requirements)
