"""Task graphs, heterogeneous processor systems and schedule evaluation.

With as many processors as tasks and a bijective assignment, every processor
runs exactly one task, so there is no queueing decision to make: each task
starts at its data ready time,

    start(v) = max over predecessors u of finish(u) + comm(u, v)

(0 for entry tasks), and finishes ``omega(v, proc(v))`` later. A processor is
idle until its task starts, so its busy-plus-idle time equals the finish time
of that task and the turnaround is the makespan.
"""

from __future__ import annotations

import graphlib
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .assignment import StandardAssignmentTabloid, as_assignment, enumerate_standard_tabloids
from .errors import CycleError, InvalidArgumentError, ParseError, RowRateError
from .tableau import Partition, Tabloid, _as_partition


@dataclass(frozen=True, eq=False)
class TaskGraph:
    """Weighted DAG on tasks 1..n.

    ``requirements[v]`` is the computation requirement of task ``v`` and
    ``edges[(u, v)]`` the amount of data sent from ``u`` to ``v``.
    """

    requirements: Mapping[int, float]
    edges: Mapping[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        reqs = {int(v): float(r) for v, r in self.requirements.items()}
        edges = {(int(u), int(v)): float(d) for (u, v), d in self.edges.items()}
        object.__setattr__(self, "requirements", reqs)
        object.__setattr__(self, "edges", edges)
        if sorted(reqs) != list(range(1, len(reqs) + 1)):
            raise InvalidArgumentError(f"task IDs must be 1..n, got {sorted(reqs)}")
        for v, r in reqs.items():
            if not (r > 0 and math.isfinite(r)):
                raise InvalidArgumentError(f"task {v} has non-positive requirement {r}")
        for (u, v), d in edges.items():
            if u not in reqs or v not in reqs:
                raise InvalidArgumentError(f"edge ({u}, {v}) references an unknown task")
            if u == v:
                raise CycleError(f"self-loop on task {u}")
            if not (d >= 0 and math.isfinite(d)):
                raise InvalidArgumentError(f"edge ({u}, {v}) has negative data size {d}")
        preds: dict[int, list[int]] = {v: [] for v in reqs}
        for u, v in sorted(edges):
            preds[v].append(u)
        try:
            order = tuple(graphlib.TopologicalSorter(preds).static_order())
        except graphlib.CycleError as exc:
            raise CycleError(f"task graph has a cycle through {exc.args[1]}") from None
        object.__setattr__(self, "_preds", {v: tuple(ps) for v, ps in preds.items()})
        object.__setattr__(self, "_order", order)

    @property
    def n(self) -> int:
        return len(self.requirements)

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._preds[v]

    def topological_order(self) -> tuple[int, ...]:
        return self._order

    def entry_tasks(self) -> list[int]:
        return [v for v in sorted(self.requirements) if not self._preds[v]]

    def exit_tasks(self) -> list[int]:
        sources = {u for u, _ in self.edges}
        return [v for v in sorted(self.requirements) if v not in sources]


@dataclass(frozen=True, eq=False)
class ProcessorSystem:
    """Fully connected processors 1..m with identical links.

    A *consistent* system gives each processor an execution rate and costs
    ``requirement / rate``; an *inconsistent* one takes the costs from a
    task-by-processor matrix (row ``v - 1``, column ``p - 1``).
    """

    rates: Mapping[int, float] | None = None
    cost_matrix: np.ndarray | None = None
    link_rate: float = 1.0

    def __post_init__(self):
        if (self.rates is None) == (self.cost_matrix is None):
            raise InvalidArgumentError("give exactly one of rates or cost_matrix")
        if not (self.link_rate > 0 and math.isfinite(self.link_rate)):
            raise InvalidArgumentError(f"link rate must be positive, got {self.link_rate}")
        object.__setattr__(self, "link_rate", float(self.link_rate))
        if self.rates is not None:
            rates = {int(p): float(e) for p, e in self.rates.items()}
            if sorted(rates) != list(range(1, len(rates) + 1)):
                raise InvalidArgumentError(f"processor IDs must be 1..m, got {sorted(rates)}")
            if any(not (e > 0 and math.isfinite(e)) for e in rates.values()):
                raise InvalidArgumentError("execution rates must be positive")
            object.__setattr__(self, "rates", rates)
        else:
            w = np.array(self.cost_matrix, dtype=float)
            if w.ndim != 2 or w.size == 0:
                raise InvalidArgumentError("cost matrix must be a non-empty 2-D array")
            if not np.all((w > 0) & np.isfinite(w)):
                raise InvalidArgumentError("cost matrix entries must be positive")
            w.setflags(write=False)
            object.__setattr__(self, "cost_matrix", w)

    @classmethod
    def consistent(cls, rates, link_rate: float = 1.0) -> "ProcessorSystem":
        if not isinstance(rates, Mapping):
            rates = {p: e for p, e in enumerate(rates, 1)}
        return cls(rates=rates, link_rate=link_rate)

    @classmethod
    def inconsistent(cls, cost_matrix, link_rate: float = 1.0) -> "ProcessorSystem":
        return cls(cost_matrix=cost_matrix, link_rate=link_rate)

    @property
    def mode(self) -> str:
        return "consistent" if self.rates is not None else "inconsistent"

    @property
    def m(self) -> int:
        return len(self.rates) if self.rates is not None else self.cost_matrix.shape[1]


def computation_cost(v: int, p: int, g: TaskGraph, s: ProcessorSystem) -> float:
    if v not in g.requirements:
        raise InvalidArgumentError(f"unknown task {v}")
    if not 1 <= p <= s.m:
        raise InvalidArgumentError(f"unknown processor {p}")
    if s.rates is not None:
        return g.requirements[v] / s.rates[p]
    if v > s.cost_matrix.shape[0]:
        raise InvalidArgumentError(f"cost matrix has no row for task {v}")
    return float(s.cost_matrix[v - 1, p - 1])


def communication_cost(vi: int, vj: int, ps: int, pt: int, g: TaskGraph, s: ProcessorSystem) -> float:
    if (vi, vj) not in g.edges:
        raise InvalidArgumentError(f"({vi}, {vj}) is not an edge")
    if ps == pt:
        return 0.0
    return g.edges[(vi, vj)] / s.link_rate


@dataclass(frozen=True)
class Schedule:
    start: dict[int, float]
    finish: dict[int, float]
    proc_of: dict[int, int]
    exec_time: dict[int, float]
    idle_time: dict[int, float]
    turnaround: float
    utilization: dict[int, float]
    average_utilization: float


def _row_rates_equal(T: Tabloid, s: ProcessorSystem) -> None:
    if s.rates is None:
        raise InvalidArgumentError("tabloid evaluation needs a consistent system (rates per processor)")
    for i, row in enumerate(_standard_proc_rows(T.shape), 1):
        rates = {s.rates[p] for p in row}
        if len(rates) > 1:
            raise RowRateError(f"processors {row} in row {i} have different rates {sorted(rates)}")


def _standard_proc_rows(shape: Partition):
    out, p = [], 1
    for part in shape:
        out.append(tuple(range(p, p + part)))
        p += part
    return out


def evaluate(assignment, g: TaskGraph, s: ProcessorSystem) -> Schedule:
    """Schedule ``g`` on ``s`` under a bijective assignment.

    ``assignment`` is a standard assignment tabloid, an assignment tableau,
    a ``{task: processor}`` mapping or an iterable of pairs. A tabloid is
    only meaningful when each of its processor rows shares one rate, which
    is checked.
    """
    if isinstance(assignment, Tabloid):
        if assignment.n != g.n:
            raise InvalidArgumentError(f"tabloid has {assignment.n} cells, graph has {g.n} tasks")
        _row_rates_equal(assignment, s)
        proc_of = StandardAssignmentTabloid(assignment.shape, assignment.rows).representative_assignment()
    else:
        proc_of = as_assignment(assignment)

    n = g.n
    if s.m != n:
        raise InvalidArgumentError(f"{n} tasks but {s.m} processors")
    if sorted(proc_of) != list(range(1, n + 1)) or sorted(proc_of.values()) != list(range(1, n + 1)):
        raise InvalidArgumentError(f"assignment is not a bijection of 1..{n}: {proc_of}")

    start: dict[int, float] = {}
    finish: dict[int, float] = {}
    cost: dict[int, float] = {}
    for v in g.topological_order():
        p = proc_of[v]
        ready = 0.0
        for u in g.predecessors(v):
            ready = max(ready, finish[u] + communication_cost(u, v, proc_of[u], p, g, s))
        cost[v] = computation_cost(v, p, g, s)
        start[v] = ready
        finish[v] = ready + cost[v]

    task_on = {p: v for v, p in proc_of.items()}
    exec_time = {p: cost[task_on[p]] for p in range(1, n + 1)}
    idle_time = {p: start[task_on[p]] for p in range(1, n + 1)}
    turnaround = max(exec_time[p] + idle_time[p] for p in range(1, n + 1))
    utilization = {p: exec_time[p] / turnaround for p in range(1, n + 1)}
    return Schedule(
        start=dict(sorted(start.items())),
        finish=dict(sorted(finish.items())),
        proc_of=dict(sorted(proc_of.items())),
        exec_time=exec_time,
        idle_time=idle_time,
        turnaround=turnaround,
        utilization=utilization,
        # summed per task, so members of one tabloid class agree bit for bit
        average_utilization=sum(cost[v] for v in range(1, n + 1)) / turnaround / n,
    )


def optimize(g: TaskGraph, s: ProcessorSystem, shape, metric: str = "turnaround", limit: int | None = None):
    """Exhaustive search over the standard assignment tabloids of ``shape``.

    Returns ``(best_tabloid, value)``: the smallest turnaround, or the largest
    average utilization. Ties keep the first tabloid in canonical order.
    """
    if metric not in ("turnaround", "utilization"):
        raise InvalidArgumentError(f"unknown metric {metric!r}")
    shape = _as_partition(shape)
    best, best_value = None, None
    for T in enumerate_standard_tabloids(shape, limit):
        sched = evaluate(T, g, s)
        if metric == "turnaround":
            value = sched.turnaround
            better = best_value is None or value < best_value
        else:
            value = sched.average_utilization
            better = best_value is None or value > best_value
        if better:
            best, best_value = T, value
    return best, best_value


def k_copies_totals(v, per_tabloid_turnaround: Mapping[str, float]) -> tuple[float, float]:
    """Total and per-copy turnaround of ``k`` back-to-back runs described by ``v``.

    ``v`` is a :class:`~tabloidsched.vectorspace.KVector` whose coefficients
    count how many times each tabloid is run.
    """
    total, k = 0.0, 0
    for key, c in v.coeffs.items():
        if c < 0 or c != int(c):
            raise InvalidArgumentError(f"coefficient {c} of {key} is not a non-negative integer")
        if key not in per_tabloid_turnaround:
            raise InvalidArgumentError(f"no turnaround given for {key}")
        total += c * per_tabloid_turnaround[key]
        k += int(c)
    if k == 0:
        raise InvalidArgumentError("the vector describes zero copies")
    return total, total / k


# --------------------------------------------------------------------------
# file formats


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _number(tok: str, lineno: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: {tok!r} is not a number") from None
    if not math.isfinite(x):
        raise ParseError(f"line {lineno}: {tok!r} is not finite")
    return x


def _ident(tok: str, lineno: int) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise ParseError(f"line {lineno}: {tok!r} is not a positive integer ID")
    return int(tok)


def parse_task_graph(text: str) -> TaskGraph:
    """Read ``task <id> <requirement>`` and ``edge <src> <dst> <data>`` lines."""
    reqs: dict[int, float] = {}
    edges: dict[tuple[int, int], float] = {}
    for lineno, toks in _lines(text):
        if toks[0] == "task" and len(toks) == 3:
            v = _ident(toks[1], lineno)
            if v in reqs:
                raise ParseError(f"line {lineno}: duplicate task {v}")
            r = _number(toks[2], lineno)
            if r <= 0:
                raise ParseError(f"line {lineno}: requirement must be positive")
            reqs[v] = r
        elif toks[0] == "edge" and len(toks) == 4:
            u, v = _ident(toks[1], lineno), _ident(toks[2], lineno)
            if (u, v) in edges:
                raise ParseError(f"line {lineno}: duplicate edge {u} -> {v}")
            d = _number(toks[3], lineno)
            if d < 0:
                raise ParseError(f"line {lineno}: data size must be non-negative")
            edges[(u, v)] = d
        else:
            raise ParseError(f"line {lineno}: expected 'task ID REQ' or 'edge SRC DST DATA'")
    if not reqs:
        raise ParseError("no tasks declared")
    for u, v in edges:
        if u not in reqs or v not in reqs:
            raise ParseError(f"edge {u} -> {v} references an undeclared task")
    try:
        return TaskGraph(reqs, edges)
    except InvalidArgumentError as exc:
        raise ParseError(str(exc)) from None


def parse_processors(text: str) -> ProcessorSystem:
    """Read a processor file.

    Consistent systems list ``proc <id> <rate>`` lines; a file whose first
    directive is ``costmatrix`` instead lists ``row <task> <w1> ... <wm>``.
    Either form accepts an optional ``link <rate>`` line (default 1).
    """
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty processor file")
    link = 1.0
    if lines[0][1] == ["costmatrix"]:
        rows: dict[int, list[float]] = {}
        for lineno, toks in lines[1:]:
            if toks[0] == "link" and len(toks) == 2:
                link = _number(toks[1], lineno)
            elif toks[0] == "row" and len(toks) >= 3:
                v = _ident(toks[1], lineno)
                if v in rows:
                    raise ParseError(f"line {lineno}: duplicate row for task {v}")
                rows[v] = [_number(t, lineno) for t in toks[2:]]
            else:
                raise ParseError(f"line {lineno}: expected 'row TASK W1 ... WM' or 'link RATE'")
        if sorted(rows) != list(range(1, len(rows) + 1)):
            raise ParseError(f"cost matrix rows must cover tasks 1..n, got {sorted(rows)}")
        if len({len(r) for r in rows.values()}) != 1:
            raise ParseError("cost matrix rows have different lengths")
        matrix = [rows[v] for v in sorted(rows)]
        try:
            return ProcessorSystem.inconsistent(matrix, link)
        except InvalidArgumentError as exc:
            raise ParseError(str(exc)) from None

    rates: dict[int, float] = {}
    for lineno, toks in lines:
        if toks[0] == "proc" and len(toks) == 3:
            p = _ident(toks[1], lineno)
            if p in rates:
                raise ParseError(f"line {lineno}: duplicate processor {p}")
            rates[p] = _number(toks[2], lineno)
        elif toks[0] == "link" and len(toks) == 2:
            link = _number(toks[1], lineno)
        else:
            raise ParseError(f"line {lineno}: expected 'proc ID RATE' or 'link RATE'")
    try:
        return ProcessorSystem.consistent(rates, link)
    except InvalidArgumentError as exc:
        raise ParseError(str(exc)) from None
