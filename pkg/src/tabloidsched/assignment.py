"""Assignment tableaux and standard assignment tabloids.

A task tableau and a processor tableau of the same shape describe a
bijective assignment cell by cell: the task in cell ``(i, j)`` runs on the
processor in cell ``(i, j)``. Fixing the processor tableau to the row-major
filling 1..n leaves the task tableau alone to carry the assignment, and
forgetting the order inside each row gives a *standard assignment tabloid*,
which stands for every assignment that only differs by swapping tasks among
processors of the same row.

Text encoding of a single term::

    term := ("Y" | "y") int ("," int)*      int := [1-9][0-9]*

``Y`` marks a tabloid (rows sorted), ``y`` a tableau; entries are listed in
row-major order. The shape never appears inside the term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgumentError, InvalidFillingError, ParseError, RowRateError, ShapeError
from .tableau import (
    Partition,
    Tableau,
    Tabloid,
    _as_partition,
    _check_limit,
    enumerate_tabloids,
    row_rearrangements,
    young_subgroup_order,
)

AssignmentSet = frozenset  # of (task, processor) pairs


class TaskTableau(Tableau):
    """Tableau whose entries are task IDs."""


class ProcessorTableau(Tableau):
    """Tableau whose entries are processor IDs."""


@dataclass(frozen=True)
class StandardAssignmentTabloid(Tabloid):
    """Task tabloid paired with the standard processor tableau of the same shape.

    Row ``i`` lists the tasks sent to the processors in row ``i`` of the
    row-major filling 1..n; order inside a row is irrelevant.
    """

    @property
    def key(self) -> str:
        return encode(self)

    def processor_rows(self) -> tuple[tuple[int, ...], ...]:
        return Tableau.standard(self.shape).rows

    def representative_assignment(self) -> dict[int, int]:
        """The member of the class obtained with ascending rows, as task -> processor."""
        return {t: p for t, p in zip(self.entries(), range(1, self.n + 1))}

    def processor_groups(self) -> tuple[tuple[int, ...], ...]:
        return self.processor_rows()


def _tableau(obj, cls):
    if isinstance(obj, cls):
        return obj
    if isinstance(obj, Tableau):
        return cls(obj.shape, obj.rows)
    return cls.from_rows(obj)


@dataclass(frozen=True)
class AssignmentTableau:
    task: TaskTableau
    proc: ProcessorTableau

    def __post_init__(self):
        object.__setattr__(self, "task", _tableau(self.task, TaskTableau))
        object.__setattr__(self, "proc", _tableau(self.proc, ProcessorTableau))
        if self.task.shape != self.proc.shape:
            raise ShapeError(f"task shape {self.task.shape} differs from processor shape {self.proc.shape}")

    @property
    def shape(self) -> Partition:
        return self.task.shape

    def is_standard(self) -> bool:
        return self.proc.rows == Tableau.standard(self.shape).rows


def make_assignment_tableau(task, proc) -> AssignmentTableau:
    """Validate and pair a task tableau with a processor tableau.

    Both arguments may be tableaux or plain lists of rows.
    """
    return AssignmentTableau(task, proc)


def assignment_set(a: AssignmentTableau) -> AssignmentSet:
    """The set of ``(task, processor)`` pairs read off cell by cell."""
    pairs = []
    for row_t, row_p in zip(a.task.rows, a.proc.rows):
        pairs.extend(zip(row_t, row_p))
    return frozenset(pairs)


def to_standard(a: AssignmentTableau) -> AssignmentTableau:
    """Rewrite ``a`` over the standard processor tableau, keeping every pair."""
    task_of = {p: t for t, p in assignment_set(a)}
    flat = [task_of[p] for p in range(1, a.shape.n + 1)]
    return AssignmentTableau(TaskTableau(a.shape, a.shape.split(flat)), ProcessorTableau.standard(a.shape))


def canonical_assignment_tabloid(
    task,
    proc=None,
    equal_rate_rows: Sequence[bool] | None = None,
) -> StandardAssignmentTabloid:
    """Collapse ``(task, {proc})`` to its standard assignment tabloid.

    ``proc`` is any representative of the processor tabloid (default: the
    standard tableau); its rows must hold the same processor sets as the
    standard tableau, otherwise the standard tableau is not in the class.
    ``equal_rate_rows`` flags, per row, whether the processors of that row
    share an execution rate; a ``False`` flag means the row cannot be
    collapsed and is reported as :class:`RowRateError`.
    """
    task = _tableau(task, TaskTableau)
    if proc is None:
        proc = ProcessorTableau.standard(task.shape)
    proc = _tableau(proc, ProcessorTableau)
    if task.shape != proc.shape:
        raise ShapeError(f"task shape {task.shape} differs from processor shape {proc.shape}")
    if equal_rate_rows is not None:
        if len(equal_rate_rows) != len(task.shape):
            raise ShapeError("one equal-rate flag per row is required")
        bad = [i + 1 for i, ok in enumerate(equal_rate_rows) if not ok]
        if bad:
            raise RowRateError(f"rows {bad} mix processors of different rates")
    standard = Tableau.standard(task.shape)
    if any(set(r) != set(s) for r, s in zip(proc.rows, standard.rows)):
        raise InvalidArgumentError("processor tabloid does not contain the standard processor tableau")
    a = to_standard(AssignmentTableau(task, proc))
    return StandardAssignmentTabloid(a.shape, a.task.rows)


def standard_tabloid_of(a: AssignmentTableau) -> StandardAssignmentTabloid:
    """The standard assignment tabloid containing the concrete assignment ``a``."""
    s = to_standard(a)
    return StandardAssignmentTabloid(s.shape, s.task.rows)


def enumerate_standard_tabloids(shape, limit: int | None = None) -> list[StandardAssignmentTabloid]:
    """All standard assignment tabloids of ``shape`` in canonical key order."""
    shape = _as_partition(shape)
    return [StandardAssignmentTabloid(shape, T.rows) for T in enumerate_tabloids(shape, limit)]


def assignments_in_tabloid(T: Tabloid, limit: int | None = None) -> tuple[int, list[AssignmentSet]]:
    """Count and list the concrete bijective assignments represented by ``T``."""
    _check_limit(T.n, limit)
    procs = Tableau.standard(T.shape).rows
    out = []
    for rows in row_rearrangements(T.rows):
        pairs = []
        for row_t, row_p in zip(rows, procs):
            pairs.extend(zip(row_t, row_p))
        out.append(frozenset(pairs))
    count = young_subgroup_order(T.shape)
    assert count == len(out)
    return count, out


# --------------------------------------------------------------------------
# text encoding

_TERM = re.compile(r"([Yy])([1-9][0-9]*(?:,[1-9][0-9]*)*)")


def encode(obj: Tabloid | Tableau, kind: str | None = None) -> str:
    """Encode a tabloid as ``"Y..."`` or a tableau as ``"y..."``."""
    if kind is None:
        kind = "tabloid" if isinstance(obj, Tabloid) else "tableau"
    if kind == "tabloid":
        rows = obj.rows if isinstance(obj, Tabloid) else Tabloid(obj.shape, obj.rows).rows
        prefix = "Y"
    elif kind == "tableau":
        rows = obj.rows
        prefix = "y"
    else:
        raise InvalidArgumentError(f"unknown kind {kind!r}")
    return prefix + ",".join(str(x) for row in rows for x in row)


def term_entries(term: str) -> tuple[str, tuple[int, ...]]:
    m = _TERM.fullmatch(term)
    if m is None:
        raise ParseError(f"malformed term {term!r}")
    return m.group(1), tuple(int(x) for x in m.group(2).split(","))


def decode(term: str, shape) -> StandardAssignmentTabloid | Tableau:
    """Inverse of :func:`encode`; ``Y`` terms are re-sorted row by row."""
    shape = _as_partition(shape)
    prefix, flat = term_entries(term)
    if len(flat) != shape.n:
        raise ParseError(f"term {term!r} has {len(flat)} entries, shape {shape} needs {shape.n}")
    rows = shape.split(flat)
    try:
        if prefix == "Y":
            return StandardAssignmentTabloid(shape, rows)
        return Tableau(shape, rows)
    except (InvalidFillingError, ShapeError) as exc:
        raise ParseError(f"term {term!r}: {exc}") from None


def canonical_key(term: str, shape) -> str:
    return encode(decode(term, shape))


def key_order(term: str) -> tuple[int, ...]:
    """Sort key for encoded terms: numeric lexicographic on the entries."""
    return term_entries(term)[1]


# --------------------------------------------------------------------------
# generalized assignment tableaux (n tasks on m <= n processors)


@dataclass(frozen=True)
class GeneralizedAssignmentTableau:
    """A task tableau with a processor filling that may repeat entries."""

    task: TaskTableau
    proc_rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "task", _tableau(self.task, TaskTableau))
        rows = tuple(tuple(int(x) for x in row) for row in self.proc_rows)
        object.__setattr__(self, "proc_rows", rows)
        if tuple(len(r) for r in rows) != self.task.shape.parts:
            raise ShapeError(f"processor filling {rows} does not have shape {self.task.shape}")
        bad = [x for row in rows for x in row if not 1 <= x <= self.m]
        if bad:
            raise InvalidFillingError(f"processor IDs {bad} outside 1..{self.m}")

    @property
    def shape(self) -> Partition:
        return self.task.shape

    @property
    def is_standard(self) -> bool:
        return self.task.rows == Tableau.standard(self.shape).rows

    def assignment_set(self) -> AssignmentSet:
        pairs = []
        for row_t, row_p in zip(self.task.rows, self.proc_rows):
            pairs.extend(zip(row_t, row_p))
        return frozenset(pairs)


def make_generalized(task, proc_filling: Iterable[Sequence[int]], m: int | None = None) -> GeneralizedAssignmentTableau:
    """Pair a task tableau with a processor filling that may repeat IDs.

    ``m`` defaults to the largest processor ID present.
    """
    rows = tuple(tuple(row) for row in proc_filling)
    if m is None:
        m = max((x for row in rows for x in row), default=1)
    return GeneralizedAssignmentTableau(task, rows, m)


def as_assignment(obj) -> dict[int, int]:
    """Normalise an assignment given as a tableau pair, a set of pairs or a mapping."""
    if isinstance(obj, AssignmentTableau):
        return dict(assignment_set(obj))
    if isinstance(obj, Mapping):
        return {int(t): int(p) for t, p in obj.items()}
    return {int(t): int(p) for t, p in obj}
