"""Partitions, permutations of {1..n}, Young tableaux and tabloids.

Conventions used throughout the package:

* permutations compose right to left, ``(p * q)(x) == p(q(x))``;
* a tabloid is stored through its canonical representative, the tableau
  whose rows are sorted ascending;
* tabloids of one shape are totally ordered by their row-major entry tuple.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InvalidArgumentError, InvalidFillingError, ParseError, ShapeError

#: Largest ``n`` for which exhaustive enumeration of tabloids is attempted.
ENUMERATION_LIMIT = 10


def _check_limit(n: int, limit: int | None) -> None:
    bound = ENUMERATION_LIMIT if limit is None else limit
    if n > bound:
        raise CapacityError(f"n = {n} exceeds the enumeration bound {bound}")


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidArgumentError("a partition needs at least one part")
        if any(x < 1 for x in parts):
            raise InvalidArgumentError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgumentError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read a comma-separated shape such as ``"3,1"``."""
        try:
            parts = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        except ValueError:
            raise ParseError(f"bad shape string {text!r}") from None
        try:
            return cls(parts)
        except InvalidArgumentError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def row_slices(self) -> list[slice]:
        """Slices of a row-major flat filling that correspond to each row."""
        out, start = [], 0
        for part in self.parts:
            out.append(slice(start, start + part))
            start += part
        return out

    def split(self, flat: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(flat[s]) for s in self.row_slices())


def _as_partition(shape) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(tuple(shape))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first (reverse lexicographic order)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def young_subgroup_order(shape: Partition) -> int:
    return prod(factorial(part) for part in _as_partition(shape))


def tabloid_count(shape: Partition) -> int:
    """Multinomial coefficient n! / (l1! l2! ...)."""
    shape = _as_partition(shape)
    return factorial(shape.n) // young_subgroup_order(shape)


# --------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1, 2, ..., n."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise InvalidArgumentError("a permutation must act on at least one point")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidArgumentError(f"not a bijection of 1..{len(images)}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= n:
                    raise InvalidArgumentError(f"cycle entry {x} outside 1..{n}")
                if x in seen:
                    raise InvalidArgumentError(f"entry {x} appears in more than one place")
                seen.add(x)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def from_cycle_type(cls, shape: Partition) -> "Permutation":
        """A representative permutation whose cycle lengths are the parts of ``shape``."""
        shape = _as_partition(shape)
        cycles, start = [], 1
        for part in shape:
            cycles.append(range(start, start + part))
            start += part
        return cls.from_cycles(cycles, shape.n)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self(x)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE_TEXT = re.compile(r"\s*\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Permutation:
    """Read cycle notation such as ``"(1 3 4 2)(5 6)"``; ``"e"`` or ``"()"`` is the identity.

    Entries inside a cycle may be separated by spaces or commas.
    """
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    stripped = text.strip()
    if stripped == "e":
        return Permutation.identity(n)
    if not stripped:
        raise ParseError("empty permutation text")
    cycles = []
    pos = 0
    while pos < len(stripped):
        m = _CYCLE_TEXT.match(stripped, pos)
        if m is None:
            raise ParseError(f"malformed cycle notation: {text!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError:
            raise ParseError(f"non-integer entry in {text!r}") from None
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    try:
        return Permutation.from_cycles(cycles, n)
    except InvalidArgumentError as exc:
        raise ParseError(str(exc)) from None


def _same_size(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise InvalidArgumentError(f"permutations act on different sets: {p.n} vs {q.n}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, the permutation ``x -> p(q(x))``."""
    _same_size(p, q)
    return Permutation(tuple(p(q(x)) for x in range(1, q.n + 1)))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for x, y in enumerate(p.images, 1):
        images[y - 1] = x
    return Permutation(tuple(images))


def sign(p: Permutation) -> int:
    # each k-cycle is a product of k - 1 transpositions
    return -1 if (p.n - len(p.cycles(include_fixed=True))) % 2 else 1


def cycle_type(p: Permutation) -> Partition:
    lengths = sorted((len(c) for c in p.cycles(include_fixed=True)), reverse=True)
    return Partition(tuple(lengths))


# --------------------------------------------------------------------------
# tableaux and tabloids


def _normalise_rows(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _check_filling(shape: Partition, rows: tuple[tuple[int, ...], ...]) -> None:
    if tuple(len(r) for r in rows) != shape.parts:
        raise ShapeError(f"row lengths {[len(r) for r in rows]} do not match shape {shape.parts}")
    flat = [x for row in rows for x in row]
    if sorted(flat) != list(range(1, shape.n + 1)):
        raise InvalidFillingError(f"entries must be exactly 1..{shape.n} once each, got {flat}")


def _shape_of_rows(rows) -> Partition:
    try:
        return Partition(tuple(len(r) for r in rows))
    except InvalidArgumentError as exc:
        raise ShapeError(str(exc)) from None


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram with 1..n."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", _as_partition(self.shape))
        object.__setattr__(self, "rows", _normalise_rows(self.rows))
        _check_filling(self.shape, self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]):
        return cls(_shape_of_rows(rows), rows)

    @classmethod
    def standard(cls, shape: Partition):
        """The filling 1..n in row-major order."""
        shape = _as_partition(shape)
        return cls(shape, shape.split(range(1, shape.n + 1)))

    @property
    def n(self) -> int:
        return self.shape.n

    def entries(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(row, column, entry)`` with zero-based coordinates."""
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    def row_of(self) -> dict[int, int]:
        """Map each entry to the index of the row holding it."""
        return {x: i for i, row in enumerate(self.rows) for x in row}


@dataclass(frozen=True)
class Tabloid:
    """A row-equivalence class of tableaux, kept with ascending rows."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", _as_partition(self.shape))
        rows = tuple(tuple(sorted(row)) for row in _normalise_rows(self.rows))
        object.__setattr__(self, "rows", rows)
        _check_filling(self.shape, rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]):
        return cls(_shape_of_rows(rows), rows)

    @property
    def n(self) -> int:
        return self.shape.n

    def entries(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def sort_key(self) -> tuple[int, ...]:
        return self.entries()

    def __lt__(self, other: "Tabloid") -> bool:
        return (self.shape.parts, self.sort_key()) < (other.shape.parts, other.sort_key())

    def representative(self) -> Tableau:
        return Tableau(self.shape, self.rows)

    def row_of(self) -> dict[int, int]:
        return {x: i for i, row in enumerate(self.rows) for x in row}


def _check_acts(p: Permutation, shape: Partition) -> None:
    if p.n != shape.n:
        raise InvalidArgumentError(f"permutation of {p.n} points cannot act on shape {shape}")


def act_on_tableau(p: Permutation, t: Tableau) -> Tableau:
    _check_acts(p, t.shape)
    return type(t)(t.shape, tuple(tuple(p(x) for x in row) for row in t.rows))


def canonicalize(t: Tableau) -> Tabloid:
    return Tabloid(t.shape, t.rows)


def act_on_tabloid(p: Permutation, T: Tabloid) -> Tabloid:
    """Apply ``p`` to every entry and re-sort the rows; the result keeps ``T``'s type."""
    _check_acts(p, T.shape)
    return type(T)(T.shape, tuple(tuple(p(x) for x in row) for row in T.rows))


def row_equivalent(t1: Tableau, t2: Tableau) -> bool:
    if t1.shape != t2.shape:
        raise InvalidArgumentError(f"shapes differ: {t1.shape} vs {t2.shape}")
    return all(Counter(a) == Counter(b) for a, b in zip(t1.rows, t2.rows))


@lru_cache(maxsize=64)
def _tabloid_rows(shape: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    def fill(remaining: tuple[int, ...], parts: tuple[int, ...]):
        if not parts:
            yield ()
            return
        for row in combinations(remaining, parts[0]):
            chosen = set(row)
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in fill(rest, parts[1:]):
                yield (row,) + tail

    # combinations() emits in lexicographic order, so the output is already sorted
    return tuple(fill(tuple(range(1, shape.n + 1)), shape.parts))


def enumerate_tabloids(shape: Partition, limit: int | None = None) -> list[Tabloid]:
    """Every tabloid of ``shape``, sorted by row-major entries."""
    shape = _as_partition(shape)
    _check_limit(shape.n, limit)
    return [Tabloid(shape, rows) for rows in _tabloid_rows(shape)]


def row_rearrangements(rows: Sequence[Sequence[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All tableaux row-equivalent to ``rows`` (the Young subgroup orbit)."""
    return product(*(permutations(row) for row in rows))
