"""The k-assignments vector space over standard assignment tabloids.

Vectors and functionals are sparse maps from encoded tabloid keys to real
coefficients. Dense coordinates always follow the canonical key order of
:func:`basis_keys`, so matrices, functionals and character tables agree on
which axis is which.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .assignment import decode, encode, enumerate_standard_tabloids, key_order
from .errors import InvalidArgumentError, ParseError, SingularMatrixError
from .schedule import ProcessorSystem, TaskGraph, evaluate
from .tableau import (
    Partition,
    Permutation,
    Tabloid,
    _as_partition,
    _check_limit,
    act_on_tabloid,
    cycle_type,
    partitions_of,
    tabloid_count,
)


def dimension(shape) -> int:
    return tabloid_count(_as_partition(shape))


@lru_cache(maxsize=64)
def _basis(shape: Partition) -> tuple[str, ...]:
    return tuple(encode(T) for T in enumerate_standard_tabloids(shape))


def basis_keys(shape) -> tuple[str, ...]:
    """Encoded basis tabloids of ``shape`` in coordinate order."""
    return _basis(_as_partition(shape))


class _Coefficients:
    """Shared machinery for sparse coefficient maps keyed by tabloid terms."""

    __slots__ = ("shape", "coeffs")

    def __init__(self, shape, coeffs: Mapping[str, float] | None = None):
        shape = _as_partition(shape)
        merged: dict[str, float] = {}
        for term, c in (coeffs or {}).items():
            try:
                T = decode(term, shape)
            except ParseError as exc:
                raise InvalidArgumentError(f"{term!r} is not a basis key of shape {shape}: {exc}") from None
            if not isinstance(T, Tabloid):
                raise InvalidArgumentError(f"{term!r} is a tableau, expected a tabloid key")
            key = encode(T)
            merged[key] = merged.get(key, 0.0) + float(c)
        self.shape = shape
        self.coeffs = {k: merged[k] for k in sorted(merged, key=key_order) if merged[k] != 0.0}

    @classmethod
    def basis(cls, shape, key: str):
        return cls(shape, {key: 1.0})

    @classmethod
    def from_array(cls, shape, values):
        keys = basis_keys(shape)
        values = np.asarray(values, dtype=float)
        if values.shape != (len(keys),):
            raise InvalidArgumentError(f"expected {len(keys)} coordinates, got shape {values.shape}")
        return cls(shape, {k: x for k, x in zip(keys, values)})

    def to_array(self) -> np.ndarray:
        keys = basis_keys(self.shape)
        index = {k: i for i, k in enumerate(keys)}
        out = np.zeros(len(keys))
        for k, c in self.coeffs.items():
            out[index[k]] = c
        return out

    def _same_shape(self, other) -> None:
        if not isinstance(other, _Coefficients) or other.shape != self.shape:
            raise InvalidArgumentError(f"shape mismatch: {self.shape} vs {getattr(other, 'shape', other)}")

    def __add__(self, other):
        self._same_shape(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0.0) + c
        return type(self)(self.shape, out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, scalar: float):
        return type(self)(self.shape, {k: scalar * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return -1.0 * self

    def __eq__(self, other):
        return type(other) is type(self) and other.shape == self.shape and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.shape, tuple(self.coeffs.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.shape.parts}, {format_terms(self.coeffs)!r})"


class KVector(_Coefficients):
    """A real combination of standard assignment tabloids.

    Non-negative integer coefficients count copies of an assignment run
    back to back; other coefficients are accepted but carry no scheduling
    meaning.
    """

    __slots__ = ()


class Functional(_Coefficients):
    """A linear functional, given by its coordinates in the dual basis."""

    __slots__ = ()

    def __call__(self, v: KVector) -> float:
        return pair(self, v)


# --------------------------------------------------------------------------
# action, inner product, characters


def _check_perm(p: Permutation, shape: Partition) -> None:
    if p.n != shape.n:
        raise InvalidArgumentError(f"permutation of {p.n} points cannot act on shape {shape}")


def act(p: Permutation, v: KVector) -> KVector:
    """Relabel every basis tabloid of ``v`` through ``p``."""
    _check_perm(p, v.shape)
    out = {}
    for key, c in v.coeffs.items():
        out[encode(act_on_tabloid(p, decode(key, v.shape)))] = c
    return type(v)(v.shape, out)


def permutation_matrix(p: Permutation, shape) -> np.ndarray:
    """Matrix of ``act(p, .)`` in canonical coordinates; column j is the image of basis j."""
    shape = _as_partition(shape)
    _check_perm(p, shape)
    keys = basis_keys(shape)
    index = {k: i for i, k in enumerate(keys)}
    M = np.zeros((len(keys), len(keys)))
    for j, key in enumerate(keys):
        M[index[encode(act_on_tabloid(p, decode(key, shape)))], j] = 1.0
    return M


def inner_product(u: KVector, v: KVector) -> float:
    u._same_shape(v)
    return float(sum(c * v.coeffs.get(k, 0.0) for k, c in u.coeffs.items()))


def character(shape, p: Permutation, limit: int | None = None) -> int:
    """Number of standard assignment tabloids of ``shape`` fixed by ``p``."""
    shape = _as_partition(shape)
    _check_perm(p, shape)
    _check_limit(shape.n, limit)
    return sum(1 for T in enumerate_standard_tabloids(shape, limit) if act_on_tabloid(p, T) == T)


@dataclass(frozen=True)
class CharacterTable:
    """Characters of the permutation modules of S_n.

    ``values[i, j]`` is the character of ``shapes[i]`` on the class of
    cycle type ``classes[j]``. Rows and columns both run from ``(1, ..., 1)``
    up to ``(n)``, the reverse of :func:`partitions_of`, which puts the
    identity class (the dimensions) in the first column.
    """

    shapes: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: np.ndarray

    def __getitem__(self, item: tuple[Partition, Partition]) -> int:
        lam, mu = item
        return int(self.values[self.shapes.index(_as_partition(lam)), self.classes.index(_as_partition(mu))])


def character_table(n: int, limit: int | None = None) -> CharacterTable:
    _check_limit(n, limit)
    order = tuple(reversed(partitions_of(n)))
    values = np.zeros((len(order), len(order)), dtype=np.int64)
    for j, mu in enumerate(order):
        g = Permutation.from_cycle_type(mu)
        assert cycle_type(g) == mu
        for i, lam in enumerate(order):
            values[i, j] = character(lam, g, limit)
    values.setflags(write=False)
    return CharacterTable(order, order, values)


# --------------------------------------------------------------------------
# dual space


def pair(f: Functional, v: KVector) -> float:
    """Evaluate the functional ``f`` on ``v``."""
    if not isinstance(f, _Coefficients):
        raise InvalidArgumentError("first argument must be a Functional")
    f._same_shape(v)
    return float(sum(c * v.coeffs.get(k, 0.0) for k, c in f.coeffs.items()))


def turnaround_functional(shape, g: TaskGraph, s: ProcessorSystem) -> Functional:
    """Functional sending each basis tabloid to the turnaround of its schedule."""
    shape = _as_partition(shape)
    coeffs = {encode(T): evaluate(T, g, s).turnaround for T in enumerate_standard_tabloids(shape)}
    return Functional(shape, coeffs)


def _square(M, order: int) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidArgumentError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] != order:
        raise InvalidArgumentError(f"matrix of order {M.shape[0]} cannot act on a space of dimension {order}")
    return M


def apply_matrix(M, v: KVector) -> KVector:
    """Multiply the canonical coordinates of ``v`` by ``M``."""
    M = _square(M, dimension(v.shape))
    return type(v).from_array(v.shape, M @ v.to_array())


def relative_determinant(M) -> float:
    """``|det M|`` divided by the product of the row norms; 1 for orthogonal rows, 0 when singular."""
    M = np.asarray(M, dtype=float)
    norms = np.linalg.norm(M, axis=1)
    if np.any(norms == 0):
        return 0.0
    sign, logdet = np.linalg.slogdet(M / norms[:, None])
    return 0.0 if sign == 0 else float(np.exp(logdet))


def contragredient(M, tol: float = 1e-12) -> np.ndarray:
    """Transpose of the inverse of ``M``."""
    M = np.asarray(M, dtype=float)
    if relative_determinant(M) < tol:
        raise SingularMatrixError("matrix is singular to working precision")
    try:
        return np.linalg.inv(M).T
    except np.linalg.LinAlgError:
        raise SingularMatrixError("matrix is singular") from None


def dual_transform(M, f: Functional) -> Functional:
    """Move ``f`` by the contragredient of ``M`` so pairings with ``M v`` are preserved."""
    M = _square(M, dimension(f.shape))
    return type(f).from_array(f.shape, contragredient(M) @ f.to_array())


# --------------------------------------------------------------------------
# text syntax: "2*Y1,3,2,4 + Y1,2,3,4"

_VECTOR_TERM = re.compile(r"\s*(?:([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*\*\s*)?([Yy][0-9,]+)\s*")


_PLUS = re.compile(r"(?<![eE])\+")


def parse_terms(text: str) -> dict[str, float]:
    out: dict[str, float] = {}
    stripped = text.strip()
    if stripped in ("", "0"):
        return out
    for chunk in _PLUS.split(stripped):
        m = _VECTOR_TERM.fullmatch(chunk)
        if m is None:
            raise ParseError(f"cannot read vector term {chunk.strip()!r}")
        coeff = float(m.group(1)) if m.group(1) is not None else 1.0
        out[m.group(2)] = out.get(m.group(2), 0.0) + coeff
    return out


def parse_vector(text: str, shape, cls=KVector):
    """Read ``"c1*TERM + c2*TERM ..."``; a missing coefficient means 1."""
    try:
        return cls(shape, parse_terms(text))
    except InvalidArgumentError as exc:
        raise ParseError(str(exc)) from None


def parse_functional(text: str, shape) -> Functional:
    return parse_vector(text, shape, Functional)


def format_terms(coeffs: Mapping[str, float]) -> str:
    if not coeffs:
        return "0"
    return " + ".join(f"{c:g}*{k}" for k, c in coeffs.items())


def format_vector(v: _Coefficients) -> str:
    return format_terms(v.coeffs)


def from_counts(shape, terms: Iterable[str]) -> KVector:
    """Count term occurrences into a vector (plain term-frequency weighting)."""
    counts: dict[str, float] = {}
    for t in terms:
        counts[t] = counts.get(t, 0.0) + 1.0
    return KVector(shape, counts)
