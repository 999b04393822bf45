"""tf-idf ranking of documents made of encoded assignment terms.

A corpus file looks like::

    #shape 2,2
    #kind tabloid
    Y1,3,2,4 Y1,4,2,3 Y1,4,2,3 Y3,4,1,2 Y2,3,1,4
    Y1,3,2,4 Y1,2,3,4 Y1,3,2,4

Weights are ``tf * log10(N / df)`` with ``df`` counted over corpus documents
only; the query never contributes to document frequencies.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .assignment import decode, encode, key_order
from .errors import InvalidArgumentError, ParseError, ZeroVectorError
from .tableau import Partition, _as_partition

Document = tuple[str, ...]


@dataclass(frozen=True)
class Corpus:
    shape: Partition
    kind: str
    documents: tuple[Document, ...]

    def __post_init__(self):
        shape = _as_partition(self.shape)
        object.__setattr__(self, "shape", shape)
        if self.kind not in ("tabloid", "tableau"):
            raise InvalidArgumentError(f"kind must be 'tabloid' or 'tableau', got {self.kind!r}")
        docs = tuple(canonical_document(doc, shape, self.kind) for doc in self.documents)
        object.__setattr__(self, "documents", docs)

    def __len__(self) -> int:
        return len(self.documents)

    def document_frequency(self, term: str) -> int:
        return sum(1 for doc in self.documents if term in doc)


def canonical_document(terms: Sequence[str], shape, kind: str) -> Document:
    """Decode every term and re-encode it in canonical form."""
    prefix = "Y" if kind == "tabloid" else "y"
    out = []
    for term in terms:
        if not term.startswith(prefix):
            raise ParseError(f"term {term!r} does not match kind {kind!r}")
        out.append(encode(decode(term, shape)))
    return tuple(out)


@dataclass(frozen=True)
class WeightVector:
    shape: Partition
    weights: dict[str, float]

    def norm(self) -> float:
        return math.sqrt(sum(w * w for w in self.weights.values()))


@dataclass(frozen=True)
class RankedResult:
    """``(document index, score)`` pairs, best first; indices are 0-based."""

    entries: tuple[tuple[int, float], ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def order(self) -> list[int]:
        return [i for i, _ in self.entries]


def _read_header(text: str):
    shape = kind = None
    body = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            toks = line[1:].split()
            if toks and toks[0] == "shape" and len(toks) == 2:
                if shape is not None:
                    raise ParseError(f"line {lineno}: shape given twice")
                shape = Partition.parse(toks[1])
            elif toks and toks[0] == "kind" and len(toks) == 2:
                if kind is not None:
                    raise ParseError(f"line {lineno}: kind given twice")
                if toks[1] not in ("tabloid", "tableau"):
                    raise ParseError(f"line {lineno}: unknown kind {toks[1]!r}")
                kind = toks[1]
            continue
        body.append(line.split())
    if shape is None or kind is None:
        raise ParseError("missing '#shape' or '#kind' header")
    return shape, kind, body


def parse_corpus(text: str) -> Corpus:
    """Read a corpus: headers, then one whitespace-separated document per line."""
    shape, kind, body = _read_header(text)
    return Corpus(shape, kind, tuple(canonical_document(doc, shape, kind) for doc in body))


def parse_query(text: str) -> tuple[Partition, str, Document]:
    """Read a query file: same headers as a corpus and exactly one document line."""
    shape, kind, body = _read_header(text)
    if len(body) != 1:
        raise ParseError(f"a query holds exactly one document line, found {len(body)}")
    return shape, kind, canonical_document(body[0], shape, kind)


def idf(term: str, corpus: Corpus) -> float:
    """``log10(N / df)``; a term that no document contains gets 0."""
    if len(corpus) == 0:
        raise InvalidArgumentError("idf is undefined on an empty corpus")
    df = corpus.document_frequency(term)
    if df == 0:
        return 0.0
    return math.log10(len(corpus) / df)


def tfidf_weights(doc: Sequence[str], corpus: Corpus) -> WeightVector:
    counts = Counter(canonical_document(doc, corpus.shape, corpus.kind))
    weights = {t: counts[t] * idf(t, corpus) for t in sorted(counts, key=key_order)}
    return WeightVector(corpus.shape, weights)


def cosine_similarity(q: WeightVector, d: WeightVector) -> float:
    nq, nd = q.norm(), d.norm()
    if nq == 0 or nd == 0:
        raise ZeroVectorError("cosine similarity of a zero-norm vector is undefined")
    dot = sum(w * d.weights.get(t, 0.0) for t, w in q.weights.items())
    return dot / (nq * nd)


def rank(query: Sequence[str], corpus: Corpus) -> RankedResult:
    """Score every document against ``query`` and sort by descending similarity.

    A document whose weight vector is zero (all of its terms occur in every
    document) has no defined angle and raises, like a zero-norm query.
    """
    if not query:
        raise InvalidArgumentError("empty query")
    if any(len(doc) == 0 for doc in corpus.documents):
        raise InvalidArgumentError("corpus contains an empty document")
    q = tfidf_weights(query, corpus)
    if q.norm() == 0:
        raise ZeroVectorError("every query term has zero idf")
    scores = []
    for i, doc in enumerate(corpus.documents):
        scores.append((i, cosine_similarity(q, tfidf_weights(doc, corpus))))
    scores.sort(key=lambda item: (-item[1], item[0]))
    return RankedResult(tuple(scores))


def average_turnaround(doc: Sequence[str], turnarounds: Mapping[str, float]) -> float:
    """Mean turnaround over the term occurrences of ``doc``."""
    if not doc:
        raise InvalidArgumentError("empty document")
    total = 0.0
    for term in doc:
        if term not in turnarounds:
            raise InvalidArgumentError(f"no turnaround given for {term}")
        total += turnarounds[term]
    return total / len(doc)
