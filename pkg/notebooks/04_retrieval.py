"""
Ranking past assignment batches
===============================

Each document is a batch of assignments written as tabloid terms. A query
batch is compared against the corpus with tf-idf weights and cosine
similarity.
"""

from pathlib import Path

from tabloidsched import average_turnaround, parse_corpus, parse_query, rank, tfidf_weights

DATA = Path(__file__).resolve().parent / "data"
corpus = parse_corpus((DATA / "corpus_22.txt").read_text())
shape, kind, query = parse_query((DATA / "query_22.txt").read_text())

# weights per document
for i, doc in enumerate(corpus.documents, 1):
    w = tfidf_weights(doc, corpus).weights
    print(f"D{i}", {k: round(x, 3) for k, x in w.items()})

for i, score in rank(query, corpus):
    print(f"D{i + 1} {score:.3f}")

# with known turnarounds per class, compare mean batch turnaround
turnarounds = {"Y1,2,3,4": 15, "Y1,3,2,4": 23, "Y1,4,2,3": 20, "Y2,3,1,4": 23, "Y2,4,1,3": 20, "Y3,4,1,2": 28}
print(average_turnaround(query, turnarounds))
print([round(average_turnaround(d, turnarounds), 2) for d in corpus.documents])
