"""
Turnaround as a linear functional
=================================

Turnaround per class is a functional on the k-assignments space. Pairing it
with a batch vector gives the total turnaround of the batch. A change of
basis on vectors is matched by the inverse transpose on functionals.
"""

from pathlib import Path

import numpy as np

from tabloidsched import (
    Functional,
    KVector,
    apply_matrix,
    dual_transform,
    k_copies_totals,
    pair,
    parse_processors,
    parse_task_graph,
    parse_vector,
    turnaround_functional,
)

DATA = Path(__file__).resolve().parent / "data"
g = parse_task_graph((DATA / "chain4.graph").read_text())
s = parse_processors((DATA / "rates_1122.procs").read_text())

phi = turnaround_functional((2, 2), g, s)
print(phi)

d1 = parse_vector("Y1,3,2,4 + 2*Y1,4,2,3 + Y2,3,1,4 + Y3,4,1,2", (2, 2))
print(pair(phi, d1))
print(k_copies_totals(d1, phi.coeffs))

# two dimensions are enough to see the inverse transpose at work
psi = Functional.from_array((1, 1), [1, 2])
v = KVector.from_array((1, 1), [1, 1])
M = np.diag([1.0, 3.0])
psi2 = dual_transform(M, psi)
print(psi2.to_array(), pair(psi2, apply_matrix(M, v)), pair(psi, v))
