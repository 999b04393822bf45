"""
Permutations acting on k-assignments vectors
============================================

Relabelling tasks by a permutation moves one tabloid to another. Extended
linearly this makes the space spanned by tabloids a representation of the
symmetric group. Its character counts the tabloids a permutation fixes.
"""

import numpy as np

from tabloidsched import KVector, act, character_table, inner_product, parse_permutation, parse_vector
from tabloidsched.vectorspace import permutation_matrix

# swapping tasks 1 and 2 moves Y1,3,4,2 to Y2,3,4,1
g = parse_permutation("(1 2)", 4)
print(act(g, parse_vector("Y1,2,3,4 + Y1,3,4,2", (3, 1))))

# the matrix of the same swap is a permutation matrix
M = permutation_matrix(g, (3, 1))
print(M)
print(np.trace(M))

# lengths and angles survive the action
u = parse_vector("2*Y1,2,3,4 + Y1,3,2,4", (2, 2))
v = parse_vector("Y1,3,2,4 + -3*Y3,4,1,2", (2, 2))
h = parse_permutation("(1 3 4 2)", 4)
print(inner_product(u, v), inner_product(act(h, u), act(h, v)))

# rows are module shapes from (1,1,1,1) to (4), columns are cycle types
table = character_table(4)
print([s.parts for s in table.shapes])
print(table.values)
