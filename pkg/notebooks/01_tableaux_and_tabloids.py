"""
Tableaux, tabloids and assignment classes
=========================================

A tableau of shape (2, 2) lists tasks in rows. Paired with the standard
processor tableau it fixes a one-to-one assignment. Shuffling within a row
gives the same tabloid, and all members of a tabloid share a schedule.
"""

from tabloidsched import (
    Partition,
    Tableau,
    assignment_set,
    assignments_in_tabloid,
    canonical_assignment_tabloid,
    encode,
    enumerate_standard_tabloids,
    make_assignment_tableau,
    partitions_of,
)

# shapes of 4 in reverse-lex order
print([p.parts for p in partitions_of(4)])

# tasks 3,1 on processors 1,2 and task 2 on processor 3
shape = Partition((2, 1))
a = make_assignment_tableau([[3, 1], [2]], Tableau.standard(shape))
print(sorted(assignment_set(a)))

# row order does not matter for the class
T = canonical_assignment_tabloid([[3, 1], [2]])
print(encode(T), encode(a.task))

# every standard tabloid of (2, 2), with the number of assignments in it
for T in enumerate_standard_tabloids((2, 2)):
    k, members = assignments_in_tabloid(T)
    print(T.key, k)

# classes times class size recovers 4! = 24
print(len(enumerate_standard_tabloids((2, 2))) * assignments_in_tabloid(T)[0])
