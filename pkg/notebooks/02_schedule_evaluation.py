"""
Evaluating and optimizing schedules
===================================

Four tasks form a chain with requirements 1, 2, 3, 4. Processors 1 and 2
run at rate 1, processors 3 and 4 at rate 2. Each (2, 2) tabloid sends one
pair of tasks to the slow row and the other pair to the fast row.
"""

from pathlib import Path

from tabloidsched import enumerate_standard_tabloids, evaluate, optimize, parse_processors, parse_task_graph

DATA = Path(__file__).resolve().parent / "data"
g = parse_task_graph((DATA / "chain4.graph").read_text())
s = parse_processors((DATA / "rates_1122.procs").read_text())

# turnaround of every class
for T in enumerate_standard_tabloids((2, 2)):
    sched = evaluate(T, g, s)
    print(T.key, sched.turnaround, round(sched.average_utilization, 4))

# the cheapest class puts tasks 1, 2 on the slow row
print(optimize(g, s, (2, 2)))

# the full schedule of the worst class
sched = evaluate(enumerate_standard_tabloids((2, 2))[-1], g, s)
for v in sched.start:
    print(v, sched.proc_of[v], sched.start[v], sched.finish[v])

# with per-task costs there are no rows to exploit; evaluate one bijection
g2 = parse_task_graph((DATA / "diamond.graph").read_text())
s2 = parse_processors((DATA / "diamond_matrix.procs").read_text())
print(evaluate({1: 2, 2: 1, 3: 3, 4: 4}, g2, s2).turnaround)
