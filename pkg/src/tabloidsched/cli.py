"""Command-line front end.

Subcommands: enumerate, characters, evaluate, optimize, act, pair, rank.
Exit status is 0 on success and 2 on any usage, parse or domain error; the
error message starts with the error class name.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import assignment, retrieval, schedule, vectorspace
from .errors import InvalidArgumentError, TabloidError
from .tableau import Partition, parse_permutation


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except TabloidError as exc:
        raise argparse.ArgumentTypeError(f"{type(exc).__name__}: {exc}") from None


def _read(path: str) -> str:
    try:
        # newline=None folds CR/LF to LF
        with open(path, encoding="utf-8", newline=None) as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read {path}: {exc.strerror}") from None


def _g6(x: float) -> str:
    return f"{x:.6g}"


class _Out:
    def __init__(self, mode: str, stream):
        self.mode = mode
        self.stream = stream

    def emit(self, text: str, **record):
        if self.mode == "jsonl":
            self.stream.write(json.dumps(record) + "\n")
        else:
            self.stream.write(text + "\n")


def cmd_enumerate(args, out: _Out) -> None:
    tabloids = assignment.enumerate_standard_tabloids(args.shape)
    if args.count:
        out.emit(str(len(tabloids)), record="count", shape=str(args.shape), count=len(tabloids))
        return
    for i, T in enumerate(tabloids, 1):
        out.emit(T.key, record="tabloid", index=i, term=T.key)


def cmd_characters(args, out: _Out) -> None:
    table = vectorspace.character_table(args.n)
    for lam, row in zip(table.shapes, table.values):
        values = [int(x) for x in row]
        out.emit(
            " ".join(map(str, values)),
            record="character",
            shape=str(lam),
            classes=[str(mu) for mu in table.classes],
            values=values,
        )


def _system(args):
    g = schedule.parse_task_graph(_read(args.graph))
    s = schedule.parse_processors(_read(args.procs))
    return g, s


def cmd_evaluate(args, out: _Out) -> None:
    g, s = _system(args)
    term = args.assignment
    obj = assignment.decode(term, args.shape)
    if isinstance(obj, assignment.Tabloid):
        target = obj
    else:
        target = assignment.AssignmentTableau(obj, assignment.ProcessorTableau.standard(args.shape))
    sched = schedule.evaluate(target, g, s)
    for v in sched.start:
        out.emit(
            f"task {v} proc {sched.proc_of[v]} start {_g6(sched.start[v])} finish {_g6(sched.finish[v])}",
            record="task", task=v, proc=sched.proc_of[v], start=sched.start[v], finish=sched.finish[v],
        )
    for p in sorted(sched.exec_time):
        out.emit(
            f"proc {p} exec {_g6(sched.exec_time[p])} idle {_g6(sched.idle_time[p])} "
            f"utilization {_g6(sched.utilization[p])}",
            record="proc", proc=p, exec=sched.exec_time[p], idle=sched.idle_time[p],
            utilization=sched.utilization[p],
        )
    out.emit(f"turnaround {_g6(sched.turnaround)}", record="turnaround", value=sched.turnaround)
    out.emit(
        f"average_utilization {_g6(sched.average_utilization)}",
        record="average_utilization", value=sched.average_utilization,
    )


def cmd_optimize(args, out: _Out) -> None:
    g, s = _system(args)
    best, value = schedule.optimize(g, s, args.shape, args.metric)
    out.emit(f"{best.key} {_g6(value)}", record="optimum", metric=args.metric, term=best.key, value=value)


def cmd_act(args, out: _Out) -> None:
    p = parse_permutation(args.perm, args.shape.n)
    v = vectorspace.parse_vector(args.vector, args.shape)
    w = vectorspace.act(p, v)
    out.emit(vectorspace.format_vector(w), record="vector", terms=w.coeffs)


def cmd_pair(args, out: _Out) -> None:
    f = vectorspace.parse_functional(args.functional, args.shape)
    v = vectorspace.parse_vector(args.vector, args.shape)
    value = vectorspace.pair(f, v)
    out.emit(_g6(value), record="pairing", value=value)


def cmd_rank(args, out: _Out) -> None:
    corpus = retrieval.parse_corpus(_read(args.corpus))
    shape, kind, query = retrieval.parse_query(_read(args.query))
    if shape != corpus.shape or kind != corpus.kind:
        raise InvalidArgumentError(
            f"query is {kind} of shape {shape}, corpus is {corpus.kind} of shape {corpus.shape}"
        )
    for i, score in retrieval.rank(query, corpus):
        out.emit(f"{i + 1} {score:.3f}", record="rank", document=i + 1, score=score)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tabloidsched", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "jsonl"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list standard assignment tabloids")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--count", action="store_true", help="print only the number of tabloids")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("characters", parents=[common], help="character table of the permutation modules")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_characters)

    for name, func in (("evaluate", cmd_evaluate), ("optimize", cmd_optimize)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--graph", required=True)
        p.add_argument("--procs", required=True)
        p.add_argument("--shape", type=_shape, required=True)
        if name == "evaluate":
            p.add_argument("--assignment", required=True, help="encoded term, e.g. Y1,3,2,4")
        else:
            p.add_argument("--metric", choices=("turnaround", "utilization"), default="turnaround")
        p.set_defaults(func=func)

    p = sub.add_parser("act", parents=[common], help="apply a permutation to a k-assignments vector")
    p.add_argument("--perm", required=True)
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("pair", parents=[common], help="evaluate a functional on a vector")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--functional", required=True)
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("rank", parents=[common], help="rank corpus documents against a query")
    p.add_argument("--query", required=True)
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_rank)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, _Out(args.output, stdout))
    except TabloidError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
