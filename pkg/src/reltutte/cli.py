"""Command line front end.

Commands: tutte, pointed, tensor, verify, suite. Exit codes: 0 ok,
1 verification failure, 2 input error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EngineError
from .pointed import PointedGraph, pointed_polys
from .poly import RelPolynomial
from .suite import all_suite_names, run_suite
from .tensor import TensorInstance, tensor_product, verify_tensor_formula
from .textio import format_graph, parse_graph_file, write_graph_file
from .tutte import tutte_recursive, universal_tutte_statesum

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class Emitter:
    """Buffers either text lines or json objects, one per logical record."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def config(self, **kv):
        if self.fmt == "jsonl":
            self.out.write(json.dumps({"name": "config", **kv}, sort_keys=True) + "\n")
        else:
            body = " ".join(f"{k}={v}" for k, v in kv.items())
            self.out.write(f"# {body}\n")

    def poly(self, name: str, p: RelPolynomial):
        if self.fmt == "jsonl":
            self.out.write(json.dumps({"name": name, "terms": p.term_records()}) + "\n")
        else:
            self.out.write(f"{name}: {p.render()}\n")

    def line(self, text: str):
        if self.fmt == "jsonl":
            self.out.write(json.dumps({"name": "message", "text": text}) + "\n")
        else:
            self.out.write(text + "\n")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=32)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--flip-orientation", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reltutte")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", help="universal relative Tutte polynomial of a graph file")
    p.add_argument("graph")
    _add_common(p)

    p = sub.add_parser("pointed", help="the five pointed polynomials of a pointed graph file")
    p.add_argument("graph")
    _add_common(p)

    p = sub.add_parser("tensor", help="build a tensor product and print its polynomial")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--color", required=True, help="regular color of g1 to replace")
    p.add_argument("--out", help="write the product graph file here")
    _add_common(p)

    p = sub.add_parser("verify", help="check the substitution formula on an instance")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--color", required=True)
    p.add_argument("--corrupt-rhs", action="store_true", help=argparse.SUPPRESS)
    _add_common(p)

    p = sub.add_parser("suite", help="run the randomized verification suites")
    p.add_argument("--instances", type=int, default=10)
    p.add_argument("--only", choices=all_suite_names(), action="append")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    _add_common(p)

    return ap


def cmd_tutte(args) -> int:
    em = Emitter(args.format)
    g = parse_graph_file(args.graph)
    em.config(command="tutte", seed=args.seed, trials=args.trials)
    statesum = universal_tutte_statesum(g)
    recursive = tutte_recursive(g)
    em.poly("statesum", statesum)
    em.poly("recursive", recursive)
    if statesum != recursive:
        em.line("INTERNAL: state sum and recursion disagree")
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_pointed(args) -> int:
    em = Emitter(args.format)
    g = parse_graph_file(args.graph)
    pg = PointedGraph(g)
    em.config(command="pointed", seed=args.seed, trials=args.trials)
    for name, p in pointed_polys(pg).as_dict().items():
        em.poly(name, p)
    return EXIT_OK


def _load_instance(args) -> TensorInstance:
    g1 = parse_graph_file(args.g1)
    g2 = PointedGraph(parse_graph_file(args.g2))
    return TensorInstance(g1=g1, g2=g2, lam=args.color)


def cmd_tensor(args) -> int:
    em = Emitter(args.format)
    ti = _load_instance(args)
    em.config(command="tensor", seed=args.seed, trials=args.trials, color=args.color)
    prod = tensor_product(ti, flip=args.flip_orientation)
    if args.out:
        write_graph_file(prod, args.out, header=f"tensor product of {args.g1} and {args.g2} over {args.color}")
        em.line(f"product written to {args.out}")
    else:
        em.line(format_graph(prod).rstrip("\n"))
    em.poly("product", universal_tutte_statesum(prod))
    return EXIT_OK


def cmd_verify(args) -> int:
    em = Emitter(args.format)
    ti = _load_instance(args)
    em.config(command="verify", seed=args.seed, trials=args.trials, color=args.color,
              flip=args.flip_orientation)
    report = verify_tensor_formula(
        ti,
        trials=args.trials,
        seed=args.seed,
        flip=args.flip_orientation,
        corrupt_rhs=args.corrupt_rhs,
    )
    em.poly("lhs", report.lhs)
    em.poly("rhs", report.rhs)
    em.line(f"equal_mod_ideal={report.equal} structural_equal={report.structural_equal}")
    # timing varies run to run, so it must not land in the reproducible stream
    print(f"elapsed={report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.equal else EXIT_VERIFY_FAIL


def cmd_suite(args) -> int:
    em = Emitter(args.format)
    names = args.only or list(all_suite_names())
    em.config(command="suite", seed=args.seed, trials=args.trials,
              instances=args.instances, jobs=args.jobs)
    if args.instances <= 0:
        em.line("WARNING: 0 instances requested; suites pass vacuously")
    failed = False
    for name in names:
        result = run_suite(name, args.instances, args.seed, jobs=args.jobs,
                           inject_fault=args.inject_fault)
        em.line(f"suite {name}: {result.total - result.failures}/{result.total} passed")
        for note in result.notes:
            em.line(f"  note {note}")
        if not result.ok:
            failed = True
            em.line(f"  first counterexample:\n{result.first_counterexample}")
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


_DISPATCH = {
    "tutte": cmd_tutte,
    "pointed": cmd_pointed,
    "tensor": cmd_tensor,
    "verify": cmd_verify,
    "suite": cmd_suite,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
