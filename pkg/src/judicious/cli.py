"""Command-line entry point: ``judicious {partition,verify,brute,gen,stats}``.

Exit codes: 0 success, 1 certificate rejected, 2 input error or bad usage,
3 internal logic error, 4 exhaustive-search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certificate import Certificate, coverage_constant, threshold, verify_certificate
from .errors import BudgetExceeded, InputError, InternalLogicError
from .hypergraph import Partition, class_coverage, max_degree
from .io import MODES, GenSpec, generate, parse_assignment, read_instance, serialize_instance
from .oracle import DEFAULT_BUDGET, conjecture_gap_report
from .solver import partition_judicious

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_LOGIC = 3
EXIT_BUDGET = 4


def _format_text(cert: Certificate) -> str:
    lines = [f"r {cert.r}  m {cert.m}  threshold {cert.bound}", "class  size  coverage  vertices"]
    for c, members in enumerate(cert.partition.classes()):
        lines.append(f"{c:<5}  {len(members):<4}  {cert.coverage[c]:<8}  {' '.join(map(str, members))}")
    lines.append(f"min_coverage {cert.min_coverage}")
    lines.append("assignment " + " ".join(map(str, cert.partition.assignment)))
    return "\n".join(lines) + "\n"


def _resolve_r(H, r):
    if r is not None:
        return r
    if H.uniformity is None:
        raise InputError("instance is not uniform; pass --r")
    return H.uniformity


def cmd_partition(args, out):
    H = read_instance(args.input)
    cert = partition_judicious(H, args.r)
    fmt = args.format or ("text" if out.isatty() else "json")
    out.write(cert.to_json() + "\n" if fmt == "json" else _format_text(cert))
    return EXIT_OK


def _load_partition(path, H, r):
    with open(path) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except ValueError:
        data = None
    if isinstance(data, dict):
        return Certificate.from_dict(data, H.n)
    assignment = parse_assignment(text)
    if len(assignment) != H.n:
        raise InputError(f"partition lists {len(assignment)} vertices, instance has {H.n}")
    r = _resolve_r(H, r)
    P = Partition(r, tuple(assignment))
    return Certificate(P, tuple(class_coverage(H, P)), threshold(r, H.m), r, H.m)


def cmd_verify(args, out):
    H = read_instance(args.input)
    cert = _load_partition(args.partition, H, args.r)
    verdict = verify_certificate(H, cert)
    if verdict:
        out.write("ok\n")
        return EXIT_OK
    out.write(f"rejected: {verdict.reason}\n")
    return EXIT_REJECTED


def cmd_brute(args, out):
    H = read_instance(args.input)
    report = conjecture_gap_report(H, args.r, args.budget, args.jobs)
    out.write(json.dumps(report.to_dict()) + "\n")
    return EXIT_OK


def cmd_gen(args, out):
    H = generate(GenSpec(args.r, args.n, args.m, args.seed, args.mode))
    text = serialize_instance(H)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_stats(args, out):
    H = read_instance(args.input)
    delta = max_degree(H)
    lines = [
        f"vertices {H.n}",
        f"edges {H.m}",
        f"uniformity {H.uniformity if H.uniformity is not None else 'none'}",
        f"max_degree {delta}",
    ]
    r = args.r if args.r is not None else H.uniformity
    if r is not None and r >= 2:
        tau = threshold(r, H.m)
        relation = "below" if delta < tau else "at or above"
        lines.append(f"c_r {coverage_constant(r)}  threshold {tau}  max_degree {relation} threshold")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="judicious", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="solve and print a certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--format", choices=["json", "text"])
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="check a partition or JSON certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("brute", help="exhaustive optimum and gap to the conjectured bound")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="uniform-random")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="size, uniformity and degree summary")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InternalLogicError as exc:
        sys.stderr.write(f"internal error: {exc}\n{exc.dump}")
        return EXIT_LOGIC


if __name__ == "__main__":
    sys.exit(main())
