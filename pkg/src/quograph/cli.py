"""Command-line front end: JSON files in, JSON on standard output.

Exit codes: 0 success, 1 I/O or parse error, 2 hypothesis violation,
3 internal invariant failure (including verification-claim failures).
"""

from __future__ import annotations

import argparse
import sys

from . import counting, groups, homs, io, partitions, perms, verify
from .errors import HypothesisError, InternalCheckError


class _Parser(argparse.ArgumentParser):
    """Parser whose usage errors exit with the parse-error code (1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(payload, out_path=None) -> None:
    if out_path:
        io.save_json(out_path, payload)
    else:
        sys.stdout.write(io.dumps(payload))


def cmd_components(args) -> int:
    comp = io.load_graph(args.graph).components()
    _emit({"c": comp.count, "blocks": [list(b) for b in comp.blocks]}, args.out)
    return 0


def cmd_quotient(args) -> int:
    g = io.load_graph(args.graph)
    p = io.load_partition(args.partition, g)
    result = partitions.quotient(g, p)
    quotient_payload = io.graph_to_dict(result.quotient)
    projection_payload = io.hom_to_dict(result.projection)
    if args.out:
        io.save_json(f"{args.out}.quotient.json", quotient_payload)
        io.save_json(f"{args.out}.projection.json", projection_payload)
    else:
        _emit({"quotient": quotient_payload, "projection": projection_payload})
    return 0


def cmd_classify(args) -> int:
    src = io.load_graph(args.source)
    tgt = io.load_graph(args.target)
    m = io.load_hom(args.map, src, tgt)
    grp = io.load_group(args.group, src) if args.group else None
    _emit(homs.classify(m, grp).as_dict(), args.out)
    return 0


def cmd_count(args) -> int:
    g = io.load_graph(args.graph)
    p = io.load_partition(args.partition, g)
    m = partitions.quotient(g, p).projection
    grp = io.load_group(args.group, g) if args.group else None
    method = args.method
    if method == "auto":
        if grp is not None and homs.classify(m, grp).orbit:
            method = "B"
        elif homs.is_locally_surjective(m):
            method = "ce" if homs.is_component_equitable(m) else "A"
        else:
            raise HypothesisError("hypotheses not satisfied: locally_surjective")
    if method == "A":
        breakdown = counting.count_admissible(m)
    elif method == "B":
        if grp is None:
            raise HypothesisError("hypotheses not satisfied: orbit (no group supplied)")
        breakdown = counting.count_orbit(m, grp)
    else:
        breakdown = counting.count_ce(m)
    if breakdown.total != g.components().count:
        raise InternalCheckError("count total disagrees with the component count")
    _emit(breakdown.as_dict(), args.out)
    return 0


def cmd_orbits(args) -> int:
    g = io.load_graph(args.graph)
    grp = io.load_group(args.group, g)
    _emit(io.partition_to_dict(perms.orbit_partition(grp)), args.out)
    return 0


def _group_from_spec(spec: str):
    kind, sep, rest = spec.partition(":")
    if sep:
        if kind == "cyclic":
            return groups.make_cyclic(int(rest))
        if kind == "symmetric":
            return groups.make_symmetric(int(rest))
        if kind == "cayley":
            return io.load_cayley(rest)
    raise ValueError(f"unrecognized group spec {spec!r}; use cyclic:N, symmetric:N, or cayley:PATH")


def cmd_powergraph(args) -> int:
    group = _group_from_spec(args.group)
    g = groups.proper_power_graph(group) if args.proper else groups.power_graph(group)
    grp = groups.conjugation_group(group, g)
    graph_payload = io.graph_to_dict(g)
    group_payload = io.group_to_dict(grp)
    if args.out:
        io.save_json(f"{args.out}.graph.json", graph_payload)
        io.save_json(f"{args.out}.group.json", group_payload)
    else:
        _emit({"graph": graph_payload, "group": group_payload})
    return 0


def cmd_verify(args) -> int:
    cfg = verify.SweepConfig(
        max_source_vertices=args.max_vertices,
        max_target_vertices=min(args.max_vertices, 3),
        random_instances=args.random,
        seed=args.seed,
    )
    report = verify.run_suite(cfg)
    _emit(report.as_dict(), args.out)
    return 0 if report.passed else 3


def build_parser() -> _Parser:
    parser = _Parser(prog="quograph", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("components", help="connected components of a graph file")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("quotient", help="quotient graph and projection for a partition")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.quotient.json and PREFIX.projection.json")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("classify", help="classify a vertex map between two graphs")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.add_argument("--group", help="permutation group file over the source graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="count components through a quotient projection")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--group", help="permutation group file over the graph")
    p.add_argument("--method", choices=["auto", "A", "B", "ce"], default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("orbits", help="orbit partition of a permutation group")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("--out")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("powergraph", help="power graph of a built-in or Cayley-table group")
    p.add_argument("--group", required=True, metavar="SPEC", help="cyclic:N, symmetric:N, or cayley:PATH")
    p.add_argument("--proper", action="store_true", help="delete the identity vertex")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.graph.json and PREFIX.group.json")
    p.set_defaults(func=cmd_powergraph)

    p = sub.add_parser("verify", help="run the verification suite and emit its report")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--random", type=int, default=1000, help="randomized orbit-quotient instances")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
