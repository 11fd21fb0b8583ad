"""Command line front end.

Subcommands: info, distance, power, complete, balance, compatible,
spectrum, lift, project, verify, generate.  Graphs travel as the plain
text format of `fileio`.  Domain errors exit with status 1 and the
error name on standard error; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .balance import is_balanced, lift_path, project_path
from .core import (
    NonUniquePowerError,
    SignedGraph,
    SignedGraphError,
    is_connected,
    is_two_connected,
    walk_sign,
)
from .distance import (
    diameter,
    distance_matrices,
    first_incompatible_pair,
    is_compatible,
    shortest_path_with_sign,
)
from .fileio import parse_corpus_spec, parse_graph, serialize_graph
from .oracle import generate
from .power import associated_complete, power
from .spectra import DEFAULT_TOL, adjacency_matrix, eigenvalues
from .harness import THEOREM_ORDER


def _load(path: str) -> SignedGraph:
    return parse_graph(Path(path).read_text())


def _parse_path_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise SystemExit(2) from None


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def _print_matrix(m) -> None:
    for row in m:
        print("\t".join(str(int(x)) for x in row))


# -- subcommand handlers ----------------------------------------------------


def _cmd_info(args) -> int:
    g = _load(args.file)
    print(f"vertices {g.vertex_count}")
    print(f"edges {g.edge_count}")
    connected = is_connected(g)
    print(f"connected {'yes' if connected else 'no'}")
    if not connected:
        return 0
    print(f"two-connected {'yes' if is_two_connected(g) else 'no'}")
    print(f"balanced {'yes' if is_balanced(g).balanced else 'no'}")
    print(f"compatible {'yes' if is_compatible(g) else 'no'}")
    print(f"diameter {diameter(g)}")
    return 0


def _cmd_distance(args) -> int:
    g = _load(args.file)
    dmax, dmin = distance_matrices(g)
    if args.mode in ("max", "both"):
        if args.mode == "both":
            print("# max")
        _print_matrix(dmax.entries)
    if args.mode in ("min", "both"):
        if args.mode == "both":
            print("# min")
        _print_matrix(dmin.entries)
    return 0


def _cmd_power(args) -> int:
    g = _load(args.file)
    pr = power(g, args.n)
    if args.mode == "unique" and not pr.unique:
        pair = next(
            (u, v)
            for (u, v, smax), (_, _, smin) in zip(pr.power_max.edges, pr.power_min.edges)
            if smax != smin
        )
        raise NonUniquePowerError(
            f"incompatible pair {pair[0]} {pair[1]} at distance <= {args.n}"
        )
    chosen = pr.power_min if args.mode == "min" else pr.power_max
    sys.stdout.write(serialize_graph(chosen))
    return 0


def _cmd_complete(args) -> int:
    g = _load(args.file)
    sys.stdout.write(serialize_graph(associated_complete(g, args.mode)))
    return 0


def _cmd_balance(args) -> int:
    g = _load(args.file)
    report = is_balanced(g)
    if report.balanced:
        print("balanced")
        print("labels " + " ".join(_sign_char(s) for s in report.switching_labels))
    else:
        print("unbalanced")
        print("negative_cycle " + " ".join(str(v) for v in report.witness))
    return 0


def _cmd_compatible(args) -> int:
    g = _load(args.file)
    pair = first_incompatible_pair(g)
    if pair is None:
        print("compatible")
        return 0
    u, v = pair
    print(f"incompatible {u} {v}")
    pos = shortest_path_with_sign(g, u, v, 1)
    neg = shortest_path_with_sign(g, u, v, -1)
    print("positive_path " + " ".join(str(x) for x in pos))
    print("negative_path " + " ".join(str(x) for x in neg))
    return 0


def _cmd_spectrum(args) -> int:
    g = _load(args.file)
    target = associated_complete(g, "pm") if args.complete_pm else g
    spec = eigenvalues(adjacency_matrix(target), args.tol)
    for value, mult in spec.groups:
        print(f"{value:.12g}\t{mult}")
    return 0


def _cmd_lift(args) -> int:
    g = _load(args.file)
    p = _parse_path_arg(args.path)
    lifted = lift_path(g, p, args.n)
    pr = power(g, args.n)
    print("path " + " ".join(str(v) for v in lifted))
    print("sign " + _sign_char(walk_sign(pr.power_max, lifted)))
    return 0


def _cmd_project(args) -> int:
    g = _load(args.file)
    p = _parse_path_arg(args.path)
    pr = power(g, args.n)
    if not pr.unique:
        raise NonUniquePowerError(f"the {args.n}-th power of the graph is not unique")
    w = project_path(pr.witnesses_max, p)
    print("walk " + " ".join(str(v) for v in w))
    print("sign " + _sign_char(walk_sign(g, w)))
    return 0


def _cmd_verify(args) -> int:
    names = list(THEOREM_ORDER) if args.theorem == "all" else [args.theorem]
    reports = harness.run_many(names, args.trials, args.seed, args.max_vertices)
    failed = []
    for rep in reports:
        notes = ""
        if rep.notes:
            notes = " (" + ", ".join(f"{k}={v}" for k, v in sorted(rep.notes.items())) + ")"
        print(f"{rep.name} {rep.passed}/{rep.trials}{notes}")
        if not rep.ok:
            failed.append(rep)
    if not failed:
        print("result PASS")
        return 0
    print("result FAIL " + " ".join(rep.name for rep in failed))
    _write_bundle(Path(args.bundle), failed)
    print(f"counterexamples written to {args.bundle}", file=sys.stderr)
    return 1


def _write_bundle(root: Path, failed: list[harness.TheoremReport]) -> None:
    root.mkdir(parents=True, exist_ok=True)
    manifest = []
    for rep in failed:
        for case in rep.failures:
            entry = [f"theorem={rep.name}", f"trial={case.trial}", f"note={case.description}"]
            for label, graph in case.graphs.items():
                name = f"case_{rep.name}_{case.trial}_{label}.sg"
                (root / name).write_text(
                    serialize_graph(graph, comments=(f"{rep.name} trial {case.trial} {label}",))
                )
                entry.append(f"{label}={name}")
            manifest.append(" ".join(entry))
    (root / "manifest.txt").write_text("\n".join(manifest) + "\n")


def _cmd_generate(args) -> int:
    spec = parse_corpus_spec(Path(args.spec).read_text())
    for i, g in enumerate(generate(spec)):
        sys.stdout.write(serialize_graph(g, comments=(f"trial {i}",)))
        print()
    return 0


# -- argument parsing -------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgpower",
        description="signed graph distances, powers, balance and spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("info", _cmd_info, help="summary of a graph file")
    p.add_argument("file")

    p = add("distance", _cmd_distance, help="signed distance matrices")
    p.add_argument("--mode", choices=("max", "min", "both"), default="both")
    p.add_argument("file")

    p = add("power", _cmd_power, help="n-th power of a signed graph")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=("max", "min", "unique"), default="unique")
    p.add_argument("file")

    p = add("complete", _cmd_complete, help="associated signed complete graph")
    p.add_argument("--mode", choices=("max", "min", "pm"), default="pm")
    p.add_argument("file")

    p = add("balance", _cmd_balance, help="balance test with certificate")
    p.add_argument("file")

    p = add("compatible", _cmd_compatible, help="shortest-path sign compatibility")
    p.add_argument("file")

    p = add("spectrum", _cmd_spectrum, help="adjacency spectrum")
    p.add_argument("--complete-pm", action="store_true", help="spectrum of the common-sign completion")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("file")

    p = add("lift", _cmd_lift, help="lift a path into the n-th power")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--path", required=True, help="comma-separated vertices")
    p.add_argument("file")

    p = add("project", _cmd_project, help="project a power path down via witnesses")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--path", required=True, help="comma-separated vertices")
    p.add_argument("file")

    p = add("verify", _cmd_verify, help="randomized theorem checks")
    p.add_argument("--theorem", choices=THEOREM_ORDER + ("all",), default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--bundle", default="counterexamples", help="directory for failure bundles")

    p = add("generate", _cmd_generate, help="emit graphs from a corpus spec file")
    p.add_argument("spec")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SignedGraphError as exc:
        name = type(exc).__name__
        name = name[: -len("Error")] if name.endswith("Error") else name
        print(f"{name}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"FileNotFound: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
