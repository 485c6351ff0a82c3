"""Command-line front end.

Exit status 0 on success, 2 on usage errors, 3 when an internal
invariant diagnostic fires.  All output is deterministic byte-for-byte
for fixed arguments; --format selects text, json or (for the report
commands) dot, and --figure additionally renders the Loewy diagram of a
report to an image file next to the standard output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import abacus as ab
from . import blocks, diagrams, selftest, summands, weight2
from .errors import DiagnosticError, UsageError
from .partitions import Partition, parse_partition

_BOUND_ENV = "FOULKES_BOUND"


def _json_dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def _partition_arg(args) -> Partition:
    _require(args, "partition")
    return parse_partition(args.partition)


def _abacus_arg(args) -> ab.Abacus:
    p = summands.check_odd_prime(args.p)
    part = _partition_arg(args)
    beads = args.beads if args.beads is not None else max(1, len(part.parts))
    return ab.from_partition(part, p, beads)


def _cmd_core(args) -> str:
    a = _abacus_arg(args)
    core = ab.p_core(a)
    if args.format == "json":
        return _json_dump({"partition": str(ab.to_partition(a)), "core": str(core)})
    return f"{core}\n"


def _cmd_quotient(args) -> str:
    a = _abacus_arg(args)
    components, weight, beads = ab.p_quotient(a)
    if args.format == "json":
        return _json_dump(
            {
                "partition": str(ab.to_partition(a)),
                "beads": beads,
                "weight": weight,
                "components": [str(c) for c in components],
            }
        )
    lines = [f"weight {weight} on {beads} beads"]
    lines += [f"runner {r}: {c}" for r, c in enumerate(components)]
    return "\n".join(lines) + "\n"


def _cmd_abacus(args) -> str:
    a = _abacus_arg(args)
    if args.format == "json":
        return _json_dump(a.to_json_dict())
    return ab.render(a) + "\n"


def _cmd_wgamma(args) -> str:
    p = summands.check_odd_prime(args.p)
    profile = blocks.core_profile(_partition_arg(args), p)
    if args.format == "json":
        return _json_dump(profile.to_json_dict())
    return f"{profile.w_gamma}\n"


def _cmd_eset(args) -> str:
    p = summands.check_odd_prime(args.p)
    profile = blocks.core_profile(_partition_arg(args), p)
    if args.format == "json":
        return _json_dump(profile.to_json_dict())
    lines = [f"w = {profile.w_gamma}"]
    lines += [str(q) for q in profile.e_set]
    return "\n".join(lines) + "\n"


def _cmd_delta(args) -> str:
    p = summands.check_odd_prime(args.p)
    value = weight2.delta(_partition_arg(args), p)
    if args.format == "json":
        return _json_dump({"partition": args.partition, "delta": value})
    return f"{value}\n"


def _cmd_ddelta(args) -> str:
    p = summands.check_odd_prime(args.p)
    value = weight2.big_delta(_partition_arg(args), p)
    if args.format == "json":
        return _json_dump({"partition": args.partition, "big_delta": value})
    return f"{value}\n"


def _cmd_colour(args) -> str:
    p = summands.check_odd_prime(args.p)
    value = weight2.colour(_partition_arg(args), p)
    if args.format == "json":
        return _json_dump({"partition": args.partition, "colour": value.value})
    return f"{value.value}\n"


def _cmd_nucirc(args) -> str:
    p = summands.check_odd_prime(args.p)
    value = weight2.nu_circ(_partition_arg(args), p)
    if args.format == "json":
        return _json_dump({"partition": args.partition, "nu_circ": str(value)})
    return f"{value}\n"


def _cmd_column(args) -> str:
    p = summands.check_odd_prime(args.p)
    nu = _partition_arg(args)
    column = weight2.decomp_column(nu, blocks.block_of(nu, p))
    doc = column.to_json_dict()
    from .schema import validate_column

    validate_column(doc)
    if args.format == "json":
        return _json_dump(doc)
    lines = [f"column of {nu} in {column.block}"]
    lines += [str(mu) for mu in column.nonzero_rows()]
    return "\n".join(lines) + "\n"


def _cmd_chain(args) -> str:
    p = summands.check_odd_prime(args.p)
    core = _partition_arg(args)
    ch = weight2.chain(blocks.BlockId(p=p, core=core, weight=2))
    doc = ch.to_json_dict()
    from .schema import validate_chain

    validate_chain(doc)
    if args.format == "json":
        return _json_dump(doc)
    lines = [f"chain of {ch.block}"]
    for el in ch.elements:
        label = f" {el.label}" if el.label else ""
        reg = "" if el.p_regular else " (p-singular)"
        lines.append(f"{el.partition} {el.tag}{label}{reg}")
    return "\n".join(lines) + "\n"


def _cmd_witness(args) -> str:
    p = summands.check_odd_prime(args.p)
    _require(args, "n")
    value = blocks.witness(args.n, p)
    if args.format == "json":
        return _json_dump({"n": args.n, "p": p, "witness": str(value)})
    return f"{value}\n"


def _cmd_character(args) -> str:
    _require(args, "n")
    grouped = summands.character(args.n, args.p)
    if args.format == "json":
        return _json_dump(
            [
                {"block": b.to_json_dict(), "character": [str(q) for q in evens]}
                for b, evens in grouped.items()
            ]
        )
    lines = [
        f"{b}: " + ", ".join(str(q) for q in evens) for b, evens in grouped.items()
    ]
    return "\n".join(lines) + "\n"


def _analyze_text(reports) -> str:
    lines = []
    for r in reports:
        head = f"{r.block}: {r.kind}, vertex Q_{r.vertex_t}"
        if r.label_partition is not None:
            name = "S" if r.kind == summands.KIND_SIMPLE else "P"
            head += f", summand {name}^{r.label_partition}"
        if not r.definitive:
            head += " (not definitive)"
        lines.append(head)
        lines.append("  character: " + " + ".join(f"X^{q}" for q in r.character))
        if r.specht_filtration is not None:
            lines.append(
                "  specht filtration (bottom to top): "
                + " / ".join(str(q) for q in r.specht_filtration)
            )
        if r.loewy_layers is not None:
            for i, layer in enumerate(r.loewy_layers):
                lines.append(
                    f"  loewy layer {i}: " + " + ".join(str(q) for q in layer)
                )
        if r.composition is not None:
            lines.append(
                "  composition: "
                + ", ".join(f"{q} x{m}" for q, m in r.composition)
            )
        if r.edges is not None:
            lines.append(
                "  edges: "
                + "; ".join(f"{a} -- {b}" for a, b in r.edges)
            )
        for note in r.notes:
            lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> str:
    _require(args, "n")
    reports = summands.analyze(args.n, args.p)
    doc = summands.report_to_json(args.n, args.p, reports)
    from .schema import validate_report

    validate_report(doc)
    if args.figure:
        diagrams.save_report_figure(reports, args.figure)
    if args.format == "json":
        return _json_dump(doc)
    if args.format == "dot":
        return diagrams.report_dot(reports)
    return _analyze_text(reports)


def _cmd_scott(args) -> str:
    p = summands.check_odd_prime(args.p)
    if args.k is None:
        raise UsageError("--k is required here")
    structure = summands.scott(p, args.k)
    doc = structure.to_json_dict()
    from .schema import validate_scott

    validate_scott(doc)
    if args.figure:
        diagrams.save_scott_figure(structure, args.figure)
    if args.format == "json":
        return _json_dump(doc)
    if args.format == "dot":
        return diagrams.scott_dot(structure)
    labels = structure.labels()
    lines = [
        f"scott module in {structure.block}",
        "top/socle: " + ", ".join(str(q) for q in structure.top),
        "heart: " + ", ".join(str(q) for q in structure.heart),
        "top labels: " + ", ".join(labels["top"]),
        "heart labels: " + ", ".join(labels["heart"]),
        "edges: " + "; ".join(f"{a} -- {b}" for a, b in structure.edges),
        "specht order: " + " / ".join(str(q) for q in structure.specht_order),
        f"excluded label: {structure.excluded}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_vertices(args) -> str:
    _require(args, "n")
    spectrum = summands.vertex_spectrum(args.n, args.p)
    if args.format == "json":
        return _json_dump(
            [{"t": t, "block": b.to_json_dict()} for t, b in spectrum]
        )
    lines = [f"t={t}: {b}" for t, b in spectrum]
    return "\n".join(lines) + "\n"


def _cmd_maxvertex(args) -> str:
    _require(args, "n")
    count, cores, blocks_ = summands.max_vertex_count(args.n, args.p)
    if args.format == "json":
        return _json_dump(
            {
                "count": count,
                "cores": [str(g) for g in cores],
                "blocks": [b.to_json_dict() for b in blocks_],
            }
        )
    lines = [str(count)]
    lines += [f"{g} in {b}" for g, b in zip(cores, blocks_)]
    return "\n".join(lines) + "\n"


def _cmd_selftest(args) -> str:
    if args.inject_fault:
        weight2.FAULT_FLIP_LEG = True
    try:
        report, ok = selftest.run(suite=args.suite)
    finally:
        weight2.FAULT_FLIP_LEG = False
    if not ok:
        raise DiagnosticError(report)
    return report


_COMMANDS = {
    "core": _cmd_core,
    "quotient": _cmd_quotient,
    "abacus": _cmd_abacus,
    "wgamma": _cmd_wgamma,
    "eset": _cmd_eset,
    "delta": _cmd_delta,
    "ddelta": _cmd_ddelta,
    "colour": _cmd_colour,
    "nucirc": _cmd_nucirc,
    "column": _cmd_column,
    "chain": _cmd_chain,
    "witness": _cmd_witness,
    "character": _cmd_character,
    "analyze": _cmd_analyze,
    "scott": _cmd_scott,
    "vertices": _cmd_vertices,
    "maxvertex": _cmd_maxvertex,
    "selftest": _cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foulkes",
        description=(
            "block invariants, vertices and weight-2 summand structure of "
            "the matching permutation modules of symmetric groups"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--p", type=int, help="odd prime >= 3")
        cmd.add_argument("--n", type=int)
        cmd.add_argument("--partition", type=str, help="e.g. '(4,2^5)'")
        cmd.add_argument("--format", choices=("text", "json", "dot"), default="text")
        cmd.add_argument("--beads", type=int)
        cmd.add_argument("--bound", type=int, help="enumeration size bound")
        cmd.add_argument("--k", type=int, help="principal core is (2k)")
        cmd.add_argument("--figure", type=str, help="write a Loewy diagram image")
        if name == "selftest":
            cmd.add_argument("--inject-fault", action="store_true")
            cmd.add_argument("--suite", type=str, help="run one named suite")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command not in ("analyze", "scott") and args.figure:
        raise UsageError("--figure is only available for analyze and scott")
    if args.command not in ("analyze", "scott") and args.format == "dot":
        raise UsageError("dot output is only available for analyze and scott")
    if args.command != "selftest" and args.p is None:
        raise UsageError("--p is required")
    if args.bound is not None:
        os.environ[_BOUND_ENV] = str(args.bound)
    try:
        sys.stdout.write(_COMMANDS[args.command](args))
    finally:
        if args.bound is not None:
            del os.environ[_BOUND_ENV]
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DiagnosticError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
