"""Diagram output: DOT text for graph viewers and matplotlib figures.

Both render the three-layer picture used for the principal-block
summand: a top row, a heart row, a socle row equal to the top, and
undirected edges from each heart node to its two even neighbours.  The
DOT text is deterministic byte-for-byte; figures are written to a file
next to whatever delimited output the caller asked for.
"""

from __future__ import annotations

from .partitions import Partition
from .summands import ScottStructure, SummandReport


def _dot_id(prefix: str, q: Partition) -> str:
    body = "_".join(str(part) for part in q.parts) or "empty"
    return f"{prefix}_{body}"


def scott_dot(structure: ScottStructure, name: str = "scott") -> str:
    """Undirected three-row graph in DOT syntax."""
    lines = [f"graph {name} {{"]
    lines.append('  rankdir="TB";')
    lines.append("  node [shape=plaintext];")
    for row, prefix in (("top", "top"), ("heart", "heart"), ("socle", "soc")):
        members = getattr(structure, row)
        lines.append("  { rank=same; " + " ".join(
            f'{_dot_id(prefix, q)} [label="{q}"];' for q in members
        ) + " }")
    for even, heart in structure.edges:
        lines.append(f"  {_dot_id('top', even)} -- {_dot_id('heart', heart)};")
        lines.append(f"  {_dot_id('heart', heart)} -- {_dot_id('soc', even)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_dot(reports: list[SummandReport], name: str = "analysis") -> str:
    """One DOT graph with a subgraph per block that has Loewy layers."""
    lines = [f"graph {name} {{"]
    lines.append('  rankdir="TB";')
    lines.append("  node [shape=plaintext];")
    for idx, report in enumerate(reports):
        if report.loewy_layers is None:
            continue
        lines.append(f"  subgraph cluster_{idx} {{")
        lines.append(f'    label="{report.block} {report.kind}";')
        names: list[list[str]] = []
        for li, layer in enumerate(report.loewy_layers):
            row = []
            for q in layer:
                node = f"b{idx}_l{li}_{_dot_id('n', q)}"
                lines.append(f'    {node} [label="{q}"];')
                row.append(node)
            names.append(row)
            lines.append("    { rank=same; " + " ".join(row) + " }")
        if report.edges is not None and len(names) == 3:
            heart_nodes = {
                q: f"b{idx}_l1_{_dot_id('n', q)}" for q in report.loewy_layers[1]
            }
            top_nodes = {
                q: f"b{idx}_l0_{_dot_id('n', q)}" for q in report.loewy_layers[0]
            }
            soc_nodes = {
                q: f"b{idx}_l2_{_dot_id('n', q)}" for q in report.loewy_layers[2]
            }
            for even, heart in report.edges:
                lines.append(f"    {top_nodes[even]} -- {heart_nodes[heart]};")
                lines.append(f"    {heart_nodes[heart]} -- {soc_nodes[even]};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layer_figure(ax, layers, edges, title) -> None:
    positions: dict[tuple[int, int], tuple[float, float]] = {}
    index_in_layer: list[dict[Partition, int]] = []
    for li, layer in enumerate(layers):
        idx_map = {}
        for ci, q in enumerate(layer):
            positions[(li, ci)] = (float(ci), float(len(layers) - 1 - li))
            idx_map[q] = ci
        index_in_layer.append(idx_map)
    if edges and len(layers) == 3:
        for even, heart in edges:
            hx, hy = positions[(1, index_in_layer[1][heart])]
            # heart nodes sit between columns; nudge for readability
            hx += 0.5
            for li in (0, 2):
                ex, ey = positions[(li, index_in_layer[li][even])]
                ax.plot([ex, hx], [ey, hy], color="0.6", lw=1.0, zorder=1)
    for (li, ci), (x, y) in positions.items():
        if li == 1:
            x += 0.5
        q = layers[li][ci]
        ax.text(
            x,
            y,
            str(q),
            ha="center",
            va="center",
            fontsize=9,
            zorder=2,
            bbox={"boxstyle": "round,pad=0.25", "fc": "white", "ec": "0.3"},
        )
    width = max(len(layer) for layer in layers) if layers else 1
    ax.set_xlim(-0.75, width + 0.25)
    ax.set_ylim(-0.5, len(layers) - 0.5)
    ax.set_title(title, fontsize=10)
    ax.axis("off")


def save_scott_figure(structure: ScottStructure, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(1.8 * max(2, len(structure.top)), 3.2))
    layers = (structure.top, structure.heart, structure.socle)
    _layer_figure(ax, layers, structure.edges, f"{structure.block}: Loewy layers")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_report_figure(reports: list[SummandReport], path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    layered = [r for r in reports if r.loewy_layers is not None]
    if not layered:
        layered = reports[:1]
    fig, axes = plt.subplots(
        len(layered),
        1,
        figsize=(10, 2.6 * len(layered)),
        squeeze=False,
    )
    for ax, report in zip((a for row in axes for a in row), layered):
        layers = report.loewy_layers or ((),)
        _layer_figure(
            ax,
            layers,
            report.edges,
            f"{report.block} {report.kind}",
        )
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
