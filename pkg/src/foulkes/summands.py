"""Block-by-block summand reports for the matching permutation module
of the symmetric group on 2n points in odd characteristic p.

The ordinary character is the multiplicity-free sum of the characters
of the doubled partitions; each block of weight at most two carries
exactly one summand, whose kind is decided by the minimal hook count
of the core: a simple projective Specht module at weight 0, the
projective cover of the dominance-larger doubled label at weight 1, the
projective cover of the dominance-largest even member when the hook
count is 2, and a unique non-projective summand with the first
non-trivial vertex when the core is itself even.  Blocks of higher
weight only receive the summand counts forced by the Green
correspondence; the reports never claim more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .blocks import (
    BlockId,
    block_of,
    cached_core_profile,
    enumerate_block,
    maximal_member,
    witness,
)
from .errors import DiagnosticError, UsageError
from .partitions import (
    Partition,
    check_odd_modulus,
    double,
    enumerate_partitions,
    is_even,
    is_p_regular,
    size_bound,
)
from .weight2 import Chain, chain, decomp_column, label, specht_row


def check_odd_prime(p: int) -> int:
    """The analysis layer insists on genuine odd primes."""
    check_odd_modulus(p)
    if any(p % d == 0 for d in range(3, isqrt(p) + 1, 2)):
        raise UsageError(f"p must be prime, got {p}")
    return p


KIND_SIMPLE = "SimpleSpecht"
KIND_W1 = "Weight1Projective"
KIND_W2 = "Weight2Projective"
KIND_SCOTT = "VertexQ1Scott"
KIND_Q1 = "VertexQ1NonPrincipal"
KIND_UNKNOWN = "Undetermined"

GREEN_NOTE = (
    "Green correspondent is P (x) S^core over "
    "N_{S_2n}(Q_1)/Q_1 = N_{S_2p}(Q_1)/Q_1 x S_{2n-2p}, "
    "P the projective cover of the trivial module"
)
FILTRATION_PROVISO = "Specht filtration order requires p >= 5"


@dataclass(frozen=True)
class ScottStructure:
    """Three Loewy layers of the principal-block summand when 2n = 2p+2k."""

    block: BlockId
    k: int
    top: tuple[Partition, ...]
    socle: tuple[Partition, ...]
    heart: tuple[Partition, ...]
    edges: tuple[tuple[Partition, Partition], ...]  # (even label, heart label)
    specht_order: tuple[Partition, ...]  # dominance ascending
    excluded: Partition
    chain: Chain

    def labels(self) -> dict[str, list[str]]:
        return {
            "top": [label(q, self.block) for q in self.top],
            "heart": [label(q, self.block) for q in self.heart],
            "chain": [e.label or "" for e in self.chain.elements],
        }

    def to_json_dict(self) -> dict:
        return {
            "block": self.block.to_json_dict(),
            "k": self.k,
            "top": [str(q) for q in self.top],
            "heart": [str(q) for q in self.heart],
            "socle": [str(q) for q in self.socle],
            "edges": [[str(a), str(b)] for a, b in self.edges],
            "specht_order": [str(q) for q in self.specht_order],
            "excluded": str(self.excluded),
            "labels": self.labels(),
        }


@dataclass(frozen=True)
class SummandReport:
    """What is known about the summand(s) in one block."""

    block: BlockId
    kind: str
    vertex_t: int
    character: tuple[Partition, ...]  # rev-lex ascending
    definitive: bool
    specht_filtration: tuple[Partition, ...] | None = None  # dominance ascending
    loewy_layers: tuple[tuple[Partition, ...], ...] | None = None
    composition: tuple[tuple[Partition, int], ...] | None = None
    edges: tuple[tuple[Partition, Partition], ...] | None = None
    scott: ScottStructure | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def label_partition(self) -> Partition | None:
        """The partition naming the summand (S^gamma or the P^nu label)."""
        if self.kind == KIND_SIMPLE:
            return self.block.core
        if self.kind in (KIND_W1, KIND_W2):
            return self.character[-1]  # dominance-largest = rev-lex largest
        return None

    def to_json_dict(self) -> dict:
        out: dict = {
            "block": self.block.to_json_dict(),
            "kind": self.kind,
            "vertex_t": self.vertex_t,
            "character": [str(q) for q in self.character],
            "definitive": self.definitive,
            "notes": list(self.notes),
        }
        if self.label_partition is not None:
            out["summand"] = (
                f"S^{self.label_partition}"
                if self.kind == KIND_SIMPLE
                else f"P^{self.label_partition}"
            )
        if self.specht_filtration is not None:
            out["specht_filtration"] = [str(q) for q in self.specht_filtration]
        if self.loewy_layers is not None:
            out["loewy_layers"] = [[str(q) for q in layer] for layer in self.loewy_layers]
        if self.composition is not None:
            out["composition"] = [[str(q), m] for q, m in self.composition]
        if self.edges is not None:
            out["edges"] = [[str(a), str(b)] for a, b in self.edges]
        if self.scott is not None:
            out["scott"] = self.scott.to_json_dict()
        return out


def character(n: int, p: int) -> dict[BlockId, list[Partition]]:
    """Even partitions of 2n grouped by block, blocks in core rev-lex order."""
    check_odd_prime(p)
    if n < 1:
        raise UsageError("n must be positive")
    if 2 * n > size_bound():
        raise UsageError(f"2n={2 * n} exceeds the enumeration bound")
    grouped: dict[BlockId, list[Partition]] = {}
    for lam in enumerate_partitions(n):
        two_lam = double(lam)
        grouped.setdefault(block_of(two_lam, p), []).append(two_lam)
    ordered = sorted(grouped, key=lambda b: b.core.parts, reverse=True)
    return {b: sorted(grouped[b], key=lambda q: q.parts) for b in ordered}


def _composition_from_rows(members: list[Partition], block: BlockId):
    counts: dict[Partition, int] = {}
    for mu in members:
        for nu in specht_row(mu, block):
            counts[nu] = counts.get(nu, 0) + 1
    ordered = sorted(counts, key=lambda q: q.parts, reverse=True)
    return tuple((q, counts[q]) for q in ordered)


def _weight1_report(block: BlockId, evens: list[Partition]) -> SummandReport:
    profile = cached_core_profile(block.p, block.core.parts)
    if profile.w_gamma != 1 or len(profile.e_set) != 2:
        raise DiagnosticError(
            f"weight-1 block {block} should have a two-element even set, "
            f"got w={profile.w_gamma}, E={profile.e_set}"
        )
    if sorted(evens, key=lambda q: q.parts) != sorted(
        profile.e_set, key=lambda q: q.parts
    ):
        raise DiagnosticError(f"character of {block} disagrees with its even set")
    two_lam, two_lam_prime = sorted(profile.e_set, key=lambda q: q.parts)
    ordered = sorted(enumerate_block(block), key=lambda q: q.parts, reverse=True)
    idx = ordered.index(two_lam_prime)
    middle = [two_lam]
    if idx > 0:
        middle.insert(0, ordered[idx - 1])
    layers = ((two_lam_prime,), tuple(middle), (two_lam_prime,))
    return SummandReport(
        block=block,
        kind=KIND_W1,
        vertex_t=0,
        character=(two_lam, two_lam_prime),
        definitive=True,
        specht_filtration=(two_lam, two_lam_prime),
        loewy_layers=layers,
        composition=_composition_from_rows([two_lam, two_lam_prime], block),
    )


def _weight2_projective_report(block: BlockId, evens: list[Partition]) -> SummandReport:
    profile = cached_core_profile(block.p, block.core.parts)
    two_lam = maximal_member(list(profile.e_set), f"maximal even member of {block}")
    if len(profile.e_set) >= 2 * 2 + 1:
        raise DiagnosticError(
            f"{block}: |E|={len(profile.e_set)} breaks the uniqueness bound"
        )
    col = decomp_column(two_lam, block)
    rows = col.nonzero_rows()
    if not set(rows) <= set(profile.e_set):
        raise DiagnosticError(
            f"character rows {rows} of {block} leave the even set {profile.e_set}"
        )
    ascending = sorted(rows, key=lambda q: q.parts)
    return SummandReport(
        block=block,
        kind=KIND_W2,
        vertex_t=0,
        character=tuple(ascending),
        definitive=True,
        specht_filtration=tuple(ascending),
        composition=_composition_from_rows(ascending, block),
    )


def scott(p: int, k: int) -> ScottStructure:
    """The principal-block summand structure for 2n = 2p + 2k, 0 <= 2k < p."""
    check_odd_prime(p)
    if not 0 <= 2 * k < p:
        raise UsageError(f"need 0 <= 2k < p, got k={k}")
    core = Partition((2 * k,)) if k else Partition()
    block = BlockId(p=p, core=core, weight=2)
    ch = chain(block)
    evens = ch.partitions("even")
    excluded = Partition([2 * k] + [2] * p) if k else Partition([2] * p)
    singular = [q for q in evens if not is_p_regular(q, p)]
    if singular != [excluded]:
        raise DiagnosticError(
            f"expected {excluded} as the unique p-singular even member, got {singular}"
        )
    top = tuple(q for q in evens if q != excluded)
    heart = []
    edges = []
    elements = [e.partition for e in ch.elements]
    for i, q in enumerate(elements):
        if not is_even(q) or i == 0:
            continue
        above = elements[i - 1]
        if is_even(above):
            raise DiagnosticError(f"consecutive even chain entries at {q}")
        heart.append(above)
        prev_even = next(
            (r for r in reversed(elements[:i]) if is_even(r)), None
        )
        if prev_even is not None:
            edges.append((prev_even, above))
        if q != excluded:
            edges.append((q, above))
    if len(heart) != len(top):
        raise DiagnosticError(
            f"heart size {len(heart)} does not match top size {len(top)}"
        )
    _assert_alternating_path(top, tuple(heart), tuple(edges))
    return ScottStructure(
        block=block,
        k=k,
        top=top,
        socle=top,
        heart=tuple(heart),
        edges=tuple(edges),
        specht_order=tuple(sorted(evens, key=lambda q: q.parts)),
        excluded=excluded,
        chain=ch,
    )


def _assert_alternating_path(top, heart, edges) -> None:
    """The edge graph must be a single path alternating top/heart nodes."""
    adjacency: dict[Partition, list[Partition]] = {q: [] for q in (*top, *heart)}
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    degrees = sorted(len(v) for v in adjacency.values())
    node_count = len(adjacency)
    if node_count == 1:
        if degrees != [0]:
            raise DiagnosticError("single-node edge graph must have no edges")
        return
    if degrees[:2] != [1, 1] or any(d != 2 for d in degrees[2:]):
        raise DiagnosticError(f"edge graph is not a path; degrees {degrees}")
    # connectivity: walk from one endpoint
    start = next(q for q, v in adjacency.items() if len(v) == 1)
    seen = {start}
    frontier = [start]
    while frontier:
        q = frontier.pop()
        for r in adjacency[q]:
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    if len(seen) != node_count:
        raise DiagnosticError("edge graph is disconnected")


def _scott_report(block: BlockId, evens: list[Partition], n: int) -> SummandReport:
    k = block.core.parts[0] // 2 if block.core.parts else 0
    structure = scott(block.p, k)
    if sorted(evens, key=lambda q: q.parts) != list(structure.specht_order):
        raise DiagnosticError(f"character of {block} disagrees with its even set")
    notes = [GREEN_NOTE]
    if block.p < 5:
        notes.append(FILTRATION_PROVISO)
    layers = (structure.top, structure.heart, structure.socle)
    return SummandReport(
        block=block,
        kind=KIND_SCOTT,
        vertex_t=1,
        character=structure.specht_order,
        definitive=True,
        specht_filtration=structure.specht_order,
        loewy_layers=layers,
        composition=_composition_from_rows(list(structure.specht_order), block),
        edges=structure.edges,
        scott=structure,
        notes=tuple(notes),
    )


def _vertex_q1_report(block: BlockId, evens: list[Partition]) -> SummandReport:
    ascending = sorted(evens, key=lambda q: q.parts)
    notes = [GREEN_NOTE]
    if block.p < 5:
        notes.append(FILTRATION_PROVISO)
    return SummandReport(
        block=block,
        kind=KIND_Q1,
        vertex_t=1,
        character=tuple(ascending),
        definitive=True,
        specht_filtration=tuple(ascending),
        composition=_composition_from_rows(ascending, block),
        notes=tuple(notes),
    )


def _undetermined_report(block: BlockId, evens: list[Partition]) -> SummandReport:
    ascending = sorted(evens, key=lambda q: q.parts)
    notes = []
    vertex_t = -1
    try:
        profile = cached_core_profile(block.p, block.core.parts)
        w_gamma = profile.w_gamma
    except Exception:
        w_gamma = None
    if w_gamma is not None and w_gamma <= 2 and (block.weight - w_gamma) % 2 == 0:
        vertex_t = (block.weight - w_gamma) // 2
        notes.append(
            f"exactly one summand with vertex Q_{vertex_t} "
            "(Green correspondence count); other summands unsettled"
        )
    else:
        notes.append("no summand count is forced for this block")
    return SummandReport(
        block=block,
        kind=KIND_UNKNOWN,
        vertex_t=max(vertex_t, 0),
        character=tuple(ascending),
        definitive=False,
        notes=tuple(notes),
    )


def analyze(n: int, p: int) -> list[SummandReport]:
    """One report per block of the 2n-point matching module."""
    reports = []
    for block, evens in character(n, p).items():
        if block.weight == 0:
            if not is_even(block.core):
                raise DiagnosticError(f"weight-0 block {block} with non-even core")
            reports.append(
                SummandReport(
                    block=block,
                    kind=KIND_SIMPLE,
                    vertex_t=0,
                    character=(block.core,),
                    definitive=True,
                    specht_filtration=(block.core,),
                    loewy_layers=((block.core,),),
                    composition=((block.core, 1),),
                )
            )
        elif block.weight == 1:
            reports.append(_weight1_report(block, evens))
        elif block.weight == 2:
            w_gamma = cached_core_profile(p, block.core.parts).w_gamma
            if w_gamma == 2:
                reports.append(_weight2_projective_report(block, evens))
            elif w_gamma == 0:
                if len(block.core.parts) <= 1:
                    reports.append(_scott_report(block, evens, n))
                else:
                    reports.append(_vertex_q1_report(block, evens))
            else:
                raise DiagnosticError(
                    f"weight-2 block {block} has impossible w(core)={w_gamma}"
                )
        else:
            reports.append(_undetermined_report(block, evens))
    return reports


def vertex_spectrum(n: int, p: int) -> list[tuple[int, BlockId]]:
    """For each t <= n/p, a block of S_2n holding a vertex-Q_t summand."""
    check_odd_prime(p)
    if n < 1:
        raise UsageError("n must be positive")
    out = []
    for t in range(n // p + 1):
        mu = witness(n - t * p, p)
        block = block_of(mu, p)
        out.append((t, BlockId(p=p, core=block.core, weight=block.weight + 2 * t)))
    return out


def max_vertex_count(n: int, p: int) -> tuple[int, list[Partition], list[BlockId]]:
    """Summands with the largest vertex: one per core reachable from the
    even partitions of 2r, r = n mod p; each lies in its own block."""
    check_odd_prime(p)
    if n < 1:
        raise UsageError("n must be positive")
    t = n // p
    r = n - t * p
    cores = {block_of(double(lam), p).core for lam in enumerate_partitions(r)}
    ordered = sorted(cores, key=lambda q: q.parts, reverse=True)
    blocks = [BlockId(p=p, core=g, weight=(2 * n - g.size) // p) for g in ordered]
    if len(set(blocks)) != len(blocks):
        raise DiagnosticError("max-vertex blocks are not pairwise distinct")
    return len(ordered), ordered, blocks


def report_to_json(n: int, p: int, reports: list[SummandReport]) -> dict:
    return {
        "schema_version": 1,
        "p": p,
        "n": n,
        "blocks": [r.to_json_dict() for r in reports],
    }
