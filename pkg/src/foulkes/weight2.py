"""Weight-2 decomposition machinery: the leg-difference statistic, the
intermediate-bead count, the black/white colouring, the dominance
partner, decomposition-number columns, and the totally ordered chain of
even and leg-difference-one partitions with its bead-move labels.

All results here are for blocks of weight at most two; columns in
weight 0 and 1 use the classical chain structure of those blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import abacus
from .blocks import BlockId, block_of, enumerate_block, maximal_member
from .errors import DiagnosticError, UsageError
from .partitions import (
    Partition,
    check_odd_modulus,
    dominates,
    is_even,
    is_p_regular,
    strictly_dominates,
)

# self-test fault injection: when set, one leg-length per removal walk is
# perturbed so the order-independence suite must fail
FAULT_FLIP_LEG = False


class Colour(Enum):
    BLACK = "black"
    WHITE = "white"


def _min_abacus(nu: Partition, p: int) -> abacus.Abacus:
    return abacus.from_partition(nu, p, max(1, len(nu.parts)))


def _require_weight2(nu: Partition, p: int) -> abacus.Abacus:
    a = _min_abacus(nu, check_odd_modulus(p))
    if abacus.weight_of(a) != 2:
        raise UsageError(f"{nu} does not have weight 2 at p={p}")
    return a


def _leg_sequences(nu: Partition, p: int) -> list[tuple[int, int]]:
    """Leg pairs over every order of removing the two rim p-hooks."""
    a = _require_weight2(nu, p)
    sequences = []
    first = True
    for bead1, leg1 in abacus.removable_rim_hooks(a, 1):
        if FAULT_FLIP_LEG and first:
            leg1 += 1
            first = False
        a1 = abacus.remove_rim_hook(a, bead1, 1)
        for bead2, leg2 in abacus.removable_rim_hooks(a1, 1):
            sequences.append((leg1, leg2))
    if not sequences:
        raise DiagnosticError(f"no removal sequence found for {nu}")
    return sequences


@lru_cache(maxsize=65536)
def delta(nu: Partition, p: int) -> int:
    """|leg1 - leg2| over successive rim p-hook removals.

    Every removal order is tried; disagreement raises a diagnostic since
    the statistic is only meaningful when order-independent.
    """
    diffs = {abs(l1 - l2) for l1, l2 in _leg_sequences(nu, p)}
    if len(diffs) != 1:
        raise DiagnosticError(
            f"leg-length difference of {nu} depends on the removal order: {diffs}"
        )
    return diffs.pop()


def _moved_core_beads(nu: Partition, p: int) -> tuple[int, int] | None:
    """Positions, on the shared abacus of nu and its core, of the two core
    beads whose single-step moves give nu; None when one bead moved twice."""
    a = _require_weight2(nu, p)
    rows_by_runner = abacus.runner_rows(a)
    moved: list[int] = []
    for r, rows in enumerate(rows_by_runner):
        m = len(rows)
        quotient = [row - i for i, row in enumerate(rows)]
        excess = [q for q in quotient if q > 0]
        if not excess:
            continue
        if excess == [2]:
            return None
        if excess == [1, 1]:
            moved.extend(((m - 2) * p + r, (m - 1) * p + r))
        elif excess == [1]:
            moved.append((m - 1) * p + r)
        else:
            raise DiagnosticError(f"impossible weight-2 quotient on runner {r}: {quotient}")
    if len(moved) != 2:
        raise DiagnosticError(f"expected two moved beads for {nu}, got {moved}")
    return (min(moved), max(moved))


def big_delta(nu: Partition, p: int) -> int:
    """Number of core beads strictly between the two moved beads.

    Zero in the one-bead-moved-twice case, where the partition carries a
    rim 2p-hook straight back to its core.
    """
    pair = _moved_core_beads(nu, p)
    if pair is None:
        return 0
    lo, hi = pair
    a = _require_weight2(nu, p)
    core_beads = set()
    for r, rows in enumerate(abacus.runner_rows(a)):
        core_beads.update(row * p + r for row in range(len(rows)))
    return sum(1 for x in range(lo + 1, hi) if x in core_beads)


def colour(nu: Partition, p: int) -> Colour:
    """Black/white colouring of weight-2 partitions with delta zero."""
    if delta(nu, p) != 0:
        raise UsageError(f"colour undefined: {nu} has nonzero leg difference")
    a = _require_weight2(nu, p)
    hooks = abacus.removable_rim_hooks(a, 1)
    if len(hooks) >= 2:
        larger = max(leg for _, leg in hooks)
        return Colour.BLACK if larger % 2 == 0 else Colour.WHITE
    hooks2 = abacus.removable_rim_hooks(a, 2)
    if len(hooks2) != 1:
        raise DiagnosticError(
            f"{nu} has one rim p-hook but {len(hooks2)} rim 2p-hooks"
        )
    leg = hooks2[0][1]
    return Colour.BLACK if leg % 4 in (0, 3) else Colour.WHITE


def is_black(nu: Partition, p: int) -> bool:
    """delta zero and coloured black; the form Prop-4.4-style tests use."""
    return delta(nu, p) == 0 and colour(nu, p) is Colour.BLACK


def nu_circ(nu: Partition, p: int) -> Partition:
    """The unique dominance-largest partition strictly below nu in its
    block with the same leg difference (and colour, when that is zero).

    Strictness is deliberate: nu itself always satisfies the defining
    predicate, which would make a non-strict reading vacuous.
    """
    if not is_p_regular(nu, p):
        raise UsageError(f"{nu} is not {p}-regular")
    block = block_of(nu, p)
    if block.weight != 2:
        raise UsageError(f"{nu} does not have weight 2 at p={p}")
    d = delta(nu, p)
    c = colour(nu, p) if d == 0 else None
    candidates = []
    for mu in enumerate_block(block):
        if not strictly_dominates(nu, mu):
            continue
        if delta(mu, p) != d:
            continue
        if c is not None and colour(mu, p) is not c:
            continue
        candidates.append(mu)
    return maximal_member(candidates, f"dominance partner of {nu}")


@dataclass(frozen=True)
class DecompColumn:
    """One column of the decomposition matrix: mu -> d_{mu nu}."""

    block: BlockId
    nu: Partition
    entries: tuple[tuple[Partition, int], ...]  # rev-lex descending rows

    def nonzero_rows(self) -> list[Partition]:
        return [mu for mu, d in self.entries if d]

    def to_json_dict(self) -> dict:
        return {
            "block": self.block.to_json_dict(),
            "nu": str(self.nu),
            "rows": [{"mu": str(mu), "d": d} for mu, d in self.entries],
        }


def _ordered_chain_members(block: BlockId, members: list[Partition], what: str) -> list[Partition]:
    """Sort descending and certify the list is totally dominance-ordered."""
    ordered = sorted(members, key=lambda q: q.parts, reverse=True)
    for a, b in zip(ordered, ordered[1:]):
        if not dominates(a, b):
            raise DiagnosticError(
                f"{what} of {block} is not totally ordered: {a} vs {b}"
            )
    return ordered


def decomp_column(nu: Partition, block: BlockId) -> DecompColumn:
    """Fill one projective-character column in a block of weight <= 2."""
    if block.weight > 2:
        raise UsageError("columns are only known in blocks of weight <= 2")
    if block_of(nu, block.p) != block:
        raise UsageError(f"{nu} does not lie in {block}")
    if not is_p_regular(nu, block.p):
        raise UsageError(f"{nu} is not {block.p}-regular")
    members = enumerate_block(block)
    if block.weight == 0:
        values = {nu: 1}
    elif block.weight == 1:
        ordered = _ordered_chain_members(block, members, "the weight-1 block")
        idx = ordered.index(nu)
        if idx == len(ordered) - 1:
            raise DiagnosticError(
                f"{nu} is the block minimum yet {block.p}-regular; "
                "weight-1 column undefined"
            )
        values = {nu: 1, ordered[idx + 1]: 1}
    else:
        circ = nu_circ(nu, block.p)
        d_nu = delta(nu, block.p)
        values = {nu: 1, circ: 1}
        for mu in members:
            if mu in (nu, circ):
                continue
            between = strictly_dominates(nu, mu) and strictly_dominates(mu, circ)
            if between and abs(d_nu - delta(mu, block.p)) == 1:
                values[mu] = 1
    entries = tuple((mu, values.get(mu, 0)) for mu in members)
    return DecompColumn(block=block, nu=nu, entries=entries)


def specht_row(mu: Partition, block: BlockId) -> list[Partition]:
    """Composition factors of the Specht module for mu: the p-regular nu
    with a unit column entry in row mu.  Rev-lex descending."""
    out = []
    for nu in enumerate_block(block):
        if not is_p_regular(nu, block.p):
            continue
        col = decomp_column(nu, block)
        if dict(col.entries).get(mu, 0):
            out.append(nu)
    return out


@dataclass(frozen=True)
class ChainElement:
    partition: Partition
    tag: str  # "even" | "delta1"
    label: str | None
    p_regular: bool

    def to_json_dict(self) -> dict:
        return {
            "partition": str(self.partition),
            "tag": self.tag,
            "label": self.label,
            "p_regular": self.p_regular,
        }


@dataclass(frozen=True)
class Chain:
    """Descending chain of all even and all leg-difference-one members."""

    block: BlockId
    elements: tuple[ChainElement, ...]
    pattern: str  # e.g. "E d d E d"

    def partitions(self, tag: str | None = None) -> list[Partition]:
        return [e.partition for e in self.elements if tag is None or e.tag == tag]

    def to_json_dict(self) -> dict:
        return {
            "block": self.block.to_json_dict(),
            "elements": [e.to_json_dict() for e in self.elements],
            "pattern": self.pattern,
        }


def _is_single_even_row(core: Partition) -> bool:
    return len(core.parts) == 0 or (len(core.parts) == 1 and core.parts[0] % 2 == 0)


def chain(block: BlockId) -> Chain:
    """The chain for a weight-2 block with even core.

    Total dominance order is verified, not assumed; for single-row cores
    a failure would contradict the chain lemma, for other even cores the
    claim is only empirical.
    """
    if block.weight != 2:
        raise UsageError(f"chains exist only in weight-2 blocks, got {block}")
    if not is_even(block.core):
        raise UsageError(f"chains need an even core, got {block.core}")
    members = enumerate_block(block)
    chosen = [
        q for q in members if is_even(q) or delta(q, block.p) == 1
    ]
    ordered = _ordered_chain_members(block, chosen, "the even/delta-1 chain")
    labels: dict[Partition, str] = {}
    if _is_single_even_row(block.core):
        k = (block.core.parts[0] // 2) if block.core.parts else 0
        labels = {part: lab for lab, part in scott_label_map(block.p, k).items()}
    elements = tuple(
        ChainElement(
            partition=q,
            tag="even" if is_even(q) else "delta1",
            label=labels.get(q),
            p_regular=is_p_regular(q, block.p),
        )
        for q in ordered
    )
    pattern = " ".join("E" if e.tag == "even" else "d" for e in elements)
    return Chain(block=block, elements=elements, pattern=pattern)


@lru_cache(maxsize=1024)
def scott_label_map(p: int, k: int) -> dict[str, Partition]:
    """Partitions named by single-step moves on the standard abacus of (2k).

    The display abacus has a full first row plus, for k >= 1, one bead one
    row down on runner 2k; it is padded by one extra row of beads so every
    runner shows at least two beads.  <u> moves the lowest bead on runner
    u down twice; <u,v> moves the lowest beads on runners u and v down
    once each; <u,u> moves the lowest bead on runner u and then the bead
    immediately above it.
    """
    check_odd_modulus(p)
    if not 0 <= 2 * k < p:
        raise UsageError(f"need 0 <= 2k < p, got k={k}, p={p}")
    base = set(range(p)) | ({p + 2 * k} if k >= 1 else set())
    padded = set(range(p)) | {b + p for b in base}

    def lowest(beads: set[int], runner: int) -> int:
        return max(b for b in beads if b % p == runner)

    def moved(pairs: list[tuple[int, int]]) -> Partition:
        beads = set(padded)
        for bead, steps in pairs:
            target = bead + steps * p
            if bead not in beads or target in beads:
                raise DiagnosticError(f"illegal label move {bead}->{target}")
            beads.remove(bead)
            beads.add(target)
        return abacus.to_partition(abacus.Abacus(p, tuple(beads)))

    out: dict[str, Partition] = {}
    for u in range(p):
        out[f"⟨{u}⟩"] = moved([(lowest(padded, u), 2)])
    for u in range(p):
        for v in range(u, p):
            if u == v:
                low = lowest(padded, u)
                value = moved([(low, 1), (low - p, 1)])
            else:
                value = moved([(lowest(padded, u), 1), (lowest(padded, v), 1)])
            out[f"⟨{u},{v}⟩"] = value
    if len(set(out.values())) != len(out):
        raise DiagnosticError(f"label map for p={p}, 2k={2 * k} is not injective")
    return out


def label(nu: Partition, block: BlockId) -> str:
    """The bead-move label of nu relative to the standard core abacus."""
    if not _is_single_even_row(block.core):
        raise UsageError(f"labels are defined for single even row cores, got {block.core}")
    if block.weight != 2:
        raise UsageError("labels live in weight-2 blocks")
    k = (block.core.parts[0] // 2) if block.core.parts else 0
    matches = [lab for lab, part in scott_label_map(block.p, k).items() if part == nu]
    if len(matches) != 1:
        raise DiagnosticError(f"{nu} matched labels {matches} in {block}")
    return matches[0]
