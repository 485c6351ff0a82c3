"""James-abacus engine: beta-sets, runners, gaps, rim-hook calculus.

Positions run 0, 1, 2, ... left to right and top to bottom on `prime`
runners; row r holds positions prime*r .. prime*r + prime - 1.  Every
strictly negative position holds an implicit bead, so the bead in
position -1 can take part in a gap when position 0 is vacant, and a
hook removal is a move of a bead one or two rows straight up into a
vacant position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DiagnosticError, UsageError
from .partitions import Partition, check_odd_modulus

BEAD, SPACE = "●", "○"


@dataclass(frozen=True)
class Abacus:
    """A beta-set of displayed beads on `prime` runners.

    implicit_negative_beads records the convention that all strictly
    negative positions are occupied; it is always True and is kept as a
    field so serialized abaci state their convention.
    """

    prime: int
    beads: tuple[int, ...]
    implicit_negative_beads: bool = True

    def __post_init__(self):
        check_odd_modulus(self.prime)
        beads = tuple(sorted(self.beads))
        if any(b < 0 for b in beads):
            raise UsageError("displayed beads must sit in non-negative positions")
        if len(set(beads)) != len(beads):
            raise UsageError("bead positions must be distinct")
        object.__setattr__(self, "beads", beads)

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def occupied(self, position: int) -> bool:
        return position < 0 or position in set(self.beads)

    def to_json_dict(self) -> dict:
        return {"prime": self.prime, "beads": list(self.beads)}


@dataclass(frozen=True)
class Gap:
    """A maximal run of spaces between adjacent beads.

    lower < upper are the bead positions; the gap is odd exactly when
    upper - lower is even.  Beads in adjacent positions form no gap.
    """

    lower: int
    upper: int

    @property
    def parity(self) -> str:
        return "odd" if (self.upper - self.lower) % 2 == 0 else "even"

    @property
    def is_odd(self) -> bool:
        return (self.upper - self.lower) % 2 == 0


def beta_set(p: Partition, bead_count: int) -> tuple[int, ...]:
    """Beta numbers part_i + (bead_count - 1 - i), zero parts padded."""
    if bead_count < len(p.parts):
        raise UsageError(
            f"bead count {bead_count} is below the {len(p.parts)} parts of {p}"
        )
    parts = p.parts + (0,) * (bead_count - len(p.parts))
    return tuple(sorted(parts[i] + (bead_count - 1 - i) for i in range(bead_count)))


def from_partition(p: Partition, prime: int, bead_count: int) -> Abacus:
    if bead_count < 1:
        raise UsageError("bead count must be positive")
    return Abacus(prime=check_odd_modulus(prime), beads=beta_set(p, bead_count))


def to_partition(a: Abacus) -> Partition:
    """Part for the bead at position b is b minus the number of smaller beads."""
    parts = [b - i for i, b in enumerate(a.beads)]
    parts.reverse()
    return Partition(parts)


def renormalize(a: Abacus, new_bead_count: int) -> Abacus:
    """Same partition on new_bead_count beads."""
    return from_partition(to_partition(a), a.prime, new_bead_count)


def gaps(a: Abacus) -> list[Gap]:
    """All gaps, including the one against the implicit bead at -1."""
    found = []
    beads = (-1,) + a.beads
    for lower, upper in zip(beads, beads[1:]):
        if upper - lower >= 2:
            found.append(Gap(lower, upper))
    return found


def has_odd_gap(a: Abacus) -> bool:
    return any(g.is_odd for g in gaps(a))


def runner_rows(a: Abacus) -> list[list[int]]:
    """Rows occupied on each runner, ascending."""
    rows: list[list[int]] = [[] for _ in range(a.prime)]
    for b in a.beads:
        rows[b % a.prime].append(b // a.prime)
    return rows


def p_core(a: Abacus) -> Partition:
    """Push every bead to the top of its runner."""
    beads = []
    for r, rows in enumerate(runner_rows(a)):
        beads.extend(row * a.prime + r for row in range(len(rows)))
    return to_partition(Abacus(a.prime, tuple(beads)))


def p_quotient(a: Abacus) -> tuple[list[Partition], int, int]:
    """Per-runner partitions, total weight, and the bead count used.

    Runner labels rotate with the bead count, so the bead count is part
    of the answer; block-level callers only ever use the multiset.
    """
    components = []
    for rows in runner_rows(a):
        parts = [row - i for i, row in enumerate(rows)]
        parts.reverse()
        components.append(Partition(parts))
    weight = sum(c.size for c in components)
    return components, weight, a.bead_count


def weight_of(a: Abacus) -> int:
    return p_quotient(a)[1]


def removable_rim_hooks(a: Abacus, steps: int = 1) -> list[tuple[int, int]]:
    """Beads whose position minus steps*prime is vacant, with leg-lengths.

    The leg-length of the hook at bead b is the number of beads strictly
    between the target position and b.  Implicit negative positions count
    as occupied, so no bead below row `steps` is ever removable.
    """
    if steps not in (1, 2):
        raise UsageError("only rim p- and 2p-hooks are supported (steps 1 or 2)")
    hop = steps * a.prime
    bead_set = set(a.beads)
    found = []
    for b in a.beads:
        target = b - hop
        if target < 0 or target in bead_set:
            continue
        leg = sum(1 for x in range(target + 1, b) if x in bead_set)
        found.append((b, leg))
    return found


def remove_rim_hook(a: Abacus, bead: int, steps: int = 1) -> Abacus:
    """Move `bead` up `steps` rows."""
    if steps not in (1, 2):
        raise UsageError("only rim p- and 2p-hooks are supported (steps 1 or 2)")
    if bead not in set(a.beads):
        raise UsageError(f"no bead in position {bead}")
    target = bead - steps * a.prime
    if target < 0 or target in set(a.beads):
        raise UsageError(f"position {target} is occupied; bead {bead} cannot move up")
    beads = tuple(x for x in a.beads if x != bead) + (target,)
    return Abacus(a.prime, beads)


def add_rim_hook(a: Abacus, bead: int, steps: int = 1) -> Abacus:
    """Inverse downward move (used by tests to invert remove_rim_hook)."""
    if steps not in (1, 2):
        raise UsageError("only rim p- and 2p-hooks are supported (steps 1 or 2)")
    if bead not in set(a.beads):
        raise UsageError(f"no bead in position {bead}")
    target = bead + steps * a.prime
    if target in set(a.beads):
        raise UsageError(f"position {target} is occupied; bead {bead} cannot move down")
    beads = tuple(x for x in a.beads if x != bead) + (target,)
    return Abacus(a.prime, beads)


def render(a: Abacus) -> str:
    """Deterministic ASCII grid, one row per abacus row through the last bead."""
    last_row = max(b // a.prime for b in a.beads) if a.beads else 0
    bead_set = set(a.beads)
    lines = []
    for row in range(last_row + 1):
        cells = [
            BEAD if row * a.prime + c in bead_set else SPACE for c in range(a.prime)
        ]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def core_and_weight(p: Partition, prime: int) -> tuple[Partition, int]:
    """Core and weight of p, computed on a minimal abacus."""
    a = from_partition(p, prime, max(1, len(p.parts)))
    return p_core(a), weight_of(a)


def assert_core(gamma: Partition, prime: int) -> None:
    core, weight = core_and_weight(gamma, prime)
    if weight != 0 or core != gamma:
        raise UsageError(f"{gamma} is not a {prime}-core (core {core}, weight {weight})")


def delta_legs_all_orders(nu: Partition, prime: int) -> set[tuple[int, ...]]:
    """Leg-length sequences over every order of full rim p-hook removal.

    Exposed for the weight-2 statistics and the exhaustive order
    independence checks.
    """
    start = from_partition(nu, prime, max(1, len(nu.parts)))
    results: set[tuple[int, ...]] = set()

    def walk(a: Abacus, legs: tuple[int, ...]):
        hooks = removable_rim_hooks(a, 1)
        if not hooks:
            results.add(legs)
            return
        for bead, leg in hooks:
            walk(remove_rim_hook(a, bead, 1), legs + (leg,))

    walk(start, ())
    return results


def cores_all_orders(nu: Partition, prime: int) -> set[Partition]:
    """Every core reachable by greedy rim p-hook removal in any order."""
    start = from_partition(nu, prime, max(1, len(nu.parts)))
    seen: dict[tuple[int, ...], set[Partition]] = {}

    def walk(a: Abacus) -> set[Partition]:
        key = a.beads
        if key in seen:
            return seen[key]
        hooks = removable_rim_hooks(a, 1)
        if not hooks:
            out = {to_partition(a)}
        else:
            out = set()
            for bead, _ in hooks:
                out |= walk(remove_rim_hook(a, bead, 1))
        seen[key] = out
        return out

    cores = walk(start)
    if len(cores) != 1:
        raise DiagnosticError(f"removal order changed the core of {nu}: {cores}")
    return cores
