"""Block identification and the block invariants w(gamma) and E(gamma).

A block is named by (modulus, core, weight).  core_profile finds the
minimal number of p-hooks whose addition to a core gives an all-even
partition, together with the full set of such partitions, by searching
weight levels of the correct parity and filtering even members; the
parity restriction is a consequence of p being odd and is itself
checked by the debug mode and the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import abacus
from .errors import BoundExceededError, DiagnosticError, UsageError
from .partitions import (
    Partition,
    check_odd_modulus,
    dominates,
    is_even,
    size_bound,
    sort_rev_lex,
    strictly_dominates,
)


@dataclass(frozen=True)
class BlockId:
    """The block with the given core and weight; n = |core| + weight*p."""

    p: int
    core: Partition
    weight: int

    def __post_init__(self):
        check_odd_modulus(self.p)
        if self.weight < 0:
            raise UsageError("weight must be non-negative")
        abacus.assert_core(self.core, self.p)

    @property
    def n(self) -> int:
        return self.core.size + self.weight * self.p

    def __str__(self) -> str:
        return f"B({self.core},{self.weight})"

    def to_json_dict(self) -> dict:
        return {"p": self.p, "core": str(self.core), "weight": self.weight}


@dataclass(frozen=True)
class CoreProfile:
    """w(gamma) together with the even partitions reached by w(gamma) hooks."""

    core: Partition
    p: int
    w_gamma: int
    e_set: tuple[Partition, ...]

    def to_json_dict(self) -> dict:
        return {
            "core": str(self.core),
            "p": self.p,
            "w": self.w_gamma,
            "e_set": [str(q) for q in self.e_set],
        }


def block_of(lam: Partition, p: int) -> BlockId:
    core, weight = abacus.core_and_weight(lam, check_odd_modulus(p))
    return BlockId(p=p, core=core, weight=weight)


def _compositions(total: int, bins: int):
    if bins == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, bins - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def _block_members(p: int, core_parts: tuple[int, ...], weight: int) -> tuple[Partition, ...]:
    core = Partition(core_parts)
    bead_count = max(1, len(core.parts) + weight * p)
    beta = abacus.beta_set(core, bead_count)
    rows_by_runner: list[list[int]] = [[] for _ in range(p)]
    for b in beta:
        rows_by_runner[b % p].append(b // p)
    for rows in rows_by_runner:
        rows.sort()

    from .partitions import enumerate_partitions

    members = []
    partitions_of = {k: enumerate_partitions(k) for k in range(weight + 1)}
    for split in _compositions(weight, p):
        pools = [partitions_of[k] for k in split]
        for quots in product(*pools):
            beads = []
            for r in range(p):
                rows = rows_by_runner[r]
                m = len(rows)
                q = quots[r].parts
                # every runner has at least `weight` beads by the bead count
                # choice, so the quotient component always fits
                padded = q + (0,) * (m - len(q))
                beads.extend((padded[i] + (m - 1 - i)) * p + r for i in range(m))
            members.append(abacus.to_partition(abacus.Abacus(p, tuple(beads))))
    return tuple(sort_rev_lex(members))


def enumerate_block(block: BlockId, *, bound: int | None = None) -> list[Partition]:
    """All partitions with the block's core and weight, rev-lex descending."""
    limit = size_bound(bound)
    if block.n > limit:
        raise BoundExceededError(
            f"block size {block.n} exceeds the enumeration bound {limit}"
        )
    return list(_block_members(block.p, block.core.parts, block.weight))


def even_members(block: BlockId, *, bound: int | None = None) -> list[Partition]:
    return [q for q in enumerate_block(block, bound=bound) if is_even(q)]


def core_profile(
    gamma: Partition,
    p: int,
    *,
    bound: int | None = None,
    debug_all_parities: bool = False,
) -> CoreProfile:
    """Search weights w = |gamma| mod 2, +2, ... for the first even members.

    With debug_all_parities the skipped parity class is searched too and
    asserted empty.
    """
    check_odd_modulus(p)
    abacus.assert_core(gamma, p)
    limit = size_bound(bound)
    w = gamma.size % 2
    while True:
        if gamma.size + w * p > limit:
            raise BoundExceededError(
                f"w(gamma) search for {gamma} passed the size bound {limit}"
            )
        if debug_all_parities and w > 0:
            wrong = even_members(BlockId(p, gamma, w - 1), bound=bound)
            if wrong:
                raise DiagnosticError(
                    f"parity law violated: even members at weight {w - 1} of {gamma}"
                )
        evens = even_members(BlockId(p, gamma, w), bound=bound)
        if evens:
            return CoreProfile(core=gamma, p=p, w_gamma=w, e_set=tuple(evens))
        w += 2


@lru_cache(maxsize=4096)
def cached_core_profile(p: int, core_parts: tuple[int, ...]) -> CoreProfile:
    return core_profile(Partition(core_parts), p)


def maximal_member(candidates: list[Partition], context: str) -> Partition:
    """The unique dominance-maximum; loud failure otherwise."""
    if not candidates:
        raise DiagnosticError(f"{context}: no candidates")
    maxima = [
        q
        for q in candidates
        if not any(strictly_dominates(other, q) for other in candidates)
    ]
    if len(maxima) != 1 or not all(dominates(maxima[0], q) for q in candidates):
        raise DiagnosticError(f"{context}: no unique maximum among {candidates}")
    return maxima[0]


def two_runner_core(t: int, t_prime: int, u: int, u_prime: int, p: int) -> Partition:
    """The core whose abacus has a full first row, t further beads on
    runner u and t' further beads on runner u'."""
    check_odd_modulus(p)
    if not (0 <= u < u_prime < p):
        raise UsageError("runners must satisfy 0 <= u < u' < p")
    if t < 0 or t_prime < 0:
        raise UsageError("bead counts must be non-negative")
    beads = list(range(p))
    beads += [u + j * p for j in range(1, t + 1)]
    beads += [u_prime + j * p for j in range(1, t_prime + 1)]
    gamma = abacus.to_partition(abacus.Abacus(p, tuple(beads)))
    abacus.assert_core(gamma, p)
    return gamma


def two_runner_w(
    t: int, t_prime: int, u: int, u_prime: int, p: int
) -> tuple[Partition, int, Partition]:
    """Closed-form w(gamma) for two-runner cores, with an even witness.

    Case (i): u and u'-u both even -> w = t*t', witness moves each of the
    t' lower beads on runner u' down t steps.  Case (ii): u odd and
    u' = p-1 -> w = t*(t'+1), witness moves each of the t lower beads on
    runner u down t'+1 steps.  Returns (core, w, witness).
    """
    check_odd_modulus(p)
    if not (0 <= u < u_prime < p):
        raise UsageError("runners must satisfy 0 <= u < u' < p")
    if u % 2 == 0 and (u_prime - u) % 2 == 0:
        case = 1
        w = t * t_prime
    elif u % 2 == 1 and u_prime == p - 1:
        case = 2
        w = t * (t_prime + 1)
    else:
        raise UsageError(
            f"runners u={u}, u'={u_prime} fit neither closed-form case"
        )
    gamma = two_runner_core(t, t_prime, u, u_prime, p)

    beads = set(range(p))
    beads |= {u + j * p for j in range(1, t + 1)}
    beads |= {u_prime + j * p for j in range(1, t_prime + 1)}
    if case == 1:
        moving = sorted((u_prime + j * p for j in range(1, t_prime + 1)), reverse=True)
        steps = t
    else:
        moving = sorted((u + j * p for j in range(1, t + 1)), reverse=True)
        steps = t_prime + 1
    for b in moving:
        beads.remove(b)
        beads.add(b + steps * p)
    witness_part = abacus.to_partition(abacus.Abacus(p, tuple(beads)))
    return gamma, w, witness_part


def witness(n: int, p: int) -> Partition:
    """The even partition of 2n built from the staircase-with-pads family.

    With theta_k = (k+1)(2 + (p-1)k/2), pick k maximal with theta_k <= 2n,
    write 2n - theta_k = 2l and l = (k+1)s + r; the partition is the
    k+1-row staircase with steps of p-1 padded by 2(s+1) on the first r
    rows and 2s on the rest.  It always realises the minimal hook count
    of its own core.  n = 0 gives the empty partition.
    """
    check_odd_modulus(p)
    if n < 0:
        raise UsageError("n must be non-negative")
    if n == 0:
        return Partition()
    half = (p - 1) // 2

    def theta(k: int) -> int:
        return (k + 1) * (2 + half * k)

    k = 0
    while theta(k + 1) <= 2 * n:
        k += 1
    ell2 = 2 * n - theta(k)
    if ell2 % 2:
        raise DiagnosticError("theta_k parity broke; this cannot happen")
    ell = ell2 // 2
    s, r = divmod(ell, k + 1)
    if not (0 <= s <= half):
        raise DiagnosticError(f"witness decomposition out of range: s={s}")
    base = [2 + (p - 1) * j for j in range(k, -1, -1)]
    pads = [2 * (s + 1)] * r + [2 * s] * (k + 1 - r)
    return Partition(b + c for b, c in zip(base, pads))
