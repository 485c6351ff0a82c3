"""Independent brute-force oracles used by the self-test suites.

Nothing here shares code with the implementation it checks: rim hooks
are re-derived as border strips on the Young diagram, and the minimal
even weight of a core is found by a shortest-path search over bead
configurations rather than by block enumeration.
"""

from __future__ import annotations

from functools import lru_cache

from . import abacus
from .errors import DiagnosticError
from .partitions import Partition, check_odd_modulus, enumerate_partitions


def diagram_rim_hooks(lam: Partition, hook_length: int) -> list[tuple[Partition, int]]:
    """All (result, leg) for removals of a border strip of the given size.

    A border strip is a connected skew shape containing no 2x2 block; its
    leg-length is the number of rows it meets minus one.  Everything is
    checked directly on diagram cells.
    """
    n = lam.size
    if hook_length > n:
        return []
    results = []
    for mu in enumerate_partitions(n - hook_length):
        if len(mu.parts) > len(lam.parts):
            continue
        mu_padded = mu.parts + (0,) * (len(lam.parts) - len(mu.parts))
        if any(m > l for m, l in zip(mu_padded, lam.parts)):
            continue
        cells = {
            (i, j)
            for i, (m, l) in enumerate(zip(mu_padded, lam.parts))
            for j in range(m, l)
        }
        if not cells:
            continue
        if any(
            (i, j + 1) in cells and (i + 1, j) in cells and (i + 1, j + 1) in cells
            for (i, j) in cells
        ):
            continue
        if not _connected(cells):
            continue
        leg = len({i for i, _ in cells}) - 1
        results.append((mu, leg))
    return results


def _connected(cells: set[tuple[int, int]]) -> bool:
    start = next(iter(cells))
    seen = {start}
    frontier = [start]
    while frontier:
        i, j = frontier.pop()
        for nxt in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(cells)


def is_even_direct(lam: Partition) -> bool:
    """Part-by-part parity check, deliberately not via the abacus."""
    return all(part % 2 == 0 for part in lam.parts)


@lru_cache(maxsize=None)
def minimal_even_weight(core_parts: tuple[int, ...], p: int) -> int:
    """Minimal number of downward bead steps from the core to an even config.

    A beta-set is even exactly when its sorted entries alternate parity
    starting even, i.e. bead i sits in position i + 2*e_i with e weakly
    increasing.  Minimising the hook count is minimising sum(e) subject
    to the runner of bead i being free to take any value whose count
    budget is left; the search runs over states (runner counts so far,
    e_i mod p), since the greedy step cost only depends on e_i mod p.
    The bead count grows until no even partition of the achieved size
    could need more rows.
    """
    gamma = Partition(core_parts)
    check_odd_modulus(p)
    abacus.assert_core(gamma, p)
    inv2 = (p + 1) // 2
    b = max(1, len(gamma.parts))
    while True:
        beta = abacus.beta_set(gamma, b)
        counts = [0] * p
        for pos in beta:
            counts[pos % p] += 1
        target = tuple(counts)

        # states: (counts tuple, e mod p) -> minimal accumulated sum(e_i)
        layer: dict[tuple[tuple[int, ...], int], int] = {(tuple([0] * p), 0): 0}
        for j in range(b):
            nxt: dict[tuple[tuple[int, ...], int], int] = {}
            weight_factor = b - j
            for (got, emod), cost in layer.items():
                for r in range(p):
                    if got[r] >= target[r]:
                        continue
                    delta = ((r - j - 2 * emod) * inv2) % p
                    new_got = list(got)
                    new_got[r] += 1
                    key = (tuple(new_got), (emod + delta) % p)
                    new_cost = cost + delta * weight_factor
                    if key not in nxt or nxt[key] > new_cost:
                        nxt[key] = new_cost
            layer = nxt
        finals = [c for (got, _), c in layer.items() if got == target]
        if not finals:
            raise DiagnosticError(f"no even configuration found for {gamma}")
        s_min = min(finals)
        size = 2 * s_min
        if (size - gamma.size) % p:
            raise DiagnosticError(f"even search for {gamma} hit a non-block size")
        w = (size - gamma.size) // p
        # an even partition has all parts >= 2, so at most size/2 rows;
        # once b covers that, no smaller-weight solution was missed
        if size // 2 <= b:
            return w
        b += p
