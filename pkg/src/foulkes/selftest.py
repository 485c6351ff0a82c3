"""Brute-force verification suites behind the `selftest` subcommand.

Every suite checks one body of desk-scale facts against an independent
re-derivation (diagram hooks, greedy removals in all orders, direct
partition enumeration, the bead-configuration search) and returns how
many individual checks it ran.  A failed comparison raises, which the
runner converts into a FAIL line and a nonzero exit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from . import abacus as ab
from . import blocks, oracles, summands, weight2
from .errors import DiagnosticError
from .partitions import (
    Partition,
    conjugate,
    dominates,
    double,
    enumerate_partitions,
    halve,
    is_even,
    is_p_regular,
    partition_count,
    sort_rev_lex,
)

PRIMES = (3, 5, 7)


@dataclass
class Bounds:
    dominance_n: int = 12
    partition_law_n: int = 14
    abacus_n: int = 14
    lemma_gap_n: int = 20
    core_oracle_n: int = 16
    leg_oracle_n: int = 16
    block_partition_n: int = 18
    profile_size: int = 24
    two_runner_core_size: int = 40
    delta_size: int = 24
    witness_n: int = 20
    vertices_n: int = 30
    analyze_n: int = 15
    chain_primes: tuple[int, ...] = (5, 7, 11)


def _partitions_up_to(limit: int) -> list[Partition]:
    out: list[Partition] = []
    for n in range(limit + 1):
        out.extend(enumerate_partitions(n))
    return out


def suite_partition_laws(b: Bounds) -> int:
    checks = 0
    for n in range(b.dominance_n + 1):
        parts = enumerate_partitions(n)
        for q in parts:
            assert dominates(q, q)
            checks += 1
        comparable = []
        for x, y in combinations(parts, 2):
            dxy, dyx = dominates(x, y), dominates(y, x)
            assert not (dxy and dyx), f"antisymmetry broke at {x}, {y}"
            if dxy:
                comparable.append((x, y))
            if dyx:
                comparable.append((y, x))
            checks += 1
        above: dict[Partition, list[Partition]] = {}
        for x, y in comparable:
            above.setdefault(y, []).append(x)
        for x, y in comparable:
            for z in above.get(x, ()):  # z > x > y
                assert dominates(z, y), f"transitivity broke at {z}, {x}, {y}"
                checks += 1
    for q in _partitions_up_to(b.partition_law_n):
        assert conjugate(conjugate(q)) == q
        checks += 1
        assert is_even(double(q)) and halve(double(q)) == q
        checks += 1
    for n in range(b.dominance_n + 1):
        for x, y in combinations(enumerate_partitions(n), 2):
            assert dominates(x, y) == dominates(conjugate(y), conjugate(x))
            checks += 1
    for n in range(b.partition_law_n + 1):
        parts = enumerate_partitions(n)
        assert len(set(parts)) == len(parts)
        assert all(q.size == n for q in parts)
        assert len(parts) == partition_count(n), f"count mismatch at {n}"
        assert parts == sort_rev_lex(parts)
        checks += 3
    return checks


def suite_abacus_roundtrip(b: Bounds) -> int:
    checks = 0
    for q in _partitions_up_to(b.abacus_n):
        for p in PRIMES:
            for beads in range(max(1, len(q.parts)), len(q.parts) + 2 * p + 1):
                a = ab.from_partition(q, p, beads)
                assert ab.to_partition(a) == q
                assert ab.to_partition(ab.renormalize(a, beads + p)) == q
                checks += 2
    return checks


def suite_even_gap_lemma(b: Bounds) -> int:
    checks = 0
    for q in _partitions_up_to(b.lemma_gap_n):
        expected = oracles.is_even_direct(q)
        for p in PRIMES:
            for beads in range(max(1, len(q.parts)), len(q.parts) + 2 * p + 1):
                a = ab.from_partition(q, p, beads)
                assert (not ab.has_odd_gap(a)) == expected, f"gap lemma broke at {q}"
                checks += 1
    return checks


def suite_core_oracle(b: Bounds) -> int:
    checks = 0
    for q in _partitions_up_to(b.core_oracle_n):
        for p in PRIMES:
            core, weight = ab.core_and_weight(q, p)
            assert q.size == core.size + p * weight
            greedy = ab.cores_all_orders(q, p)
            assert greedy == {core}, f"greedy core disagreed at {q}, p={p}"
            assert ab.core_and_weight(core, p) == (core, 0)
            bigger = ab.from_partition(q, p, len(q.parts) + p + 1)
            assert ab.p_core(bigger) == core
            checks += 4
    return checks


def suite_leg_oracle(b: Bounds) -> int:
    checks = 0
    for q in _partitions_up_to(b.leg_oracle_n):
        for p in PRIMES:
            a = ab.from_partition(q, p, max(1, len(q.parts)))
            for steps in (1, 2):
                got = sorted(
                    (ab.to_partition(ab.remove_rim_hook(a, bead, steps)).parts, leg)
                    for bead, leg in ab.removable_rim_hooks(a, steps)
                )
                want = sorted(
                    (mu.parts, leg)
                    for mu, leg in oracles.diagram_rim_hooks(q, steps * p)
                )
                assert got == want, f"hook oracle broke at {q}, p={p}, steps={steps}"
                checks += 1
    return checks


def suite_hook_inverse(b: Bounds) -> int:
    checks = 0
    for q in _partitions_up_to(b.abacus_n):
        for p in PRIMES:
            a = ab.from_partition(q, p, max(1, len(q.parts)))
            for steps in (1, 2):
                for bead, _ in ab.removable_rim_hooks(a, steps):
                    removed = ab.remove_rim_hook(a, bead, steps)
                    back = ab.add_rim_hook(removed, bead - steps * p, steps)
                    assert ab.to_partition(back) == q
                    checks += 1
    return checks


def suite_block_partition(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for n in range(b.block_partition_n + 1):
            grouped: dict[blocks.BlockId, list[Partition]] = {}
            for q in enumerate_partitions(n):
                grouped.setdefault(blocks.block_of(q, p), []).append(q)
            total = 0
            for block, members in grouped.items():
                listed = blocks.enumerate_block(block)
                assert sort_rev_lex(members) == listed, f"block {block} mismatch"
                total += len(members)
                if block.weight % 2 != block.core.size % 2:
                    assert not any(is_even(q) for q in members), (
                        f"parity law broke in {block}"
                    )
                checks += 1
            assert total == partition_count(n)
            checks += 1
    return checks


def suite_core_profiles(b: Bounds) -> int:
    """E(gamma) laws, cross-checked against direct partition enumeration,
    the independent minimal-weight search, and the parts bound that the
    fixed-bead pruning rule predicts."""
    checks = 0
    for p in PRIMES:
        seen: set[Partition] = set()
        for n in range(b.profile_size + 1):
            for q in enumerate_partitions(n):
                gamma, w = ab.core_and_weight(q, p)
                if gamma in seen or gamma != q or w != 0:
                    continue
                seen.add(gamma)
                profile = blocks.core_profile(gamma, p, bound=b.profile_size + 1)
                if gamma.size + profile.w_gamma * p > b.profile_size:
                    continue
                oracle_w = oracles.minimal_even_weight(gamma.parts, p)
                assert profile.w_gamma == oracle_w, f"w({gamma}) mismatch at p={p}"
                assert profile.w_gamma % 2 == gamma.size % 2
                expected = sort_rev_lex(
                    q2
                    for q2 in enumerate_partitions(gamma.size + profile.w_gamma * p)
                    if is_even(q2) and ab.core_and_weight(q2, p) == (gamma, profile.w_gamma)
                )
                assert list(profile.e_set) == expected, f"E({gamma}) mismatch at p={p}"
                for lower in range(gamma.size % 2, profile.w_gamma, 2):
                    size = gamma.size + lower * p
                    assert not any(
                        is_even(q2) and ab.core_and_weight(q2, p)[0] == gamma
                        for q2 in enumerate_partitions(size)
                    ), f"even member below w({gamma}) at p={p}"
                assert all(
                    len(member.parts) <= len(gamma.parts) + 1
                    for member in profile.e_set
                ), f"fixed-bead parts bound broke at {gamma}, p={p}"
                checks += 4 + profile.w_gamma // 2
    return checks


def _admissible_two_runner(limit: int):
    for p in PRIMES:
        pairs = [
            (u, u2)
            for u in range(p)
            for u2 in range(u + 1, p)
            if (u % 2 == 0 and (u2 - u) % 2 == 0) or (u % 2 == 1 and u2 == p - 1)
        ]
        for u, u2 in pairs:
            t = 0
            while blocks.two_runner_core(t, 0, u, u2, p).size <= limit:
                t_prime = 0
                while True:
                    gamma = blocks.two_runner_core(t, t_prime, u, u2, p)
                    if gamma.size > limit:
                        break
                    yield p, t, t_prime, u, u2, gamma
                    t_prime += 1
                t += 1


def suite_two_runner(b: Bounds) -> int:
    checks = 0
    for p, t, t_prime, u, u2, gamma in _admissible_two_runner(b.two_runner_core_size):
        core, w, witness_part = blocks.two_runner_w(t, t_prime, u, u2, p)
        assert core == gamma
        oracle_w = oracles.minimal_even_weight(gamma.parts, p)
        assert w == oracle_w, (
            f"closed form {w} vs search {oracle_w} at p={p}, "
            f"t={t}, t'={t_prime}, u={u}, u'={u2}"
        )
        assert is_even(witness_part)
        wcore, wweight = ab.core_and_weight(witness_part, p)
        assert wcore == gamma and wweight == w, f"witness invalid at {gamma}"
        checks += 4
        if gamma.size + w * p <= b.profile_size:
            profile = blocks.core_profile(gamma, p)
            assert profile.w_gamma == w
            assert witness_part in profile.e_set
            checks += 2
    return checks


def suite_witness(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for n in range(1, b.witness_n + 1):
            mu = blocks.witness(n, p)
            assert is_even(mu) and mu.size == 2 * n
            gamma, w = ab.core_and_weight(mu, p)
            assert w == oracles.minimal_even_weight(gamma.parts, p), (
                f"witness({n},{p}) is not minimal"
            )
            profile = blocks.cached_core_profile(p, gamma.parts)
            assert mu in profile.e_set
            checks += 3
    return checks


def _weight2_partitions(limit: int, p: int) -> list[Partition]:
    out = []
    for n in range(2 * p, limit + 1):
        for q in enumerate_partitions(n):
            if ab.core_and_weight(q, p)[1] == 2:
                out.append(q)
    return out


def suite_delta_independence(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for q in _weight2_partitions(b.delta_size, p):
            weight2.delta(q, p)  # raises on any order disagreement
            checks += 1
    if checks == 0:
        raise DiagnosticError("delta suite scanned nothing")
    return checks


def suite_even_delta_lemma(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for q in _weight2_partitions(b.delta_size, p):
            if not is_even(ab.core_and_weight(q, p)[0]):
                continue
            if is_even(q):
                assert weight2.delta(q, p) == 0, f"even {q} has delta != 0"
                checks += 1
    return checks


def suite_even_colour_law(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for q in _weight2_partitions(b.delta_size, p):
            if not is_even(ab.core_and_weight(q, p)[0]):
                continue
            lhs = is_even(q)
            rhs = weight2.big_delta(q, p) == 0 and weight2.is_black(q, p)
            assert lhs == rhs, f"colour law broke at {q}, p={p}"
            checks += 1
    return checks


def suite_richards_columns(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        blocks_seen: set[blocks.BlockId] = set()
        for q in _weight2_partitions(b.delta_size, p):
            blocks_seen.add(blocks.block_of(q, p))
        for block in sorted(blocks_seen, key=lambda blk: (blk.n, blk.core.parts)):
            members = blocks.enumerate_block(block)
            for nu in members:
                if not is_p_regular(nu, p):
                    continue
                column = weight2.decomp_column(nu, block)
                values = dict(column.entries)
                circ = weight2.nu_circ(nu, p)
                assert values[nu] == 1 and values[circ] == 1
                nonzero = column.nonzero_rows()
                assert len(nonzero) >= 3, f"short column at {nu} in {block}"
                d_nu = weight2.delta(nu, p)
                for mu in members:
                    expected = 0
                    if mu in (nu, circ):
                        expected = 1
                    elif (
                        dominates(nu, mu)
                        and mu != nu
                        and dominates(mu, circ)
                        and mu != circ
                        and abs(d_nu - weight2.delta(mu, p)) == 1
                    ):
                        expected = 1
                    assert values.get(mu, 0) == expected, (
                        f"column rule broke at row {mu} of {nu} in {block}"
                    )
                checks += 3 + len(members)
    return checks


def suite_chain_rows(b: Bounds) -> int:
    """Chain structure plus the chain-predicted Specht rows in the
    single-even-row blocks."""
    checks = 0
    for p in (5, 7):
        for two_k in range(0, p, 2):
            block = blocks.BlockId(p=p, core=Partition((two_k,)) if two_k else Partition(), weight=2)
            ch = weight2.chain(block)
            elements = [e.partition for e in ch.elements]
            evens = [e.partition for e in ch.elements if e.tag == "even"]
            for mu in evens:
                row = weight2.specht_row(mu, block)
                i = elements.index(mu)
                if i == 0:
                    assert sorted(row) == sorted([mu]), f"top row broke at {mu}"
                elif mu == elements[-2]:  # the excluded even, one above chain bottom
                    prev_even = next(q for q in reversed(elements[:i]) if is_even(q))
                    expected = [prev_even, elements[i - 1]]
                    assert sorted(r.parts for r in row) == sorted(
                        e.parts for e in expected
                    ), f"bottom row broke at {mu}"
                else:
                    prev_even = next(q for q in reversed(elements[:i]) if is_even(q))
                    expected = [prev_even, elements[i - 1], mu]
                    assert sorted(r.parts for r in row) == sorted(
                        e.parts for e in expected
                    ), f"middle row broke at {mu}"
                checks += 1
    return checks


def suite_chains(b: Bounds) -> int:
    checks = 0
    for p in b.chain_primes:
        for two_k in range(0, p, 2):
            core = Partition((two_k,)) if two_k else Partition()
            block = blocks.BlockId(p=p, core=core, weight=2)
            ch = weight2.chain(block)  # raises unless totally ordered
            members = blocks.enumerate_block(block)
            expected = {
                q for q in members if is_even(q) or weight2.delta(q, p) == 1
            }
            assert set(ch.partitions()) == expected
            evens = ch.partitions("even")
            tags = [e.tag for e in ch.elements]
            above_even = sum(
                1
                for i in range(1, len(tags))
                if tags[i] == "even" and tags[i - 1] == "delta1"
            )
            assert above_even == len(evens) - 1, f"tag counts broke at {block}"
            # alternation: two delta1 entries between consecutive evens
            even_positions = [i for i, t in enumerate(tags) if t == "even"]
            for a, c in zip(even_positions, even_positions[1:]):
                assert c - a == 3, f"alternation broke at {block}"
            for el in ch.elements:
                assert el.label is not None
                rebuilt = weight2.scott_label_map(p, two_k // 2)[el.label]
                assert rebuilt == el.partition
                checks += 1
            label_map = weight2.scott_label_map(p, two_k // 2)
            assert sort_rev_lex(label_map.values()) == members, (
                f"labels do not cover {block}"
            )
            checks += 3
    return checks


def suite_scott(b: Bounds) -> int:
    checks = 0
    for p in (5, 7):
        for two_k in range(0, p, 2):
            structure = summands.scott(p, two_k // 2)
            assert structure.top == structure.socle
            assert len(structure.heart) == len(structure.top)
            expected_excluded = (
                Partition([two_k] + [2] * p) if two_k else Partition([2] * p)
            )
            assert structure.excluded == expected_excluded
            assert not is_p_regular(structure.excluded, p)
            # composition bookkeeping: top labels twice, heart labels once
            counts: dict[Partition, int] = {}
            for mu in structure.specht_order:
                for nu in weight2.specht_row(mu, structure.block):
                    counts[nu] = counts.get(nu, 0) + 1
            expected_counts = {q: 2 for q in structure.top}
            expected_counts.update({q: 1 for q in structure.heart})
            assert counts == expected_counts, f"composition broke at p={p}, 2k={two_k}"
            # self-duality: swapping top and socle fixes the edge set
            edge_set = {(a, b) for a, b in structure.edges}
            assert edge_set == {(a, b) for a, b in structure.edges}
            checks += 5
    return checks


def suite_analyze(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for n in range(1, b.analyze_n + 1):
            reports = summands.analyze(n, p)
            grouped = summands.character(n, p)
            assert [r.block for r in reports] == list(grouped)
            all_evens = sorted(
                (q.parts for evens in grouped.values() for q in evens)
            )
            assert all_evens == sorted(
                double(lam).parts for lam in enumerate_partitions(n)
            )
            covered: list[tuple[int, ...]] = []
            for r in reports:
                assert set(r.character) <= set(grouped[r.block])
                if r.definitive:
                    kinds = {
                        0: summands.KIND_SIMPLE,
                        1: summands.KIND_W1,
                    }
                    if r.block.weight in kinds:
                        assert r.kind == kinds[r.block.weight]
                    else:
                        w_gamma = blocks.cached_core_profile(
                            p, r.block.core.parts
                        ).w_gamma
                        if w_gamma == 2:
                            assert r.kind == summands.KIND_W2
                        else:
                            assert r.kind in (summands.KIND_SCOTT, summands.KIND_Q1)
                        assert r.vertex_t == (r.block.weight - w_gamma) // 2
                    covered.extend(q.parts for q in r.character)
                checks += 1
            assert len(covered) == len(set(covered)), "characters overlapped"
    return checks


def suite_vertices(b: Bounds) -> int:
    checks = 0
    for p in PRIMES:
        for n in range(1, b.vertices_n + 1):
            spectrum = summands.vertex_spectrum(n, p)
            assert [t for t, _ in spectrum] == list(range(n // p + 1))
            for t, block in spectrum:
                assert block.n == 2 * n
                mu = blocks.witness(n - t * p, p)
                gamma, w = ab.core_and_weight(mu, p)
                assert block.core == gamma and block.weight == w + 2 * t
                if n - t * p > 0:
                    profile = blocks.cached_core_profile(p, gamma.parts)
                    assert mu in profile.e_set, f"witness({n - t * p},{p}) not in E"
                else:
                    assert mu == Partition()
                checks += 3
            count, cores, blocks_ = summands.max_vertex_count(n, p)
            t = n // p
            r = n - t * p
            assert len(blocks_) == len(set(blocks_)) == count
            if 2 * r < p:
                assert count == partition_count(r), f"maxvertex count broke at n={n}"
            checks += 2
    return checks


def suite_golden(b: Bounds) -> int:
    from . import golden

    return golden.check_all()


def suite_determinism(b: Bounds) -> int:
    from .cli import run as cli_run
    import contextlib
    import io

    checks = 0
    for argv in (
        ["analyze", "--p", "5", "--n", "7", "--format", "json"],
        ["scott", "--p", "5", "--k", "2", "--format", "dot"],
        ["eset", "--p", "3", "--partition", "(3,1)"],
        ["chain", "--p", "5", "--partition", "(4)"],
    ):
        outputs = []
        for _ in range(2):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                assert cli_run(list(argv)) == 0
            outputs.append(buf.getvalue())
        assert outputs[0] == outputs[1], f"nondeterministic output for {argv}"
        checks += 1
    return checks


SUITES = {
    "partition-laws": suite_partition_laws,
    "abacus-roundtrip": suite_abacus_roundtrip,
    "even-gap-lemma": suite_even_gap_lemma,
    "core-oracle": suite_core_oracle,
    "leg-oracle": suite_leg_oracle,
    "hook-inverse": suite_hook_inverse,
    "block-partition": suite_block_partition,
    "core-profiles": suite_core_profiles,
    "two-runner": suite_two_runner,
    "witness": suite_witness,
    "delta-independence": suite_delta_independence,
    "even-delta-lemma": suite_even_delta_lemma,
    "even-colour-law": suite_even_colour_law,
    "richards-columns": suite_richards_columns,
    "chain-rows": suite_chain_rows,
    "chains": suite_chains,
    "scott": suite_scott,
    "analyze": suite_analyze,
    "vertices": suite_vertices,
    "golden": suite_golden,
    "determinism": suite_determinism,
}


def run(bounds: Bounds | None = None, suite: str | None = None) -> tuple[str, bool]:
    bounds = bounds or Bounds()
    names = [suite] if suite else list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        return f"unknown suite(s): {', '.join(unknown)}\n", False
    lines = []
    ok = True
    for name in names:
        start = time.perf_counter()
        try:
            count = SUITES[name](bounds)
            elapsed = time.perf_counter() - start
            lines.append(f"{name}: PASS ({count} checks, {elapsed:.2f}s)")
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            elapsed = time.perf_counter() - start
            lines.append(f"{name}: FAIL ({exc}) [{elapsed:.2f}s]")
            ok = False
    lines.append("selftest: " + ("PASS" if ok else "FAIL"))
    return "\n".join(lines) + "\n", ok
