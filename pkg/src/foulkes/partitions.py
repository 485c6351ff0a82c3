"""Partition arithmetic: validity, dominance, conjugation, parity, doubling,
parsing and enumeration.

Partitions are immutable values with structural equality.  Trailing zeros
are never stored, so two partitions are equal exactly when their part
tuples are equal.  The text syntax ``(4,2^5)`` (exponents allowed on
input, produced on output for multiplicities of four or more) is the one
used by the CLI, the JSON encodings and the golden files.
"""

from __future__ import annotations

import os
import re
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import BoundExceededError, UsageError

DEFAULT_SIZE_BOUND = 60
_BOUND_ENV = "FOULKES_BOUND"


def size_bound(explicit: int | None = None) -> int:
    """Enumeration bound: explicit argument, else FOULKES_BOUND, else 60."""
    if explicit is not None:
        return explicit
    env = os.environ.get(_BOUND_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"{_BOUND_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_SIZE_BOUND


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts", "size")

    parts: tuple[int, ...]
    size: int

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = []
        for x in parts:
            x = int(x)
            if x == 0:
                continue
            if x < 0:
                raise UsageError(f"partition parts must be positive, got {x}")
            cleaned.append(x)
        for a, b in zip(cleaned, cleaned[1:]):
            if a < b:
                raise UsageError(f"parts must be weakly decreasing, got {tuple(cleaned)}")
        object.__setattr__(self, "parts", tuple(cleaned))
        object.__setattr__(self, "size", sum(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse the ``(4,2^5)`` text syntax; ``()`` is the empty partition."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise UsageError(f"partition must be parenthesised, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Partition()
    parts: list[int] = []
    for token in body.split(","):
        token = token.strip()
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
        if m is None:
            raise UsageError(f"bad partition token {token!r} in {text!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        parts.extend([value] * mult)
    return Partition(parts)


def format_partition(p: Partition) -> str:
    """Canonical echo form; runs of length >= 4 collapse to ``v^m``."""
    if not p.parts:
        return "()"
    pieces = []
    i = 0
    parts = p.parts
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        mult = j - i
        if mult >= 4:
            pieces.append(f"{parts[i]}^{mult}")
        else:
            pieces.extend([str(parts[i])] * mult)
        i = j
    return "(" + ",".join(pieces) + ")"


def dominates(lhs: Partition, rhs: Partition) -> bool:
    """Dominance order: every prefix sum of lhs is >= that of rhs.

    Only partitions of equal size are comparable.
    """
    if lhs.size != rhs.size:
        raise UsageError(
            f"dominance compares partitions of equal size: {lhs} vs {rhs}"
        )
    total_l = 0
    total_r = 0
    for i in range(max(len(lhs), len(rhs))):
        total_l += lhs.parts[i] if i < len(lhs) else 0
        total_r += rhs.parts[i] if i < len(rhs) else 0
        if total_l < total_r:
            return False
    return True


def strictly_dominates(lhs: Partition, rhs: Partition) -> bool:
    return lhs != rhs and dominates(lhs, rhs)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p.parts:
        return Partition()
    cols = [0] * p.parts[0]
    for part in p.parts:
        for j in range(part):
            cols[j] += 1
    return Partition(cols)


def is_even(p: Partition) -> bool:
    """True when every part is even (the shapes 2*lambda)."""
    return all(part % 2 == 0 for part in p.parts)


def double(p: Partition) -> Partition:
    return Partition(2 * part for part in p.parts)


def halve(p: Partition) -> Partition:
    """Inverse of double; defined only for even partitions."""
    if not is_even(p):
        raise UsageError(f"cannot halve the non-even partition {p}")
    return Partition(part // 2 for part in p.parts)


def check_odd_modulus(p: int) -> int:
    """Abacus layers accept any odd modulus >= 3."""
    p = int(p)
    if p < 3 or p % 2 == 0:
        raise UsageError(f"modulus must be odd and >= 3, got {p}")
    return p


def is_p_regular(p: Partition, prime: int) -> bool:
    """No part value repeated `prime` or more times."""
    check_odd_modulus(prime)
    run = 0
    prev = None
    for part in p.parts:
        run = run + 1 if part == prev else 1
        if run >= prime:
            return False
        prev = part
    return True


def enumerate_partitions(n: int, *, bound: int | None = None) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise UsageError(f"cannot partition {n}")
    limit = size_bound(bound)
    if n > limit:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {limit}")
    return [Partition(parts) for parts in _partition_tuples(n, n)]


@lru_cache(maxsize=None)
def _partition_tuples(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partition_count(n: int) -> int:
    """Number of partitions of n via the bounded-part recurrence.

    Independent of enumerate_partitions; used as its oracle.
    """
    return _count_bounded(n, n)


@lru_cache(maxsize=None)
def _count_bounded(n: int, maxpart: int) -> int:
    if n == 0:
        return 1
    if maxpart == 0:
        return 0
    total = 0
    for first in range(min(n, maxpart), 0, -1):
        total += _count_bounded(n - first, first)
    return total


def sort_rev_lex(partitions: Iterable[Partition], *, descending: bool = True) -> list[Partition]:
    """Reverse-lexicographic sort on part tuples (dominance-compatible)."""
    return sorted(partitions, key=lambda q: q.parts, reverse=descending)
