"""Segre characteristics: multisets of partitions, one group per eigenvalue.

A Segre characteristic of weight n records the Jordan block sizes of an
n x n matrix grouped by eigenvalue.  Two matrices are similar exactly when
their characteristics agree, so enumerating characteristics enumerates
similarity classes.
"""

import itertools
import math
from collections.abc import Iterable
from functools import lru_cache

from .partitions import Partition, enumerate_partitions, partition_count


def _group_key(g: Partition) -> tuple:
    # descending weight, ties broken lexicographically descending on parts
    return (-g.weight, tuple(-p for p in g.parts))


class SegreCharacteristic:
    """An ordered list of non-empty partitions (one "group" per eigenvalue).

    Group order is preserved as given, since it can carry meaning (which
    eigenvalue owns which group).  Equality and hashing ignore it: two
    characteristics are equal when their canonical forms coincide.  Use
    canonical() to normalize the order itself.
    """

    __slots__ = ("_groups", "_canonical_parts")

    def __init__(self, groups: Iterable):
        gs = tuple(g if isinstance(g, Partition) else Partition(g) for g in groups)
        if not gs:
            raise ValueError("a Segre characteristic needs at least one group")
        for g in gs:
            if not g:
                raise ValueError("groups must be non-empty partitions")
        self._groups = gs
        self._canonical_parts = tuple(
            g.parts for g in sorted(gs, key=_group_key)
        )

    @property
    def groups(self) -> tuple[Partition, ...]:
        return self._groups

    @property
    def total_weight(self) -> int:
        return sum(g.weight for g in self._groups)

    def canonical(self) -> "SegreCharacteristic":
        """Copy with groups sorted: descending weight, then lex-descending parts."""
        return SegreCharacteristic(sorted(self._groups, key=_group_key))

    @property
    def is_canonical(self) -> bool:
        return tuple(g.parts for g in self._groups) == self._canonical_parts

    def flattened(self) -> Partition:
        """All block sizes pooled into one partition, eigenvalues forgotten."""
        return Partition(p for g in self._groups for p in g.parts)

    def __len__(self) -> int:
        return len(self._groups)

    def __iter__(self):
        return iter(self._groups)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SegreCharacteristic):
            return NotImplemented
        return self._canonical_parts == other._canonical_parts

    def __hash__(self) -> int:
        return hash(self._canonical_parts)

    def __str__(self) -> str:
        return format_segre(self)

    def __repr__(self) -> str:
        return f"SegreCharacteristic({[list(g.parts) for g in self._groups]!r})"


def format_segre(s: SegreCharacteristic) -> str:
    """Render as text, every group parenthesized: "[(2,1),(3),(1),(2,1)]"."""
    return "[" + ",".join(
        "(" + ",".join(map(str, g.parts)) + ")" for g in s.groups
    ) + "]"


class SegreParseError(ValueError):
    """Malformed Segre characteristic text; .position is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_segre(text: str) -> SegreCharacteristic:
    """Parse "[(2,1),(3),(1),(2,1)]".

    Grammar: '[' group (',' group)* ']' where a group is either a
    parenthesized comma-separated list of positive integers or a bare
    integer (shorthand for a singleton group).  Whitespace between tokens
    is ignored.  Group order is preserved.
    """
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise SegreParseError(f"expected {ch!r}", pos)
        pos += 1

    def parse_int() -> int:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise SegreParseError("expected an integer", start)
        value = int(text[start:pos])
        if value < 1:
            raise SegreParseError("parts must be >= 1", start)
        return value

    def parse_group() -> Partition:
        nonlocal pos
        skip_ws()
        if pos < n and text[pos] == "(":
            pos += 1
            parts = [parse_int()]
            skip_ws()
            while pos < n and text[pos] == ",":
                pos += 1
                parts.append(parse_int())
                skip_ws()
            expect(")")
            return Partition(parts)
        return Partition([parse_int()])

    expect("[")
    groups = [parse_group()]
    skip_ws()
    while pos < n and text[pos] == ",":
        pos += 1
        groups.append(parse_group())
        skip_ws()
    expect("]")
    skip_ws()
    if pos != n:
        raise SegreParseError("trailing characters", pos)
    return SegreCharacteristic(groups)


def multipartitions(outer: Partition) -> list[SegreCharacteristic]:
    """All ways to refine each part of `outer` into a partition of itself.

    Returns one characteristic per tuple in the Cartesian product of the
    per-part partition lists, groups in `outer` order, duplicates (up to
    group reordering) NOT removed.  Length is the product of p(a) over the
    parts a of outer.
    """
    if not isinstance(outer, Partition):
        outer = Partition(outer)
    if not outer:
        raise ValueError("outer partition must be non-empty")
    choices = [enumerate_partitions(a) for a in outer.parts]
    return [SegreCharacteristic(combo) for combo in itertools.product(*choices)]


def _enumeration_key(s: SegreCharacteristic) -> tuple:
    # primary: flattened block partition, largest-first order;
    # secondary: the canonical group sequence itself
    flat = s.flattened().parts
    return (tuple(-p for p in flat),
            tuple(_group_key(g) for g in s.canonical().groups))


def enumerate_segre(n: int) -> list[SegreCharacteristic]:
    """All distinct Segre characteristics of weight n, canonical forms only.

    Order is deterministic: characteristics sharing a flattened block
    partition are contiguous (those partitions largest-first), and within
    such a run the canonical group sequences are compared directly.  The
    length is always count_segre_gf(n).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    distinct: dict[tuple, SegreCharacteristic] = {}
    for outer in enumerate_partitions(n):
        for s in multipartitions(outer):
            c = s.canonical()
            distinct.setdefault(c._canonical_parts, c)
    return sorted(distinct.values(), key=_enumeration_key)


def count_segre_gf(n: int) -> int:
    """Count characteristics of weight n by generating function.

    Extracts the x^n coefficient of prod_{k>=1} (1 - x^k)^(-p(k)) using
    truncated integer polynomial products; the k-th factor expands to
    sum_j C(p(k)+j-1, j) x^(kj).  Exact for any n.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be >= 0, got {n!r}")
    if n == 0:
        return 1
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for k in range(1, n + 1):
        pk = partition_count(k)
        factor = [(j * k, math.comb(pk + j - 1, j)) for j in range(1, n // k + 1)]
        new = coeffs[:]
        for i in range(n + 1):
            a = coeffs[i]
            if not a:
                continue
            for off, c in factor:
                if i + off > n:
                    break
                new[i + off] += a * c
        coeffs = new
    return coeffs[n]


@lru_cache(maxsize=None)
def _sum_over_partitions(remaining: int, max_part: int) -> int:
    # Sum over partitions of `remaining` with parts <= max_part of the
    # product, over distinct part values v used t times, of the number of
    # multisets of t partitions of v, C(p(v)+t-1, t).
    if remaining == 0:
        return 1
    total = 0
    for v in range(min(remaining, max_part), 0, -1):
        pv = partition_count(v)
        for t in range(1, remaining // v + 1):
            total += math.comb(pv + t - 1, t) * _sum_over_partitions(
                remaining - t * v, v - 1)
    return total


def count_segre_sum(n: int) -> int:
    """Count characteristics of weight n by direct summation over partitions.

    For each partition of n read as the multiset of group weights, the
    number of characteristics realizing it is the product over distinct
    weights v (used t times) of C(p(v)+t-1, t): a multiset of t partitions
    of v per repeated weight.  No polynomial arithmetic is involved, so
    this is an independent check of count_segre_gf.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be >= 0, got {n!r}")
    return _sum_over_partitions(n, n)
