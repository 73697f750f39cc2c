"""Independent brute-force references used to certify the fast paths.

All of these trade speed for obviousness and carry hard size guards; they
back the test suite and the verify command, never the production paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import build_hasse, enumerate_partitions
from .partitions import (
    ColumnOneShape,
    Partition,
    ShapeKind,
    dominance_leq,
    height_difference,
)

_pcounts = [1]


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence, in exact integers."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_pcounts) <= n:
        m = len(_pcounts)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            term = _pcounts[m - g1]
            if g2 <= m:
                term += _pcounts[m - g2]
            total += term if k % 2 else -term
            k += 1
        _pcounts.append(total)
    return _pcounts[n]


@dataclass(frozen=True)
class PartitionCountTable:
    max_n: int
    counts: tuple[int, ...]  # counts[n] == p(n)


def partition_count_table(max_n: int) -> PartitionCountTable:
    return PartitionCountTable(max_n, tuple(partition_count(n) for n in range(max_n + 1)))


def brute_join_irreducibles(n: int) -> frozenset[Partition]:
    """Partitions covering exactly one element, read off the Hasse diagram."""
    if n > 30:
        raise ValueError("brute irreducibles guarded to n <= 30")
    diagram = build_hasse(n)
    return frozenset(p for p in diagram.nodes if len(diagram.cover_edges[p]) == 1)


def _plateau_clauses(p: Partition) -> list[ColumnOneShape]:
    """Plateau clauses at column 1, each evaluated on its own."""
    found = []
    for k in range(2, len(p) + 1):
        if any(height_difference(p, i) != 0 for i in range(1, k)):
            continue
        d = height_difference(p, k)
        if d == 1:
            found.append(ColumnOneShape(ShapeKind.SLIPPERY_PLATEAU, k - 1))
        elif d >= 2:
            found.append(ColumnOneShape(ShapeKind.NON_SLIPPERY_PLATEAU, k - 1))
    return found


def shape_clauses(p: Partition) -> list[ColumnOneShape]:
    """Every column-1 shape clause that ``p`` satisfies, one by one.

    Exclusivity of the clauses is a tested property, so this intentionally
    does not stop at the first match.
    """
    found = []
    if height_difference(p, 1) >= 2:
        found.append(ColumnOneShape(ShapeKind.CLIFF))
    found.extend(_plateau_clauses(p))
    if len(p) >= 2 and p[0] - 1 >= p[1]:
        dec = Partition((p[0] - 1,) + p[1:])
        for shape in _plateau_clauses(dec):
            if shape.kind is ShapeKind.SLIPPERY_PLATEAU:
                found.append(ColumnOneShape(ShapeKind.SLIPPERY_STEP))
            else:
                found.append(ColumnOneShape(ShapeKind.NON_SLIPPERY_STEP))
    return found


def brute_meet(a: Partition, b: Partition) -> Partition:
    """Greatest lower bound found by scanning all partitions of the weight."""
    if a.weight != b.weight:
        raise ValueError("weight mismatch")
    if a.weight > 10:
        raise ValueError("brute meet guarded to weight <= 10")
    lower = [
        c
        for c in enumerate_partitions(a.weight)
        if dominance_leq(c, a) and dominance_leq(c, b)
    ]
    greatest = [c for c in lower if all(dominance_leq(d, c) for d in lower)]
    assert len(greatest) == 1, "dominance order must have a unique greatest lower bound"
    return greatest[0]
