"""Join-irreducible partitions: the four parameterized shape classes, the
designated-irreducible-son map, the two exceptional families, the layered
construction of all join-irreducibles of one weight from the previous
weight, and the matching counting formulas."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .partitions import (
    ColumnOneShape,
    Partition,
    ShapeKind,
    _raw,
    classify_at_column_one,
    conjugate,
    down_arrow,
)


class LayerOverlapError(RuntimeError):
    """The pieces of a constructed layer were not pairwise disjoint.

    The construction guarantees disjointness, so an overlap always means an
    implementation bug rather than bad input.
    """


@dataclass(frozen=True)
class IrreducibleType:
    """One of the four shapes a join-irreducible partition can have.

    A: k repeated m times                       (k >= 2)
    B: k an m times, then k-1 an l times        (k >= 2)
    C: k an m times, then 1 an l times          (k >= 3)
    D: k+2 an m times, k+1 an l times, 1 an s times  (k >= 2)
    """

    variant: str
    k: int
    m: int
    l: int = 0
    s: int = 0

    def __post_init__(self) -> None:
        ok = self.m >= 1 and (
            (self.variant == "A" and self.k >= 2 and not self.l and not self.s)
            or (self.variant == "B" and self.k >= 2 and self.l >= 1 and not self.s)
            or (self.variant == "C" and self.k >= 3 and self.l >= 1 and not self.s)
            or (self.variant == "D" and self.k >= 2 and self.l >= 1 and self.s >= 1)
        )
        if not ok:
            raise ValueError(f"invalid parameters for type {self.variant}")

    def partition(self) -> Partition:
        """Rebuild the partition these parameters describe."""
        if self.variant == "A":
            parts = (self.k,) * self.m
        elif self.variant == "B":
            parts = (self.k,) * self.m + (self.k - 1,) * self.l
        elif self.variant == "C":
            parts = (self.k,) * self.m + (1,) * self.l
        else:
            parts = (self.k + 2,) * self.m + (self.k + 1,) * self.l + (1,) * self.s
        return _raw(parts)


def _runs(p: Partition) -> list[tuple[int, int]]:
    out = []
    value = p[0]
    count = 0
    for v in p:
        if v == value:
            count += 1
        else:
            out.append((value, count))
            value, count = v, 1
    out.append((value, count))
    return out


def classify_irreducible(p: Partition) -> Optional[IrreducibleType]:
    """Match ``p`` against the four irreducible shapes, or None.

    Matching goes through the run-length form and the result is checked by
    reconstruction, so look-alikes with the wrong parameter ranges fall
    through to None.
    """
    runs = _runs(p)
    typ = None
    if len(runs) == 1:
        (v, c), = runs
        if v >= 2:
            typ = IrreducibleType("A", k=v, m=c)
    elif len(runs) == 2:
        (v1, c1), (v2, c2) = runs
        if v2 == v1 - 1:
            typ = IrreducibleType("B", k=v1, m=c1, l=c2)
        elif v2 == 1 and v1 >= 3:
            typ = IrreducibleType("C", k=v1, m=c1, l=c2)
    elif len(runs) == 3:
        (v1, c1), (v2, c2), (v3, c3) = runs
        if v1 >= 4 and v2 == v1 - 1 and v3 == 1:
            typ = IrreducibleType("D", k=v1 - 2, m=c1, l=c2, s=c3)
    if typ is not None and typ.partition() != p:
        raise AssertionError(f"reconstruction mismatch for {p!r}")
    return typ


def irreducible_son(p: Partition) -> Partition:
    """The designated join-irreducible son of a join-irreducible ``p``.

    Cliffs and non-slippery plateaus grow their first column; steps add the
    grain at column 2; a slippery plateau of length l adds it at column
    l+2.  Of the two irreducible sons of (2,1,...,1) this picks the right
    one, (2,2,1,...,1).
    """
    if classify_irreducible(p) is None:
        raise ValueError(f"{p!r} is not join-irreducible")
    shape = classify_at_column_one(p)
    return _son_by_shape(p, shape)


def _son_by_shape(p: Partition, shape: ColumnOneShape) -> Partition:
    if shape.kind in (ShapeKind.CLIFF, ShapeKind.NON_SLIPPERY_PLATEAU):
        column = 1
    elif shape.kind in (ShapeKind.SLIPPERY_STEP, ShapeKind.NON_SLIPPERY_STEP):
        column = 2
    elif shape.kind is ShapeKind.SLIPPERY_PLATEAU:
        column = shape.length + 2
    else:
        raise ValueError(f"{p!r} has no designated son")
    result = down_arrow(p, column)
    assert result is not None
    return result


def exceptional_sets(target_weight: int) -> tuple[frozenset[Partition], frozenset[Partition]]:
    """The irreducibles of ``target_weight`` that no irreducible fathers.

    The first set is the lone staircase (2,1,...,1); the second holds every
    (3,...,3,1,...,1) with at least one 3 and one 1.
    """
    if target_weight < 4:
        raise ValueError("target weight must be >= 4")
    e1 = frozenset({_raw((2,) + (1,) * (target_weight - 2))})
    e2 = frozenset(
        _raw((3,) * m + (1,) * (target_weight - 3 * m))
        for m in range(1, (target_weight - 1) // 3 + 1)
    )
    return e1, e2


@dataclass(frozen=True)
class IrreducibleLayer:
    """All join-irreducible partitions of one weight, bucketed by their
    column-1 shape so the next layer can be generated bucket by bucket."""

    weight: int
    members: frozenset[Partition]
    buckets: Mapping[ColumnOneShape, frozenset[Partition]]

    @classmethod
    def from_members(cls, weight: int, members) -> "IrreducibleLayer":
        members = frozenset(members)
        grouped: dict[ColumnOneShape, set[Partition]] = {}
        for p in members:
            shape = classify_at_column_one(p)
            if shape.kind is ShapeKind.NONE:
                raise ValueError(f"unshaped member {p!r} cannot be irreducible")
            grouped.setdefault(shape, set()).add(p)
        buckets = {shape: frozenset(ps) for shape, ps in grouped.items()}
        return cls(weight, members, buckets)


_SEED_LAYERS = {
    1: (),
    2: ((2,),),
    3: ((3,), (2, 1)),
}


def next_layer(layer: IrreducibleLayer) -> IrreducibleLayer:
    """Join-irreducibles one weight up: the designated son of every member
    plus the two exceptional families, as a disjoint union."""
    n = layer.weight
    if n < 3:
        raise ValueError("layer construction starts at weight 3")
    pieces = []
    for shape in sorted(layer.buckets, key=lambda s: (s.kind.value, s.length or 0)):
        bucket = layer.buckets[shape]
        pieces.append({_son_by_shape(p, shape) for p in bucket})
    e1, e2 = exceptional_sets(n + 1)
    pieces.append(set(e1))
    pieces.append(set(e2))
    total: set[Partition] = set()
    count = 0
    for piece in pieces:
        count += len(piece)
        total |= piece
    if len(total) != count:
        raise LayerOverlapError(
            f"layer pieces for weight {n + 1} overlap ({count - len(total)} collisions)"
        )
    return IrreducibleLayer.from_members(n + 1, total)


def join_irreducibles(n: int) -> IrreducibleLayer:
    """All join-irreducible partitions of ``n``, built layer by layer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 3:
        return IrreducibleLayer.from_members(n, (_raw(p) for p in _SEED_LAYERS[n]))
    layer = IrreducibleLayer.from_members(3, (_raw(p) for p in _SEED_LAYERS[3]))
    for _ in range(3, n):
        layer = next_layer(layer)
    return layer


def meet_irreducibles(n: int) -> frozenset[Partition]:
    """All meet-irreducible partitions of ``n``: the conjugates of the
    join-irreducibles, by the conjugation antiautomorphism."""
    return frozenset(conjugate(p) for p in join_irreducibles(n).members)


def count_recursive(n: int) -> int:
    """Number of join-irreducibles of weight ``n`` by the layer recursion:
    each step adds floor(k/3) + 1 new members."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for k in range(1, n):
        total += k // 3 + 1
    return total


def count_closed(n_plus_1: int) -> int:
    """Closed form for the number of join-irreducibles of ``n_plus_1``,
    evaluated in exact integer arithmetic."""
    if n_plus_1 < 1:
        raise ValueError("weight must be >= 1")
    n = n_plus_1 - 1
    q = n // 3
    return n * (q + 1) - q * (3 * q + 1) // 2
