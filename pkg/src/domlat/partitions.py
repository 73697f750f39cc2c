"""Integer partitions as grain columns: canonical values, conjugation,
dominance comparison, the local shape at column 1, grain-move transitions,
covers, and the son/father maps between consecutive weights.

A partition is stored as the weakly decreasing tuple of its positive parts
(grains per column, left to right).  All formulas that index past the stored
length treat the missing columns as zero, so the height difference at the
last stored column equals that column's height.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The constructor validates and canonicalizes its input: trailing zeros
    are stripped, anything else that is not weakly decreasing and positive
    is rejected.  Instances compare and sort lexicographically like plain
    tuples; dominance comparisons go through :func:`dominance_leq`.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> "Partition":
        parts = tuple(values)
        for i, v in enumerate(parts):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"partition parts must be integers, got {v!r}")
            if v < 0:
                raise ValueError(f"partition parts must be non-negative, got {v}")
            if i and parts[i - 1] < v:
                raise ValueError(
                    f"parts must be weakly decreasing, got {parts[i - 1]} < {v}"
                )
        k = len(parts)
        while k and parts[k - 1] == 0:
            k -= 1
        if k == 0:
            raise ValueError("partition needs at least one positive part")
        return tuple.__new__(cls, parts[:k])

    @property
    def weight(self) -> int:
        """Sum of all parts (the integer being partitioned)."""
        return sum(self)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


def _raw(parts: tuple) -> Partition:
    # Unchecked fast path for internal callers that construct canonical
    # tuples by design (layer recursion, grain moves).
    return tuple.__new__(Partition, parts)


def make_partition(values: Iterable[int]) -> Partition:
    """Build a canonical partition, rejecting invalid input."""
    return Partition(values)


def parse_partition(text: str) -> Partition:
    """Parse the ``a1,a2,...,ak`` form, with optional surrounding parentheses."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError(f"cannot parse partition from {text!r}")
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return Partition(parts)


def format_partition(p: Partition) -> str:
    """Serialize as comma-separated decreasing integers without spaces."""
    return str(p)


def conjugate(p: Partition) -> Partition:
    """Transpose the Ferrers diagram (columns become rows)."""
    # conj[i] = number of parts >= i+1; walking the parts once suffices
    # because they are sorted.
    out = [0] * p[0]
    for v in p:
        for i in range(v):
            out[i] += 1
    return _raw(tuple(out))


def height_difference(p: Partition, j: int) -> int:
    """Height drop between column ``j`` and column ``j+1`` (1-indexed).

    Columns past the stored length count as zero, so at the last stored
    column the drop equals the column height itself.
    """
    if not 1 <= j <= len(p):
        raise ValueError(f"column {j} out of range for {p!r}")
    nxt = p[j] if j < len(p) else 0
    return p[j - 1] - nxt


class ShapeKind(enum.Enum):
    CLIFF = "cliff"
    SLIPPERY_STEP = "slippery_step"
    NON_SLIPPERY_STEP = "non_slippery_step"
    SLIPPERY_PLATEAU = "slippery_plateau"
    NON_SLIPPERY_PLATEAU = "non_slippery_plateau"
    NONE = "none"


@dataclass(frozen=True)
class ColumnOneShape:
    """Local shape of a partition at its first column.

    Plateau variants carry the plateau length (>= 1).  The single-grain
    partition (1) matches no variant and gets kind NONE.
    """

    kind: ShapeKind
    length: Optional[int] = None

    def __post_init__(self) -> None:
        plateau = self.kind in (ShapeKind.SLIPPERY_PLATEAU, ShapeKind.NON_SLIPPERY_PLATEAU)
        if plateau and (self.length is None or self.length < 1):
            raise ValueError("plateau shapes need a length >= 1")
        if not plateau and self.length is not None:
            raise ValueError(f"{self.kind} carries no length")


def _first_drop(p: Partition, start: int) -> tuple[int, int]:
    """First column k >= start (1-indexed) with a nonzero height drop.

    Returns ``(k, d_k)``.  Some drop always exists because the last stored
    column drops onto the implicit zero column.
    """
    k = start
    while k < len(p) and p[k - 1] == p[k]:
        k += 1
    return k, height_difference(p, k)


def classify_at_column_one(p: Partition) -> ColumnOneShape:
    """The unique column-1 shape of ``p``.

    All-ones partitions of length >= 2 are slippery plateaus of length
    ``len - 1`` (their final column drops onto the implicit zero column);
    only the single-grain partition (1) matches no clause.
    """
    d1 = height_difference(p, 1)
    if d1 >= 2:
        return ColumnOneShape(ShapeKind.CLIFF)
    if d1 == 1:
        if len(p) == 1:
            # p == (1): removing the grain leaves nothing to form a plateau.
            return ColumnOneShape(ShapeKind.NONE)
        _, drop = _first_drop(p, 2)
        if drop == 1:
            return ColumnOneShape(ShapeKind.SLIPPERY_STEP)
        return ColumnOneShape(ShapeKind.NON_SLIPPERY_STEP)
    k, drop = _first_drop(p, 1)
    if drop == 1:
        return ColumnOneShape(ShapeKind.SLIPPERY_PLATEAU, k - 1)
    return ColumnOneShape(ShapeKind.NON_SLIPPERY_PLATEAU, k - 1)


def prefix_sums(p: Partition, upto: int) -> tuple[int, ...]:
    """Cumulative part sums, padded with the total weight past the last column."""
    if upto < 1:
        raise ValueError("upto must be >= 1")
    out = []
    acc = 0
    for i in range(upto):
        if i < len(p):
            acc += p[i]
        out.append(acc)
    return tuple(out)


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff ``a`` is below ``b`` in the dominance order.

    Every prefix sum of ``b`` must be at least the corresponding prefix sum
    of ``a``; both partitions must have the same weight.
    """
    wa, wb = a.weight, b.weight
    if wa != wb:
        raise ValueError(f"weight mismatch: {wa} vs {wb}")
    pa = pb = 0
    la, lb = len(a), len(b)
    for i in range(max(la, lb)):
        if i < la:
            pa += a[i]
        if i < lb:
            pb += b[i]
        if pa > pb:
            return False
    return True


class Transition(NamedTuple):
    """A single grain move out of ``column``, yielding ``result``."""

    column: int
    result: Partition


def direct_reachable(p: Partition) -> frozenset[Transition]:
    """All one-move results: grain falls off a cliff or slips down a step.

    The result partitions are exactly the elements covered by ``p``.
    """
    moves = []
    for j in range(1, len(p) + 1):
        d = height_difference(p, j)
        if d >= 2:
            # grain falls from column j to column j+1
            if j < len(p):
                parts = p[: j - 1] + (p[j - 1] - 1, p[j] + 1) + p[j + 1 :]
            else:
                parts = p[:-1] + (p[-1] - 1, 1)
            moves.append(Transition(j, _raw(parts)))
        elif d == 1 and j < len(p):
            k, drop = _first_drop(p, j + 1)
            if drop == 1:
                # grain slips from column j to column k+1
                head = p[: j - 1] + (p[j - 1] - 1,) + p[j : k]
                if k < len(p):
                    parts = head + (p[k] + 1,) + p[k + 1 :]
                else:
                    parts = head + (1,)
                moves.append(Transition(j, _raw(parts)))
    return frozenset(moves)


def covers(upper: Partition, lower: Partition) -> bool:
    """Cover test straight from the two-case single-grain characterization.

    Independent of :func:`direct_reachable`: the two routes cross-validate.
    """
    if upper.weight != lower.weight:
        raise ValueError("weight mismatch")
    plus = minus = -1
    for i in range(max(len(upper), len(lower))):
        u = upper[i] if i < len(upper) else 0
        w = lower[i] if i < len(lower) else 0
        if u == w:
            continue
        if u == w + 1 and plus < 0 and minus < 0:
            plus = i
        elif u == w - 1 and plus >= 0 and minus < 0:
            minus = i
        else:
            return False
    if plus < 0 or minus < 0:
        return False
    if minus == plus + 1:
        return True
    lower_j = lower[plus]
    lower_k = lower[minus] if minus < len(lower) else 0
    return lower_j == lower_k


def down_arrow(p: Partition, i: int) -> Optional[Partition]:
    """Add one grain at column ``i`` (1-indexed, up to ``len+1``).

    Returns the enlarged partition, or None when the grain would break the
    weak decrease.
    """
    if not 1 <= i <= len(p) + 1:
        raise ValueError(f"column {i} out of range for {p!r}")
    if i == len(p) + 1:
        return _raw(p + (1,))
    if i > 1 and p[i - 2] < p[i - 1] + 1:
        return None
    return _raw(p[: i - 1] + (p[i - 1] + 1,) + p[i:])


class Sons(NamedTuple):
    left: Partition
    right: Optional[Partition]


def sons(p: Partition) -> Sons:
    """The one or two weight+1 partitions generated from ``p``.

    The left son always adds a grain to column 1.  Steps add the right
    grain at column 2, slippery plateaus of length l at column l+2.  The
    single-grain partition (1) keeps its right son (1,1) so that every
    weight-2 partition has a father.
    """
    left = _raw((p[0] + 1,) + p[1:])
    shape = classify_at_column_one(p)
    if shape.kind in (ShapeKind.SLIPPERY_STEP, ShapeKind.NON_SLIPPERY_STEP):
        right = down_arrow(p, 2)
    elif shape.kind is ShapeKind.SLIPPERY_PLATEAU:
        right = down_arrow(p, shape.length + 2)
    elif shape.kind is ShapeKind.NONE:
        right = _raw((1, 1))
    else:
        right = None
    return Sons(left, right)


def father(q: Partition) -> tuple[Partition, str]:
    """The unique partition of weight-1 having ``q`` among its sons.

    Left sons are exactly the partitions whose first column is strictly
    tallest; every other partition arose from a grain added at the end of
    its initial run of equal columns.
    """
    if q.weight < 2:
        raise ValueError("partitions of weight 1 have no father")
    if len(q) == 1 or q[0] > q[1]:
        head = (q[0] - 1,) if q[0] > 1 else ()
        return _raw(head + q[1:]), "left"
    run, _ = _first_drop(q, 1)
    if q[run - 1] == 1:
        parts = q[: run - 1]
    else:
        parts = q[: run - 1] + (q[run - 1] - 1,) + q[run:]
    return _raw(parts), "right"
