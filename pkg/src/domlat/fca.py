"""Formal contexts over partitions: derivation operators, the standard
context of a dominance lattice, Next-Closure concept enumeration, and the
Burmeister / CSV file formats."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .irreducibles import join_irreducibles
from .lattice import build_hasse
from .partitions import Partition, conjugate, dominance_leq, parse_partition


class FormalContext:
    """Objects, attributes and an incidence bit matrix.

    Rows are stored as integer bitmasks over the attribute order (bit j set
    iff the object has attribute j), which keeps derivations cheap.
    """

    __slots__ = ("objects", "attributes", "_rows", "_cols", "_obj_index", "_att_index")

    def __init__(
        self,
        objects: Sequence[Partition],
        attributes: Sequence[Partition],
        rows: Sequence[int],
    ) -> None:
        self.objects = tuple(objects)
        self.attributes = tuple(attributes)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate objects")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValueError("duplicate attributes")
        if len(rows) != len(self.objects):
            raise ValueError("one incidence row per object required")
        limit = 1 << len(self.attributes)
        for r in rows:
            if not 0 <= r < limit:
                raise ValueError("incidence row exceeds attribute count")
        self._rows = tuple(rows)
        self._cols = _transpose_masks(self._rows, len(self.attributes))
        self._obj_index = {p: i for i, p in enumerate(self.objects)}
        self._att_index = {p: i for i, p in enumerate(self.attributes)}

    def incidence(self, g: Partition, m: Partition) -> bool:
        """Cell lookup by object and attribute value."""
        gi = self._obj_index[g]
        mi = self._att_index[m]
        return bool(self._rows[gi] >> mi & 1)

    def row_mask(self, gi: int) -> int:
        return self._rows[gi]

    def col_mask(self, mi: int) -> int:
        return self._cols[mi]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.attributes == other.attributes
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self._rows))

    def __repr__(self) -> str:
        return f"FormalContext({len(self.objects)} objects, {len(self.attributes)} attributes)"


def _transpose_masks(rows: Sequence[int], width: int) -> tuple[int, ...]:
    """Column bitmasks from row bitmasks, via a packed bit matrix."""
    if not rows or not width:
        return (0,) * width
    nbytes = (width + 7) // 8
    buf = b"".join(r.to_bytes(nbytes, "little") for r in rows)
    mat = np.unpackbits(
        np.frombuffer(buf, dtype=np.uint8).reshape(len(rows), nbytes),
        axis=1,
        bitorder="little",
    )[:, :width]
    packed = np.packbits(mat.T, axis=1, bitorder="little")
    return tuple(int.from_bytes(col.tobytes(), "little") for col in packed)


def derive_up(ctx: FormalContext, objects: Iterable[Partition]) -> frozenset[Partition]:
    """Attributes common to all given objects."""
    mask = (1 << len(ctx.attributes)) - 1
    for g in objects:
        if g not in ctx._obj_index:
            raise ValueError(f"unknown object {g!r}")
        mask &= ctx.row_mask(ctx._obj_index[g])
    return frozenset(m for i, m in enumerate(ctx.attributes) if mask >> i & 1)


def derive_down(ctx: FormalContext, attributes: Iterable[Partition]) -> frozenset[Partition]:
    """Objects possessing all given attributes."""
    mask = (1 << len(ctx.objects)) - 1
    for m in attributes:
        if m not in ctx._att_index:
            raise ValueError(f"unknown attribute {m!r}")
        mask &= ctx.col_mask(ctx._att_index[m])
    return frozenset(g for i, g in enumerate(ctx.objects) if mask >> i & 1)


def _prefix_matrix(parts: Sequence[Partition], length: int, weight: int) -> np.ndarray:
    arr = np.full((len(parts), length), weight, dtype=np.int32)
    for i, p in enumerate(parts):
        arr[i, : len(p)] = np.cumsum(p, dtype=np.int32)
    return arr


def _fill_rows(objs: np.ndarray, atts: np.ndarray, start: int, stop: int) -> list[int]:
    # block size keeps the boolean intermediate around 128 MB
    cells = atts.shape[0] * atts.shape[1]
    block = max(1, min(stop - start, (1 << 27) // max(cells, 1)))
    rows = []
    for lo in range(start, stop, block):
        hi = min(lo + block, stop)
        cmp = (objs[lo:hi, None, :] <= atts[None, :, :]).all(axis=2)
        packed = np.packbits(cmp, axis=1, bitorder="little")
        for flags in packed:
            rows.append(int.from_bytes(flags.tobytes(), "little"))
    return rows


def standard_context(n: int, parallel: bool = False) -> FormalContext:
    """The standard context of the dominance lattice on Part(n).

    Objects are the join-irreducibles in ascending lexicographic order,
    attributes their conjugates (the meet-irreducibles) ordered the same
    way, and a cell is set iff the object is dominated by the attribute.
    Cells are filled by comparing precomputed prefix-sum rows; ``parallel``
    splits the fill across threads with byte-identical results.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    objects = sorted(join_irreducibles(n).members)
    attributes = sorted(conjugate(p) for p in objects)
    if not objects:
        return FormalContext((), (), ())
    length = max(len(p) for p in objects + attributes)
    obj_pre = _prefix_matrix(objects, length, n)
    att_pre = _prefix_matrix(attributes, length, n)
    if parallel and len(objects) >= 128:
        workers = 4
        step = -(-len(objects) // workers)
        bounds = [(i, min(i + step, len(objects))) for i in range(0, len(objects), step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(lambda b: _fill_rows(obj_pre, att_pre, *b), bounds)
        rows: list[int] = []
        for chunk in chunks:
            rows.extend(chunk)
    else:
        rows = _fill_rows(obj_pre, att_pre, 0, len(objects))
    return FormalContext(objects, attributes, rows)


@dataclass(frozen=True)
class Concept:
    """Extent/intent pair of a context; both sides determine each other."""

    extent: tuple[Partition, ...]
    intent: tuple[Partition, ...]
    context: FormalContext = field(repr=False, compare=False)


def _closure(ctx: FormalContext, intent_mask: int) -> tuple[int, int]:
    """Extent of the intent, then the intent of that extent."""
    extent = (1 << len(ctx.objects)) - 1
    m = intent_mask
    while m:
        lsb = m & -m
        extent &= ctx.col_mask(lsb.bit_length() - 1)
        m ^= lsb
    closed = (1 << len(ctx.attributes)) - 1
    e = extent
    while e:
        lsb = e & -e
        closed &= ctx.row_mask(lsb.bit_length() - 1)
        e ^= lsb
    return extent, closed


def _unpack(parts: tuple[Partition, ...], mask: int) -> tuple[Partition, ...]:
    return tuple(p for i, p in enumerate(parts) if mask >> i & 1)


def enumerate_concepts(ctx: FormalContext) -> list[Concept]:
    """All concepts, each once, intents ascending in lectic order."""
    n_att = len(ctx.attributes)
    full = (1 << n_att) - 1
    extent, intent = _closure(ctx, 0)
    out = [Concept(_unpack(ctx.objects, extent), _unpack(ctx.attributes, intent), ctx)]
    while intent != full:
        a = intent
        for i in range(n_att - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
            else:
                extent, closed = _closure(ctx, a | bit)
                if not (closed & ~a) & (bit - 1):
                    intent = closed
                    break
        else:
            raise AssertionError("lectic successor must exist below the full intent")
        out.append(
            Concept(_unpack(ctx.objects, extent), _unpack(ctx.attributes, intent), ctx)
        )
    return out


def concept_leq(c1: Concept, c2: Concept) -> bool:
    """Concept order: extent inclusion."""
    if c1.context != c2.context:
        raise ValueError("concepts come from different contexts")
    return set(c1.extent) <= set(c2.extent)


def concept_lattice_isomorphic(n: int) -> bool:
    """Whether the concept order of the standard context matches the
    dominance order, via the witness sending each partition to the concept
    whose extent is the set of irreducibles below it.  Guarded to n <= 12.
    """
    if n > 12:
        raise ValueError("isomorphism brute force is guarded to n <= 12")
    ctx = standard_context(n)
    concepts = enumerate_concepts(ctx)
    diagram = build_hasse(n)
    if len(concepts) != len(diagram.nodes):
        return False
    by_extent = {frozenset(c.extent): c for c in concepts}
    extents = {}
    for node in diagram.nodes:
        ext = frozenset(g for g in ctx.objects if dominance_leq(g, node))
        if ext not in by_extent:
            return False
        extents[node] = ext
    if len(set(extents.values())) != len(diagram.nodes):
        return False
    for a in diagram.nodes:
        for b in diagram.nodes:
            if dominance_leq(a, b) != (extents[a] <= extents[b]):
                return False
    return True


def export_cxt(ctx: FormalContext) -> str:
    """Burmeister format: B, blank, counts, blank, names, then X/. rows."""
    lines = ["B", "", str(len(ctx.objects)), str(len(ctx.attributes)), ""]
    lines.extend(str(p) for p in ctx.objects)
    lines.extend(str(p) for p in ctx.attributes)
    for gi in range(len(ctx.objects)):
        row = ctx.row_mask(gi)
        lines.append(
            "".join("X" if row >> mi & 1 else "." for mi in range(len(ctx.attributes)))
        )
    return "\n".join(lines) + "\n"


def import_cxt(text: str) -> FormalContext:
    """Parse the Burmeister format produced by :func:`export_cxt`."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 5 or lines[0] != "B" or lines[1] != "" or lines[4] != "":
        raise ValueError("malformed context file header")
    n_obj = int(lines[2])
    n_att = int(lines[3])
    names = lines[5 : 5 + n_obj + n_att]
    body = lines[5 + n_obj + n_att :]
    if len(names) != n_obj + n_att or len(body) != n_obj:
        raise ValueError("context file truncated")
    objects = [parse_partition(s) for s in names[:n_obj]]
    attributes = [parse_partition(s) for s in names[n_obj:]]
    rows = []
    for line in body:
        if len(line) != n_att or set(line) - {".", "X"}:
            raise ValueError(f"malformed incidence row {line!r}")
        mask = 0
        for mi, ch in enumerate(line):
            if ch == "X":
                mask |= 1 << mi
        rows.append(mask)
    return FormalContext(objects, attributes, rows)


def export_csv(ctx: FormalContext) -> str:
    """Cross table as CSV: header of attribute names, then one row per
    object of its name followed by 1/0 cells."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([str(m) for m in ctx.attributes])
    for gi, g in enumerate(ctx.objects):
        row = ctx.row_mask(gi)
        writer.writerow(
            [str(g)] + [str(row >> mi & 1) for mi in range(len(ctx.attributes))]
        )
    return buf.getvalue()


def concept_lines(concepts: Iterable[Concept]) -> list[str]:
    """One concept per line: sizes, then the members of each side."""
    out = []
    for c in concepts:
        out.append(
            "\t".join(
                (
                    str(len(c.extent)),
                    str(len(c.intent)),
                    " ".join(str(p) for p in c.extent),
                    " ".join(str(p) for p in c.intent),
                )
            )
        )
    return out
