"""The dominance lattice on all partitions of a fixed weight: enumeration,
Hasse diagram, meets and joins, and the small structural facts (chains,
pentagon sublattice, distributivity)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .partitions import (
    Partition,
    _raw,
    conjugate,
    direct_reachable,
    dominance_leq,
)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cur = [n]
    out = [_raw((n,))]
    while True:
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return out
        rem = len(cur) - i  # the decremented grain plus the trailing ones
        cur[i] -= 1
        del cur[i + 1 :]
        cap = cur[i]
        while rem:
            t = min(cap, rem)
            cur.append(t)
            rem -= t
        out.append(_raw(tuple(cur)))


@dataclass(frozen=True)
class HasseDiagram:
    """Cover structure of the dominance order on one weight.

    ``nodes`` is all of Part(n) in descending lexicographic order and
    ``cover_edges`` maps each node to the nodes it covers.  Treat a built
    diagram as immutable.
    """

    weight: int
    nodes: tuple[Partition, ...]
    cover_edges: Mapping[Partition, tuple[Partition, ...]] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.cover_edges.values())

    @property
    def top(self) -> Partition:
        return self.nodes[0]

    @property
    def bottom(self) -> Partition:
        return self.nodes[-1]


def build_hasse(n: int) -> HasseDiagram:
    """Hasse diagram of the dominance order on Part(n).

    Edges come from the grain-move transitions, which produce exactly the
    covered partitions.
    """
    nodes = enumerate_partitions(n)
    edges = {}
    for p in nodes:
        targets = [t.result for t in direct_reachable(p)]
        targets.sort(reverse=True)
        edges[p] = tuple(targets)
    return HasseDiagram(n, tuple(nodes), edges)


def meet(a: Partition, b: Partition) -> Partition:
    """Greatest lower bound: the partition whose prefix sums are the
    pointwise minimum of both prefix-sum sequences."""
    if a.weight != b.weight:
        raise ValueError("weight mismatch")
    pa = pb = prev = 0
    parts = []
    for i in range(max(len(a), len(b))):
        if i < len(a):
            pa += a[i]
        if i < len(b):
            pb += b[i]
        m = min(pa, pb)
        if m == prev:
            break
        parts.append(m - prev)
        prev = m
    return _raw(tuple(parts))


def join(a: Partition, b: Partition) -> Partition:
    """Least upper bound, via the conjugation antiautomorphism."""
    return conjugate(meet(conjugate(a), conjugate(b)))


_PENTAGON_7 = (
    (4, 2, 1),
    (4, 1, 1, 1),
    (3, 3, 1),
    (3, 2, 2),
    (3, 2, 1, 1),
)


def find_pentagon(n: int) -> Optional[frozenset[Partition]]:
    """A five-element sublattice witnessing non-modularity, if one exists.

    None for n <= 6; for larger weights the weight-7 witness is pushed up
    by repeatedly growing the first column.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 6:
        return None
    bump = n - 7
    return frozenset(_raw((p[0] + bump,) + p[1:]) for p in _PENTAGON_7)


def is_distributive(diagram: HasseDiagram) -> bool:
    """Brute-force distributivity over all triples; guarded to weight <= 10."""
    if diagram.weight > 10:
        raise ValueError("distributivity brute force is guarded to weight <= 10")
    nodes = diagram.nodes
    k = len(nodes)
    idx = {p: i for i, p in enumerate(nodes)}
    meets = [[0] * k for _ in range(k)]
    joins = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            m = idx[meet(nodes[i], nodes[j])]
            v = idx[join(nodes[i], nodes[j])]
            meets[i][j] = meets[j][i] = m
            joins[i][j] = joins[j][i] = v
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if meets[x][joins[y][z]] != joins[meets[x][y]][meets[x][z]]:
                    return False
    return True


def is_chain(diagram: HasseDiagram) -> bool:
    """True iff every pair of nodes is comparable."""
    nodes = diagram.nodes
    for i, a in enumerate(nodes):
        for b in nodes[i + 1 :]:
            if not (dominance_leq(a, b) or dominance_leq(b, a)):
                return False
    return True


def to_dot(
    diagram: HasseDiagram,
    filled: Iterable[Partition] = (),
    outlined: Iterable[Partition] = (),
) -> str:
    """Render the diagram as DOT, one node per partition, edges upper->lower.

    ``filled`` nodes get a gray fill, ``outlined`` ones a double border;
    node and edge order follow the diagram's canonical node order.
    """
    filled = set(filled)
    outlined = set(outlined)
    lines = [f'digraph "dominance_order_{diagram.weight}" {{', "  rankdir=TB;"]
    for p in diagram.nodes:
        attrs = []
        if p in filled:
            attrs.append("style=filled fillcolor=gray85")
        if p in outlined:
            attrs.append("peripheries=2")
        suffix = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{p}"{suffix};')
    for p in diagram.nodes:
        for q in diagram.cover_edges[p]:
            lines.append(f'  "{p}" -> "{q}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
