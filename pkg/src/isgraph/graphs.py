"""Intersection subgroup graphs and the small graph toolkit they need.

Adjacency rows are stored as Python ints used as bitsets: bit ``j`` of
``rows[i]`` is set iff ``i`` and ``j`` are adjacent.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arithmetic import divisors, factorize
from .errors import IndexOutOfRange, InvalidSpec
from .lattice import SubgroupLattice


def bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...]
    orders: tuple[int | None, ...] = ()

    def __post_init__(self):
        if not self.orders:
            object.__setattr__(self, "orders", (None,) * self.n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> "SimpleGraph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                continue
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows), tuple(labels) if labels else tuple(str(i) for i in range(n)))

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(bits(self.rows[i]))

    def degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.rows[i] >> (i + 1) << (i + 1))]

    @property
    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def adjacency(self) -> list[list[bool]]:
        return [[bool(r >> j & 1) for j in range(self.n)] for r in self.rows]

    def is_symmetric_irreflexive(self) -> bool:
        for i, r in enumerate(self.rows):
            if r >> i & 1:
                return False
            for j in bits(r):
                if not self.rows[j] >> i & 1:
                    return False
        return True

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Vertex ``i`` moves to position ``perm[i]``."""
        rows = [0] * self.n
        labels = [""] * self.n
        orders: list[int | None] = [None] * self.n
        for i in range(self.n):
            pi = perm[i]
            labels[pi] = self.labels[i]
            orders[pi] = self.orders[i]
            for j in bits(self.rows[i]):
                rows[pi] |= 1 << perm[j]
        return SimpleGraph(self.n, tuple(rows), tuple(labels), tuple(orders))

    # export -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"id": i, "label": self.labels[i], "order": self.orders[i]} for i in range(self.n)
            ],
            "edges": [list(e) for e in self.edges()],
        }

    def to_dot(self) -> str:
        lines = ["graph iggraf {"]
        touched = 0
        for i, j in self.edges():
            touched |= (1 << i) | (1 << j)
            lines.append(f'  "{_esc(self.labels[i])}" -- "{_esc(self.labels[j])}";')
        for i in range(self.n):
            if not touched >> i & 1:
                lines.append(f'  "{_esc(self.labels[i])}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _esc(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def complement(g: SimpleGraph) -> SimpleGraph:
    full = g.all_mask
    rows = tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows))
    return SimpleGraph(g.n, rows, g.labels, g.orders)


def induced_subgraph(g: SimpleGraph, vs: Sequence[int]) -> SimpleGraph:
    if len(set(vs)) != len(vs):
        raise IndexOutOfRange("vertex list has duplicates")
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} out of range 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        r = 0
        for w in bits(g.rows[v]):
            if w in pos:
                r |= 1 << pos[w]
        rows.append(r)
    return SimpleGraph(len(vs), tuple(rows), tuple(g.labels[v] for v in vs), tuple(g.orders[v] for v in vs))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, j) for j in range(1, leaves + 1)])


def disjoint_union(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    edges = a.edges() + [(i + a.n, j + a.n) for i, j in b.edges()]
    return SimpleGraph.from_edges(a.n + b.n, edges, [*a.labels, *b.labels])


# ---------------------------------------------------------------------------
# intersection subgroup graphs


@dataclass(frozen=True)
class IntersectionGraph:
    """A graph together with the lattice indices of its vertices."""

    graph: SimpleGraph
    lattice: SubgroupLattice | None
    subgroup_index: tuple[int, ...]  # lattice index (or divisor) per vertex

    def vertex_of(self, lattice_index: int) -> int | None:
        try:
            return self.subgroup_index.index(lattice_index)
        except ValueError:
            return None


def intersection_subgroup_graph_full(L: SubgroupLattice) -> IntersectionGraph:
    subs = L.subgroups
    nontrivial = [i for i, s in enumerate(subs) if s.order > 1]
    # partner[i]: bitset over ``nontrivial`` positions with trivial intersection
    partner = []
    for a, i in enumerate(nontrivial):
        mi = subs[i].members
        r = 0
        for b, j in enumerate(nontrivial):
            if a != b and mi & subs[j].members == 1:
                r |= 1 << b
        partner.append(r)
    keep = [a for a in range(len(nontrivial)) if partner[a]]
    pos = {a: v for v, a in enumerate(keep)}
    rows = []
    for a in keep:
        r = 0
        for b in bits(partner[a]):
            r |= 1 << pos[b]
        rows.append(r)
    labels = []
    orders = []
    for a in keep:
        s = subs[nontrivial[a]]
        labels.append(f"H{nontrivial[a]}|{s.order}|{s.describe()}")
        orders.append(s.order)
    g = SimpleGraph(len(keep), tuple(rows), tuple(labels), tuple(orders))
    return IntersectionGraph(g, L, tuple(nontrivial[a] for a in keep))


def intersection_subgroup_graph(L: SubgroupLattice) -> SimpleGraph:
    """Vertices: non-trivial subgroups meeting some other non-trivial
    subgroup trivially; edges: trivial intersection. Lattice order."""
    return intersection_subgroup_graph_full(L).graph


def cyclic_intersection_graph_full(n: int) -> IntersectionGraph:
    if n < 2 or n > 10**9:
        raise InvalidSpec(f"cyclic fast path needs 2 <= n <= 10^9, got {n}")
    primes = factorize(n).primes
    cand = [d for d in divisors(n) if d > 1]
    # d has a coprime partner > 1 iff some prime of n does not divide d
    verts = [d for d in cand if any(d % p for p in primes)]
    pos = {d: i for i, d in enumerate(verts)}
    rows = []
    for d in verts:
        r = 0
        for e in verts:
            if e != d and math.gcd(d, e) == 1:
                r |= 1 << pos[e]
        rows.append(r)
    g = SimpleGraph(len(verts), tuple(rows), tuple(str(d) for d in verts), tuple(verts))
    return IntersectionGraph(g, None, tuple(verts))


def cyclic_intersection_graph(n: int) -> SimpleGraph:
    """Graph of C_n straight from the divisor lattice of ``n``; vertices
    are labelled by subgroup order."""
    return cyclic_intersection_graph_full(n).graph


@dataclass(frozen=True)
class ZFragmentSpec:
    max_modulus: int

    def __post_init__(self):
        if self.max_modulus < 2:
            raise InvalidSpec("the Z-fragment needs N >= 2")


def z_fragment_graph(spec: ZFragmentSpec | int) -> SimpleGraph:
    """Finite window of the integer model: vertex ``m`` stands for ``mZ``,
    ``2 <= m <= N``; ``m ~ n`` iff ``gcd(m, n) == 1``."""
    if isinstance(spec, int):
        spec = ZFragmentSpec(spec)
    N = spec.max_modulus
    ms = list(range(2, N + 1))
    rows = []
    for a in ms:
        r = 0
        for b in ms:
            if a != b and math.gcd(a, b) == 1:
                r |= 1 << (b - 2)
        rows.append(r)
    return SimpleGraph(len(ms), tuple(rows), tuple(str(m) for m in ms), (None,) * len(ms))


def z_vertex(m: int) -> int:
    return m - 2


def dumps_graph(g: SimpleGraph) -> str:
    return json.dumps(g.to_json())
