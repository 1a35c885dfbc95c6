"""Certified recognizers for the forbidden-subgraph classes.

Each recognizer returns a :class:`ClassCertificate`; a negative verdict
always carries a forbidden induced subgraph, and bipartite / chordal
positive verdicts carry a 2-colouring / perfect elimination ordering.
:func:`verify_certificate` rechecks these from the adjacency alone.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import VertexCapExceeded
from .graphs import SimpleGraph, bits, complement

CLASS_NAMES = (
    "triangle_free",
    "cluster",
    "claw_free",
    "cograph",
    "bipartite",
    "chordal",
    "perfect",
)
DEFAULT_PERFECT_CAP = 80
BRUTE_FORCE_CAP = 12


@dataclass(frozen=True)
class ClassCertificate:
    class_name: str
    verdict: bool
    witness: tuple[int, ...] = ()
    evidence: dict | None = None
    side: str | None = None  # perfect only: "graph" or "complement"

    def to_json(self) -> dict:
        out = {"class": self.class_name, "verdict": self.verdict, "witness": list(self.witness)}
        if self.evidence is not None:
            out["evidence"] = self.evidence
        if self.side is not None:
            out["side"] = self.side
        return out


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def is_triangle_free(g: SimpleGraph) -> ClassCertificate:
    for u in range(g.n):
        higher = g.rows[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            common = g.rows[u] & g.rows[v]
            if common:
                return ClassCertificate("triangle_free", False, (u, v, _low(common)))
    return ClassCertificate("triangle_free", True)


def is_cluster(g: SimpleGraph) -> ClassCertificate:
    # P3 a-b-c: a, c neighbours of b that are not adjacent
    for b in range(g.n):
        nb = g.rows[b]
        for a in bits(nb):
            rest = nb & ~g.rows[a] & ~(1 << a)
            if rest:
                return ClassCertificate("cluster", False, (a, b, _low(rest)))
    return ClassCertificate("cluster", True)


def is_claw_free(g: SimpleGraph) -> ClassCertificate:
    for c in range(g.n):
        nb = g.rows[c]
        for x in bits(nb):
            rest_x = nb & ~g.rows[x] & ~((1 << (x + 1)) - 1)
            for y in bits(rest_x):
                rest_y = rest_x & ~g.rows[y] & ~((1 << (y + 1)) - 1)
                if rest_y:
                    return ClassCertificate("claw_free", False, (c, x, y, _low(rest_y)))
    return ClassCertificate("claw_free", True)


def is_cograph(g: SimpleGraph) -> ClassCertificate:
    # P4 a-b-c-d around its middle edge b-c
    for b in range(g.n):
        for c in bits(g.rows[b] >> (b + 1) << (b + 1)):
            A = g.rows[b] & ~g.rows[c] & ~(1 << c)
            if not A:
                continue
            D = g.rows[c] & ~g.rows[b] & ~(1 << b)
            for a in bits(A):
                dd = D & ~g.rows[a] & ~(1 << a)
                if dd:
                    return ClassCertificate("cograph", False, (a, b, c, _low(dd)))
    return ClassCertificate("cograph", True)


def _odd_cycle_from_bfs(g: SimpleGraph, parent: list[int], u: int, v: int) -> tuple[int, ...]:
    pu, pv = [u], [v]
    while pu[-1] != -1:
        pu.append(parent[pu[-1]])
    while pv[-1] != -1:
        pv.append(parent[pv[-1]])
    pu.pop()
    pv.pop()
    su = set(pu)
    lca = next(x for x in pv if x in su)
    left = pu[: pu.index(lca) + 1]
    right = pv[: pv.index(lca)]
    return tuple(left + right[::-1])


def is_bipartite(g: SimpleGraph) -> ClassCertificate:
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for v in bits(g.rows[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    dq.append(v)
                elif color[v] == color[u]:
                    cyc = _odd_cycle_from_bfs(g, parent, u, v)
                    return ClassCertificate("bipartite", False, cyc)
    return ClassCertificate("bipartite", True, evidence={"coloring": color})


def lex_bfs(g: SimpleGraph) -> list[int]:
    """Lexicographic breadth-first order by partition refinement."""
    order: list[int] = []
    parts: list[list[int]] = [list(range(g.n))] if g.n else []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        nb = g.rows[v]
        new_parts = []
        for part in parts:
            inside = [u for u in part if nb >> u & 1]
            outside = [u for u in part if not nb >> u & 1]
            if inside:
                new_parts.append(inside)
            if outside:
                new_parts.append(outside)
        parts = new_parts
    return order


def _chordless_cycle_through(g: SimpleGraph, v: int, x: int, y: int) -> tuple[int, ...] | None:
    """Shortest x..y path avoiding N[v] inside, closed through v."""
    blocked = (g.rows[v] | (1 << v)) & ~((1 << x) | (1 << y))
    parent = {x: -1}
    dq = deque([x])
    while dq:
        u = dq.popleft()
        if u == y:
            break
        for w in bits(g.rows[u] & ~blocked):
            if w not in parent:
                parent[w] = u
                dq.append(w)
    if y not in parent:
        return None
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    return (v, *path)


def is_chordal(g: SimpleGraph) -> ClassCertificate:
    order = lex_bfs(g)
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.rows[v]) if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and not g.adjacent(parent, w):
                cyc = _chordless_cycle_through(g, v, parent, w)
                if cyc is None:
                    cyc = _any_chordless_cycle(g)
                return ClassCertificate("chordal", False, cyc)
    return ClassCertificate("chordal", True, evidence={"peo": peo})


def _any_chordless_cycle(g: SimpleGraph) -> tuple[int, ...]:
    for v in range(g.n):
        nb = list(bits(g.rows[v]))
        for x, y in itertools.combinations(nb, 2):
            if g.adjacent(x, y):
                continue
            cyc = _chordless_cycle_through(g, v, x, y)
            if cyc is not None:
                return cyc
    raise AssertionError("non-chordal graph without a chordless cycle")


def find_odd_hole(g: SimpleGraph, min_len: int = 5, cap: int = DEFAULT_PERFECT_CAP) -> tuple[int, ...] | None:
    """An induced odd cycle of length ``>= min_len``, or None.

    Induced paths ``s, v1, ..., vk`` are grown from their smallest vertex
    ``s``. An extension must see the current end and no earlier interior
    vertex; a neighbour of ``s`` can only be used to close the cycle, and
    only when it is larger than ``v1`` so each cycle is met once.
    """
    if g.n > cap:
        raise VertexCapExceeded(f"odd-hole search limited to {cap} vertices, graph has {g.n}")
    rows = g.rows
    for s in range(g.n):
        allowed = g.all_mask & ~((1 << (s + 1)) - 1)
        ns = rows[s] & allowed
        if bin(ns).count("1") < 2:
            continue
        for v1 in bits(ns):
            # candidates for later path vertices: above s, off N[s], off N[v1]
            # except through the end vertex handled below
            closers = ns & ~((1 << (v1 + 1)) - 1) & ~rows[v1]
            if not closers:
                continue
            found = _grow(rows, [s, v1], allowed & ~rows[s] & ~(1 << v1), closers, 0, min_len)
            if found:
                return found
    return None


def _grow(rows, path, free, closers, blocked, min_len):
    """``free``: vertices off N[s] not yet on the path; ``blocked``: union of
    closed neighbourhoods of the interior vertices before the end."""
    end = path[-1]
    step = rows[end] & ~blocked
    length = len(path) + 1
    if length >= min_len and length % 2 == 1:
        close = step & closers
        if close:
            return (*path, _low(close))
    nxt_blocked = blocked | rows[end] | (1 << end)
    remaining_closers = closers & ~rows[end]
    if not remaining_closers:
        return None
    for w in bits(step & free):
        res = _grow(rows, path + [w], free & ~(1 << w), remaining_closers, nxt_blocked, min_len)
        if res:
            return res
    return None


def is_perfect(g: SimpleGraph, cap: int = DEFAULT_PERFECT_CAP) -> ClassCertificate:
    if g.n > cap:
        raise VertexCapExceeded(f"perfection check limited to {cap} vertices, graph has {g.n}")
    hole = find_odd_hole(g, cap=cap)
    if hole:
        return ClassCertificate("perfect", False, hole, side="graph")
    anti = find_odd_hole(complement(g), cap=cap)
    if anti:
        return ClassCertificate("perfect", False, anti, side="complement")
    return ClassCertificate("perfect", True)


RECOGNIZERS: dict[str, Callable[..., ClassCertificate]] = {
    "triangle_free": is_triangle_free,
    "cluster": is_cluster,
    "claw_free": is_claw_free,
    "cograph": is_cograph,
    "bipartite": is_bipartite,
    "chordal": is_chordal,
    "perfect": is_perfect,
}


def classify(g: SimpleGraph, classes: Sequence[str] = CLASS_NAMES, perfect_cap: int = DEFAULT_PERFECT_CAP) -> dict[str, ClassCertificate]:
    out = {}
    for name in classes:
        if name == "perfect":
            out[name] = is_perfect(g, perfect_cap)
        else:
            out[name] = RECOGNIZERS[name](g)
    return out


# ---------------------------------------------------------------------------
# exact oracle


def clique_number(rows: Sequence[int], mask: int) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = _low(cand)
            cand &= ~(1 << v)
            grow(size + 1, cand & rows[v])

    grow(0, mask)
    return best


def chromatic_number(rows: Sequence[int], mask: int) -> int:
    verts = list(bits(mask))
    if not verts:
        return 0
    # colour in order of decreasing degree inside the subgraph
    verts.sort(key=lambda v: -bin(rows[v] & mask).count("1"))

    def colourable(k: int) -> bool:
        colour: dict[int, int] = {}

        def place(i: int) -> bool:
            if i == len(verts):
                return True
            v = verts[i]
            used = {colour[u] for u in bits(rows[v] & mask) if u in colour}
            top = max(colour.values(), default=-1)
            for c in range(min(k, top + 2)):
                if c not in used:
                    colour[v] = c
                    if place(i + 1):
                        return True
                    del colour[v]
            return False

        return place(0)

    k = 1
    while not colourable(k):
        k += 1
    return k


def brute_force_perfect(g: SimpleGraph) -> bool:
    """Every induced subgraph has clique number equal to chromatic number."""
    if g.n > BRUTE_FORCE_CAP:
        raise VertexCapExceeded(f"brute-force perfection limited to {BRUTE_FORCE_CAP} vertices")
    for mask in range(1, 1 << g.n):
        if clique_number(g.rows, mask) != chromatic_number(g.rows, mask):
            return False
    return True


from .certify import verify_certificate  # noqa: E402  re-export
