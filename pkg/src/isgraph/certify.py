"""Independent certificate checker.

Everything here is re-derived from the adjacency relation and the class
definitions; nothing is imported from the recognizers.
"""
from __future__ import annotations

from .graphs import SimpleGraph


def _adj(g: SimpleGraph, i: int, j: int) -> bool:
    return i != j and bool((g.rows[i] >> j) & 1)


def _distinct_in_range(g: SimpleGraph, vs) -> bool:
    return len(set(vs)) == len(vs) and all(isinstance(v, int) and 0 <= v < g.n for v in vs)


def _is_induced_cycle(g: SimpleGraph, cyc, adj) -> bool:
    k = len(cyc)
    for a in range(k):
        for b in range(a + 1, k):
            should = b == a + 1 or (a == 0 and b == k - 1)
            if adj(cyc[a], cyc[b]) != should:
                return False
    return True


def check_triangle(g: SimpleGraph, w) -> bool:
    return len(w) == 3 and _distinct_in_range(g, w) and _adj(g, w[0], w[1]) and _adj(g, w[1], w[2]) and _adj(g, w[0], w[2])


def check_induced_path(g: SimpleGraph, w) -> bool:
    if not _distinct_in_range(g, w):
        return False
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            if _adj(g, w[a], w[b]) != (b == a + 1):
                return False
    return True


def check_claw(g: SimpleGraph, w) -> bool:
    if len(w) != 4 or not _distinct_in_range(g, w):
        return False
    c, leaves = w[0], w[1:]
    if not all(_adj(g, c, x) for x in leaves):
        return False
    return not any(_adj(g, leaves[a], leaves[b]) for a in range(3) for b in range(a + 1, 3))


def check_odd_cycle(g: SimpleGraph, w) -> bool:
    """A cycle (chords allowed) of odd length."""
    k = len(w)
    if k < 3 or k % 2 == 0 or not _distinct_in_range(g, w):
        return False
    return all(_adj(g, w[i], w[(i + 1) % k]) for i in range(k))


def check_chordless_cycle(g: SimpleGraph, w, min_len: int = 4) -> bool:
    if len(w) < min_len or not _distinct_in_range(g, w):
        return False
    return _is_induced_cycle(g, w, lambda i, j: _adj(g, i, j))


def check_odd_hole(g: SimpleGraph, w, side: str = "graph") -> bool:
    if len(w) < 5 or len(w) % 2 == 0 or not _distinct_in_range(g, w):
        return False
    if side == "graph":
        adj = lambda i, j: _adj(g, i, j)  # noqa: E731
    elif side == "complement":
        adj = lambda i, j: i != j and not _adj(g, i, j)  # noqa: E731
    else:
        return False
    return _is_induced_cycle(g, w, adj)


def check_coloring(g: SimpleGraph, colour) -> bool:
    if len(colour) != g.n or any(c not in (0, 1) for c in colour):
        return False
    return all(colour[i] != colour[j] for i in range(g.n) for j in range(i + 1, g.n) if _adj(g, i, j))


def check_peo(g: SimpleGraph, order) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in range(g.n) if _adj(g, v, u) and pos[u] > pos[v]]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not _adj(g, later[a], later[b]):
                    return False
    return True


def verify_certificate(g: SimpleGraph, cert) -> bool:
    """Re-check a :class:`ClassCertificate` against ``g`` from definitions."""
    name = cert.class_name
    w = list(cert.witness)
    ev = cert.evidence or {}
    if cert.verdict:
        if name == "bipartite" and "coloring" in ev:
            return check_coloring(g, ev["coloring"])
        if name == "chordal" and "peo" in ev:
            return check_peo(g, ev["peo"])
        # a positive verdict without evidence has nothing to refute
        return not w
    if name == "triangle_free":
        return check_triangle(g, w)
    if name == "cluster":
        return len(w) == 3 and check_induced_path(g, w)
    if name == "claw_free":
        return check_claw(g, w)
    if name == "cograph":
        return len(w) == 4 and check_induced_path(g, w)
    if name == "bipartite":
        return check_odd_cycle(g, w)
    if name == "chordal":
        return check_chordless_cycle(g, w)
    if name == "perfect":
        return check_odd_hole(g, w, cert.side or "graph")
    return False
