"""Search every choice of subgroups of the named orders for a forbidden
induced path / cycle in the S4 and A5 graphs.

The named witnesses for these groups are given by isomorphism type. This
script tries every subgroup of the matching order in every vertex order
and reports how many assignments validate, literal order first.
"""
import itertools

from isgraph.classes import ClassCertificate, verify_certificate
from isgraph.graphs import intersection_subgroup_graph_full
from isgraph.groups import element_order
from isgraph.theorems import group_data

# (order, cyclic?) per named subgroup; None means the order decides the type
CASES = [
    ("S4", "cograph", ((4, False), (6, None), (8, None), (2, None)), "(C2)^2, S3, D4, C2"),
    ("S4", "chordal", ((4, False), (6, None), (8, None), (3, None)), "(C2)^2, S3, D4, C3"),
    ("A5", "cograph", ((10, None), (12, None), (5, None), (6, None)), "D5, A4, C5, S3"),
    ("A5", "chordal", ((10, None), (12, None), (5, None), (4, False)), "D5, A4, C5, (C2)^2"),
]


def count(g, cls, pools):
    return sum(verify_certificate(g, ClassCertificate(cls, False, w)) for w in itertools.product(*pools))


def main() -> None:
    for spec, cls, orders, names in CASES:
        L = group_data(spec).lattice
        ig = intersection_subgroup_graph_full(L)
        g = ig.graph

        def cyclic(v):
            s = L[ig.subgroup_index[v]]
            return any(element_order(L.group, x) == s.order for x in s.elements)

        pools = [[v for v in range(g.n) if g.orders[v] == o and (c is None or cyclic(v) == c)] for o, c in orders]
        literal = count(g, cls, pools)
        anyorder = sum(count(g, cls, p) for p in itertools.permutations(pools))
        print(f"{spec} {cls:<8} {names:<22} literal order: {literal:>4}  any order: {anyorder:>4}")


if __name__ == "__main__":
    main()
