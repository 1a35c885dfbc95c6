"""Subgroup lattices by join closure, plus the structural facts the
classification predicates are phrased in."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .arithmetic import factorize
from .errors import (
    MixedLattice,
    NotAPGroup,
    PrimeDoesNotDivideOrder,
    SubgroupCountCapExceeded,
)
from .groups import GroupTable, element_orders

DEFAULT_SUBGROUP_CAP = 100_000


def mask_elements(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _mask_from_bools(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


@dataclass(frozen=True, eq=False)
class Subgroup:
    members: int  # bit i set iff element i belongs
    order: int
    generators: tuple[int, ...]
    group: GroupTable = field(repr=False, compare=False)

    @cached_property
    def elements(self) -> list[int]:
        return mask_elements(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.group is self.group and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def is_trivial(self) -> bool:
        return self.members == 1

    def describe(self) -> str:
        gens = ",".join(self.group.labels[g] for g in self.generators) or "e"
        return f"<{gens}>"


def generate(G: GroupTable, gens: Iterable[int], base: Sequence[int] = (0,)) -> list[int]:
    """Elements of the subgroup generated by ``base`` (already a subgroup,
    identity first) together with ``gens``, by coset enumeration."""
    gens = [int(g) for g in gens]
    rows, cols = G.rows, G.cols
    H = list(base)
    inK = bytearray(G.order)
    for h in H:
        inK[h] = 1
    elems = list(H)
    reps = [0]
    i = 0
    while i < len(reps) and len(elems) < G.order:
        row = rows[reps[i]]
        for g in gens:
            y = row[g]
            if not inK[y]:
                col = cols[y]
                coset = [col[h] for h in H]
                for c in coset:
                    inK[c] = 1
                elems.extend(coset)
                reps.append(y)
        i += 1
    return elems


class SubgroupLattice:
    """All subgroups of ``group`` sorted by (order, member list)."""

    def __init__(self, group: GroupTable, subgroups: list[Subgroup]):
        self.group = group
        self.subgroups = subgroups
        self._index = {s.members: i for i, s in enumerate(subgroups)}

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def index_of(self, sub: Subgroup | int) -> int:
        mask = sub if isinstance(sub, int) else sub.members
        return self._index[mask]

    def find(self, mask: int) -> Subgroup:
        return self.subgroups[self._index[mask]]

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    def generated(self, gens: Iterable[int]) -> Subgroup:
        elems = generate(self.group, gens)
        return self.find(_mask_from_elements(elems))

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def whole(self) -> Subgroup:
        return self.subgroups[-1]

    def contained_in(self, sub: Subgroup) -> list[Subgroup]:
        return [s for s in self.subgroups if s.members & ~sub.members == 0]

    @cached_property
    def element_orders(self) -> list[int]:
        return element_orders(self.group)

    def to_json(self) -> list[dict]:
        return [
            {"order": s.order, "members": s.elements, "generators": list(s.generators)}
            for s in self.subgroups
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _mask_from_elements(elems: Iterable[int]) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


def cyclic_subgroup_elements(G: GroupTable, x: int) -> list[int]:
    out, y = [0], x
    while y != 0:
        out.append(y)
        y = int(G.mul[y, x])
    return out


def enumerate_subgroups(
    G: GroupTable,
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
    seed_order: Sequence[int] | None = None,
) -> SubgroupLattice:
    """Join closure: start from cyclic subgroups and add one cyclic
    subgroup of prime-power order at a time until nothing new appears.

    ``seed_order`` permutes the element scan (used to test determinism).
    """
    orders = element_orders(G)
    scan = list(seed_order) if seed_order is not None else range(G.order)
    found: dict[int, tuple[list[int], tuple[int, ...]]] = {}
    cyclic: list[tuple[int, int]] = []  # (generator, mask), prime-power order only
    for x in scan:
        elems = cyclic_subgroup_elements(G, x)
        mask = _mask_from_elements(elems)
        if mask in found:
            continue
        found[mask] = (elems, (x,) if x else ())
        o = orders[x]
        if o > 1 and len(factorize(o).factors) == 1:
            cyclic.append((x, mask))
    queue = list(found)
    q = 0
    while q < len(queue):
        hmask = queue[q]
        q += 1
        helems, hgens = found[hmask]
        for x, cmask in cyclic:
            if cmask & ~hmask == 0:
                continue
            elems = generate(G, [*hgens, x], helems)
            kmask = _mask_from_elements(elems)
            if kmask in found:
                continue
            found[kmask] = (sorted(elems), (*hgens, x))
            queue.append(kmask)
            if len(found) > subgroup_cap:
                raise SubgroupCountCapExceeded(
                    f"{G.name}: more than {subgroup_cap} subgroups"
                )
    subs = []
    for mask, (elems, gens) in found.items():
        elems = sorted(elems)
        subs.append((len(elems), elems, mask, gens))
    subs.sort(key=lambda t: (t[0], t[1]))
    return SubgroupLattice(G, [Subgroup(m, o, g, G) for o, _, m, g in subs])


def intersect(A: Subgroup, B: Subgroup, lattice: SubgroupLattice | None = None) -> Subgroup:
    if A.group is not B.group:
        raise MixedLattice("subgroups come from different groups")
    mask = A.members & B.members
    if lattice is not None:
        return lattice.find(mask)
    elems = mask_elements(mask)
    return Subgroup(mask, len(elems), (), A.group)


def sylow_subgroups(L: SubgroupLattice, p: int) -> list[Subgroup]:
    n = L.group.order
    if n % p:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide {n}")
    pa = p ** dict(factorize(n).factors)[p]
    return [s for s in L if s.order == pa]


# ---------------------------------------------------------------------------
# structural facts


def _frattini_rank(subs: Sequence[Subgroup], whole: Subgroup, p: int) -> int:
    if whole.order == 1:
        return 0
    maximal = [s for s in subs if s.order * p == whole.order]
    phi = reduce(lambda a, b: a & b, (s.members for s in maximal), whole.members)
    phi_order = bin(phi).count("1")
    return round(math.log(whole.order // phi_order, p))


def powers_set(G: GroupTable, members: Iterable[int], k: int) -> set[int]:
    return {G.power(x, k) for x in members}


def abelian_invariants(G: GroupTable, members: Sequence[int], p: int) -> tuple[int, ...]:
    """Exponents ``(k1 >= k2 >= ...)`` of an abelian p-group given by its
    members, read off from the sizes of its p^i-th power subgroups."""
    sizes = []
    cur = list(members)
    while True:
        sizes.append(len(cur))
        if len(cur) == 1:
            break
        cur = sorted(powers_set(G, cur, p))
    # sizes[i] = |G^(p^i)|; number of invariants > i is log_p(sizes[i]/sizes[i+1])
    counts = [round(math.log(sizes[i] // sizes[i + 1], p)) for i in range(len(sizes) - 1)]
    inv = []
    for i, c in enumerate(counts):
        nxt = counts[i + 1] if i + 1 < len(counts) else 0
        inv.extend([i + 1] * (c - nxt))
    return tuple(sorted(inv, reverse=True))


def _subset_abelian(G: GroupTable, elems: Sequence[int]) -> bool:
    sub = G.mul[np.ix_(elems, elems)]
    return bool(np.array_equal(sub, sub.T))


@dataclass(frozen=True)
class SylowInfo:
    prime: int
    alpha: int
    count: int  # number of Sylow p-subgroups
    is_cyclic: bool
    is_generalized_quaternion: bool
    is_abelian: bool
    exponent: int
    min_generators: int
    invariants: tuple[int, ...] | None  # abelian type when abelian

    @property
    def order(self) -> int:
        return self.prime**self.alpha

    @property
    def kind(self) -> str:
        if self.is_cyclic:
            return "cyclic"
        if self.is_generalized_quaternion:
            return "generalized_quaternion"
        if self.exponent == self.prime and self.min_generators == 2:
            return "2gen_exponent_p"
        return "other"


@dataclass(frozen=True)
class StructuralProfile:
    order: int
    factors: tuple[tuple[int, int], ...]
    is_cyclic: bool
    is_abelian: bool
    is_nilpotent: bool
    is_p_group: bool
    is_generalized_quaternion: bool
    exponent: int
    min_generators: int | str
    sylow: tuple[SylowInfo, ...]
    is_solvable: bool = True

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def sylow_for(self, p: int) -> SylowInfo:
        for s in self.sylow:
            if s.prime == p:
                return s
        raise KeyError(p)

    @property
    def sylow_summary(self) -> dict[int, str]:
        return {s.prime: s.kind for s in self.sylow}

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "factors": [list(f) for f in self.factors],
            "is_cyclic": self.is_cyclic,
            "is_abelian": self.is_abelian,
            "is_nilpotent": self.is_nilpotent,
            "is_p_group": self.is_p_group,
            "is_generalized_quaternion": self.is_generalized_quaternion,
            "exponent": self.exponent,
            "min_generators": self.min_generators,
            "sylow_summary": {str(k): v for k, v in self.sylow_summary.items()},
            "is_solvable": self.is_solvable,
        }


def _p_subgroup_info(L: SubgroupLattice, S: Subgroup, p: int, alpha: int, count: int) -> SylowInfo:
    G = L.group
    orders = L.element_orders
    elems = S.elements
    exp = reduce(math.lcm, (orders[x] for x in elems), 1)
    cyclic = exp == S.order
    subs = L.contained_in(S)
    d = _frattini_rank(subs, S, p)
    n_involution_subgroups = sum(1 for s in subs if s.order == 2)
    gq = p == 2 and S.order >= 8 and not cyclic and n_involution_subgroups == 1
    abelian = _subset_abelian(G, elems)
    inv = abelian_invariants(G, elems, p) if abelian and S.order > 1 else (() if abelian else None)
    return SylowInfo(p, alpha, count, cyclic, gq, abelian, exp, d, inv)


def min_generators(L: SubgroupLattice) -> int | str:
    """Exact via the Frattini quotient for p-groups; otherwise the least
    ``k <= 3`` with some ``k`` elements generating, or ``">3"``."""
    G = L.group
    n = G.order
    if n == 1:
        return 0
    f = factorize(n).factors
    if len(f) == 1:
        return _frattini_rank(L.subgroups, L.whole, f[0][0])
    orders = L.element_orders
    if max(orders) == n:
        return 1
    cyclic_gens, seen = [], set()
    for x in range(1, n):
        mask = _mask_from_elements(cyclic_subgroup_elements(G, x))
        if mask not in seen:
            seen.add(mask)
            cyclic_gens.append(x)
    two_gen: dict[int, list[int]] = {}
    for i, x in enumerate(cyclic_gens):
        base = cyclic_subgroup_elements(G, x)
        for y in cyclic_gens[i + 1 :]:
            elems = generate(G, [x, y], base)
            if len(elems) == n:
                return 2
            two_gen.setdefault(_mask_from_elements(elems), elems)
    for elems in two_gen.values():
        base = sorted(elems)
        gens = L.find(_mask_from_elements(base)).generators
        for z in cyclic_gens:
            if z in elems:
                continue
            if len(generate(G, [*gens, z], base)) == n:
                return 3
    return ">3"


def is_solvable(G: GroupTable) -> bool:
    """Derived series reaches the identity."""
    rows, inv = G.rows, G.inv
    current = list(range(G.order))
    while len(current) > 1:
        comms = {rows[rows[inv[x]][inv[y]]][rows[x][y]] for x in current for y in current}
        nxt = generate(G, sorted(comms))
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def structural_profile(L: SubgroupLattice) -> StructuralProfile:
    G = L.group
    n = G.order
    factors = factorize(n).factors if n > 1 else ()
    orders = L.element_orders
    exp = reduce(math.lcm, orders, 1)
    sylow = []
    for p, a in factors:
        syl = sylow_subgroups(L, p)
        sylow.append(_p_subgroup_info(L, syl[0], p, a, len(syl)))
    is_p = len(factors) <= 1
    gq = is_p and bool(sylow) and sylow[0].is_generalized_quaternion
    return StructuralProfile(
        order=n,
        factors=tuple(factors),
        is_cyclic=exp == n,
        is_abelian=G.is_abelian(),
        is_nilpotent=all(s.count == 1 for s in sylow),
        is_p_group=is_p,
        is_generalized_quaternion=gq,
        exponent=exp,
        min_generators=min_generators(L),
        sylow=tuple(sylow),
        is_solvable=is_solvable(G),
    )


def cyclic_profile(n: int) -> StructuralProfile:
    """Profile of C_n straight from the factorization of ``n``."""
    factors = factorize(n).factors if n > 1 else ()
    sylow = tuple(
        SylowInfo(p, a, 1, True, False, True, p**a, 1, (a,)) for p, a in factors
    )
    return StructuralProfile(
        order=n,
        factors=tuple(factors),
        is_cyclic=True,
        is_abelian=True,
        is_nilpotent=True,
        is_p_group=len(factors) <= 1,
        is_generalized_quaternion=False,
        exponent=n,
        min_generators=1 if n > 1 else 0,
        sylow=sylow,
    )


def kulakoff_check(L: SubgroupLattice) -> bool:
    n = L.group.order
    f = factorize(n).factors if n > 1 else ()
    if len(f) != 1:
        raise NotAPGroup(f"{L.group.name} is not a p-group")
    p, alpha = f[0]
    counts = {}
    for s in L:
        counts[s.order] = counts.get(s.order, 0) + 1
    return all(counts.get(p**b, 0) % p == 1 for b in range(1, alpha))


def subgroup_counts_by_order(L: SubgroupLattice) -> dict[int, int]:
    counts: dict[int, int] = {}
    for s in L:
        counts[s.order] = counts.get(s.order, 0) + 1
    return counts
