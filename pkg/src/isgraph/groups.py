"""Finite groups as explicit multiplication tables.

Every atom is realised by permutations (natural or regular action) and
compiled into a Cayley table by breadth-first closure over its generator
list; direct products are assembled from the factor tables in
lexicographic pair order.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Sequence, Union

import numpy as np

from .arithmetic import factorize, is_prime_power
from .errors import InvalidSpec, OrderCapExceeded, ParseError

DEFAULT_ORDER_CAP = 1024
ASSOCIATIVITY_CAP = 256

KINDS = ("C", "D", "Q", "S", "A", "E", "Heis")


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class Atom:
    kind: str  # one of KINDS
    n: int
    k: int = 1  # only used by E (rank)

    def __str__(self) -> str:
        if self.kind == "E":
            return f"E{self.n}^{self.k}"
        return f"{self.kind}{self.n}"

    @property
    def order(self) -> int:
        kind, n = self.kind, self.n
        if kind == "C":
            return n
        if kind == "D":
            return 2 * n
        if kind == "Q":
            return n
        if kind == "S":
            return math.factorial(n)
        if kind == "A":
            return max(1, math.factorial(n) // 2)
        if kind == "E":
            return n**self.k
        return n**3  # Heis

    def validate(self) -> None:
        kind, n = self.kind, self.n
        if kind not in KINDS:
            raise InvalidSpec(f"unknown group kind {kind!r}")
        if n < 1:
            raise InvalidSpec(f"{self}: parameter must be positive")
        if kind == "D" and n < 2:
            raise InvalidSpec(f"{self}: dihedral groups need n >= 2")
        if kind == "Q" and (n < 8 or n & (n - 1)):
            raise InvalidSpec(f"{self}: generalized quaternion order must be 2^a with a >= 3")
        if kind == "E":
            pp = is_prime_power(n) if n >= 2 else None
            if pp is None or pp[1] != 1:
                raise InvalidSpec(f"{self}: elementary abelian base must be prime")
            if self.k < 1:
                raise InvalidSpec(f"{self}: rank must be >= 1")
        if kind == "Heis":
            pp = is_prime_power(n) if n >= 2 else None
            if pp is None or pp[1] != 1 or n == 2:
                raise InvalidSpec(f"{self}: Heisenberg group needs an odd prime")


@dataclass(frozen=True)
class Product:
    factors: tuple[Atom, ...]

    def __str__(self) -> str:
        return "x".join(str(a) for a in self.factors)

    @property
    def order(self) -> int:
        return math.prod(a.order for a in self.factors)

    def validate(self) -> None:
        if len(self.factors) < 2:
            raise InvalidSpec("a product needs at least two factors")
        for a in self.factors:
            a.validate()


GroupSpec = Union[Atom, Product]


def make_spec(factors: Sequence[Atom]) -> GroupSpec:
    return factors[0] if len(factors) == 1 else Product(tuple(factors))


def spec_atoms(spec: GroupSpec) -> tuple[Atom, ...]:
    return spec.factors if isinstance(spec, Product) else (spec,)


_TOKEN = re.compile(r"(HEIS|[CDQSAE])(\d+)(?:\^(\d+))?", re.IGNORECASE)


def parse_spec(text: str) -> GroupSpec:
    """Parse e.g. ``"Q8xC3"``, ``"E2^3"`` or ``"heis 3"`` into a spec."""
    # keep original offsets for error messages
    chars = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    s = "".join(ch for _, ch in chars)
    if not s:
        raise ParseError("empty group spec", "", 0)

    def pos(j: int) -> int:
        return chars[j][0] if j < len(chars) else len(text)

    atoms = []
    j = 0
    while True:
        m = _TOKEN.match(s, j)
        if not m:
            tok = s[j : j + 5] or "<end>"
            raise ParseError(f"unexpected token {tok!r} at position {pos(j)}", tok, pos(j))
        kind = m.group(1).upper()
        kind = "Heis" if kind == "HEIS" else kind
        n = int(m.group(2))
        if kind == "E":
            if m.group(3) is None:
                raise ParseError(f"E{n} needs a rank '^k' at position {pos(m.end())}", m.group(0), pos(m.end()))
            atom = Atom("E", n, int(m.group(3)))
        else:
            if m.group(3) is not None:
                raise ParseError(f"'^' only allowed after E at position {pos(m.start(3) - 1)}", "^", pos(m.start(3) - 1))
            atom = Atom(kind, n)
        atoms.append(atom)
        j = m.end()
        if j == len(s):
            break
        if s[j] not in "xX":
            raise ParseError(f"expected 'x' at position {pos(j)}, got {s[j]!r}", s[j], pos(j))
        j += 1
    spec = make_spec(atoms)
    spec.validate()
    return spec


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    mul: np.ndarray  # int32, mul[x, y] = x*y
    inv: np.ndarray
    labels: tuple[str, ...]
    spec: GroupSpec | None = None
    perms: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)
    identity: int = 0

    def __repr__(self) -> str:
        return f"GroupTable({self.spec}, order={self.order})"

    @property
    def name(self) -> str:
        return str(self.spec) if self.spec is not None else f"group of order {self.order}"

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def cols(self) -> list[list[int]]:
        return self.mul.T.tolist()

    def power(self, x: int, k: int) -> int:
        out = 0
        for _ in range(k):
            out = int(self.mul[out, x])
        return out

    def element_by_perm(self, perm: Sequence[int]) -> int:
        if self.perms is None:
            raise InvalidSpec(f"{self.name} carries no permutation representation")
        return self.perms.index(tuple(perm))

    def element_by_cycles(self, cycles: str) -> int:
        """Locate an element of S_n / A_n written in 1-based cycle notation."""
        if self.perms is None:
            raise InvalidSpec(f"{self.name} carries no permutation representation")
        return self.element_by_perm(cycles_to_perm(cycles, len(self.perms[0])))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def restrict(self, members: Sequence[int]) -> "GroupTable":
        """Table of the subgroup on ``members`` (identity first, order kept)."""
        members = sorted(members)
        if members[0] != 0:
            raise InvalidSpec("subgroup members must contain the identity")
        index = {x: i for i, x in enumerate(members)}
        sub = self.mul[np.ix_(members, members)]
        mul = np.vectorize(index.__getitem__, otypes=[np.int32])(sub)
        inv = np.array([index[int(self.inv[x])] for x in members], dtype=np.int32)
        perms = tuple(self.perms[x] for x in members) if self.perms else None
        return _freeze(len(members), mul, inv, tuple(self.labels[x] for x in members), None, perms)


def _freeze(order, mul, inv, labels, spec, perms=None) -> GroupTable:
    mul = np.ascontiguousarray(mul, dtype=np.int32)
    inv = np.ascontiguousarray(inv, dtype=np.int32)
    mul.flags.writeable = False
    inv.flags.writeable = False
    return GroupTable(order, mul, inv, tuple(labels), spec, perms)


def cycles_to_perm(cycles: str, degree: int) -> tuple[int, ...]:
    perm = list(range(degree))
    for cyc in re.findall(r"\(([^)]*)\)", cycles):
        pts = [int(t) - 1 for t in re.split(r"[,\s]+", cyc.strip()) if t]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def perm_to_cycles(perm: Sequence[int]) -> str:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        out.append("(" + ",".join(cyc) + ")")
    return "".join(out) or "e"


def _compose(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # x*y acts as x first, then y
    return tuple(y[i] for i in x)


def _word_label(word: list[int], names: Sequence[str]) -> str:
    if not word:
        return "e"
    parts, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(names[word[i]] + (f"^{run}" if run > 1 else ""))
        i = j
    return "".join(parts)


def table_from_permutations(
    gens: Sequence[tuple[int, ...]],
    degree: int,
    names: Sequence[str] | None = None,
    spec: GroupSpec | None = None,
    cycle_labels: bool = False,
) -> GroupTable:
    """Closure of ``gens`` in breadth-first order, identity first."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens if tuple(g) != ident]
    names = list(names) if names else [chr(ord("a") + i) for i in range(len(gens))]
    elems = [ident]
    index = {ident: 0}
    parent = [-1]
    via = [-1]
    words: list[list[int]] = [[]]
    right = []  # right[x][g] = index of x*gen_g
    q = 0
    while q < len(elems):
        x = elems[q]
        row = []
        for gi, g in enumerate(gens):
            y = _compose(x, g)
            j = index.get(y)
            if j is None:
                j = len(elems)
                index[y] = j
                elems.append(y)
                parent.append(q)
                via.append(gi)
                words.append(words[q] + [gi])
            row.append(j)
        right.append(row)
        q += 1
    n = len(elems)
    right_arr = np.array(right, dtype=np.int64).reshape(n, len(gens))
    mul = np.empty((n, n), dtype=np.int64)
    mul[:, 0] = np.arange(n)
    # x * y = (x * parent(y)) * gen(y), columns filled in BFS order
    for y in range(1, n):
        mul[:, y] = right_arr[mul[:, parent[y]], via[y]]
    inv = np.argmax(mul == 0, axis=1)
    if cycle_labels:
        labels = [perm_to_cycles(p) for p in elems]
    else:
        labels = [_word_label(w, names) for w in words]
    return _freeze(n, mul, inv, labels, spec, tuple(elems))


def _regular_perms(order: int, mult, gens: Sequence[int]) -> list[tuple[int, ...]]:
    # right-regular action i -> i*g on an abstractly indexed element set
    return [tuple(mult(i, g) for i in range(order)) for g in gens]


def _atom_table(atom: Atom) -> GroupTable:
    kind, n = atom.kind, atom.n
    if kind == "C":
        gen = tuple((i + 1) % n for i in range(n))
        return table_from_permutations([gen], n, ["a"], atom)
    if kind == "D":
        # rotation/reflection of an n-gon plus an orientation bit (points n, n+1)
        deg = n + 2
        r = tuple([(i + 1) % n for i in range(n)] + [n, n + 1])
        s = tuple([(-i) % n for i in range(n)] + [n + 1, n])
        return table_from_permutations([r, s], deg, ["a", "b"], atom)
    if kind == "Q":
        m = n // 2  # x has order m, y^2 = x^(m/2), y x y^-1 = x^-1

        def qmul(u: int, v: int) -> int:
            i, j = divmod(u, 2)
            k, l = divmod(v, 2)
            e = (i + (-k if j else k)) % m
            if j and l:
                e = (e + m // 2) % m
            return 2 * e + ((j + l) % 2)

        return table_from_permutations(_regular_perms(n, qmul, [2, 1]), n, ["x", "y"], atom)
    if kind == "S":
        if n <= 1:
            return table_from_permutations([], max(n, 1), [], atom, cycle_labels=True)
        gens = [tuple(list(range(1, n)) + [0])]
        if n > 2:
            gens.append(tuple([1, 0] + list(range(2, n))))
        return table_from_permutations(gens, n, None, atom, cycle_labels=True)
    if kind == "A":
        gens = []
        for k in range(2, n):
            p = list(range(n))
            p[0], p[1], p[k] = 1, k, 0
            gens.append(tuple(p))
        return table_from_permutations(gens, max(n, 1), None, atom, cycle_labels=True)
    if kind == "E":
        p, k = n, atom.k
        gens = []
        for b in range(k):
            g = list(range(p * k))
            for i in range(p):
                g[b * p + i] = b * p + (i + 1) % p
            gens.append(tuple(g))
        names = [f"e{b + 1}" for b in range(k)] if k > 1 else ["a"]
        return table_from_permutations(gens, p * k, names, atom)
    if kind == "Heis":
        p = n

        # (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]]
        def code(a, b, c):
            return (a * p + b) * p + c

        def hmul(u: int, v: int) -> int:
            a1, r = divmod(u, p * p)
            b1, c1 = divmod(r, p)
            a2, r = divmod(v, p * p)
            b2, c2 = divmod(r, p)
            return code((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)

        gens = [code(1, 0, 0), code(0, 1, 0)]
        return table_from_permutations(_regular_perms(p**3, hmul, gens), p**3, ["x", "y"], atom)
    raise InvalidSpec(f"unknown kind {kind}")


def direct_product(a: GroupTable, b: GroupTable, spec: GroupSpec | None = None) -> GroupTable:
    """Elements are pairs ``(i, j)`` indexed ``i * |b| + j``."""
    na, nb = a.order, b.order
    mul = (a.mul[:, None, :, None].astype(np.int64) * nb + b.mul[None, :, None, :]).reshape(na * nb, na * nb)
    inv = (a.inv[:, None].astype(np.int64) * nb + b.inv[None, :]).reshape(-1)
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return _freeze(na * nb, mul, inv, labels, spec)


def build_group(spec: GroupSpec | str, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    spec.validate()
    if spec.order > order_cap:
        raise OrderCapExceeded(f"{spec} has order {spec.order} > cap {order_cap}")
    atoms = spec_atoms(spec)
    tables = [_atom_table(a) for a in atoms]
    if len(tables) == 1:
        return tables[0]
    out = reduce(direct_product, tables)
    return _freeze(out.order, out.mul, out.inv, out.labels, spec)


def element_order(G: GroupTable, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = int(G.mul[y, x])
        k += 1
    return k


def element_orders(G: GroupTable) -> list[int]:
    return [element_order(G, x) for x in range(G.order)]


def exponent(G: GroupTable) -> int:
    return reduce(math.lcm, element_orders(G), 1)


def check_associativity(G: GroupTable) -> bool:
    if G.order > ASSOCIATIVITY_CAP:
        raise OrderCapExceeded(f"associativity check limited to order {ASSOCIATIVITY_CAP}")
    m = G.mul
    # (xy)z vs x(yz) for all triples, one x at a time
    for x in range(G.order):
        left = m[m[x]]  # left[y, z] = (x*y)*z
        right = m[x][m]  # right[y, z] = x*(y*z)
        if not np.array_equal(left, right):
            return False
    return True


def check_table_invariants(G: GroupTable) -> bool:
    """Latin square, two-sided identity at index 0 and inverses."""
    n = G.order
    ref = np.arange(n)
    m = G.mul
    if not (np.array_equal(np.sort(m, axis=1), np.broadcast_to(ref, (n, n)))):
        return False
    if not np.array_equal(np.sort(m, axis=0), np.broadcast_to(ref[:, None], (n, n))):
        return False
    if not (np.array_equal(m[0], ref) and np.array_equal(m[:, 0], ref)):
        return False
    return bool(np.all(m[ref, G.inv] == 0))


def order_prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    return factorize(n).factors if n > 1 else ()
