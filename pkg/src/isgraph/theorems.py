"""Classification statements as structural predicates, the group catalog,
and the harness that compares predictions with computed graph classes.

Nilpotent groups are direct products of their Sylow subgroups, so every
"G is isomorphic to X x Y" clause is decided Sylow-wise from a
:class:`StructuralProfile`.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .arithmetic import is_prime_power
from .classes import CLASS_NAMES, DEFAULT_PERFECT_CAP, ClassCertificate, classify
from .errors import CapExceeded, PreconditionViolated
from .graphs import SimpleGraph, cyclic_intersection_graph, intersection_subgroup_graph
from .groups import DEFAULT_ORDER_CAP, build_group, parse_spec, spec_atoms
from .lattice import (
    StructuralProfile,
    SubgroupLattice,
    SylowInfo,
    abelian_invariants,
    cyclic_profile,
    enumerate_subgroups,
    structural_profile,
)

FIRM = "firm"
AMBIGUOUS = "paper-ambiguous"
NECESSARY_ONLY = "necessary-only-pass"


# ---------------------------------------------------------------------------
# profile helpers


def _two_part(profile: StructuralProfile) -> SylowInfo | None:
    for s in profile.sylow:
        if s.prime == 2:
            return s
    return None


def _odd_parts(profile: StructuralProfile) -> list[SylowInfo]:
    return [s for s in profile.sylow if s.prime != 2]


def _gq(s: SylowInfo | None) -> bool:
    return s is not None and s.is_generalized_quaternion


def _two_gen_exp_p(s: SylowInfo) -> bool:
    """Non-cyclic, 2-generated, exponent p."""
    return not s.is_cyclic and s.min_generators == 2 and s.exponent == s.prime


def _need_nilpotent(profile: StructuralProfile, allow_p_group: bool = True) -> None:
    if not profile.is_nilpotent:
        raise PreconditionViolated("predicate needs a nilpotent group")
    if not allow_p_group and profile.is_p_group:
        raise PreconditionViolated("predicate needs a group that is not a p-group")


# ---------------------------------------------------------------------------
# predicates


def perfect_reading(profile: StructuralProfile) -> tuple[bool, str, str]:
    """(prediction, status, note) for the nilpotent perfectness statement."""
    _need_nilpotent(profile, allow_p_group=False)
    k = len(profile.primes)
    two = _two_part(profile)
    odd = _odd_parts(profile)
    odd_cyclic = all(s.is_cyclic for s in odd)
    noncyclic_odd = [s for s in odd if not s.is_cyclic]
    if profile.is_cyclic:
        ok = k <= 4
        return ok, FIRM, "cyclic" if ok else "more than four primes"
    if k >= 5:
        return False, FIRM, "more than four primes"
    if _gq(two) and odd_cyclic:
        # Q x cyclic: the lemma's statement says "not perfect", its proof
        # and the theorem say perfect; the theorem is followed
        return True, AMBIGUOUS, "Q x cyclic; statement/proof conflict, theorem reading used"
    if k == 4:
        return False, FIRM, "four primes, not cyclic and not Q x cyclic"
    # below four primes the statement's "only if" has no supporting argument;
    # a group that fits a listed shape once the prime roles / parity
    # restrictions are dropped is an omitted analogue
    parts = list(profile.sylow)
    noncyclic = [s for s in parts if not s.is_cyclic]
    if k == 3:
        if two is not None and len(noncyclic_odd) == 1:
            if two.is_cyclic and sum(s.is_cyclic for s in odd) == 1:
                return True, FIRM, "C_{2^a q^b} x R, any odd prime carries R"
            if _gq(two) and sum(s.is_cyclic for s in odd) == 1:
                return True, FIRM, "Q x C_{q^b} x R"
        if len(noncyclic) == 1:
            return False, AMBIGUOUS, "analogue of C x C x R with another prime carrying R"
        return False, FIRM, "three primes, outside the listed forms"
    # k == 2
    p, q = parts
    if two is None:
        # P x Q with both odd: any cyclic / non-cyclic combination is listed
        return True, FIRM, "two odd primes"
    other = q if p is two else p
    if _gq(two) and not other.is_cyclic:
        return True, FIRM, "Q x K with K non-cyclic"
    if two.is_cyclic and not other.is_cyclic:
        # covered by the cyclic-times-non-cyclic lemma but not the theorem list
        return True, AMBIGUOUS, "C_{2^a} x K: lemma says perfect, theorem list omits it"
    return False, AMBIGUOUS, "analogue of P x C / P x Q with the non-cyclic part at p = 2"


def predicate_perfect_nilpotent(profile: StructuralProfile) -> bool:
    return perfect_reading(profile)[0]


def predicate_triangle_free_nilpotent(profile: StructuralProfile) -> bool:
    _need_nilpotent(profile)
    if profile.is_p_group:
        return profile.is_cyclic or profile.is_generalized_quaternion or profile.order == 1
    if len(profile.primes) != 2:
        return False
    if profile.is_cyclic:
        return True
    two = _two_part(profile)
    return _gq(two) and all(s.is_cyclic for s in _odd_parts(profile))


def predicate_bipartite_nilpotent(profile: StructuralProfile) -> bool:
    # identical statement to the triangle-free one
    return predicate_triangle_free_nilpotent(profile)


def predicate_cluster_nilpotent(profile: StructuralProfile) -> bool:
    _need_nilpotent(profile)
    if profile.is_p_group:
        if profile.is_cyclic or profile.is_generalized_quaternion:
            return True
        return profile.exponent == profile.primes[0] and profile.min_generators == 2
    return profile.is_cyclic and len(profile.factors) == 2 and all(a == 1 for _, a in profile.factors)


def clawfree_reading(profile: StructuralProfile) -> tuple[bool, str, str]:
    _need_nilpotent(profile)
    if profile.is_p_group:
        if profile.is_cyclic or profile.is_generalized_quaternion:
            return True, FIRM, "cyclic or generalized quaternion"
        p = profile.primes[0]
        d = profile.min_generators
        if profile.exponent == p and d == 3:
            return True, FIRM, "3-generated, exponent p"
        if profile.exponent == p and d == 2:
            return True, AMBIGUOUS, "exponent p, d = 2 counted under the d <= 3 reading"
        if d == 2 and profile.exponent == p * p:
            return True, FIRM, "2-generated, exponent p^2"
        return False, FIRM, "p-group outside the listed forms"
    k = len(profile.primes)
    if profile.is_cyclic:
        if k == 2:
            return True, FIRM, "C_{p^a q^b}"
        if k == 3 and all(a == 1 for _, a in profile.factors):
            return True, FIRM, "C_pqr"
        return False, FIRM, "cyclic, outside the listed forms"
    if k == 2:
        a, b = profile.sylow
        for P, C in ((a, b), (b, a)):
            if _two_gen_exp_p(P) and C.is_cyclic and C.alpha == 1:
                return True, FIRM, "P x C_q with P 2-generated of exponent p"
    return False, FIRM, "outside the listed forms"


def predicate_clawfree_nilpotent(profile: StructuralProfile) -> bool:
    return clawfree_reading(profile)[0]


def predicate_cograph(profile: StructuralProfile) -> bool:
    _need_nilpotent(profile)
    if profile.is_p_group:
        return profile.is_cyclic or profile.is_generalized_quaternion or profile.min_generators in (0, 1, 2)
    if len(profile.primes) != 2:
        return False
    if profile.is_cyclic:
        return True
    two = _two_part(profile)
    return _gq(two) and all(s.is_cyclic for s in _odd_parts(profile))


def _abelian_subgroup_types(L: SubgroupLattice, p: int) -> set[tuple[int, ...]]:
    """Abelian invariants (exponents, descending) of the abelian subgroups."""
    G = L.group
    rows = G.rows
    out = set()
    for s in L:
        if s.order == 1:
            continue
        el = s.elements
        if all(rows[x][y] == rows[y][x] for i, x in enumerate(el) for y in el[i + 1 :]):
            out.add(tuple(sorted(abelian_invariants(G, el, p), reverse=True)))
    return out


def _has_section(types: Iterable[tuple[int, ...]], pattern) -> bool:
    return any(pattern(t) for t in types)


def predicate_chordal(profile: StructuralProfile, lattice: SubgroupLattice | None = None):
    """True / False / :data:`NECESSARY_ONLY` (passes necessary conditions)."""
    k = len(profile.primes)
    if profile.order == 1 or (profile.is_p_group and profile.is_cyclic):
        return True
    if profile.is_p_group:
        p = profile.primes[0]
        if profile.is_abelian:
            inv = _abelian_type(profile)
            return (len(inv) == 2 and inv[1] == 1) or inv == (1, 1, 1)
        d = profile.min_generators
        if profile.is_generalized_quaternion:
            return NECESSARY_ONLY
        if lattice is None:
            raise PreconditionViolated("non-abelian p-groups need the lattice")
        types = _abelian_subgroup_types(lattice, p)
        if d == 2:
            bad = _has_section(types, lambda t: sum(1 for e in t if e > 1) >= 2)
        elif d == 3:
            bad = _has_section(types, lambda t: len(t) >= 3 and t[0] > 1)
        else:
            return False
        return False if bad else NECESSARY_ONLY
    if profile.is_nilpotent:
        if k == 3:
            return profile.is_cyclic and all(a == 1 for _, a in profile.factors)
        if k != 2:
            return False
        a, b = profile.sylow
        if profile.is_cyclic:
            return a.alpha == 1 or b.alpha == 1
        for P, C in ((a, b), (b, a)):
            if C.is_cyclic and C.alpha == 1 and (_gq(P) or _two_gen_exp_p(P)):
                return True
        return False
    if profile.is_solvable:
        alphas = sorted(a for _, a in profile.factors)
        if k == 3 and alphas == [1, 1, 1]:
            return NECESSARY_ONLY
        if k == 2 and alphas[0] == 1:
            return NECESSARY_ONLY
        return False
    raise PreconditionViolated("no chordality statement covers non-solvable groups outside the named families")


def _abelian_type(profile: StructuralProfile) -> tuple[int, ...]:
    s = profile.sylow[0]
    return tuple(sorted(s.invariants or (), reverse=True))


def predicate_dihedral(n: int, class_name: str) -> bool:
    if class_name not in ("cograph", "chordal"):
        raise PreconditionViolated(f"no dihedral statement for {class_name}")
    return is_prime_power(n) is not None


def predicate_symmetric(n: int, class_name: str) -> bool:
    if class_name not in ("cograph", "chordal"):
        raise PreconditionViolated(f"no symmetric-group statement for {class_name}")
    return n == 3


def predicate_alternating(n: int, class_name: str) -> bool:
    if class_name not in ("cograph", "chordal"):
        raise PreconditionViolated(f"no alternating-group statement for {class_name}")
    return n <= 4


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class ClassificationClaim:
    group_spec: str
    class_name: str
    predicted: bool
    source: str
    status: str = FIRM
    reading: str = ""

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CatalogConfig:
    max_order: int = 60
    perfect_cap: int = DEFAULT_PERFECT_CAP
    elementary_rank_cap: int = 4
    order_cap: int = DEFAULT_ORDER_CAP


@dataclass(frozen=True)
class GroupData:
    spec: str
    profile: StructuralProfile
    graph: SimpleGraph
    lattice: SubgroupLattice | None


def _is_pure_cyclic(spec: str) -> int | None:
    atoms = spec_atoms(parse_spec(spec))
    if len(atoms) == 1 and atoms[0].kind == "C":
        return atoms[0].n
    return None


def group_data(spec: str, order_cap: int = DEFAULT_ORDER_CAP) -> GroupData:
    """Profile and graph for ``spec``; pure cyclic specs skip the table."""
    return _group_data(spec, order_cap)


@lru_cache(maxsize=1024)
def _group_data(spec: str, order_cap: int) -> GroupData:
    n = _is_pure_cyclic(spec)
    if n is not None and n >= 2:
        return GroupData(spec, cyclic_profile(n), cyclic_intersection_graph(n), None)
    G = build_group(spec, order_cap=order_cap)
    L = enumerate_subgroups(G)
    return GroupData(spec, structural_profile(L), intersection_subgroup_graph(L), L)


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, math.isqrt(p) + 1))]


def _sylow_constructors(p: int, max_order: int, rank_cap: int) -> list[tuple[str, int, bool]]:
    """(spec, order, cyclic) for the p-group building blocks up to ``max_order``."""
    out = []
    a = 1
    while p**a <= max_order:
        out.append((f"C{p**a}", p**a, True))
        a += 1
    a = 3
    while p == 2 and 2**a <= max_order:
        out.append((f"Q{2**a}", 2**a, False))
        a += 1
    k = 2
    while k <= rank_cap and p**k <= max_order:
        out.append((f"E{p}^{k}", p**k, False))
        k += 1
    if p > 2 and p**3 <= max_order:
        out.append((f"Heis{p}", p**3, False))
    return out


def catalog_specs(cfg: CatalogConfig) -> list[tuple[str, str]]:
    """(spec, family) pairs in catalog order."""
    m = cfg.max_order
    out: list[tuple[str, str]] = []
    out += [(f"C{n}", "cyclic") for n in range(2, m + 1)]
    out += [(f"D{n}", "dihedral") for n in range(2, m // 2 + 1)]
    a = 3
    while 2**a <= m:
        out.append((f"Q{2**a}", "quaternion"))
        a += 1
    for n in range(3, 6):
        if math.factorial(n) <= m:
            out.append((f"S{n}", "symmetric"))
        if math.factorial(n) // 2 <= m:
            out.append((f"A{n}", "alternating"))
    primes = _primes_upto(m)
    for p in primes:
        for k in range(2, cfg.elementary_rank_cap + 1):
            if p**k <= m:
                out.append((f"E{p}^{k}", "elementary"))
    for p in primes:
        k = 2
        while p ** (k + 1) <= m:
            out.append((f"C{p**k}xC{p}", "abelian-p"))
            k += 1
    for p in primes:
        if p > 2 and p**3 <= m:
            out.append((f"Heis{p}", "heisenberg"))
    out += [(s, "nilpotent-product") for s in _nilpotent_products(primes, cfg)]
    return out


def _nilpotent_products(primes: list[int], cfg: CatalogConfig) -> list[str]:
    m = cfg.max_order
    blocks = {p: _sylow_constructors(p, m, cfg.elementary_rank_cap) for p in primes}
    found: list[str] = []

    def rec(idx: int, chosen: list[tuple[str, int, bool]], order: int) -> None:
        if len(chosen) >= 2 and any(not c for _, _, c in chosen):
            found.append("x".join(s for s, _, _ in chosen))
        for j in range(idx, len(primes)):
            p = primes[j]
            if order * p > m:
                break
            for spec, o, cyc in blocks[p]:
                if order * o <= m:
                    rec(j + 1, chosen + [(spec, o, cyc)], order * o)

    rec(0, [], 1)
    return found


def _family_claims(spec: str, family: str, n: int, cfg: CatalogConfig) -> dict[str, ClassificationClaim]:
    claims = {}
    if family == "dihedral":
        for cls in ("cograph", "chordal"):
            claims[cls] = ClassificationClaim(spec, cls, predicate_dihedral(n, cls), f"dihedral {cls} statement", FIRM, "n prime power")
    elif family == "symmetric":
        for cls in ("cograph", "chordal"):
            claims[cls] = ClassificationClaim(spec, cls, predicate_symmetric(n, cls), f"symmetric {cls} statement", FIRM, "n = 3")
    elif family == "alternating":
        for cls in ("cograph", "chordal"):
            claims[cls] = ClassificationClaim(spec, cls, predicate_alternating(n, cls), f"alternating {cls} statement", FIRM, "n <= 4")
    return claims


def claims_for(spec: str, family: str, data: GroupData, cfg: CatalogConfig) -> list[ClassificationClaim]:
    prof = data.profile
    atoms = spec_atoms(parse_spec(spec))
    claims = _family_claims(spec, family, atoms[0].n, cfg)

    def add(cls: str, predicted: bool, source: str, status: str = FIRM, reading: str = "") -> None:
        if cls not in claims:
            claims[cls] = ClassificationClaim(spec, cls, bool(predicted), source, status, reading)

    if prof.is_nilpotent:
        add("triangle_free", predicate_triangle_free_nilpotent(prof), "nilpotent triangle-free statement")
        add("bipartite", predicate_bipartite_nilpotent(prof), "nilpotent bipartite corollary")
        add("cluster", predicate_cluster_nilpotent(prof), "nilpotent cluster statement")
        v, st, note = clawfree_reading(prof)
        add("claw_free", v, "nilpotent claw-free statement", st, note)
        src = "p-group cograph proposition" if prof.is_p_group else "nilpotent cograph statement"
        add("cograph", predicate_cograph(prof), src)
        ch = predicate_chordal(prof, data.lattice)
        if ch is not NECESSARY_ONLY:
            src = "p-group chordal propositions" if prof.is_p_group else "nilpotent chordal statement"
            add("chordal", ch, src)
        if data.graph.n <= cfg.perfect_cap:
            if prof.is_p_group:
                # no direct statement; inherited from a class contained in the perfect graphs
                derived = [c for c in ("cograph", "chordal", "bipartite") if c in claims and claims[c].predicted and claims[c].status == FIRM]
                if prof.is_cyclic or prof.is_generalized_quaternion:
                    add("perfect", True, "empty graph for cyclic / quaternion p-groups")
                elif derived:
                    add("perfect", True, f"implied by the {derived[0]} prediction")
            else:
                v, st, note = perfect_reading(prof)
                add("perfect", v, "nilpotent perfect statement", st, note)
    elif prof.is_solvable and "chordal" not in claims:
        ch = predicate_chordal(prof, data.lattice)
        if ch is NECESSARY_ONLY:
            add("chordal", True, "solvable chordal statement", AMBIGUOUS, "order form passes; statement proven as necessary only")
        else:
            add("chordal", ch, "solvable chordal statement", FIRM, "order form fails")
    return [claims[c] for c in CLASS_NAMES if c in claims]


def build_catalog(max_order: int | CatalogConfig = 60) -> list[ClassificationClaim]:
    cfg = max_order if isinstance(max_order, CatalogConfig) else CatalogConfig(max_order=max_order)
    out = []
    for spec, family in catalog_specs(cfg):
        out.extend(claims_for(spec, family, group_data(spec, cfg.order_cap), cfg))
    return out


# ---------------------------------------------------------------------------
# harness


@dataclass
class VerificationRow:
    claim: ClassificationClaim
    computed: bool
    certificate: ClassCertificate

    @property
    def agreement(self) -> bool:
        return self.claim.predicted == self.computed

    def to_json(self) -> dict:
        return {
            "claim": self.claim.to_json(),
            "computed": self.computed,
            "agreement": self.agreement,
            "certificate": self.certificate.to_json(),
        }


@dataclass
class VerificationReport:
    rows: list[VerificationRow] = field(default_factory=list)

    @property
    def discrepancies(self) -> list[VerificationRow]:
        return [r for r in self.rows if not r.agreement]

    @property
    def firm_discrepancies(self) -> list[VerificationRow]:
        return [r for r in self.discrepancies if r.claim.status == FIRM]

    def summary(self) -> dict:
        firm = [r for r in self.rows if r.claim.status == FIRM]
        amb = [r for r in self.rows if r.claim.status != FIRM]
        return {
            "claims": len(self.rows),
            "groups": len({r.claim.group_spec for r in self.rows}),
            "firm": len(firm),
            "firm_agree": sum(r.agreement for r in firm),
            "firm_discrepancies": len(self.firm_discrepancies),
            "ambiguous": len(amb),
            "ambiguous_agree": sum(r.agreement for r in amb),
        }

    def to_json(self) -> dict:
        return {
            "summary": self.summary(),
            "discrepancies": [r.to_json() for r in self.discrepancies],
            "rows": [r.to_json() for r in self.rows],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_text(self) -> str:
        s = self.summary()
        lines = [
            f"groups {s['groups']}  claims {s['claims']}",
            f"firm {s['firm']}  agree {s['firm_agree']}  discrepancies {s['firm_discrepancies']}",
            f"paper-ambiguous {s['ambiguous']}  agree {s['ambiguous_agree']}",
        ]
        if self.discrepancies:
            lines.append("")
            lines.append(f"{'group':<16} {'class':<14} {'pred':<6} {'got':<6} {'status':<16} witness")
            for r in self.discrepancies:
                c = r.claim
                lines.append(
                    f"{c.group_spec:<16} {c.class_name:<14} {str(c.predicted):<6} {str(r.computed):<6} "
                    f"{c.status:<16} {list(r.certificate.witness)}"
                )
        return "\n".join(lines) + "\n"


def _evaluate_group(spec: str, classes: tuple[str, ...], perfect_cap: int, order_cap: int) -> dict[str, ClassCertificate]:
    data = group_data(spec, order_cap)
    try:
        return classify(data.graph, classes, perfect_cap=perfect_cap)
    except CapExceeded as exc:
        raise type(exc)(f"{spec}: {exc}") from exc


def run_verification(
    catalog: Sequence[ClassificationClaim],
    perfect_cap: int = DEFAULT_PERFECT_CAP,
    jobs: int = 1,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> VerificationReport:
    """Compute every claimed class once per group and compare."""
    by_group: dict[str, list[ClassificationClaim]] = {}
    for c in catalog:
        by_group.setdefault(c.group_spec, []).append(c)
    specs = list(by_group)
    tasks = [(s, tuple(dict.fromkeys(c.class_name for c in by_group[s])), perfect_cap, order_cap) for s in specs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_evaluate_star, tasks, chunksize=4))
    else:
        results = [_evaluate_group(*t) for t in tasks]
    certs = dict(zip(specs, results))
    report = VerificationReport()
    for c in catalog:
        cert = certs[c.group_spec][c.class_name]
        report.rows.append(VerificationRow(c, cert.verdict, cert))
    return report


def _evaluate_star(args):
    return _evaluate_group(*args)
