"""Classification of toric log Del Pezzo surfaces with Picard number one and
small index.

A surface of Picard number one comes from a fan with three rays. After a
unimodular change of coordinates the rays are ``(1,0)``, ``(p1,q1)`` and a
third vector determined by the cone types, so the search runs over triples
of cone types rather than over vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from typing import Iterator, NamedTuple

from .cones import ConeParams, cone_params, index3_membership
from .fans import CompleteFan, FanError, build_fan, r_invariants, scott_term
from .graphs import canonical_key, graph_of
from .lattice import LatticeError, LatticeVector, socius
from .snf import smith_normal_form

SUPPORTED_INDICES = (1, 2, 3)

Triple = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


class ClassificationError(ValueError):
    pass


def _check_index(index: int) -> None:
    if index not in SUPPORTED_INDICES:
        raise ClassificationError(f"index {index} is not supported (choose 1, 2 or 3)")


# Cone types of local index dividing 3 ------------------------------------


class TypeFamily(NamedTuple):
    tag: int
    xi: int | None

    @property
    def pq(self) -> tuple[int, int]:
        return type_pq(self.tag, self.xi)


_XI_MIN = {2: 1, 3: 1, 4: 0, 5: 1}


def type_pq(tag: int, xi: int | None = None) -> tuple[int, int]:
    """The ``(p, q)`` pair of a cone of the given type with parameter xi.

    Type 6 takes ``q`` in place of xi.
    """
    if tag == 1:
        return (2, 3)
    if tag == 7:
        return (0, 1)
    if tag == 6:
        if xi is None or xi < 2:
            raise ValueError("type 6 needs q >= 2")
        return (1, xi)
    if tag not in _XI_MIN:
        raise ValueError(f"unknown type {tag}")
    if xi is None or xi < _XI_MIN[tag]:
        raise ValueError(f"type {tag} needs xi >= {_XI_MIN[tag]}")
    return {
        2: (3 * xi + 2, 9 * xi + 3),
        3: (3 * xi + 1, 9 * xi),
        4: (6 * xi + 5, 9 * xi + 6),
        5: (6 * xi + 1, 9 * xi),
    }[tag]


def type_of(pq) -> TypeFamily | None:
    """Inverse of :func:`type_pq`; ``None`` if the local index does not
    divide 3."""
    p, q = pq
    if q == 1:
        return TypeFamily(7, None)
    if p == 1:
        return TypeFamily(6, q)
    if (p, q) == (2, 3):
        return TypeFamily(1, None)
    c = cone_params(pq)
    if c.local_index != 3:
        return None
    fam = index3_membership(pq)
    if fam == "A":
        return TypeFamily(3, q // 9) if q % 9 == 0 else TypeFamily(2, (q - 3) // 9)
    return TypeFamily(5, q // 9) if q % 9 == 0 else TypeFamily(4, (q - 6) // 9)


# Search region ------------------------------------------------------------


def picard_budget(index: int, nu: int = 3) -> Fraction:
    """Right side of the Picard bound once the K(E)^2 terms are moved left."""
    return 12 - (1 + Fraction(1, index)) * nu


def _chains(index: int) -> Iterator[Iterator[tuple[int, int]]]:
    """Sequences of cones, each with strictly increasing Picard cost, whose
    union is every non-basic cone with local index dividing ``index``.

    A cone of local index l > 1 is ``(a g + 1, l g)`` with ``0 < a < l``
    coprime to l and ``gcd(a g + 1, l) = 1``; a chain fixes l, a and
    ``g mod l``.
    """

    def gorenstein():
        q = 2
        while True:
            yield (1, q)
            q += 1

    def chain(l, a, r):
        g = r or l
        while True:
            yield (a * g + 1, l * g)
            g += l

    yield gorenstein()
    for l in range(2, index + 1):
        if index % l:
            continue
        for a in range(1, l):
            if gcd(a, l) != 1:
                continue
            for r in range(l):
                # gcd(a g + 1, l g) = gcd(a g + 1, l) only depends on g mod l
                if gcd(a * r + 1, l) == 1:
                    yield chain(l, a, r)


def _chain_heads(index: int) -> list[tuple[int, int]]:
    return [next(c) for c in _chains(index)]


def min_cone_cost(index: int) -> Fraction:
    """Least Picard cost of any cone allowed for this index (basic cones
    cost 0)."""
    return min([Fraction(0)] + [cone_params(pq).picard_cost for pq in _chain_heads(index)])


def per_cone_cap(index: int) -> Fraction:
    return picard_budget(index) - 2 * min_cone_cost(index)


def type_families(index: int) -> list[tuple[int, int]]:
    """Every ``(p, q)`` whose local index divides ``index`` and which could
    occur in a triangle satisfying the Picard bound.

    Sorted by ``(q, p)``; the basic cone ``(0, 1)`` comes first.
    """
    _check_index(index)
    cap = per_cone_cap(index)
    out = {(0, 1)}
    for ch in _chains(index):
        for pq in ch:
            if cone_params(pq).picard_cost > cap:
                break
            out.add(pq)
    return sorted(out, key=lambda pq: (pq[1], pq[0]))


# Admissibility -------------------------------------------------------------


def _cond1(t1, t2, t3, modulus) -> bool:
    (p1, q1), (p2, q2), (_, q3) = t1, t2, t3
    return (socius(t1) * q2 + p2 * q1 + q3) % modulus == 0


def _cond2(t1, t2, t3, modulus) -> bool:
    (p1, q1), (_, q2), (p3, q3) = t1, t2, t3
    return (p1 * q3 + socius(t3) * q1 + q2) % modulus == 0


def is_admissible(triple) -> bool:
    t1, t2, t3 = (tuple(t) for t in triple)
    q1, q2, q3 = t1[1], t2[1], t3[1]
    return _cond1(t1, t2, t3, q1 * q2) and _cond2(t1, t2, t3, q1 * q3)


def mod9_prefilter(combo) -> bool:
    """Whether some choice of parameters for the types in ``combo`` (each in
    1..5) meets both admissibility conditions modulo 9.

    p, q and the socius are affine in xi for each type, so their residues
    mod 9 repeat with period 9 and one period of xi suffices.
    """
    return _mod9_prefilter(tuple(combo))


@lru_cache(maxsize=None)
def _mod9_prefilter(combo: tuple[int, ...]) -> bool:
    options = []
    for tag in combo:
        if tag not in (1, 2, 3, 4, 5):
            raise ValueError(f"type {tag} is not a non-Gorenstein index-3 type")
        if tag == 1:
            options.append([(2, 3)])
        else:
            lo = _XI_MIN[tag]
            options.append([type_pq(tag, xi) for xi in range(lo, lo + 9)])
    return any(
        _cond1(t1, t2, t3, 9) and _cond2(t1, t2, t3, 9) for t1, t2, t3 in product(*options)
    )


def third_generator(triple) -> LatticeVector:
    (p1, q1), (_, q2), (_, q3) = triple
    num = q2 + p1 * q3
    if num % q1:
        raise ClassificationError(f"{q1} does not divide {num}; triple {triple} is not realizable")
    return LatticeVector(-num // q1, -q3)


def fan_from_triple(triple) -> CompleteFan:
    """The fan with rays ``(1,0), (p1,q1), n3`` whose cones have the given
    types in order. Raises if no such fan exists."""
    triple = tuple(tuple(t) for t in triple)
    (p1, q1) = triple[0]
    n3 = third_generator(triple)
    try:
        fan = build_fan([(1, 0), (p1, q1), n3])
    except (FanError, LatticeError) as exc:
        raise ClassificationError(f"triple {triple} is not realizable: {exc}") from exc
    if tuple(fan.pq_pairs) != triple:
        raise ClassificationError(f"triple {triple} realizes cone types {fan.pq_pairs} instead")
    return fan


def _tag(pq) -> int | None:
    t = type_of(pq)
    return t.tag if t else None


def enumerate_admissible(index: int) -> list[Triple]:
    """All admissible triples of surface index exactly ``index`` whose first
    cone has local index ``index``, in a fixed order."""
    _check_index(index)
    cands = [(pq, cone_params(pq)) for pq in type_families(index)]
    budget = picard_budget(index)
    cmin = min_cone_cost(index)
    use_scott = index >= 2
    out = []
    for t1, c1 in cands:
        if c1.local_index != index:
            continue
        for t2, c2 in cands:
            cost12 = c1.picard_cost + c2.picard_cost
            if cost12 + cmin > budget:
                continue
            for t3, c3 in cands:
                if cost12 + c3.picard_cost > budget:
                    continue
                if lcm(c1.local_index, c2.local_index, c3.local_index) != index:
                    continue
                if use_scott and scott_term(c1) + scott_term(c2) + scott_term(c3) > 8:
                    continue
                if index == 3 and not (c2.is_basic or c2.is_gorenstein or c3.is_basic or c3.is_gorenstein):
                    if not mod9_prefilter((_tag(t1), _tag(t2), _tag(t3))):
                        continue
                triple = (t1, t2, t3)
                if is_admissible(triple):
                    out.append(triple)
    return out


# Classified surfaces ----------------------------------------------------------


def identify_quotient(fan_or_record) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced weights and nontrivial invariant factors of the finite group
    H with ``X = P^2(weights) / H``."""
    fan = fan_or_record.fan if isinstance(fan_or_record, SurfaceRecord) else fan_or_record
    if fan.nu != 3:
        raise ClassificationError("quotient description needs exactly three rays")
    qs = [c.q for c in fan.cones]
    # weight of ray i is the multiplicity of the opposite cone
    g = gcd(*qs)
    weights = tuple(sorted(q // g for q in qs))
    gens = fan.generators
    matrix = [[v.x for v in gens], [v.y for v in gens]]
    factors = tuple(d for d in smith_normal_form(matrix) if d != 1)
    return weights, factors


def weights_label(weights, factors) -> str:
    base = "P²" if tuple(weights) == (1, 1, 1) else "P²({},{},{})".format(*weights)
    if not factors:
        return base
    group = "×".join(f"Z/{d}" for d in factors)
    return f"{base}/({group})"


@dataclass(frozen=True)
class SurfaceRecord:
    triple: Triple
    fan: CompleteFan = field(compare=False)
    n3: LatticeVector
    r: tuple[int, ...]
    index: int
    reduced_weights: tuple[int, ...]
    group_order: int
    group_factors: tuple[int, ...]
    key: tuple[int, ...]
    members: tuple[Triple, ...] = ()

    @property
    def label(self) -> str:
        return weights_label(self.reduced_weights, self.group_factors)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "triple": [list(t) for t in self.triple],
            "n": [list(v) for v in self.fan.generators],
            "r": list(self.r),
            "weights": list(self.reduced_weights),
            "group_order": self.group_order,
            "group_factors": list(self.group_factors),
            "label": self.label,
            "key": list(self.key),
            "members": [[list(t) for t in m] for m in self.members],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "SurfaceRecord":
        fan = build_fan([tuple(v) for v in d["n"]])
        members = tuple(tuple(tuple(t) for t in m) for m in d.get("members", []))
        rec = record_from_fan(fan, members=members)
        if rec.to_dict() != d:
            raise ValueError("record data is inconsistent with its fan")
        return rec


def record_from_fan(fan: CompleteFan, members=()) -> SurfaceRecord:
    triple = tuple(tuple(pq) for pq in fan.pq_pairs)
    r = tuple(r_invariants(fan))
    weights, factors = identify_quotient(fan)
    order = 1
    for d in factors:
        order *= d
    return SurfaceRecord(
        triple=triple,
        fan=fan,
        n3=fan.generators[2],
        r=r,
        index=lcm(*(c.local_index for c in fan.cones)),
        reduced_weights=weights,
        group_order=order,
        group_factors=factors,
        key=canonical_key(graph_of(fan, r)),
        members=tuple(members),
    )


def record_sort_key(rec: SurfaceRecord):
    return (rec.index, rec.reduced_weights, rec.group_order, rec.key)


def classify(index: int) -> list[SurfaceRecord]:
    """One record per isomorphism class. The representative of a class is
    its lexicographically least admissible triple; all triples of the class
    are kept in ``members``."""
    _check_index(index)
    return list(_classify(index))


@lru_cache(maxsize=None)
def _classify(index: int) -> tuple[SurfaceRecord, ...]:
    classes: dict[tuple[int, ...], list[Triple]] = {}
    for triple in enumerate_admissible(index):
        fan = fan_from_triple(triple)
        classes.setdefault(canonical_key(graph_of(fan)), []).append(triple)
    records = []
    for triples in classes.values():
        triples.sort()
        records.append(record_from_fan(fan_from_triple(triples[0]), members=triples))
    records.sort(key=record_sort_key)
    return tuple(records)


def cone_summary(c: ConeParams) -> dict:
    return {
        "p": c.p,
        "q": c.q,
        "p_hat": c.p_hat,
        "local_index": c.local_index,
        "s": c.s,
        "hj": list(c.hj),
        "K(E)^2": str(c.kE2),
    }
