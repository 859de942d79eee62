"""Brute-force cross-check of the classifier.

Every triangle with vertices ``(1,0)``, ``(p1,q1)`` and ``n3`` inside a
box is built directly as a fan, and the classes found are compared with
the output of :func:`toric_ldp.classification.classify`. Nothing here uses the
admissibility conditions or the cone type families.

Set ``TORIC_LDP_SERIAL=1`` to force a single process. The result is the
same either way.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .fans import build_fan
from .graphs import fan_key
from .lattice import ext_gcd

DEFAULT_BOX = 25
# Largest coordinate of any admissible triangle in normalized position, so a
# box at least this large contains every admissible triple, not just one per
# class. Checked against the classifier in the tests.
COMPLETENESS_FLOOR = {1: 4, 2: 12, 3: 24}


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    index: int
    box: int
    representatives: dict  # canonical key -> least generator tuple found
    triples: frozenset  # every cone-type triple seen with this index

    @property
    def keys(self) -> frozenset:
        return frozenset(self.representatives)

    @property
    def count(self) -> int:
        return len(self.representatives)


def _pq(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    # (p, q) of the cone spanned by (a, b), (c, d); the first vector is primitive
    _, kappa, mu = ext_gcd(a, b)
    q = abs(a * d - b * c)
    return (kappa * c + mu * d) % q, q


def _local_index(p: int, q: int) -> int:
    return 1 if q == 1 else q // gcd(q, p - 1)


def _scan_first_cones(first_cones, box: int, indices):
    found = {ix: {} for ix in indices}
    triples = {ix: set() for ix in indices}
    for p1, q1 in first_cones:
        l1 = _local_index(p1, q1)
        if all(ix % l1 for ix in indices):
            continue
        for y in range(-box, 0):
            for x in range(-box, box + 1):
                if p1 * y - q1 * x <= 0 or gcd(x, y) != 1:
                    continue
                pq2 = _pq(p1, q1, x, y)
                pq3 = _pq(x, y, 1, 0)
                ix = lcm(l1, _local_index(*pq2), _local_index(*pq3))
                if ix not in found:
                    continue
                gens = ((1, 0), (p1, q1), (x, y))
                triples[ix].add(((p1, q1), pq2, pq3))
                key = fan_key(build_fan(gens))
                best = found[ix].get(key)
                if best is None or gens < best:
                    found[ix][key] = gens
    return found, triples


def _first_cones(box: int) -> list[tuple[int, int]]:
    return [(0, 1)] + [(p, q) for q in range(2, box + 1) for p in range(q) if gcd(p, q) == 1]


def _workers() -> int:
    if os.environ.get("TORIC_LDP_SERIAL", "") not in ("", "0"):
        return 1
    return max(1, min(8, os.cpu_count() or 1))


@lru_cache(maxsize=8)
def _scan(box: int, indices: tuple[int, ...]):
    cones = _first_cones(box)
    workers = _workers()
    if workers == 1:
        parts = [_scan_first_cones(cones, box, indices)]
    else:
        chunks = [cones[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_first_cones, chunks, [box] * workers, [indices] * workers))
    found = {ix: {} for ix in indices}
    triples = {ix: set() for ix in indices}
    for part_found, part_triples in parts:
        for ix in indices:
            triples[ix] |= part_triples[ix]
            for key, gens in part_found[ix].items():
                best = found[ix].get(key)
                if best is None or gens < best:
                    found[ix][key] = gens
    return {
        ix: OracleResult(ix, box, dict(sorted(found[ix].items())), frozenset(triples[ix]))
        for ix in indices
    }


def oracle_classify(index: int, box: int = DEFAULT_BOX) -> OracleResult:
    if index not in COMPLETENESS_FLOOR:
        raise OracleError(f"index {index} is not supported (choose 1, 2 or 3)")
    floor = COMPLETENESS_FLOOR[index]
    if box < floor:
        raise OracleError(
            f"box {box} is below {floor}, the smallest box containing every "
            f"admissible index-{index} triangle"
        )
    return _scan(box, (1, 2, 3))[index]


def stability_check(index: int, box1: int, box2: int) -> bool:
    if box1 >= box2:
        raise OracleError("stability check needs box1 < box2")
    return oracle_classify(index, box1).keys == oracle_classify(index, box2).keys


@dataclass(frozen=True)
class Comparison:
    index: int
    box: int
    oracle_count: int
    classifier_count: int
    missing: tuple  # keys the oracle found but the classifier did not
    extra: tuple  # keys the classifier found but the oracle did not

    @property
    def match(self) -> bool:
        return not self.missing and not self.extra

    def report(self) -> str:
        head = "MATCH" if self.match else "MISMATCH"
        if self.match:
            lines = [f"{head}: {self.oracle_count} = {self.classifier_count}"]
        else:
            lines = [f"{head}: oracle {self.oracle_count}, classifier {self.classifier_count}"]
        for k in self.missing:
            lines.append(f"  only in oracle: {list(k)}")
        for k in self.extra:
            lines.append(f"  only in classifier: {list(k)}")
        return "\n".join(lines)


def compare_with_classifier(index: int, box: int = DEFAULT_BOX) -> Comparison:
    from .classification import classify

    res = oracle_classify(index, box)
    cls_keys = {rec.key for rec in classify(index)}
    return Comparison(
        index,
        box,
        res.count,
        len(cls_keys),
        tuple(sorted(res.keys - cls_keys)),
        tuple(sorted(cls_keys - res.keys)),
    )
