"""Invariants of a single cyclic quotient singularity, i.e. of a (p,q)-cone."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .lattice import (
    ConePQ,
    LatticeError,
    LatticeVector,
    as_pq,
    cone_pq_witness,
    det,
    socius,
    vec,
)


def hj_expansion(pq) -> list[int]:
    """Negative-regular continued fraction of ``q/(q-p)``.

    >>> hj_expansion((5, 12))
    [2, 4, 2]
    """
    p, q = as_pq(pq)
    if q == 1:
        raise LatticeError("a basic cone has no Hirzebruch-Jung expansion")
    num, den = q, q - p
    out = []
    while den:
        b = -(-num // den)
        out.append(b)
        num, den = den, b * den - num
    return out


def hj_value(bs) -> Fraction:
    """Evaluate ``[[b1, ..., bs]] = b1 - 1/(b2 - 1/(...))`` exactly."""
    if not bs:
        raise ValueError("empty continued fraction")
    val = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        val = b - 1 / val
    return val


def local_index(pq) -> int:
    p, q = as_pq(pq)
    if q == 1:
        return 1
    return q // gcd(q, p - 1)


def index3_membership(pq) -> str | None:
    """Return ``"A"`` or ``"B"`` for the two families of local index 3,
    ``None`` otherwise."""
    p, q = as_pq(pq)
    if p % 3 == 0:
        return None
    if p >= 2 and q == 3 * (p - 1):
        return "A"
    if p >= 5 and p % 2 == 1 and 2 * q == 3 * (p - 1):
        return "B"
    return None


def local_K_self_intersection(pq) -> Fraction:
    """Self-intersection K(E)^2 of the local discrepancy divisor."""
    pq = as_pq(pq)
    p, q = pq
    if q == 1 or p == 1:
        return Fraction(0)
    excess = sum(b - 2 for b in hj_expansion(pq))
    return -(Fraction(2 - p - socius(pq), q) + excess)


@dataclass(frozen=True)
class ConeParams:
    pq: ConePQ
    p_hat: int
    local_index: int
    hj: tuple[int, ...]
    kE2: Fraction

    @property
    def p(self) -> int:
        return self.pq.p

    @property
    def q(self) -> int:
        return self.pq.q

    @property
    def s(self) -> int:
        return len(self.hj)

    @property
    def is_basic(self) -> bool:
        return self.pq.q == 1

    @property
    def is_gorenstein(self) -> bool:
        """Non-basic with p = 1."""
        return self.pq.q > 1 and self.pq.p == 1

    @property
    def picard_cost(self) -> Fraction:
        """Contribution ``s + K(E)^2`` to the left side of the Picard bound.

        Gorenstein cones add only ``s`` since their K(E)^2 is not summed.
        """
        if self.is_gorenstein:
            return Fraction(self.s)
        return self.s + self.kE2


@lru_cache(maxsize=None)
def _cone_params(p: int, q: int) -> ConeParams:
    pq = ConePQ.checked(p, q)
    hj = () if q == 1 else tuple(hj_expansion(pq))
    return ConeParams(pq, socius(pq), local_index(pq), hj, local_K_self_intersection(pq))


def cone_params(pq) -> ConeParams:
    p, q = pq
    return _cone_params(p, q)


def resolution_rays(n, n_prime) -> list[LatticeVector]:
    """Rays ``u_0 = n, u_1, ..., u_{s+1} = n'`` of the minimal resolution of
    the anticlockwise cone spanned by ``n`` and ``n_prime``."""
    n, n_prime = vec(n), vec(n_prime)
    if det(n, n_prime) <= 0:
        raise LatticeError(f"cone ({n}, {n_prime}) is not anticlockwise")
    (p, q), witness = cone_pq_witness(n, n_prime)
    if q == 1:
        return [n, n_prime]
    # u_1 = ((q-p) n + n') / q = n + n''
    rays = [n, n + witness]
    for b in hj_expansion((p, q)):
        rays.append(rays[-1].scale(b) - rays[-2])
    if rays[-1] != n_prime:
        raise AssertionError(f"resolution of ({n}, {n_prime}) does not close up")
    return rays
