"""Exact integer arithmetic in the plane lattice Z^2.

Everything here works on Python ints, so there is no overflow to worry
about however large the cone parameters get.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Union


class LatticeError(ValueError):
    """Raised for inputs that do not describe a valid lattice object."""


class LatticeVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return LatticeVector(-self.x, -self.y)

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector(k * self.x, k * self.y)

    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


VectorLike = Union[LatticeVector, tuple]


def vec(v: VectorLike) -> LatticeVector:
    """Coerce a pair of ints into a LatticeVector."""
    if isinstance(v, LatticeVector):
        return v
    x, y = v
    if not (isinstance(x, int) and isinstance(y, int)):
        raise LatticeError(f"lattice vector needs integer coordinates, got {v!r}")
    return LatticeVector(int(x), int(y))


def det(u: VectorLike, v: VectorLike) -> int:
    """Determinant of the 2x2 matrix with columns u, v."""
    return u[0] * v[1] - u[1] * v[0]


def is_primitive(v: VectorLike) -> bool:
    return gcd(v[0], v[1]) == 1


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, kappa, lam)`` with ``g = gcd(|a|, |b|) > 0`` and
    ``kappa*a + lam*b == g``.

    >>> ext_gcd(9, 7)
    (1, -3, 4)
    """
    if a == 0 and b == 0:
        raise LatticeError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class ConePQ(NamedTuple):
    """Normal-form parameters of a 2-dimensional strongly convex cone."""

    p: int
    q: int

    @classmethod
    def checked(cls, p: int, q: int) -> "ConePQ":
        if q < 1 or not (0 <= p < q) or gcd(p, q) != 1:
            raise LatticeError(f"({p},{q}) is not a valid cone type")
        return cls(p, q)

    @property
    def is_basic(self) -> bool:
        return self.q == 1


def as_pq(pq) -> ConePQ:
    if isinstance(pq, ConePQ):
        return pq
    p, q = pq
    return ConePQ.checked(p, q)


@dataclass(frozen=True)
class UnimodularMap:
    """Integer 2x2 matrix ``[[a, b], [c, d]]`` with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise LatticeError(f"matrix {self} is not unimodular")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __call__(self, v: VectorLike) -> LatticeVector:
        return LatticeVector(self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def inverse(self) -> "UnimodularMap":
        e = self.det
        return UnimodularMap(e * self.d, -e * self.b, -e * self.c, e * self.a)

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)


def _check_cone(n: LatticeVector, n2: LatticeVector) -> int:
    if not n.is_primitive() or not n2.is_primitive():
        raise LatticeError(f"cone generators {n}, {n2} must be primitive")
    d = det(n, n2)
    if d == 0:
        raise LatticeError(f"cone generators {n}, {n2} are collinear")
    return d


def cone_pq_witness(n: VectorLike, n_prime: VectorLike) -> tuple[ConePQ, LatticeVector]:
    """Return ``((p, q), n'')`` for the cone spanned by ``n`` and ``n_prime``.

    ``n'' `` is primitive, ``{n, n''}`` is a basis of Z^2 and
    ``n_prime == p*n + q*n''``. The result does not depend on the order
    of the two generators up to replacing p by its socius.
    """
    n, n_prime = vec(n), vec(n_prime)
    d = _check_cone(n, n_prime)
    a, b = n
    c, dd = n_prime
    _, kappa, mu = ext_gcd(a, b)
    lam = -mu  # kappa*a - lam*b == 1
    q = abs(d)
    eps = 1 if d > 0 else -1
    t = kappa * c - lam * dd
    p = t % q
    gamma = (t - p) // q
    n2 = LatticeVector(eps * lam + gamma * a, eps * kappa + gamma * b)
    return ConePQ(p, q), n2


def cone_pq(n: VectorLike, n_prime: VectorLike) -> ConePQ:
    return cone_pq_witness(n, n_prime)[0]


def normalize_cone(n: VectorLike, n_prime: VectorLike) -> UnimodularMap:
    """Unimodular map sending ``n`` to (1,0) and ``n_prime`` to (p,q)."""
    n, n_prime = vec(n), vec(n_prime)
    d = _check_cone(n, n_prime)
    (p, q), _ = cone_pq_witness(n, n_prime)
    a, b = n
    c, dd = n_prime
    eps = 1 if d > 0 else -1
    # exact divisions: both numerators vanish mod q by construction of p
    return UnimodularMap(
        eps * (dd - b * p) // q,
        eps * (a * p - c) // q,
        -eps * b,
        eps * a,
    )


def socius(pq) -> int:
    """The inverse of p modulo q, taken in [0, q); 0 for basic cones."""
    p, q = as_pq(pq)
    if q == 1:
        return 0
    return pow(p, -1, q)


def cones_equivalent(c1, c2) -> bool:
    """Decide whether two cones are equivalent under GL_2(Z).

    Each argument is either a ConePQ / ``(p, q)`` pair or a pair of
    generator vectors.
    """
    pq1, pq2 = _cone_arg(c1), _cone_arg(c2)
    if pq1.q != pq2.q:
        return False
    return pq1.p == pq2.p or pq1.p == socius(pq2)


def _cone_arg(c) -> ConePQ:
    if isinstance(c, ConePQ):
        return c
    first, second = c
    if isinstance(first, int):
        return ConePQ.checked(first, second)
    return cone_pq(first, second)
