"""
Short Weierstrass curves y^2 = x^3 + a x + b over Z/pZ.

Points are stored as canonical integer residues tagged with their curve; the
point at infinity has ``x = y = None``.  The hot loops (scalar
multiplication, order search) run on plain ``(x, y)`` tuples with ``None``
standing for infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Tuple

from sympy import primefactors

from .errors import (
    CurveMismatch,
    DegenerateCurve,
    InvalidClaimedOrder,
    InvalidInput,
    NotOnCurve,
    OrderTooLarge,
)
from .field import FieldElement, check_prime, legendre_symbol, sqrt_mod

BRUTE_FORCE_LIMIT = 1 << 20
POINT_TAG_INFINITY = 0x00
POINT_TAG_AFFINE = 0x04

Affine = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class CurveParams:
    p: int
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)

    def discriminant_term(self) -> int:
        """4a^3 + 27b^2 mod p."""
        return (4 * self.a ** 3 + 27 * self.b ** 2) % self.p

    def rhs(self, x: int) -> int:
        return (x * x * x + self.a * x + self.b) % self.p

    @property
    def infinity(self) -> CurvePoint:
        return CurvePoint(self)

    def point(self, x: int, y: int) -> CurvePoint:
        """Affine point, checked against the curve equation."""
        pt = CurvePoint(self, x % self.p, y % self.p)
        if not is_on_curve(self, pt):
            raise NotOnCurve(f"({x}, {y}) is not on {self}")
        return pt

    def points(self):
        """Every point of E(F_p), infinity first.  Exhaustive; small p only."""
        yield self.infinity
        for x in range(self.p):
            r = self.rhs(x)
            ls = legendre_symbol(r, self.p)
            if ls == 0:
                yield CurvePoint(self, x, 0)
            elif ls == 1:
                y = sqrt_mod(r, self.p)
                yield CurvePoint(self, x, y)
                yield CurvePoint(self, x, self.p - y)


@dataclass(frozen=True)
class CurvePoint:
    curve: CurveParams
    x: Optional[int] = None
    y: Optional[int] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def xy(self) -> Affine:
        return None if self.x is None else (self.x, self.y)

    def field_x(self) -> FieldElement:
        return FieldElement(self.x, self.curve.p)

    def field_y(self) -> FieldElement:
        return FieldElement(self.y, self.curve.p)

    def __add__(self, other: CurvePoint) -> CurvePoint:
        return point_add(self, other)

    def __neg__(self) -> CurvePoint:
        return point_negate(self)

    def __sub__(self, other: CurvePoint) -> CurvePoint:
        return point_add(self, point_negate(other))

    def __rmul__(self, k: int) -> CurvePoint:
        return scalar_mul(k, self)

    def to_bytes(self) -> bytes:
        """1 tag byte, then x and y as 8-byte big-endian (affine only)."""
        if self.is_infinity:
            return bytes([POINT_TAG_INFINITY])
        return bytes([POINT_TAG_AFFINE]) + self.x.to_bytes(8, "big") + self.y.to_bytes(8, "big")

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


def validate_curve(params: CurveParams) -> CurveParams:
    """Return ``params`` if the curve is non-singular over a prime p > 3."""
    check_prime(params.p)
    if params.p == 3:
        raise InvalidInput("characteristic 3 is not supported")
    if params.discriminant_term() == 0:
        raise DegenerateCurve(
            f"4a^3 + 27b^2 = 0 mod {params.p} for a={params.a}, b={params.b}"
        )
    return params


def is_on_curve(params: CurveParams, pt: CurvePoint) -> bool:
    if pt.is_infinity:
        return True
    p = params.p
    return (pt.y * pt.y - params.rhs(pt.x)) % p == 0


# -- tuple-level group law ---------------------------------------------------


def _add(P: Affine, Q: Affine, a: int, p: int) -> Affine:
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        # equal x: either Q = -P, or doubling with y = 0
        if (y1 + y2) % p == 0:
            return None
        s = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        s = (y1 - y2) * pow(x1 - x2, -1, p) % p
    x3 = (s * s - x1 - x2) % p
    y3 = (s * (x1 - x3) - y1) % p
    return (x3, y3)


def _mul(k: int, P: Affine, a: int, p: int) -> Affine:
    result = None
    addend = P
    while k:
        if k & 1:
            result = _add(result, addend, a, p)
        addend = _add(addend, addend, a, p)
        k >>= 1
    return result


def _wrap(curve: CurveParams, P: Affine) -> CurvePoint:
    if P is None:
        return CurvePoint(curve)
    return CurvePoint(curve, P[0], P[1])


def point_add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.curve != Q.curve:
        raise CurveMismatch(f"{P.curve} vs {Q.curve}")
    c = P.curve
    return _wrap(c, _add(P.xy, Q.xy, c.a, c.p))


def point_negate(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.curve, P.x, (-P.y) % P.curve.p)


def scalar_mul(k: int, P: CurvePoint) -> CurvePoint:
    """k * P by right-to-left double-and-add (not constant time)."""
    if k < 0:
        raise InvalidInput("scalar must be non-negative")
    c = P.curve
    return _wrap(c, _mul(k, P.xy, c.a, c.p))


def hasse_upper(p: int) -> int:
    """p + 1 + 2*ceil(sqrt(p))."""
    return p + 1 + 2 * (isqrt(p - 1) + 1)


def subgroup_order(G: CurvePoint, claimed: Optional[int] = None) -> int:
    """Least k >= 1 with k * G = O.

    Without ``claimed`` the order is found by stepping G, 2G, ... which is
    refused above ``BRUTE_FORCE_LIMIT``.  With ``claimed`` the value is only
    verified: k * G = O, k within the Hasse envelope, and (k/q) * G != O for
    every prime q dividing k.
    """
    if G.is_infinity:
        raise InvalidInput("order of the point at infinity is not a generator order")
    c = G.curve
    if claimed is None:
        if c.p > BRUTE_FORCE_LIMIT:
            raise OrderTooLarge(f"p = {c.p} exceeds brute-force limit {BRUTE_FORCE_LIMIT}")
        P0 = G.xy
        R = P0
        k = 1
        while R is not None:
            R = _add(R, P0, c.a, c.p)
            k += 1
        return k

    k = claimed
    if not isinstance(k, int) or k < 1 or k > hasse_upper(c.p):
        raise InvalidClaimedOrder(f"claimed order {k!r} outside [1, {hasse_upper(c.p)}]")
    if _mul(k, G.xy, c.a, c.p) is not None:
        raise InvalidClaimedOrder(f"{k} * G != O")
    for q in primefactors(k):
        if _mul(k // q, G.xy, c.a, c.p) is None:
            raise InvalidClaimedOrder(f"({k}/{q}) * G = O, so {k} is not minimal")
    return k


def hasse_order(G: CurvePoint) -> int:
    """Order of G by baby-step giant-step over the Hasse interval.

    Finds some m in [p + 1 - 2 sqrt(p), p + 1 + 2 sqrt(p)] with m * G = O
    (the group order is such an m), then strips prime factors while the
    multiple stays O.  Runs in O(p^(1/4)) group operations.
    """
    if G.is_infinity:
        raise InvalidInput("order of the point at infinity is not a generator order")
    c = G.curve
    a, p = c.a, c.p
    P0 = G.xy
    r = isqrt(p) + 1
    lo = max(1, p + 1 - 2 * r)
    hi = p + 1 + 2 * r
    step = isqrt(hi - lo) + 1

    baby = {}
    R = None
    for j in range(step):
        baby.setdefault(R, j)
        R = _add(R, P0, a, p)
    giant = _mul(step, P0, a, p)
    Q = _mul(lo, P0, a, p)
    m = None
    for i in range(step + 1):
        # want Q + j*G = O, i.e. j*G = -Q
        negQ = None if Q is None else (Q[0], (-Q[1]) % p)
        j = baby.get(negQ)
        if j is not None:
            m = lo + i * step + j
            break
        Q = _add(Q, giant, a, p)
    if m is None:
        raise InvalidClaimedOrder("no multiple of G vanishes in the Hasse interval")
    for q in primefactors(m):
        while m % q == 0 and _mul(m // q, P0, a, p) is None:
            m //= q
    return m
