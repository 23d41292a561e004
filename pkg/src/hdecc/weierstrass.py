"""
General-to-short Weierstrass reduction over Z/pZ, p > 3.

    y^2 + c1 x y + c3 y = x^3 + c2 x^2 + c4 x + c6

becomes eta^2 = xi^3 + A xi + B after completing the square and the cube:

    eta = y + (c1 x + c3) / 2,   xi = x + (c1^2 + 4 c2) / 12
    d4 = (c1^2 + 4 c2)^2 - 24 (c1 c3 + 2 c4)
    d6 = -(c1^2 + 4 c2)^3 + 36 (c1^2 + 4 c2)(c1 c3 + 2 c4) - 216 (c3^2 + 4 c6)
    A = -d4 / 48,  B = -d6 / 864
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import BadCharacteristic, NotOnGeneralCurve
from .field import check_prime, inv_mod


@dataclass(frozen=True)
class GeneralWeierstrass:
    p: int
    c1: int = 0
    c2: int = 0
    c3: int = 0
    c4: int = 0
    c6: int = 0

    def __post_init__(self):
        if self.p in (2, 3):
            raise BadCharacteristic(f"characteristic {self.p} is not supported")
        check_prime(self.p)
        for name in ("c1", "c2", "c3", "c4", "c6"):
            object.__setattr__(self, name, getattr(self, name) % self.p)

    def contains(self, x: int, y: int) -> bool:
        p = self.p
        lhs = y * y + self.c1 * x * y + self.c3 * y
        rhs = x ** 3 + self.c2 * x * x + self.c4 * x + self.c6
        return (lhs - rhs) % p == 0


@dataclass(frozen=True)
class ShortForm:
    p: int
    A: int
    B: int
    d4: int
    d6: int

    def contains(self, xi: int, eta: int) -> bool:
        return (eta * eta - (xi ** 3 + self.A * xi + self.B)) % self.p == 0


def reduce_general(gw: GeneralWeierstrass) -> ShortForm:
    p = gw.p
    b2 = gw.c1 ** 2 + 4 * gw.c2
    b4 = gw.c1 * gw.c3 + 2 * gw.c4
    b6 = gw.c3 ** 2 + 4 * gw.c6
    d4 = (b2 * b2 - 24 * b4) % p
    d6 = (-b2 ** 3 + 36 * b2 * b4 - 216 * b6) % p
    A = -d4 * inv_mod(48, p) % p
    B = -d6 * inv_mod(864, p) % p
    return ShortForm(p, A, B, d4, d6)


def _shifts(gw: GeneralWeierstrass, x: int) -> Tuple[int, int]:
    p = gw.p
    dx = (gw.c1 ** 2 + 4 * gw.c2) * inv_mod(12, p) % p
    dy = (gw.c1 * x + gw.c3) * inv_mod(2, p) % p
    return dx, dy


def map_point(gw: GeneralWeierstrass, x: int, y: int) -> Tuple[int, int]:
    """(x, y) on the general curve -> (xi, eta) on the short form."""
    if not gw.contains(x, y):
        raise NotOnGeneralCurve(f"({x}, {y}) does not satisfy the general equation mod {gw.p}")
    dx, dy = _shifts(gw, x)
    return (x + dx) % gw.p, (y + dy) % gw.p


def unmap_point(gw: GeneralWeierstrass, xi: int, eta: int) -> Tuple[int, int]:
    p = gw.p
    dx, _ = _shifts(gw, 0)
    x = (xi - dx) % p
    _, dy = _shifts(gw, x)
    return x, (eta - dy) % p
