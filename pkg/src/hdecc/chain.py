"""
Cross-curve generator walk.

Starting from G_1 on E_1, each hop multiplies the current generator by a
public count sigma_k on its own curve, carries the x-coordinate of the
result to the next curve and lifts it to a point there.  Three hops give
G_1..G_4; their x-coordinates fill the public matrix G row-major and their
orders form K.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .curve import (
    BRUTE_FORCE_LIMIT,
    CurveParams,
    CurvePoint,
    hasse_order,
    is_on_curve,
    scalar_mul,
    subgroup_order,
)
from .errors import ChainCollapse, InvalidInput, NoPointFound
from .field import legendre_symbol, sqrt_mod
from .matrix import FieldMatrix
from .surface import SurfaceParams


@dataclass(frozen=True)
class ChainSpec:
    start: CurvePoint
    counts: Tuple[int, int, int]

    def __post_init__(self):
        counts = tuple(int(s) for s in self.counts)
        if len(counts) != 3 or any(s < 1 for s in counts):
            raise InvalidInput(f"chain needs three counts >= 1, got {self.counts!r}")
        if self.start.is_infinity:
            raise InvalidInput("chain start must be an affine point")
        object.__setattr__(self, "counts", counts)


@dataclass(frozen=True)
class GeneratorSet:
    points: Tuple[CurvePoint, ...]
    G: FieldMatrix
    K: Tuple[int, int, int, int]


def lift_to_curve(params: CurveParams, t: int) -> CurvePoint:
    """First point with x in t, t+1, ... (mod p), canonical root for y."""
    p = params.p
    for step in range(p):
        x = (t + step) % p
        r = params.rhs(x)
        if legendre_symbol(r, p) >= 0:
            return CurvePoint(params, x, sqrt_mod(r, p))
    raise NoPointFound(f"no affine point on {params}")


def generator_order(G: CurvePoint, claimed: Optional[int] = None) -> int:
    """Order of G: verified if claimed, brute force for small p, else BSGS + verify."""
    if claimed is not None:
        return subgroup_order(G, claimed)
    if G.curve.p <= BRUTE_FORCE_LIMIT:
        return subgroup_order(G)
    return subgroup_order(G, hasse_order(G))


def build_generator_chain(
    sp: SurfaceParams,
    spec: ChainSpec,
    orders: Optional[Sequence[int]] = None,
) -> GeneratorSet:
    """Run the three hops.  ``orders``, if given, are verified rather than searched."""
    if spec.start.curve != sp.curve(1) or not is_on_curve(sp.curve(1), spec.start):
        raise InvalidInput("chain start is not a point of E_1")
    points = [spec.start]
    for k, sigma in enumerate(spec.counts, start=1):
        H = scalar_mul(sigma, points[-1])
        if H.is_infinity:
            raise ChainCollapse(f"{sigma} * G_{k} = O on E_{k}")
        points.append(lift_to_curve(sp.curve(k + 1), H.x))
    if orders is None:
        orders = (None,) * 4
    K = tuple(generator_order(G, o) for G, o in zip(points, orders))
    G = FieldMatrix(sp.p, tuple(pt.x for pt in points))
    return GeneratorSet(tuple(points), G, K)
