"""
The 5D hyper-surface

    y^2 = x1^3 + x2^3 + x3^3 + x4^3 + a1 x1 + a2 x2 + a3 x3 + a4 x4 + b

and its four axis projections.  Freezing every x_j (j != i) at the constant
c_j leaves the curve E_i: y^2 = x_i^3 + a_i x_i + b_i with

    b_i = b + sum_{j != i} (c_j^3 + a_j c_j).

Curves are numbered 1..4 throughout this module.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .curve import CurveParams, CurvePoint, validate_curve
from .errors import DegenerateCurve, InvalidInput
from .field import check_prime


def _projected_b(p: int, a: Sequence[int], b: int, c: Sequence[int], i: int) -> int:
    total = b
    for j in range(4):
        if j != i:
            total += c[j] ** 3 + a[j] * c[j]
    return total % p


def derive_projected_curves(sp: SurfaceParams) -> Tuple[CurveParams, ...]:
    return _derive(sp.p, sp.a, sp.b, sp.c)


def _derive(p, a, b, c) -> Tuple[CurveParams, ...]:
    curves = []
    for i in range(4):
        curve = CurveParams(p, a[i], _projected_b(p, a, b, c, i))
        try:
            validate_curve(curve)
        except DegenerateCurve as exc:
            raise DegenerateCurve(f"projected curve E_{i + 1}: {exc}", index=i + 1) from None
        curves.append(curve)
    return tuple(curves)


@dataclass(frozen=True)
class SurfaceParams:
    """Coefficients of the surface plus the projection constants c_1..c_4.

    Construction fails with DegenerateCurve (``index`` = failing curve) if
    any projected curve is singular.
    """

    p: int
    a: Tuple[int, int, int, int]
    b: int
    c: Tuple[int, int, int, int]
    curves: Tuple[CurveParams, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = check_prime(self.p)
        if p == 3:
            raise InvalidInput("characteristic 3 is not supported")
        if len(self.a) != 4 or len(self.c) != 4:
            raise InvalidInput("a and c must have exactly four entries")
        a = tuple(int(v) % p for v in self.a)
        c = tuple(int(v) % p for v in self.c)
        b = int(self.b) % p
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "curves", _derive(p, a, b, c))

    def curve(self, i: int) -> CurveParams:
        """Projected curve E_i, i in 1..4."""
        return self.curves[i - 1]


@dataclass(frozen=True)
class SurfacePoint:
    y: int
    x: Tuple[int, int, int, int]


def is_on_surface(sp: SurfaceParams, pt: SurfacePoint) -> bool:
    p = sp.p
    rhs = sp.b
    for ai, xi in zip(sp.a, pt.x):
        rhs += xi ** 3 + ai * xi
    return (pt.y * pt.y - rhs) % p == 0


def embed(sp: SurfaceParams, i: int, pt: CurvePoint) -> SurfacePoint:
    """Lift an affine point of E_i onto the surface, with x_j = c_j for j != i."""
    if pt.is_infinity:
        raise InvalidInput("the point at infinity has no affine lift")
    xs = list(sp.c)
    xs[i - 1] = pt.x
    return SurfacePoint(pt.y, tuple(xs))


# -- real-valued sampling for the illustrative figures ------------------------


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0:
        raise InvalidInput("step must be positive")
    if hi < lo:
        return np.empty(0)
    n = int(np.floor((hi - lo) / step + 1e-9))
    return lo + step * np.arange(n + 1)


def sample_real_curve(
    a1: float,
    a2: float,
    b: float,
    lo: float,
    hi: float,
    step: float,
    fix_x1: Optional[float] = None,
    fix_x2: Optional[float] = None,
) -> List[Tuple[float, float, float]]:
    """Sample y = +-sqrt(x1^3 + x2^3 + a1 x1 + a2 x2 + b) on a grid.

    With neither coordinate fixed both x1 and x2 range over the grid (the 3D
    surface); fixing one gives a planar section.  Rows with a negative
    right-hand side are skipped; y = 0 is emitted once.
    """
    if fix_x1 is not None and fix_x2 is not None:
        raise InvalidInput("fix at most one of x1, x2")
    g = _grid(lo, hi, step)
    x1s = np.array([fix_x1], dtype=float) if fix_x1 is not None else g
    x2s = np.array([fix_x2], dtype=float) if fix_x2 is not None else g
    rows = []
    for x1 in x1s:
        for x2 in x2s:
            rhs = x1 ** 3 + x2 ** 3 + a1 * x1 + a2 * x2 + b
            if rhs < 0:
                continue
            y = float(np.sqrt(rhs))
            rows.append((float(x1), float(x2), y))
            if y != 0.0:
                rows.append((float(x1), float(x2), -y))
    return rows


def write_csv(rows: Iterable[Tuple[float, float, float]], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["x1", "x2", "y"])
    for x1, x2, y in rows:
        w.writerow([repr(x1), repr(x2), repr(y)])
