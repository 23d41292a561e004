"""Random instances for property runs and the scripts in ``scripts/``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from sympy import primerange

from .chain import ChainSpec, lift_to_curve
from .curve import CurveParams, validate_curve
from .errors import ChainCollapse, DegenerateCurve
from .matkex import SessionParams
from .surface import SurfaceParams


@dataclass(frozen=True)
class SessionConfig:
    p_min: int = 23
    p_max: int = 400
    max_count: int = 40
    min_order: int = 3
    max_tries: int = 200


def small_primes(lo: int, hi: int):
    return list(primerange(max(lo, 5), hi + 1))


def random_curve(rng: random.Random, p: int) -> CurveParams:
    while True:
        curve = CurveParams(p, rng.randrange(p), rng.randrange(p))
        try:
            return validate_curve(curve)
        except DegenerateCurve:
            continue


def random_surface(rng: random.Random, p: int) -> SurfaceParams:
    while True:
        try:
            return SurfaceParams(
                p,
                tuple(rng.randrange(p) for _ in range(4)),
                rng.randrange(p),
                tuple(rng.randrange(p) for _ in range(4)),
            )
        except DegenerateCurve:
            continue


def random_session(rng: random.Random, cfg: Optional[SessionConfig] = None) -> SessionParams:
    """A valid session with every order >= cfg.min_order (so keys exist)."""
    cfg = cfg or SessionConfig()
    primes = small_primes(cfg.p_min, cfg.p_max)
    for _ in range(cfg.max_tries):
        sp = random_surface(rng, rng.choice(primes))
        start = lift_to_curve(sp.curve(1), rng.randrange(sp.p))
        if start.y == 0:
            continue
        counts = tuple(rng.randint(1, cfg.max_count) for _ in range(3))
        try:
            session = SessionParams.create(sp, ChainSpec(start, counts))
        except ChainCollapse:
            continue
        if min(session.K) >= cfg.min_order:
            return session
    raise RuntimeError("no usable session found; widen the config")
