"""
Matrix Diffie-Hellman over the generator matrix G.

The responder (Bob) holds N and publishes T = G N; the initiator (Alice)
holds M and publishes P = M G.  Both arrive at W = M G N: Alice as M T,
Bob as P N.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .chain import ChainSpec, GeneratorSet, build_generator_chain
from .errors import (
    InvalidInput,
    InvalidOrder,
    KeyRangeViolation,
    ModulusMismatch,
    NotInvertible,
    SingularGenerator,
)
from .matrix import FieldMatrix, ScalarMatrix, mat_mul
from .surface import SurfaceParams

INITIATOR = "initiator"
RESPONDER = "responder"
SIDES = (INITIATOR, RESPONDER)


@dataclass(frozen=True)
class SessionParams:
    """Everything Eve sees: the surface, the chain setup, G and K."""

    surface: SurfaceParams
    chain: Optional[ChainSpec]
    generators: GeneratorSet

    @classmethod
    def create(cls, surface: SurfaceParams, chain: ChainSpec,
               orders: Optional[Sequence[int]] = None) -> SessionParams:
        return cls(surface, chain, build_generator_chain(surface, chain, orders))

    @property
    def p(self) -> int:
        return self.surface.p

    @property
    def G(self) -> FieldMatrix:
        return self.generators.G

    @property
    def K(self):
        return self.generators.K


def _side(side: str) -> str:
    if side not in SIDES:
        raise InvalidInput(f"side must be one of {SIDES}, got {side!r}")
    return side


def keygen_private(session: SessionParams, rng: random.Random) -> ScalarMatrix:
    """Entry i uniform in [1, kappa_i - 1], reproducible from the rng's seed."""
    K = session.K
    if any(k < 3 for k in K):
        raise InvalidOrder(f"every order must be >= 3, got {K}")
    return ScalarMatrix(tuple(rng.randint(1, k - 1) for k in K))


def check_key(session: SessionParams, key: ScalarMatrix) -> ScalarMatrix:
    for i, (v, k) in enumerate(zip(key.entries, session.K), start=1):
        if not 1 <= v <= k - 1:
            raise KeyRangeViolation(f"entry {i} = {v} outside [1, {k - 1}]")
    return key


def make_token(session: SessionParams, key: ScalarMatrix, side: str) -> FieldMatrix:
    check_key(session, key)
    if _side(side) == RESPONDER:
        return mat_mul(session.G, key)
    return mat_mul(key, session.G)


def derive_shared(session: SessionParams, key: ScalarMatrix, peer_token: FieldMatrix,
                  side: str) -> FieldMatrix:
    if peer_token.p != session.p:
        raise ModulusMismatch(f"peer token is mod {peer_token.p}, session is mod {session.p}")
    if _side(side) == INITIATOR:
        return mat_mul(key, peer_token)
    return mat_mul(peer_token, key)


def eve_recover(session: SessionParams, T: FieldMatrix, P: FieldMatrix) -> FieldMatrix:
    """W from public data only: P G^-1 T = M G G^-1 G N = M G N."""
    try:
        G_inv = session.G.inverse()
    except NotInvertible:
        raise SingularGenerator(f"det(G) = 0 mod {session.p}") from None
    return mat_mul(mat_mul(P, G_inv), T)
