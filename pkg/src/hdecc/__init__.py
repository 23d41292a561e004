"""Elliptic-curve key exchange on a 5D hyper-surface with matrix-valued secrets."""

from .chain import ChainSpec, GeneratorSet, build_generator_chain, lift_to_curve
from .curve import (
    CurveParams,
    CurvePoint,
    hasse_order,
    is_on_curve,
    point_add,
    point_negate,
    scalar_mul,
    subgroup_order,
    validate_curve,
)
from .field import FieldElement, check_prime, is_prime, legendre_symbol, sqrt_mod
from .matkex import (
    INITIATOR,
    RESPONDER,
    SessionParams,
    derive_shared,
    eve_recover,
    keygen_private,
    make_token,
)
from .matrix import FieldMatrix, ScalarMatrix, mat_mul
from .surface import SurfaceParams, SurfacePoint, derive_projected_curves, embed, is_on_surface
from .weierstrass import GeneralWeierstrass, ShortForm, map_point, reduce_general, unmap_point

__version__ = "0.1.0"
