"""
Params and key files.

Params files are JSON with lowercase 16-char hex field elements.  The
canonical form (sorted keys, no whitespace) is what gets hashed for
``params_digest``; format version 1 uses SHA-256.

Loading re-runs the generator chain and checks that it reproduces G and K.
"""

from __future__ import annotations

import hashlib
import json
import re
from typing import Any, Dict

from ..chain import ChainSpec
from ..errors import DigestMismatch, HdeccError, Malformed, NotOnCurve
from ..field import encode_hex
from ..matkex import SessionParams
from ..matrix import ScalarMatrix
from ..surface import SurfaceParams

PARAMS_VERSION = 1
_DIGESTS = {1: hashlib.sha256}
_HEX16 = re.compile(r"[0-9a-f]{16}\Z")
_HEX64 = re.compile(r"[0-9a-f]{64}\Z")


def canonical_json(obj: Any) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("ascii")


def params_to_dict(session: SessionParams) -> Dict[str, Any]:
    sp, chain, gens = session.surface, session.chain, session.generators
    return {
        "version": PARAMS_VERSION,
        "p": encode_hex(sp.p),
        "a": [encode_hex(v) for v in sp.a],
        "b": encode_hex(sp.b),
        "c": [encode_hex(v) for v in sp.c],
        "G": [encode_hex(v) for v in gens.G.entries],
        "K": list(gens.K),
        "chain": {
            "start_x": encode_hex(chain.start.x),
            "start_y": encode_hex(chain.start.y),
            "counts": list(chain.counts),
        },
    }


def dump_params(session: SessionParams) -> str:
    return canonical_json(params_to_dict(session)).decode("ascii") + "\n"


def params_digest(session: SessionParams) -> str:
    return _DIGESTS[PARAMS_VERSION](canonical_json(params_to_dict(session))).hexdigest()


def _hex(value, what: str) -> int:
    if not isinstance(value, str) or not _HEX16.match(value):
        raise Malformed(f"{what}: expected 16 lowercase hex chars, got {value!r}")
    return int(value, 16)


def _ints(value, n: int, what: str):
    if (not isinstance(value, list) or len(value) != n
            or any(not isinstance(v, int) or isinstance(v, bool) for v in value)):
        raise Malformed(f"{what}: expected {n} integers")
    return tuple(value)


def _hexes(value, n: int, what: str):
    if not isinstance(value, list) or len(value) != n:
        raise Malformed(f"{what}: expected {n} hex entries")
    return tuple(_hex(v, what) for v in value)


def params_from_dict(d: Dict[str, Any]) -> SessionParams:
    """Validate a params dict and re-derive the session from it."""
    keys = {"version", "p", "a", "b", "c", "G", "K", "chain"}
    if not isinstance(d, dict) or set(d) != keys:
        raise Malformed(f"params must have exactly the fields {sorted(keys)}")
    if type(d["version"]) is not int or d["version"] not in _DIGESTS:
        raise Malformed(f"unsupported params version {d['version']!r}")
    chain = d["chain"]
    if not isinstance(chain, dict) or set(chain) != {"start_x", "start_y", "counts"}:
        raise Malformed("chain must have fields start_x, start_y, counts")

    p = _hex(d["p"], "p")
    sp = SurfaceParams(p, _hexes(d["a"], 4, "a"), _hex(d["b"], "b"), _hexes(d["c"], 4, "c"))
    try:
        start = sp.curve(1).point(_hex(chain["start_x"], "start_x"), _hex(chain["start_y"], "start_y"))
    except NotOnCurve as exc:
        raise Malformed(f"chain start: {exc}") from None
    spec = ChainSpec(start, _ints(chain["counts"], 3, "counts"))
    G = _hexes(d["G"], 4, "G")
    K = _ints(d["K"], 4, "K")
    try:
        session = SessionParams.create(sp, spec, orders=K)
    except HdeccError as exc:
        raise Malformed(f"stored orders do not verify: {exc}") from None
    if session.G.entries != G:
        raise Malformed("stored G does not match the generator chain")
    return session


def load_params(path) -> SessionParams:
    with open(path, encoding="ascii") as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as exc:
            raise Malformed(f"{path}: {exc}") from None
    return params_from_dict(d)


def save_params(session: SessionParams, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dump_params(session))


# -- private key files --------------------------------------------------------


def dump_key(session: SessionParams, key: ScalarMatrix) -> str:
    d = {"version": PARAMS_VERSION, "params_digest": params_digest(session),
         "entries": list(key.entries)}
    return canonical_json(d).decode("ascii") + "\n"


def load_key(session: SessionParams, path) -> ScalarMatrix:
    with open(path, encoding="ascii") as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as exc:
            raise Malformed(f"{path}: {exc}") from None
    if not isinstance(d, dict) or set(d) != {"version", "params_digest", "entries"}:
        raise Malformed("key file must have fields version, params_digest, entries")
    digest = d["params_digest"]
    if not isinstance(digest, str) or not _HEX64.match(digest):
        raise Malformed("params_digest must be 64 lowercase hex chars")
    if digest != params_digest(session):
        raise DigestMismatch("key was generated for different params")
    return ScalarMatrix(_ints(d["entries"], 4, "entries"))

