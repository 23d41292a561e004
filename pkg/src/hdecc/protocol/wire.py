"""
Message framing.

A frame is a 4-byte big-endian payload length followed by the payload.  The
payload is compact JSON with sorted keys::

    {"matrix":[...],"params_digest":"<64 hex>","side":"initiator","type":"token"}

``matrix`` holds four 16-char lowercase hex entries (row-major) for token
messages and is empty for hello/bye.  Decoding is strict: the payload must
re-encode to exactly the received bytes.
"""

from __future__ import annotations

import json
import re
import struct
from dataclasses import dataclass
from typing import Optional, Tuple

from ..errors import DigestMismatch, Malformed, Truncated
from ..field import encode_hex
from ..matkex import SIDES
from .params import canonical_json

HEADER = struct.Struct(">I")
MAX_PAYLOAD = 1 << 16
TYPES = ("hello", "token", "bye")

_HEX16 = re.compile(r"[0-9a-f]{16}\Z")
_HEX64 = re.compile(r"[0-9a-f]{64}\Z")


@dataclass(frozen=True)
class ProtocolMessage:
    type: str
    side: str
    params_digest: str
    matrix: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.type not in TYPES:
            raise Malformed(f"unknown message type {self.type!r}")
        if self.side not in SIDES:
            raise Malformed(f"unknown side {self.side!r}")
        if not isinstance(self.params_digest, str) or not _HEX64.match(self.params_digest):
            raise Malformed("params_digest must be 64 lowercase hex chars")
        matrix = tuple(self.matrix)
        expected = 4 if self.type == "token" else 0
        if len(matrix) != expected:
            raise Malformed(f"{self.type} message carries {expected} matrix entries, got {len(matrix)}")
        if any(not isinstance(v, int) or not 0 <= v < 1 << 64 for v in matrix):
            raise Malformed("matrix entries must be 64-bit unsigned integers")
        object.__setattr__(self, "matrix", matrix)


def encode_payload(msg: ProtocolMessage) -> bytes:
    return canonical_json({
        "type": msg.type,
        "side": msg.side,
        "matrix": [encode_hex(v) for v in msg.matrix],
        "params_digest": msg.params_digest,
    })


def encode_message(msg: ProtocolMessage) -> bytes:
    payload = encode_payload(msg)
    return HEADER.pack(len(payload)) + payload


def decode_payload(payload: bytes) -> ProtocolMessage:
    try:
        d = json.loads(payload.decode("ascii"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise Malformed(f"payload is not ASCII JSON: {exc}") from None
    if not isinstance(d, dict) or set(d) != {"type", "side", "matrix", "params_digest"}:
        raise Malformed("payload must have exactly the fields type, side, matrix, params_digest")
    matrix = d["matrix"]
    if not isinstance(matrix, list) or any(not isinstance(v, str) or not _HEX16.match(v) for v in matrix):
        raise Malformed("matrix entries must be 16 lowercase hex chars")
    msg = ProtocolMessage(d["type"], d["side"], d["params_digest"], tuple(int(v, 16) for v in matrix))
    if encode_payload(msg) != payload:
        raise Malformed("payload is not in canonical form")
    return msg


def decode_message(data: bytes, expected_digest: Optional[str] = None) -> ProtocolMessage:
    """Decode exactly one frame.  Raises Truncated, Malformed or DigestMismatch."""
    if len(data) < HEADER.size:
        raise Truncated(f"{len(data)} bytes is shorter than the frame header")
    (n,) = HEADER.unpack_from(data)
    if n == 0:
        raise Malformed("empty payload")
    if n > MAX_PAYLOAD:
        raise Malformed(f"payload length {n} exceeds {MAX_PAYLOAD}")
    body = data[HEADER.size:]
    if len(body) < n:
        raise Truncated(f"frame declares {n} bytes, {len(body)} present")
    if len(body) > n:
        raise Malformed(f"{len(body) - n} trailing bytes after frame")
    msg = decode_payload(body)
    if expected_digest is not None and msg.params_digest != expected_digest:
        raise DigestMismatch("peer params digest differs from ours")
    return msg
