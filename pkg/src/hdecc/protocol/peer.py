"""
Two-peer key exchange over a stream socket.

Message order (one exchange per connection)::

    initiator -> hello      responder -> hello     (digests compared by both)
    initiator -> token P    responder -> token T
    initiator -> bye        responder -> bye

The initiator (Alice, private M) connects; the responder (Bob, private N)
serves.  A digest mismatch aborts both sides before any token is sent.
"""

from __future__ import annotations

import logging
import random
import socket
import time
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from ..errors import ConnectionFailed, DigestMismatch, Malformed, ProtocolViolation, Truncated
from ..matkex import INITIATOR, RESPONDER, SessionParams, derive_shared, keygen_private, make_token
from ..matrix import FieldMatrix, ScalarMatrix
from .params import params_digest
from .wire import HEADER, MAX_PAYLOAD, ProtocolMessage, decode_message, encode_message

log = logging.getLogger(__name__)

Address = Tuple[str, int]


@dataclass(frozen=True)
class PeerReport:
    shared_key_hex: str
    peer_token_hex: str
    own_token_hex: str


def _recv_exact(sock, n: int) -> bytes:
    buf = bytearray()
    while len(buf) < n:
        chunk = sock.recv(n - len(buf))
        if not chunk:
            break
        buf += chunk
    return bytes(buf)


def recv_frame(sock) -> bytes:
    header = _recv_exact(sock, HEADER.size)
    if not header:
        raise ConnectionFailed("peer closed the connection")
    if len(header) < HEADER.size:
        raise Truncated("connection closed inside a frame header")
    (n,) = HEADER.unpack(header)
    if n == 0 or n > MAX_PAYLOAD:
        raise Malformed(f"bad frame length {n}")
    body = _recv_exact(sock, n)
    if len(body) < n:
        raise Truncated(f"frame declares {n} bytes, connection closed after {len(body)}")
    return header + body


def _recv(sock, digest: str, want_type: str, want_side: str) -> ProtocolMessage:
    msg = decode_message(recv_frame(sock))
    if msg.type != want_type or msg.side != want_side:
        raise ProtocolViolation(f"expected {want_type} from {want_side}, got {msg.type} from {msg.side}")
    if msg.params_digest != digest:
        raise DigestMismatch("peer params digest differs from ours")
    return msg


def exchange(sock, session: SessionParams, key: ScalarMatrix, side: str) -> PeerReport:
    """Run one exchange on a connected stream socket as ``side``."""
    digest = params_digest(session)
    peer = RESPONDER if side == INITIATOR else INITIATOR
    own_token = make_token(session, key, side)

    def send(type_, matrix=()):
        sock.sendall(encode_message(ProtocolMessage(type_, side, digest, matrix)))

    if side == INITIATOR:
        send("hello")
        _recv(sock, digest, "hello", peer)
        send("token", own_token.entries)
        peer_msg = _recv(sock, digest, "token", peer)
    else:
        hello = decode_message(recv_frame(sock))
        if hello.type != "hello" or hello.side != peer:
            raise ProtocolViolation(f"expected hello from {peer}, got {hello.type} from {hello.side}")
        # answer with our own digest so the initiator can report the mismatch too
        send("hello")
        if hello.params_digest != digest:
            raise DigestMismatch("peer params digest differs from ours")
        peer_msg = _recv(sock, digest, "token", peer)
        send("token", own_token.entries)

    if any(v >= session.p for v in peer_msg.matrix):
        raise Malformed(f"peer token entry not reduced mod {session.p}")
    peer_token = FieldMatrix(session.p, peer_msg.matrix)
    W = derive_shared(session, key, peer_token, side)

    if side == INITIATOR:
        send("bye")
        _recv(sock, digest, "bye", peer)
    else:
        _recv(sock, digest, "bye", peer)
        send("bye")
    return PeerReport(W.hex(), peer_token.hex(), own_token.hex())


def key_from_seed(session: SessionParams, seed: int) -> ScalarMatrix:
    return keygen_private(session, random.Random(seed))


def serve(session: SessionParams, address: Address, seed: int,
          on_listening: Optional[Callable[[Address], None]] = None,
          timeout: float = 30.0) -> PeerReport:
    """Accept one connection and run the responder side."""
    key = key_from_seed(session, seed)
    try:
        srv = socket.create_server(address)
    except OSError as exc:
        raise ConnectionFailed(f"cannot listen on {address}: {exc}") from None
    with srv:
        srv.settimeout(timeout)
        bound = srv.getsockname()[:2]
        log.info("listening on %s:%d", *bound)
        if on_listening is not None:
            on_listening(bound)
        try:
            conn, peer_addr = srv.accept()
        except OSError as exc:
            raise ConnectionFailed(f"no peer connected: {exc}") from None
        with conn:
            conn.settimeout(timeout)
            log.info("peer %s:%d connected", *peer_addr[:2])
            return _guarded(exchange, conn, session, key, RESPONDER)


def connect(session: SessionParams, address: Address, seed: int,
            timeout: float = 30.0, retry_for: float = 5.0) -> PeerReport:
    """Connect to a serving peer and run the initiator side."""
    key = key_from_seed(session, seed)
    deadline = time.monotonic() + retry_for
    while True:
        try:
            conn = socket.create_connection(address, timeout=timeout)
            break
        except OSError as exc:
            if time.monotonic() >= deadline:
                raise ConnectionFailed(f"cannot connect to {address}: {exc}") from None
            time.sleep(0.05)
    with conn:
        return _guarded(exchange, conn, session, key, INITIATOR)


def _guarded(fn, *args):
    try:
        return fn(*args)
    except (socket.timeout, ConnectionError) as exc:
        raise ConnectionFailed(str(exc) or type(exc).__name__) from None


def run_peer(role: str, address: Address, session: SessionParams, seed: int, **kwargs) -> PeerReport:
    if role == "serve":
        return serve(session, address, seed, **kwargs)
    if role == "connect":
        return connect(session, address, seed, **kwargs)
    raise ValueError(f"role must be 'serve' or 'connect', got {role!r}")


def run_in_process(session: SessionParams, seed_a: int, seed_b: int) -> Tuple[PeerReport, PeerReport]:
    """The same exchange with no sockets: (initiator report, responder report)."""
    M = key_from_seed(session, seed_a)
    N = key_from_seed(session, seed_b)
    P = make_token(session, M, INITIATOR)
    T = make_token(session, N, RESPONDER)
    W_a = derive_shared(session, M, T, INITIATOR)
    W_b = derive_shared(session, N, P, RESPONDER)
    return PeerReport(W_a.hex(), T.hex(), P.hex()), PeerReport(W_b.hex(), P.hex(), T.hex())
