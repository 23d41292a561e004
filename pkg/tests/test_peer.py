import random
import socket
import threading

import pytest

from hdecc.errors import DigestMismatch, ProtocolViolation
from hdecc.experiments import random_session
from hdecc.matkex import INITIATOR, RESPONDER, make_token
from hdecc.protocol.params import params_digest
from hdecc.protocol.peer import connect, exchange, key_from_seed, run_in_process, serve
from hdecc.protocol.wire import ProtocolMessage, encode_message


class Recorder:
    """Socket wrapper that keeps a copy of everything sent."""

    def __init__(self, sock):
        self.sock = sock
        self.sent = bytearray()

    def sendall(self, data):
        self.sent += data
        self.sock.sendall(data)

    def recv(self, n):
        return self.sock.recv(n)


def _pair_run(session_a, session_b, seed_a, seed_b):
    a, b = socket.socketpair()
    out = {}

    def run(name, sock, session, seed, side):
        try:
            out[name] = exchange(sock, session, key_from_seed(session, seed), side)
        except Exception as exc:  # collected for the assertion
            out[name] = exc
        finally:
            sock.close()

    ts = [threading.Thread(target=run, args=("a", a, session_a, seed_a, INITIATOR)),
          threading.Thread(target=run, args=("b", b, session_b, seed_b, RESPONDER))]
    for t in ts:
        t.start()
    for t in ts:
        t.join(10)
    return out["a"], out["b"]


def test_socketpair_exchange_matches_in_process():
    s = random_session(random.Random(73))
    ra, rb = _pair_run(s, s, 1, 2)
    assert ra.shared_key_hex == rb.shared_key_hex
    alice, bob = run_in_process(s, 1, 2)
    assert ra == alice and rb == bob
    assert len(ra.shared_key_hex) == 64


def test_digest_mismatch_sends_no_token():
    rng = random.Random(79)
    s1, s2 = random_session(rng), random_session(rng)
    a, b = socket.socketpair()
    rec = Recorder(b)
    result = {}

    def responder():
        try:
            exchange(rec, s2, key_from_seed(s2, 5), RESPONDER)
        except Exception as exc:
            result["b"] = exc
        finally:
            b.close()

    t = threading.Thread(target=responder)
    t.start()
    with pytest.raises(DigestMismatch):
        exchange(a, s1, key_from_seed(s1, 4), INITIATOR)
    a.close()
    t.join(10)
    assert isinstance(result["b"], DigestMismatch)
    assert b"token" not in bytes(rec.sent)


def test_responder_replay_is_deterministic():
    s = random_session(random.Random(83))
    M = key_from_seed(s, 11)
    digest = params_digest(s)
    P = make_token(s, M, INITIATOR)
    replay = (encode_message(ProtocolMessage("hello", INITIATOR, digest))
              + encode_message(ProtocolMessage("token", INITIATOR, digest, P.entries))
              + encode_message(ProtocolMessage("bye", INITIATOR, digest)))
    transcripts = []
    for _ in range(2):
        a, b = socket.socketpair()
        a.sendall(replay)
        rec = Recorder(b)
        report = exchange(rec, s, key_from_seed(s, 12), RESPONDER)
        transcripts.append(bytes(rec.sent))
        a.close()
        b.close()
    assert transcripts[0] == transcripts[1]
    assert report.shared_key_hex == run_in_process(s, 11, 12)[1].shared_key_hex


def test_out_of_order_message():
    s = random_session(random.Random(89))
    digest = params_digest(s)
    a, b = socket.socketpair()
    a.sendall(encode_message(ProtocolMessage("token", INITIATOR, digest, (1, 2, 3, 4))))
    with pytest.raises(ProtocolViolation):
        exchange(b, s, key_from_seed(s, 1), RESPONDER)
    a.close()
    b.close()


def test_duplicate_hello():
    s = random_session(random.Random(97))
    digest = params_digest(s)
    a, b = socket.socketpair()
    hello = encode_message(ProtocolMessage("hello", INITIATOR, digest))
    a.sendall(hello + hello)
    with pytest.raises(ProtocolViolation):
        exchange(b, s, key_from_seed(s, 1), RESPONDER)
    a.close()
    b.close()


def test_loopback_tcp():
    s = random_session(random.Random(101))
    ready = threading.Event()
    bound = {}
    result = {}

    def on_listening(addr):
        bound["addr"] = addr
        ready.set()

    def server():
        result["b"] = serve(s, ("127.0.0.1", 0), 22, on_listening=on_listening, timeout=10)

    t = threading.Thread(target=server)
    t.start()
    assert ready.wait(10)
    ra = connect(s, bound["addr"], 21, timeout=10)
    t.join(10)
    assert ra.shared_key_hex == result["b"].shared_key_hex
    assert ra == run_in_process(s, 21, 22)[0]
