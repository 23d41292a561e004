"""Randomized key-agreement run: initiator and responder must derive the same W."""

import argparse
import random
import time

from hdecc.experiments import SessionConfig, random_session
from hdecc.matkex import INITIATOR, RESPONDER, derive_shared, keygen_private, make_token


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sessions", type=int, default=1000)
    ap.add_argument("--p-max", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cfg = SessionConfig(p_max=args.p_max)
    t0 = time.perf_counter()
    agree = 0
    for _ in range(args.sessions):
        s = random_session(rng, cfg)
        M, N = keygen_private(s, rng), keygen_private(s, rng)
        W_a = derive_shared(s, M, make_token(s, N, RESPONDER), INITIATOR)
        W_b = derive_shared(s, N, make_token(s, M, INITIATOR), RESPONDER)
        agree += W_a == W_b
    dt = time.perf_counter() - t0
    print(f"{agree}/{args.sessions} sessions agree ({dt:.2f}s)")


if __name__ == "__main__":
    main()
