"""Recover W = M G N from the public view (G, T, P) as P G^-1 T.

Reports how often G is singular and how often recovery matches the honest
shared key.  Optionally runs one session over a 64-bit prime.
"""

import argparse
import random

from hdecc.chain import ChainSpec, lift_to_curve
from hdecc.experiments import random_session, random_surface
from hdecc.matkex import (
    INITIATOR,
    RESPONDER,
    SessionParams,
    derive_shared,
    eve_recover,
    keygen_private,
    make_token,
)

P64 = 18446744073709551557


def probe(s, rng):
    M, N = keygen_private(s, rng), keygen_private(s, rng)
    T, P = make_token(s, N, RESPONDER), make_token(s, M, INITIATOR)
    W = derive_shared(s, M, T, INITIATOR)
    return W, eve_recover(s, T, P)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sessions", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--big", action="store_true", help="also probe one 64-bit session")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    singular = hits = 0
    for _ in range(args.sessions):
        s = random_session(rng)
        if s.G.det() == 0:
            singular += 1
            continue
        W, guess = probe(s, rng)
        hits += W == guess
    usable = args.sessions - singular
    print(f"singular G: {singular}/{args.sessions}")
    print(f"recovered W: {hits}/{usable}")

    if args.big:
        sp = random_surface(rng, P64)
        start = lift_to_curve(sp.curve(1), rng.randrange(P64))
        s = SessionParams.create(sp, ChainSpec(start, (rng.randrange(1, 2 ** 40),) * 3))
        W, guess = probe(s, rng)
        print(f"64-bit session: W = {W.hex()}")
        print(f"          Eve:  W = {guess.hex()}  match={W == guess}")


if __name__ == "__main__":
    main()
