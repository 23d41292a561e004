"""Command line front-end.  Run ``hdecc <command> --help`` for details."""

from __future__ import annotations

import argparse
import logging
import re
import sys

from .chain import ChainSpec, lift_to_curve
from .errors import HdeccError, SingularGenerator
from .field import encode_hex
from .matkex import SIDES, SessionParams, derive_shared, eve_recover, make_token
from .matrix import FieldMatrix
from .protocol.params import dump_key, load_key, load_params, save_params
from .protocol.peer import connect, key_from_seed, run_in_process, serve
from .surface import SurfaceParams, sample_real_curve, write_csv
from .weierstrass import GeneralWeierstrass, reduce_general

log = logging.getLogger("hdecc")


def _int(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _int_list(n: int):
    def parse(text: str):
        parts = text.split(",")
        if len(parts) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated integers")
        return tuple(_int(t) for t in parts)
    return parse


def _address(text: str):
    host, sep, port = text.rpartition(":")
    if not sep or not host:
        raise argparse.ArgumentTypeError("address must be HOST:PORT")
    return host, _int(port)


def _range(text: str):
    lo, sep, hi = text.partition(":")
    try:
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("range must be LO:HI") from None


def cmd_setup(args):
    sp = SurfaceParams(args.prime, args.a, args.b, args.c)
    start = lift_to_curve(sp.curve(1), args.start_x)
    session = SessionParams.create(sp, ChainSpec(start, args.counts))
    save_params(session, args.out)
    print(f"G = {session.G.hex()}")
    print(f"K = {','.join(map(str, session.K))}")


def cmd_keygen(args):
    session = load_params(args.params)
    key = key_from_seed(session, args.seed)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(dump_key(session, key))


def cmd_token(args):
    session = load_params(args.params)
    key = load_key(session, args.key)
    print(make_token(session, key, args.side).hex())


def cmd_shared(args):
    session = load_params(args.params)
    key = load_key(session, args.key)
    peer = FieldMatrix.from_hex(session.p, args.peer_token)
    print(derive_shared(session, key, peer, args.side).hex())


def cmd_demo(args):
    session = load_params(args.params)
    alice, bob = run_in_process(session, args.seed_a, args.seed_b)
    log.info("P = %s", alice.own_token_hex)
    log.info("T = %s", bob.own_token_hex)
    print(alice.shared_key_hex)
    print(bob.shared_key_hex)
    if alice.shared_key_hex != bob.shared_key_hex:
        raise HdeccError("initiator and responder disagree on W")


def cmd_serve(args):
    session = load_params(args.params)

    def announce(addr):
        print(f"listening on {addr[0]}:{addr[1]}", file=sys.stderr, flush=True)

    report = serve(session, args.listen, args.seed, on_listening=announce, timeout=args.timeout)
    log.info("peer token %s", report.peer_token_hex)
    print(report.shared_key_hex)


def cmd_connect(args):
    session = load_params(args.params)
    report = connect(session, args.peer, args.seed, timeout=args.timeout)
    log.info("peer token %s", report.peer_token_hex)
    print(report.shared_key_hex)


def cmd_attack(args):
    session = load_params(args.params)
    T = FieldMatrix.from_hex(session.p, args.token_t)
    P = FieldMatrix.from_hex(session.p, args.token_p)
    try:
        print(eve_recover(session, T, P).hex())
    except SingularGenerator:
        print("SingularGenerator")
        raise


def cmd_plot(args):
    lo, hi = args.range
    rows = sample_real_curve(args.a1, args.a2, args.b, lo, hi, args.step,
                             fix_x1=args.fix_x1, fix_x2=args.fix_x2)
    with open(args.out, "w", encoding="ascii", newline="") as fh:
        write_csv(rows, fh)
    print(f"{len(rows)} rows -> {args.out}")


def cmd_reduce(args):
    gw = GeneralWeierstrass(args.prime, args.c1, args.c2, args.c3, args.c4, args.c6)
    sf = reduce_general(gw)
    for name in ("d4", "d6", "A", "B"):
        print(f"{name}={encode_hex(getattr(sf, name))}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hdecc", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("setup", help="derive the four curves, run the generator chain, write params")
    p.add_argument("--prime", type=_int, required=True)
    p.add_argument("--a", type=_int_list(4), required=True, metavar="A1,A2,A3,A4")
    p.add_argument("--b", type=_int, required=True)
    p.add_argument("--c", type=_int_list(4), required=True, metavar="C1,C2,C3,C4")
    p.add_argument("--start-x", type=_int, required=True)
    p.add_argument("--counts", type=_int_list(3), required=True, metavar="S1,S2,S3")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_setup)

    p = sub.add_parser("keygen", help="seeded private key matrix")
    p.add_argument("--params", required=True)
    p.add_argument("--seed", type=_int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("token", help="public token T = G N or P = M G")
    p.add_argument("--params", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--side", choices=SIDES, required=True)
    p.set_defaults(func=cmd_token)

    p = sub.add_parser("shared", help="shared key W from the peer's token")
    p.add_argument("--params", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--peer-token", required=True)
    p.add_argument("--side", choices=SIDES, required=True)
    p.set_defaults(func=cmd_shared)

    p = sub.add_parser("demo", help="in-process exchange, prints both W")
    p.add_argument("--params", required=True)
    p.add_argument("--seed-a", type=_int, required=True, help="initiator seed")
    p.add_argument("--seed-b", type=_int, required=True, help="responder seed")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("serve", help="responder over TCP (one connection)")
    p.add_argument("--params", required=True)
    p.add_argument("--listen", type=_address, required=True, metavar="HOST:PORT")
    p.add_argument("--seed", type=_int, required=True)
    p.add_argument("--timeout", type=float, default=30.0)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("connect", help="initiator over TCP")
    p.add_argument("--params", required=True)
    p.add_argument("--peer", type=_address, required=True, metavar="HOST:PORT")
    p.add_argument("--seed", type=_int, required=True)
    p.add_argument("--timeout", type=float, default=30.0)
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("attack", help="recover W from G, T and P")
    p.add_argument("--params", required=True)
    p.add_argument("--token-t", required=True)
    p.add_argument("--token-p", required=True)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("plot", help="real-valued samples of the surface or a section, as CSV")
    p.add_argument("--a1", type=float, required=True)
    p.add_argument("--a2", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    fix = p.add_mutually_exclusive_group()
    fix.add_argument("--fix-x1", type=float)
    fix.add_argument("--fix-x2", type=float)
    p.add_argument("--range", type=_range, required=True, metavar="LO:HI")
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("reduce", help="general Weierstrass coefficients -> short form")
    p.add_argument("--prime", type=_int, required=True)
    for name in ("c1", "c2", "c3", "c4", "c6"):
        p.add_argument(f"--{name}", type=_int, default=0)
    p.set_defaults(func=cmd_reduce)
    return parser


_NEGATIVE = re.compile(r"-[0-9.]")
_FLAGS = {"-h", "--help", "-v", "--verbose"}


def _attach_negative_values(argv):
    """Turn ``--range -3:3`` into ``--range=-3:3`` so argparse accepts it."""
    out = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and out[-1] not in _FLAGS and _NEGATIVE.match(tok)):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_negative_values(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        args.func(args)
    except HdeccError as exc:
        index = getattr(exc, "index", None)
        where = f" (curve {index})" if index is not None else ""
        print(f"error: {type(exc).__name__}{where}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
