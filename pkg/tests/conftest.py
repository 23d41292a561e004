import random

import pytest

from hdecc import CurveParams, SurfaceParams


def naive_add(P, Q, a, p):
    """Independent affine group law (Fermat inverses) used as an oracle."""
    if P is None:
        return Q
    if Q is None:
        return P
    if P[0] == Q[0] and (P[1] + Q[1]) % p == 0:
        return None
    if P == Q:
        s = (3 * P[0] ** 2 + a) * pow(2 * P[1], p - 2, p) % p
    else:
        s = (Q[1] - P[1]) * pow(Q[0] - P[0], p - 2, p) % p
    x = (s * s - P[0] - Q[0]) % p
    return x, (s * (P[0] - x) - P[1]) % p


def naive_multiple(k, P, a, p):
    R = None
    for _ in range(k):
        R = naive_add(R, P, a, p)
    return R


def enumerate_points(p, a, b):
    """All affine solutions by double loop, plus None for infinity."""
    return [None] + [(x, y) for x in range(p) for y in range(p)
                     if (y * y - x ** 3 - a * x - b) % p == 0]


@pytest.fixture
def e17():
    return CurveParams(17, 2, 2)


@pytest.fixture
def twin17():
    """Four identical projected curves y^2 = x^3 + 2x + 2 mod 17 (c = 0)."""
    return SurfaceParams(17, (2, 2, 2, 2), 2, (0, 0, 0, 0))


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance reporting -----------------------------------------------------

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        number, title = marker.args
        _ACCEPTANCE.append((number, title, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{number:>2} {title} ({duration:.2f}s)")
