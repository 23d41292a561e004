import io
import random

import pytest
from hypothesis import given, strategies as st

from hdecc.errors import DegenerateCurve
from hdecc.experiments import random_surface
from hdecc.field import inv_mod, legendre_symbol, sqrt_mod
from hdecc.surface import (
    SurfaceParams,
    SurfacePoint,
    derive_projected_curves,
    embed,
    is_on_surface,
    sample_real_curve,
    write_csv,
)

BIG = 18446744073709551557


def test_zero_projection_constants_keep_b():
    sp = SurfaceParams(101, (1, 2, 3, 4), 9, (0, 0, 0, 0))
    assert [c.b for c in derive_projected_curves(sp)] == [9, 9, 9, 9]
    assert [c.a for c in sp.curves] == [1, 2, 3, 4]


def test_b1_direct_evaluation():
    sp = SurfaceParams(BIG, (1, 1, 1, 1), 2, (1, 1, 1, 1))
    # b + c2^3 + c3^3 + c4^3 + a2 c2 + a3 c3 + a4 c4
    assert sp.curve(1).b == 2 + 1 + 1 + 1 + 1 + 1 + 1 == 8


def test_each_b_uses_the_other_three_indices():
    p = 1000003
    a, b, c = (3, 5, 7, 11), 13, (17, 19, 23, 29)
    sp = SurfaceParams(p, a, b, c)
    for i in range(4):
        want = (b + sum(c[j] ** 3 + a[j] * c[j] for j in range(4) if j != i)) % p
        assert sp.curve(i + 1).b == want


def test_b_i_ignores_own_index():
    p = 1009
    base = SurfaceParams(p, (1, 2, 3, 4), 5, (6, 7, 8, 9))
    moved = SurfaceParams(p, (1, 2, 3, 4), 5, (100, 7, 8, 9))
    assert base.curve(1) == moved.curve(1)
    assert base.curve(2) != moved.curve(2)


def test_degenerate_index_one():
    # y^2 = x^3 - 3x + 2 is singular
    with pytest.raises(DegenerateCurve) as info:
        SurfaceParams(17, (-3, 1, 1, 1), 2, (0, 0, 0, 0))
    assert info.value.index == 1


def test_degenerate_index_three_via_projection_constant():
    # b_3 = 0 + (1 + 1) = 2 with a_3 = -3: singular; the other curves are fine
    with pytest.raises(DegenerateCurve) as info:
        SurfaceParams(17, (1, 1, -3, 1), 0, (1, 0, 0, 0))
    assert info.value.index == 3


def test_degenerate_by_solving_b_squared():
    # choose a_1 and solve 27 b_1^2 = -4 a_1^3 mod p for b = b_1 (c = 0)
    p = 103
    for a1 in range(1, p):
        target = (-4 * a1 ** 3) * inv_mod(27, p) % p
        if legendre_symbol(target, p) == 1:
            break
    b1 = sqrt_mod(target, p)
    assert (4 * a1 ** 3 + 27 * b1 ** 2) % p == 0
    with pytest.raises(DegenerateCurve) as info:
        SurfaceParams(p, (a1, 1, 1, 1), b1, (0, 0, 0, 0))
    assert info.value.index == 1


def test_on_surface_examples():
    sp = SurfaceParams(101, (3, 4, 5, 6), 7, (8, 9, 10, 11))
    E1 = sp.curve(1)
    pt = next(q for q in E1.points() if not q.is_infinity)
    lifted = embed(sp, 1, pt)
    assert lifted.x[1:] == (9, 10, 11)
    assert is_on_surface(sp, lifted)
    assert not is_on_surface(sp, SurfacePoint((lifted.y + 1) % 101, lifted.x))


def test_origin_on_surface_when_b_zero():
    sp = SurfaceParams(101, (3, 1, 1, 1), 0, (1, 1, 1, 1))
    assert is_on_surface(sp, SurfacePoint(0, (0, 0, 0, 0)))


def test_projection_consistency_random():
    rng = random.Random(17)
    for _ in range(5):
        sp = random_surface(rng, rng.choice((211, 223, 227)))
        for i in range(1, 5):
            for pt in sp.curve(i).points():
                if not pt.is_infinity:
                    assert is_on_surface(sp, embed(sp, i, pt))


@given(st.integers(0, 10 ** 6))
def test_derive_is_deterministic(seed):
    rng = random.Random(seed)
    sp = random_surface(rng, 1009)
    again = SurfaceParams(sp.p, sp.a, sp.b, sp.c)
    assert derive_projected_curves(sp) == derive_projected_curves(again)


def test_sample_fixed_x1():
    rows = sample_real_curve(-4, -5, 3.5, -4, 4, 0.05, fix_x1=1)
    assert rows
    for x1, x2, y in rows:
        assert x1 == 1
        rhs = x2 ** 3 - 5 * x2 + 0.5
        assert abs(y * y - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_sample_fixed_x2():
    rows = sample_real_curve(-4, -5, 3.5, -4, 4, 0.05, fix_x2=-2)
    assert rows
    for x1, x2, y in rows:
        assert x2 == -2
        rhs = x1 ** 3 - 4 * x1 + (-8 + 10 + 3.5)
        assert abs(y * y - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_sample_single_zero_row():
    assert sample_real_curve(0, 0, 0, 0, 0, 1.0) == [(0.0, 0.0, 0.0)]


def test_sample_both_branches():
    rows = sample_real_curve(-4, -5, 3.5, 0, 0, 1.0)
    assert sorted(y for *_, y in rows) == [-(3.5 ** 0.5), 3.5 ** 0.5]


def test_csv_header():
    buf = io.StringIO()
    write_csv([(1.0, 2.0, 0.5)], buf)
    assert buf.getvalue() == "x1,x2,y\n1.0,2.0,0.5\n"
