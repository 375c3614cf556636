import random

import pytest

from hermcodes.curve import CurveError, branch_expand, enumerate_points, valuation
from hermcodes.functions import FunctionElement


def all_places_valuation_sum(ctx, f):
    return sum(valuation(ctx.curve, P, f) for P in ctx.curve.places)


def test_place_counts_q3(ctx3):
    places = enumerate_points(ctx3.curve)
    assert len(places) == 28                      # q^3 + 1
    xz = ctx3.curve.x_zero_places
    assert len(xz) == 3
    # (0,0), (0,alpha), (0,-alpha) with alpha^2 = -1
    F = ctx3.curve.spec
    ys = [P.y for P in xz]
    assert 0 in ys
    for y in ys:
        if y != 0:
            assert F.mul(y, y) == F.neg(1)
    assert places[-1].is_infinite


def test_place_counts_q4(ctx4):
    assert len(ctx4.curve.places) == 65           # q^3 + 1
    assert len(ctx4.curve.x_zero_places) == 4


def test_affine_places_satisfy_curve_equation(ctx3, ctx4):
    for ctx in (ctx3, ctx4):
        F, q = ctx.curve.spec, ctx.q
        for P in ctx.curve.places:
            if P.is_infinite:
                continue
            assert F.add(F.pow(P.y, q), P.y) == F.pow(P.x, q + 1)


def test_branch_series_at_origin_q3(ctx3):
    origin = ctx3.curve.x_zero_places[0]
    assert (origin.x, origin.y) == (0, 0)
    exp = branch_expand(ctx3.curve, origin, 12)
    # y(t) = t^4 - t^12 + O(t^13)
    F = ctx3.curve.spec
    expected = [0] * 13
    expected[4] = 1
    expected[12] = F.neg(1)
    assert exp.coeffs == expected


def test_branch_series_constant_terms(ctx3):
    for P in ctx3.curve.x_zero_places:
        exp = branch_expand(ctx3.curve, P, 6)
        assert exp.coefficient(0) == P.y


def test_branch_series_satisfies_curve(ctx3, ctx4):
    # substitute y(t) into y^q + y - (x0 + t)^(q+1); zero through t^20
    for ctx in (ctx3, ctx4):
        F, q = ctx.curve.spec, ctx.q
        rng = random.Random(1)
        sample = rng.sample([P for P in ctx.curve.places if not P.is_infinite], 5)
        for P in sample:
            T = 20
            exp = branch_expand(ctx.curve, P, T)
            y = exp.coeffs
            lhs = [0] * (T + 1)
            for i, c in enumerate(y):
                if c and q * i <= T:
                    lhs[q * i] = F.add(lhs[q * i], F.pow(c, q))
            for i, c in enumerate(y):
                lhs[i] = F.add(lhs[i], c)
            rhs = [0] * (T + 1)
            rhs[0] = F.pow(P.x, q + 1)
            rhs[1] = F.add(rhs[1], F.pow(P.x, q))
            rhs[q] = F.add(rhs[q], P.x)
            rhs[q + 1] = F.add(rhs[q + 1], 1)
            assert lhs == rhs


def test_branch_precisions_agree(ctx3):
    P = ctx3.curve.x_zero_places[1]
    lo = branch_expand(ctx3.curve, P, 8)
    hi = branch_expand(ctx3.curve, P, 25)
    assert lo.coeffs == hi.coeffs[:9]


def test_branch_expand_rejects_infinite_place(ctx3):
    with pytest.raises(CurveError):
        branch_expand(ctx3.curve, ctx3.curve.infinite_place, 5)


def x_function(ctx):
    return FunctionElement.monomial(ctx.curve.spec, ctx.q, 1, 0)


def y_function(ctx):
    return FunctionElement.monomial(ctx.curve.spec, ctx.q, 0, 1)


def test_valuations_of_coordinates_q3(ctx3):
    Q1 = ctx3.curve.x_zero_places[0]
    x = x_function(ctx3)
    y = y_function(ctx3)
    assert valuation(ctx3.curve, Q1, x) == 1       # x is a uniformizer there
    assert valuation(ctx3.curve, ctx3.curve.infinite_place, x) == -3
    assert valuation(ctx3.curve, Q1, y) == 4
    # div(x) must have total degree zero: zeros at the three x = 0 points
    assert all_places_valuation_sum(ctx3, x) == 0


def test_valuation_of_zero_rejected(ctx3):
    with pytest.raises(CurveError):
        valuation(ctx3.curve, ctx3.curve.places[0],
                  FunctionElement.zero(ctx3.curve.spec, 3))


def random_function(ctx, rng, max_terms=4, max_n=2):
    spec, q = ctx.curve.spec, ctx.q
    while True:
        mono = {}
        for _ in range(rng.randint(1, max_terms)):
            mono[(rng.randint(0, 3), rng.randint(0, q - 1))] = rng.randrange(1, spec.order)
        f = FunctionElement(spec, q, mono, rng.randint(0, max_n))
        if not f.is_zero():
            return f


def test_principal_divisors_have_degree_zero(ctx3, ctx4):
    for ctx, count in ((ctx3, 50), (ctx4, 12)):
        rng = random.Random(17)
        for _ in range(count):
            f = random_function(ctx, rng)
            assert all_places_valuation_sum(ctx, f) == 0, str(f)


def test_valuation_is_multiplicative_and_ultrametric(ctx3):
    rng = random.Random(23)
    places = [ctx3.curve.places[i] for i in (0, 5, 17, 27)]
    for _ in range(25):
        f = random_function(ctx3, rng)
        g = random_function(ctx3, rng)
        s = f + g
        for P in places:
            vf = valuation(ctx3.curve, P, f)
            vg = valuation(ctx3.curve, P, g)
            assert valuation(ctx3.curve, P, f * g) == vf + vg
            if not s.is_zero():
                assert valuation(ctx3.curve, P, s) >= min(vf, vg)


def test_place_ordering_is_deterministic(ctx3):
    # affine places sorted by coefficient tuples, infinite place last
    keys = [(tuple(ctx3.curve.spec.coeff_vector(P.x)),
             tuple(ctx3.curve.spec.coeff_vector(P.y)))
            for P in ctx3.curve.places if not P.is_infinite]
    assert keys == sorted(keys)
