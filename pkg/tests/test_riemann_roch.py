import itertools
import random

import pytest

from hermcodes.functions import FunctionElement
from hermcodes.gf import rank_int
from hermcodes.riemann_roch import (DivisorVector, NotInRingError, RRError,
                                    function_rho, rr_basis, rr_dim)


def semigroup_elements_upto(gens, bound):
    """Independent oracle: all subset sums of the generators up to bound."""
    reach = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = v + g
            if w <= bound and w not in reach:
                reach.add(w)
                frontier.append(w)
    return sorted(reach)


def test_dim_of_zero_divisor(ctx3):
    basis = ctx3.rr.basis((0, 0, 0))
    assert basis.dim == 1
    assert basis.basis[0] == FunctionElement.one(ctx3.curve.spec, 3)


def test_dims_match_riemann_roch_formula(ctx3):
    # deg > 2g - 2 = 4 pins the dimension to deg + 1 - g
    assert ctx3.rr.dim((2, 2, 1)) == 5 + 1 - 3
    assert ctx3.rr.dim((2, 2, 3)) == 7 + 1 - 3


def test_one_point_dim_against_semigroup_count(ctx3):
    # dim L(n Q_1) counts pole orders in the semigroup <3,4> up to n
    oracle = semigroup_elements_upto([3, 4], 6)
    assert oracle == [0, 3, 4, 6]
    assert ctx3.rr.dim((6, 0, 0)) == len(oracle)
    for n in range(0, 7):
        expect = len(semigroup_elements_upto([3, 4], n))
        assert ctx3.rr.dim((n, 0, 0)) == expect


def test_gap_dimensions(ctx3):
    assert ctx3.rr.dim((1, 0, 0)) == 1            # 1 is a gap of <3,4>
    assert ctx3.rr.dim((0, 0, 0)) == 1


def test_dimension_jumps_are_zero_or_one(ctx3):
    for a in itertools.product(range(4), repeat=3):
        d = ctx3.rr.dim(a)
        for k in range(3):
            up = list(a)
            up[k] += 1
            jump = ctx3.rr.dim(tuple(up)) - d
            assert jump in (0, 1), (a, k)


def test_basis_monotone_under_divisor_growth(ctx3):
    rng = random.Random(9)
    spec = ctx3.curve.spec
    for _ in range(10):
        a = tuple(rng.randint(0, 3) for _ in range(3))
        b = tuple(x + rng.randint(0, 2) for x in a)
        Ba, Bb = ctx3.rr.basis(a), ctx3.rr.basis(b)
        Nb = max(b) if any(b) else 0
        cands = ctx3.rr.candidates(Nb)
        index = {mono: i for i, mono in enumerate(cands)}

        def vec(f):
            shift = Nb - f.denom_exp
            out = [0] * len(cands)
            for (i, j), c in f.numerator.items():
                out[index[(i + shift, j)]] = c
            return out

        big = [vec(f) for f in Bb.basis]
        rank_big = rank_int(spec, big, len(cands))
        assert rank_big == Bb.dim
        stacked = big + [vec(f) for f in Ba.basis]
        assert rank_int(spec, stacked, len(cands)) == rank_big


def test_basis_elements_respect_budget_and_attain_jumps(ctx3):
    for a in [(2, 1, 1), (3, 2, 2), (6, 0, 0), (2, 2, 3)]:
        basis = ctx3.rr.basis(a)
        target = DivisorVector(a)
        attained = [False] * 3
        for f in basis.basis:
            rho = ctx3.rr.rho(f)
            assert rho <= target, (a, str(f))
            for k in range(3):
                if rho[k] == a[k]:
                    attained[k] = True
        for k in range(3):
            if a[k] > 0 and ctx3.rr.dim(a) > ctx3.rr.dim(tuple(
                    x - 1 if i == k else x for i, x in enumerate(a))):
                assert attained[k], (a, k)


def test_function_rho_examples(ctx3):
    spec = ctx3.curve.spec
    inv_x = FunctionElement.monomial(spec, 3, 0, 0, denom_exp=1)       # 1/x
    y_over_x2 = FunctionElement.monomial(spec, 3, 0, 1, denom_exp=2)   # y/x^2
    one = FunctionElement.one(spec, 3)
    assert ctx3.rr.rho(inv_x).entries == (1, 1, 1)
    assert ctx3.rr.rho(y_over_x2).entries == (0, 2, 2)
    assert ctx3.rr.rho(one).entries == (0, 0, 0)


def test_function_rho_rejects_zero_and_outside_ring(ctx3, ctx4):
    with pytest.raises(RRError):
        ctx3.rr.rho(FunctionElement.zero(ctx3.curve.spec, 3))
    # x has a pole only at infinity, so it is not in R
    x = FunctionElement.monomial(ctx3.curve.spec, 3, 1, 0)
    with pytest.raises(NotInRingError):
        ctx3.rr.rho(x)
    # for q = 4 only three of the four x = 0 points are chosen; 1/x has a
    # pole at the fourth and must be rejected with the place named
    inv_x = FunctionElement.monomial(ctx4.curve.spec, 4, 0, 0, denom_exp=1)
    with pytest.raises(NotInRingError) as err:
        ctx4.rr.rho(inv_x)
    assert "x=0" in str(err.value)


def test_module_level_wrappers(ctx3):
    got = rr_dim(ctx3.curve, ctx3.rr.q_places, (2, 2, 1))
    assert got == 3
    basis = rr_basis(ctx3.curve, ctx3.rr.q_places, (1, 1, 1))
    assert basis.dim == 2
    f = basis.basis[0]
    assert function_rho(ctx3.curve, ctx3.rr.q_places, f) <= DivisorVector((1, 1, 1))


def test_arity_mismatch_rejected(ctx3):
    with pytest.raises(RRError):
        ctx3.rr.dim((1, 1))
    with pytest.raises(RRError):
        DivisorVector((1, -1, 0))
