import random

import pytest
from hypothesis import given, settings, strategies as st

from hermcodes.gf import (DEFAULT_MODULI, FieldError, FieldSpec, ff_arith,
                          ff_enumerate, ff_nullspace, ff_rank, nullspace_int,
                          rank_int)


@pytest.fixture(scope="module")
def gf9():
    return FieldSpec(3, 2)


@pytest.fixture(scope="module")
def gf16():
    return FieldSpec(2, 4)


def test_group_identities_gf9(gf9):
    for a in range(1, 9):
        assert gf9.mul(a, gf9.inv(a)) == 1
        assert gf9.pow(a, 8) == 1        # multiplicative group order q - 1


def test_square_roots_of_minus_one(gf9):
    # with modulus t^2 + 1 the equation y^2 = -1 has exactly two roots,
    # which is what puts three points on the x = 0 line of the q = 3 curve
    minus_one = gf9.neg(1)
    roots = [a for a in range(9) if gf9.mul(a, a) == minus_one]
    assert len(roots) == 2
    cubic = [y for y in range(9) if gf9.add(gf9.pow(y, 3), y) == 0]
    assert len(cubic) == 3


@pytest.mark.parametrize("p,e", [(3, 2), (2, 4), (5, 2)])
def test_field_axioms_exhaustive(p, e):
    F = FieldSpec(p, e)
    n = F.order
    for x in range(n):
        assert F.add(x, 0) == x
        assert F.mul(x, 1) == x
        assert F.add(x, F.neg(x)) == 0
    for x in range(n):
        for y in range(n):
            assert F.add(x, y) == F.add(y, x)
            assert F.mul(x, y) == F.mul(y, x)
            # Frobenius is additive
            assert F.pow(F.add(x, y), p) == F.add(F.pow(x, p), F.pow(y, p))
    rng = random.Random(5)
    for _ in range(4000):
        x, y, z = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
        assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))


def test_all_default_moduli_are_irreducible():
    for (p, e) in DEFAULT_MODULI:
        F = FieldSpec(p, e)
        assert F.order == p ** e


def test_reducible_modulus_rejected():
    # t^2 + 2 = (t - 1)(t + 1) over GF(3)
    with pytest.raises(FieldError):
        FieldSpec(3, 2, [2, 0, 1])


def test_nonprime_p_rejected():
    with pytest.raises(FieldError):
        FieldSpec(9, 1, [0, 1])


def test_zero_inversion_raises(gf9):
    with pytest.raises(ZeroDivisionError):
        gf9.inv(0)
    with pytest.raises(ZeroDivisionError):
        ff_arith("inv", gf9.element(0), 0)


def test_mixed_spec_operands_rejected(gf9, gf16):
    with pytest.raises(FieldError):
        ff_arith("add", gf9.element(1), gf16.element(1))


def test_ff_arith_dispatch(gf9):
    two = gf9.element([2])
    one = gf9.element([1])
    assert ff_arith("add", two, one).value == 0      # 2 + 1 = 0 mod 3
    assert ff_arith("mul", two, two).value == gf9.mul(2, 2)
    assert ff_arith("sub", one, two).value == gf9.sub(1, 2)
    assert ff_arith("pow", two, 2).value == gf9.pow(2, 2)
    with pytest.raises(FieldError):
        ff_arith("xor", one, two)


def test_enumerate_orders_and_counts(gf9, gf16):
    e9 = ff_enumerate(gf9)
    assert len(e9) == 9
    assert len(set(x.value for x in e9)) == 9
    assert [tuple(x.coeffs) for x in e9] == sorted(tuple(x.coeffs) for x in e9)
    assert len(ff_enumerate(gf16)) == 16


def test_element_text_roundtrip(gf9):
    for a in range(9):
        assert gf9.element_from_str(gf9.element_to_str(a)) == a
    assert gf9.element_to_str(gf9.from_coeffs([1, 2])) == "1,2"


def test_nullspace_trivial_cases(gf9):
    zero = [[gf9.element(0)] * 3 for _ in range(3)]
    assert len(ff_nullspace(zero)) == 3
    ident = [[gf9.element(1 if i == j else 0) for j in range(4)] for i in range(4)]
    assert ff_rank(ident) == 4
    assert ff_nullspace(ident) == []


def test_nullspace_vectors_are_annihilated(gf9):
    rng = random.Random(11)
    rows = [[rng.randrange(9) for _ in range(8)] for _ in range(5)]
    basis = nullspace_int(gf9, rows, 8)
    assert len(basis) == 8 - rank_int(gf9, rows, 8)
    for v in basis:
        for row in rows:
            acc = 0
            for a, b in zip(row, v):
                acc = gf9.add(acc, gf9.mul(a, b))
            assert acc == 0
    # basis is linearly independent
    assert rank_int(gf9, basis, 8) == len(basis)


def test_rank_is_shuffle_and_transpose_invariant(gf9):
    rng = random.Random(3)
    for _ in range(20):
        rows = [[rng.randrange(9) for _ in range(6)] for _ in range(4)]
        r = rank_int(gf9, rows, 6)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert rank_int(gf9, shuffled, 6) == r
        transpose = [[rows[i][j] for i in range(4)] for j in range(6)]
        assert rank_int(gf9, transpose, 4) == r


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.lists(st.integers(min_value=0, max_value=8), min_size=3, max_size=3),
       st.lists(st.integers(min_value=0, max_value=8), min_size=3, max_size=3))
def test_frobenius_additivity_hypothesis(xs, ys):
    F = FieldSpec(3, 2)
    for x, y in zip(xs, ys):
        assert F.pow(F.add(x, y), 3) == F.add(F.pow(x, 3), F.pow(y, 3))
