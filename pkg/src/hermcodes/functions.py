"""Fraction-field elements represented as h(x, y) / x^N.

The numerator is a bivariate polynomial over GF(q^2), curve-reduced to
y-degree <= q-1 via y^q = x^(q+1) - y; the denominator is a power of x.
Canonical form cancels common powers of x (for a y-reduced numerator,
x divides h exactly when every monomial has a positive x-exponent).
Functions regular at infinity satisfy weighted_degree(h) <= q*N with
weight(x^i y^j) = q*i + (q+1)*j.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .gf import FieldSpec

Monomials = Dict[Tuple[int, int], int]


class FunctionError(ValueError):
    pass


class FunctionElement:
    """h / x^N with curve-reduced numerator; immutable once built."""

    __slots__ = ("spec", "q", "numerator", "denom_exp", "_rho")

    def __init__(self, spec: FieldSpec, q: int, numerator: Monomials, denom_exp: int = 0):
        self.spec = spec
        self.q = q
        num = _reduce_curve(spec, q, numerator)
        num, denom_exp = _cancel_x(num, denom_exp)
        if not num:
            denom_exp = 0
        self.numerator = num
        self.denom_exp = denom_exp
        self._rho: Optional[tuple] = None   # cached pole-order vector

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec, q: int) -> "FunctionElement":
        return cls(spec, q, {})

    @classmethod
    def one(cls, spec: FieldSpec, q: int) -> "FunctionElement":
        return cls(spec, q, {(0, 0): 1})

    @classmethod
    def constant(cls, spec: FieldSpec, q: int, c: int) -> "FunctionElement":
        return cls(spec, q, {(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, spec: FieldSpec, q: int, i: int, j: int,
                 coeff: int = 1, denom_exp: int = 0) -> "FunctionElement":
        return cls(spec, q, {(i, j): coeff}, denom_exp)

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.numerator

    def weighted_degree(self, q: int | None = None) -> int:
        """Max q*i + (q+1)*j over numerator monomials (-1 for zero)."""
        q = self.q if q is None else q
        if not self.numerator:
            return -1
        return max(q * i + (q + 1) * j for (i, j) in self.numerator)

    def cached_rho(self, key) -> Optional[tuple]:
        if self._rho is not None and self._rho[0] == key:
            return self._rho[1]
        return None

    def set_cached_rho(self, key, rho: tuple) -> None:
        self._rho = (key, rho)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "FunctionElement") -> None:
        if self.spec != other.spec or self.q != other.q:
            raise FunctionError("operands live on different curves")

    def __add__(self, other: "FunctionElement") -> "FunctionElement":
        self._check(other)
        n = max(self.denom_exp, other.denom_exp)
        out: Monomials = {}
        for f, shift in ((self, n - self.denom_exp), (other, n - other.denom_exp)):
            for (i, j), c in f.numerator.items():
                key = (i + shift, j)
                v = self.spec.add(out.get(key, 0), c)
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return FunctionElement(self.spec, self.q, out, n)

    def __sub__(self, other: "FunctionElement") -> "FunctionElement":
        return self + (-other)

    def __neg__(self) -> "FunctionElement":
        neg = self.spec.neg
        return FunctionElement(self.spec, self.q,
                               {k: neg(c) for k, c in self.numerator.items()},
                               self.denom_exp)

    def __mul__(self, other: "FunctionElement") -> "FunctionElement":
        self._check(other)
        spec = self.spec
        out: Monomials = {}
        for (i1, j1), c1 in self.numerator.items():
            row = spec.mul_table[c1]
            for (i2, j2), c2 in other.numerator.items():
                key = (i1 + i2, j1 + j2)
                v = spec.add(out.get(key, 0), row[c2])
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return FunctionElement(spec, self.q, out, self.denom_exp + other.denom_exp)

    def scale(self, c: int) -> "FunctionElement":
        if c == 0:
            return FunctionElement.zero(self.spec, self.q)
        mul = self.spec.mul
        return FunctionElement(self.spec, self.q,
                               {k: mul(c, v) for k, v in self.numerator.items()},
                               self.denom_exp)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FunctionElement) and self.q == other.q
                and self.denom_exp == other.denom_exp
                and self.numerator == other.numerator)

    def __hash__(self) -> int:
        return hash((self.q, self.denom_exp, tuple(sorted(self.numerator.items()))))

    # -- evaluation ---------------------------------------------------------------

    def evaluate(self, curve, place) -> int:
        """Value at an affine rational place where the function is regular.

        Off x = 0 this is direct substitution; on x = 0 (a non-pole branch)
        the value is the branch-series coefficient at order N.
        """
        if place.is_infinite:
            raise FunctionError("evaluation at infinity is not supported")
        spec = self.spec
        if place.x != 0:
            num = 0
            for (i, j), c in self.numerator.items():
                num = spec.add(num, spec.mul(c, spec.mul(spec.pow(place.x, i),
                                                         spec.pow(place.y, j))))
            return spec.mul(num, spec.inv(spec.pow(place.x, self.denom_exp)))
        N = self.denom_exp
        order = curve.numerator_order(place, self.numerator, N)
        if order is None:
            return 0
        if order < N:
            raise FunctionError(f"pole at place {place.index}; cannot evaluate")
        if order > N:
            return 0
        # exact coefficient of t^N
        pows = [curve.series_power(place, j, N) for j in range(self.q)]
        acc = 0
        for (i, j), c in self.numerator.items():
            if i <= N:
                b = pows[j][N - i]
                if b:
                    acc = spec.add(acc, spec.mul(c, b))
        return acc

    # -- formatting ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.numerator:
            return "0"
        terms = []
        for (i, j) in sorted(self.numerator, key=lambda t: (self.q * t[0] + (self.q + 1) * t[1], t[1])):
            c = self.numerator[(i, j)]
            cs = self.spec.element_to_str(c)
            mono = "*".join(p for p in (f"x^{i}" if i else "", f"y^{j}" if j else "") if p)
            terms.append(f"({cs}){'*' + mono if mono else ''}")
        num = " + ".join(terms)
        return f"[{num}] / x^{self.denom_exp}" if self.denom_exp else f"[{num}]"

    __repr__ = __str__


def _reduce_curve(spec: FieldSpec, q: int, monomials: Monomials) -> Monomials:
    """Rewrite y^q -> x^(q+1) - y until every y-exponent is <= q-1."""
    work = {k: v for k, v in monomials.items() if v}
    done: Monomials = {}
    while work:
        (i, j), c = work.popitem()
        if j < q:
            v = spec.add(done.get((i, j), 0), c)
            if v:
                done[(i, j)] = v
            elif (i, j) in done:
                del done[(i, j)]
            continue
        # y^j = y^(j-q) * (x^(q+1) - y)
        for key, cc in (((i + q + 1, j - q), c), ((i, j - q + 1), spec.neg(c))):
            v = spec.add(work.get(key, 0), cc)
            if v:
                work[key] = v
            elif key in work:
                del work[key]
    return done


def _cancel_x(num: Monomials, denom_exp: int) -> Tuple[Monomials, int]:
    if not num or denom_exp == 0:
        return num, denom_exp
    shift = min(i for (i, _) in num)
    shift = min(shift, denom_exp)
    if shift == 0:
        return num, denom_exp
    return {(i - shift, j): c for (i, j), c in num.items()}, denom_exp - shift
