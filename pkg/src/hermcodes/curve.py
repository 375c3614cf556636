"""Hermitian curve model: rational places, branch expansions, valuations.

The curve is x^(q+1) = y^q + y over GF(q^2) (projectively
Y^q Z + Y Z^q - X^(q+1) = 0), selected by the single parameter q.  It is
smooth, has genus q(q-1)/2, q^3 + 1 rational places, and a single point
at infinity (0:1:0) where x and y have pole orders q and q+1.

Branch expansions use that F_y = q*y^(q-1) + 1 = 1 in characteristic p,
so x - x0 is a uniformizer at every affine point and the dependent
coordinate lifts by the contraction  u <- (x0 + t)^(q+1) - u^q,
whose error is raised to the q-th power each round.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .gf import FieldSpec, DEFAULT_MODULI

INFINITY_MARKER = "infinity"  # valuation of the zero function


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class RationalPlace:
    """A rational point of the smooth model; `infinite` is (0:1:0)."""

    index: int
    kind: str                      # "affine" | "infinite"
    x: Optional[int] = None        # raw field-element encodings
    y: Optional[int] = None

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def label(self, spec: FieldSpec) -> str:
        if self.is_infinite:
            return "Pinf"
        return f"({spec.element_to_str(self.x)};{spec.element_to_str(self.y)})"


class BranchExpansion:
    """Truncated power series y(t) at an affine place, uniformizer t = x - x0."""

    def __init__(self, place: RationalPlace, coeffs: List[int], precision: int):
        self.place = place
        self.coeffs = coeffs          # coeffs[i] multiplies t^i, i <= precision
        self.precision = precision

    def coefficient(self, i: int) -> int:
        if i > self.precision:
            raise IndexError(f"series only computed through t^{self.precision}")
        return self.coeffs[i]


class CurveModel:
    """The Hermitian curve over GF(q^2) with cached branch/series data."""

    def __init__(self, q: int, spec: FieldSpec | None = None):
        if spec is None:
            p, e = _split_prime_power(q * q)
            spec = FieldSpec(p, e)
        if spec.order != q * q:
            raise CurveError(f"field order {spec.order} is not q^2 = {q * q}")
        self.q = q
        self.spec = spec
        self.degree = q + 1
        self.genus = q * (q - 1) // 2
        self.places = self._enumerate()
        self.x_zero_places = [P for P in self.places
                              if P.kind == "affine" and P.x == 0]
        self.infinite_place = self.places[-1]
        # branch series caches, grown on demand (precompute step)
        self._series: Dict[int, List[int]] = {}
        self._series_prec: Dict[int, int] = {}
        self._ypows: Dict[Tuple[int, int], List[int]] = {}

    # -- enumeration -----------------------------------------------------------

    def _on_curve(self, x: int, y: int) -> bool:
        F, q = self.spec, self.q
        return F.sub(F.pow(x, q + 1), F.add(F.pow(y, q), y)) == 0

    def _nonsingular(self, x: int, y: int) -> bool:
        # partial-derivative test: F_x = x^q (char p makes (q+1)x^q = x^q),
        # F_y = 1 identically, so no affine point is singular.
        F = self.spec
        fy = 1
        fx = F.pow(x, self.q)
        return fy != 0 or fx != 0

    def _enumerate(self) -> List[RationalPlace]:
        F = self.spec
        key = lambda a: tuple(F.coeff_vector(a))
        pts = []
        for x in sorted(range(F.order), key=key):
            for y in sorted(range(F.order), key=key):
                if self._on_curve(x, y):
                    if not self._nonsingular(x, y):
                        raise CurveError(f"singular point ({x},{y})")
                    pts.append((x, y))
        places = [RationalPlace(i, "affine", x, y) for i, (x, y) in enumerate(pts)]
        places.append(RationalPlace(len(places), "infinite"))
        if len(places) != self.q ** 3 + 1:
            raise CurveError("rational place count mismatch")
        return places

    # -- branch expansions -----------------------------------------------------

    def branch_expand(self, place: RationalPlace, precision: int) -> BranchExpansion:
        if place.is_infinite:
            raise CurveError("branch expansion only at affine places")
        coeffs = self._series_at(place, precision)
        return BranchExpansion(place, coeffs[: precision + 1], precision)

    def _series_at(self, place: RationalPlace, precision: int) -> List[int]:
        idx = place.index
        if self._series_prec.get(idx, -1) >= precision:
            return self._series[idx]
        F, q = self.spec, self.q
        T = max(precision, 2 * (q + 1))
        # rhs = (x0 + t)^(q+1) truncated: x0^(q+1) + x0^q t + x0 t^q + t^(q+1)
        rhs = [0] * (T + 1)
        x0 = place.x
        rhs[0] = F.pow(x0, q + 1)
        if T >= 1:
            rhs[1] = F.pow(x0, q)
        if T >= q:
            rhs[q] = F.add(rhs[q], x0)
        if T >= q + 1:
            rhs[q + 1] = F.add(rhs[q + 1], 1)
        u = [0] * (T + 1)
        u[0] = place.y
        while True:
            # u' = rhs - u^q; Frobenius on series: coeff i -> coeff q*i, value^q
            uq = [0] * (T + 1)
            for i, c in enumerate(u):
                if c and q * i <= T:
                    uq[q * i] = F.pow(c, q)
            new = [F.sub(a, b) for a, b in zip(rhs, uq)]
            if new == u:
                break
            u = new
        self._series[idx] = u
        self._series_prec[idx] = T
        self._ypows = {k: v for k, v in self._ypows.items() if k[0] != idx}
        return u

    def series_power(self, place: RationalPlace, j: int, precision: int) -> List[int]:
        """(y(t))^j truncated at the given precision, cached."""
        key = (place.index, j)
        cached = self._ypows.get(key)
        if cached is not None and len(cached) > precision:
            return cached
        F = self.spec
        base = self._series_at(place, precision)
        T = max(precision, self._series_prec[place.index])
        out = [0] * (T + 1)
        out[0] = 1
        for _ in range(j):
            nxt = [0] * (T + 1)
            for i, a in enumerate(out):
                if a == 0:
                    continue
                row = F.mul_table[a]
                for k in range(T + 1 - i):
                    b = base[k]
                    if b:
                        nxt[i + k] = F.add_table[nxt[i + k]][row[b]]
            out = nxt
        self._ypows[key] = out
        return out

    # -- valuations --------------------------------------------------------------

    def numerator_order(self, place: RationalPlace, monomials: Dict[Tuple[int, int], int],
                        search_limit: int) -> Optional[int]:
        """Order of sum c_{ij} x^i y^j along the branch at an affine place.

        Returns the first exponent with nonzero series coefficient, or None
        if all coefficients through `search_limit` vanish.
        """
        F = self.spec
        x0 = place.x
        if x0 != 0:
            # shift x -> x0 + t first: cheap direct test at order 0
            val = 0
            for (i, j), c in monomials.items():
                val = F.add(val, F.mul(c, F.mul(F.pow(x0, i), F.pow(place.y, j))))
            if val != 0:
                return 0
            return self._order_shifted(place, monomials, search_limit)
        self._series_at(place, search_limit)
        pows = [self.series_power(place, j, search_limit) for j in range(self.q)]
        for order in range(search_limit + 1):
            acc = 0
            for (i, j), c in monomials.items():
                if i <= order:
                    b = pows[j][order - i]
                    if b:
                        acc = F.add(acc, F.mul(c, b))
            if acc != 0:
                return order
        return None

    def _order_shifted(self, place, monomials, search_limit):
        F = self.spec
        x0 = place.x
        self._series_at(place, search_limit)
        pows = [self.series_power(place, j, search_limit) for j in range(self.q)]
        # expand (x0 + t)^i by binomials over GF(p); exact, small exponents
        from math import comb
        for order in range(search_limit + 1):
            acc = 0
            for (i, j), c in monomials.items():
                # coeff of t^k in (x0+t)^i is C(i,k) x0^(i-k)
                for k in range(0, min(i, order) + 1):
                    b = pows[j][order - k]
                    if not b:
                        continue
                    binom = comb(i, k) % self.spec.p
                    if not binom:
                        continue
                    term = F.mul(F.pow(x0, i - k), b)
                    if binom != 1:
                        term = F.mul(term, binom % self.spec.p)
                    acc = F.add(acc, F.mul(c, term))
            if acc != 0:
                return order
        return None


def _split_prime_power(n: int) -> Tuple[int, int]:
    for p in range(2, n + 1):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise CurveError("q^2 is not a prime power")
            return p, e
    raise CurveError("bad field order")


def enumerate_points(curve: CurveModel) -> List[RationalPlace]:
    return list(curve.places)


def branch_expand(curve: CurveModel, place: RationalPlace, precision: int) -> BranchExpansion:
    return curve.branch_expand(place, precision)


def valuation(curve: CurveModel, place: RationalPlace, f) -> int | str:
    """Discrete valuation v_P(f) of a FunctionElement; exact.

    At affine places: order of the numerator branch series minus N*v_P(x).
    At the infinite place: q*N - weighted_degree(numerator), which is exact
    because distinct reduced monomials have distinct pole orders there.
    """
    if f.is_zero():
        raise CurveError("valuation of the zero function")
    if place.is_infinite:
        return curve.q * f.denom_exp - f.weighted_degree(curve.q)
    wdeg = f.weighted_degree(curve.q)
    limit = f.denom_exp * (curve.q + 1) + wdeg
    cap = 2 * (curve.q + 1) * (wdeg + f.denom_exp + 1) + 4
    while True:
        order = curve.numerator_order(place, f.numerator, limit)
        if order is not None:
            break
        if limit >= cap:
            raise CurveError("numerator vanished past the Bezout cap; "
                             "nonzero reduced numerators cannot do this")
        limit = min(2 * limit + 1, cap)
    v_x = 1 if place.x == 0 else 0
    return order - f.denom_exp * v_x
