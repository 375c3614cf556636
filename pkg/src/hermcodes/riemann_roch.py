"""Bases and dimensions of L(a) = {f in R : rho_i(f) <= a_i for all i}.

R is the ring of functions regular away from the chosen places
Q_1..Q_m on the line x = 0.  Every f in L(a) can be written h / x^N
with N = max(a): f * x^N has poles only at infinity of order <= q*N, so
h lies in the span of the reduced monomials x^i y^j with
q*i + (q+1)*j <= q*N (the classical one-point basis at P_inf).  The
membership constraints are vanishing orders of h along the q branches
on x = 0: order >= N - a(P), where a(P) is the budget at P (zero for
x = 0 places that are not among the Q's).  L(a) is then the nullspace
of the constraint matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .curve import CurveModel, RationalPlace, valuation
from .functions import FunctionElement
from .gf import nullspace_int, rank_int


class RRError(ValueError):
    pass


class NotInRingError(RRError):
    """Function has a pole outside the chosen Q-set."""


class DivisorVector:
    """m-tuple of nonnegative integers with the componentwise order."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[int]):
        t = tuple(int(x) for x in entries)
        if any(x < 0 for x in t):
            raise RRError(f"divisor entries must be nonnegative: {t}")
        self.entries = t

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        other = as_tuple(other)
        return self.entries == other

    def __hash__(self) -> int:
        return hash(self.entries)

    def __le__(self, other) -> bool:
        other = as_tuple(other)
        return all(x <= y for x, y in zip(self.entries, other))

    def __add__(self, other) -> "DivisorVector":
        other = as_tuple(other)
        return DivisorVector(tuple(x + y for x, y in zip(self.entries, other)))

    def bump(self, k: int, amount: int = 1) -> "DivisorVector":
        lst = list(self.entries)
        lst[k] += amount
        return DivisorVector(lst)

    def degree(self) -> int:
        return sum(self.entries)

    @staticmethod
    def zero(m: int) -> "DivisorVector":
        return DivisorVector((0,) * m)

    @staticmethod
    def unit(m: int, k: int) -> "DivisorVector":
        return DivisorVector(tuple(1 if i == k else 0 for i in range(m)))

    @staticmethod
    def lub(vectors: Sequence["DivisorVector"]) -> "DivisorVector":
        if not vectors:
            raise RRError("lub of an empty list")
        tuples = [as_tuple(v) for v in vectors]
        return DivisorVector(tuple(max(col) for col in zip(*tuples)))

    def __repr__(self) -> str:
        return f"({','.join(str(x) for x in self.entries)})"


def as_tuple(a) -> Tuple[int, ...]:
    if isinstance(a, DivisorVector):
        return a.entries
    return tuple(int(x) for x in a)


@dataclass
class RRBasis:
    divisor: DivisorVector
    basis: List[FunctionElement]

    @property
    def dim(self) -> int:
        return len(self.basis)


class RRSpace:
    """L(a) computations for a fixed curve and Q-point selection."""

    def __init__(self, curve: CurveModel, q_places: Sequence[RationalPlace]):
        if len(q_places) > curve.q:
            raise RRError(f"at most q = {curve.q} points available on x = 0")
        for P in q_places:
            if P.is_infinite or P.x != 0:
                raise RRError("Q-points must be affine places on x = 0")
        self.curve = curve
        self.q_places = list(q_places)
        self.m = len(q_places)
        q_ids = {P.index for P in q_places}
        self.other_x_zero = [P for P in curve.x_zero_places if P.index not in q_ids]
        self._basis_cache: Dict[Tuple[int, ...], RRBasis] = {}
        self._dim_cache: Dict[Tuple[int, ...], int] = {}
        self._q_key = tuple(P.index for P in q_places)

    # -- candidate monomials -----------------------------------------------------

    def candidates(self, N: int) -> List[Tuple[int, int]]:
        q = self.curve.q
        out = []
        for j in range(q):
            top = (q * N - (q + 1) * j) // q
            for i in range(top + 1):
                out.append((i, j))
        out.sort(key=lambda t: (q * t[0] + (q + 1) * t[1], t[1]))
        return out

    def _constraint_rows(self, a: Tuple[int, ...], cands) -> List[List[int]]:
        curve = self.curve
        N = max(a) if a and max(a) > 0 else 0
        budgets = []
        for P in curve.x_zero_places:
            try:
                k = next(i for i, Q in enumerate(self.q_places) if Q.index == P.index)
                budgets.append((P, a[k]))
            except StopIteration:
                budgets.append((P, 0))
        rows = []
        for P, budget in budgets:
            need = N - budget
            if need <= 0:
                continue
            pows = [curve.series_power(P, j, N) for j in range(curve.q)]
            for order in range(need):
                rows.append([pows[j][order - i] if 0 <= order - i else 0
                             for (i, j) in cands])
        return rows

    # -- public operations ---------------------------------------------------------

    def basis(self, a) -> RRBasis:
        at = as_tuple(a)
        if len(at) != self.m:
            raise RRError(f"divisor arity {len(at)} != m = {self.m}")
        cached = self._basis_cache.get(at)
        if cached is not None:
            return cached
        N = max(at) if at and max(at) > 0 else 0
        cands = self.candidates(N)
        rows = self._constraint_rows(at, cands)
        vecs = nullspace_int(self.curve.spec, rows, len(cands))
        basis = []
        for v in vecs:
            mono = {cands[i]: v[i] for i in range(len(cands)) if v[i]}
            basis.append(FunctionElement(self.curve.spec, self.curve.q, mono, N))
        out = RRBasis(DivisorVector(at), basis)
        self._basis_cache[at] = out
        self._dim_cache[at] = len(basis)
        return out

    def dim(self, a) -> int:
        at = as_tuple(a)
        if len(at) != self.m:
            raise RRError(f"divisor arity {len(at)} != m = {self.m}")
        cached = self._dim_cache.get(at)
        if cached is not None:
            return cached
        N = max(at) if at and max(at) > 0 else 0
        cands = self.candidates(N)
        rows = self._constraint_rows(at, cands)
        d = len(cands) - rank_int(self.curve.spec, rows, len(cands))
        self._dim_cache[at] = d
        return d

    def rho(self, f: FunctionElement, verify_ring: bool = True) -> DivisorVector:
        """Pole-order vector (max(0, -v_k(f)))_k; f must be nonzero and in R."""
        if f.is_zero():
            raise RRError("rho of the zero function is the -infinity marker")
        if verify_ring:
            self.check_in_ring(f)
        cached = f.cached_rho(self._q_key)
        if cached is not None:
            return DivisorVector(cached)
        vals = tuple(max(0, -valuation(self.curve, Q, f)) for Q in self.q_places)
        f.set_cached_rho(self._q_key, vals)
        return DivisorVector(vals)

    def rho_at(self, f: FunctionElement, k: int) -> int:
        """Single-coordinate pole order max(0, -v_k(f)); no ring check."""
        if f.is_zero():
            raise RRError("rho of the zero function is the -infinity marker")
        cached = f.cached_rho(self._q_key)
        if cached is not None:
            return cached[k]
        return max(0, -valuation(self.curve, self.q_places[k], f))

    def check_in_ring(self, f: FunctionElement) -> None:
        if f.weighted_degree() > self.curve.q * f.denom_exp:
            raise NotInRingError("pole at the infinite place; not in R")
        for P in self.other_x_zero:
            if valuation(self.curve, P, f) < 0:
                raise NotInRingError(
                    f"pole at unchosen x=0 place {P.label(self.curve.spec)}; not in R")


def rr_basis(curve: CurveModel, q_places: Sequence[RationalPlace], a) -> RRBasis:
    return RRSpace(curve, q_places).basis(a)


def rr_dim(curve: CurveModel, q_places: Sequence[RationalPlace], a) -> int:
    return RRSpace(curve, q_places).dim(a)


def function_rho(curve: CurveModel, q_places: Sequence[RationalPlace],
                 f: FunctionElement) -> DivisorVector:
    return RRSpace(curve, q_places).rho(f)
