"""Multi-point Weierstrass semigroup H = rho(R \\ {0}) and its structure.

Membership of a tuple `a` is decided by dimension comparisons: a is in H
iff dim L(a) > dim L(a - e_k) for every k with a_k > 0.  Witnesses are
produced by seeded random combinations of an L(a) basis; they exist in
abundance because L(a) is never a union of m proper subspaces over a
field with q^2 > m elements.  Dimensions come from the Riemann-Roch
formula deg + 1 - g when deg > 2g - 2 and from the constraint-matrix
nullspace below that; the formula regime is itself property-tested
against the matrix route.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .functions import FunctionElement
from .riemann_roch import DivisorVector, RRSpace, as_tuple


class SemigroupError(ValueError):
    pass


class BoxTooSmallError(SemigroupError):
    """Requested tuple lies outside the configured bounding box."""


@dataclass
class NumericalSemigroup:
    """Cofinite subsemigroup of N_0, stored as a bitmap up to `limit`."""

    members: Tuple[int, ...]
    limit: int

    def __post_init__(self):
        mem = set(self.members)
        if 0 not in mem:
            raise SemigroupError("0 must belong to a numerical semigroup")
        gaps = [t for t in range(self.limit + 1) if t not in mem]
        # a trustworthy bitmap needs limit >= 2 * conductor
        if gaps and 2 * (gaps[-1] + 1) > self.limit:
            raise SemigroupError(
                f"semigroup bitmap not stabilized below limit {self.limit}; "
                "increase the limit")
        self.gaps = gaps
        self.conductor = (gaps[-1] + 1) if gaps else 0
        self.genus = len(gaps)

    def __contains__(self, t: int) -> bool:
        if t < 0:
            return False
        if t >= self.conductor:
            return True
        return t in set(self.members)

    def elements_upto(self, n: int) -> List[int]:
        return [t for t in range(n + 1) if t in self]


def lub(vectors: Sequence) -> DivisorVector:
    """Componentwise maximum; the semigroup is closed under it."""
    return DivisorVector.lub([DivisorVector(as_tuple(v)) for v in vectors])


class MPSemigroup:
    """H inside the box [0, max_box]^m, backed by an RRSpace dim oracle."""

    def __init__(self, rr: RRSpace, max_coordinate: Optional[int] = None,
                 seed: int = 2024):
        self.rr = rr
        self.m = rr.m
        self.genus = rr.curve.genus
        if rr.curve.spec.order <= self.m:
            raise SemigroupError("need #F = q^2 > m for the witness search")
        # default: 2c-1 per coordinate plus the truncation extension used
        # by the bound computation (paths stop at A_k <= 2c - 1, and pair
        # boxes reach A_k + 1)
        self.max_coordinate = (max_coordinate if max_coordinate is not None
                               else 4 * self.genus + 2 * (self.genus + 1))
        self._member_cache: Dict[Tuple[int, ...], bool] = {}
        self._witness_cache: Dict[Tuple[int, ...], FunctionElement] = {}
        self._fiber_cache: Dict[Tuple, List[Tuple[int, ...]]] = {}
        self._rng = random.Random(seed)

    # -- dimension oracle -------------------------------------------------------

    def dim(self, a: Tuple[int, ...]) -> int:
        deg = sum(a)
        if deg > 2 * self.genus - 2:
            return deg + 1 - self.genus
        return self.rr.dim(a)

    # -- membership and witnesses -------------------------------------------------

    def _check_box(self, a: Tuple[int, ...]) -> None:
        if any(x > self.max_coordinate for x in a):
            raise BoxTooSmallError(
                f"tuple {a} outside the bounding box "
                f"(max coordinate {self.max_coordinate}); enlarge the box")

    def member(self, a) -> bool:
        at = as_tuple(a)
        self._check_box(at)
        cached = self._member_cache.get(at)
        if cached is not None:
            return cached
        if sum(at) > 2 * self.genus:
            # both dims are in the Riemann-Roch regime, every step jumps
            self._member_cache[at] = True
            return True
        d0 = self.dim(at)
        ok = True
        for k in range(self.m):
            if at[k] > 0:
                down = list(at)
                down[k] -= 1
                if self.dim(tuple(down)) == d0:
                    ok = False
                    break
        self._member_cache[at] = ok
        return ok

    def w_member(self, a) -> Tuple[bool, Optional[FunctionElement]]:
        at = as_tuple(a)
        if not self.member(at):
            return False, None
        return True, self.witness(at)

    def witness(self, a) -> FunctionElement:
        """A function f with rho(f) = a, by random basis combinations."""
        at = as_tuple(a)
        cached = self._witness_cache.get(at)
        if cached is not None:
            return cached
        if not self.member(at):
            raise SemigroupError(f"{at} is not a semigroup member")
        basis = self.rr.basis(at).basis
        order = self.rr.curve.spec.order
        target = DivisorVector(at)
        for _ in range(64):
            coeffs = [self._rng.randrange(order) for _ in basis]
            if not any(coeffs):
                continue
            f = None
            for c, b in zip(coeffs, basis):
                if c:
                    term = b.scale(c)
                    f = term if f is None else f + term
            if f is None or f.is_zero():
                continue
            if self.rr.rho(f, verify_ring=False) == target:
                self._witness_cache[at] = f
                return f
        raise SemigroupError(
            f"no witness found for member {at} after 64 draws; "
            "this indicates an internal inconsistency")

    # -- fibers and minimals ---------------------------------------------------------

    def fiber_minimals(self, k: int, t: int, box) -> List[Tuple[int, ...]]:
        """Minimal members of {w in H : w_k = t, w <= box}, sorted."""
        boxt = as_tuple(box)
        key = (k, t, boxt)
        cached = self._fiber_cache.get(key)
        if cached is not None:
            return cached
        if t > boxt[k]:
            self._fiber_cache[key] = []
            return []
        ranges = [range(boxt[i] + 1) if i != k else (t,) for i in range(self.m)]
        members = [w for w in itertools.product(*ranges) if self.member(w)]
        mins = [w for w in members
                if not any(_leq(v, w) and v != w for v in members)]
        mins.sort()
        self._fiber_cache[key] = mins
        return mins

    def members_in_box(self, box) -> List[Tuple[int, ...]]:
        boxt = as_tuple(box)
        self._check_box(boxt)
        out = []
        for w in itertools.product(*[range(b + 1) for b in boxt]):
            if self.member(w):
                out.append(w)
        return out

    def is_minimal(self, a) -> bool:
        """Minimal in the fiber {c in H : c_k = a_k} for its positive coords.

        By the fiber-equivalence property, checking one positive coordinate
        suffices; we check all and assert agreement elsewhere (tests).
        """
        at = as_tuple(a)
        if not self.member(at):
            return False
        if not any(at):
            return True
        for k in range(self.m):
            if at[k] == 0:
                continue
            ranges = [range(at[i] + 1) if i != k else (at[k],) for i in range(self.m)]
            for w in itertools.product(*ranges):
                if w != at and self.member(w):
                    return False
            return True   # one positive-coordinate fiber decides
        return True

    def minimals(self, box) -> List[Tuple[int, ...]]:
        """Gamma within the box: members minimal in all their positive fibers."""
        members = self.members_in_box(box)
        out = []
        for a in members:
            ok = True
            for k in range(self.m):
                if a[k] == 0:
                    continue
                if any(w != a and w[k] == a[k] and _leq(w, a) for w in members):
                    ok = False
                    break
            if ok:
                out.append(a)
        return out

    def gamma_tilde(self) -> List[Tuple[int, ...]]:
        """Minimals with >= 2 nonzero entries; finite, inside G_1 x ... x G_m."""
        gap_lists = [self.one_point_semigroup(k).gaps for k in range(self.m)]
        out = []
        for w in itertools.product(*[[0] + g for g in gap_lists]):
            if sum(1 for x in w if x) < 2:
                continue
            if self.member(w) and self.is_minimal(w):
                out.append(w)
        return sorted(out)

    def one_point_semigroup(self, k: int, limit: Optional[int] = None) -> NumericalSemigroup:
        if limit is None:
            limit = 4 * self.genus + 2
        members = tuple(t for t in range(limit + 1)
                        if self.member(tuple(t if i == k else 0 for i in range(self.m))))
        return NumericalSemigroup(members, limit)

    def lub_decompose(self, a) -> List[Tuple[int, ...]]:
        """Fiber minimals b_i <= a with b_{i,k_i} = a_{k_i}, lub = a.

        A minimal of {w in H : w_k = a_k, w <= a} is minimal in the whole
        fiber {c in H : c_k = a_k}, since anything below it stays in the box.
        """
        at = as_tuple(a)
        if not self.member(at):
            raise SemigroupError(f"{at} is not a semigroup member")
        if not any(at):
            return [at]
        parts = []
        for k in range(self.m):
            if at[k] == 0:
                continue
            mins = self.fiber_minimals(k, at[k], at)
            parts.append(mins[0])   # lexicographically smallest
        dedup = sorted(set(parts))
        if lub(dedup).entries != at:
            raise SemigroupError(f"decomposition of {at} failed to lub back")
        return dedup


def _leq(u: Tuple[int, ...], v: Tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(u, v))


def w_member(sg: MPSemigroup, a) -> Tuple[bool, Optional[FunctionElement]]:
    return sg.w_member(a)


def minimals(sg: MPSemigroup, box) -> List[Tuple[int, ...]]:
    return sg.minimals(box)


def gamma_tilde(sg: MPSemigroup) -> List[Tuple[int, ...]]:
    return sg.gamma_tilde()


def one_point_semigroup(sg: MPSemigroup, k: int, limit: Optional[int] = None) -> NumericalSemigroup:
    return sg.one_point_semigroup(k, limit)


def lub_decompose(sg: MPSemigroup, a) -> List[Tuple[int, ...]]:
    return sg.lub_decompose(a)
