"""Pair chains nu_k(a), truncation limits, and the path lower bound delta_a.

A pair chain for (a, k) is a list of pairs (f_i, g_i) with strictly
increasing rho_k(f_i), rho_k(f_i) + rho_k(g_i) = a_k + 1, f_i, g_i in
L(a + e_k), and f_s * g_r in L(a) for s < r.  For the dual-distance rank
argument to go through, each pair's own product must additionally lie in
L(a + e_k) \\ L(a); in semigroup mode this is certified pairwise by
u + v <= a + e_k componentwise (exactness at coordinate k follows from
the additivity of pole orders).  Dropping that condition admits chains
whose product matrix has vanishing diagonal entries and contradicts the
published tables, so it is enforced in both modes.

The chain search runs over fiber-minimal semigroup members, which is
lossless: shrinking u or v componentwise only relaxes every constraint.
delta_a is the minimum of nu over the steps of an ascending path from a
to the truncation endpoint A, which bounds d(C(a)^perp) from below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .functions import FunctionElement
from .riemann_roch import DivisorVector, as_tuple
from .weierstrass import MPSemigroup, NumericalSemigroup


class BoundError(ValueError):
    pass


Vec = Tuple[int, ...]


@dataclass
class PairChain:
    k: int
    a: Vec
    pairs: List[Tuple[Vec, Vec]]
    mode: str = "semigroup"
    witnesses: Optional[List[Tuple[FunctionElement, FunctionElement]]] = None

    def __len__(self) -> int:
        return len(self.pairs)

    def rho_pairs(self) -> List[Tuple[Vec, Vec]]:
        return list(self.pairs)


@dataclass
class Path:
    """Unit-step ascending sequence of tuples; p(i) is the step place."""

    tuples: List[Vec]

    def __post_init__(self):
        self.step_places: List[int] = []
        for prev, nxt in zip(self.tuples, self.tuples[1:]):
            diffs = [i for i, (x, y) in enumerate(zip(prev, nxt)) if y - x != 0]
            if len(diffs) != 1 or nxt[diffs[0]] - prev[diffs[0]] != 1:
                raise BoundError(f"path step {prev} -> {nxt} is not a unit step")
            self.step_places.append(diffs[0])

    @staticmethod
    def coordinate_by_coordinate(a: Vec, end: Vec) -> "Path":
        if not all(x <= y for x, y in zip(a, end)):
            raise BoundError(f"path endpoint {end} does not dominate {a}")
        tuples = [tuple(a)]
        cur = list(a)
        for k in range(len(a)):
            while cur[k] < end[k]:
                cur[k] += 1
                tuples.append(tuple(cur))
        return Path(tuples)


@dataclass
class BoundReport:
    a: Vec
    nu_vector: Vec
    A_vector: Vec
    path: Path
    delta: int
    goppa: int
    argmin_step: Tuple[Vec, int, int]     # (tuple, step place, nu)
    mode: str = "semigroup"
    notes: List[str] = field(default_factory=list)


def _leq(u: Vec, v: Vec) -> bool:
    return all(x <= y for x, y in zip(u, v))


def _vadd(u: Vec, v: Vec) -> Vec:
    return tuple(x + y for x, y in zip(u, v))


class ChainSearch:
    """Maximum-cardinality admissible chains over a cached semigroup."""

    def __init__(self, sg: MPSemigroup, mode: str = "semigroup"):
        if mode not in ("semigroup", "exact"):
            raise BoundError(f"unknown mode {mode!r}")
        self.sg = sg
        self.mode = mode
        self._nu_cache: Dict[Tuple[Vec, int], PairChain] = {}

    # -- witnesses for exact mode ---------------------------------------------

    def _pair_witnesses(self, u: Vec, v: Vec, k: int):
        wf = self._witness_no_zero(u, k)
        wg = self._witness_no_zero(v, k)
        return wf, wg

    def _witness_no_zero(self, a: Vec, k: int) -> FunctionElement:
        """Witness with rho = a and, when a_k = 0, no zero at Q_k either."""
        f = self.sg.witness(a)
        if a[k] > 0:
            return f
        rr = self.sg.rr
        if f.evaluate(rr.curve, rr.q_places[k]) != 0:
            return f
        for t in range(1, 64):
            g = f + FunctionElement.constant(rr.curve.spec, rr.curve.q,
                                             t % rr.curve.spec.order or 1)
            if (rr.rho(g, verify_ring=False) == DivisorVector(a)
                    and g.evaluate(rr.curve, rr.q_places[k]) != 0):
                return g
        raise BoundError(f"no unit-valued witness for {a} at coordinate {k}")

    # -- admissibility ------------------------------------------------------------

    def _pair_ok(self, u: Vec, v: Vec, k: int, a: Vec, box: Vec) -> bool:
        # diagonal soundness: product in L(a + e_k) \ L(a)
        if self.mode == "semigroup":
            return _leq(_vadd(u, v), box)
        wf, wg = self._pair_witnesses(u, v, k)
        rho = self.sg.rr.rho(wf * wg, verify_ring=False).entries
        return _leq(rho, box) and rho[k] == a[k] + 1

    def _compat(self, early: Tuple[Vec, Vec], late: Tuple[Vec, Vec],
                k: int, a: Vec) -> bool:
        # condition (d): f_s * g_r in L(a) for s < r
        u_s, v_r = early[0], late[1]
        if self.mode == "semigroup":
            return _leq(_vadd(u_s, v_r), a)
        wf = self._witness_no_zero(u_s, k)
        wg = self._witness_no_zero(v_r, k)
        return _leq(self.sg.rr.rho(wf * wg, verify_ring=False).entries, a)

    # -- the search -------------------------------------------------------------------

    def nu(self, a, k: int) -> Tuple[int, PairChain]:
        at = as_tuple(a)
        key = (at, k)
        cached = self._nu_cache.get(key)
        if cached is not None:
            return len(cached), cached
        box = list(at)
        box[k] += 1
        box = tuple(box)
        target = at[k] + 1
        levels: List[List[Tuple[Vec, Vec]]] = []
        for t in range(target + 1):
            us = self.sg.fiber_minimals(k, t, box)
            vs = self.sg.fiber_minimals(k, target - t, box)
            pairs = sorted((u, v) for u in us for v in vs
                           if self._pair_ok(u, v, k, at, box))
            levels.append(pairs)

        best_len = 0

        def search(i: int, chain: List[Tuple[Vec, Vec]], record: bool,
                   out: List[Tuple[Vec, Vec]]) -> bool:
            nonlocal best_len
            if len(chain) + (len(levels) - i) < best_len or \
               (not record and len(chain) + (len(levels) - i) <= best_len):
                return False
            if i == len(levels):
                if record:
                    if len(chain) == best_len:
                        out.extend(chain)
                        return True
                    return False
                if len(chain) > best_len:
                    best_len = len(chain)
                return False
            for pair in levels[i]:
                if all(self._compat(prev, pair, k, at) for prev in chain):
                    chain.append(pair)
                    if search(i + 1, chain, record, out):
                        return True
                    chain.pop()
            return search(i + 1, chain, record, out)

        search(0, [], False, [])
        chosen: List[Tuple[Vec, Vec]] = []
        search(0, [], True, chosen)
        chain = PairChain(k, at, chosen, self.mode)
        if self.mode == "exact":
            chain.witnesses = [self._pair_witnesses(u, v, k) for u, v in chosen]
        self._nu_cache[key] = chain
        return best_len, chain

    def verify_chain_exact(self, chain: PairChain) -> bool:
        """Exact-witness verification of a (semigroup-mode) chain."""
        a = chain.a
        k = chain.k
        box = list(a)
        box[k] += 1
        box = tuple(box)
        rr = self.sg.rr
        ws = [self._pair_witnesses(u, v, k) for u, v in chain.pairs]
        for (wf, wg), (u, v) in zip(ws, chain.pairs):
            if rr.rho(wf, verify_ring=False).entries != u:
                return False
            if rr.rho(wg, verify_ring=False).entries != v:
                return False
            rho = rr.rho(wf * wg, verify_ring=False).entries
            if not (_leq(rho, box) and rho[k] == a[k] + 1):
                return False
        for s in range(len(ws)):
            for r in range(s + 1, len(ws)):
                prod = ws[s][0] * ws[r][1]
                if not _leq(rr.rho(prod, verify_ring=False).entries, a):
                    return False
        return True


def nu(sg: MPSemigroup, a, k: int, mode: str = "semigroup") -> Tuple[int, PairChain]:
    return ChainSearch(sg, mode).nu(a, k)


def pair_count_formula(S: NumericalSemigroup, u: int) -> int:
    """# {(a, b) in (S \\ 0)^2 : a + b = 2c + u} = 2(c - g) + u - 1; verified."""
    if u < 0:
        raise BoundError("u must be nonnegative")
    c, g = S.conductor, S.genus
    value = 2 * (c - g) + u - 1
    total = 2 * c + u
    count = sum(1 for x in range(1, total)
                if x in S and (total - x) in S)
    if count != value:
        raise BoundError(
            f"pair-count formula mismatch for u={u}: formula {value}, "
            f"enumeration {count}")
    return value


def truncation_limits(nu_vector: Sequence[int],
                      semigroups: Sequence[NumericalSemigroup]) -> Vec:
    """Per-coordinate path endpoints A_k beyond which nu only grows."""
    A = []
    for h, S in zip(nu_vector, semigroups):
        c, g = S.conductor, S.genus
        if h > 2 * (c - g) - 1:
            u = h - 2 * (c - g) + 1
            A.append(2 * c + u - 1)
        else:
            A.append(2 * c - 1)
    return tuple(A)


def goppa_bound(a, genus: int) -> int:
    return sum(as_tuple(a)) - (2 * genus - 2)


# Rows where this artifact's computed values knowingly differ from the
# published tables; emitted as notes by the table front-end.
PAPER_DISCREPANCIES = {
    (3, (2, 1, 1)): ("running text lists nu_3 = 3 via a pair violating the "
                     "L(a+e_k) membership condition; computed maximum is 2 "
                     "(matches the printed table)"),
    (3, (2, 2, 2)): ("printed nu-vector (3,3,3) is inconsistent with the "
                     "printed delta = 2 of this row and of row (1,2,2); "
                     "computed nu-vector is (2,2,2)"),
    (3, (3, 2, 2)): ("printed delta = 3; the maximal admissible chains give "
                     "the stronger valid bound 4 (certified against the "
                     "n = 24 code by exhaustive column search)"),
    (3, (2, 3, 2)): ("printed delta = 3; the maximal admissible chains give "
                     "the stronger valid bound 4 (certified against the "
                     "n = 24 code by exhaustive column search)"),
}


def delta_bound(sg: MPSemigroup, a, mode: str = "semigroup",
                path: Optional[str | Path] = None,
                search: Optional[ChainSearch] = None) -> BoundReport:
    """Path minimum of nu from a to the truncation endpoint A.

    `path` may be None (coordinate-by-coordinate default), "search"
    (exhaustive bottleneck optimization over monotone paths), or an
    explicit Path whose endpoint must equal A.
    """
    at = as_tuple(a)
    cs = search if search is not None else ChainSearch(sg, mode)
    nus = []
    for k in range(sg.m):
        n, _ = cs.nu(at, k)
        nus.append(n)
    semis = [sg.one_point_semigroup(k) for k in range(sg.m)]
    A = truncation_limits(nus, semis)

    if path == "search":
        p = _best_path(cs, at, A)
    elif isinstance(path, Path):
        if tuple(path.tuples[-1]) != A or tuple(path.tuples[0]) != at:
            raise BoundError("explicit path must run from a to A")
        p = path
    else:
        p = Path.coordinate_by_coordinate(at, A)

    steps = []
    for i, place in enumerate(p.step_places):
        n, _ = cs.nu(p.tuples[i], place)
        steps.append((p.tuples[i], place, n))
    if not steps:
        raise BoundError("empty path; a already dominates A")
    delta = min(s[2] for s in steps)
    argmin = next(s for s in steps if s[2] == delta)
    notes = []
    note = PAPER_DISCREPANCIES.get((sg.rr.curve.q, at))
    if note:
        notes.append(note)
    return BoundReport(at, tuple(nus), A, p, delta,
                       goppa_bound(at, sg.genus), argmin, mode, notes)


def _best_path(cs: ChainSearch, a: Vec, A: Vec) -> Path:
    """Bottleneck-maximal monotone path from a to A by lattice DP."""
    import itertools as it

    m = len(a)
    ranges = [range(a[k], A[k] + 1) for k in range(m)]
    INF = 10 ** 9
    value: Dict[Vec, int] = {}
    choice: Dict[Vec, int] = {}
    nodes = sorted(it.product(*ranges), key=lambda t: -sum(t))
    for node in nodes:
        if node == A:
            value[node] = INF
            continue
        best, arg = -1, -1
        for k in range(m):
            if node[k] < A[k]:
                nxt = list(node)
                nxt[k] += 1
                n, _ = cs.nu(node, k)
                v = min(n, value[tuple(nxt)])
                if v > best:
                    best, arg = v, k
        value[node] = best
        choice[node] = arg
    tuples = [a]
    cur = a
    while cur != A:
        k = choice[cur]
        nxt = list(cur)
        nxt[k] += 1
        cur = tuple(nxt)
        tuples.append(cur)
    return Path(tuples)
