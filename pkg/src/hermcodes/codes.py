"""Evaluation codes C(a) = phi(L(a)) and desk-scale dual-distance checks.

The generator matrix rows are the values of an L(a) basis at n rational
places disjoint from the Q-support (and from infinity).  The dual
minimum distance equals the smallest number of linearly dependent
columns of that matrix; for the instance sizes here an exhaustive
search over subsets of size <= wmax is exact and fast, while dual
codeword enumeration would be hopeless (dual dimension ~ n - k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .curve import CurveModel, RationalPlace
from .gf import rank_int
from .riemann_roch import DivisorVector, RRSpace, as_tuple


class CodeError(ValueError):
    pass


@dataclass
class EvaluationCode:
    a: Tuple[int, ...]
    eval_places: List[RationalPlace]
    matrix: List[List[int]]          # dim L(a) x n, raw field encodings
    k: int                           # rank of the evaluation matrix

    @property
    def n(self) -> int:
        return len(self.eval_places)


def default_eval_places(rr: RRSpace) -> List[RationalPlace]:
    """All affine rational places off the Q-support, in curve order."""
    q_ids = {P.index for P in rr.q_places}
    return [P for P in rr.curve.places
            if not P.is_infinite and P.index not in q_ids]


def build_code(rr: RRSpace, a, eval_places: Optional[Sequence[RationalPlace]] = None
               ) -> EvaluationCode:
    at = as_tuple(a)
    places = list(eval_places) if eval_places is not None else default_eval_places(rr)
    q_ids = {P.index for P in rr.q_places}
    for P in places:
        if P.is_infinite or P.index in q_ids:
            raise CodeError("evaluation places must be affine and off the Q-support")
    basis = rr.basis(at).basis
    matrix = []
    for f in basis:
        matrix.append([f.evaluate(rr.curve, P) for P in places])
    k = rank_int(rr.curve.spec, matrix, len(places)) if matrix else 0
    return EvaluationCode(at, places, matrix, k)


def dual_min_distance_upto(code: EvaluationCode, wmax: int, spec=None
                           ) -> Tuple[Optional[int], Optional[Tuple[int, ...]]]:
    """Exact d(C^perp) if <= wmax, else (None, None).

    d(C^perp) is the minimal number of linearly dependent columns of the
    generator matrix of C; returns the witness column subset.
    """
    if spec is None:
        raise CodeError("pass the field spec for exact column arithmetic")
    M = code.matrix
    n = code.n
    if not M:
        return (1, (0,)) if n else (None, None)
    cols = [[row[j] for row in M] for j in range(n)]
    nrows = len(M)
    for w in range(1, wmax + 1):
        for subset in itertools.combinations(range(n), w):
            sub = [[cols[j][i] for j in subset] for i in range(nrows)]
            if rank_int(spec, sub, w) < w:
                return w, subset
    return None, None


def dim_jump_full_rank(rr: RRSpace, a,
                       eval_places: Optional[Sequence[RationalPlace]] = None
                       ) -> DivisorVector:
    """First b >= a (round-robin unit steps) with rank C(b) = n."""
    at = as_tuple(a)
    places = list(eval_places) if eval_places is not None else default_eval_places(rr)
    n = len(places)
    cur = list(at)
    k = 0
    while True:
        code = build_code(rr, tuple(cur), places)
        if code.k == n:
            return DivisorVector(cur)
        cur[k % len(cur)] += 1
        k += 1
