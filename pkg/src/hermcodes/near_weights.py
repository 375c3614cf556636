"""Near-weight functions rho_k(f) = max(0, -v_k(f)) and their axiom suite.

Each chosen place Q_k induces a normalized near weight on the ring R of
functions regular off {Q_1..Q_m}: rho_k(0) is a dedicated minus-infinity
marker, rho_k(f) = 0 on functions without a pole at Q_k, and the pole
order otherwise.  The axioms N0-N5 and the two lemma clauses (unique
lambda in N4; max rule for distinct values) are facts about valuations;
this module provides regression-grade empirical verification on seeded
samples drawn from L(a) boxes, plus the complete-set checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .functions import FunctionElement
from .riemann_roch import RRSpace
from .weierstrass import MPSemigroup


class _RhoNegInf:
    """rho(0): distinct from every natural number, arithmetic rejected."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf(rho)"

    def __eq__(self, other) -> bool:
        return isinstance(other, _RhoNegInf)

    def __hash__(self) -> int:
        return hash("_RhoNegInf")

    def _reject(self, *_args):
        raise TypeError("arithmetic with the rho(0) marker is not defined")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _reject
    __lt__ = __le__ = __gt__ = __ge__ = _reject


RHO_NEG_INF = _RhoNegInf()


class NearWeight:
    """The k-th near weight backed by the valuation at Q_k."""

    def __init__(self, rr: RRSpace, k: int):
        self.rr = rr
        self.k = k
        self.place = rr.q_places[k]

    def __call__(self, f: FunctionElement, verify_ring: bool = True):
        if f.is_zero():
            return RHO_NEG_INF
        return self.rr.rho(f, verify_ring=verify_ring)[self.k]


def rho(rr: RRSpace, k: int, f: FunctionElement):
    return NearWeight(rr, k)(f)


@dataclass
class AxiomReport:
    samples: int
    checks: Dict[str, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> List[str]:
        out = []
        for name in sorted(self.checks):
            bad = [v for v in self.violations if v.startswith(name)]
            out.append(f"{name}: {'PASS' if not bad else 'FAIL'} "
                       f"({self.checks[name]} checks)")
        return out

    def count(self, name: str) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1

    def violate(self, name: str, detail: str) -> None:
        self.violations.append(f"{name}: {detail}")


class _Sampler:
    """Seeded random elements of L(box), nonzero, built from fixed bases.

    Draws sparse combinations (a handful of basis terms) so large boxes
    stay affordable.  A quarter of the draws come from boxes with one
    coordinate forced to zero, so the no-pole region of each weight is
    exercised alongside the pole region.
    """

    def __init__(self, rr: RRSpace, box: Tuple[int, ...], seed: int, terms: int = 8):
        self.rr = rr
        self.rng = random.Random(seed)
        self.order = rr.curve.spec.order
        self.bases = [rr.basis(box).basis]
        for k in range(rr.m):
            masked = tuple(0 if i == k else b for i, b in enumerate(box))
            self.bases.append(rr.basis(masked).basis)
        self.terms = terms

    def draw(self) -> FunctionElement:
        while True:
            if self.rng.random() < 0.25:
                basis = self.bases[1 + self.rng.randrange(self.rr.m)]
            else:
                basis = self.bases[0]
            picks = self.rng.sample(range(len(basis)),
                                    min(self.terms, len(basis)))
            f = None
            for i in picks:
                c = self.rng.randrange(self.order)
                if c:
                    term = basis[i].scale(c)
                    f = term if f is None else f + term
            if f is not None and not f.is_zero():
                return f


def verify_axioms(rr: RRSpace, sample_size: int = 1000, seed: int = 7,
                  box: Optional[Tuple[int, ...]] = None) -> AxiomReport:
    """Check N0-N5, normalization and the lemma clauses on sampled pairs."""
    sg_probe = MPSemigroup(rr)
    c = sg_probe.one_point_semigroup(0).conductor
    if box is None:
        box = tuple(2 * c - 1 for _ in range(rr.m))
    sampler = _Sampler(rr, box, seed)
    weights = [NearWeight(rr, k) for k in range(rr.m)]
    units = rr.curve.spec.order
    report = AxiomReport(samples=sample_size)
    zero = FunctionElement.zero(rr.curve.spec, rr.curve.q)

    # N0: the marker appears exactly at 0
    for w in weights:
        report.count("N0")
        if w(zero) != RHO_NEG_INF:
            report.violate("N0", "rho(0) is not the marker")

    from .curve import valuation

    for trial in range(sample_size):
        f = sampler.draw()
        g = sampler.draw()
        rf = rr.rho(f, verify_ring=False)
        rg = rr.rho(g, verify_ring=False)
        k = trial % rr.m
        w = weights[k]

        # N0 on nonzero samples: values are naturals, never the marker
        report.count("N0")
        if w(f, verify_ring=False) == RHO_NEG_INF:
            report.violate("N0", f"marker on nonzero sample {trial}")

        # N1: rho(lambda f) = rho(f) for every lambda in F*
        report.count("N1")
        for lam in range(1, units):
            if rr.rho_at(f.scale(lam), k) != rf[k]:
                report.violate("N1", f"lambda={lam} changes rho on sample {trial}")
                break

        # N2: rho(f + g) <= max
        report.count("N2")
        s = f + g
        if not s.is_zero():
            rs = rr.rho_at(s, k)
            if rs > max(rf[k], rg[k]):
                report.violate("N2", f"sample {trial}")
            # Lemma clause (ii): equality when the values differ
            if rf[k] != rg[k]:
                report.count("lemma-ii")
                if rs != max(rf[k], rg[k]):
                    report.violate("lemma-ii", f"sample {trial}")

        # N3: rho(f) < rho(g) implies rho(f h) <= rho(g h), strict for h in M
        h = sampler.draw()
        rh_k = rr.rho_at(h, k)
        if rf[k] < rg[k]:
            report.count("N3")
            fh = rr.rho_at(f * h, k)
            gh = rr.rho_at(g * h, k)
            if fh > gh:
                report.violate("N3", f"sample {trial} (weak clause)")
            if rh_k > 0 and fh >= gh:
                report.violate("N3", f"sample {trial} (strict clause)")

        # N4: equal positive values admit a unique lambda lowering the value
        if rf[k] == rg[k] and rf[k] > 0:
            report.count("N4")
            lowering = []
            for lam in range(1, units):
                d = f - g.scale(lam)
                if d.is_zero() or rr.rho_at(d, k) < rf[k]:
                    lowering.append(lam)
            if len(lowering) != 1:
                report.violate("N4", f"sample {trial}: {len(lowering)} lambdas")

        # N5: submultiplicative, additive on M x M
        report.count("N5")
        prod = f * g
        if prod.is_zero():
            report.violate("M-no-zero-divisors", f"sample {trial}")
        else:
            rp = rr.rho_at(prod, k)
            if rp > rf[k] + rg[k]:
                report.violate("N5", f"sample {trial} (inequality)")
            if rf[k] > 0 and rg[k] > 0:
                report.count("N5-equality")
                if rp != rf[k] + rg[k]:
                    report.violate("N5-equality", f"sample {trial}")

        # normalization: rho vanishes exactly on the no-pole region
        report.count("normalized")
        v = valuation(rr.curve, rr.q_places[k], f)
        if rf[k] != max(0, -v):
            report.violate("normalized", f"sample {trial}")

    return report


@dataclass
class CompleteSetReport:
    constants_dim: int
    gaps: List[List[int]]
    valuation_consistency_checks: int
    violations: List[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def complete_set_check(rr: RRSpace, seed: int = 11) -> CompleteSetReport:
    """Definition checks: intersection of the U's is F; each S_k cofinite.

    Also exercises the abstract valuation formula on witnesses:
    v_k(f) = -rho_k(f) for f with a pole at Q_k.
    """
    violations: List[str] = []
    zero_dim = rr.dim(tuple(0 for _ in range(rr.m)))
    if zero_dim != 1:
        violations.append(f"dim L(0) = {zero_dim} != 1")
    basis0 = rr.basis(tuple(0 for _ in range(rr.m))).basis
    if len(basis0) != 1 or basis0[0].weighted_degree() not in (0, -1):
        violations.append("L(0) basis is not the constants")

    sg = MPSemigroup(rr, seed=seed)
    gaps = []
    for k in range(rr.m):
        S = sg.one_point_semigroup(k)
        gaps.append(S.gaps)
        if S.conductor > sg.max_coordinate:
            violations.append(f"S_{k+1} bitmap did not stabilize")

    from .curve import valuation
    checks = 0
    for k in range(rr.m):
        for t in [x for x in range(1, 2 * rr.curve.genus + 1)
                  if x in sg.one_point_semigroup(k)]:
            a = tuple(t if i == k else 0 for i in range(rr.m))
            f = sg.witness(a)
            checks += 1
            if valuation(rr.curve, rr.q_places[k], f) != -t:
                violations.append(f"v_{k+1} inconsistent with rho on axis {t}")
    return CompleteSetReport(zero_dim, gaps, checks, violations)
