"""Multi-point evaluation codes on Hermitian curves and their dual-distance
path bound, computed from pole-order semigroups over GF(q^2)."""

from .gf import FieldSpec, FieldElement, ff_arith, ff_enumerate, ff_nullspace, ff_rank
from .curve import CurveModel, RationalPlace, BranchExpansion, enumerate_points, \
    branch_expand, valuation
from .functions import FunctionElement
from .riemann_roch import DivisorVector, RRBasis, RRSpace, rr_basis, rr_dim, \
    function_rho
from .weierstrass import MPSemigroup, NumericalSemigroup, lub, w_member, minimals, \
    gamma_tilde, one_point_semigroup, lub_decompose
from .near_weights import NearWeight, RHO_NEG_INF, rho, verify_axioms, \
    complete_set_check
from .bounds import PairChain, Path, BoundReport, ChainSearch, nu, \
    pair_count_formula, truncation_limits, delta_bound, goppa_bound
from .codes import EvaluationCode, build_code, default_eval_places, \
    dual_min_distance_upto, dim_jump_full_rank

__version__ = "0.1.0"
