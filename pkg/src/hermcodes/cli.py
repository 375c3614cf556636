"""Batch front-end: config ingestion, table reproduction, suite runners.

Output discipline: data rows go to stdout and are byte-identical across
runs with the same config and seed; advisory notes (known published-table
discrepancies) go to stderr.  CSV uses ';' between major columns and ','
inside tuples; markdown mirrors the published table layout.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import ChainSearch, delta_bound, nu as nu_op
from .codes import build_code, default_eval_places, dual_min_distance_upto
from .curve import CurveModel
from .gf import FieldSpec, FieldError
from .near_weights import complete_set_check, verify_axioms
from .riemann_roch import RRSpace
from .weierstrass import BoxTooSmallError, MPSemigroup, SemigroupError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_BOX = 3
EXIT_FIELD_CURVE = 4

TABLE_PRESETS = {
    "t1": {"q": 3, "rows": [(2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1), (2, 1, 2),
                            (1, 2, 2), (2, 2, 2), (3, 2, 2), (2, 3, 2), (2, 2, 3)]},
    "t2": {"q": 4, "rows": [(1, 2, 3), (3, 1, 3), (3, 2, 3), (3, 3, 3), (4, 3, 2),
                            (4, 3, 3), (4, 4, 3)]},
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    q: Optional[int] = None            # resolved to 3 when nothing sets it
    field_p: Optional[int] = None
    field_e: Optional[int] = None
    field_modulus: Optional[List[int]] = None
    q_indices: Optional[List[int]] = None      # indices into the x=0 place list
    eval_selection: str = "all"                # "all" or comma list of indices
    seed: int = 2024
    mode: str = "semigroup"
    out_format: str = "csv"
    out_path: Optional[str] = None

    KEYS = ("field.p", "field.e", "field.modulus", "curve.q",
            "points.Q", "points.eval", "seed", "mode", "format", "out")

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        cfg = cls()
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key not in cls.KEYS:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
                try:
                    cfg._apply(key, value)
                except ValueError as exc:
                    raise ConfigError(f"{path}:{lineno}: {exc}") from exc
        return cfg

    def _apply(self, key: str, value: str) -> None:
        if key == "field.p":
            self.field_p = int(value)
        elif key == "field.e":
            self.field_e = int(value)
        elif key == "field.modulus":
            self.field_modulus = [int(c) for c in value.split(",")]
        elif key == "curve.q":
            self.q = int(value)
        elif key == "points.Q":
            self.q_indices = [int(c) for c in value.split(",")]
        elif key == "points.eval":
            self.eval_selection = value
        elif key == "seed":
            self.seed = int(value)
        elif key == "mode":
            if value not in ("semigroup", "exact"):
                raise ValueError(f"mode must be semigroup|exact, got {value!r}")
            self.mode = value
        elif key == "format":
            if value not in ("csv", "markdown"):
                raise ValueError(f"format must be csv|markdown, got {value!r}")
            self.out_format = value
        elif key == "out":
            self.out_path = value


class Session:
    """Field, curve, Q-selection and caches materialized from a RunConfig."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        q = cfg.q if cfg.q is not None else 3
        cfg.q = q
        if cfg.field_p is not None or cfg.field_e is not None:
            if cfg.field_p is None or cfg.field_e is None:
                raise ConfigError("field.p and field.e must be given together")
            spec = FieldSpec(cfg.field_p, cfg.field_e, cfg.field_modulus)
            if spec.order != q * q:
                raise FieldCurveMismatch(
                    f"field order {spec.order} does not match q^2 = {q * q}")
        else:
            spec = None
        self.curve = CurveModel(q, spec)
        xz = self.curve.x_zero_places
        idxs = cfg.q_indices if cfg.q_indices is not None else [0, 1, 2]
        if any(i < 0 or i >= len(xz) for i in idxs):
            raise ConfigError(f"points.Q indices must be in [0, {len(xz) - 1}]")
        self.rr = RRSpace(self.curve, [xz[i] for i in idxs])
        self.sg = MPSemigroup(self.rr, seed=cfg.seed)
        self.search = ChainSearch(self.sg, cfg.mode)

    def eval_places(self):
        if self.cfg.eval_selection == "all":
            return default_eval_places(self.rr)
        idxs = [int(c) for c in self.cfg.eval_selection.split(",")]
        by_index = {P.index: P for P in self.curve.places}
        return [by_index[i] for i in idxs]


class FieldCurveMismatch(ValueError):
    pass


def _parse_a(s: str, m: int) -> Tuple[int, ...]:
    parts = tuple(int(c) for c in s.split(","))
    if len(parts) != m:
        raise ConfigError(f"--a needs {m} comma-separated entries")
    return parts


def _vec(t: Sequence[int]) -> str:
    return ",".join(str(x) for x in t)


def _emit(lines: List[str], cfg: RunConfig) -> None:
    text = "\n".join(lines) + "\n"
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bound_row(report) -> str:
    return (f"{_vec(report.a)};{_vec(report.nu_vector)};{_vec(report.A_vector)};"
            f"{report.delta};{report.goppa}")


def _bound_markdown(reports) -> List[str]:
    lines = ["| a | (nu_1, nu_2, nu_3) | (A_1, A_2, A_3) | delta_a | d_a |",
             "| --- | --- | --- | --- | --- |"]
    for r in reports:
        lines.append(f"| ({_vec(r.a)}) | ({_vec(r.nu_vector)}) | ({_vec(r.A_vector)}) "
                     f"| {r.delta} | {r.goppa} |")
    return lines


def cmd_places(session: Session, args, cfg: RunConfig) -> int:
    lines = []
    for P in session.curve.places:
        if P.is_infinite:
            lines.append(f"{P.index};infinite;;")
        else:
            spec = session.curve.spec
            lines.append(f"{P.index};affine;{spec.element_to_str(P.x)};"
                         f"{spec.element_to_str(P.y)}")
    _emit(lines, cfg)
    return EXIT_OK


def cmd_semigroup(session: Session, args, cfg: RunConfig) -> int:
    box = _parse_a(args.box, session.rr.m)
    members = set(session.sg.members_in_box(box))
    mins = set(session.sg.minimals(box))
    import itertools
    lines = []
    for w in itertools.product(*[range(b + 1) for b in box]):
        lines.append(f"{_vec(w)};{int(w in members)};{int(w in mins)}")
    _emit(lines, cfg)
    return EXIT_OK


def cmd_rr(session: Session, args, cfg: RunConfig) -> int:
    a = _parse_a(args.a, session.rr.m)
    basis = session.rr.basis(a)
    lines = [f"dim;{basis.dim}"]
    for f in basis.basis:
        lines.append(str(f))
    _emit(lines, cfg)
    return EXIT_OK


def cmd_nu(session: Session, args, cfg: RunConfig) -> int:
    a = _parse_a(args.a, session.rr.m)
    n, chain = session.search.nu(a, args.k - 1)
    pair_text = " ".join(f"(({_vec(u)}),({_vec(v)}))" for u, v in chain.pairs)
    _emit([f"{_vec(a)};{args.k};{n};{pair_text}"], cfg)
    return EXIT_OK


def cmd_bound(session: Session, args, cfg: RunConfig) -> int:
    a = _parse_a(args.a, session.rr.m)
    report = delta_bound(session.sg, a, mode=args.mode,
                         path=("search" if args.path == "search" else None),
                         search=session.search if args.mode == cfg.mode else None)
    for note in report.notes:
        print(f"note: a={report.a}: {note}", file=sys.stderr)
    if cfg.out_format == "markdown":
        _emit(_bound_markdown([report]), cfg)
    else:
        _emit([_bound_row(report)], cfg)
    return EXIT_OK


def cmd_table(session: Session, args, cfg: RunConfig) -> int:
    preset = TABLE_PRESETS[args.preset]
    if preset["q"] != session.curve.q:
        raise FieldCurveMismatch(
            f"preset {args.preset} is for q = {preset['q']}, "
            f"but the session curve has q = {session.curve.q}")
    reports = []
    for a in preset["rows"]:
        reports.append(delta_bound(session.sg, a, mode=cfg.mode,
                                   search=session.search))
    for r in reports:
        for note in r.notes:
            print(f"note: a={r.a}: {note}", file=sys.stderr)
    if cfg.out_format == "markdown":
        _emit(_bound_markdown(reports), cfg)
    else:
        _emit([_bound_row(r) for r in reports], cfg)
    return EXIT_OK


def cmd_code(session: Session, args, cfg: RunConfig) -> int:
    a = _parse_a(args.a, session.rr.m)
    places = session.eval_places()
    if args.eval != "all":
        by_index = {P.index: P for P in session.curve.places}
        places = [by_index[int(c)] for c in args.eval.split(",")]
    code = build_code(session.rr, a, places)
    spec = session.curve.spec
    lines = [f"n;{code.n}", f"k;{code.k}"]
    for row in code.matrix:
        lines.append(";".join(spec.element_to_str(x) for x in row))
    if args.dual_dmax:
        d, witness = dual_min_distance_upto(code, args.dual_dmax, spec)
        if d is None:
            lines.append(f"dual_d;>{args.dual_dmax};")
        else:
            lines.append(f"dual_d;{d};{_vec(witness)}")
    _emit(lines, cfg)
    return EXIT_OK


def cmd_check(session: Session, args, cfg: RunConfig) -> int:
    lines = []
    failed = False
    if args.suite in ("axioms", "all"):
        report = verify_axioms(session.rr, sample_size=args.n, seed=cfg.seed)
        lines.extend(report.lines())
        failed = failed or not report.ok
    if args.suite in ("complete", "all"):
        rep = complete_set_check(session.rr, seed=cfg.seed)
        lines.append(f"complete-set: {'PASS' if rep.ok else 'FAIL'} "
                     f"({rep.valuation_consistency_checks} valuation checks)")
        for v in rep.violations:
            lines.append(f"  {v}")
        failed = failed or not rep.ok
    _emit(lines, cfg)
    return EXIT_FAILURE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hermcodes",
        description="multi-point evaluation codes on Hermitian curves and "
                    "their dual-distance path bound")
    ap.add_argument("--config", help="key = value config file")
    ap.add_argument("--seed", type=int, help="override config seed")
    ap.add_argument("--format", choices=("csv", "markdown"), dest="fmt")
    ap.add_argument("--out", help="write stdout payload to this path")
    ap.add_argument("--q", type=int, help="curve parameter q (q^2 field)")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("places", help="list rational places")

    sp = sub.add_parser("semigroup", help="dump members/minimals in a box")
    sp.add_argument("--box", required=True)

    sp = sub.add_parser("rr", help="basis and dimension of L(a)")
    sp.add_argument("--a", required=True)

    sp = sub.add_parser("nu", help="maximum admissible pair chain at (a, k)")
    sp.add_argument("--a", required=True)
    sp.add_argument("--k", type=int, required=True, help="coordinate, 1-based")

    sp = sub.add_parser("bound", help="path lower bound delta_a")
    sp.add_argument("--a", required=True)
    sp.add_argument("--mode", choices=("semigroup", "exact"), default="semigroup")
    sp.add_argument("--path", choices=("default", "search"), default="default")

    sp = sub.add_parser("table", help="reproduce a published table")
    sp.add_argument("--preset", choices=tuple(TABLE_PRESETS), required=True)

    sp = sub.add_parser("code", help="evaluation code generator matrix")
    sp.add_argument("--a", required=True)
    sp.add_argument("--eval", default="all")
    sp.add_argument("--dual-dmax", type=int, default=0)

    sp = sub.add_parser("check", help="axiom / completeness suites")
    sp.add_argument("--suite", choices=("axioms", "complete", "all"), default="all")
    sp.add_argument("--n", type=int, default=200)

    return ap


COMMANDS = {
    "places": cmd_places,
    "semigroup": cmd_semigroup,
    "rr": cmd_rr,
    "nu": cmd_nu,
    "bound": cmd_bound,
    "table": cmd_table,
    "code": cmd_code,
    "check": cmd_check,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
        if args.seed is not None:
            cfg.seed = args.seed
        if args.fmt:
            cfg.out_format = args.fmt
        if args.out:
            cfg.out_path = args.out
        if args.q:
            cfg.q = args.q
        if args.command == "table" and cfg.q is None:
            cfg.q = TABLE_PRESETS[args.preset]["q"]
        session = Session(cfg)
        return COMMANDS[args.command](session, args, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BoxTooSmallError as exc:
        print(f"box too small: {exc}", file=sys.stderr)
        return EXIT_BOX
    except (FieldCurveMismatch, FieldError) as exc:
        print(f"field/curve mismatch: {exc}", file=sys.stderr)
        return EXIT_FIELD_CURVE
    except (SemigroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
