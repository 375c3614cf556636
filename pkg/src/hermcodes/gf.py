"""Exact arithmetic and dense linear algebra over small fields GF(p^e).

Elements are stored as integers in [0, p^e): the integer encodes the
residue coefficient vector little-endian in base p, i.e. value
c0 + c1*p + ... + c_{e-1}*p^{e-1} stands for c0 + c1*t + ... modulo the
defining polynomial.  All products/inverses go through precomputed
tables, which is exact and fast enough for the orders used here
(q^2 <= 81).  `FieldElement` is a thin typed wrapper around that integer
for public APIs; hot loops work on raw ints via `FieldSpec` methods.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

# Fixed default moduli (little-endian coefficient lists, monic) so that
# element names are reproducible across runs.  Overridable in config.
DEFAULT_MODULI = {
    (3, 2): [1, 0, 1],            # t^2 + 1        (-1 is a non-residue mod 3)
    (2, 4): [1, 1, 0, 0, 1],      # t^4 + t + 1
    (5, 2): [3, 0, 1],            # t^2 + 3
    (7, 2): [1, 0, 1],            # t^2 + 1
    (2, 6): [1, 1, 0, 0, 0, 0, 1],  # t^6 + t + 1
    (3, 4): [2, 1, 0, 0, 1],      # t^4 + t + 2
}


class FieldError(ValueError):
    """Invalid field construction or mixed-field operands."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """GF(p^e) with a fixed monic irreducible modulus of degree e."""

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        if modulus is None:
            try:
                modulus = DEFAULT_MODULI[(p, e)]
            except KeyError:
                raise FieldError(f"no built-in modulus for GF({p}^{e}); pass one")
        modulus = [c % p for c in modulus]
        if len(modulus) != e + 1 or modulus[e] != 1:
            raise FieldError("modulus must be monic of degree e")
        self.p = p
        self.e = e
        self.order = p ** e
        self.modulus = list(modulus)
        if e > 1 and not self._is_irreducible():
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _is_irreducible(self) -> bool:
        # trial division by every monic polynomial of lower degree >= 1
        p, e = self.p, self.e
        for deg in range(1, e):
            for idx in range(p ** deg):
                lower, v = [], idx
                for _ in range(deg):
                    lower.append(v % p)
                    v //= p
                div = lower + [1]
                if not any(self._poly_mod(self.modulus, div)):
                    return False
        return True

    def _poly_mod(self, num: Sequence[int], den: Sequence[int]) -> List[int]:
        p = self.p
        num = list(num)
        dd = len(den) - 1
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if c:
                for j in range(dd + 1):
                    num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
        return num[:dd]

    def _build_tables(self) -> None:
        p, e, n = self.p, self.e, self.order

        def coeffs(a: int) -> List[int]:
            out = []
            for _ in range(e):
                out.append(a % p)
                a //= p
            return out

        def enc(cs: Sequence[int]) -> int:
            v = 0
            for c in reversed(cs):
                v = v * p + (c % p)
            return v

        def raw_mul(a: int, b: int) -> int:
            ca, cb = coeffs(a), coeffs(b)
            prod = [0] * (2 * e - 1)
            for i, x in enumerate(ca):
                if x:
                    for j, y in enumerate(cb):
                        prod[i + j] = (prod[i + j] + x * y) % p
            for i in range(len(prod) - 1, e - 1, -1):
                c = prod[i]
                if c:
                    for j in range(e + 1):
                        prod[i - e + j] = (prod[i - e + j] - c * self.modulus[j]) % p
            return enc(prod[:e])

        self._coeffs = coeffs
        self._enc = enc
        self.add_table = [[enc([(x + y) % p for x, y in zip(coeffs(a), coeffs(b))])
                           for b in range(n)] for a in range(n)]
        self.neg_table = [enc([(-x) % p for x in coeffs(a)]) for a in range(n)]
        self.mul_table = [[raw_mul(a, b) for b in range(n)] for a in range(n)]
        self.inv_table = [0] * n
        for a in range(1, n):
            row = self.mul_table[a]
            self.inv_table[a] = row.index(1)

    # -- raw int arithmetic (hot path) ----------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.inv_table[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        r, base = 1, a
        while n:
            if n & 1:
                r = self.mul_table[r][base]
            base = self.mul_table[base][base]
            n >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def coeff_vector(self, a: int) -> List[int]:
        return self._coeffs(a)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.e:
            raise FieldError("coefficient vector longer than extension degree")
        cs = list(cs) + [0] * (self.e - len(cs))
        return self._enc(cs)

    def element(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, int):
            return FieldElement(self, value % self.order if self.e == 1 else value)
        return FieldElement(self, self.from_coeffs(value))

    def elements(self) -> Iterable["FieldElement"]:
        return (FieldElement(self, a) for a in range(self.order))

    # -- text syntax: "c0,c1,..." little-endian -------------------------------

    def element_to_str(self, a: int) -> str:
        return ",".join(str(c) for c in self._coeffs(a))

    def element_from_str(self, s: str) -> int:
        return self.from_coeffs([int(c) for c in s.split(",")])

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, tuple(self.modulus)))


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^e), wrapping the canonical integer encoding."""

    spec: FieldSpec
    value: int

    def _check(self, other: "FieldElement") -> None:
        if self.spec != other.spec:
            raise FieldError("operands from different field specs")

    @property
    def coeffs(self) -> List[int]:
        return self.spec.coeff_vector(self.value)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow(self.value, n))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.spec.element_to_str(self.value)


def ff_arith(op: str, x: FieldElement, y: FieldElement | int) -> FieldElement:
    """Dispatch basic field arithmetic; `pow` takes an integer exponent."""
    if op == "pow":
        if not isinstance(y, int):
            raise FieldError("pow exponent must be an integer")
        return x ** y
    if op == "inv":
        return x.inverse()
    if not isinstance(y, FieldElement):
        raise FieldError(f"operand for {op} must be a FieldElement")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise FieldError(f"unknown operation {op!r}")


def ff_enumerate(spec: FieldSpec) -> List[FieldElement]:
    """All p^e elements, ordered lexicographically on coefficient vectors."""
    order = sorted(range(spec.order), key=lambda a: tuple(spec.coeff_vector(a)))
    return [FieldElement(spec, a) for a in order]


# -- dense linear algebra on raw int matrices --------------------------------

def rref(spec: FieldSpec, rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form with first-nonzero pivot selection.

    Returns (reduced rows, pivot column indices).  Mutates a copy.
    """
    rows = [list(r) for r in rows]
    mul, sub, inv = spec.mul, spec.sub, spec.inv
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][c])
        if s != 1:
            rows[r] = [mul(s, x) for x in rows[r]]
        rr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_int(spec: FieldSpec, rows: List[List[int]], ncols: int) -> int:
    # forward elimination only; cheaper than full RREF for rank queries
    rows = [list(r) for r in rows]
    mul, sub, inv = spec.mul, spec.sub, spec.inv
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][c])
        if s != 1:
            rows[r] = [mul(s, x) for x in rows[r]]
        rr_ = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(ri, rr_)]
        r += 1
        if r == len(rows):
            break
    return r


def nullspace_int(spec: FieldSpec, rows: List[List[int]], ncols: int) -> List[List[int]]:
    """Right-nullspace basis (each vector length ncols), canonical RREF form.

    Free variables are scanned in ascending column order so the basis is
    deterministic; each vector has a 1 in "its" free column.
    """
    red, pivots = rref(spec, rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = spec.neg(red[ri][free])
        basis.append(v)
    return basis


def _unwrap(matrix: Sequence[Sequence[FieldElement]]) -> Tuple[FieldSpec, List[List[int]], int]:
    if not matrix or not matrix[0]:
        raise ValueError("matrix must be non-empty and rectangular")
    spec = matrix[0][0].spec
    ncols = len(matrix[0])
    rows = []
    for row in matrix:
        if len(row) != ncols:
            raise ValueError("matrix must be rectangular")
        for x in row:
            if x.spec != spec:
                raise FieldError("mixed field specs in matrix")
        rows.append([x.value for x in row])
    return spec, rows, ncols


def ff_rank(matrix: Sequence[Sequence[FieldElement]]) -> int:
    spec, rows, ncols = _unwrap(matrix)
    return rank_int(spec, rows, ncols)


def ff_nullspace(matrix: Sequence[Sequence[FieldElement]]) -> List[List[FieldElement]]:
    spec, rows, ncols = _unwrap(matrix)
    return [[FieldElement(spec, v) for v in vec]
            for vec in nullspace_int(spec, rows, ncols)]
