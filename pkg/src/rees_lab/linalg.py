"""Exact matrices over Q, prime fields and integer polynomials.

Ranks are always certified:

* over a prime field, Gaussian elimination is already exact;
* over Q, a full-rank verdict mod p lifts to Q (a nonzero minor mod p is
  a nonzero integer), and anything else falls through to fraction-free
  Bareiss elimination on the integers;
* for parametric matrices (entries polynomial in c1..cn) the rank over
  the rational function field is computed either through the monomial
  scaling reduction below or by fraction-free elimination over the
  polynomial ring, and cross-checked by random specialization.

Monomial scaling reduction: if every nonzero entry is a single term
lam * c^e and there are row/column potentials phi, psi in Z^params with
phi(row) - psi(col) = e for each entry, then M(c) = D_phi M(1) D_psi^{-1}
with invertible diagonal D's over the function field, so the parametric
rank equals the plain rank of the coefficient matrix M(1).  Every
multiplication-by-generic-linear-form matrix of a monomial algebra has
this shape (the potentials are the monomial multidegrees).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Sequence

import numpy as np

try:
    from gmpy2 import mpz

    _HAVE_GMPY = True
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    mpz = int
    _HAVE_GMPY = False

from .monomials import (
    InputError,
    MonomialIdeal,
    monomials_of_degree,
    mon_shift,
    standard_monomials,
)
from .polynomials import IntPoly

# prime > 2^30 used for specialization cross-checks and full-rank lifting
CROSSCHECK_PRIME = 2_147_483_647
_SECOND_PRIME = 2_147_483_629
DEFAULT_SEED = 271828


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic 0 (the rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise InputError(f"field characteristic must be 0 or prime, got {c}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0


QQ = FieldSpec(0)


@dataclass(frozen=True)
class LinearForm:
    """A linear form c1 x1 + ... + cn xn; coeffs None means the generic
    form with indeterminate coefficients."""

    nvars: int
    coeffs: tuple[Fraction, ...] | None = None

    @classmethod
    def of(cls, coeffs: Sequence) -> "LinearForm":
        cs = tuple(Fraction(c) for c in coeffs)
        return cls(len(cs), cs)

    @classmethod
    def generic(cls, nvars: int) -> "LinearForm":
        return cls(nvars, None)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LinearForm":
        return cls.of([Fraction(int(j == i)) for j in range(nvars)])

    @classmethod
    def sum_of_variables(cls, nvars: int) -> "LinearForm":
        return cls.of([Fraction(1)] * nvars)

    @property
    def is_generic(self) -> bool:
        return self.coeffs is None

    def is_zero(self) -> bool:
        return self.coeffs is not None and not any(self.coeffs)

    def as_monomial(self) -> tuple[int, ...] | None:
        """Exponent tuple when the form is a single variable."""
        if self.coeffs is None:
            return None
        nz = [i for i, c in enumerate(self.coeffs) if c]
        if len(nz) == 1 and self.coeffs[nz[0]] == 1:
            e = [0] * self.nvars
            e[nz[0]] = 1
            return tuple(e)
        return None

    def __str__(self) -> str:
        if self.coeffs is None:
            return "generic"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(f"{c}*x{i + 1}" if c != 1 else f"x{i + 1}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ExactMatrix:
    """Dense exact matrix; entries are Fractions/ints (numeric) or
    IntPoly (parametric, nparams > 0)."""

    nrows: int
    ncols: int
    entries: tuple[tuple, ...]
    field: FieldSpec = QQ
    nparams: int = 0

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = QQ,
                  nparams: int = 0) -> "ExactMatrix":
        t = tuple(tuple(r) for r in rows)
        ncols = len(t[0]) if t else 0
        if any(len(r) != ncols for r in t):
            raise InputError("ragged rows")
        return cls(len(t), ncols, t, field, nparams)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls.from_rows(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)], field
        )

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls.from_rows([[Fraction(0)] * ncols for _ in range(nrows)], field)

    @property
    def is_parametric(self) -> bool:
        return self.nparams > 0

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.ncols,
            self.nrows,
            tuple(zip(*self.entries)) if self.entries else (),
            self.field,
            self.nparams,
        )

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise InputError("vector length mismatch")
        return [sum((r[j] * vec[j] for j in range(self.ncols)), Fraction(0))
                for r in self.entries]


# ---------------------------------------------------------------------------
# numeric rank engines


def _int_rows(M: ExactMatrix) -> list[list[int]]:
    """Clear denominators row by row (row scaling preserves rank)."""
    out = []
    for row in M.entries:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) if isinstance(v, Fraction) else int(v) * den
                    for v in row])
    return out


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Gaussian elimination over GF(p); vectorized, exact."""
    if not rows or not rows[0]:
        return 0
    if p * p * 2 >= 2**63:
        raise InputError("prime too large for the vectorized eliminator")
    A = np.array(rows, dtype=np.int64) % p
    R, C = A.shape
    r = 0
    for c in range(C):
        if r == R:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = np.nonzero(A[r + 1 :, c])[0]
        if below.size:
            A[r + 1 + below, c:] = (
                A[r + 1 + below, c:] - A[r + 1 + below, c][:, None] * A[r, c:]
            ) % p
        r += 1
    return r


def rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free elimination over Z; pivots chosen by minimal bit size."""
    R = len(rows)
    C = len(rows[0]) if R else 0
    if not R or not C:
        return 0
    big = max(R, C) > 64
    conv = mpz if (_HAVE_GMPY and big) else int
    m = [[conv(int(v)) for v in row] for row in rows]
    prev = conv(1)
    r = 0
    while r < R and r < C:
        best = None
        for i in range(r, R):
            row = m[i]
            for j in range(r, C):
                v = row[j]
                if v:
                    b = abs(v).bit_length()
                    if best is None or b < best[0]:
                        best = (b, i, j)
                        if b == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != r:
            m[r], m[pi] = m[pi], m[r]
        if pj != r:
            for row in m:
                row[r], row[pj] = row[pj], row[r]
        piv = m[r][r]
        prow = m[r]
        for i in range(r + 1, R):
            row = m[i]
            f = row[r]
            if f:
                m[i] = row[: r + 1] + [
                    (row[j] * piv - f * prow[j]) // prev for j in range(r + 1, C)
                ]
            elif piv != prev:
                m[i] = row[: r + 1] + [(row[j] * piv) // prev for j in range(r + 1, C)]
        prev = piv
        r += 1
    return r


def rank(M: ExactMatrix) -> int:
    """Exact rank of a numeric matrix."""
    if M.is_parametric:
        raise InputError("parametric matrix: use parametric_rank")
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if not M.field.is_rational:
        p = M.field.characteristic
        if p * p * 2 < 2**63:
            return rank_mod_p(_int_rows(M), p)
        return _rank_gauss_fraction(M, p)
    ints = _int_rows(M)
    bound = min(M.nrows, M.ncols)
    r = rank_mod_p([[v % CROSSCHECK_PRIME for v in row] for row in ints],
                   CROSSCHECK_PRIME)
    if r == bound:
        return r  # a nonzero minor mod p is a nonzero minor over Q
    r2 = rank_mod_p([[v % _SECOND_PRIME for v in row] for row in ints],
                    _SECOND_PRIME)
    if r2 == bound:
        return r2
    return rank_bareiss(ints)


def _rank_gauss_fraction(M: ExactMatrix, p: int) -> int:
    """Plain elimination over GF(p) for primes too large to vectorize."""
    rows = [[int(v) % p for v in row] for row in M.entries]
    R, C = len(rows), len(rows[0])
    r = 0
    for c in range(C):
        piv = next((i for i in range(r, R) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(R):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == R:
            break
    return r


def kernel_basis(M: ExactMatrix) -> list[list[Fraction]]:
    """Basis of the right null space, exact; rank + len(basis) == ncols."""
    if M.is_parametric:
        raise InputError("parametric matrix: use parametric_rank")
    if not M.field.is_rational:
        return _kernel_mod_p(M)
    rows = [[Fraction(v) for v in row] for row in M.entries]
    return _kernel_rref(rows, M.ncols, lambda x: x == 0,
                        lambda a, b: a / b, Fraction(0), Fraction(1))


def _kernel_mod_p(M: ExactMatrix) -> list[list[int]]:
    p = M.field.characteristic
    rows = [[int(v) % p for v in row] for row in M.entries]

    class GF:
        __slots__ = ("v",)

        def __init__(self, v):
            self.v = v % p

        def __eq__(self, o):
            return self.v == (o.v if isinstance(o, GF) else o % p)

        def __sub__(self, o):
            return GF(self.v - o.v)

        def __mul__(self, o):
            return GF(self.v * o.v)

        def __truediv__(self, o):
            return GF(self.v * pow(o.v, p - 2, p))

    wrapped = [[GF(v) for v in row] for row in rows]
    basis = _kernel_rref(wrapped, M.ncols, lambda x: x.v == 0,
                         lambda a, b: a / b, GF(0), GF(1))
    return [[v.v for v in vec] for vec in basis]


def _kernel_rref(rows, ncols, is_zero, div, zero, one):
    pivots = []
    r = 0
    R = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, R) if not is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [div(v, pv) for v in rows[r]]
        for i in range(R):
            if i != r and not is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == R:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivots):
            vec[pc] = zero - rows[i][fc]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# parametric rank


@dataclass(frozen=True)
class ScalingReduction:
    """Certificate that M(c) = D_row M(1) D_col^{-1}: the potentials are
    the diagonal exponent vectors; checking the identity is linear in the
    number of nonzero entries."""

    row_potentials: tuple[tuple[int, ...], ...]
    col_potentials: tuple[tuple[int, ...], ...]
    coefficient_rows: tuple[tuple[int, ...], ...]


def detect_scaling(M: ExactMatrix) -> ScalingReduction | None:
    """Find row/column potentials turning M into a constant matrix, or
    None when entries are multi-term or the potentials are inconsistent."""
    if not M.is_parametric:
        return None
    n = M.nparams
    entries: list[list[tuple[tuple[int, ...], int] | None]] = []
    for row in M.entries:
        out_row = []
        for v in row:
            if not isinstance(v, IntPoly) or v.is_zero():
                out_row.append(None)
            elif v.is_single_term():
                out_row.append(v.single_term())
            else:
                return None
        entries.append(out_row)

    zero = (0,) * n
    row_pot: list[tuple[int, ...] | None] = [None] * M.nrows
    col_pot: list[tuple[int, ...] | None] = [None] * M.ncols
    for start in range(M.nrows):
        if row_pot[start] is not None or not any(entries[start]):
            continue
        row_pot[start] = zero
        stack = [("r", start)]
        while stack:
            kind, idx = stack.pop()
            if kind == "r":
                for j in range(M.ncols):
                    t = entries[idx][j]
                    if t is None:
                        continue
                    want = tuple(a - b for a, b in zip(row_pot[idx], t[0]))
                    if col_pot[j] is None:
                        col_pot[j] = want
                        stack.append(("c", j))
                    elif col_pot[j] != want:
                        return None
            else:
                for i in range(M.nrows):
                    t = entries[i][idx]
                    if t is None:
                        continue
                    want = tuple(a + b for a, b in zip(col_pot[idx], t[0]))
                    if row_pot[i] is None:
                        row_pot[i] = want
                        stack.append(("r", i))
                    elif row_pot[i] != want:
                        return None
    coeff = tuple(
        tuple(t[1] if t is not None else 0 for t in row) for row in entries
    )
    return ScalingReduction(
        tuple(rp if rp is not None else zero for rp in row_pot),
        tuple(cp if cp is not None else zero for cp in col_pot),
        coeff,
    )


def _parametric_rank_elimination(M: ExactMatrix) -> int:
    """Fraction-free Bareiss over the polynomial ring; pivots are any
    nonzero polynomial entries, fewest-terms first."""
    n = M.nparams
    p = M.field.characteristic
    zero = IntPoly(n, None, p)

    def as_poly(v) -> IntPoly:
        if isinstance(v, IntPoly):
            return v
        return IntPoly.const(n, int(v), p)

    m = [[as_poly(v) for v in row] for row in M.entries]
    R, C = M.nrows, M.ncols
    prev = IntPoly.const(n, 1, p)
    r = 0
    while r < R and r < C:
        best = None
        for i in range(r, R):
            for j in range(r, C):
                v = m[i][j]
                if not v.is_zero():
                    key = (v.nterms(), v.total_degree())
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != r:
            m[r], m[pi] = m[pi], m[r]
        if pj != r:
            for row in m:
                row[r], row[pj] = row[pj], row[r]
        piv = m[r][r]
        prow = m[r]
        one_prev = prev.is_single_term() and prev.constant_value() == 1
        for i in range(r + 1, R):
            row = m[i]
            f = row[r]
            if f.is_zero():
                if piv == prev:
                    continue
                new = [row[j] * piv for j in range(r + 1, C)]
            else:
                new = [row[j] * piv - f * prow[j] for j in range(r + 1, C)]
            if not one_prev:
                new = [v.exact_div(prev) if not v.is_zero() else zero for v in new]
            m[i] = row[: r + 1] + new
        prev = piv
        r += 1
    return r


def parametric_rank(M: ExactMatrix, *, method: str = "auto",
                    seed: int = DEFAULT_SEED) -> int:
    """Rank over the field of rational functions in the parameters
    (equivalently the maximum rank over all specializations), exact.

    method: "auto" tries the scaling reduction first; "elimination"
    forces fraction-free elimination.  The result is cross-checked
    against random specializations over a prime field > 2^30.
    """
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if not M.is_parametric:
        return rank(M)
    result = None
    if method == "auto":
        red = detect_scaling(M)
        if red is not None:
            coeff = ExactMatrix.from_rows(red.coefficient_rows, M.field)
            result = rank(coeff)
    elif method != "elimination":
        raise InputError(f"unknown parametric_rank method {method!r}")
    if result is None:
        result = _parametric_rank_elimination(M)

    # semicontinuity cross-check: specializations never exceed the result
    rng = random.Random(seed)
    p = CROSSCHECK_PRIME if M.field.is_rational else M.field.characteristic
    for _ in range(2):
        spec = specialize(M, [rng.randrange(1, min(p, 2**30)) for _ in range(M.nparams)])
        sr = rank_mod_p(spec, p) if p * p * 2 < 2**63 else rank_mod_p(spec, CROSSCHECK_PRIME)
        if sr > result:
            raise AssertionError(
                "specialized rank exceeds parametric rank (internal error)"
            )
    return result


def specialize(M: ExactMatrix, point: Sequence[int]) -> list[list[int]]:
    """Integer matrix obtained by evaluating parameters at a point."""
    out = []
    for row in M.entries:
        out.append([
            v.evaluate(point) if isinstance(v, IntPoly) else int(v)
            for v in row
        ])
    return out


# ---------------------------------------------------------------------------
# matrices attached to monomial algebras


def _as_field_scalar(c: Fraction, field: FieldSpec):
    if field.is_rational:
        return c
    p = field.characteristic
    den = c.denominator % p
    if den == 0:
        raise InputError(f"coefficient {c} has no reduction mod {p}")
    return (c.numerator % p) * pow(den, p - 2, p) % p


def mult_map_matrix(ideal: MonomialIdeal, y: LinearForm, k: int,
                    field: FieldSpec = QQ) -> ExactMatrix:
    """Matrix of multiplication by y from the degree-(k-1) standard basis
    to the degree-k one.  With a generic y the entries are the
    indeterminates c_i."""
    if y.nvars != ideal.nvars:
        raise InputError("linear form variable count mismatch")
    if not y.is_generic and y.is_zero():
        raise InputError("zero linear form")
    if k < 1:
        raise InputError("degree must be at least 1")
    src = standard_monomials(ideal, k - 1)
    tgt = standard_monomials(ideal, k)
    if not src and not tgt:
        raise InputError(f"degree {k} out of range for this quotient")
    n = ideal.nvars
    idx = {m: i for i, m in enumerate(tgt)}
    if y.is_generic:
        zero = IntPoly(n, None, field.characteristic)
        cvars = [IntPoly.var(n, i, field.characteristic) for i in range(n)]
        rows = [[zero] * len(src) for _ in tgt]
        for j, m in enumerate(src):
            for i in range(n):
                r = idx.get(mon_shift(m, i))
                if r is not None:
                    rows[r][j] = cvars[i]
        return ExactMatrix.from_rows(rows, field, nparams=n) if tgt else \
            ExactMatrix(0, len(src), (), field, n)
    coeffs = [_as_field_scalar(c, field) for c in y.coeffs]
    zero = Fraction(0) if field.is_rational else 0
    rows = [[zero] * len(src) for _ in tgt]
    for j, m in enumerate(src):
        for i in range(n):
            r = idx.get(mon_shift(m, i))
            if r is not None:
                rows[r][j] = coeffs[i]
    if not tgt:
        return ExactMatrix(0, len(src), (), field, 0)
    return ExactMatrix.from_rows(rows, field)


def generic_mult_rank(ideal: MonomialIdeal, k: int, field: FieldSpec = QQ,
                      seed: int = DEFAULT_SEED) -> int:
    """parametric_rank of the generic multiplication map at degree k."""
    M = mult_map_matrix(ideal, LinearForm.generic(ideal.nvars), k, field)
    return parametric_rank(M, seed=seed)


def colon_dim_by_linear_form(ideal: MonomialIdeal, y: LinearForm, k: int,
                             field: FieldSpec = QQ) -> int:
    """dim of the degree-k piece of (ideal : y) for a numeric linear form:
    dim S_k minus the rank of f |-> [y f] from S_k to (S/ideal)_{k+1}."""
    if y.is_generic:
        raise InputError("parametric linear form: use parametric_rank machinery")
    if y.is_zero():
        raise InputError("zero linear form")
    if y.nvars != ideal.nvars:
        raise InputError("linear form variable count mismatch")
    n = ideal.nvars
    src = list(monomials_of_degree(n, k))
    tgt = standard_monomials(ideal, k + 1)
    if not tgt:
        return comb(n - 1 + k, k)
    coeffs = [_as_field_scalar(c, field) for c in y.coeffs]
    zero = Fraction(0) if field.is_rational else 0
    idx = {m: i for i, m in enumerate(tgt)}
    rows = [[zero] * len(src) for _ in tgt]
    for j, m in enumerate(src):
        for i in range(n):
            r = idx.get(mon_shift(m, i))
            if r is not None:
                rows[r][j] = coeffs[i]
    return comb(n - 1 + k, k) - rank(ExactMatrix.from_rows(rows, field))
