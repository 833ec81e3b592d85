"""Monomials, monomial ideals, quotient bases and Hilbert functions.

Monomials are plain exponent tuples (one nonnegative integer per variable,
variables written x1..xn).  A MonomialIdeal stores its unique minimal
(divisibility-antichain) generating set, so mu(I) is just the number of
generators.  All functions here are pure and all values immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

Exponents = tuple[int, ...]


class InputError(ValueError):
    """Raised on invalid ideal/monomial input (CLI maps this to exit 2)."""


def mdeg(m: Exponents) -> int:
    return sum(m)


def divides(g: Exponents, m: Exponents) -> bool:
    return all(a <= b for a, b in zip(g, m))


def mon_mul(m1: Exponents, m2: Exponents) -> Exponents:
    return tuple(a + b for a, b in zip(m1, m2))


def mon_shift(m: Exponents, i: int) -> Exponents:
    """Multiply by the i-th variable (0-based index)."""
    return m[:i] + (m[i] + 1,) + m[i + 1 :]


def mon_colon(g: Exponents, m: Exponents) -> Exponents:
    """Exponents of g / gcd(g, m): componentwise difference clamped at 0."""
    return tuple(max(a - b, 0) for a, b in zip(g, m))


def mon_str(m: Exponents) -> str:
    if not any(m):
        return "1"
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return " ".join(parts)


def monomials_of_degree(n: int, k: int) -> Iterator[Exponents]:
    """All exponent tuples of total degree k, lexicographically descending
    with x1 > x2 > ... > xn."""
    if n == 1:
        yield (k,)
        return
    for a in range(k, -1, -1):
        for rest in monomials_of_degree(n - 1, k - a):
            yield (a,) + rest


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set.

    gens is always a divisibility antichain sorted lex-descending; use
    minimalize() or the constructors below rather than building directly.
    """

    nvars: int
    gens: tuple[Exponents, ...]

    @property
    def mu(self) -> int:
        return len(self.gens)

    def contains(self, m: Exponents) -> bool:
        if len(m) != self.nvars:
            raise InputError(
                f"monomial has {len(m)} exponents, ideal has {self.nvars} variables"
            )
        return any(divides(g, m) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __str__(self) -> str:
        gens = ",".join(mon_str(g) for g in self.gens)
        return f"n={self.nvars}; gens={gens}"


def minimalize(gens: Iterable[Exponents], nvars: int) -> MonomialIdeal:
    """Divisibility antichain generating the same ideal.  Idempotent."""
    if nvars < 1:
        raise InputError("need at least one variable")
    pool: list[Exponents] = []
    for g in gens:
        if len(g) != nvars:
            raise InputError(
                f"generator {g} has {len(g)} exponents, expected {nvars}"
            )
        if any(e < 0 for e in g):
            raise InputError(f"negative exponent in generator {g}")
        pool.append(tuple(g))
    # sort by degree so a generator can only be divided by earlier ones
    pool.sort(key=mdeg)
    kept: list[Exponents] = []
    for g in pool:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    kept.sort(reverse=True)
    return MonomialIdeal(nvars, tuple(kept))


def membership(ideal: MonomialIdeal, m: Exponents) -> bool:
    return ideal.contains(m)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.nvars != b.nvars:
        raise InputError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    return minimalize(a.gens + b.gens, a.nvars)


def m_power(p: int, nvars: int) -> MonomialIdeal:
    """p-th power of the graded maximal ideal (x1,...,xn)."""
    if p < 0:
        raise InputError("power must be nonnegative")
    return MonomialIdeal(nvars, tuple(monomials_of_degree(nvars, p)))


def cap_with_m_power(ideal: MonomialIdeal, p: int) -> MonomialIdeal:
    return ideal_sum(ideal, m_power(p, ideal.nvars))


def multiply_by_m(ideal: MonomialIdeal) -> MonomialIdeal:
    """The product m*I of the maximal ideal with I."""
    prods = [mon_shift(g, i) for g in ideal.gens for i in range(ideal.nvars)]
    return minimalize(prods, ideal.nvars)


def colon_by_monomial(ideal: MonomialIdeal, m: Exponents) -> MonomialIdeal:
    """The colon ideal I : m for a single monomial m."""
    if len(m) != ideal.nvars:
        raise InputError("monomial length does not match variable count")
    return minimalize([mon_colon(g, m) for g in ideal.gens], ideal.nvars)


def is_artinian(ideal: MonomialIdeal) -> bool:
    """True iff every variable has a pure power among the generators."""
    seen = [False] * ideal.nvars
    for g in ideal.gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) == 1:
            seen[nz[0]] = True
        elif not nz:
            return True  # unit ideal
    return all(seen)


def standard_monomials(ideal: MonomialIdeal, k: int) -> list[Exponents]:
    """Degree-k monomials not in the ideal, lex-descending."""
    if k < 0:
        raise InputError("degree must be nonnegative")
    gens_k = [g for g in ideal.gens if mdeg(g) <= k]
    return [m for m in monomials_of_degree(ideal.nvars, k)
            if not any(divides(g, m) for g in gens_k)]


@dataclass(frozen=True)
class QuotientBasis:
    """Per-degree standard monomial bases of an Artinian quotient.

    levels[k] is the lex-descending basis of degree k; top_degree is the
    least degree with empty basis, so hilbert() has length top_degree.
    """

    ideal: MonomialIdeal
    levels: tuple[tuple[Exponents, ...], ...]

    @property
    def top_degree(self) -> int:
        return len(self.levels)

    def hilbert(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def dim(self) -> int:
        return sum(len(level) for level in self.levels)


def quotient_basis(ideal: MonomialIdeal) -> QuotientBasis:
    if not is_artinian(ideal):
        raise InputError("quotient basis requires an Artinian ideal")
    levels: list[tuple[Exponents, ...]] = []
    k = 0
    while True:
        level = standard_monomials(ideal, k)
        if not level:
            break
        levels.append(tuple(level))
        k += 1
    return QuotientBasis(ideal, tuple(levels))


def hilbert_function(ideal: MonomialIdeal) -> tuple[int, ...]:
    """(H(0), ..., H(top_degree - 1)); the next value is 0."""
    return quotient_basis(ideal).hilbert()


def socle_cap_degree(ideal: MonomialIdeal) -> int:
    """Least D with m^D contained in the ideal."""
    if not is_artinian(ideal):
        raise InputError("socle cap degree requires an Artinian ideal")
    return quotient_basis(ideal).top_degree


def dim_ideal_at(ideal: MonomialIdeal, k: int) -> int:
    """dim_K of the degree-k piece of the ideal inside S_k."""
    total = comb(ideal.nvars - 1 + k, k)
    return total - len(standard_monomials(ideal, k))


# ---------------------------------------------------------------------------
# constructors for the concrete families under study


def aci_ideal(a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> MonomialIdeal:
    """Three pure powers plus one mixed monomial in three variables
    (monomial almost complete intersection)."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 1:
            raise InputError(f"{name} must be positive")
    for name, v, bound in (("alpha", alpha, a), ("beta", beta, b), ("gamma", gamma, c)):
        if v < 0:
            raise InputError(f"{name} must be nonnegative")
        if v >= bound:
            raise InputError(f"need {name} < pure-power exponent, got {v} >= {bound}")
    if sum(1 for v in (alpha, beta, gamma) if v > 0) < 2:
        raise InputError("at least two of alpha, beta, gamma must be nonzero")
    return minimalize(
        [(a, 0, 0), (0, b, 0), (0, 0, c), (alpha, beta, gamma)], 3
    )


def aci_s_value(a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> Fraction:
    """The distinguished degree (a+b+c+alpha+beta+gamma)/3 - 2, exact."""
    aci_ideal(a, b, c, alpha, beta, gamma)  # validate side conditions
    return Fraction(a + b + c + alpha + beta + gamma, 3) - 2


def as_aci(ideal: MonomialIdeal) -> tuple[int, int, int, int, int, int] | None:
    """Recover (a,b,c,alpha,beta,gamma) if the ideal is a 3-variable
    almost complete intersection, else None."""
    if ideal.nvars != 3 or len(ideal.gens) != 4:
        return None
    pure: dict[int, int] = {}
    mixed = None
    for g in ideal.gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) == 1 and nz[0] not in pure:
            pure[nz[0]] = g[nz[0]]
        elif len(nz) >= 2 and mixed is None:
            mixed = g
        else:
            return None
    if len(pure) != 3 or mixed is None:
        return None
    a, b, c = pure[0], pure[1], pure[2]
    alpha, beta, gamma = mixed
    if alpha >= a or beta >= b or gamma >= c:
        return None
    if sum(1 for v in mixed if v > 0) < 2:
        return None
    return (a, b, c, alpha, beta, gamma)


def thm31_ideal(N: int, n: int) -> MonomialIdeal:
    """(x1^N, x2^N, x1^{N-2}x2^{N-2}) plus (N-1)-st powers of the
    remaining variables; n even, at least 4."""
    if N < 5:
        raise InputError("need N >= 5")
    if n < 4 or n % 2:
        raise InputError("need n >= 4 even")
    gens = [
        (N,) + (0,) * (n - 1),
        (0, N) + (0,) * (n - 2),
        (N - 2, N - 2) + (0,) * (n - 2),
    ]
    for i in range(2, n):
        e = [0] * n
        e[i] = N - 1
        gens.append(tuple(e))
    return minimalize(gens, n)


def thm31_d(N: int, n: int) -> int:
    thm31_ideal(N, n)  # validate
    return (n // 2) * (N - 2)


def cone_extension(ideal: MonomialIdeal) -> MonomialIdeal:
    """Extend to one more variable y: J*T + (x1 y, ..., xn y, y^2)."""
    n = ideal.nvars
    gens = [g + (0,) for g in ideal.gens]
    for i in range(n):
        e = [0] * (n + 1)
        e[i] = 1
        e[n] = 1
        gens.append(tuple(e))
    gens.append((0,) * n + (2,))
    return minimalize(gens, n + 1)
