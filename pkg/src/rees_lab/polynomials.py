"""Sparse multivariate polynomials over arbitrary-precision integers.

Used for the entries of parametric matrices (indeterminate linear-form
coefficients c1..cn).  Coefficients live in Z, or in Z/p when a prime
modulus is attached; zero-testing is exact in both cases.  Only the
operations needed by fraction-free elimination are provided.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Exp = tuple[int, ...]


def _grlex_key(e: Exp) -> tuple[int, Exp]:
    return (sum(e), e)


class IntPoly:
    """Immutable sparse polynomial: {exponent tuple: integer coefficient}."""

    __slots__ = ("nparams", "terms", "p")

    def __init__(self, nparams: int, terms: Mapping[Exp, int] | None = None, p: int = 0):
        self.nparams = nparams
        self.p = p
        clean: dict[Exp, int] = {}
        if terms:
            for e, c in terms.items():
                if p:
                    c %= p
                if c:
                    clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, nparams: int, c: int, p: int = 0) -> "IntPoly":
        return cls(nparams, {(0,) * nparams: c}, p)

    @classmethod
    def var(cls, nparams: int, i: int, p: int = 0) -> "IntPoly":
        e = [0] * nparams
        e[i] = 1
        return cls(nparams, {tuple(e): 1}, p)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def nterms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def single_term(self) -> tuple[Exp, int]:
        ((e, c),) = self.terms.items()
        return e, c

    def constant_value(self) -> int | None:
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            e, c = self.single_term()
            if not any(e):
                return c
        return None

    def leading(self) -> tuple[Exp, int]:
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntPoly)
            and self.nparams == other.nparams
            and self.p == other.p
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = " ".join(
                f"c{i + 1}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c} {mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------------

    def _wrap(self, terms: dict[Exp, int]) -> "IntPoly":
        return IntPoly(self.nparams, terms, self.p)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._wrap(terms)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) - c
        return self._wrap(terms)

    def __neg__(self) -> "IntPoly":
        return self._wrap({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.terms or not other.terms:
            return self._wrap({})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exp, int] = {}
        p = self.p
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                out[e] = v % p if p else v
        return self._wrap(out)

    def scale(self, c: int) -> "IntPoly":
        return self._wrap({e: v * c for e, v in self.terms.items()})

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self / other when the division is exact; raises
        ArithmeticError otherwise.  Cancels grlex leading terms."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem_terms = dict(self.terms)
        q: dict[Exp, int] = {}
        le, lc = other.leading()
        p = self.p
        if p:
            lc_inv = pow(lc, -1, p)
        while rem_terms:
            re = max(rem_terms, key=_grlex_key)
            rc = rem_terms[re]
            qe = tuple(a - b for a, b in zip(re, le))
            if any(e < 0 for e in qe):
                raise ArithmeticError("polynomial division is not exact")
            if p:
                qc = (rc * lc_inv) % p
            else:
                qc, r = divmod(rc, lc)
                if r:
                    raise ArithmeticError("polynomial division is not exact")
            q[qe] = qc
            # rem -= qc * c^qe * other
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(qe, e2))
                v = rem_terms.get(e, 0) - qc * c2
                if p:
                    v %= p
                if v:
                    rem_terms[e] = v
                else:
                    rem_terms.pop(e, None)
        return self._wrap(q)

    def evaluate(self, point: Iterable[int], mod: int = 0) -> int:
        """Evaluate at integer coordinates, optionally mod a prime."""
        pt = list(point)
        if len(pt) != self.nparams:
            raise ValueError("wrong number of coordinates")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= pow(x, k, mod) if mod else x**k
            total += v
        if mod:
            total %= mod
        elif self.p:
            total %= self.p
        return total
