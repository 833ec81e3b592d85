"""Parser for the ideal spec text format.

Accepted everywhere an ideal is an input:

    n=<int>; gens=<monomial>(,<monomial>)*     e.g.  n=3; gens=x1^2,x1 x2
    aci(a,b,c,alpha,beta,gamma)                macro form
    thm31(N,n)                                 macro form
    ... + m^p                                  cap suffix on any of the above

Monomials are written like ``x1^3 x2^2`` (spaces optional, ^1 optional),
``1`` for the unit monomial; ``gens=`` with nothing after it (or ``0``)
denotes the zero ideal.  Parse errors carry the offending position.
"""

from __future__ import annotations

import re

from .monomials import (
    MonomialIdeal,
    aci_ideal,
    cap_with_m_power,
    minimalize,
    mon_str,
    thm31_ideal,
)

_VAR_RE = re.compile(r"\s*x(\d+)(?:\^(\d+))?\s*")
_CAP_RE = re.compile(r"\+\s*m\^(\d+)\s*$")
_ACI_RE = re.compile(r"aci\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_THM31_RE = re.compile(r"thm31\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_HEAD_RE = re.compile(r"\s*n\s*=\s*(\d+)\s*;\s*gens\s*=")


class SpecParseError(ValueError):
    """Ideal spec text that does not parse; carries the input position."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")

    def annotated(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^\n{self.args[0]}"


def parse_monomial(text: str, nvars: int, offset: int = 0, full: str | None = None) -> tuple[int, ...]:
    """Parse one monomial like ``x1^3 x2`` or ``1`` into an exponent tuple."""
    full = full if full is not None else text
    s = text.strip()
    if s == "1":
        return (0,) * nvars
    exps = [0] * nvars
    pos = 0
    while pos < len(text):
        if text[pos] in " \t*":
            pos += 1
            continue
        m = _VAR_RE.match(text, pos)
        if not m:
            raise SpecParseError("expected a factor like x2^3", full, offset + pos)
        idx = int(m.group(1))
        if not 1 <= idx <= nvars:
            raise SpecParseError(
                f"variable x{idx} out of range (n={nvars})", full, offset + pos
            )
        exp = int(m.group(2)) if m.group(2) else 1
        exps[idx - 1] += exp
        pos = m.end()
    return tuple(exps)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the full spec grammar, including macros and a ``+ m^p`` suffix."""
    body = text
    cap = None
    m = _CAP_RE.search(body)
    if m:
        cap = int(m.group(1))
        body = body[: m.start()].rstrip()

    stripped = body.strip()
    lead = len(body) - len(body.lstrip())
    if stripped.startswith("aci"):
        am = _ACI_RE.match(stripped)
        if not am:
            raise SpecParseError("malformed aci(a,b,c,alpha,beta,gamma) macro", text, lead)
        try:
            ideal = aci_ideal(*(int(g) for g in am.groups()))
        except ValueError as exc:
            raise SpecParseError(str(exc), text, lead) from exc
    elif stripped.startswith("thm31"):
        tm = _THM31_RE.match(stripped)
        if not tm:
            raise SpecParseError("malformed thm31(N,n) macro", text, lead)
        try:
            ideal = thm31_ideal(int(tm.group(1)), int(tm.group(2)))
        except ValueError as exc:
            raise SpecParseError(str(exc), text, lead) from exc
    else:
        hm = _HEAD_RE.match(body)
        if not hm:
            raise SpecParseError("expected 'n=<int>; gens=...' or a macro", text, lead)
        nvars = int(hm.group(1))
        if nvars < 1:
            raise SpecParseError("need n >= 1", text, lead)
        rest = body[hm.end():]
        gens = []
        if rest.strip() not in ("", "0"):
            pos = hm.end()
            for chunk in rest.split(","):
                if not chunk.strip():
                    raise SpecParseError("empty generator", text, pos)
                gens.append(parse_monomial(chunk, nvars, offset=pos, full=text))
                pos += len(chunk) + 1
        ideal = minimalize(gens, nvars)

    if cap is not None:
        ideal = cap_with_m_power(ideal, cap)
    return ideal


def format_ideal(ideal: MonomialIdeal) -> str:
    """Canonical spec text; parse_ideal(format_ideal(I)) == I."""
    if ideal.is_zero:
        return f"n={ideal.nvars}; gens=0"
    return str(ideal)


def format_monomial(m: tuple[int, ...]) -> str:
    return mon_str(m)
