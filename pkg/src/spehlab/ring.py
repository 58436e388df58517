"""Integer combinations of multisegment monomials.

Monomials multiply by multiset union, so this is a polynomial ring whose
variables are segments.  Coefficients are Python ints (no overflow).

Text form: terms ``c*[M]`` joined by `` + `` / `` - ``, a coefficient of 1
omitted, e.g. ``[(-1/2..-1/2)+(1/2..1/2)] - [(-1/2..1/2)]``; zero is ``0``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

from .core import (
    UNIT,
    ExponentLike,
    Multisegment,
    ParseError,
    exponent,
    multisegment_from_json,
    multisegment_to_json,
    parse_multisegment,
)
from .poset import is_lt


class RingElement:
    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[Multisegment, int] | Iterable[tuple[Multisegment, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Multisegment, int] = {}
        for M, c in items:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            acc[M] = acc.get(M, 0) + c
        self.terms: dict[Multisegment, int] = {M: acc[M] for M in sorted(acc) if acc[M] != 0}
        self._key = tuple(self.terms.items())

    @classmethod
    def monomial(cls, M: Multisegment, c: int = 1) -> "RingElement":
        return cls({M: c})

    @classmethod
    def one(cls) -> "RingElement":
        return cls({UNIT: 1})

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RingElement({UNIT: other})
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __neg__(self) -> "RingElement":
        return RingElement({M: -c for M, c in self.terms.items()})

    def __add__(self, other: Union["RingElement", int]) -> "RingElement":
        other = _lift(other)
        return RingElement(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __sub__(self, other: Union["RingElement", int]) -> "RingElement":
        return self + (-_lift(other))

    def __rsub__(self, other: Union["RingElement", int]) -> "RingElement":
        return _lift(other) - self

    def __mul__(self, other: Union["RingElement", int]) -> "RingElement":
        other = _lift(other)
        acc: dict[Multisegment, int] = {}
        for M, a in self.terms.items():
            for N, b in other.terms.items():
                P = M + N
                acc[P] = acc.get(P, 0) + a * b
        return RingElement(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            raise ValueError("negative power")
        out = RingElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"RingElement({format_ring(self)!r})"

    def __str__(self) -> str:
        return format_ring(self)


def _lift(x: Union[RingElement, Multisegment, int]) -> RingElement:
    if isinstance(x, RingElement):
        return x
    if isinstance(x, Multisegment):
        return RingElement.monomial(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return RingElement({UNIT: x})
    raise TypeError(f"cannot use {x!r} as a ring element")


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def twist(x: RingElement, q: ExponentLike) -> RingElement:
    """Shift every segment of every monomial by ``q``."""
    q = exponent(q)
    return RingElement({M.shifted(q): c for M, c in x})


def reflect(x: RingElement) -> RingElement:
    """Send each segment ``[b, e]`` to ``[-e, -b]``."""
    return RingElement({M.reflected(): c for M, c in x})


def degree(x: RingElement) -> int:
    """Largest thickness among monomials with nonzero coefficient."""
    if not x:
        raise ValueError("degree of the zero element")
    return max(M.thickness for M in x.terms)


class NoDominantMonomial(ValueError):
    pass


def dominant_monomial(x: RingElement) -> tuple[Multisegment, int]:
    """The monomial strictly above every other monomial of ``x``, with its coefficient."""
    if not x:
        raise NoDominantMonomial("zero element has no monomials")
    monos = list(x.terms)
    # support equality is a cheap necessary condition for comparability
    sup = monos[0].support()
    if any(M.support() != sup for M in monos[1:]):
        raise NoDominantMonomial("monomials with different supports are incomparable")
    # the top has maximal thickness, since thickness drops going down
    t = max(M.thickness for M in monos)
    for top in (M for M in monos if M.thickness == t):
        if all(N == top or is_lt(N, top) for N in monos):
            return top, x.terms[top]
    raise NoDominantMonomial("maximal monomials are incomparable")


# --- text and JSON -------------------------------------------------------

_TERM_RE = re.compile(r"\s*(?:(?P<c>\d+)\s*\*\s*)?\[(?P<m>[^\]]*)\]\s*")


def format_ring(x: RingElement) -> str:
    if not x:
        return "0"
    parts = []
    for i, (M, c) in enumerate(x):
        mag = abs(c)
        body = f"[{M}]" if mag == 1 else f"{mag}*[{M}]"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_ring(text: str) -> RingElement:
    s = text.replace("−", "-").replace("·", "*")
    if s.strip() == "0":
        return RingElement()
    pos = 0
    n = len(s)
    terms = []
    sign = 1
    first = True
    while True:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos < n and s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        m = _TERM_RE.match(s, pos)
        if not m:
            raise ParseError("expected term 'c*[multisegment]'", text, pos)
        c = int(m.group("c")) if m.group("c") else 1
        try:
            M = parse_multisegment(m.group("m"))
        except ParseError as exc:
            raise ParseError("bad multisegment", text, m.start("m") + exc.pos) from None
        terms.append((M, sign * c))
        pos = m.end()
        first = False
        sign = 1
        if pos >= n:
            break
    return RingElement(terms)


def ring_to_json(x: RingElement) -> list[dict]:
    return [{"coeff": c, **multisegment_to_json(M)} for M, c in x]


def ring_from_json(obj: list[dict]) -> RingElement:
    return RingElement((multisegment_from_json(d), int(d["coeff"])) for d in obj)
