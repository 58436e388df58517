"""Exact exponents, segments and multisegments.

A segment is a run of consecutive points ``{b, b+1, ..., e}`` on a cuspidal
line.  Points are exact rationals (:class:`fractions.Fraction`).  A
multisegment is a multiset of segments kept in canonical order, sorted by
``(line, begin, end)``.

Text form::

    (0..1)+(1/2..3/2)        two segments on the default line
    sigma:(0..0)             a segment on line "sigma"
    1                        the empty multisegment (the unit)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Union

DEFAULT_LINE = "rho"

Exponent = Fraction
ExponentLike = Union[int, str, Fraction]


class ParseError(ValueError):
    """Malformed text input; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def exponent(x: ExponentLike) -> Fraction:
    """Coerce ``x`` to an exact rational.  Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"exponents must be exact, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not _RATIONAL_FULL.fullmatch(s):
            raise ParseError("bad rational", x, 0)
        return Fraction(s)
    raise TypeError(f"cannot make an exponent from {x!r}")


def format_exponent(x: Fraction) -> str:
    return str(x)


class Point(NamedTuple):
    line: str
    value: Fraction


class Segment(NamedTuple):
    """Closed run of points ``begin, begin+1, ..., end`` on ``line``.

    Field order gives the canonical sort key.  Build validated segments with
    :func:`segment`, :func:`seg_from_end` or :func:`seg_from_begin`.
    """

    line: str
    begin: Fraction
    end: Fraction

    @property
    def length(self) -> int:
        return int(self.end - self.begin) + 1

    @property
    def center(self) -> Fraction:
        return (self.begin + self.end) / 2

    @property
    def coset(self) -> tuple[str, Fraction]:
        """Segments interact only when they share this key."""
        return self.line, self.begin % 1

    def points(self) -> list[Fraction]:
        return [self.begin + i for i in range(self.length)]

    def contains(self, other: "Segment") -> bool:
        return (
            self.line == other.line
            and self.coset == other.coset
            and self.begin <= other.begin
            and other.end <= self.end
        )

    def shifted(self, q: Fraction) -> "Segment":
        return Segment(self.line, self.begin + q, self.end + q)

    def reflected(self) -> "Segment":
        return Segment(self.line, -self.end, -self.begin)

    def __str__(self) -> str:
        body = f"({self.begin}..{self.end})"
        return body if self.line == DEFAULT_LINE else f"{self.line}:{body}"


def segment(begin: ExponentLike, end: ExponentLike, line: str = DEFAULT_LINE) -> Segment:
    b, e = exponent(begin), exponent(end)
    d = e - b
    if d.denominator != 1 or d < 0:
        raise ValueError(f"end - begin must be a non-negative integer, got [{b}, {e}]")
    _check_line(line)
    return Segment(line, b, e)


def _check_line(line: str) -> None:
    if not _LINE.fullmatch(line):
        raise ValueError(f"bad line label {line!r}")


class Multisegment:
    """Immutable multiset of segments in canonical order.

    The empty multisegment is the unit monomial.  ``+`` is multiset union.
    """

    __slots__ = ("segments", "_hash")

    def __init__(self, segments: Iterable[Segment] = ()):
        segs = tuple(sorted(segments))
        for s in segs:
            if not isinstance(s, Segment):
                raise TypeError(f"not a segment: {s!r}")
        self.segments: tuple[Segment, ...] = segs
        self._hash = hash(segs)

    @classmethod
    def of(cls, *items: Union[Segment, "Multisegment"]) -> "Multisegment":
        """Union of segments and multisegments; the unit contributes nothing."""
        segs: list[Segment] = []
        for it in items:
            if isinstance(it, Multisegment):
                segs.extend(it.segments)
            else:
                segs.append(it)
        return cls(segs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[ExponentLike, ExponentLike]], line: str = DEFAULT_LINE) -> "Multisegment":
        return cls(segment(b, e, line) for b, e in pairs)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self._hash == other._hash and self.segments == other.segments

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Multisegment") -> bool:
        # total order used only for canonical listings, not the poset order
        return (len(self), self.segments) < (len(other), other.segments)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.segments + other.segments)

    def __repr__(self) -> str:
        return f"Multisegment({format_multisegment(self)!r})"

    def __str__(self) -> str:
        return format_multisegment(self)

    # statistics
    @property
    def thickness(self) -> int:
        return len(self.segments)

    @property
    def maxlength(self) -> int:
        return max((s.length for s in self.segments), default=0)

    def begins(self) -> Counter:
        return Counter(Point(s.line, s.begin) for s in self.segments)

    def ends(self) -> Counter:
        return Counter(Point(s.line, s.end) for s in self.segments)

    def support(self) -> Counter:
        c: Counter = Counter()
        for s in self.segments:
            for x in s.points():
                c[Point(s.line, x)] += 1
        return c

    def shifted(self, q: ExponentLike) -> "Multisegment":
        q = exponent(q)
        return Multisegment(s.shifted(q) for s in self.segments)

    def reflected(self) -> "Multisegment":
        return Multisegment(s.reflected() for s in self.segments)

    def components(self) -> dict[tuple[str, Fraction], "Multisegment"]:
        """Split by (line, integer coset); segments in different parts never interact."""
        parts: dict[tuple[str, Fraction], list[Segment]] = {}
        for s in self.segments:
            parts.setdefault(s.coset, []).append(s)
        return {k: Multisegment(v) for k, v in sorted(parts.items())}


UNIT = Multisegment()


def seg_from_end(a: ExponentLike, m: int, line: str = DEFAULT_LINE) -> Segment | Multisegment:
    """Segment of length ``m`` ending at ``a``; the unit when ``m == 0``."""
    if m < 0:
        raise ValueError("segment length must be non-negative")
    if m == 0:
        return UNIT
    a = exponent(a)
    return segment(a - m + 1, a, line)


def seg_from_begin(a: ExponentLike, m: int, line: str = DEFAULT_LINE) -> Segment | Multisegment:
    """Segment of length ``m`` beginning at ``a``; the unit when ``m == 0``."""
    if m < 0:
        raise ValueError("segment length must be non-negative")
    if m == 0:
        return UNIT
    a = exponent(a)
    return segment(a, a + m - 1, line)


def linked(s1: Segment, s2: Segment) -> bool:
    """Neither segment contains the other and their union is a segment."""
    if s1.line != s2.line or (s1.begin - s2.begin).denominator != 1:
        return False
    if s1.begin > s2.begin:
        s1, s2 = s2, s1
    # now s1 starts first (or together, in which case one contains the other)
    return s1.begin < s2.begin and s1.end < s2.end and s2.begin <= s1.end + 1


@dataclass(frozen=True)
class Stats:
    m: int
    t: int
    begins: Counter = field(default_factory=Counter)
    ends: Counter = field(default_factory=Counter)
    support: Counter = field(default_factory=Counter)


def stats(M: Multisegment, line: str | None = None) -> Stats:
    """Maxlength, thickness, beginnings, endings and support of ``M``.

    With ``line`` given, only that line's segments are counted.
    """
    if line is not None:
        M = Multisegment(s for s in M if s.line == line)
    return Stats(M.maxlength, M.thickness, M.begins(), M.ends(), M.support())


def stats_per_line(M: Multisegment) -> dict[str, Stats]:
    return {ln: stats(M, ln) for ln in sorted({s.line for s in M})}


# --- text and JSON -------------------------------------------------------

_RAT = r"-?\d+(?:/\d+)?"
_RATIONAL_FULL = re.compile(r"-?\d+(?:/[1-9]\d*)?")
_LINE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_SEG_RE = re.compile(
    r"\s*(?:(?P<line>[A-Za-z_][A-Za-z0-9_]*)\s*:\s*)?\(\s*(?P<b>" + _RAT + r")\s*\.\.\s*(?P<e>" + _RAT + r")\s*\)\s*"
)


def format_multisegment(M: Multisegment) -> str:
    if not M:
        return "1"
    return "+".join(str(s) for s in M.segments)


def parse_multisegment(text: str) -> Multisegment:
    """Inverse of :func:`format_multisegment`; accepts any segment order."""
    if text.strip() == "1":
        return UNIT
    segs: list[Segment] = []
    pos = 0
    n = len(text)
    while True:
        m = _SEG_RE.match(text, pos)
        if not m:
            raise ParseError("expected segment '(b..e)'", text, pos)
        try:
            b = Fraction(m.group("b"))
            e = Fraction(m.group("e"))
            segs.append(segment(b, e, m.group("line") or DEFAULT_LINE))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), text, m.start()) from None
        pos = m.end()
        if pos == n:
            break
        if text[pos] != "+":
            raise ParseError("expected '+'", text, pos)
        pos += 1
    return Multisegment(segs)


def parse_points(text: str) -> list[Point]:
    """Comma-separated points such as ``-1,0,0,1/2`` or ``sigma:0``."""
    pts = []
    pos = 0
    for chunk in text.split(","):
        item = chunk.strip()
        line = DEFAULT_LINE
        if ":" in item:
            line, item = (p.strip() for p in item.split(":", 1))
            if not _LINE.fullmatch(line):
                raise ParseError("bad line label", text, pos)
        if not _RATIONAL_FULL.fullmatch(item):
            raise ParseError("bad rational", text, pos)
        pts.append(Point(line, Fraction(item)))
        pos += len(chunk) + 1
    return pts


def multisegment_to_json(M: Multisegment) -> dict:
    return {"segments": [{"line": s.line, "b": str(s.begin), "e": str(s.end)} for s in M]}


def multisegment_from_json(obj: dict) -> Multisegment:
    return Multisegment(segment(exponent(d["b"]), exponent(d["e"]), d.get("line", DEFAULT_LINE)) for d in obj["segments"])
