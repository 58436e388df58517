"""Rectangles (Speh multisegments), the determinantal character and verifiers.

``rect(l, k)`` is ``k`` segments of length ``l`` centred at
``(k-1)/2, (k-3)/2, ..., -(k-1)/2``.  ``char_F(l, k)`` is the alternating
sum over permutations ``w`` of ``1..k`` with ``w(i) + l >= i`` of the product
of segments beginning at ``i - (k+l)/2`` with length ``w(i) + l - i``; its
identity term is ``rect(l, k)``.

Two small cases, expanded by hand::

    char_F(1, 2) = [(-1/2..-1/2)+(1/2..1/2)] - [(-1/2..1/2)]
    char_F(2, 2) = [(-1..0)+(0..1)] - [(-1..1)+(0..0)]
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .core import DEFAULT_LINE, Multisegment, seg_from_begin, segment
from .mwa import Trace, mwa_dual
from .poset import downset, is_lt
from .ring import NoDominantMonomial, RingElement, degree, dominant_monomial, twist

DEFAULT_BUDGET = 18


@dataclass(frozen=True)
class SpehParams:
    l: int
    k: int
    spacing: int = 1
    line: str = DEFAULT_LINE

    def __post_init__(self):
        if self.l < 0 or self.k < 0:
            raise ValueError("l and k must be non-negative")
        if self.spacing < 1:
            raise ValueError("spacing must be a positive integer")


def rect(l: int, k: int, line: str = DEFAULT_LINE) -> Multisegment:
    """``k`` segments of length ``l``; the i-th ends at ``(l-k)/2 + i - 1``."""
    if l < 0 or k < 0:
        raise ValueError("l and k must be non-negative")
    if l == 0 or k == 0:
        return Multisegment()
    segs = []
    for i in range(1, k + 1):
        end = Fraction(l - k, 2) + i - 1
        segs.append(segment(end - l + 1, end, line))
    return Multisegment(segs)


def bar_u(l: int, k: int, s: int = 1, line: str = DEFAULT_LINE) -> Multisegment:
    """Like :func:`rect` but with centres spaced ``1/s`` apart."""
    if s < 1:
        raise ValueError("spacing must be a positive integer")
    if l < 0 or k < 0:
        raise ValueError("l and k must be non-negative")
    if l == 0 or k == 0:
        return Multisegment()
    segs = []
    for j in range(k):
        c = (Fraction(k - 1, 2) - j) / s
        b = c - Fraction(l - 1, 2)
        segs.append(segment(b, b + l - 1, line))
    return Multisegment(segs)


def _parity(w: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return -1 if inv % 2 else 1


def char_F(l: int, k: int, line: str = DEFAULT_LINE) -> RingElement:
    """Signed permutation sum giving the character of ``rect(l, k)`` in the standard basis."""
    if l < 0 or k < 0:
        raise ValueError("l and k must be non-negative")
    if l == 0 or k == 0:
        return RingElement.one()
    shift = Fraction(k + l, 2)
    terms = []
    for w in itertools.permutations(range(1, k + 1)):
        lengths = [w[i - 1] + l - i for i in range(1, k + 1)]
        if min(lengths) < 0:
            continue
        M = Multisegment.of(*(seg_from_begin(i - shift, n, line) for i, n in zip(range(1, k + 1), lengths)))
        terms.append((M, _parity(w)))
    return RingElement(terms)


# --- verification ----------------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    params: dict[str, Any]
    status: str  # "pass", "fail" or "skipped"
    counterexample: dict[str, str] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        d = asdict(self)
        if d["counterexample"] is None:
            del d["counterexample"]
        return d


def _report(suite, params, ok, counterexample=None, **details) -> VerificationReport:
    return VerificationReport(suite, params, "pass" if ok else "fail", None if ok else counterexample, details)


def _support_size(M: Multisegment) -> int:
    return sum(s.length for s in M)


def dodgson_check(l: int, k: int) -> VerificationReport:
    """Exact check of F(l,k)^- * F(l,k)^+ == F(l,k-1) F(l,k+1) + F(l-1,k) F(l+1,k).

    ``^-``/``^+`` are twists by -1/2 and +1/2.
    """
    params = {"l": l, "k": k}
    if l < 1 or k < 1:
        raise ValueError("dodgson_check needs l, k >= 1")
    F = char_F(l, k)
    lhs = twist(F, Fraction(-1, 2)) * twist(F, Fraction(1, 2))
    rhs = char_F(l, k - 1) * char_F(l, k + 1) + char_F(l - 1, k) * char_F(l + 1, k)
    ok = lhs == rhs
    return _report(
        "dodgson", params, ok,
        {"input": f"l={l},k={k}", "expected": str(lhs), "actual": str(rhs)},
        lhs_terms=len(lhs), rhs_terms=len(rhs),
    )


def theorem_a_check(l: int, k: int) -> VerificationReport:
    """The dual of ``rect(l, k)`` is ``rect(k, l)``."""
    if l < 1 or k < 1:
        raise ValueError("theorem_a_check needs l, k >= 1")
    got = mwa_dual(rect(l, k))
    want = rect(k, l)
    return _report(
        "theorem-a", {"l": l, "k": k}, got == want,
        {"input": str(rect(l, k)), "expected": str(want), "actual": str(got)},
    )


def _skipped(suite, params, size, budget) -> VerificationReport:
    return VerificationReport(suite, params, "skipped", None, {"support_size": size, "budget": budget})


def theorem_i_core(l: int, k: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Combinatorial core of the irreducibility of ``u(d,k) x u(d,k)``.

    (1) everything strictly below ``2 rect(l,k)`` has a dual of maxlength <= k;
    (2) everything strictly below ``2 rect(k,l)`` has maxlength >= k + 1.
    So no dual of a lower term of (1) is a lower term of (2).
    """
    suite, params = "theorem-i", {"l": l, "k": k}
    if l < 1 or k < 1:
        raise ValueError("theorem_i_core needs l, k >= 1")
    top = rect(l, k) + rect(l, k)
    size = _support_size(top)
    if size > budget:
        return _skipped(suite, params, size, budget)
    lower = downset(top) - {top}
    duals = {}
    for N in sorted(lower):
        D = mwa_dual(N)
        if D.maxlength > k:
            return _report(suite, params, False, {"input": str(N), "expected": f"m(dual) <= {k}", "actual": str(D)})
        duals[N] = D
    top2 = rect(k, l) + rect(k, l)
    lower2 = downset(top2) - {top2}
    for N in sorted(lower2):
        if N.maxlength < k + 1:
            return _report(suite, params, False, {"input": str(N), "expected": f"m >= {k + 1}", "actual": f"m = {N.maxlength}"})
    clash = sorted(N for N, D in duals.items() if D in lower2)
    if clash:
        N = clash[0]
        return _report(suite, params, False, {"input": str(N), "expected": "dual outside lower set (2)", "actual": str(duals[N])})
    return _report(suite, params, True, lower_1=len(lower), lower_2=len(lower2), support_size=size)


def theorem_ii_core(l: int, k: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Combinatorial core of the irreducibility of ``u(d,k-1) x u(d,k+1)``.

    (1) everything strictly below ``rect(l,k-1) + rect(l,k+1)`` has maxlength >= l + 1;
    (2) everything at or below ``rect(k-1,l) + rect(k+1,l)`` has a dual of maxlength <= l.
    """
    suite, params = "theorem-ii", {"l": l, "k": k}
    if l < 1 or k < 2:
        raise ValueError("theorem_ii_core needs l >= 1, k >= 2")
    top = rect(l, k - 1) + rect(l, k + 1)
    size = _support_size(top)
    if size > budget:
        return _skipped(suite, params, size, budget)
    lower = downset(top) - {top}
    for N in sorted(lower):
        if N.maxlength < l + 1:
            return _report(suite, params, False, {"input": str(N), "expected": f"m >= {l + 1}", "actual": f"m = {N.maxlength}"})
    top2 = rect(k - 1, l) + rect(k + 1, l)
    lower2 = downset(top2)
    # the top ending of top2 is x + l; the first dual segment should miss x
    x = Fraction(k - l - 1, 2)
    first_avoids_x = 0
    for N in sorted(lower2):
        trace = Trace()
        D = mwa_dual(N, trace)
        if D.maxlength > l:
            return _report(suite, params, False, {"input": str(N), "expected": f"m(dual) <= {l}", "actual": str(D)})
        first_avoids_x += trace.rounds[0].output.begin > x
    return _report(
        suite, params, True,
        lower_1=len(lower), lower_2=len(lower2), support_size=size,
        first_segment_avoids_x=first_avoids_x,
    )


def leading_check(l: int, k: int) -> VerificationReport:
    """``char_F(l, k)`` has dominant monomial ``rect(l, k)`` with coefficient +1 and degree ``k``."""
    if l < 1 or k < 1:
        raise ValueError("leading_check needs l, k >= 1")
    F = char_F(l, k)
    R = rect(l, k)
    params = {"l": l, "k": k}
    try:
        top, c = dominant_monomial(F)
    except NoDominantMonomial as exc:
        return _report("leading", params, False, {"input": f"l={l},k={k}", "expected": str(R), "actual": str(exc)})
    others_below = all(is_lt(N, R) for N in F.terms if N != R)
    ok = top == R and c == 1 and others_below and degree(F) == k
    return _report(
        "leading", params, ok,
        {"input": f"l={l},k={k}", "expected": f"{R} with coefficient 1", "actual": f"{top} with coefficient {c}"},
        terms=len(F), degree=degree(F),
    )
