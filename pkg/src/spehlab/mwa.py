"""Moeglin-Waldspurger algorithm for the dual multisegment.

One round: take the largest ending ``e``; pick a shortest segment ending at
``e``, then a shortest segment ending at ``e-1`` not contained in the
previous pick, and so on until no pick is possible.  With ``r + 1`` picks the
round outputs ``[e-r, e]`` and trims the last point off every picked
segment.  Rounds repeat until nothing is left.

Each (line, coset) component is processed on its own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .core import Multisegment, Segment

# Gets the working-list positions of the eligible shortest segments, returns one.
Chooser = Callable[[Sequence[int]], int]


def first_choice(candidates: Sequence[int]) -> int:
    return candidates[0]


def random_chooser(seed: int) -> Chooser:
    rng = random.Random(seed)
    return lambda candidates: rng.choice(list(candidates))


@dataclass
class Round:
    """One extraction round: the picked segments and the output segment."""

    top: Fraction
    picked: list[Segment]
    output: Segment

    def to_json(self) -> dict:
        return {
            "line": self.output.line,
            "e": str(self.top),
            "picked": [str(s) for s in self.picked],
            "output": str(self.output),
        }


@dataclass
class Trace:
    rounds: list[Round] = field(default_factory=list)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.rounds]


def _dual_component(segs: list[Segment], chooser: Chooser, trace: Trace | None) -> list[Segment]:
    work = list(segs)
    out: list[Segment] = []
    while work:
        e = max(s.end for s in work)
        picks: list[int] = []
        target = e
        bound = None  # the next pick must begin strictly before this
        while True:
            eligible = [
                i for i, s in enumerate(work)
                if s.end == target and (bound is None or s.begin < bound)
            ]
            if not eligible:
                break
            # shortest == latest beginning for a fixed ending
            b = max(work[i].begin for i in eligible)
            i = chooser([i for i in eligible if work[i].begin == b])
            picks.append(i)
            bound = b
            target -= 1
        r = len(picks) - 1
        line = work[picks[0]].line
        res = Segment(line, e - r, e)
        out.append(res)
        if trace is not None:
            trace.rounds.append(Round(e, [work[i] for i in picks], res))
        for i in picks:
            s = work[i]
            work[i] = Segment(s.line, s.begin, s.end - 1) if s.end > s.begin else None
        work = [s for s in work if s is not None]
    return out


def mwa_dual_with_choices(M: Multisegment, chooser: Chooser = first_choice, trace: Trace | None = None) -> Multisegment:
    """Dual multisegment, resolving ties among equal shortest segments with ``chooser``."""
    out: list[Segment] = []
    for comp in M.components().values():
        out.extend(_dual_component(list(comp.segments), chooser, trace))
    return Multisegment(out)


def mwa_dual(M: Multisegment, trace: Trace | None = None) -> Multisegment:
    """Dual multisegment under the default tie-break (earliest in canonical order)."""
    return mwa_dual_with_choices(M, first_choice, trace)


class PreconditionError(ValueError):
    """The hypothesis of a property check does not hold for this input."""


def endings_window(M: Multisegment, k: int) -> bool:
    """Do all endings of ``M`` lie in one run of ``k`` consecutive points?"""
    ends = [s.end for s in M]
    if not ends:
        return True
    if len({s.coset for s in M}) > 1:
        return False
    return max(ends) - min(ends) <= k - 1


def check_P(M: Multisegment, k: int) -> bool:
    """When the endings of ``M`` fit in a length-``k`` window, the dual has maxlength at most ``k``.

    Raises :class:`PreconditionError` when the endings do not fit.
    """
    if k < 1 or not endings_window(M, k):
        raise PreconditionError(f"endings of {M} do not fit in a segment of length {k}")
    return mwa_dual(M).maxlength <= k


def check_P_prime(M: Multisegment) -> bool:
    """The dual's maxlength never exceeds the thickness."""
    return mwa_dual(M).maxlength <= M.thickness


def endings_only(M: Multisegment) -> bool:
    """Output segments ending at the top ending use only endings of ``M`` as points."""
    for comp in M.components().values():
        trace = Trace()
        mwa_dual(comp, trace)
        ends = {s.end for s in comp}
        top = max(ends)
        for rnd in trace.rounds:
            if rnd.top == top and not set(rnd.output.points()) <= ends:
                return False
    return True
