"""Exhaustive corpora and the verifier suites driven by ``spehlab verify``."""

from __future__ import annotations

import itertools
from typing import Callable, Iterator

from .core import Multisegment
from .mwa import (
    PreconditionError,
    check_P,
    check_P_prime,
    endings_only,
    mwa_dual,
    mwa_dual_with_choices,
    random_chooser,
)
from .poset import downset, enumerate_with_support, is_leq, successors_down
from .speh import (
    DEFAULT_BUDGET,
    VerificationReport,
    dodgson_check,
    leading_check,
    theorem_a_check,
    theorem_i_core,
    theorem_ii_core,
)


def supports_in_box(n_points: int, max_mult: int) -> Iterator[list[int]]:
    """Every multiset of points in ``0..n_points-1`` with multiplicities <= ``max_mult``."""
    for mult in itertools.product(range(max_mult + 1), repeat=n_points):
        yield [x for x, c in enumerate(mult) for _ in range(c)]


def connected_supports(max_size: int) -> Iterator[list[int]]:
    """Supports ``0..n-1`` with every point present and at most ``max_size`` points in total.

    Up to translation these are all supports whose poset does not split into
    a product of smaller ones.
    """
    for size in range(1, max_size + 1):
        for n in range(1, size + 1):
            # compositions of size into n positive parts
            for cuts in itertools.combinations(range(1, size), n - 1):
                parts = [b - a for a, b in zip((0,) + cuts, cuts + (size,))]
                yield [x for x, c in enumerate(parts) for _ in range(c)]


def box_corpus(n_points: int = 4, max_mult: int = 2) -> list[Multisegment]:
    out: list[Multisegment] = []
    for pts in supports_in_box(n_points, max_mult):
        out.extend(sorted(enumerate_with_support(pts)))
    return out


def _fail(suite, params, N, expected, actual, **details) -> VerificationReport:
    return VerificationReport(
        suite, params, "fail", {"input": str(N), "expected": str(expected), "actual": str(actual)}, details
    )


def _pass(suite, params, **details) -> VerificationReport:
    return VerificationReport(suite, params, "pass", None, details)


def suite_involution(n_points: int = 4, max_mult: int = 2) -> VerificationReport:
    params = {"points": n_points, "mult": max_mult}
    corpus = box_corpus(n_points, max_mult)
    for M in corpus:
        D = mwa_dual(M)
        DD = mwa_dual(D)
        if DD != M:
            return _fail("involution", params, M, M, DD)
        if D.support() != M.support():
            return _fail("involution", params, M, "same support", D)
        if not endings_only(M):
            return _fail("involution", params, M, "top dual segments built from endings", D)
    return _pass("involution", params, instances=len(corpus))


def suite_P(n_points: int = 4, max_mult: int = 2) -> VerificationReport:
    params = {"points": n_points, "mult": max_mult}
    corpus = box_corpus(n_points, max_mult)
    checked = 0
    for M in corpus:
        for k in range(1, n_points + 1):
            try:
                ok = check_P(M, k)
            except PreconditionError:
                continue
            checked += 1
            if not ok:
                return _fail("P", params, M, f"m(dual) <= {k}", mwa_dual(M))
    return _pass("P", params, instances=len(corpus), checks=checked)


def suite_P_prime(n_points: int = 4, max_mult: int = 2) -> VerificationReport:
    params = {"points": n_points, "mult": max_mult}
    corpus = box_corpus(n_points, max_mult)
    for M in corpus:
        if not check_P_prime(M):
            return _fail("Pprime", params, M, f"m(dual) <= {M.thickness}", mwa_dual(M))
    return _pass("Pprime", params, instances=len(corpus))


def suite_tie_break(n_points: int = 4, max_mult: int = 2, policies: int = 100) -> VerificationReport:
    params = {"points": n_points, "mult": max_mult, "policies": policies}
    corpus = box_corpus(n_points, max_mult)
    for M in corpus:
        want = mwa_dual(M)
        for seed in range(policies):
            got = mwa_dual_with_choices(M, random_chooser(seed))
            if got != want:
                return _fail("tie-break", params, M, want, got, seed=seed)
    return _pass("tie-break", params, instances=len(corpus))


def monotone_step(M: Multisegment, N: Multisegment) -> bool:
    """Statistics move the right way along one elementary operation ``M -> N``."""
    return (
        N.maxlength >= M.maxlength
        and N.thickness <= M.thickness
        and not (N.begins() - M.begins())
        and not (N.ends() - M.ends())
    )


def suite_monotonicity(max_size: int = 8) -> VerificationReport:
    params = {"max_support": max_size}
    edges = supports = 0
    for pts in connected_supports(max_size):
        supports += 1
        for M in enumerate_with_support(pts):
            for N in successors_down(M):
                edges += 1
                if not monotone_step(M, N):
                    return _fail("monotonicity", params, M, "monotone statistics", N)
    return _pass("monotonicity", params, supports=supports, edges=edges)


def suite_order_reversal(n_points: int = 3, max_mult: int = 2) -> VerificationReport:
    params = {"points": n_points, "mult": max_mult}
    pairs = 0
    for pts in supports_in_box(n_points, max_mult):
        for M2 in sorted(enumerate_with_support(pts)):
            D2 = mwa_dual(M2)
            for M in sorted(downset(M2)):
                pairs += 1
                D = mwa_dual(M)
                if not is_leq(D2, D):
                    return _fail("order-reversal", params, f"{M} <= {M2}", f"{D2} <= {D}", "not comparable")
    return _pass("order-reversal", params, pairs=pairs)


def _grid(max_l: int, max_k: int, min_k: int = 1) -> list[tuple[int, int]]:
    return [(l, k) for l in range(1, max_l + 1) for k in range(min_k, max_k + 1)]


def _default_core_grid(min_k: int, limit: int = 16) -> list[tuple[int, int]]:
    return [(l, k) for l in range(1, limit + 1) for k in range(min_k, limit + 1) if 2 * l * k <= limit]


CORPUS_SUITES: dict[str, Callable[..., VerificationReport]] = {
    "involution": suite_involution,
    "P": suite_P,
    "Pprime": suite_P_prime,
    "tie-break": suite_tie_break,
    "order-reversal": suite_order_reversal,
    "monotonicity": suite_monotonicity,
}

GRID_SUITES = ("theorem-a", "theorem-i", "theorem-ii", "dodgson", "leading")

SUITES = tuple(CORPUS_SUITES) + GRID_SUITES


def run_suite(
    name: str,
    max_l: int | None = None,
    max_k: int | None = None,
    budget: int = DEFAULT_BUDGET,
    points: int | None = None,
    mult: int | None = None,
) -> list[VerificationReport]:
    """Run one suite; reports come back ordered by parameters."""
    if name in CORPUS_SUITES:
        kwargs = {}
        if name == "monotonicity":
            if points is not None:
                kwargs["max_size"] = points
        else:
            if points is not None:
                kwargs["n_points"] = points
            if mult is not None:
                kwargs["max_mult"] = mult
        return [CORPUS_SUITES[name](**kwargs)]
    if name == "theorem-a":
        grid = _grid(max_l or 6, max_k or 6)
        return [theorem_a_check(l, k) for l, k in grid]
    if name == "dodgson":
        return [dodgson_check(l, k) for l, k in _grid(max_l or 4, max_k or 4)]
    if name == "leading":
        return [leading_check(l, k) for l, k in _grid(max_l or 4, max_k or 4)]
    if name == "theorem-i":
        grid = _grid(max_l or 8, max_k or 8) if (max_l or max_k) else _default_core_grid(1)
        return [theorem_i_core(l, k, budget) for l, k in grid]
    if name == "theorem-ii":
        grid = _grid(max_l or 8, max_k or 8, 2) if (max_l or max_k) else _default_core_grid(2)
        return [theorem_ii_core(l, k, budget) for l, k in grid]
    raise KeyError(name)
