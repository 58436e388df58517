"""Elementary operations and the partial order on multisegments.

``N <= M`` when ``N`` is reached from ``M`` by finitely many elementary
operations (replace a linked pair by its union and intersection).  Going
down the order, maxlength grows while thickness, beginnings and endings
shrink.

Internally each (line, coset) component is encoded as a sorted tuple of
integer ``(begin, end)`` pairs measured from the coset representative; all
searches run on those tuples and are cached.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

import networkx as nx

from .core import Multisegment, Point, Segment

IntMS = tuple[tuple[int, int], ...]
Key = tuple[str, Fraction]


def encode(M: Multisegment) -> dict[Key, IntMS]:
    out: dict[Key, list[tuple[int, int]]] = {}
    for s in M:
        key = s.coset
        r = key[1]
        out.setdefault(key, []).append((int(s.begin - r), int(s.end - r)))
    return {k: tuple(sorted(v)) for k, v in out.items()}


def decode(parts: dict[Key, IntMS]) -> Multisegment:
    return Multisegment(
        Segment(line, b + r, e + r) for (line, r), T in parts.items() for b, e in T
    )


def _succ(T: IntMS) -> set[IntMS]:
    out = set()
    distinct = sorted(set(T))
    for i, (b1, e1) in enumerate(distinct):
        for b2, e2 in distinct[i + 1:]:
            if b2 > e1 + 1:
                break
            if b1 < b2 and e1 < e2:
                new = list(T)
                new.remove((b1, e1))
                new.remove((b2, e2))
                new.append((b1, e2))
                if b2 <= e1:
                    new.append((b2, e1))
                new.sort()
                out.add(tuple(new))
    return out


@lru_cache(maxsize=None)
def _succ_cached(T: IntMS) -> frozenset[IntMS]:
    return frozenset(_succ(T))


def _energy(T: IntMS) -> int:
    # sum of squared lengths; strictly increases along every elementary operation
    return sum((e - b + 1) ** 2 for b, e in T)


@lru_cache(maxsize=4096)
def _downset(T: IntMS) -> frozenset[IntMS]:
    seen = {T}
    todo = [T]
    while todo:
        x = todo.pop()
        for y in _succ_cached(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def _profile(T: IntMS) -> tuple[Counter, Counter, int, int, int]:
    return (
        Counter(b for b, _ in T),
        Counter(e for _, e in T),
        len(T),
        max((e - b + 1 for b, e in T), default=0),
        _energy(T),
    )


def _contains(big: Counter, small: Counter) -> bool:
    return all(big[k] >= v for k, v in small.items())


@lru_cache(maxsize=65536)
def _leq(T: IntMS, T2: IntMS) -> bool:
    """Is ``T`` reachable from ``T2`` by elementary operations?"""
    if T == T2:
        return True
    if _int_support(T) != _int_support(T2):
        return False
    tb, te, tt, tm, tw = _profile(T)
    seen = {T2}
    queue = deque([T2])
    while queue:
        x = queue.popleft()
        for y in _succ_cached(x):
            if y == T:
                return True
            if y in seen:
                continue
            seen.add(y)
            yb, ye, yt, ym, yw = _profile(y)
            # every node below y keeps these bounds, so y is useless otherwise
            if yt < tt or ym > tm or yw >= tw or not _contains(yb, tb) or not _contains(ye, te):
                continue
            queue.append(y)
    return False


def _int_support(T: IntMS) -> Counter:
    c: Counter = Counter()
    for b, e in T:
        for x in range(b, e + 1):
            c[x] += 1
    return c


# --- public API ----------------------------------------------------------


def successors_down(M: Multisegment) -> set[Multisegment]:
    """All results of one elementary operation applied to ``M``."""
    parts = encode(M)
    out = set()
    for key, T in parts.items():
        for T2 in _succ_cached(T):
            new = dict(parts)
            new[key] = T2
            out.add(decode(new))
    return out


def is_leq(M: Multisegment, M2: Multisegment) -> bool:
    """``M <= M2``: ``M`` is obtained from ``M2`` by elementary operations."""
    if M == M2:
        return True
    if M.support() != M2.support():
        return False
    p, p2 = encode(M), encode(M2)
    if p.keys() != p2.keys():
        return False
    return all(_leq(p[k], p2[k]) for k in p)


def is_lt(M: Multisegment, M2: Multisegment) -> bool:
    return M != M2 and is_leq(M, M2)


def downset(M: Multisegment) -> set[Multisegment]:
    """Every ``N <= M``, ``M`` included."""
    parts = encode(M)
    keys = list(parts)
    result: list[dict[Key, IntMS]] = [{}]
    for k in keys:
        result = [r | {k: T} for r in result for T in _downset(parts[k])]
    return {decode(r) for r in result}


def _enum_counts(counts: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Multisegments on points ``0..len-1`` with the given multiplicities.

    The segment holding the leftmost remaining point is chosen first; segments
    with the same beginning come out with non-decreasing ends, so every
    multisegment appears exactly once.
    """
    n = len(counts)
    chosen: list[tuple[int, int]] = []

    def rec(start: int, min_end: int) -> Iterator[list[tuple[int, int]]]:
        b = start
        while b < n and counts[b] == 0:
            b += 1
        if b == n:
            yield list(chosen)
            return
        lo = min_end if b == start else b
        e = b
        while e < n and counts[e] > 0:
            if e >= lo:
                for x in range(b, e + 1):
                    counts[x] -= 1
                chosen.append((b, e))
                yield from rec(b, e)
                chosen.pop()
                for x in range(b, e + 1):
                    counts[x] += 1
            e += 1

    yield from rec(0, 0)


def _group_points(points: Iterable[Point | Fraction | int]) -> dict[Key, Counter]:
    groups: dict[Key, Counter] = {}
    for p in points:
        if not isinstance(p, Point):
            p = Point("rho", Fraction(p))
        key = (p.line, p.value % 1)
        groups.setdefault(key, Counter())[int(p.value - key[1])] += 1
    return groups


def enumerate_with_support(points: Iterable[Point | Fraction | int]) -> set[Multisegment]:
    """Every multisegment whose support is the given multiset of points."""
    groups = _group_points(points)
    per_key: list[tuple[Key, list[IntMS]]] = []
    for key, cnt in sorted(groups.items()):
        lo, hi = min(cnt), max(cnt)
        counts = [cnt.get(lo + i, 0) for i in range(hi - lo + 1)]
        per_key.append(
            (key, [tuple((b + lo, e + lo) for b, e in segs) for segs in _enum_counts(counts)])
        )
    combos: list[dict[Key, IntMS]] = [{}]
    for key, options in per_key:
        combos = [c | {key: T} for c in combos for T in options]
    return {decode(c) for c in combos}


def hasse(points: Iterable[Point | Fraction | int]) -> nx.DiGraph:
    """Covering relations of the order on all multisegments with this support.

    Edges point from the larger element to the smaller one.
    """
    nodes = enumerate_with_support(points)
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    for M in nodes:
        for N in successors_down(M):
            g.add_edge(M, N)
    red = nx.transitive_reduction(g)
    red.add_nodes_from(g.nodes)
    return red


def to_dot(g: nx.DiGraph, name: str = "multisegments") -> str:
    """DOT text with nodes in canonical order and labels in text form."""
    order = sorted(g.nodes)
    rank = {M: i for i, M in enumerate(order)}
    ids = {M: f"n{i}" for i, M in enumerate(order)}
    lines = [f"digraph {name} {{"]
    for M in order:
        lines.append(f'  {ids[M]} [label="{M}"];')
    for u, v in sorted(g.edges, key=lambda e: (rank[e[0]], rank[e[1]])):
        lines.append(f"  {ids[u]} -> {ids[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
