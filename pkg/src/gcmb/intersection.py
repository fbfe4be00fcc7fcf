"""Cardinality and minimum-weight matroid intersection over two oracles.

Classical augmenting-path algorithm on the exchange graph.  Weights are exact
(int or Fraction); augmenting paths are chosen by (total weight, arc count,
lexicographic element sequence), which makes every result deterministic and
keeps the current set extreme (minimum weight among common independent sets
of its cardinality).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import InternalError, UsageError
from .matroids import BaseSet, Matroid

Weight = Union[int, Fraction]


@dataclass(frozen=True)
class ExchangeGraph:
    """Exchange structure for a common independent set I.

    `sources` can enter while keeping the first matroid independent, `sinks`
    while keeping the second; `repair_first[x]` lists the outside elements y
    with I - x + y independent in the first matroid, `repair_second`
    likewise for the second.
    """

    inside: tuple[int, ...]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    repair_first: dict[int, tuple[int, ...]]
    repair_second: dict[int, tuple[int, ...]]


def build_exchange_graph(m1: Matroid, m2: Matroid, current: frozenset[int]) -> ExchangeGraph:
    outside = [e for e in range(m1.n) if e not in current]
    inside = tuple(sorted(current))
    sources = tuple(y for y in outside if m1.is_independent(current | {y}))
    sinks = tuple(y for y in outside if m2.is_independent(current | {y}))
    repair_first = {}
    repair_second = {}
    for x in inside:
        dropped = current - {x}
        repair_first[x] = tuple(
            y for y in outside if m1.is_independent(dropped | {y})
        )
        repair_second[x] = tuple(
            y for y in outside if m2.is_independent(dropped | {y})
        )
    return ExchangeGraph(inside, sources, sinks, repair_first, repair_second)


def _augmenting_path(
    m1: Matroid,
    m2: Matroid,
    current: frozenset[int],
    weights: Sequence[Weight],
) -> Optional[tuple[int, ...]]:
    """Cheapest augmenting path, ties broken by arc count then element order.

    Path nodes alternate outside/inside elements starting and ending outside:
    y0 x1 y1 ... xm ym, where y0 is addable in the first matroid, ym in the
    second, each (xi, yi) is a first-matroid repair and each (y(i-1), xi) a
    second-matroid repair.  The symmetric difference with I is the augmented
    common independent set.
    """
    graph = build_exchange_graph(m1, m2, current)
    if not graph.sources or not graph.sinks:
        return None
    sink_set = set(graph.sinks)

    # label[v]: best (cost, arcs, path) of a walk from some source to v where
    # arriving at an outside element v means the first-matroid conditions up
    # to v hold.  Relax alternately over inside/outside until stable.
    Label = tuple  # (cost, arc count, path tuple)
    label: dict[int, Label] = {}
    for y in graph.sources:
        candidate = (weights[y], 0, (y,))
        if y not in label or candidate < label[y]:
            label[y] = candidate

    # arcs: outside y -> inside x  when I - x + y independent in m2
    #       inside x -> outside y  when I - x + y independent in m1
    into_inside: dict[int, list[int]] = {x: [] for x in graph.inside}
    for x in graph.inside:
        for y in graph.repair_second[x]:
            into_inside[x].append(y)

    changed = True
    rounds = 0
    limit = m1.n + 2
    while changed:
        changed = False
        rounds += 1
        if rounds > limit:
            raise InternalError(
                "augmenting-path relaxation failed to converge (negative cycle?)"
            )
        updates: dict[int, Label] = {}
        for x in graph.inside:
            for y in into_inside[x]:
                src = label.get(y)
                if src is None or x in src[2]:
                    continue
                cand = (src[0] - weights[x], src[1] + 1, src[2] + (x,))
                best = updates.get(x, label.get(x))
                if best is None or cand < best:
                    updates[x] = cand
        for x, cand in updates.items():
            if label.get(x) is None or cand < label[x]:
                label[x] = cand
                changed = True
        updates = {}
        for x in graph.inside:
            src = label.get(x)
            if src is None:
                continue
            for y in graph.repair_first[x]:
                if y in src[2]:
                    continue
                cand = (src[0] + weights[y], src[1] + 1, src[2] + (y,))
                best = updates.get(y, label.get(y))
                if best is None or cand < best:
                    updates[y] = cand
        for y, cand in updates.items():
            if label.get(y) is None or cand < label[y]:
                label[y] = cand
                changed = True

    best_path: Optional[Label] = None
    for y in graph.sinks:
        lab = label.get(y)
        if lab is not None and (best_path is None or lab < best_path):
            best_path = lab
    if best_path is None:
        return None
    return best_path[2]


def max_common_independent(m1: Matroid, m2: Matroid) -> BaseSet:
    """A maximum-cardinality common independent set (deterministic)."""
    if m1.n != m2.n:
        raise UsageError(
            f"ground sets differ: {m1.n} vs {m2.n} elements"
        )
    zero = [0] * m1.n
    current: frozenset[int] = frozenset()
    while True:
        path = _augmenting_path(m1, m2, current, zero)
        if path is None:
            break
        current = current.symmetric_difference(path)
        if not (m1.is_independent(current) and m2.is_independent(current)):
            raise InternalError("augmentation produced a dependent set")
    return tuple(sorted(current))


def min_weight_common_base(
    m1: Matroid,
    m2: Matroid,
    weights: Sequence[Weight],
    debug: bool = False,
) -> Optional[tuple[BaseSet, Weight]]:
    """A minimum-weight common base, or None when no common base exists.

    Rank mismatch between the two matroids is an infeasible instance, not an
    error.  With debug=True, extremality of every intermediate set is checked
    against brute force (slow; tests only).
    """
    if m1.n != m2.n:
        raise UsageError(f"ground sets differ: {m1.n} vs {m2.n} elements")
    if len(weights) != m1.n:
        raise UsageError(f"need {m1.n} weights, got {len(weights)}")
    for w in weights:
        if isinstance(w, float):
            raise UsageError("weights must be exact (int or Fraction), not float")
    r = m1.full_rank
    if m2.full_rank != r:
        return None
    current: frozenset[int] = frozenset()
    for _ in range(r):
        path = _augmenting_path(m1, m2, current, weights)
        if path is None:
            return None
        current = current.symmetric_difference(path)
        if debug:
            _assert_extreme(m1, m2, current, weights)
    base = tuple(sorted(current))
    total: Weight = sum(weights[e] for e in base)
    return base, total


def _assert_extreme(
    m1: Matroid, m2: Matroid, current: frozenset[int], weights: Sequence[Weight]
) -> None:
    import itertools

    k = len(current)
    best = None
    for combo in itertools.combinations(range(m1.n), k):
        if m1.is_independent(combo) and m2.is_independent(combo):
            w = sum(weights[e] for e in combo)
            if best is None or w < best:
                best = w
    mine = sum(weights[e] for e in current)
    if best is None or mine != best:
        raise InternalError(
            f"intermediate set of size {k} is not extreme: {mine} vs optimum {best}"
        )


def min_max_cardinality_bound(m1: Matroid, m2: Matroid) -> int:
    """min over X of r1(X) + r2(E\\X); exhaustive, for tests (n <= 16)."""
    import itertools

    if m1.n > 16:
        raise UsageError("exhaustive min-max bound capped at n <= 16")
    best = None
    ground = range(m1.n)
    for k in range(m1.n + 1):
        for combo in itertools.combinations(ground, k):
            inside = set(combo)
            value = m1.rank(inside) + m2.rank(set(ground) - inside)
            if best is None or value < best:
                best = value
    return best if best is not None else 0
