"""Solvers for group-constrained matroid base problems.

Feasibility asks for a base whose label sum hits a target group element;
optimization asks for a minimum-weight such base.  `solve_enum` reduces to
one matroid intersection per candidate signature; `solve_proximity` only
explores signatures within a bounded move distance of a greedy base, which
is exact exactly when the group's closeness guarantees apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Optional, Sequence, Union

from .errors import ParseError, UsageError
from .groups import GroupElement, GroupSpec, closeness_class, davenport
from .intersection import max_common_independent, min_weight_common_base
from .matroids import BaseSet, Matroid, delete, make_partition

Weight = Union[int, Fraction]


class CertificationError(UsageError):
    """Proximity mode was asked for a certified answer outside the regimes
    where its exactness is known."""


@dataclass(frozen=True)
class Labeling:
    """A map from ground-set elements to group elements."""

    group: GroupSpec
    labels: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        for g in self.labels:
            if g.spec != self.group:
                raise UsageError(f"label {g} does not belong to {self.group}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "Labeling":
        return cls(group, tuple(group.element_at(i) for i in indices))

    @classmethod
    def constant(cls, group: GroupSpec, n: int, value: Optional[GroupElement] = None) -> "Labeling":
        g = value if value is not None else group.identity()
        return cls(group, (g,) * n)

    def label_indices(self) -> tuple[int, ...]:
        return tuple(self.group.index_of(g) for g in self.labels)

    def fibers(self) -> dict[GroupElement, tuple[int, ...]]:
        """E(g): ground elements carrying each label, in index order."""
        out: dict[GroupElement, list[int]] = {g: [] for g in self.group.elements()}
        for e, g in enumerate(self.labels):
            out[g].append(e)
        return {g: tuple(v) for g, v in out.items()}

    def sum_over(self, subset: Iterable[int]) -> GroupElement:
        total = self.group.identity()
        for e in subset:
            total = total + self.labels[e]
        return total

    def translate(self, shift: GroupElement) -> "Labeling":
        return Labeling(self.group, tuple(g + shift for g in self.labels))


def label_sum(labeling: Labeling, subset: Iterable[int]) -> GroupElement:
    """Group sum of the labels over a set of elements."""
    return labeling.sum_over(subset)


@dataclass(frozen=True)
class Signature:
    """Per-group-element counts of a base's labels, in canonical element order."""

    group: GroupSpec
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.group.order:
            raise UsageError("signature needs one count per group element")
        if any(c < 0 for c in self.counts):
            raise UsageError("signature counts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count_of(self, g: GroupElement) -> int:
        return self.counts[self.group.index_of(g)]

    def as_dict(self) -> dict[GroupElement, int]:
        return {
            g: c for g, c in zip(self.group.elements(), self.counts) if c
        }

    def label(self) -> GroupElement:
        """Sum over group elements of count-fold copies: the label every base
        with this signature attains."""
        total = self.group.identity()
        for g, c in zip(self.group.elements(), self.counts):
            total = total + g.times(c)
        return total


@dataclass(frozen=True)
class SignatureDelta:
    """A move between signatures: `plus` gains and `minus` losses (nonpositive),
    with disjoint supports and balancing totals."""

    group: GroupSpec
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.plus) or any(m > 0 for m in self.minus):
            raise UsageError("plus must be nonnegative, minus nonpositive")
        if sum(self.plus) != -sum(self.minus):
            raise UsageError("plus and minus totals must balance")
        if any(p and m for p, m in zip(self.plus, self.minus)):
            raise UsageError("plus and minus supports must be disjoint")

    @property
    def move_size(self) -> int:
        return sum(self.plus)


def signature_of(labeling: Labeling, base: Iterable[int]) -> Signature:
    counts = [0] * labeling.group.order
    for e in base:
        counts[labeling.group.index_of(labeling.labels[e])] += 1
    return Signature(labeling.group, tuple(counts))


def signature_label(sig: Signature) -> GroupElement:
    return sig.label()


def _compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All tuples with given total and per-coordinate bounds, ascending lex order."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head_max = min(bounds[0], total)
    rest = bounds[1:]
    for head in range(0, head_max + 1):
        if total - head > sum(rest):
            continue
        for tail in _compositions(total - head, rest):
            yield (head,) + tail


def enumerate_signatures(
    group: GroupSpec,
    r: int,
    caps: Optional[Sequence[int]] = None,
    target: Optional[GroupElement] = None,
) -> Iterator[Signature]:
    """All signatures summing to r within the caps, lexicographic order; with a
    target, only those whose label equals it."""
    if caps is None:
        caps = [r] * group.order
    if len(caps) != group.order:
        raise UsageError("need one cap per group element")
    for counts in _compositions(r, list(caps)):
        sig = Signature(group, counts)
        if target is None or sig.label() == target:
            yield sig


@dataclass
class SolveStats:
    signatures: int = 0
    candidates: int = 0
    intersections: int = 0
    oracle_calls: int = 0


@dataclass
class SolveResult:
    status: Literal["feasible", "infeasible"]
    base: Optional[BaseSet] = None
    weight: Optional[Weight] = None
    certified: bool = True
    target: Optional[GroupElement] = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def base_with_signature(
    m: Matroid,
    labeling: Labeling,
    sig: Signature,
    weights: Optional[Sequence[Weight]] = None,
) -> Optional[tuple[BaseSet, Optional[Weight]]]:
    """A base meeting every per-label cardinality exactly, minimum-weight if
    weights are given; None when no base has this signature.

    Elements whose label gets count zero are deleted, and the rest is solved
    as a common base of the matroid minor and the per-label partition matroid
    (capacity saturation at full rank forces exact counts).
    """
    if labeling.n != m.n:
        raise UsageError(f"labeling covers {labeling.n} elements, matroid has {m.n}")
    if sig.group != labeling.group:
        raise UsageError("signature and labeling use different groups")
    fibers = labeling.fibers()
    elements = labeling.group.elements()
    r = m.full_rank
    if sig.total != r:
        return None
    keep_classes: list[tuple[int, ...]] = []
    keep_caps: list[int] = []
    removed: list[int] = []
    for g, count in zip(elements, sig.counts):
        fiber = fibers[g]
        if count > len(fiber):
            return None
        if count == 0:
            removed.extend(fiber)
        else:
            keep_classes.append(fiber)
            keep_caps.append(count)
    minor = delete(m, removed)
    if minor.full_rank < r:
        return None
    to_new = {orig: new for new, orig in enumerate(minor.parent_map)}
    classes_new = [tuple(sorted(to_new[e] for e in c)) for c in keep_classes]
    partition = make_partition(classes_new, keep_caps)
    if weights is None:
        common = max_common_independent(minor, partition)
        if len(common) != r:
            return None
        base = tuple(sorted(minor.parent_map[e] for e in common))
        return base, None
    weights_new = [weights[orig] for orig in minor.parent_map]
    solved = min_weight_common_base(minor, partition, weights_new)
    if solved is None:
        return None
    inner_base, total = solved
    base = tuple(sorted(minor.parent_map[e] for e in inner_base))
    return base, total


def find_optimum_base(m: Matroid, weights: Sequence[Weight]) -> BaseSet:
    """Greedy minimum-weight base; ties broken by ascending element index."""
    if len(weights) != m.n:
        raise UsageError(f"need {m.n} weights, got {len(weights)}")
    chosen: set[int] = set()
    for e in sorted(range(m.n), key=lambda e: (weights[e], e)):
        if m.is_independent(chosen | {e}):
            chosen.add(e)
    return tuple(sorted(chosen))


def solve_enum(
    m: Matroid,
    labeling: Labeling,
    target: GroupElement,
    weights: Optional[Sequence[Weight]] = None,
) -> SolveResult:
    """Exact solve by enumerating every signature with the target label."""
    if target.spec != labeling.group:
        raise UsageError("target element does not belong to the labeling's group")
    if labeling.n != m.n:
        raise UsageError(f"labeling covers {labeling.n} elements, matroid has {m.n}")
    stats = SolveStats()
    calls_before = m.oracle_calls
    fibers = labeling.fibers()
    caps = [len(fibers[g]) for g in labeling.group.elements()]
    r = m.full_rank
    best: Optional[tuple[BaseSet, Optional[Weight]]] = None
    for counts in _compositions(r, caps):
        stats.signatures += 1
        sig = Signature(labeling.group, counts)
        if sig.label() != target:
            continue
        stats.intersections += 1
        found = base_with_signature(m, labeling, sig, weights)
        if found is None:
            continue
        if weights is None:
            stats.oracle_calls = m.oracle_calls - calls_before
            return SolveResult("feasible", found[0], None, True, target, stats)
        if best is None or found[1] < best[1]:
            best = found
    stats.oracle_calls = m.oracle_calls - calls_before
    if best is None:
        return SolveResult("infeasible", None, None, True, target, stats)
    return SolveResult("feasible", best[0], best[1], True, target, stats)


def proximity_certified(
    group: GroupSpec, k: int, optimization: bool
) -> tuple[bool, str]:
    """Whether bounded-move search of radius k is exact for this group.

    Feasibility is certified when the group's (|G|-1)-closeness is proven and
    k covers it; optimization when |G| <= 4 and k covers D(G)-1 (the proven
    strong-closeness regime)."""
    if optimization:
        if group.order > 4:
            return False, (
                f"strong closeness is only proven for |G| <= 4; {group} has "
                f"order {group.order}"
            )
        need = davenport(group) - 1
        if k < need:
            return False, f"optimization over {group} needs k >= {need}, got {k}"
        return True, ""
    if closeness_class(group) != "proven":
        return False, (
            f"{group} is outside the proven closeness classes "
            f"(|G| = pq or cyclic prime power)"
        )
    need = group.order - 1
    if k < need:
        return False, f"feasibility over {group} needs k >= {need}, got {k}"
    return True, ""


def solve_proximity(
    m: Matroid,
    labeling: Labeling,
    target: GroupElement,
    k: int,
    weights: Optional[Sequence[Weight]] = None,
    mode: Literal["certified_only", "heuristic"] = "certified_only",
) -> SolveResult:
    """Solve by moving at most k counts away from a greedy base's signature.

    Starting from an optimum (or lexicographically least) base, candidate
    signatures are its signature plus a balanced gain/loss move of size at
    most k, tried in increasing move size then lexicographic order.  In
    certified_only mode this refuses regimes where exactness is unproven;
    heuristic mode runs anyway and marks the result uncertified.
    """
    if k < 0:
        raise UsageError(f"move bound k must be nonnegative, got {k}")
    if target.spec != labeling.group:
        raise UsageError("target element does not belong to the labeling's group")
    if labeling.n != m.n:
        raise UsageError(f"labeling covers {labeling.n} elements, matroid has {m.n}")
    group = labeling.group
    certified, reason = proximity_certified(group, k, weights is not None)
    if mode == "certified_only" and not certified:
        raise CertificationError(
            f"proximity answers are not certified here: {reason}; "
            f"pass heuristic mode to run anyway"
        )
    stats = SolveStats()
    calls_before = m.oracle_calls
    start = find_optimum_base(m, weights if weights is not None else [0] * m.n)
    base_sig = signature_of(labeling, start).counts
    fibers = labeling.fibers()
    caps = [len(fibers[g]) for g in group.elements()]
    order = group.order
    r = m.full_rank
    best: Optional[tuple[BaseSet, Optional[Weight]]] = None

    for move in range(0, k + 1):
        plus_bounds = [min(move, caps[i] - base_sig[i]) for i in range(order)]
        minus_bounds = [min(move, base_sig[i]) for i in range(order)]
        for plus in _compositions(move, plus_bounds):
            masked = [0 if plus[i] else minus_bounds[i] for i in range(order)]
            for minus in _compositions(move, masked):
                stats.candidates += 1
                counts = tuple(
                    base_sig[i] + plus[i] - minus[i] for i in range(order)
                )
                sig = Signature(group, counts)
                if sig.label() != target:
                    continue
                stats.intersections += 1
                found = base_with_signature(m, labeling, sig, weights)
                if found is None:
                    continue
                if weights is None:
                    stats.oracle_calls = m.oracle_calls - calls_before
                    return SolveResult(
                        "feasible", found[0], None, certified, target, stats
                    )
                if best is None or found[1] < best[1]:
                    best = found
    stats.oracle_calls = m.oracle_calls - calls_before
    if best is None:
        return SolveResult("infeasible", None, None, certified, target, stats)
    return SolveResult("feasible", best[0], best[1], certified, target, stats)


# -- labeling and weight files ----------------------------------------------


def _indexed_lines(text: str) -> Iterator[tuple[int, int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split(None, 1)
        if len(parts) != 2:
            raise ParseError("expected '<element-index> <value>'", lineno)
        try:
            index = int(parts[0])
        except ValueError:
            raise ParseError(f"bad element index {parts[0]!r}", lineno) from None
        yield lineno, index, parts[1].strip()


def parse_labeling(text: str, group: GroupSpec, n: int) -> Labeling:
    """Parse labeling lines `<element-index> <group-element>`; every element
    0..n-1 must be labeled exactly once."""
    seen: dict[int, GroupElement] = {}
    for lineno, index, value in _indexed_lines(text):
        if not 0 <= index < n:
            raise ParseError(f"element index {index} outside 0..{n - 1}", lineno)
        if index in seen:
            raise ParseError(f"element {index} labeled twice", lineno)
        try:
            seen[index] = group.parse_element(value)
        except UsageError as exc:
            raise ParseError(str(exc), lineno) from None
    missing = [e for e in range(n) if e not in seen]
    if missing:
        raise ParseError(f"elements without labels: {missing}")
    return Labeling(group, tuple(seen[e] for e in range(n)))


def parse_weights(text: str, n: int) -> tuple[Weight, ...]:
    """Parse weight lines `<element-index> <integer-or-rational>` (exact values)."""
    seen: dict[int, Weight] = {}
    for lineno, index, value in _indexed_lines(text):
        if not 0 <= index < n:
            raise ParseError(f"element index {index} outside 0..{n - 1}", lineno)
        if index in seen:
            raise ParseError(f"element {index} weighted twice", lineno)
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad weight {value!r}", lineno) from None
        seen[index] = int(frac) if frac.denominator == 1 else frac
    missing = [e for e in range(n) if e not in seen]
    if missing:
        raise ParseError(f"elements without weights: {missing}")
    return tuple(seen[e] for e in range(n))


def load_labeling(path, group: GroupSpec, n: int) -> Labeling:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_labeling(fh.read(), group, n)


def load_weights(path, n: int) -> tuple[Weight, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_weights(fh.read(), n)
