"""Brute-force verification lab for closeness, isolation, and label images.

Everything here enumerates bases (or labelings) exhaustively at desk scale
and is guarded accordingly: base enumeration requires C(n, r) <= 10^6 and
full labeling scans |G|^n <= 2^26 per range.

Labeling index convention: a labeling of n elements over a group of order q
is encoded as an integer in [0, q^n) in mixed radix, element i carrying digit
(index // q^i) % q, which is the position of its label in the canonical
element order.  Adding a constant to every label permutes labelings within
translation orbits; each orbit has exactly one member whose element-0 digit
is zero (the representatives used by the translation reduction).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from .errors import CapacityError, InternalError, ParseError, UsageError
from .groups import GroupElement, GroupSpec, Subgroup, cosets, davenport, stabilizer
from .intersection import Weight
from .matroids import (
    BaseSet,
    Matroid,
    contract,
    delete,
    find_blocks,
    is_strongly_base_orderable,
)
from .solver import Labeling, label_sum

LAB_ENUM_LIMIT = 10**6
SCAN_RANGE_LIMIT = 1 << 26


def _guarded_bases(m: Matroid) -> list[BaseSet]:
    if math.comb(m.n, m.full_rank) > LAB_ENUM_LIMIT:
        raise CapacityError(
            f"lab checks require C(n,r) <= {LAB_ENUM_LIMIT}; "
            f"C({m.n},{m.full_rank}) exceeds it"
        )
    return m.bases()


def random_labeling(rng: random.Random, group: GroupSpec, n: int) -> Labeling:
    return Labeling.from_indices(group, [rng.randrange(group.order) for _ in range(n)])


def random_weights(rng: random.Random, n: int, low: int = -5, high: int = 5) -> tuple[int, ...]:
    return tuple(rng.randint(low, high) for _ in range(n))


# -- label images ------------------------------------------------------------


@dataclass(frozen=True)
class LabelImage:
    """The set of labels attained by bases, with attainment counts."""

    image: frozenset[GroupElement]
    multiplicity: dict[GroupElement, int]

    @property
    def size(self) -> int:
        return len(self.image)


def label_image(m: Matroid, labeling: Labeling) -> LabelImage:
    if labeling.n != m.n:
        raise UsageError(f"labeling covers {labeling.n} elements, matroid has {m.n}")
    counts: dict[GroupElement, int] = {}
    for base in _guarded_bases(m):
        g = labeling.sum_over(base)
        counts[g] = counts.get(g, 0) + 1
    return LabelImage(frozenset(counts), counts)


# -- closeness checks and witnesses ------------------------------------------


@dataclass(frozen=True, eq=False)
class Witness:
    """A pair of bases certifying a closeness violation.

    `base_b` is a (weight-optimum) `target`-base at minimum exchange distance
    from the (weight-optimum) base `base_a`, and that distance exceeds the
    `k` under test.
    """

    matroid: Matroid
    labeling: Labeling
    target: GroupElement
    base_a: BaseSet
    base_b: BaseSet
    distance: int
    k: int
    weights: Optional[tuple[Weight, ...]] = None
    matroid_id: str = ""

    def describe(self) -> str:
        parts = [
            f"target={self.target}",
            f"A={','.join(map(str, self.base_a))}",
            f"B={','.join(map(str, self.base_b))}",
            f"distance={self.distance}",
            f"k={self.k}",
        ]
        if self.matroid_id:
            parts.insert(0, f"matroid={self.matroid_id}")
        return " ".join(parts)


def _mask(base: BaseSet) -> int:
    out = 0
    for e in base:
        out |= 1 << e
    return out


def _violations(
    m: Matroid,
    labeling: Labeling,
    k: int,
    base_pool: Sequence[BaseSet],
    target_pool: dict[GroupElement, list[BaseSet]],
) -> Optional[tuple[BaseSet, BaseSet, GroupElement, int]]:
    """Worst (A, B, g, distance) with min-distance > k, or None.

    Violations are ranked by distance (largest first), then lexicographically
    least (A, B, g).
    """
    masks = {b: _mask(b) for b in base_pool}
    for bs in target_pool.values():
        for b in bs:
            masks.setdefault(b, _mask(b))
    worst: Optional[tuple[BaseSet, BaseSet, GroupElement, int]] = None
    for a in base_pool:
        mask_a = masks[a]
        for g in sorted(target_pool, key=lambda e: e.sort_key()):
            best_d = None
            best_b = None
            for b in target_pool[g]:
                d = (mask_a & ~masks[b]).bit_count()
                if best_d is None or d < best_d or (d == best_d and b < best_b):
                    best_d, best_b = d, b
            if best_d is None or best_d <= k:
                continue
            candidate = (a, best_b, g, best_d)
            if (
                worst is None
                or best_d > worst[3]
                or (best_d == worst[3] and (a, best_b, g.sort_key()) < (worst[0], worst[1], worst[2].sort_key()))
            ):
                worst = candidate
    return worst


def check_k_close(m: Matroid, labeling: Labeling, k: int) -> Optional[Witness]:
    """None when every base is within k exchanges of a g-base for every
    attainable g; otherwise a maximal-violation witness."""
    if labeling.n != m.n:
        raise UsageError(f"labeling covers {labeling.n} elements, matroid has {m.n}")
    all_bases = _guarded_bases(m)
    by_label: dict[GroupElement, list[BaseSet]] = {}
    for b in all_bases:
        by_label.setdefault(labeling.sum_over(b), []).append(b)
    worst = _violations(m, labeling, k, all_bases, by_label)
    if worst is None:
        return None
    a, b, g, d = worst
    return Witness(m, labeling, g, a, b, d, k)


def check_strongly_k_close(
    m: Matroid,
    labeling: Labeling,
    weights: Sequence[Weight],
    k: int,
) -> Optional[Witness]:
    """Strong variant: only optimum bases matter, and the g-base must be a
    minimum-weight g-base.  A single weight vector is tested per call."""
    if labeling.n != m.n:
        raise UsageError(f"labeling covers {labeling.n} elements, matroid has {m.n}")
    if len(weights) != m.n:
        raise UsageError(f"need {m.n} weights, got {len(weights)}")
    all_bases = _guarded_bases(m)
    totals = {b: sum(weights[e] for e in b) for b in all_bases}
    best_total = min(totals.values())
    optimum = [b for b in all_bases if totals[b] == best_total]
    by_label: dict[GroupElement, list[BaseSet]] = {}
    for b in all_bases:
        by_label.setdefault(labeling.sum_over(b), []).append(b)
    optimum_by_label = {}
    for g, bs in by_label.items():
        cheapest = min(totals[b] for b in bs)
        optimum_by_label[g] = [b for b in bs if totals[b] == cheapest]
    worst = _violations(m, labeling, k, optimum, optimum_by_label)
    if worst is None:
        return None
    a, b, g, d = worst
    return Witness(m, labeling, g, a, b, d, k, weights=tuple(weights))


def verify_witness(w: Witness) -> bool:
    """Recompute the witness conditions from scratch (test oracle)."""
    m, labeling = w.matroid, w.labeling
    all_bases = m.bases()
    if w.base_a not in all_bases or w.base_b not in all_bases:
        return False
    if labeling.sum_over(w.base_b) != w.target:
        return False
    if len(set(w.base_a) - set(w.base_b)) != w.distance or w.distance <= w.k:
        return False
    if w.weights is not None:
        totals = {b: sum(w.weights[e] for e in b) for b in all_bases}
        if totals[w.base_a] != min(totals.values()):
            return False
        same_label = [b for b in all_bases if labeling.sum_over(b) == w.target]
        cheapest = min(totals[b] for b in same_label)
        if totals[w.base_b] != cheapest:
            return False
        pool = [b for b in same_label if totals[b] == cheapest]
    else:
        pool = [b for b in all_bases if labeling.sum_over(b) == w.target]
    nearest = min(len(set(w.base_a) - set(b)) for b in pool)
    return nearest == w.distance


def reduce_witness(w: Witness) -> Witness:
    """Shrink a witness onto the block matroid spanned by its two bases.

    The shared part of the bases is contracted (shifting the target by its
    label sum), everything outside their union is deleted, and weights are
    restricted.  Distance is preserved; reduced witnesses come back unchanged.
    """
    shared = sorted(set(w.base_a) & set(w.base_b))
    union = set(w.base_a) | set(w.base_b)
    outside = sorted(set(range(w.matroid.n)) - union)
    if not shared and not outside:
        return w
    inner = contract(w.matroid, shared)
    inner_positions = {orig: i for i, orig in enumerate(inner.parent_map)}
    minor = delete(inner, [inner_positions[e] for e in outside])
    final_map = tuple(inner.parent_map[e] for e in minor.parent_map)
    positions = {orig: i for i, orig in enumerate(final_map)}
    new_labels = Labeling(w.labeling.group, tuple(w.labeling.labels[e] for e in final_map))
    new_weights = (
        tuple(w.weights[e] for e in final_map) if w.weights is not None else None
    )
    shift = label_sum(w.labeling, shared)
    return Witness(
        matroid=minor,
        labeling=new_labels,
        target=w.target - shift,
        base_a=tuple(sorted(positions[e] for e in set(w.base_a) - set(shared))),
        base_b=tuple(sorted(positions[e] for e in set(w.base_b) - set(shared))),
        distance=w.distance,
        k=w.k,
        weights=new_weights,
        matroid_id=(w.matroid_id + "/reduced" if w.matroid_id else "reduced"),
    )


# -- isolation predicates ------------------------------------------------------


def _blocks_of(m: Matroid, all_bases: Sequence[BaseSet]) -> list[BaseSet]:
    base_set = set(all_bases)
    full = set(range(m.n))
    return [
        b for b in all_bases if tuple(sorted(full - set(b))) in base_set
    ]


def _isolation_pools(m: Matroid) -> tuple[list[BaseSet], list[BaseSet]]:
    if m.n != 2 * m.full_rank or m.n == 0:
        raise UsageError(
            f"isolation predicates need a block-matroid candidate (n = 2r); "
            f"got n={m.n}, r={m.full_rank}"
        )
    all_bases = _guarded_bases(m)
    return all_bases, _blocks_of(m, all_bases)


def is_block_isolating(m: Matroid, labeling: Labeling) -> Optional[BaseSet]:
    """A block that is the unique base (among all bases) with its label, if any."""
    all_bases, blocks = _isolation_pools(m)
    counts: dict[GroupElement, int] = {}
    for b in all_bases:
        g = labeling.sum_over(b)
        counts[g] = counts.get(g, 0) + 1
    for b in blocks:
        if counts[labeling.sum_over(b)] == 1:
            return b
    return None


def is_strong_block_isolating(m: Matroid, labeling: Labeling) -> Optional[BaseSet]:
    """A block that is the unique block with its label, if any."""
    _, blocks = _isolation_pools(m)
    counts: dict[GroupElement, int] = {}
    for b in blocks:
        g = labeling.sum_over(b)
        counts[g] = counts.get(g, 0) + 1
    for b in blocks:
        if counts[labeling.sum_over(b)] == 1:
            return b
    return None


# -- exhaustive labeling scans -------------------------------------------------


@dataclass(frozen=True)
class ScanLine:
    matroid_id: str
    start: int
    stop: int
    checked: int
    isolating_index: Optional[int] = None
    isolating_labels: Optional[tuple[int, ...]] = None

    @property
    def verdict(self) -> str:
        return "isolating" if self.isolating_index is not None else "none"


@dataclass(frozen=True)
class ScanReport:
    group: GroupSpec
    predicate: str
    reduction: str
    seed: int
    lines: tuple[ScanLine, ...]

    @property
    def total_checked(self) -> int:
        return sum(line.checked for line in self.lines)

    @property
    def isolating_count(self) -> int:
        return sum(1 for line in self.lines if line.isolating_index is not None)


def labeling_from_index(group: GroupSpec, n: int, index: int) -> Labeling:
    q = group.order
    return Labeling.from_indices(group, [(index // q**i) % q for i in range(n)])


def labeling_to_index(labeling: Labeling) -> int:
    q = labeling.group.order
    return sum(
        labeling.group.index_of(g) * q**i for i, g in enumerate(labeling.labels)
    )


def _scan_chunk(
    table: np.ndarray,
    order: int,
    n: int,
    bases: Sequence[BaseSet],
    block_positions: Sequence[int],
    indices: np.ndarray,
) -> tuple[int, Optional[int]]:
    """Scan one array of labeling indices; returns (checked, first isolating)."""
    if indices.size == 0:
        return 0, None
    powers = order ** np.arange(n, dtype=np.int64)
    digits = (indices[:, None] // powers[None, :]) % order
    digits = digits.astype(np.intp)
    labels = np.empty((indices.size, len(bases)), dtype=np.intp)
    for j, base in enumerate(bases):
        acc = np.zeros(indices.size, dtype=np.intp)
        for e in base:
            acc = table[acc, digits[:, e]]
        labels[:, j] = acc
    counts = np.zeros((indices.size, order), dtype=np.int32)
    rows = np.arange(indices.size)
    for j in range(len(bases)):
        counts[rows, labels[:, j]] += 1  # rows are distinct: no collision
    block_labels = labels[:, block_positions]
    multiplicity = np.take_along_axis(counts, block_labels, axis=1)
    hits = (multiplicity == 1).any(axis=1)
    if not hits.any():
        return int(indices.size), None
    return int(indices.size), int(indices[hits.argmax()])


def _scan_task(args) -> tuple[str, int, int, int, Optional[int]]:
    (matroid_id, factors, n, bases, block_positions, start, stop, step, chunk) = args
    group = GroupSpec(tuple(factors))
    table = group.add_table().astype(np.intp)
    order = group.order
    checked = 0
    first: Optional[int] = None
    lo = start
    while lo < stop:
        hi = min(stop, lo + chunk * step)
        indices = np.arange(lo, hi, step, dtype=np.int64)
        done, hit = _scan_chunk(table, order, n, bases, block_positions, indices)
        checked += done
        if hit is not None and first is None:
            first = hit  # chunks ascend, so the first hit is the minimum
        lo = hi
    return matroid_id, start, stop, checked, first


def isolation_scan(
    matroids: Iterable[tuple[str, Matroid]],
    group: GroupSpec,
    predicate: Literal["block", "strong_block"],
    reduction: Literal["none", "translation"] = "none",
    index_range: Optional[tuple[int, int]] = None,
    jobs: int = 1,
    seed: int = 0,
    chunk: int = 1 << 15,
) -> ScanReport:
    """Exhaustively test labelings of block matroids for isolation.

    With reduction="translation" only one representative per global-translation
    orbit is scanned (element 0 labeled identity), cutting work by |G|; both
    predicates are invariant under translation.  `index_range` restricts the
    scan to labeling indices [a, b) for sharding; results merge with
    `merge_scan_reports`.
    """
    if predicate not in ("block", "strong_block"):
        raise UsageError(f"unknown predicate {predicate!r}")
    if reduction not in ("none", "translation"):
        raise UsageError(f"unknown reduction {reduction!r}")
    order = group.order
    tasks = []
    prepared = []
    for matroid_id, m in matroids:
        all_bases, blocks = _isolation_pools(m)
        total = order**m.n
        start, stop = index_range if index_range is not None else (0, total)
        if not 0 <= start <= stop <= total:
            raise UsageError(
                f"scan range {start}..{stop} outside [0, {total}) for {matroid_id}"
            )
        if stop - start > SCAN_RANGE_LIMIT:
            raise CapacityError(
                f"range of {stop - start} labelings exceeds {SCAN_RANGE_LIMIT}; "
                f"shard the scan with index ranges"
            )
        if predicate == "strong_block":
            bases = blocks
            block_positions = list(range(len(blocks)))
        else:
            bases = all_bases
            block_positions = [all_bases.index(b) for b in blocks]
        step = order if reduction == "translation" else 1
        lo = start if reduction == "none" else ((start + order - 1) // order) * order
        prepared.append((matroid_id, m.n, bases, block_positions, lo, stop, step))

    factors = group.invariant_factors
    for matroid_id, n, bases, block_positions, lo, stop, step in prepared:
        span = max(0, stop - lo)
        parts = max(1, min(jobs, (span + step - 1) // step if span else 1))
        width = (span + parts - 1) // parts
        width = ((width + step - 1) // step) * step  # align shards to the step
        cursor = lo
        while cursor < stop:
            upper = min(stop, cursor + width)
            tasks.append(
                (matroid_id, factors, n, bases, block_positions, cursor, upper, step, chunk)
            )
            cursor = upper
        if span == 0:
            tasks.append(
                (matroid_id, factors, n, bases, block_positions, lo, stop, step, chunk)
            )

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(_scan_task, tasks))
    else:
        raw = [_scan_task(t) for t in tasks]

    merged: dict[str, tuple[int, int, int, Optional[int]]] = {}
    id_order: list[str] = []
    for matroid_id, start, stop, checked, first in raw:
        if matroid_id not in merged:
            merged[matroid_id] = (start, stop, checked, first)
            id_order.append(matroid_id)
        else:
            s0, e0, c0, f0 = merged[matroid_id]
            best = min(x for x in (f0, first) if x is not None) if (
                f0 is not None or first is not None
            ) else None
            merged[matroid_id] = (min(s0, start), max(e0, stop), c0 + checked, best)

    lines = []
    base_range = index_range
    for matroid_id in id_order:
        start, stop, checked, first = merged[matroid_id]
        if base_range is not None:
            start, stop = base_range
        labels = None
        if first is not None:
            labels = tuple(
                (first // order**i) % order
                for i in range(next(n for mid, n, *_ in prepared if mid == matroid_id))
            )
        lines.append(ScanLine(matroid_id, start, stop, checked, first, labels))
    return ScanReport(group, predicate, reduction, seed, tuple(lines))


PREDICATE_NAMES = {"block": "block", "strong_block": "strong-block"}
_PREDICATE_FROM_NAME = {v: k for k, v in PREDICATE_NAMES.items()}


def render_scan_report(report: ScanReport) -> str:
    """Line-oriented scan report with a stable field order (diff-friendly)."""
    out = [
        f"# gcmb scan group={report.group} "
        f"predicate={PREDICATE_NAMES[report.predicate]} "
        f"reduction={report.reduction} seed={report.seed}"
    ]
    for line in report.lines:
        example = "-" if line.isolating_index is None else str(line.isolating_index)
        labels = (
            "-"
            if line.isolating_labels is None
            else ";".join(
                str(report.group.element_at(x)) for x in line.isolating_labels
            )
        )
        out.append(
            f"matroid={line.matroid_id} range={line.start}..{line.stop} "
            f"checked={line.checked} verdict={line.verdict} "
            f"example={example} labels={labels}"
        )
    out.append(
        f"summary matroids={len(report.lines)} checked={report.total_checked} "
        f"isolating={report.isolating_count}"
    )
    return "\n".join(out) + "\n"


def parse_scan_report(text: str) -> tuple[str, list[dict]]:
    """Header line and per-matroid dicts of a rendered scan report."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# gcmb scan"):
        raise ParseError("not a scan report (missing header)")
    header = lines[0]
    rows = []
    for ln in lines[1:]:
        if ln.startswith("summary "):
            continue
        fields = dict(part.split("=", 1) for part in ln.split())
        if "matroid" not in fields or "range" not in fields:
            raise ParseError(f"bad scan report line: {ln!r}")
        start, stop = fields["range"].split("..")
        rows.append(
            {
                "matroid": fields["matroid"],
                "start": int(start),
                "stop": int(stop),
                "checked": int(fields["checked"]),
                "example": None if fields["example"] == "-" else int(fields["example"]),
                "labels": None if fields["labels"] == "-" else fields["labels"],
            }
        )
    return header, rows


def merge_scan_reports(texts: Sequence[str]) -> str:
    """Merge shard reports over disjoint, tiling index ranges."""
    if not texts:
        raise UsageError("nothing to merge")
    headers = []
    by_matroid: dict[str, list[dict]] = {}
    order_seen: list[str] = []
    for text in texts:
        header, rows = parse_scan_report(text)
        headers.append(header)
        for row in rows:
            if row["matroid"] not in by_matroid:
                order_seen.append(row["matroid"])
            by_matroid.setdefault(row["matroid"], []).append(row)
    if len(set(headers)) != 1:
        raise UsageError("cannot merge scan reports with different parameters")
    out = [headers[0]]
    total_checked = 0
    isolating = 0
    for matroid_id in order_seen:
        rows = sorted(by_matroid[matroid_id], key=lambda r: r["start"])
        for prev, cur in zip(rows, rows[1:]):
            if cur["start"] < prev["stop"]:
                raise UsageError(
                    f"overlapping shards for {matroid_id}: "
                    f"{prev['start']}..{prev['stop']} and {cur['start']}..{cur['stop']}"
                )
            if cur["start"] != prev["stop"]:
                raise UsageError(
                    f"shards for {matroid_id} leave a gap at {prev['stop']}"
                )
        checked = sum(r["checked"] for r in rows)
        hits = [(r["example"], r["labels"]) for r in rows if r["example"] is not None]
        example, labels = min(hits) if hits else (None, None)
        verdict = "isolating" if example is not None else "none"
        total_checked += checked
        if example is not None:
            isolating += 1
        out.append(
            f"matroid={matroid_id} range={rows[0]['start']}..{rows[-1]['stop']} "
            f"checked={checked} verdict={verdict} "
            f"example={'-' if example is None else example} "
            f"labels={'-' if labels is None else labels}"
        )
    out.append(
        f"summary matroids={len(order_seen)} checked={total_checked} "
        f"isolating={isolating}"
    )
    return "\n".join(out) + "\n"


# -- additive-combinatorics inequality ----------------------------------------


@dataclass(frozen=True)
class ImageBoundReport:
    """Label-image lower bound report: |image| >= |H| * min(sum of coset-fiber
    ranks - r + 1, |G|/|H|) with H the stabilizer of the image."""

    image_size: int
    stabilizer: Subgroup
    num_cosets: int
    rank_sum: int
    bound: int
    holds: bool
    prime_bound: Optional[int] = None


def check_schrijver_seymour(m: Matroid, labeling: Labeling) -> ImageBoundReport:
    """Evaluate the label-image cardinality inequality on one instance.

    For prime-order cyclic groups the simpler single-element-fiber form is
    evaluated too and cross-checked against the general form.
    """
    group = labeling.group
    img = label_image(m, labeling)
    h = stabilizer(group, img.image)
    partition = cosets(group, h)
    rank_sum = 0
    for coset in partition.cosets:
        fiber = [e for e, g in enumerate(labeling.labels) if g in coset]
        rank_sum += m.rank(fiber)
    r = m.full_rank
    bound = h.order * min(rank_sum - r + 1, group.order // h.order)
    holds = img.size >= bound
    prime_bound = None
    n = group.order
    if len(group.invariant_factors) == 1 and n >= 2 and all(
        n % d for d in range(2, int(n**0.5) + 1)
    ):
        per_element = sum(
            m.rank([e for e, g in enumerate(labeling.labels) if g == value])
            for value in group.elements()
        )
        prime_bound = min(n, per_element - r + 1)
        prime_holds = img.size >= prime_bound
        if prime_holds != holds:
            raise InternalError(
                "prime-form and general-form verdicts disagree on a prime group"
            )
        if h.order == 1 and prime_bound != bound:
            raise InternalError(
                "prime-form and general-form bounds differ despite trivial stabilizer"
            )
    return ImageBoundReport(
        image_size=img.size,
        stabilizer=h,
        num_cosets=len(partition.cosets),
        rank_sum=rank_sum,
        bound=bound,
        holds=holds,
        prime_bound=prime_bound,
    )


# -- strongly-base-orderable closeness suite -----------------------------------


@dataclass(frozen=True)
class SuiteReport:
    group: GroupSpec
    k: int
    trials: int
    seed: int
    checks_run: int
    violations: tuple[Witness, ...]
    expected_ok: bool

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def fatal(self) -> bool:
        """Violations inside the proven regime signal an implementation bug."""
        return bool(self.violations) and self.expected_ok


def sbo_strong_closeness_suite(
    m: Matroid,
    group: GroupSpec,
    trials: int,
    seed: int = 0,
    k: Optional[int] = None,
    include: Sequence[Labeling] = (),
) -> SuiteReport:
    """Randomized strong-closeness sweep for a strongly base orderable matroid.

    Each trial draws a labeling and checks it against a structured weight set
    (zero, all-ones, +-1 split over the blocks when they exist) plus a random
    integer weight vector, at k = D(G) - 1 unless overridden.  Any witness at
    the default k refutes a proven bound, so the report flags it as fatal.
    """
    if not is_strongly_base_orderable(m).is_sbo:
        raise UsageError("suite requires a strongly base orderable matroid")
    k_eff = davenport(group) - 1 if k is None else k
    expected_ok = k_eff >= davenport(group) - 1
    rng = random.Random(seed)
    weight_sets: list[tuple[int, ...]] = [(0,) * m.n, (1,) * m.n]
    blocks = find_blocks(m)
    if blocks is not None:
        first, second = blocks
        plus_minus = [0] * m.n
        for e in first:
            plus_minus[e] = 1
        for e in second:
            plus_minus[e] = -1
        weight_sets.append(tuple(plus_minus))
        weight_sets.append(tuple(-x for x in plus_minus))
    labelings = list(include) + [
        random_labeling(rng, group, m.n) for _ in range(trials)
    ]
    violations = []
    checks = 0
    for labeling in labelings:
        for weights in weight_sets + [random_weights(rng, m.n)]:
            checks += 1
            witness = check_strongly_k_close(m, labeling, weights, k_eff)
            if witness is not None:
                violations.append(witness)
    return SuiteReport(
        group=group,
        k=k_eff,
        trials=trials,
        seed=seed,
        checks_run=checks,
        violations=tuple(violations),
        expected_ok=expected_ok,
    )
