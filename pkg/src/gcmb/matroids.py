"""Independence-oracle matroids: concrete families, minors, exchange machinery.

Elements are integers 0..n-1.  Bases are sorted tuples of element indices.
Graphic and linear constructors keep a name map for I/O only; all algorithms
work on indices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, InternalError, ParseError, UsageError

BaseSet = tuple[int, ...]

#: Guard for exhaustive base enumeration.
ENUMERATION_LIMIT = 10**7
#: Explicit base lists larger than this require trust=True instead of validation.
EXPLICIT_VALIDATE_MAX = 12
#: Guards for the strongly-base-orderable / replaceability search.
SBO_MAX_RANK = 5
SBO_MAX_BASES = 120


class Matroid:
    """Base class: subclasses implement `_indep` on frozensets of indices."""

    kind = "abstract"

    def __init__(self, n: int):
        if n < 0:
            raise UsageError(f"ground size must be nonnegative, got {n}")
        self.n = n
        self.oracle_calls = 0
        self._full_rank: Optional[int] = None

    def _indep(self, subset: frozenset[int]) -> bool:
        raise NotImplementedError

    def is_independent(self, subset: Iterable[int]) -> bool:
        fs = frozenset(subset)
        for e in fs:
            if not 0 <= e < self.n:
                raise UsageError(f"element {e} outside ground set 0..{self.n - 1}")
        self.oracle_calls += 1
        return self._indep(fs)

    def rank(self, subset: Iterable[int]) -> int:
        """Size of a maximal independent subset, built greedily by ascending index."""
        chosen: set[int] = set()
        for e in sorted(set(subset)):
            if self.is_independent(chosen | {e}):
                chosen.add(e)
        return len(chosen)

    @property
    def full_rank(self) -> int:
        if self._full_rank is None:
            self._full_rank = self.rank(range(self.n))
        return self._full_rank

    def bases(self) -> list[BaseSet]:
        """All bases in lexicographic order (brute-force oracle for the lab)."""
        r = self.full_rank
        if math.comb(self.n, r) > ENUMERATION_LIMIT:
            raise CapacityError(
                f"C({self.n},{r}) exceeds the enumeration guard {ENUMERATION_LIMIT}"
            )
        return [
            combo
            for combo in itertools.combinations(range(self.n), r)
            if self.is_independent(combo)
        ]

    def is_base(self, subset: Iterable[int]) -> bool:
        fs = frozenset(subset)
        return len(fs) == self.full_rank and self.is_independent(fs)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.n} r={self.full_rank}>"


# -- concrete families -------------------------------------------------------


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, n: int, r: int):
        super().__init__(n)
        if not 0 <= r <= n:
            raise UsageError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        if r == 0 and n > 0:
            raise UsageError("rank-0 uniform matroid on a nonempty ground set has loops")
        self.r = r

    def _indep(self, subset: frozenset[int]) -> bool:
        return len(subset) <= self.r


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; elements are edges in input order."""

    kind = "graphic"

    def __init__(self, edges: Sequence[tuple[object, object]], vertices: Optional[int] = None):
        super().__init__(len(edges))
        names: list[object] = []
        index: dict[object, int] = {}
        pairs = []
        for u, v in edges:
            if u == v:
                raise UsageError(f"self-loop edge ({u},{v}) is a loop; matroids here are loopless")
            for w in (u, v):
                if w not in index:
                    index[w] = len(names)
                    names.append(w)
            pairs.append((index[u], index[v]))
        if vertices is not None and len(names) > vertices:
            raise UsageError(
                f"edge list names {len(names)} vertices but only {vertices} declared"
            )
        self.vertex_names = tuple(names)
        self.edge_pairs = tuple(pairs)

    def _indep(self, subset: frozenset[int]) -> bool:
        parent = list(range(len(self.vertex_names)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in subset:
            u, v = self.edge_pairs[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(p), p prime."""

    kind = "linear"

    def __init__(self, rows: Sequence[Sequence[int]], p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise UsageError(f"field order must be prime, got {p}")
        if not rows:
            raise UsageError("linear matroid needs at least one matrix row")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise UsageError("matrix rows must all have the same length")
        super().__init__(width)
        self.p = p
        self.columns = tuple(
            tuple(row[j] % p for row in rows) for j in range(width)
        )
        for j, col in enumerate(self.columns):
            if all(x == 0 for x in col):
                raise UsageError(f"column {j} is zero (a loop); matroids here are loopless")

    def _indep(self, subset: frozenset[int]) -> bool:
        cols = [list(self.columns[j]) for j in sorted(subset)]
        if not cols:
            return True
        p = self.p
        m = len(cols[0])
        pivot_row = 0
        for col_idx in range(len(cols)):
            col = cols[col_idx]
            pivot = next((i for i in range(pivot_row, m) if col[i] % p != 0), None)
            if pivot is None:
                return False
            for other in cols[col_idx:]:
                other[pivot_row], other[pivot] = other[pivot], other[pivot_row]
            inv = pow(col[pivot_row], -1, p)
            for i in range(pivot_row + 1, m):
                factor = (col[i] * inv) % p
                if factor:
                    for other in cols[col_idx:]:
                        other[i] = (other[i] - factor * other[pivot_row]) % p
            pivot_row += 1
        return True


class ExplicitMatroid(Matroid):
    """Matroid given by the full list of its bases."""

    kind = "explicit_bases"

    def __init__(self, n: int, bases: Iterable[Iterable[int]], trust: bool = False):
        super().__init__(n)
        base_sets = sorted({tuple(sorted(set(b))) for b in bases})
        if not base_sets:
            raise UsageError("explicit matroid needs a nonempty base list")
        r = len(base_sets[0])
        for b in base_sets:
            if len(b) != r:
                raise UsageError(
                    f"bases must share one size; saw sizes {r} and {len(b)}"
                )
            for e in b:
                if not 0 <= e < n:
                    raise UsageError(f"base element {e} outside ground set 0..{n - 1}")
        covered = set().union(*map(set, base_sets)) if base_sets else set()
        if covered != set(range(n)) and n > 0:
            missing = sorted(set(range(n)) - covered)
            raise UsageError(
                f"elements {missing} appear in no base (loops); matroids here are loopless"
            )
        self.base_list = tuple(base_sets)
        self._base_frozen = tuple(frozenset(b) for b in base_sets)
        self.r = r
        self._full_rank = r
        if n > EXPLICIT_VALIDATE_MAX and not trust:
            raise UsageError(
                f"explicit base lists with n > {EXPLICIT_VALIDATE_MAX} are only "
                f"accepted with trust enabled (exchange validation is quadratic)"
            )
        if not trust:
            self._validate_exchange()

    def _validate_exchange(self) -> None:
        for a_set in self._base_frozen:
            for b_set in self._base_frozen:
                for a in a_set - b_set:
                    if not any(
                        (a_set - {a}) | {b} in self._base_frozen
                        for b in b_set - a_set
                    ):
                        raise UsageError(
                            f"base exchange axiom fails: no swap for element {a} of "
                            f"{tuple(sorted(a_set))} toward {tuple(sorted(b_set))}"
                        )

    def _indep(self, subset: frozenset[int]) -> bool:
        return any(subset <= b for b in self._base_frozen)


class PartitionMatroid(Matroid):
    """Per-class cardinality caps.  Zero caps are allowed (the solver's
    signature reduction needs them), so this family may carry loops."""

    kind = "partition"

    def __init__(self, classes: Sequence[Iterable[int]], capacities: Sequence[int]):
        class_sets = [frozenset(c) for c in classes]
        if len(class_sets) != len(capacities):
            raise UsageError("one capacity per class is required")
        total = set()
        for c in class_sets:
            if total & c:
                raise UsageError("partition classes must be disjoint")
            total |= c
        n = (max(total) + 1) if total else 0
        if total != set(range(n)):
            raise UsageError("partition classes must cover 0..n-1 without gaps")
        super().__init__(n)
        for c, cap in zip(class_sets, capacities):
            if not 0 <= cap <= len(c):
                raise UsageError(
                    f"capacity {cap} outside [0, {len(c)}] for class of size {len(c)}"
                )
        self.classes = tuple(class_sets)
        self.capacities = tuple(int(c) for c in capacities)

    def _indep(self, subset: frozenset[int]) -> bool:
        return all(
            len(subset & c) <= cap for c, cap in zip(self.classes, self.capacities)
        )


# -- minors and duality ------------------------------------------------------


class DeleteMatroid(Matroid):
    kind = "minor"

    def __init__(self, parent: Matroid, removed: Iterable[int]):
        removed_set = frozenset(removed)
        for e in removed_set:
            if not 0 <= e < parent.n:
                raise UsageError(f"cannot delete {e}: outside parent ground set")
        kept = tuple(e for e in range(parent.n) if e not in removed_set)
        super().__init__(len(kept))
        self.parent = parent
        self.parent_map = kept  # new index -> parent index

    def _indep(self, subset: frozenset[int]) -> bool:
        return self.parent.is_independent(self.parent_map[e] for e in subset)


class ContractMatroid(Matroid):
    kind = "minor"

    def __init__(self, parent: Matroid, contracted: Iterable[int]):
        contracted_set = frozenset(contracted)
        if contracted_set and not parent.is_independent(contracted_set):
            raise UsageError("contraction set must be independent")
        kept = tuple(e for e in range(parent.n) if e not in contracted_set)
        super().__init__(len(kept))
        self.parent = parent
        self.contracted = contracted_set
        self.parent_map = kept

    def _indep(self, subset: frozenset[int]) -> bool:
        mapped = {self.parent_map[e] for e in subset}
        return self.parent.is_independent(mapped | self.contracted)


class DualMatroid(Matroid):
    kind = "dual"

    def __init__(self, parent: Matroid):
        super().__init__(parent.n)
        self.parent = parent

    def _indep(self, subset: frozenset[int]) -> bool:
        # X independent in the dual iff E \ X still spans the parent.
        rest = [e for e in range(self.n) if e not in subset]
        return self.parent.rank(rest) == self.parent.full_rank


def make_uniform(n: int, r: int) -> UniformMatroid:
    return UniformMatroid(n, r)


def make_graphic(edges: Sequence[tuple[object, object]], vertices: Optional[int] = None) -> GraphicMatroid:
    return GraphicMatroid(edges, vertices)


def make_linear(rows: Sequence[Sequence[int]], p: int) -> LinearMatroid:
    return LinearMatroid(rows, p)


def make_explicit(n: int, bases: Iterable[Iterable[int]], trust: bool = False) -> ExplicitMatroid:
    return ExplicitMatroid(n, bases, trust=trust)


def make_partition(classes: Sequence[Iterable[int]], capacities: Sequence[int]) -> PartitionMatroid:
    return PartitionMatroid(classes, capacities)


def delete(m: Matroid, removed: Iterable[int]) -> Matroid:
    return DeleteMatroid(m, removed)


def contract(m: Matroid, contracted: Iterable[int]) -> Matroid:
    return ContractMatroid(m, contracted)


def dual(m: Matroid) -> Matroid:
    return DualMatroid(m)


def enumerate_bases(m: Matroid) -> list[BaseSet]:
    return m.bases()


def oracles_equal(m1: Matroid, m2: Matroid, limit: int = 4096) -> bool:
    """Exhaustive oracle comparison (test helper; 2^n capped by `limit`)."""
    if m1.n != m2.n:
        return False
    if 2**m1.n > limit:
        raise CapacityError(f"oracle comparison over 2^{m1.n} subsets exceeds {limit}")
    for k in range(m1.n + 1):
        for combo in itertools.combinations(range(m1.n), k):
            if m1.is_independent(combo) != m2.is_independent(combo):
                return False
    return True


def verify_axioms(m: Matroid, check_loopless: bool = True) -> None:
    """Exhaustively check hereditariness and the exchange axiom (n <= 10)."""
    if m.n > 10:
        raise CapacityError("axiom verification is exhaustive; capped at n <= 10")
    if not m.is_independent(()):
        raise InternalError("empty set must be independent")
    if check_loopless:
        for e in range(m.n):
            if not m.is_independent({e}):
                raise InternalError(f"element {e} is a loop")
    independents: list[frozenset[int]] = []
    for k in range(m.n + 1):
        for combo in itertools.combinations(range(m.n), k):
            if m.is_independent(combo):
                independents.append(frozenset(combo))
    indep_set = set(independents)
    for s in independents:
        for e in s:
            if s - {e} not in indep_set:
                raise InternalError(f"hereditariness fails at {sorted(s)} minus {e}")
    for small in independents:
        for big in independents:
            if len(small) < len(big):
                if not any(small | {e} in indep_set for e in big - small):
                    raise InternalError(
                        f"exchange fails between {sorted(small)} and {sorted(big)}"
                    )


# -- exchange machinery ------------------------------------------------------


@dataclass(frozen=True)
class ExchangeBijection:
    """A bijection A\\B -> B\\A as (a, b) pairs, sorted by a."""

    pairs: tuple[tuple[int, int], ...]

    def apply(self, x: int) -> int:
        for a, b in self.pairs:
            if a == x:
                return b
        raise UsageError(f"{x} is not in the bijection's domain")


def find_blocks(m: Matroid) -> Optional[tuple[BaseSet, BaseSet]]:
    """Two disjoint bases covering the ground set, if the matroid has them.

    Found via matroid intersection with the dual: a common independent set of
    size r is a base whose complement is also a base.
    """
    from .intersection import max_common_independent

    r = m.full_rank
    if m.n != 2 * r or m.n == 0:
        return None
    common = max_common_independent(m, dual(m))
    if len(common) != r:
        return None
    first = tuple(sorted(common))
    second = tuple(e for e in range(m.n) if e not in common)
    return first, second


def find_blocks_brute(m: Matroid) -> Optional[tuple[BaseSet, BaseSet]]:
    """Brute-force cross-check for find_blocks (n <= 12)."""
    if m.n > 12:
        raise CapacityError("brute-force block search capped at n <= 12")
    r = m.full_rank
    if m.n != 2 * r or m.n == 0:
        return None
    all_bases = set(m.bases())
    for b in sorted(all_bases):
        complement = tuple(e for e in range(m.n) if e not in b)
        if complement in all_bases:
            return b, complement
    return None


def _max_bipartite_matching(
    left: Sequence[int], adjacency: dict[int, list[int]]
) -> dict[int, int]:
    """Deterministic Kuhn matching; returns left -> right assignment."""
    match_right: dict[int, int] = {}

    def try_assign(a: int, seen: set[int]) -> bool:
        for b in adjacency[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_right or try_assign(match_right[b], seen):
                match_right[b] = a
                return True
        return False

    for a in left:
        try_assign(a, set())
    return {a: b for b, a in match_right.items()}


def brualdi_bijection(m: Matroid, base_a: Iterable[int], base_b: Iterable[int]) -> ExchangeBijection:
    """A bijection f: A\\B -> B\\A with A - a + f(a) a base for every a.

    Such a bijection always exists for two bases; failure to find one means
    the oracle is not a matroid.
    """
    a_set = frozenset(base_a)
    b_set = frozenset(base_b)
    if not (m.is_base(a_set) and m.is_base(b_set)):
        raise UsageError("both arguments must be bases")
    left = sorted(a_set - b_set)
    right = sorted(b_set - a_set)
    adjacency = {
        a: [b for b in right if m.is_independent((a_set - {a}) | {b})] for a in left
    }
    matching = _max_bipartite_matching(left, adjacency)
    if len(matching) != len(left):
        raise InternalError(
            "no perfect exchange matching between the bases; broken oracle"
        )
    return ExchangeBijection(tuple(sorted(matching.items())))


def find_exchange(
    m: Matroid,
    base: Iterable[int],
    a1: Iterable[int],
    b1: Iterable[int],
    t: int,
) -> Optional[tuple[BaseSet, BaseSet]]:
    """Subsets A2 of A1 and B2 of B1, both of size t, with A - A2 + B2 a base.

    A pair exists whenever |A1| + |B1| - r(A1 u B1) >= t; below that surplus a
    pair is still returned if one exists.  B2 candidates are searched in
    lexicographic order, so the result is deterministic.
    """
    a_set = frozenset(base)
    a1_set = frozenset(a1)
    b1_set = frozenset(b1)
    if not m.is_base(a_set):
        raise UsageError("first argument must be a base")
    if not a1_set <= a_set:
        raise UsageError("A1 must be a subset of the base")
    if a_set & b1_set:
        raise UsageError("B1 must be disjoint from the base")
    if not m.is_independent(b1_set):
        raise UsageError("B1 must be independent")
    if t < 0:
        raise UsageError(f"exchange size must be nonnegative, got {t}")
    if t > len(a1_set) or t > len(b1_set):
        return None
    keep = a_set - a1_set
    for b2 in itertools.combinations(sorted(b1_set), t):
        candidate = keep | set(b2)
        if not m.is_independent(candidate):
            continue
        added = set()
        current = set(candidate)
        for a in sorted(a1_set):
            if m.is_independent(current | {a}):
                current.add(a)
                added.add(a)
        if len(current) != m.full_rank:
            raise InternalError("greedy completion inside a base fell short")
        a2 = tuple(sorted(a1_set - added))
        if len(a2) != t:
            raise InternalError("exchange bookkeeping mismatch")
        return a2, tuple(b2)
    return None


def exchange_surplus(m: Matroid, a1: Iterable[int], b1: Iterable[int]) -> int:
    """|A1| + |B1| - r(A1 u B1): the guaranteed exchange size."""
    a1_set = frozenset(a1)
    b1_set = frozenset(b1)
    return len(a1_set) + len(b1_set) - m.rank(a1_set | b1_set)


@dataclass(frozen=True)
class SboReport:
    is_sbo: bool
    violating_pair: Optional[tuple[BaseSet, BaseSet]]
    bijections: dict[tuple[BaseSet, BaseSet], ExchangeBijection]

    def __bool__(self) -> bool:
        return self.is_sbo


def _sbo_guard(m: Matroid) -> list[BaseSet]:
    if m.full_rank > SBO_MAX_RANK:
        raise CapacityError(f"bijection search capped at rank <= {SBO_MAX_RANK}")
    if math.comb(m.n, m.full_rank) > SBO_MAX_BASES:
        raise CapacityError(
            f"bijection search capped at C(n,r) <= {SBO_MAX_BASES} bases"
        )
    return m.bases()


def _subset_exchange_bijection(
    m: Matroid, a_set: frozenset[int], b_set: frozenset[int], max_swap: Optional[int]
) -> Optional[ExchangeBijection]:
    """First bijection (lex order) whose subset swaps of size <= max_swap all
    yield bases; swaps are applied from A toward B."""
    left = sorted(a_set - b_set)
    right = sorted(b_set - a_set)
    d = len(left)
    top = d if max_swap is None else min(d, max_swap)
    sizes = range(1, top + 1)  # the empty swap is the base A itself
    for image in itertools.permutations(right):
        ok = True
        for size in sizes:
            for positions in itertools.combinations(range(d), size):
                removed = {left[i] for i in positions}
                added = {image[i] for i in positions}
                if not m.is_independent((a_set - removed) | added):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return ExchangeBijection(tuple(zip(left, image)))
    return None


def is_strongly_base_orderable(m: Matroid) -> SboReport:
    """Exhaustively decide strong base orderability.

    For every base pair a bijection fixing the intersection pointwise must
    turn every subset swap into a base.  Returns the witnessing bijections,
    or the first (lex) violating pair.
    """
    all_bases = _sbo_guard(m)
    bijections: dict[tuple[BaseSet, BaseSet], ExchangeBijection] = {}
    for i, a in enumerate(all_bases):
        for b in all_bases[i + 1 :]:
            found = _subset_exchange_bijection(m, frozenset(a), frozenset(b), None)
            if found is None:
                return SboReport(False, (a, b), bijections)
            bijections[(a, b)] = found
    return SboReport(True, None, bijections)


def is_k_replaceable(m: Matroid, base_a: Iterable[int], base_b: Iterable[int], k: int) -> bool:
    """Whether some bijection B\\A -> A\\B turns every swap of size <= k into a base."""
    a_set = frozenset(base_a)
    b_set = frozenset(base_b)
    if not (m.is_base(a_set) and m.is_base(b_set)):
        raise UsageError("both arguments must be bases")
    if m.full_rank > SBO_MAX_RANK or math.comb(m.n, m.full_rank) > SBO_MAX_BASES:
        raise CapacityError("replaceability search shares the SBO guards")
    return _subset_exchange_bijection(m, b_set, a_set, k) is not None


# -- matroid files -----------------------------------------------------------


def parse_matroid(text: str, trust: bool = False) -> Matroid:
    """Parse the line-oriented matroid format (see README for the grammar)."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise ParseError("empty matroid description")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "matroid":
        raise ParseError(f"expected 'matroid <kind>', got {header!r}", header_no)
    kind = parts[1]
    fields: dict[str, str] = {}
    edges: list[tuple[str, str]] = []
    rows: list[list[int]] = []
    base_rows: list[list[int]] = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        key = tokens[0]
        if key == "edge":
            if len(tokens) != 3:
                raise ParseError("edge lines need two endpoints", lineno)
            edges.append((tokens[1], tokens[2]))
        elif key == "base":
            try:
                base_rows.append([int(t) for t in tokens[1:]])
            except ValueError:
                raise ParseError("base lines need integer indices", lineno) from None
        elif key in ("n", "r", "vertices", "field", "rows"):
            if len(tokens) != 2:
                raise ParseError(f"'{key}' needs a single value", lineno)
            fields[key] = tokens[1]
        else:
            try:
                rows.append([int(t) for t in tokens])
            except ValueError:
                raise ParseError(f"unrecognized line {line!r}", lineno) from None

    def intfield(name: str) -> int:
        if name not in fields:
            raise ParseError(f"matroid {kind} requires a '{name}' line")
        try:
            return int(fields[name])
        except ValueError:
            raise ParseError(f"'{name}' must be an integer") from None

    if kind == "uniform":
        return make_uniform(intfield("n"), intfield("r"))
    if kind == "graphic":
        return make_graphic(edges, intfield("vertices"))
    if kind == "linear":
        p = intfield("field")
        expected = intfield("rows")
        if len(rows) != expected:
            raise ParseError(f"expected {expected} matrix rows, got {len(rows)}")
        return make_linear(rows, p)
    if kind == "explicit":
        return make_explicit(intfield("n"), base_rows, trust=trust)
    raise ParseError(f"unknown matroid kind {kind!r}", header_no)


def load_matroid(path, trust: bool = False) -> Matroid:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matroid(fh.read(), trust=trust)
