"""Finite abelian groups in invariant-factor form.

A group is described by its invariant factors m_1 | m_2 | ... | m_r; elements
are residue vectors added componentwise.  Specs parsed from strings such as
"Z4" or "Z2xZ6" are canonicalized to this form (so "Z2xZ3" becomes "Z6").
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import CapacityError, InternalError, UsageError

_SPEC_TOKEN = re.compile(r"^[zZ](\d+)$")

#: Hard cap for exhaustive searches over sequences of group elements.
DAVENPORT_BRUTE_MAX_ORDER = 16


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors(factors: Sequence[int]) -> tuple[int, ...]:
    """Canonicalize arbitrary cyclic factor orders to invariant-factor form.

    Collects the prime-power components of every factor and regroups them so
    that each invariant factor divides the next (fundamental theorem of
    finite abelian groups).
    """
    by_prime: dict[int, list[int]] = {}
    for m in factors:
        if m < 2:
            raise UsageError(f"cyclic factor must be >= 2, got {m}")
        for p, e in _factorize(m).items():
            by_prime.setdefault(p, []).append(p**e)
    if not by_prime:
        return ()
    for powers in by_prime.values():
        powers.sort(reverse=True)
    depth = max(len(v) for v in by_prime.values())
    out = []
    for i in range(depth):
        m = 1
        for powers in by_prime.values():
            if i < len(powers):
                m *= powers[i]
        out.append(m)
    out.reverse()
    return tuple(out)


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group Z_{m_1} x ... x Z_{m_r} with m_1 | m_2 | ... | m_r."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, m in enumerate(self.invariant_factors):
            if m < 2:
                raise UsageError(f"invariant factor must be >= 2, got {m}")
            if i > 0 and m % self.invariant_factors[i - 1] != 0:
                raise UsageError(
                    f"invariant factors must form a divisibility chain, got "
                    f"{self.invariant_factors}"
                )

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse a spec string like "Z4" or "Z2xZ2" (case-insensitive).

        Factor lists that are not a divisibility chain are canonicalized, so
        "Z2xZ3" parses to the same group as "Z6".
        """
        parts = [p for p in text.strip().replace("X", "x").split("x") if p]
        if not parts:
            raise UsageError(f"empty group spec {text!r}")
        factors = []
        for part in parts:
            m = _SPEC_TOKEN.match(part.strip())
            if not m:
                raise UsageError(f"bad group spec token {part!r} in {text!r}")
            value = int(m.group(1))
            if value == 1:
                continue  # trivial factor contributes nothing
            factors.append(value)
        return cls(_invariant_factors(factors))

    @classmethod
    def of(cls, *factors: int) -> "GroupSpec":
        return cls(_invariant_factors(factors))

    @property
    def order(self) -> int:
        n = 1
        for m in self.invariant_factors:
            n *= m
        return n

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "Z1"
        return "x".join(f"Z{m}" for m in self.invariant_factors)

    # -- elements ----------------------------------------------------------

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.invariant_factors))

    def element(self, residues: Iterable[int]) -> "GroupElement":
        res = tuple(
            r % m for r, m in zip(residues, self.invariant_factors, strict=True)
        )
        return GroupElement(self, res)

    def elements(self) -> tuple["GroupElement", ...]:
        """All elements in lexicographic residue order (the canonical order)."""
        return _elements(self)

    def index_of(self, g: "GroupElement") -> int:
        if g.spec != self:
            raise UsageError(f"element of {g.spec} used with group {self}")
        idx = 0
        for r, m in zip(g.residues, self.invariant_factors):
            idx = idx * m + r
        return idx

    def element_at(self, index: int) -> "GroupElement":
        if not 0 <= index < self.order:
            raise UsageError(f"element index {index} out of range for {self}")
        return _elements(self)[index]

    def parse_element(self, text: str) -> "GroupElement":
        """Parse "1,3" (comma-joined residues) or a bare integer for rank-1 groups."""
        parts = [p.strip() for p in text.strip().split(",")]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise UsageError(f"bad group element {text!r} for {self}") from None
        if not self.invariant_factors:
            if values not in ([0], []):
                raise UsageError(f"bad element {text!r} for the trivial group")
            return self.identity()
        if len(values) != len(self.invariant_factors):
            raise UsageError(
                f"element {text!r} has {len(values)} residues, {self} needs "
                f"{len(self.invariant_factors)}"
            )
        return self.element(values)

    def add_table(self) -> np.ndarray:
        """Cayley table over element indices, shape (|G|, |G|), dtype uint16."""
        return _add_table(self)


@lru_cache(maxsize=None)
def _elements(spec: GroupSpec) -> tuple["GroupElement", ...]:
    ranges = [range(m) for m in spec.invariant_factors]
    return tuple(GroupElement(spec, res) for res in itertools.product(*ranges))


@lru_cache(maxsize=None)
def _add_table(spec: GroupSpec) -> np.ndarray:
    n = spec.order
    if n > 4096:
        raise CapacityError(f"add table requested for |G|={n} > 4096")
    elems = _elements(spec)
    table = np.zeros((n, n), dtype=np.uint16)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = spec.index_of(a + b)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class GroupElement:
    """An element of a GroupSpec, stored as a reduced residue vector."""

    spec: GroupSpec
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.residues) != len(self.spec.invariant_factors):
            raise UsageError(
                f"residue vector {self.residues} does not match {self.spec}"
            )
        for r, m in zip(self.residues, self.spec.invariant_factors):
            if not 0 <= r < m:
                raise UsageError(f"residue {r} not reduced modulo {m}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.spec != other.spec:
            raise UsageError(f"cannot add elements of {self.spec} and {other.spec}")
        res = tuple(
            (a + b) % m
            for a, b, m in zip(self.residues, other.residues, self.spec.invariant_factors)
        )
        return GroupElement(self.spec, res)

    def __neg__(self) -> "GroupElement":
        res = tuple(
            (-a) % m for a, m in zip(self.residues, self.spec.invariant_factors)
        )
        return GroupElement(self.spec, res)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def times(self, n: int) -> "GroupElement":
        """The n-fold sum of this element (n >= 0)."""
        if n < 0:
            raise UsageError(f"scalar multiplier must be nonnegative, got {n}")
        res = tuple(
            (n * a) % m for a, m in zip(self.residues, self.spec.invariant_factors)
        )
        return GroupElement(self.spec, res)

    @property
    def is_identity(self) -> bool:
        return all(r == 0 for r in self.residues)

    def __str__(self) -> str:
        if not self.residues:
            return "0"
        return ",".join(str(r) for r in self.residues)

    def sort_key(self) -> tuple[int, ...]:
        return self.residues


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    """Componentwise sum modulo the invariant factors."""
    return a + b


def scalar_mul(n: int, g: GroupElement) -> GroupElement:
    """n-fold sum of g, computed componentwise."""
    return g.times(n)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its element set; construction does not validate."""

    parent: GroupSpec
    elements: frozenset[GroupElement]

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_valid(self) -> bool:
        """Closure under addition and negation, identity present."""
        if self.parent.identity() not in self.elements:
            return False
        for a in self.elements:
            if -a not in self.elements:
                return False
            for b in self.elements:
                if a + b not in self.elements:
                    return False
        return True

    @classmethod
    def whole(cls, spec: GroupSpec) -> "Subgroup":
        return cls(spec, frozenset(spec.elements()))

    @classmethod
    def trivial(cls, spec: GroupSpec) -> "Subgroup":
        return cls(spec, frozenset({spec.identity()}))


@dataclass(frozen=True)
class CosetPartition:
    """The cosets of a subgroup, each with its lexicographically least representative."""

    subgroup: Subgroup
    cosets: tuple[frozenset[GroupElement], ...]
    representatives: tuple[GroupElement, ...]

    def coset_of(self, g: GroupElement) -> int:
        for i, coset in enumerate(self.cosets):
            if g in coset:
                return i
        raise InternalError(f"{g} not covered by the coset partition")


def stabilizer(spec: GroupSpec, f: Iterable[GroupElement]) -> Subgroup:
    """The subgroup of all g with g + F = F."""
    fset = frozenset(f)
    for el in fset:
        if el.spec != spec:
            raise UsageError(f"element of {el.spec} passed with group {spec}")
    members = []
    for g in spec.elements():
        if frozenset(g + x for x in fset) == fset:
            members.append(g)
    return Subgroup(spec, frozenset(members))


def cosets(spec: GroupSpec, subgroup: Subgroup) -> CosetPartition:
    """Partition the group into cosets of the subgroup.

    Representatives are the lexicographically least residue vectors; cosets
    are listed in representative order.
    """
    if subgroup.parent != spec:
        raise UsageError(f"subgroup of {subgroup.parent} passed with group {spec}")
    if not subgroup.is_valid():
        raise UsageError("element set is not closed under the group operation")
    seen: set[GroupElement] = set()
    parts: list[frozenset[GroupElement]] = []
    reps: list[GroupElement] = []
    for g in spec.elements():  # lexicographic order
        if g in seen:
            continue
        coset = frozenset(g + h for h in subgroup.elements)
        parts.append(coset)
        reps.append(g)
        seen.update(coset)
    return CosetPartition(subgroup, tuple(parts), tuple(reps))


# -- Davenport constant ----------------------------------------------------


def davenport_lower_bound(spec: GroupSpec) -> int:
    """Sum of (m_i - 1) plus one; equals the Davenport constant for p-groups
    and for groups with at most two invariant factors."""
    return sum(m - 1 for m in spec.invariant_factors) + 1


def _formula_applies(spec: GroupSpec) -> bool:
    if len(spec.invariant_factors) <= 2:
        return True
    primes = set()
    for m in spec.invariant_factors:
        primes.update(_factorize(m))
    return len(primes) == 1  # p-group


@lru_cache(maxsize=None)
def _translation_perms(spec: GroupSpec) -> tuple[tuple[int, ...], ...]:
    elems = spec.elements()
    return tuple(
        tuple(spec.index_of(x + g) for x in elems) for g in elems
    )


def _longest_zero_sum_free(spec: GroupSpec) -> int:
    """Length of the longest sequence over G with no nonempty zero-sum subsequence."""
    n = spec.order
    perms = _translation_perms(spec)
    cap = davenport_lower_bound(spec) + 4  # sanity window; D(G) <= |G| anyway

    def translate(mask: int, x: int) -> int:
        perm = perms[x]
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        return out

    memo: dict[tuple[int, int], int] = {}

    def extend(sums: int, min_elem: int) -> int:
        key = (sums, min_elem)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = 0
        for x in range(max(min_elem, 1), n):  # index 0 is the identity
            new_sums = sums | (1 << x) | translate(sums, x)
            if new_sums & 1:  # identity became a subsequence sum
                continue
            best = max(best, 1 + extend(new_sums, x))
        memo[key] = best
        return best

    longest = extend(0, 1)
    if longest + 1 > cap:
        raise InternalError(
            f"zero-sum-free search exceeded the sanity window for {spec}"
        )
    return longest


def davenport(
    spec: GroupSpec,
    method: Literal["formula", "brute_force", "auto"] = "auto",
) -> int:
    """The Davenport constant D(G): the least L such that every length-L
    sequence over G has a nonempty zero-sum subsequence.

    `formula` returns sum(m_i - 1) + 1 and refuses groups where that closed
    form is not known to be exact (it is exact for p-groups and for at most
    two invariant factors).  `brute_force` searches zero-sum-free sequences
    and is capped at |G| <= 16.  `auto` prefers the formula when valid.
    """
    if method == "auto":
        method = "formula" if _formula_applies(spec) else "brute_force"
    if method == "formula":
        if not _formula_applies(spec):
            raise UsageError(
                f"closed-form Davenport constant is only valid for p-groups and "
                f"groups with <= 2 invariant factors; {spec} is neither "
                f"(use brute_force)"
            )
        return davenport_lower_bound(spec)
    if method == "brute_force":
        if spec.order > DAVENPORT_BRUTE_MAX_ORDER:
            raise CapacityError(
                f"brute-force Davenport search capped at |G| <= "
                f"{DAVENPORT_BRUTE_MAX_ORDER}, got |G| = {spec.order}"
            )
        return _longest_zero_sum_free(spec) + 1
    raise UsageError(f"unknown davenport method {method!r}")


def closeness_class(spec: GroupSpec) -> Literal["proven", "unproven"]:
    """Whether (|G|-1)-closeness of the group is certified.

    Certified classes: |G| a product of two primes (not necessarily
    distinct), or a cyclic group of prime-power order.  The trivial group is
    certified vacuously.
    """
    n = spec.order
    if n == 1:
        return "proven"
    factorization = _factorize(n)
    total_exponent = sum(factorization.values())
    if total_exponent == 2:  # pq, including p*p
        return "proven"
    if len(factorization) == 1 and len(spec.invariant_factors) == 1:  # cyclic p^n
        return "proven"
    return "unproven"
