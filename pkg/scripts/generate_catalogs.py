#!/usr/bin/env python3
"""Regenerate the bundled matroid catalogs under src/gcmb/data/.

Entries are kept only when their isomorphism invariants (base count, element
base-degree profile, pair co-occurrence profile) differ from everything kept
before, so the catalogs are pairwise non-isomorphic by construction.  Every
kept rank-3 block entry other than the wheel is verified strongly base
orderable; every rank-4 entry is verified to be a block matroid.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gcmb.catalog import (
    CatalogEntry,
    direct_sum,
    entry_to_indicator,
    format_entry,
    k4_graphic,
    whirl3,
)
from gcmb.errors import UsageError
from gcmb.matroids import (
    Matroid,
    find_blocks,
    is_strongly_base_orderable,
    make_explicit,
    make_graphic,
    make_linear,
    make_uniform,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "gcmb" / "data"


def invariants(bases: list[tuple[int, ...]], n: int):
    degree = [0] * n
    pair = {}
    for b in bases:
        for e in b:
            degree[e] += 1
        for x, y in itertools.combinations(b, 2):
            pair[(x, y)] = pair.get((x, y), 0) + 1
    return (
        len(bases),
        tuple(sorted(degree)),
        tuple(sorted(pair.values())),
    )


class Pool:
    def __init__(self):
        self.entries: list[CatalogEntry] = []
        self.seen = set()

    def offer(self, entry_id: str, m: Matroid, require_block: bool) -> bool:
        n, r = m.n, m.full_rank
        if require_block and (n != 2 * r or find_blocks(m) is None):
            return False
        bases = m.bases()
        key = invariants(bases, n)
        if key in self.seen:
            return False
        make_explicit(n, bases)  # exchange-axiom validation
        self.seen.add(key)
        self.entries.append(CatalogEntry(entry_id, n, r, tuple(bases)))
        return True


def multigraphs(n_vertices: int, n_edges: int, max_mult: int):
    """Connected loopless multigraphs as sorted edge multisets, lex order."""
    simple = list(itertools.combinations(range(n_vertices), 2))
    for multi in itertools.combinations_with_replacement(simple, n_edges):
        if any(multi.count(e) > max_mult for e in set(multi)):
            continue
        # connectivity over the support
        adj = {v: set() for v in range(n_vertices)}
        for u, v in multi:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if len(seen) != n_vertices:
            continue
        yield list(multi)


def build_rank3() -> list[CatalogEntry]:
    pool = Pool()
    pool.offer("mk4", k4_graphic(), require_block=False)
    pool.offer("w3", whirl3(), require_block=False)
    pool.offer("u36", make_uniform(6, 3), require_block=False)
    u12 = make_uniform(2, 1)
    pool.offer("s222", direct_sum([u12, u12, u12]), require_block=False)
    pool.offer("s1224", direct_sum([u12, make_uniform(4, 2)]), require_block=False)
    pool.offer("s2313", direct_sum([make_uniform(3, 2), make_uniform(3, 1)]), require_block=False)
    pool.offer("c0u25", direct_sum([make_uniform(1, 1), make_uniform(5, 2)]), require_block=False)
    count = 0
    for edges in multigraphs(4, 6, 3):
        m = make_graphic(edges)
        if m.full_rank != 3:
            continue
        count += 1
        pool.offer(f"g4e6-{count:03d}", m, require_block=False)
        if len(pool.entries) >= 14:
            break
    return pool.entries


def build_rank4() -> list[CatalogEntry]:
    pool = Pool()
    pool.offer("u48", make_uniform(8, 4), require_block=True)
    wheel4 = make_graphic(
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]
    )
    pool.offer("w4wheel", wheel4, require_block=True)
    whirl4 = make_explicit(8, list(wheel4.bases()) + [(4, 5, 6, 7)])
    pool.offer("w4whirl", whirl4, require_block=True)
    ag32 = make_linear(
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [0, 1, 0, 1, 0, 1, 0, 1],
            [0, 0, 1, 1, 0, 0, 1, 1],
            [0, 0, 0, 0, 1, 1, 1, 1],
        ],
        2,
    )
    pool.offer("ag32", ag32, require_block=True)
    k5_edges = list(itertools.combinations(range(5), 2))
    adjacent = [e for e in k5_edges if e not in [(0, 1), (0, 2)]]
    disjoint = [e for e in k5_edges if e not in [(0, 1), (2, 3)]]
    pool.offer("k5m2adj", make_graphic(adjacent), require_block=True)
    pool.offer("k5m2dis", make_graphic(disjoint), require_block=True)
    u12 = make_uniform(2, 1)
    u24 = make_uniform(4, 2)
    pool.offer("s1236", direct_sum([u12, make_uniform(6, 3)]), require_block=True)
    pool.offer("s2424", direct_sum([u24, u24]), require_block=True)
    pool.offer("s121224", direct_sum([u12, u12, u24]), require_block=True)
    pool.offer("s12x4", direct_sum([u12, u12, u12, u12]), require_block=True)
    pool.offer("sk412", direct_sum([k4_graphic(), u12]), require_block=True)
    pool.offer("sw312", direct_sum([whirl3(), u12]), require_block=True)
    count = 0
    for edges in multigraphs(5, 8, 2):
        m = make_graphic(edges)
        if m.full_rank != 4:
            continue
        count += 1
        pool.offer(f"g5e8-{count:04d}", m, require_block=True)
        if len(pool.entries) >= 24:
            break
    return pool.entries


def verify_rank3(entries: list[CatalogEntry]) -> None:
    for entry in entries:
        m = entry.matroid()
        assert entry.r == 3 and entry.n == 6, entry.id
        blocks = find_blocks(m)
        sbo = is_strongly_base_orderable(m).is_sbo
        if entry.id == "mk4":
            assert len(entry.bases) == 16
            assert blocks is not None and not sbo
        elif blocks is not None:
            assert sbo, f"{entry.id} is a non-wheel rank-3 block matroid but not SBO"
        print(f"  {entry.id}: bases={len(entry.bases)} block={blocks is not None} sbo={sbo}")


def verify_rank4(entries: list[CatalogEntry]) -> None:
    assert len(entries) >= 20
    for entry in entries:
        assert entry.n == 8 and entry.r == 4, entry.id
        assert find_blocks(entry.matroid()) is not None, entry.id
        print(f"  {entry.id}: bases={len(entry.bases)}")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    rank3 = build_rank3()
    print(f"rank-3 catalog: {len(rank3)} entries")
    verify_rank3(rank3)
    with open(DATA / "rank3_size6.cat", "w", encoding="utf-8") as fh:
        fh.write("# rank-3 size-6 matroids (pairwise non-isomorphic)\n")
        for entry in rank3:
            fh.write(format_entry(entry) + "\n")

    rank4 = build_rank4()
    print(f"rank-4 catalog: {len(rank4)} entries")
    verify_rank4(rank4)
    with open(DATA / "rank4_size8_blocks.cat", "w", encoding="utf-8") as fh:
        fh.write("# rank-4 size-8 block matroids (pairwise non-isomorphic)\n")
        for entry in rank4:
            fh.write(format_entry(entry) + "\n")
    with open(DATA / "rank4_size8_blocks.rlx", "w", encoding="utf-8") as fh:
        fh.write("# indicator form of rank4_size8_blocks.cat (colex subset order)\n")
        fh.write("n 8\nr 4\n")
        for entry in rank4:
            fh.write(f"{entry.id} {entry_to_indicator(entry)}\n")


if __name__ == "__main__":
    main()
