import random

import pytest

from gcmb import matroids


def k4_edges():
    # hub 0, rim 1-2-3: spokes first (indices 0,1,2), rim edges after (3,4,5)
    return [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture
def k4():
    return matroids.make_graphic(k4_edges())


@pytest.fixture
def whirl3(k4):
    # relax the rim triangle (a circuit-hyperplane of the wheel) into a base
    bases = list(k4.bases()) + [(3, 4, 5)]
    return matroids.make_explicit(6, bases)


def random_small_matroid(rng: random.Random) -> matroids.Matroid:
    """A seeded small matroid from a random family (test instance soup)."""
    kind = rng.choice(["uniform", "graphic", "linear", "explicit"])
    if kind == "uniform":
        n = rng.randrange(2, 8)
        r = rng.randrange(1, n + 1)
        return matroids.make_uniform(n, r)
    if kind == "graphic":
        v = rng.randrange(3, 6)
        n = rng.randrange(3, 8)
        edges = []
        while len(edges) < n:
            u, w = rng.randrange(v), rng.randrange(v)
            if u != w:
                edges.append((u, w))
        # keep it loopless and connected enough: ensure a spanning path
        for i in range(v - 1):
            edges[i % n] = (i, i + 1)
        return matroids.make_graphic(edges)
    if kind == "linear":
        p = rng.choice([2, 3])
        r = rng.randrange(2, 4)
        n = rng.randrange(r, 8)
        while True:
            rows = [[rng.randrange(p) for _ in range(n)] for _ in range(r)]
            if all(any(row[j] for row in rows) for j in range(n)):
                try:
                    return matroids.make_linear(rows, p)
                except Exception:
                    continue
    # explicit: derive from a uniform minor to guarantee validity
    n = rng.randrange(3, 7)
    r = rng.randrange(1, n)
    u = matroids.make_uniform(n, r)
    return matroids.make_explicit(n, u.bases())
