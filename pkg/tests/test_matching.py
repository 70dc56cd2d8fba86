from __future__ import annotations

import random
from itertools import permutations

from quiversperner.matching import UNMATCHED, hopcroft_karp, koenig_cover


def brute_matching(adj, n_right):
    best = 0
    n_left = len(adj)
    # try every injective assignment of a subset of left vertices; small sizes only
    for size in range(min(n_left, n_right), 0, -1):
        for rights in permutations(range(n_right), size):
            for lefts in permutations(range(n_left), size):
                if all(r in adj[l] for l, r in zip(lefts, rights)):
                    return size
    return best


def test_against_bruteforce():
    rng = random.Random(3)
    for _ in range(60):
        nl, nr = rng.randint(0, 4), rng.randint(0, 4)
        adj = [sorted(rng.sample(range(nr), rng.randint(0, nr))) for _ in range(nl)]
        ml, mr = hopcroft_karp(adj, nr)
        size = sum(1 for v in ml if v != UNMATCHED)
        assert size == brute_matching(adj, nr)
        for u, v in enumerate(ml):
            if v != UNMATCHED:
                assert v in adj[u] and mr[v] == u
        left, right = koenig_cover(adj, ml, mr)
        assert len(left) + len(right) == size
        assert all(u in left or v in right for u in range(nl) for v in adj[u])


def test_deterministic():
    adj = [[0, 1], [0], [1, 2], [2]]
    assert hopcroft_karp(adj, 3) == hopcroft_karp(adj, 3)
