"""Slow, obviously-correct reference implementations used only by the tests."""
from __future__ import annotations

import random
from itertools import product

from quiversperner.poset import FinitePoset, build_poset
from quiversperner.quiver import Quiver


def max_antichain_bruteforce(p: FinitePoset) -> int:
    """Maximum independent set of the comparability graph by branching on one vertex."""
    comp = [(p.up[i] | p.down[i]) & ~(1 << i) for i in range(len(p))]

    def best(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        if not comp[v] & avail:
            return 1 + best(avail & ~(1 << v))
        take = 1 + best(avail & ~(1 << v) & ~comp[v])
        skip = best(avail & ~(1 << v))
        return max(take, skip)

    return best((1 << len(p)) - 1)


def random_poset(rng: random.Random, n: int, density: float = 0.3) -> FinitePoset:
    """Random poset: a random DAG on ``0..n-1`` (edges go upward in index) closed transitively."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    perm = list(range(n))
    rng.shuffle(perm)
    return build_poset(perm, [(perm[i], perm[j]) for i, j in pairs])


def interval_morphism_injective(q: Quiver, x: tuple[int, int], y: tuple[int, int]) -> bool:
    """Is there an injective morphism of F_2-representations from interval x to interval y?

    Interval [a, b] has F_2 at vertices a..b and identity maps between them.
    A morphism is one scalar per vertex; brute force over all 0/1 choices.
    """
    n = q.n

    def rep_map(iv, s, t):
        return 1 if iv[0] <= s <= iv[1] and iv[0] <= t <= iv[1] else 0

    sup_x = set(range(x[0], x[1] + 1))
    sup_y = set(range(y[0], y[1] + 1))
    for f in product((0, 1), repeat=n):
        scal = dict(zip(range(1, n + 1), f))
        if any(scal[v] for v in range(1, n + 1) if v not in sup_x & sup_y):
            continue
        if not all(scal[v] == 1 for v in sup_x):
            continue
        if all((rep_map(y, s, t) * scal[s]) % 2 == (scal[t] * rep_map(x, s, t)) % 2 for s, t in q.arrows):
            return True
    return False


def gaussian_by_count(a: int, d: int, q: int) -> int:
    """Number of d-subspaces of F_q^a: ordered independent d-tuples divided by |GL_d(F_q)|."""
    num = den = 1
    for i in range(d):
        num *= q**a - q**i
        den *= q**d - q**i
    return num // den
