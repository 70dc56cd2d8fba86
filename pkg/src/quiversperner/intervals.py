"""Monomorphism posets of indecomposable representations of type-A quivers.

The indecomposables of a path quiver on ``1..n`` are the intervals ``[a, b]``.
``[a, b]`` embeds into ``[a', b']`` iff it is contained in it and every edge
where the containment is strict points *into* ``[a, b]``; an edge pointing
out would force a nonzero map to vanish.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple

from .errors import DomainError, NotAPath
from .poset import ChainDecomposition, FinitePoset, from_predicate
from .quiver import PathOrientation, Quiver, path_quiver


class Interval(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"[{self.a}]" if self.a == self.b else f"[{self.a},{self.b}]"

    @property
    def support(self) -> range:
        return range(self.a, self.b + 1)


_INTERVAL_RE = re.compile(r"^\s*\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]\s*$")


def parse_interval(text: str) -> Interval:
    match = _INTERVAL_RE.match(text)
    if not match:
        raise ValueError(f"not an interval: {text!r}")
    a = int(match.group(1))
    b = int(match.group(2)) if match.group(2) else a
    if a > b:
        raise ValueError(f"empty interval: {text!r}")
    return Interval(a, b)


def intervals(n: int) -> list[Interval]:
    """All ``n(n+1)/2`` intervals, shortest first, then by left end."""
    return [Interval(a, a + length) for length in range(n) for a in range(1, n - length + 1)]


def interval_index(n: int, x: Interval) -> int:
    """Position of ``x`` in ``intervals(n)``."""
    length = x.b - x.a
    before = sum(n - k for k in range(length))
    return before + x.a - 1


def embeds(q: Quiver, x: Interval, y: Interval) -> bool:
    a, b = x
    a2, b2 = y
    if not (a2 <= a and b <= b2):
        return False
    if a != a2 and not q.has_arrow(a - 1, a):
        return False
    if b != b2 and not q.has_arrow(b + 1, b):
        return False
    return True


@dataclass(frozen=True)
class IntervalPoset:
    quiver: Quiver
    poset: FinitePoset

    @property
    def n(self) -> int:
        return self.quiver.n

    def decomposition(self, chains: Iterable[Iterable[Interval]]) -> ChainDecomposition:
        return ChainDecomposition.from_labels(self.poset, chains)


def interval_poset(q: Quiver | PathOrientation | str) -> IntervalPoset:
    if not isinstance(q, Quiver):
        orient = q if isinstance(q, PathOrientation) else PathOrientation(q)
        q = path_quiver(len(orient) + 1, orient)
    if not q.is_path():
        raise NotAPath("interval posets are defined for path quivers 1 - 2 - ... - n")
    poset = from_predicate(intervals(q.n), lambda x, y: embeds(q, x, y), check=False)
    return IntervalPoset(q, poset)


# -- linear orientation -------------------------------------------------------

def chains_linear(n: int) -> list[list[Interval]]:
    return [[Interval(i, b) for b in range(i, n + 1)] for i in range(1, n + 1)]


def antichain_linear(n: int) -> set[Interval]:
    """Tops of the chains ``[i] <= [i,i+1] <= ... <= [i,n]``."""
    return {Interval(i, n) for i in range(1, n + 1)}


# -- simple zigzag ------------------------------------------------------------

def antichain_zigzag(n: int, s: int) -> set[Interval]:
    """All intervals through the source ``s``; ``(s)(n-s+1)`` of them."""
    _check_source(n, s)
    return {Interval(a, b) for a in range(1, s + 1) for b in range(s, n + 1)}


def chains_zigzag(n: int, s: int) -> list[list[Interval]]:
    _check_source(n, s)
    chains = []
    for i in range(1, s):
        chains.append([Interval(i, k) for k in range(i, s + 1)])
    for j in range(s + 1, n + 1):
        chains.append([Interval(k, j) for k in range(j, s - 1, -1)])
    for a in range(1, s):
        for b in range(s + 1, n + 1):
            chains.append([Interval(a, b)])
    chains.append([Interval(s, s)])
    return chains


def chain_decomposition_zigzag(n: int, s: int) -> ChainDecomposition:
    """Left chains, right chains, singletons through ``s`` and ``{[s]}``, indexed as in ``intervals(n)``."""
    return _index_chains(n, chains_zigzag(n, s))


def _check_source(n: int, s: int) -> None:
    if not 1 <= s <= n:
        raise DomainError(f"source position {s} outside 1..{n}")


def _index_chains(n: int, chains: list[list[Interval]]) -> ChainDecomposition:
    return ChainDecomposition(tuple(tuple(interval_index(n, x) for x in c) for c in chains))


# -- alternating orientation, odd number of vertices --------------------------

def _sources(m: int) -> list[int]:
    return list(range(2, 2 * m + 1, 2))


def antichain_alternating(m: int) -> set[Interval]:
    """Maximum antichain for the alternating path on ``2m+1`` vertices (sinks at both ends)."""
    if m < 1:
        raise DomainError("m must be at least 1")
    n = 2 * m + 1
    src = _sources(m)
    both = {Interval(a, b) for a in src for b in src if a <= b}
    left = {Interval(1, b) for b in src}
    right = {Interval(a, n) for a in src}
    return both | left | right | {Interval(1, n)}


def alternating_chains(m: int) -> dict[str, list[Interval]]:
    """Named chains covering the alternating poset on ``2m+1`` vertices."""
    if m < 1:
        raise DomainError("m must be at least 1")
    n = 2 * m + 1
    src = _sources(m)
    chains: dict[str, list[Interval]] = {}
    for a in src:
        chains[f"C_{Interval(a, a)}"] = [Interval(a, a)]
    for a in src:
        if a != 2:
            chains[f"C_{Interval(a, n)}"] = [Interval(a, n)]
    for a in src:
        # [a-1,a] <= [a-3,a] <= ... <= [1,a]
        chains[f"C_{Interval(1, a)}"] = [Interval(k, a) for k in range(a - 1, 0, -2)]
    for a in src:
        for b in src:
            if a < b:
                chains[f"C_{Interval(a, b)}"] = [Interval(a + 1, b - 1), Interval(a, b - 1), Interval(a, b)]
    chains[f"C_{Interval(1, n)}"] = [Interval(1, k) for k in range(1, n + 1, 2)]
    chains[f"C_{Interval(2, n)}"] = [Interval(k, n) for k in range(n, 2, -2)] + [Interval(2, n)]
    return chains


def chain_decomposition_alternating(m: int) -> ChainDecomposition:
    return _index_chains(2 * m + 1, list(alternating_chains(m).values()))


def alternating_count_identity(m: int) -> tuple[int, int]:
    """Both sides of the element count: n(n+1)/2 versus the sum of chain cardinalities."""
    n = 2 * m + 1
    lhs = n * (n + 1) // 2
    rhs = m * 1 + (m - 1) * 1 + m * (m + 1) // 2 + comb(m, 2) * 3 + 2 * (m + 1)
    return lhs, rhs


def alternating_width(m: int) -> int:
    return m * (m + 1) // 2 + 2 * m + 1


# -- alternating orientation, even number of vertices -------------------------

def antichain_alternating_even(m: int) -> set[Interval]:
    """Antichain for the alternating path on ``2m`` vertices (sink at 1, source at 2m).

    The construction uses ``[2, 2m-1]`` and ``[3, 2m]``, which only exist for
    ``m >= 2``.
    """
    if m < 2:
        raise DomainError("the even alternating construction needs m >= 2")
    n2 = 2 * m
    odd = antichain_alternating(m)
    n = n2 + 1
    src_part = {x for x in odd if x.a in _sources(m) and x.b in _sources(m)}
    left_part = {x for x in odd if x.a == 1 and x.b in _sources(m)}
    src_part.discard(Interval(2, n2))
    left_part.discard(Interval(1, n2))
    assert all(x.b < n for x in src_part | left_part)
    return src_part | left_part | {Interval(1, n2 - 1), Interval(2, n2 - 1), Interval(3, n2)}


def chains_alternating_even(m: int) -> list[list[Interval]]:
    """The odd-case chains with every interval touching vertex ``2m+1`` removed."""
    n = 2 * m + 1
    out = []
    for chain in alternating_chains(m).values():
        kept = [x for x in chain if x.b < n]
        if kept:
            out.append(kept)
    return out


def chain_decomposition_alternating_even(m: int) -> ChainDecomposition:
    return _index_chains(2 * m, chains_alternating_even(m))


def alternating_even_width(m: int) -> int:
    return (m + 1) * (m + 2) // 2


def zigzag_width(n: int, s: int) -> int:
    return s * (n - s + 1)
