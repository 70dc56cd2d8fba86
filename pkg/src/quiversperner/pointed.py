"""Quiver representations in pointed sets and their subrepresentation posets.

A pointed set of size ``s`` is ``{0, 1, ..., s-1}`` with basepoint 0.  Its
dimension is the raw cardinality ``s``; posets are graded by the number of
non-basepoint elements instead, so the zero representation sits in degree 0.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .errors import SizeLimit
from .poset import (
    FinitePoset,
    chain_product,
    chain_product_index,
    dilworth_width,
    direct_product,
    is_isomorphism,
    is_sperner,
    iter_bits,
    scd_chain_product,
)
from .quiver import Quiver, StarShape, star_quiver

MAX_POINTED_ELEMENTS = 22


@dataclass(frozen=True)
class PointedSet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a pointed set contains at least its basepoint")

    @property
    def dim(self) -> int:
        return self.size

    @property
    def nonbase(self) -> range:
        return range(1, self.size)


@dataclass(frozen=True)
class PointedRep:
    """Pointed sets on the vertices, basepoint-preserving maps on the arrows.

    ``maps[(s, t)][x]`` is the image of ``x in X_s``; each map is injective
    away from the preimage of the basepoint.
    """

    quiver: Quiver
    sets: tuple[PointedSet, ...]
    maps: Mapping[tuple[int, int], tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        object.__setattr__(self, "maps", {k: tuple(v) for k, v in self.maps.items()})
        if len(self.sets) != self.quiver.n:
            raise ValueError("need one pointed set per vertex")
        if set(self.maps) != set(self.quiver.arrows):
            raise ValueError("need exactly one map per arrow")
        for (s, t), f in self.maps.items():
            src, dst = self.at(s), self.at(t)
            if len(f) != src.size or any(not 0 <= y < dst.size for y in f):
                raise ValueError(f"map on {s}->{t} has the wrong shape")
            if f[0] != 0:
                raise ValueError(f"map on {s}->{t} moves the basepoint")
            hits = [y for y in f if y != 0]
            if len(hits) != len(set(hits)):
                raise ValueError(f"map on {s}->{t} is not injective off the basepoint fibre")

    def __hash__(self):
        return hash((self.quiver, self.sets, tuple(sorted(self.maps.items()))))

    def at(self, v: int) -> PointedSet:
        return self.sets[v - 1]

    @property
    def dim(self) -> int:
        return sum(p.dim for p in self.sets)

    def elements(self) -> list[tuple[int, int]]:
        """Non-basepoint elements as ``(vertex, element)``, in vertex order."""
        return [(v, x) for v in self.quiver.vertices for x in self.at(v).nonbase]


def zero_rep(q: Quiver) -> PointedRep:
    return PointedRep(q, tuple(PointedSet(1) for _ in q.vertices), {a: (0,) for a in q.arrows})


def star_indecomposable(shape: StarShape) -> PointedRep:
    """Indecomposable with full support: one non-basepoint element per vertex, mapped along every arrow."""
    q = star_quiver(shape)
    return PointedRep(q, tuple(PointedSet(2) for _ in q.vertices), {a: (0, 1) for a in q.arrows})


def direct_sum(x: PointedRep, y: PointedRep) -> PointedRep:
    """Wedge at every vertex: X's elements keep their numbers, Y's are shifted past them."""
    if x.quiver != y.quiver:
        raise ValueError("direct sum needs representations of the same quiver")
    q = x.quiver
    sets = tuple(PointedSet(x.at(v).size + y.at(v).size - 1) for v in q.vertices)
    maps = {}
    for s, t in q.arrows:
        fx, fy = x.maps[(s, t)], y.maps[(s, t)]
        shift = x.at(t).size - 1
        img = list(fx)
        img.extend(fy[e] + shift if fy[e] else 0 for e in range(1, len(fy)))
        maps[(s, t)] = tuple(img)
    return PointedRep(q, sets, maps)


def random_pointed_rep(q: Quiver, rng: random.Random, max_size: int = 3) -> PointedRep:
    sets = tuple(PointedSet(rng.randint(1, max_size)) for _ in q.vertices)
    maps = {}
    for s, t in q.arrows:
        src, dst = sets[s - 1], sets[t - 1]
        targets = list(dst.nonbase)
        rng.shuffle(targets)
        img = [0]
        for _ in src.nonbase:
            if targets and rng.random() < 0.7:
                img.append(targets.pop())
            else:
                img.append(0)
        maps[(s, t)] = tuple(img)
    return PointedRep(q, sets, maps)


@dataclass(frozen=True)
class Subrep:
    """A subrepresentation, recorded by its chosen non-basepoint elements per vertex."""

    chosen: tuple[frozenset[int], ...]

    def __str__(self) -> str:
        parts = ["{" + ",".join(str(e) for e in sorted(c)) + "}" for c in self.chosen]
        return "(" + " ".join(parts) + ")"

    def nonbase_count(self) -> int:
        return sum(len(c) for c in self.chosen)


def _closure_masks(x: PointedRep) -> tuple[list[tuple[int, int]], list[int]]:
    elems = x.elements()
    pos = {e: i for i, e in enumerate(elems)}
    need = [0] * len(elems)
    for (s, t), f in x.maps.items():
        for e in x.at(s).nonbase:
            if f[e]:
                need[pos[(s, e)]] |= 1 << pos[(t, f[e])]
    return elems, need


def subrep_masks(x: PointedRep) -> tuple[list[tuple[int, int]], list[int]]:
    """Non-basepoint elements and the bitmasks of all subrepresentations, sorted by (size, mask)."""
    elems, need = _closure_masks(x)
    n = len(elems)
    if n > MAX_POINTED_ELEMENTS:
        raise SizeLimit(f"{n} non-basepoint elements; enumeration capped at {MAX_POINTED_ELEMENTS}")
    closed = []
    for mask in range(1 << n):
        if all(need[i] & ~mask == 0 for i in iter_bits(mask)):
            closed.append(mask)
    closed.sort(key=lambda m: (m.bit_count(), m))
    return elems, closed


def enumerate_pointed_subreps(x: PointedRep) -> FinitePoset:
    """All subrepresentations under inclusion, graded by number of non-basepoint elements."""
    elems, closed = subrep_masks(x)
    labels = []
    for mask in closed:
        chosen = [set() for _ in x.quiver.vertices]
        for i in iter_bits(mask):
            v, e = elems[i]
            chosen[v - 1].add(e)
        sub = Subrep(tuple(frozenset(c) for c in chosen))
        # closure under the arrow maps, checked on the labels themselves
        for (s, t), f in x.maps.items():
            assert all(f[e] == 0 or f[e] in sub.chosen[t - 1] for e in sub.chosen[s - 1])
        labels.append(sub)
    up = [sum(1 << j for j, m2 in enumerate(closed) if m1 & ~m2 == 0) for m1 in closed]
    return FinitePoset(labels, up, [m.bit_count() for m in closed], check=False)


def _ray_profile(shape: StarShape, sub: Subrep) -> tuple[int, ...]:
    return tuple(
        sum(1 for j in range(1, length + 1) if sub.chosen[shape.vertex(i, j) - 1])
        for i, length in enumerate(shape.ray_lengths, start=1)
    )


def verify_chain_product_iso(shape: StarShape) -> bool:
    """P_X minus its top element is order-isomorphic to Ch(l_1, ..., l_r), via per-ray counts."""
    x = star_indecomposable(shape)
    p = enumerate_pointed_subreps(x)
    top = p.maximal()
    if len(top) != 1:
        return False
    rest = p.subposet(i for i in range(len(p)) if i != top[0])
    ch = chain_product(shape.ray_lengths)
    mapping = {i: chain_product_index(shape.ray_lengths, _ray_profile(shape, s)) for i, s in enumerate(rest.elements)}
    return is_isomorphism(rest, ch, mapping)


def pointed_star_sperner(shape: StarShape) -> tuple[bool, int]:
    """Sperner verdict and width of the subrepresentation poset of the star indecomposable.

    For ``r >= 2`` also checks that the full representation is comparable to
    everything (so it is in no antichain of size > 1) and that the width matches
    that of the chain product, as counted by its symmetric chain decomposition.
    """
    x = star_indecomposable(shape)
    p = enumerate_pointed_subreps(x)
    sperner, _ = is_sperner(p)
    width = dilworth_width(p).width
    if shape.r >= 2:
        (top,) = p.maximal()
        everything = (1 << len(p)) - 1
        if p.down[top] != everything or width <= 1:
            return False, width
        if width != len(scd_chain_product(shape.ray_lengths)):
            return False, width
    return sperner, width


def verify_direct_sum_iso(x: PointedRep, y: PointedRep) -> bool:
    """P_{X+Y} is order-isomorphic to P_X x P_Y via U -> (U restricted to X, U restricted to Y)."""
    s = direct_sum(x, y)
    ps, px, py = enumerate_pointed_subreps(s), enumerate_pointed_subreps(x), enumerate_pointed_subreps(y)
    prod_p = direct_product(px, py)
    mapping = {}
    for i, sub in enumerate(ps.elements):
        xs, ys = [], []
        for v in s.quiver.vertices:
            cut = x.at(v).size - 1
            xs.append(frozenset(e for e in sub.chosen[v - 1] if e <= cut))
            ys.append(frozenset(e - cut for e in sub.chosen[v - 1] if e > cut))
        key = (Subrep(tuple(xs)), Subrep(tuple(ys)))
        if key not in prod_p:
            return False
        mapping[i] = prod_p.index(key)
    return is_isomorphism(ps, prod_p, mapping)
