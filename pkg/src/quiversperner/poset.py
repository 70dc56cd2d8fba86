"""Finite posets stored as dense bit matrices.

Row ``i`` of the relation is a Python int whose bit ``j`` is set iff
``elements[i] <= elements[j]``.  The transpose (down-sets) is kept as well so
that cover tests are a single AND.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Any, Callable, Hashable, Iterable, Iterator, Sequence

from . import config
from .errors import CycleError, NotGraded, SizeLimit, UnknownLabel
from .matching import hopcroft_karp, koenig_cover


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _transpose(rows: Sequence[int]) -> list[int]:
    cols = [0] * len(rows)
    for i, row in enumerate(rows):
        bit = 1 << i
        for j in iter_bits(row):
            cols[j] |= bit
    return cols


def _check_size(n: int, max_elements=None) -> None:
    cap = config.max_elements(max_elements)
    if n > cap:
        raise SizeLimit(f"poset would have {n} elements (cap {cap})")


class FinitePoset:
    """Immutable finite poset over an indexed list of hashable labels."""

    __slots__ = ("elements", "up", "down", "grading", "_index")

    def __init__(
        self,
        elements: Sequence[Hashable],
        up: Sequence[int],
        grading: Sequence[int] | None = None,
        *,
        down: Sequence[int] | None = None,
        check: bool = True,
    ):
        self.elements = tuple(elements)
        self.up = tuple(up)
        self.down = tuple(down) if down is not None else tuple(_transpose(self.up))
        self.grading = tuple(grading) if grading is not None else None
        self._index = {lab: i for i, lab in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate element labels")
        if len(self.up) != len(self.elements):
            raise ValueError("relation size does not match element count")
        if self.grading is not None and len(self.grading) != len(self.elements):
            raise ValueError("grading size does not match element count")
        if check:
            self._validate()

    def _validate(self) -> None:
        for i, row in enumerate(self.up):
            if not (row >> i) & 1:
                raise ValueError(f"relation not reflexive at {self.elements[i]!r}")
            both = row & self.down[i] & ~(1 << i)
            if both:
                j = next(iter_bits(both))
                raise CycleError(f"{self.elements[i]!r} and {self.elements[j]!r} are mutually comparable")
            for j in iter_bits(row):
                if self.up[j] & ~row:
                    raise ValueError(f"relation not transitive through {self.elements[j]!r}")

    # -- basic queries -------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        graded = "graded" if self.grading is not None else "ungraded"
        return f"FinitePoset({len(self)} elements, {graded})"

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def __contains__(self, label: Hashable) -> bool:
        return label in self._index

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def is_cover(self, lower: int, upper: int) -> bool:
        """True iff ``upper`` covers ``lower``."""
        if lower == upper or not self.leq(lower, upper):
            return False
        between = self.up[lower] & self.down[upper]
        return between == (1 << lower) | (1 << upper)

    def cover_pairs(self) -> list[tuple[int, int]]:
        pairs = []
        for i in range(len(self)):
            strict = self.up[i] & ~(1 << i)
            for j in iter_bits(strict):
                if self.down[j] & strict == 1 << j:
                    pairs.append((i, j))
        return pairs

    def minimal(self) -> list[int]:
        return [i for i, d in enumerate(self.down) if d == 1 << i]

    def maximal(self) -> list[int]:
        return [i for i, u in enumerate(self.up) if u == 1 << i]

    @property
    def rank(self) -> int:
        if self.grading is None:
            raise NotGraded("poset has no grading")
        return max(self.grading, default=0)

    def levels(self) -> list[list[int]]:
        """Element indices grouped by degree, ``levels()[d]`` = P_d."""
        if self.grading is None:
            raise NotGraded("poset has no grading")
        out: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for i, d in enumerate(self.grading):
            out[d].append(i)
        return out

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels()]

    def subposet(self, indices: Iterable[int]) -> "FinitePoset":
        """Induced subposet, keeping the given order of indices; grading is carried over as-is."""
        idx = list(indices)
        pos = {old: new for new, old in enumerate(idx)}
        up = []
        for old in idx:
            row = 0
            for j in iter_bits(self.up[old]):
                if j in pos:
                    row |= 1 << pos[j]
            up.append(row)
        grading = [self.grading[i] for i in idx] if self.grading is not None else None
        return FinitePoset([self.elements[i] for i in idx], up, grading, check=False)

    def with_grading(self, grading: Sequence[int] | None) -> "FinitePoset":
        return FinitePoset(self.elements, self.up, grading, down=self.down, check=False)

    def strict_relation(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in iter_bits(self.up[i]) if j != i]


@dataclass(frozen=True)
class ChainDecomposition:
    """Disjoint chains covering a poset; each chain lists element indices bottom-up."""

    chains: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.chains)

    @classmethod
    def from_lists(cls, chains: Iterable[Iterable[int]]) -> "ChainDecomposition":
        return cls(tuple(tuple(c) for c in chains))

    @classmethod
    def from_labels(cls, p: FinitePoset, chains: Iterable[Iterable[Hashable]]) -> "ChainDecomposition":
        return cls(tuple(tuple(p.index(x) for x in c) for c in chains))

    def labels(self, p: FinitePoset) -> list[list[Hashable]]:
        return [[p.elements[i] for i in c] for c in self.chains]

    def tops(self) -> list[int]:
        return [c[-1] for c in self.chains]


# -- construction ------------------------------------------------------

def build_poset(
    labels: Sequence[Hashable],
    leq_pairs: Iterable[tuple[Hashable, Hashable]],
    grading: Sequence[int] | None = None,
    *,
    max_elements=None,
) -> FinitePoset:
    """Poset generated by ``leq_pairs`` (reflexive-transitive closure).

    Raises ``UnknownLabel`` for pairs mentioning undeclared labels and
    ``CycleError`` if the closure is not antisymmetric.
    """
    _check_size(len(labels), max_elements)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise ValueError("duplicate element labels")
    n = len(labels)
    up = [1 << i for i in range(n)]
    for x, y in leq_pairs:
        if x not in index:
            raise UnknownLabel(x)
        if y not in index:
            raise UnknownLabel(y)
        up[index[x]] |= 1 << index[y]
    # Warshall on bit rows
    for k in range(n):
        bit = 1 << k
        row_k = up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row_k
    for i in range(n):
        for j in iter_bits(up[i] & ~(1 << i)):
            if (up[j] >> i) & 1:
                raise CycleError(f"{labels[i]!r} and {labels[j]!r} lie on a cycle")
    return FinitePoset(labels, up, grading, check=False)


def from_predicate(
    labels: Sequence[Hashable],
    leq: Callable[[Any, Any], bool],
    grading: Sequence[int] | None = None,
    *,
    check: bool = True,
    max_elements=None,
) -> FinitePoset:
    """Poset whose relation is given by an order predicate on labels."""
    _check_size(len(labels), max_elements)
    up = []
    for x in labels:
        row = 0
        for j, y in enumerate(labels):
            if leq(x, y):
                row |= 1 << j
        up.append(row)
    return FinitePoset(labels, up, grading, check=check)


def antichain_poset(n: int) -> FinitePoset:
    return FinitePoset(list(range(n)), [1 << i for i in range(n)], [0] * n, check=False)


def chain_poset(k: int) -> FinitePoset:
    """Ch(k) = (0 <= 1 <= ... <= k), graded by value."""
    n = k + 1
    full = (1 << n) - 1
    up = [full ^ ((1 << i) - 1) for i in range(n)]
    down = [(1 << (i + 1)) - 1 for i in range(n)]
    return FinitePoset(list(range(n)), up, list(range(n)), down=down, check=False)


def _spread(mask: int, stride: int) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << (i * stride)
    return out


def direct_product(
    p: FinitePoset,
    q: FinitePoset,
    *,
    combine: Callable[[Any, Any], Hashable] | None = None,
    max_elements=None,
) -> FinitePoset:
    """Componentwise order on ``P x Q``; element ``(x, y)`` sits at index ``i*|Q| + j``.

    If both factors are graded the product carries the summed grading.
    """
    m = len(q)
    _check_size(len(p) * m, max_elements)
    combine = combine or (lambda x, y: (x, y))
    labels = [combine(x, y) for x in p.elements for y in q.elements]
    up, down = [], []
    # bit patterns of Q never overlap after spreading by |Q|, so a product is a Kronecker product
    for i in range(len(p)):
        su, sd = _spread(p.up[i], m), _spread(p.down[i], m)
        for j in range(m):
            up.append(su * q.up[j])
            down.append(sd * q.down[j])
    grading = None
    if p.grading is not None and q.grading is not None:
        grading = [dp + dq for dp in p.grading for dq in q.grading]
    return FinitePoset(labels, up, grading, down=down, check=False)


def chain_product(ks: Sequence[int], *, max_elements=None) -> FinitePoset:
    """Ch(k1, ..., kr): tuples ``0 <= a_i <= k_i`` under dominance, graded by coordinate sum.

    Elements are listed in ``itertools.product`` order.
    """
    ks = list(ks)
    if not ks or any(k < 0 for k in ks):
        raise ValueError("chain_product needs r >= 1 non-negative lengths")
    _check_size(prod(k + 1 for k in ks), max_elements)
    # same layout as folding direct_product over chains, but the up-set of (i, j) is the
    # up-set of (i+1, j) plus one shifted copy, which avoids big-integer multiplication
    up, down = [1], [1]
    for k in reversed(ks):
        m = len(up)
        new_up = [0] * ((k + 1) * m)
        new_down = [0] * ((k + 1) * m)
        for j in range(m):
            row = 0
            for i in range(k, -1, -1):
                row |= up[j] << (i * m)
                new_up[i * m + j] = row
            row = 0
            for i in range(k + 1):
                row |= down[j] << (i * m)
                new_down[i * m + j] = row
        up, down = new_up, new_down
    labels = list(product(*(range(k + 1) for k in ks)))
    return FinitePoset(labels, up, [sum(t) for t in labels], down=down, check=False)


def chain_product_index(ks: Sequence[int], t: Sequence[int]) -> int:
    idx = 0
    for k, a in zip(ks, t):
        idx = idx * (k + 1) + a
    return idx


def scd_chain_product(ks: Sequence[int], *, max_elements=None) -> ChainDecomposition:
    """Symmetric chain decomposition of Ch(k1, ..., kr) by hook peeling.

    For a symmetric chain ``c_0 < ... < c_{h-1}`` and the chain ``0..k``, the
    grid ``C x Ch(k)`` splits into ``min(h, k+1)`` hooks; hook ``t`` runs up
    column ``t`` to row ``h-1-t`` and then along that row to ``k``.
    """
    ks = list(ks)
    if not ks or any(k < 0 for k in ks):
        raise ValueError("chain_product needs r >= 1 non-negative lengths")
    _check_size(prod(k + 1 for k in ks), max_elements)
    chains: list[list[tuple[int, ...]]] = [[(a,) for a in range(ks[0] + 1)]]
    for k in ks[1:]:
        grown = []
        for c in chains:
            h = len(c)
            for t in range(min(h, k + 1)):
                top = h - 1 - t
                hook = [c[i] + (t,) for i in range(top + 1)]
                hook.extend(c[top] + (j,) for j in range(t + 1, k + 1))
                grown.append(hook)
        chains = grown
    return ChainDecomposition(
        tuple(tuple(chain_product_index(ks, t) for t in c) for c in chains)
    )


# -- verification --------------------------------------------------------

def covers(p: FinitePoset) -> list[tuple[Hashable, Hashable]]:
    """Hasse diagram edges as ``(lower, upper)`` label pairs."""
    return [(p.elements[i], p.elements[j]) for i, j in p.cover_pairs()]


def check_grading(p: FinitePoset, deg: Sequence[int] | dict | None = None):
    """Check a degree map; returns ``(ok, witness)``.

    ``deg`` may be a sequence indexed like ``p.elements`` or a dict keyed by
    label; it defaults to the poset's own grading.  The witness is a minimal
    element with nonzero degree ``(label,)`` or a violating cover
    ``(lower, upper)``.
    """
    if deg is None:
        if p.grading is None:
            raise NotGraded("no degree map given and poset is ungraded")
        deg = p.grading
    if isinstance(deg, dict):
        deg = [deg[x] for x in p.elements]
    for i in p.minimal():
        if deg[i] != 0:
            return False, (p.elements[i],)
    for i, j in p.cover_pairs():
        if deg[j] != deg[i] + 1:
            return False, (p.elements[i], p.elements[j])
    return True, None


def verify_antichain(p: FinitePoset, members: Iterable[Hashable]) -> bool:
    """True iff the labelled members are pairwise incomparable."""
    idx = [p.index(x) for x in members]
    mask = 0
    for i in idx:
        mask |= 1 << i
    return all((p.up[i] | p.down[i]) & mask == 1 << i for i in idx)


def _antichain_indices_ok(p: FinitePoset, idx: Iterable[int]) -> bool:
    idx = list(idx)
    mask = 0
    for i in idx:
        mask |= 1 << i
    return len(set(idx)) == len(idx) and all((p.up[i] | p.down[i]) & mask == 1 << i for i in idx)


def verify_chain_decomposition(p: FinitePoset, d: ChainDecomposition) -> bool:
    seen = 0
    count = 0
    for chain in d.chains:
        if not chain:
            return False
        for x in chain:
            if not 0 <= x < len(p) or (seen >> x) & 1:
                return False
            seen |= 1 << x
            count += 1
        for x, y in zip(chain, chain[1:]):
            if not p.lt(x, y):
                return False
    return count == len(p) and seen == (1 << len(p)) - 1


def verify_scd(p: FinitePoset, d: ChainDecomposition) -> bool:
    """Symmetric chain decomposition check: saturated chains with deg(bottom)+deg(top) = rank."""
    if p.grading is None:
        raise NotGraded("symmetric chains need a grading")
    if not verify_chain_decomposition(p, d):
        return False
    rank = p.rank
    for chain in d.chains:
        if p.grading[chain[0]] + p.grading[chain[-1]] != rank:
            return False
        if not all(p.is_cover(x, y) for x, y in zip(chain, chain[1:])):
            return False
    return True


@dataclass(frozen=True)
class WidthResult:
    width: int
    cover: ChainDecomposition
    witness: frozenset[int]

    def __iter__(self):
        return iter((self.width, self.cover, self.witness))


def dilworth_width(p: FinitePoset) -> WidthResult:
    """Width with a minimum chain cover and a maximum antichain as certificates.

    Left and right copies of P are joined by an edge ``x -> y`` for every
    strict comparability ``x < y``.  A maximum matching glues elements into
    ``|P| - |M|`` chains; the Koenig cover of the same matching leaves an
    antichain of that size.
    """
    n = len(p)
    adj = [list(iter_bits(p.up[i] & ~(1 << i))) for i in range(n)]
    match_left, match_right = hopcroft_karp(adj, n)
    chains = []
    for start in range(n):
        if match_right[start] != -1:
            continue
        chain = [start]
        while match_left[chain[-1]] != -1:
            chain.append(match_left[chain[-1]])
        chains.append(tuple(chain))
    cover_left, cover_right = koenig_cover(adj, match_left, match_right)
    witness = frozenset(x for x in range(n) if x not in cover_left and x not in cover_right)
    width = len(chains)
    if len(witness) != width:
        raise AssertionError("Koenig duality failed; matching is not maximum")
    return WidthResult(width, ChainDecomposition(tuple(chains)), witness)


def max_level(p: FinitePoset) -> tuple[int, int]:
    """``(level, size)`` of the first largest level."""
    sizes = p.level_sizes()
    best = max(range(len(sizes)), key=lambda d: (sizes[d], -d))
    return best, sizes[best]


def is_sperner(p: FinitePoset) -> tuple[bool, int]:
    """``(True, k)`` iff the largest level ``P_k`` is as big as the width."""
    if p.grading is None:
        raise NotGraded("Sperner property is defined for graded posets")
    level, size = max_level(p)
    return dilworth_width(p).width == size, level


def is_isomorphism(p: FinitePoset, q: FinitePoset, mapping: dict[int, int]) -> bool:
    """True iff ``mapping`` (indices of p -> indices of q) is an order isomorphism."""
    if len(p) != len(q) or len(mapping) != len(p):
        return False
    if sorted(mapping.values()) != list(range(len(q))):
        return False
    for i in range(len(p)):
        image = 0
        for j in iter_bits(p.up[i]):
            image |= 1 << mapping[j]
        if image != q.up[mapping[i]]:
            return False
    return True


# -- serialization ----------------------------------------------------------

def poset_to_json(p: FinitePoset, label: Callable[[Hashable], str] = str) -> dict:
    return {
        "elements": [label(x) for x in p.elements],
        "leq": [[i, j] for i, j in p.strict_relation()],
        "grading": list(p.grading) if p.grading is not None else None,
    }


def poset_from_json(data: dict | str) -> FinitePoset:
    if isinstance(data, str):
        data = json.loads(data)
    labels = list(data["elements"])
    n = len(labels)
    pairs = []
    for i, j in data.get("leq", []):
        if not (0 <= i < n and 0 <= j < n):
            raise UnknownLabel((i, j))
        pairs.append((labels[i], labels[j]))
    return build_poset(labels, pairs, data.get("grading"))


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(
    p: FinitePoset,
    highlight: Iterable[Hashable] = (),
    *,
    label: Callable[[Hashable], str] = str,
    name: str = "poset",
) -> str:
    """Graphviz source for the Hasse diagram, bottom-to-top, ranks aligned when graded."""
    marked = {p.index(x) for x in highlight}
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, x in enumerate(p.elements):
        style = ' style=filled fillcolor="lightblue"' if i in marked else ""
        lines.append(f"  n{i} [label={_dot_id(label(x))}{style}];")
    if p.grading is not None:
        for d, level in enumerate(p.levels()):
            if level:
                ids = " ".join(f"n{i};" for i in level)
                lines.append(f"  {{ rank=same; {ids} }}  // degree {d}")
    for i, j in p.cover_pairs():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain_product_tuples(ks: Sequence[int]) -> list[tuple[int, ...]]:
    return list(product(*(range(k + 1) for k in ks)))
