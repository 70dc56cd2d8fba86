"""Subrepresentation posets of V = P_1^a for the quiver 1 -> 2 over F_q.

Both vertex spaces of P_1^a are k^a and the arrow acts as the identity, so a
subrepresentation is a flag ``X1 <= X2`` of subspaces of k^a.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import SizeLimit
from .fq import PrimeField, Subspace, gaussian_binomial, subspaces, subspaces_of
from .poset import FinitePoset


@dataclass(frozen=True)
class Flag:
    x1: Subspace
    x2: Subspace

    @property
    def dims(self) -> tuple[int, int]:
        return self.x1.dim, self.x2.dim

    @property
    def dim(self) -> int:
        return self.x1.dim + self.x2.dim

    def contained_in(self, other: "Flag") -> bool:
        return (self.x1.members & ~other.x1.members) == 0 and (self.x2.members & ~other.x2.members) == 0

    def __str__(self) -> str:
        return f"({self.x1} <= {self.x2})"


def flag_count(a: int, q: int) -> int:
    return sum(
        gaussian_binomial(a, d2, q) * sum(gaussian_binomial(d2, d1, q) for d1 in range(d2 + 1))
        for d2 in range(a + 1)
    )


def enumerate_flags(a: int, q: int, *, max_elements=None) -> list[Flag]:
    """All flags X1 <= X2 <= F_q^a, ordered by (dim X2, X2, dim X1, X1)."""
    PrimeField(q)
    total = flag_count(a, q)
    cap = config.max_elements(max_elements)
    if total > cap:
        raise SizeLimit(f"P_1^{a} over F_{q} has {total} subrepresentations (cap {cap})")
    flags = []
    for d2 in range(a + 1):
        for x2 in subspaces(a, q, d2):
            for d1 in range(d2 + 1):
                flags.extend(Flag(x1, x2) for x1 in subspaces_of(x2, d1))
    return flags


@dataclass(frozen=True)
class SubrepPoset:
    a: int
    q: int
    flags: tuple[Flag, ...]
    poset: FinitePoset

    @property
    def rank(self) -> int:
        return 2 * self.a


def subrep_poset(a: int, q: int, *, max_elements=None) -> SubrepPoset:
    """Flags under componentwise containment, graded by total dimension, sorted by degree."""
    flags = sorted(enumerate_flags(a, q, max_elements=max_elements), key=lambda f: (f.dim, f.dims))
    n = len(flags)
    m1 = [f.x1.members for f in flags]
    m2 = [f.x2.members for f in flags]
    up = []
    for i in range(n):
        row = 0
        for j in range(n):
            if m1[i] & ~m1[j] == 0 and m2[i] & ~m2[j] == 0:
                row |= 1 << j
        up.append(row)
    poset = FinitePoset(tuple(flags), up, [f.dim for f in flags], check=False)
    return SubrepPoset(a, q, tuple(flags), poset)


def check_cover_is_simple_quotient(sp: SubrepPoset) -> bool:
    """Every cover U1 < U2 has a one-dimensional quotient (total dimensions differ by 1)."""
    p = sp.poset
    return all(p.elements[j].dim - p.elements[i].dim == 1 for i, j in p.cover_pairs())


def flag_label(f: Flag) -> str:
    d1, d2 = f.dims
    return f"{f} d=({d1},{d2})"
