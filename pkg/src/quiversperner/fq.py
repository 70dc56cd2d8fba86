"""Prime fields, canonical subspaces of F_q^a, and Gaussian (q-analogue) counts."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from . import config
from .errors import AmbientMismatch, DomainError, SizeLimit

Vector = tuple[int, ...]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise DomainError(f"{self.q} is not prime")

    def inv(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)


def gaussian_int(n: int, q: int) -> int:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if q < 2:
        raise DomainError("gaussian_int needs q >= 2")
    if n < 0:
        raise DomainError("n must be non-negative")
    return (q**n - 1) // (q - 1)


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of F_q^n, by the product formula."""
    if q < 2:
        raise DomainError("gaussian_binomial needs q >= 2")
    if not 0 <= d <= n:
        raise DomainError(f"need 0 <= d <= n, got d={d}, n={n}")
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rref(rows: Iterable[Sequence[int]], q: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over F_q with zero rows dropped."""
    m = [[x % q for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(m)) if m[r][col]), None)
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        inv = pow(m[pivot_row][col], q - 2, q)
        m[pivot_row] = [(x * inv) % q for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % q for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of F_q^ambient, stored by its canonical RREF basis."""

    ambient: int
    q: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient: int, q: int) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in F_{q}^{ambient}")
        return cls(ambient, q, rref(vectors, q))

    @classmethod
    def zero(cls, ambient: int, q: int) -> "Subspace":
        return cls(ambient, q, ())

    @classmethod
    def full(cls, ambient: int, q: int) -> "Subspace":
        return cls(ambient, q, tuple(tuple(int(i == j) for j in range(ambient)) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.rows)

    def reduce(self, v: Sequence[int]) -> list[int]:
        """Remainder of ``v`` after eliminating against the RREF basis."""
        v = [x % self.q for x in v]
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [(x - f * y) % self.q for x, y in zip(v, row)]
        return v

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def vectors(self) -> Iterable[Vector]:
        for coeffs in product(range(self.q), repeat=self.dim):
            yield tuple(
                sum(c * row[j] for c, row in zip(coeffs, self.rows)) % self.q for j in range(self.ambient)
            )

    @cached_property
    def members(self) -> int:
        """Bitmask over all q^ambient vectors (base-q index) of the vectors in the subspace."""
        mask = 0
        for v in self.vectors():
            mask |= 1 << vector_index(v, self.q)
        return mask

    def __str__(self) -> str:
        body = ";".join("".join(str(x) for x in r) for r in self.rows)
        return f"{self.ambient}:{body}" if body else f"{self.ambient}:0"


def vector_index(v: Sequence[int], q: int) -> int:
    idx = 0
    for x in v:
        idx = idx * q + x
    return idx


def subspaces(a: int, q: int, d: int, *, max_elements=None) -> list[Subspace]:
    """All d-dimensional subspaces of F_q^a in canonical form.

    Ordered lexicographically by pivot columns, then by the free entries.
    """
    PrimeField(q)
    if not 0 <= d <= a:
        raise DomainError(f"need 0 <= d <= a, got d={d}, a={a}")
    count = gaussian_binomial(a, d, q)
    cap = config.max_elements(max_elements)
    if count > cap:
        raise SizeLimit(f"{count} subspaces exceed cap {cap}")
    out = []
    for pivots in combinations(range(a), d):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, a) if c not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * a for _ in range(d)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            out.append(Subspace(a, q, tuple(tuple(r) for r in rows)))
    return out


def subspace_leq(u: Subspace, v: Subspace) -> bool:
    """Containment ``u <= v``: every basis row of u reduces to zero against v."""
    if u.ambient != v.ambient or u.q != v.q:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    return u.dim <= v.dim and all(v.contains(r) for r in u.rows)


def subspaces_of(x: Subspace, d: int) -> list[Subspace]:
    """All d-dimensional subspaces of ``x``, via coordinates in its basis."""
    out = []
    for coords in subspaces(x.dim, x.q, d):
        vecs = [
            [sum(c * row[j] for c, row in zip(crow, x.rows)) for j in range(x.ambient)] for crow in coords.rows
        ]
        out.append(Subspace.span(vecs, x.ambient, x.q))
    return out
