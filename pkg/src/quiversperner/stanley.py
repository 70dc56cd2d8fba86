"""Up/down operators on graded posets, exact ranks, and Stanley-type certificates.

Matrices are written in the basis of level elements, ordered by element index.
All arithmetic is exact (``fractions.Fraction`` / ``int``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import NotGraded
from .fq import gaussian_int
from .poset import FinitePoset, chain_product
from .subrep import SubrepPoset, subrep_poset


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "RationalMatrix":
        if not self.rows:
            return RationalMatrix(self.cols, 0, ((),) * self.cols)
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        # sparse rows: these operators are 0/1 with few nonzeros per column
        other_rows = [[(j, x) for j, x in enumerate(r) if x] for r in other.entries]
        out = []
        for r in self.entries:
            acc = [Fraction(0)] * other.cols
            for k, x in enumerate(r):
                if x:
                    for j, y in other_rows[k]:
                        acc[j] += x * y
            out.append(tuple(acc))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self.entries) for j, x in enumerate(r) if i != j)

    def diag(self) -> list[Fraction]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]


def _level_matrix(p: FinitePoset, rows: Sequence[int], cols: Sequence[int], upward: bool) -> RationalMatrix:
    one, zero = Fraction(1), Fraction(0)
    data = []
    for y in rows:
        if upward:
            data.append(tuple(one if p.leq(x, y) else zero for x in cols))
        else:
            data.append(tuple(one if p.leq(y, x) else zero for x in cols))
    return RationalMatrix(len(rows), len(cols), tuple(data))


def _level(p: FinitePoset, i: int) -> list[int]:
    if p.grading is None:
        raise NotGraded("up/down operators need a grading")
    return [x for x, d in enumerate(p.grading) if d == i]


def up_matrix(p: FinitePoset, i: int) -> RationalMatrix:
    """U_i : Q P_i -> Q P_{i+1}, column X = sum of level-(i+1) elements above X."""
    return _level_matrix(p, _level(p, i + 1), _level(p, i), upward=True)


def down_matrix(p: FinitePoset, i: int) -> RationalMatrix:
    """D_i : Q P_i -> Q P_{i-1}, column X = sum of level-(i-1) elements below X."""
    return _level_matrix(p, _level(p, i - 1), _level(p, i), upward=False)


def commutator(p: FinitePoset, i: int) -> RationalMatrix:
    """D_{i+1} U_i - U_{i-1} D_i on Q P_i (missing levels contribute zero maps)."""
    return down_matrix(p, i + 1) @ up_matrix(p, i) - up_matrix(p, i - 1) @ down_matrix(p, i)


def commutator_diagonal(sp: SubrepPoset, i: int) -> list[int]:
    """Predicted diagonal ``[a - d2]_q - [d1]_q`` for each flag of degree i."""
    p = sp.poset
    out = []
    for x in _level(p, i):
        d1, d2 = p.elements[x].dims
        out.append(gaussian_int(sp.a - d2, sp.q) - gaussian_int(d1, sp.q))
    return out


def verify_commutator(a: int, q: int, i: int, sp: SubrepPoset | None = None) -> bool:
    """Exact matrix identity D_{i+1}U_i - U_{i-1}D_i = diag([a-d2]_q - [d1]_q) on level i."""
    sp = sp or subrep_poset(a, q)
    return commutator(sp.poset, i) == RationalMatrix.diagonal(commutator_diagonal(sp, i))


def boolean_lattice(n: int) -> FinitePoset:
    return chain_product([1] * n)


def verify_boolean_commutator(n: int) -> bool:
    """Stanley's relation D_{i+1}U_i - U_{i-1}D_i = (n - 2i) id on every level of B_n."""
    p = boolean_lattice(n)
    for i in range(n + 1):
        size = len(_level(p, i))
        if commutator(p, i) != RationalMatrix.diagonal([n - 2 * i] * size):
            return False
    return True


def rational_rank(m: RationalMatrix | Sequence[Sequence]) -> int:
    """Exact rank: clear denominators row by row, then fraction-free Bareiss elimination."""
    rows = m.entries if isinstance(m, RationalMatrix) else m
    mat = []
    for r in rows:
        r = [Fraction(x) for x in r]
        scale = lcm(*(x.denominator for x in r)) if r else 1
        mat.append([int(x * scale) for x in r])
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        piv = mat[rank][col]
        for r in range(rank + 1, nrows):
            f = mat[r][col]
            row_r, row_p = mat[r], mat[rank]
            # exact division is guaranteed by Sylvester's identity
            mat[r] = [(piv * row_r[j] - f * row_p[j]) // prev if j > col else 0 for j in range(ncols)]
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def stanley_certificate(p: FinitePoset, k: int) -> bool:
    """U_i injective for i < k and D_i injective for k < i <= rank, i.e. P_k is a maximum antichain."""
    if p.grading is None:
        raise NotGraded("Stanley's criterion needs a graded poset")
    rank = p.rank
    if not 0 <= k <= rank:
        raise ValueError(f"level {k} outside 0..{rank}")
    for i in range(k):
        if rational_rank(up_matrix(p, i)) != len(_level(p, i)):
            return False
    for i in range(k + 1, rank + 1):
        if rational_rank(down_matrix(p, i)) != len(_level(p, i)):
            return False
    return True


def verify_positivity_argument(a: int, q: int, sp: SubrepPoset | None = None) -> bool:
    """[a-d2]_q > [d1]_q on every level below a, and the reverse inequality above a."""
    sp = sp or subrep_poset(a, q)
    for x in sp.flags:
        d1, d2 = x.dims
        up_side, down_side = gaussian_int(a - d2, q), gaussian_int(d1, q)
        if x.dim < a and not up_side > down_side:
            return False
        if x.dim > a and not down_side > up_side:
            return False
    return True


def level_ranks(p: FinitePoset) -> Iterable[tuple[int, int, int, int]]:
    """``(i, |P_i|, rank U_i, rank D_i)`` for every level."""
    for i in range(p.rank + 1):
        yield i, len(_level(p, i)), rational_rank(up_matrix(p, i)), rational_rank(down_matrix(p, i))
