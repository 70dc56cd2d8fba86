from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quiversperner.poset import chain_product
from quiversperner.stanley import (
    RationalMatrix,
    commutator,
    commutator_diagonal,
    down_matrix,
    level_ranks,
    rational_rank,
    stanley_certificate,
    up_matrix,
    verify_boolean_commutator,
    verify_commutator,
    verify_positivity_argument,
)
from quiversperner.subrep import subrep_poset


def naive_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_rank_matches_naive_elimination():
    rng = random.Random(11)
    for _ in range(200):
        r, c = rng.randint(0, 6), rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(c)] for _ in range(r)]
        assert rational_rank(rows) == naive_rank(rows)


def test_matrix_arithmetic():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    b = RationalMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).entries == ((2, 1), (4, 3))
    assert (a - a) == RationalMatrix.zeros(2, 2)
    assert (a + b).entries == ((1, 3), (4, 4))
    assert a.transpose().entries == ((1, 3), (2, 4))
    assert RationalMatrix.diagonal([1, 2]).is_diagonal()
    assert RationalMatrix.zeros(0, 3).transpose().shape == (3, 0)
    with pytest.raises(ValueError):
        a @ RationalMatrix.zeros(3, 1)


def test_up_down_are_transposes():
    p = subrep_poset(2, 3).poset
    for i in range(p.rank):
        assert up_matrix(p, i).transpose() == down_matrix(p, i + 1)
    assert up_matrix(p, p.rank).shape == (0, 1)
    assert down_matrix(p, 0).shape == (0, 1)


@pytest.mark.parametrize("a,q", [(1, 2), (2, 2), (2, 3), (2, 5), (3, 2)])
def test_commutator_identity(a, q):
    sp = subrep_poset(a, q)
    p = sp.poset
    covers = p.cover_pairs()
    for i in range(2 * a + 1):
        assert verify_commutator(a, q, i, sp)
        c = commutator(p, i)
        assert c.is_diagonal()
        # the diagonal of DU - UD is (covers above) - (covers below), counted directly
        level = [x for x in range(len(p)) if p.grading[x] == i]
        direct = [sum(lo == x for lo, _ in covers) - sum(hi == x for _, hi in covers) for x in level]
        assert c.diag() == direct == commutator_diagonal(sp, i)
    assert verify_positivity_argument(a, q, sp)
    assert stanley_certificate(p, a)


def test_certificate_fails_off_middle():
    p = subrep_poset(2, 2).poset
    assert not stanley_certificate(p, 0)
    assert not stanley_certificate(p, 4)
    with pytest.raises(ValueError):
        stanley_certificate(p, 9)


def test_level_ranks_report():
    p = subrep_poset(2, 5).poset
    rows = list(level_ranks(p))
    assert [r[1] for r in rows] == [1, 6, 7, 6, 1]
    assert [r[2] for r in rows] == [1, 6, 6, 1, 0]


def test_boolean_lattice():
    for n in range(1, 6):
        assert verify_boolean_commutator(n)
    p = chain_product([1, 1, 1])
    assert commutator(p, 1) == RationalMatrix.diagonal([1, 1, 1])
