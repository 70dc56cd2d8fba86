from __future__ import annotations

import random

import pytest

from quiversperner.errors import SizeLimit
from quiversperner.pointed import (
    PointedRep,
    PointedSet,
    direct_sum,
    enumerate_pointed_subreps,
    pointed_star_sperner,
    random_pointed_rep,
    star_indecomposable,
    verify_chain_product_iso,
    verify_direct_sum_iso,
    zero_rep,
)
from quiversperner.poset import chain_product, check_grading, dilworth_width
from quiversperner.quiver import StarShape, path_quiver, star_quiver


def test_pointed_set():
    assert PointedSet(3).dim == 3
    assert list(PointedSet(3).nonbase) == [1, 2]
    with pytest.raises(ValueError):
        PointedSet(0)


def test_rep_validation():
    q = path_quiver(2, ">")
    with pytest.raises(ValueError):
        PointedRep(q, (PointedSet(2), PointedSet(2)), {(1, 2): (1, 1)})
    with pytest.raises(ValueError):
        PointedRep(q, (PointedSet(3), PointedSet(2)), {(1, 2): (0, 1, 1)})
    with pytest.raises(ValueError):
        PointedRep(q, (PointedSet(2), PointedSet(2)), {})
    ok = PointedRep(q, (PointedSet(3), PointedSet(2)), {(1, 2): (0, 1, 0)})
    assert ok.dim == 5


def test_zero_rep_has_one_subrep():
    p = enumerate_pointed_subreps(zero_rep(path_quiver(3, "<>")))
    assert len(p) == 1 and p.grading == (0,)


def test_star_11():
    # center 1 maps to both leaves: subreps are closed under the arrow maps
    shape = StarShape((1, 1))
    p = enumerate_pointed_subreps(star_indecomposable(shape))
    assert len(p) == 5
    assert p.level_sizes() == [1, 2, 1, 1]
    assert check_grading(p) == (True, None)
    assert verify_chain_product_iso(shape)
    assert pointed_star_sperner(shape) == (True, 2)


@pytest.mark.parametrize("rays", [(1,), (3,), (2, 1), (2, 3), (1, 1, 1), (2, 2, 1), (1, 1, 1, 1)])
def test_stars(rays):
    shape = StarShape(rays)
    assert verify_chain_product_iso(shape)
    sperner, width = pointed_star_sperner(shape)
    assert sperner
    expected = 1 if len(rays) == 1 else dilworth_width(chain_product(rays)).width
    assert width == expected


def test_direct_sum():
    rng = random.Random(5)
    q = path_quiver(3, "<>")
    for _ in range(5):
        x, y = random_pointed_rep(q, rng), random_pointed_rep(q, rng)
        s = direct_sum(x, y)
        assert s.dim == x.dim + y.dim - q.n
        assert verify_direct_sum_iso(x, y)


def test_direct_sum_star():
    q = star_quiver(StarShape((1, 1)))
    x = star_indecomposable(StarShape((1, 1)))
    assert verify_direct_sum_iso(x, zero_rep(q))
    assert len(enumerate_pointed_subreps(direct_sum(x, x))) == 25


def test_cap():
    with pytest.raises(SizeLimit):
        enumerate_pointed_subreps(star_indecomposable(StarShape((8, 8, 8))))
