from __future__ import annotations

import pytest

from golden import (
    A3_ALTERNATING_COVERS,
    A6_ALTERNATING_ANTICHAIN,
    A6_ZIGZAG_ANTICHAIN,
    A6_ZIGZAG_COVERS,
    A7_ALTERNATING_ANTICHAIN,
    A7_ALTERNATING_COVERS,
)
from oracles import interval_morphism_injective, max_antichain_bruteforce
from quiversperner.errors import DomainError, NotAPath
from quiversperner.intervals import (
    Interval,
    alternating_chains,
    alternating_count_identity,
    alternating_even_width,
    alternating_width,
    antichain_alternating,
    antichain_alternating_even,
    antichain_linear,
    antichain_zigzag,
    chain_decomposition_alternating,
    chain_decomposition_alternating_even,
    chain_decomposition_zigzag,
    chains_linear,
    embeds,
    interval_index,
    interval_poset,
    intervals,
    parse_interval,
    zigzag_width,
)
from quiversperner.poset import covers, dilworth_width, verify_antichain, verify_chain_decomposition
from quiversperner.quiver import PathOrientation, StarShape, path_quiver, star_quiver


def test_interval_parsing_and_order():
    assert parse_interval("[3]") == Interval(3, 3)
    assert parse_interval(" [1, 4] ") == Interval(1, 4)
    assert str(Interval(2, 5)) == "[2,5]"
    with pytest.raises(ValueError):
        parse_interval("[4,2]")
    xs = intervals(5)
    assert len(xs) == 15
    assert all(interval_index(5, x) == i for i, x in enumerate(xs))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_embedding_rule_matches_morphism_oracle(n):
    for orient in PathOrientation.all_orientations(n):
        q = path_quiver(n, orient)
        for x in intervals(n):
            for y in intervals(n):
                assert embeds(q, x, y) == interval_morphism_injective(q, x, y), (str(orient), x, y)


def test_not_a_path():
    with pytest.raises(NotAPath):
        interval_poset(star_quiver(StarShape((1, 1, 1))))


def test_linear_example():
    ip = interval_poset(PathOrientation.linear(3))
    assert dilworth_width(ip.poset).width == 3
    assert antichain_linear(3) == {Interval(1, 3), Interval(2, 3), Interval(3, 3)}
    assert verify_chain_decomposition(ip.poset, ip.decomposition(chains_linear(3)))


def test_zigzag_example():
    p = interval_poset(PathOrientation.zigzag(6, 3)).poset
    assert len(p) == 21
    assert antichain_zigzag(6, 3) == A6_ZIGZAG_ANTICHAIN
    computed = set(covers(p))
    assert A6_ZIGZAG_COVERS <= computed
    # the drawing leaves out three covers above [1,2]; each is a genuine embedding
    missing = {(Interval(1, 2), Interval(1, b)) for b in (4, 5, 6)}
    assert computed - A6_ZIGZAG_COVERS == missing
    q = path_quiver(6, PathOrientation.zigzag(6, 3))
    assert all(interval_morphism_injective(q, x, y) for x, y in missing)
    assert not interval_morphism_injective(q, Interval(1, 3), Interval(1, 4))
    assert verify_antichain(p, A6_ZIGZAG_ANTICHAIN)
    d = chain_decomposition_zigzag(6, 3)
    assert verify_chain_decomposition(p, d) and len(d) == 12
    assert dilworth_width(p).width == 12 == zigzag_width(6, 3)


@pytest.mark.parametrize("n,s", [(5, 1), (5, 5), (4, 2)])
def test_zigzag_endpoints(n, s):
    p = interval_poset(PathOrientation.zigzag(n, s)).poset
    assert dilworth_width(p).width == zigzag_width(n, s) == max_antichain_bruteforce(p)
    assert verify_antichain(p, antichain_zigzag(n, s))


def test_alternating_examples():
    p3 = interval_poset(PathOrientation.alternating(3)).poset
    assert set(covers(p3)) == A3_ALTERNATING_COVERS
    assert dilworth_width(p3).width == 4
    p7 = interval_poset(PathOrientation.alternating(7)).poset
    assert len(p7) == 28
    assert set(covers(p7)) == A7_ALTERNATING_COVERS
    assert antichain_alternating(3) == A7_ALTERNATING_ANTICHAIN
    assert dilworth_width(p7).width == alternating_width(3) == 13


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_alternating_chains(m):
    n = 2 * m + 1
    p = interval_poset(PathOrientation.alternating(n)).poset
    d = chain_decomposition_alternating(m)
    assert verify_chain_decomposition(p, d)
    assert len(d) == alternating_width(m) == dilworth_width(p).width
    tops = {p.elements[t] for t in d.tops()}
    assert tops == antichain_alternating(m)
    lhs, rhs = alternating_count_identity(m)
    assert lhs == rhs == len(p)
    assert f"C_{Interval(1, n)}" in alternating_chains(m)


def test_alternating_even():
    assert antichain_alternating_even(3) == A6_ALTERNATING_ANTICHAIN
    for m in (2, 3, 4):
        p = interval_poset(PathOrientation.alternating(2 * m)).poset
        f = antichain_alternating_even(m)
        assert verify_antichain(p, f)
        assert len(f) == alternating_even_width(m) == dilworth_width(p).width
        assert verify_chain_decomposition(p, chain_decomposition_alternating_even(m))
    with pytest.raises(DomainError):
        antichain_alternating_even(1)


def test_two_vertex_path_width():
    # the closed form for the alternating even case gives 3 here, but A2 has only 3 elements in a V
    p = interval_poset(PathOrientation.alternating(2)).poset
    assert len(p) == 3
    assert dilworth_width(p).width == 2 == max_antichain_bruteforce(p)
