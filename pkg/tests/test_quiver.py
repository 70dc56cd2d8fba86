from __future__ import annotations

import pytest

from quiversperner.errors import BadLength, BadOrientation, NotAPath, QuiverError
from quiversperner.quiver import PathOrientation, Quiver, StarShape, path_quiver, sources_and_sinks, star_quiver


def test_orientation_convention():
    q = path_quiver(3, "<>")
    assert q.arrows == ((2, 1), (2, 3))
    assert sources_and_sinks(q) == ({2}, {1, 3})
    assert str(PathOrientation("←→")) == "<>"


def test_presets():
    assert str(PathOrientation.linear(4)) == "<<<"
    assert str(PathOrientation.zigzag(6, 3)) == "<<>>>"
    assert str(PathOrientation.alternating(7)) == "<><><>"
    assert sources_and_sinks(path_quiver(6, PathOrientation.zigzag(6, 3))) == ({3}, {1, 6})
    assert len(list(PathOrientation.all_orientations(5))) == 16


def test_errors():
    with pytest.raises(BadOrientation):
        PathOrientation("<x")
    with pytest.raises(BadLength):
        path_quiver(4, "<<")
    with pytest.raises(BadOrientation):
        PathOrientation.zigzag(4, 5)
    with pytest.raises(QuiverError):
        Quiver(3, ((1, 2), (2, 3), (3, 1)))
    with pytest.raises(QuiverError):
        Quiver(3, ((1, 2),))
    with pytest.raises(QuiverError):
        Quiver(2, ((1, 2), (2, 1)))
    with pytest.raises(NotAPath):
        star_quiver(StarShape((1, 1, 1))).orientation()


def test_path_roundtrip():
    q = path_quiver(5, "<>><")
    assert q.is_path()
    assert str(q.orientation()) == "<>><"
    assert Quiver.from_json(q.to_json()) == q


def test_star():
    shape = StarShape((1, 2, 3))
    q = star_quiver(shape)
    assert q.n == 7
    assert sources_and_sinks(q)[0] == {1}
    assert shape.vertex_names()[shape.vertex(2, 2) - 1] == "v2,2"
    assert shape.dynkin_type() == "E_7"
    assert StarShape((1, 1, 4)).dynkin_type() == "D_7"
    assert StarShape((2, 2, 2)).dynkin_type() is None
    sink = star_quiver(StarShape((1, 2), "sink"))
    assert sources_and_sinks(sink)[1] == {1}
