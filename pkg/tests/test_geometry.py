from fractions import Fraction

import pytest

from orbitalg.geometry import (
    LineArrangement, circle_point, default_ngon_parameters, ngon_instance, region_escapes_disk,
)


def vertices(arr):
    """Pairwise intersections of consecutive edges, i.e. the polygon's corners."""
    out = []
    lines = arr.lines
    for (x1, y1, z1), (x2, y2, z2) in zip(lines, lines[1:] + lines[:1]):
        det = x1 * y2 - x2 * y1
        out.append(((y1 * z2 - y2 * z1) / det, (x2 * z1 - x1 * z2) / det))
    return out


def test_circle_points_are_exact():
    for t in (0, 1, -1, Fraction(3, 7), 5, None):
        a, b = circle_point(t)
        assert a * a + b * b == 1
    assert circle_point(0) == (1, 0)
    assert circle_point(None) == (-1, 0)


def test_triangle_example():
    arr = ngon_instance(3, [0, 1, -1])
    assert set(vertices(arr)) == {(1, 0), (0, 1), (0, -1)}
    assert all(a * a + b * b == 1 for a, b in vertices(arr))
    # the origin sits on the edge from (0, 1) to (0, -1)
    assert sorted(z for _, _, z in arr.lines) == [0, 1, 1]
    assert not region_escapes_disk(arr)


def test_quadrilateral_example():
    arr = ngon_instance(4, [0, 1, -1, 3])
    assert len(arr) == 4
    assert all(a * a + b * b == 1 for a, b in vertices(arr))
    assert arr.offsets_positive()


@pytest.mark.parametrize("N", range(3, 9))
def test_default_instances(N):
    arr = ngon_instance(N)
    assert len(arr) == N
    assert arr.offsets_positive()
    assert arr.contains(0, 0)
    assert all(a * a + b * b == 1 for a, b in vertices(arr))
    assert len(set(default_ngon_parameters(N))) == N


@pytest.mark.parametrize("N", range(3, 9))
def test_drop_one_escapes(N):
    arr = ngon_instance(N)
    assert not region_escapes_disk(arr)
    assert all(region_escapes_disk(arr.drop(j)) for j in range(N))


def test_single_line_is_unbounded():
    assert region_escapes_disk(LineArrangement([(1, 0, 1)]))


def test_empty_and_degenerate_regions():
    # a > 1 and a < -1 cannot both hold
    assert not region_escapes_disk(LineArrangement([(1, 0, -1), (-1, 0, -1)]))
    # a > 0 and a < 0: the closure is a line, the open region is empty
    assert not region_escapes_disk(LineArrangement([(1, 0, 0), (-1, 0, 0)]))
    assert not region_escapes_disk(LineArrangement([(0, 0, -1)]))
    assert region_escapes_disk(LineArrangement([(0, 0, 1)]))


def test_bounded_region_outside_disk():
    # the square |a|, |b| < 2 reaches beyond the unit circle; |a|, |b| < 1/2 does not
    big = LineArrangement([(1, 0, 2), (-1, 0, 2), (0, 1, 2), (0, -1, 2)])
    small = LineArrangement([(2, 0, 1), (-2, 0, 1), (0, 2, 1), (0, -2, 1)])
    assert region_escapes_disk(big)
    assert not region_escapes_disk(small)


def test_invalid_instances():
    with pytest.raises(ValueError):
        ngon_instance(2)
    with pytest.raises(ValueError):
        ngon_instance(3, [0, 0, 1])
    with pytest.raises(ValueError):
        ngon_instance(4, [0, 1, 2])
    with pytest.raises(ValueError):
        LineArrangement([(1, 2)])
