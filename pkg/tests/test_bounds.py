import pytest

from linlay.bounds import (
    bounds_report,
    ceil_div,
    check_ceiling_identity,
    deque_lower_bound_Kn,
    density_lower_bound,
    max_edges_deque,
    max_edges_rique,
    theorem_upper_bound,
)
from linlay.core import LayoutError, LayoutKind


def test_ceil_div():
    assert [ceil_div(x, 4) for x in range(9)] == [0, 1, 1, 1, 1, 2, 2, 2, 2]
    with pytest.raises(ValueError):
        ceil_div(3, 0)


def test_max_edge_values():
    assert max_edges_deque(10, 2) == 39
    assert max_edges_rique(10, 2) == 47
    assert max_edges_deque(3, 1) == 3
    with pytest.raises(LayoutError):
        max_edges_deque(2, 1)
    with pytest.raises(LayoutError):
        max_edges_rique(5, 0)


def test_deque_lower_bound_small():
    assert [deque_lower_bound_Kn(n) for n in range(3, 11)] == [1, 1, 2, 2, 2, 2, 3, 3]


def test_ceiling_identity_short_range():
    assert check_ceiling_identity(1000)
    with pytest.raises(LayoutError):
        check_ceiling_identity(2)


def test_density_lower_bound():
    assert density_lower_bound(5, 10, LayoutKind.DEQUE) == 2
    assert density_lower_bound(5, 0, LayoutKind.DEQUE) == 1
    # K_{6,6} as 12 vertices / 36 edges
    assert density_lower_bound(12, 36, LayoutKind.DEQUE) == 2
    assert density_lower_bound(12, 36, LayoutKind.STACK) == 2
    assert density_lower_bound(7, 21, LayoutKind.RIQUE) == 2


def test_theorem_upper_bound():
    assert theorem_upper_bound("kn", 30, LayoutKind.DEQUE) == 8
    assert theorem_upper_bound("kn", 30, LayoutKind.RIQUE) == 9
    assert theorem_upper_bound("kn", 3, LayoutKind.RIQUE) == 1
    assert theorem_upper_bound("knn", 39, LayoutKind.DEQUE) == 13
    assert theorem_upper_bound("knn", 30, LayoutKind.RIQUE) == 13
    assert theorem_upper_bound("kn", 30, LayoutKind.STACK) is None


def test_bounds_report():
    r = bounds_report("kn", 12, LayoutKind.DEQUE)
    assert r.m == 66 and r.lower_bound_pages == 3 and r.identity_checked
    assert r.to_dict()["max_edges"] == {"1": 30, "2": 49, "3": 68}
    with pytest.raises(LayoutError):
        bounds_report("petersen", 5, LayoutKind.DEQUE)
