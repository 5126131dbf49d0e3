"""Edge-density bounds for deque and rique layouts, all in exact integers."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .core import LayoutError, LayoutKind


def ceil_div(num: int, den: int) -> int:
    if den <= 0 or num < 0:
        raise ValueError("ceil_div expects num >= 0, den > 0")
    return (num + den - 1) // den


def max_edges_deque(n: int, k: int) -> int:
    """Most edges an n-vertex graph with a k-deque layout can have."""
    if n < 3 or k < 1:
        raise LayoutError(f"max_edges_deque needs n >= 3, k >= 1 (got n={n}, k={k})")
    return (2 * k + 1) * n - 5 * k - 1


def max_edges_rique(n: int, k: int) -> int:
    """Most edges an n-vertex graph with a k-rique layout can have."""
    if n < 3 or k < 1:
        raise LayoutError(f"max_edges_rique needs n >= 3, k >= 1 (got n={n}, k={k})")
    return (2 * n + 2) * k - k * k + (n - 3)


def deque_lower_bound_Kn(n: int) -> int:
    """ceil((n^2 - 3n + 2) / (4n - 10)), the density lower bound for K_n."""
    if n < 3:
        raise LayoutError(f"deque_lower_bound_Kn needs n >= 3 (got {n})")
    return ceil_div(n * n - 3 * n + 2, 4 * n - 10)


def check_ceiling_identity(n_max: int) -> bool:
    """Does ceil((n^2-3n+2)/(4n-10)) == ceil(n/4) hold for every 3 <= n <= n_max?"""
    if n_max < 3:
        raise LayoutError("n_max must be at least 3")
    for n in range(3, n_max + 1):
        if (n * n - 3 * n + 2 + 4 * n - 11) // (4 * n - 10) != (n + 3) // 4:
            return False
    return True


def density_lower_bound(n: int, m: int, kind: LayoutKind) -> int:
    """Least k >= 1 whose density bound admits m edges.

    Stack and queue layouts are deque layouts, so they inherit the deque
    bound.  For riques only the increasing branch k <= n + 1 of the
    quadratic is searched; the deque bound also applies and the larger of
    the two is returned.
    """
    kind = LayoutKind(kind)
    if n < 3 or m < 0:
        raise LayoutError(f"density_lower_bound needs n >= 3, m >= 0 (got n={n}, m={m})")
    # (2k+1)n - 5k - 1 >= m  <=>  k (2n - 5) >= m - n + 1
    k = max(1, ceil_div(max(0, m - n + 1), 2 * n - 5))
    if kind is LayoutKind.RIQUE:
        for kr in range(1, n + 2):
            if max_edges_rique(n, kr) >= m:
                break
        else:
            raise LayoutError(f"{m} edges exceed every rique density bound for n={n}")
        k = max(k, kr)
    return k


def theorem_upper_bound(family: str, n: int, kind: LayoutKind) -> int | None:
    """Page count of the known constructions (None where none applies)."""
    kind = LayoutKind(kind)
    if family == "kn":
        if kind is LayoutKind.DEQUE:
            return ceil_div(n, 4)
        if kind is LayoutKind.RIQUE:
            return max(1, (n - 1) // 3)
    if family == "knn":
        if kind is LayoutKind.DEQUE:
            return ceil_div(n, 3)
        if kind is LayoutKind.RIQUE:
            return (n - 1) // 2 - 1
    return None


@dataclass
class BoundsReport:
    family: str
    n: int
    num_vertices: int
    m: int
    kind: str
    max_edges: dict[int, int]
    lower_bound_pages: int
    upper_bound_pages: int | None
    identity_checked: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["max_edges"] = {str(k): v for k, v in self.max_edges.items()}
        return d


def bounds_report(family: str, n: int, kind: LayoutKind) -> BoundsReport:
    """Bounds for K_n (``family='kn'``) or K_{n,n} (``family='knn'``)."""
    kind = LayoutKind(kind)
    if family == "kn":
        nv, m = n, n * (n - 1) // 2
    elif family == "knn":
        nv, m = 2 * n, n * n
    else:
        raise LayoutError(f"unknown family {family!r}")
    lb = density_lower_bound(nv, m, kind)
    formula = max_edges_rique if kind is LayoutKind.RIQUE else max_edges_deque
    ks = range(1, lb + 1)
    identity = False
    if family == "kn" and kind is LayoutKind.DEQUE:
        identity = deque_lower_bound_Kn(n) == ceil_div(n, 4)
    return BoundsReport(
        family=family, n=n, num_vertices=nv, m=m, kind=kind.value,
        max_edges={k: formula(nv, k) for k in ks},
        lower_bound_pages=lb,
        upper_bound_pages=theorem_upper_bound(family, n, kind),
        identity_checked=identity,
    )
