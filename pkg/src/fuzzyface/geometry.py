"""Small 2D helpers shared by the landmark and silhouette code."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

Point = tuple[float, float]


def distance(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def midpoint(a: Point, b: Point) -> Point:
    return ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)


def polygon_is_simple(points: Sequence[Point]) -> bool:
    """True if the implicitly closed polygon has no self-intersections.

    Adjacent edges share a vertex by construction and are skipped; any
    other pair of edges that crosses or even touches makes the polygon
    non-simple. Repeated consecutive vertices (zero-length edges) are
    rejected as well.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n < 3:
        return False

    ax, ay = pts[:, 0], pts[:, 1]
    bx, by = np.roll(ax, -1), np.roll(ay, -1)  # edge i runs (ax,ay)[i] -> (bx,by)[i]
    if np.any((ax == bx) & (ay == by)):
        return False

    ex = (bx - ax)[:, None]
    ey = (by - ay)[:, None]
    # cross(edge_i, p - start_i) for p = start_j and p = end_j
    d1 = ex * (ay[None, :] - ay[:, None]) - ey * (ax[None, :] - ax[:, None])
    d2 = ex * (by[None, :] - ay[:, None]) - ey * (bx[None, :] - ax[:, None])

    proper = (d1 * d2 < 0) & (d1.T * d2.T < 0)

    # collinear or endpoint contact: a zero cross product plus a bounding-box hit
    minx = np.minimum(ax, bx)[:, None]
    maxx = np.maximum(ax, bx)[:, None]
    miny = np.minimum(ay, by)[:, None]
    maxy = np.maximum(ay, by)[:, None]
    t1 = (d1 == 0) & (ax[None, :] >= minx) & (ax[None, :] <= maxx) \
        & (ay[None, :] >= miny) & (ay[None, :] <= maxy)
    t2 = (d2 == 0) & (bx[None, :] >= minx) & (bx[None, :] <= maxx) \
        & (by[None, :] >= miny) & (by[None, :] <= maxy)

    hits = proper | t1 | t2 | t1.T | t2.T

    idx = np.arange(n)
    sep = (idx[None, :] - idx[:, None]) % n
    nonadjacent = (sep >= 2) & (sep <= n - 2)
    return not bool(np.any(hits & nonadjacent))
