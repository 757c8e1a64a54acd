"""Shared fixtures-by-function and the independent slope oracle.

The slope oracle enumerates curve classes on the once-punctured torus and the
four-punctured sphere straight from coprime pairs, without touching the
normal-coordinate engine, so inventory tests compare two independent routes.
"""

import math
from functools import lru_cache

from multicurves.curves import enumerate_curves
from multicurves.surfaces import SurfaceSig
from multicurves.triangulations import triangulate


@lru_cache(maxsize=None)
def tri(g, b):
    return triangulate(SurfaceSig(g, b))


@lru_cache(maxsize=None)
def inventory(g, b, max_weight):
    return enumerate_curves(tri(g, b), max_weight)


def slope_triples(max_weight):
    """Sorted weight triples of slope curves: one slope p/q per coprime pair
    up to sign, crossing the three edge classes (|q|, |p|, |p-q|) times.
    Exactly the triples with one entry equal to the sum of the other two and
    gcd one."""
    out = []
    for q in range(max_weight + 1):
        for p in range(-max_weight, max_weight + 1):
            if (p, q) == (0, 0) or math.gcd(p, q) != 1:
                continue
            if q == 0 and p != 1:
                continue  # slope infinity listed once
            trip = (abs(q), abs(p), abs(p - q))
            if max(trip) <= max_weight:
                out.append(tuple(sorted(trip)))
    return sorted(out)


def torus_oracle(max_weight):
    """Expected sorted-coordinate multiset for the once-punctured torus."""
    return slope_triples(max_weight)


def sphere_oracle(max_weight):
    """Expected sorted-coordinate multiset for the four-punctured sphere: the
    slope triples doubled across the three opposite-edge pairs of the
    tetrahedral triangulation."""
    return sorted(tuple(sorted(trip + trip)) for trip in slope_triples(max_weight))
