"""Shared fixtures: the halving matrix used by several acceptance tests.

The matrix is every affine point of a deterministic curve family
(g in {1, 2, 3} crossed with p in {7, 11, 13}), halved once, with the
wall-clock time recorded so the runtime budget can be asserted.
Computing it once at session scope keeps the acceptance tests that
reuse it (completeness, sign recovery, involution symmetry) cheap.
"""

import time

import pytest

from halfjac.field import ff_make
from halfjac.halving import halve_point, lift_to_sqrt_field
from halfjac.jacobian import curve_make, enumerate_points
from halfjac.theorems import matrix_curves

MATRIX_PRIMES = (7, 11, 13)
MATRIX_CAPS = ((1, 3), (2, 2), (3, 1))      # (genus, curves per prime)

MATRIX = [(g, p, roots)
          for g, cap in MATRIX_CAPS
          for p in MATRIX_PRIMES
          for roots in matrix_curves(g, p, cap)]


@pytest.fixture(scope="session")
def halving_matrix():
    """(entries, elapsed): each entry holds one affine point and its halves.

    Entry keys: g, p, curve, point (base field), curve2, point2 (after
    lifting when needed; identical objects when not), halves (the
    4^g HalfLifts).
    """
    start = time.perf_counter()
    entries = []
    for g, p, roots in MATRIX:
        curve = curve_make(ff_make(p), list(roots))
        for P in enumerate_points(curve)[:-1]:        # infinity is last
            curve2, P2 = lift_to_sqrt_field(curve, P)
            entries.append({"g": g, "p": p, "curve": curve, "point": P,
                            "curve2": curve2, "point2": P2,
                            "halves": halve_point(curve2, P2)})
    return entries, time.perf_counter() - start
