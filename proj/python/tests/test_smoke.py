"""Smoke tests for the _mfill extension module."""

import math
import sys

import _mfill as mfill


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    square = mfill.square_ball()
    assert mfill.self_perimeter(square) == "8"
    assert mfill.gauge(square, "3", "4") == "4"

    hexagon = mfill.hexagon_ball()
    assert mfill.self_perimeter(hexagon) == "6"

    lo, hi = mfill.jung_constant(square)
    assert lo == 1.0 and hi == 1.0
    alo, ahi = mfill.alpha_v(square)
    assert approx(alo, 0.125) and approx(ahi, 0.125)

    lo, hi = mfill.jung_constant(hexagon)
    assert approx(lo, 4.0 / 3.0, 1e-9) and approx(hi, 4.0 / 3.0, 1e-9)

    assert approx(mfill.isoperimetric_ratio(square, "ht"), 1.0 / (4 * math.pi), 1e-12)
    assert approx(mfill.isoperimetric_ratio(square, "m*"), 0.125, 1e-12)
    assert mfill.area_density(square, "ht") <= mfill.area_density(square, "b") + 1e-12

    # Hyperbolicity: a path is a tree; the 4-cycle has delta 1/2.
    path_edges = [(i, i + 1, 1.0) for i in range(5)]
    assert mfill.graph_four_point_delta(6, path_edges) == 0.0
    c4 = [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)]
    assert approx(mfill.graph_four_point_delta(4, c4), 0.5)

    # Kuratowski embedding is an isometry.
    d = [[0.0, 5.0], [5.0, 0.0]]
    coords = mfill.kuratowski_embed(d)
    assert coords[1] == [5.0, -5.0]

    # Cayley balls.
    assert mfill.cayley_ball_size(["a", "b"], ["abAB"], 3) == 25
    assert mfill.cayley_ball_size(["a", "b"], [], 2) == 17

    # Fillings.
    assert mfill.octahedron_equator_fill() == 4.0
    tri = [[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]
    assert approx(mfill.rips_filling_radius(tri, [0, 1, 2]), 0.5)

    # H_lambda on a small grid loop.
    n = 9
    edges = []
    for j in range(3):
        for i in range(3):
            if i + 1 < 3:
                edges.append((j * 3 + i, j * 3 + i + 1, 1.0))
            if j + 1 < 3:
                edges.append((j * 3 + i, (j + 1) * 3 + i, 1.0))
    loop = [0, 1, 2, 5, 8, 7, 6, 3]
    value = mfill.h_lambda_estimate(n, edges, loop, 8.0, 2.0, 3)
    assert value >= 0.4

    print("python smoke tests passed ({})".format(mfill.__version__))
    return 0


if __name__ == "__main__":
    sys.exit(main())
