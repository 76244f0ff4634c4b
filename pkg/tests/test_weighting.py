import random

import numpy as np
import pytest

from snakespec.graph import all_words, blacken, build_snake, horizontal
from snakespec.matrix import block_diag
from snakespec.polynomials import charpoly_exact, tridiag_charpoly
from snakespec.weighting import (
    Weighting,
    WeightingError,
    adjacency_matrix,
    bipartite_matrix,
    gauge,
    gauge_signs,
    generic_weighting,
    gram_blocks,
    gram_matrix,
    oriented_adjacency,
    rungs,
    snake_weighting,
    verify_kasteleyn,
    vertex_order,
)

from conftest import permanent_count

EIGHT_TILE = "RRUURRR"


def test_rung_weighting_negates_even_rungs():
    g = build_snake(EIGHT_TILE)
    w = snake_weighting(g)
    rs = rungs(g)
    assert [rs.index(e) + 1 for e in w.negatives()] == [2, 4, 6, 8]
    assert verify_kasteleyn(g, w)


def test_single_tile_weighting_is_valid_without_fallback():
    g = build_snake("")
    w = snake_weighting(g)
    assert len(w.negatives()) == 1
    assert verify_kasteleyn(g, w)


def test_h2_rungs_alternate():
    g = build_snake("R")
    w = snake_weighting(g)
    assert [w[e] for e in rungs(g)] == [1, -1, 1]
    assert all(w[e] == 1 for e in g.edges if e not in rungs(g))


def test_all_plus_fails_on_one_tile():
    g = build_snake("")
    assert not verify_kasteleyn(g, Weighting({e: 1 for e in g.edges}))


def test_flipping_a_boundary_edge_breaks_validity():
    g = build_snake(EIGHT_TILE)
    w = dict(snake_weighting(g).items())
    e = next(e for e in g.edges if e not in rungs(g))
    w[e] = -w[e]
    assert not verify_kasteleyn(g, Weighting(w))


def test_weights_must_be_signs():
    with pytest.raises(WeightingError):
        Weighting({(0, 1): 2})


def test_snake_weighting_rejects_rotated_graphs():
    with pytest.raises(WeightingError):
        snake_weighting(blacken(build_snake("RURU")))


def test_both_constructions_are_kasteleyn_on_all_short_snakes():
    for w in all_words(9):
        g = build_snake(w)
        assert verify_kasteleyn(g, snake_weighting(g))
        assert verify_kasteleyn(g, generic_weighting(g))


def test_generic_weighting_on_fan():
    bg = blacken(build_snake("RURURU"))
    assert verify_kasteleyn(bg, generic_weighting(bg))


def test_generic_and_snake_weightings_are_gauge_equivalent():
    # Two Kasteleyn weightings of a simply connected plane graph differ by a gauge.
    for w in all_words(8):
        g = build_snake(w)
        s = gauge_signs(g, snake_weighting(g), generic_weighting(g))
        assert s is not None
        a1 = adjacency_matrix(g, snake_weighting(g))
        a2 = adjacency_matrix(g, generic_weighting(g))
        assert charpoly_exact(a1) == charpoly_exact(a2)


def test_gauge_is_an_involution_and_keeps_validity():
    g = build_snake(EIGHT_TILE)
    w = snake_weighting(g)
    rng = random.Random(5)
    for v in rng.sample(range(g.n_vertices), 8):
        w2 = gauge(w, g, v)
        assert gauge(w2, g, v) == w
        assert verify_kasteleyn(g, w2)
        assert abs(bipartite_matrix(g, w2).det()) == abs(bipartite_matrix(g, w).det())
    with pytest.raises(WeightingError):
        gauge(w, g, 999)


def test_gauge_orbit_keeps_charpoly():
    g = build_snake("RRURRU")
    w = generic_weighting(g)
    ref = charpoly_exact(adjacency_matrix(g, w))
    rng = random.Random(9)
    for _ in range(10):
        for v in rng.sample(range(g.n_vertices), rng.randint(1, 5)):
            w = gauge(w, g, v)
        assert charpoly_exact(adjacency_matrix(g, w)) == ref


# -- matrices ---------------------------------------------------------------------


def test_h1_matrices():
    g = build_snake("")
    w = snake_weighting(g)
    A = adjacency_matrix(g, w)
    B = bipartite_matrix(g, w)
    assert A.shape == (4, 4) and B.shape == (2, 2)
    assert abs(A.det()) == 4
    assert abs(B.det()) == 2


def test_adjacency_is_symmetric_with_zero_diagonal_and_block_form():
    for word in ["", "R", EIGHT_TILE, "RURURU", "UURUR"]:
        g = build_snake(word)
        w = snake_weighting(g)
        A = adjacency_matrix(g, w)
        B = bipartite_matrix(g, w)
        nb = B.nrows
        assert A.is_symmetric() and all(A[i, i] == 0 for i in range(A.nrows))
        assert set(v for r in A.rows for v in r) <= {-1, 0, 1}
        for i in range(A.nrows):
            for j in range(A.ncols):
                if i < nb and j >= nb:
                    assert A[i, j] == B[i, j - nb]
                elif (i < nb) == (j < nb):
                    assert A[i, j] == 0


def test_oriented_adjacency():
    g = build_snake("RRRRR")
    w = snake_weighting(g)
    At = oriented_adjacency(g, w)
    assert At.is_skew()
    assert At.det() == 441
    assert At.det() == gram_matrix(g, w).det()


def test_kasteleyn_determinants_on_mixed_and_rotated_graphs():
    for word in all_words(7):
        g = build_snake(word)
        m = permanent_count(word)
        for h in (g, blacken(g)):
            w = generic_weighting(h)
            assert abs(bipartite_matrix(h, w).det()) == m
            assert abs(adjacency_matrix(h, w).det()) == m * m
            assert oriented_adjacency(h, w).det() == m * m


def test_charpoly_of_a_is_charpoly_of_gram_in_t_squared():
    for word in ["", "R", "RR", EIGHT_TILE, "RURURU", "RRUURRUU", "URURR"]:
        g = build_snake(word)
        w = snake_weighting(g)
        assert charpoly_exact(adjacency_matrix(g, w)) == charpoly_exact(gram_matrix(g, w)).substitute_square()


# -- gram blocks --------------------------------------------------------------------


def test_h2_gram_blocks():
    g = build_snake("R")
    gb = gram_blocks(g, snake_weighting(g))
    assert sorted([gb.upper_diagonal, gb.lower_diagonal]) == [[2, 2], [3]]


def test_eight_tile_gram_blocks():
    g = build_snake(EIGHT_TILE)
    gb = gram_blocks(g, snake_weighting(g))
    assert gb.lower_diagonal == [3, 2, 4, 3]
    assert gb.upper_diagonal == [2, 4, 2, 3, 2]
    assert tridiag_charpoly(gb.lower_diagonal).to_text() == "x^4-12x^3+50x^2-84x+46"


def test_gram_blocks_reject_mixed_turns_and_bad_weights():
    g = build_snake("RURURU")
    with pytest.raises(WeightingError):
        gram_blocks(g, generic_weighting(g))
    g = build_snake(EIGHT_TILE)
    with pytest.raises(WeightingError):
        gram_blocks(g, Weighting({e: 1 for e in g.edges}))


def test_gram_blocks_on_random_black_turn_snakes():
    rng = random.Random(2024)
    seen = 0
    while seen < 200:
        word = "".join(rng.choice("RU") for _ in range(rng.randint(0, 9)))
        g = blacken(build_snake(word))
        w = generic_weighting(g)
        gb = gram_blocks(g, w)  # raises if any upper/lower entry is non-zero
        blacks, _ = vertex_order(g)
        assert list(gb.upper_blacks + gb.lower_blacks) == blacks
        for blk in (gb.B1, gb.B2):
            assert blk.is_symmetric()
            n = blk.nrows
            assert all(blk[i, i + 1] == 1 for i in range(n - 1))
        # the direct sum is a signed permutation-similarity of B B^T
        M = gram_matrix(g, w)
        signs = dict(gb.signs)
        D = [signs[v] for v in blacks]
        conj = [[D[i] * D[j] * M[i, j] for j in range(len(blacks))] for i in range(len(blacks))]
        assert tuple(map(tuple, conj)) == block_diag(gb.B1, gb.B2).rows
        seen += 1


@pytest.mark.parametrize("word", ["R", "RRRRR", EIGHT_TILE, "RRRRUUU"])
def test_eigenvectors_of_a_from_gram_blocks(word):
    g = build_snake(word)
    w = snake_weighting(g)
    B = np.array(bipartite_matrix(g, w).rows, dtype=float)
    A = np.array(adjacency_matrix(g, w).rows, dtype=float)
    lam, V = np.linalg.eigh(B @ B.T)
    for k in range(len(lam)):
        t = np.sqrt(max(lam[k], 0.0))
        v = V[:, k]
        for sign in (1, -1):
            u = np.concatenate([sign * t * v, B.T @ v])
            assert np.abs(A @ u - sign * t * u).max() <= 1e-8 * np.abs(u).max()


@pytest.mark.parametrize("n", range(1, 11))
def test_horizontal_spectrum_formula(n):
    import math

    g = build_snake(horizontal(n))
    gb = gram_blocks(g, snake_weighting(g))
    p = tridiag_charpoly(gb.upper_diagonal) * tridiag_charpoly(gb.lower_diagonal)
    for l in range(1, n + 2):
        assert abs(p(4 * math.cos(l * math.pi / (n + 2)) ** 2 + 1)) <= 1e-6
