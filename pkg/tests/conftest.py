"""Independent oracles shared by the test modules.

Nothing here imports the package's graph code: snake graphs are rebuilt from
grid coordinates and matchings are counted through a permanent.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import pytest

# Fibonacci numbers F_0..F_24 as a plain table.
FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597,
       2584, 4181, 6765, 10946, 17711, 28657, 46368]


def grid_snake(word: str):
    """Vertex coordinates and unit edges of the snake graph of ``word``."""
    x = y = 0
    cells = [(0, 0)]
    for d in word:
        if d == "R":
            x += 1
        else:
            y += 1
        cells.append((x, y))
    pts = set()
    edges = set()
    for cx, cy in cells:
        corners = [(cx, cy), (cx + 1, cy), (cx + 1, cy + 1), (cx, cy + 1)]
        pts.update(corners)
        for i in range(4):
            a, b = corners[i], corners[(i + 1) % 4]
            edges.add((min(a, b), max(a, b)))
    return sorted(pts), sorted(edges), cells


def permanent_count(word: str) -> int:
    """Perfect matchings via the permanent of the 0/1 biadjacency matrix (bitmask DP)."""
    pts, edges, _ = grid_snake(word)
    even = [p for p in pts if (p[0] + p[1]) % 2 == 0]
    odd = [p for p in pts if (p[0] + p[1]) % 2 == 1]
    if len(even) != len(odd):
        return 0
    col = {p: j for j, p in enumerate(odd)}
    nbr = [0] * len(even)
    ei = {p: i for i, p in enumerate(even)}
    for a, b in edges:
        if a in ei:
            nbr[ei[a]] |= 1 << col[b]
        else:
            nbr[ei[b]] |= 1 << col[a]

    @lru_cache(maxsize=None)
    def perm(i: int, used: int) -> int:
        if i == len(even):
            return 1
        total = 0
        free = nbr[i] & ~used
        while free:
            bit = free & -free
            total += perm(i + 1, used | bit)
            free ^= bit
        return total

    return perm(0, 0)


def sign_function_sequence(word: str) -> list[int]:
    """Run lengths of the internal-edge sign sequence of a snake graph.

    Internal edges are the first tile's south edge, the glued edges, and the
    last tile's north edge.  Within a tile south and east carry one sign,
    north and west the opposite one; the first edge is positive.
    """
    signs = [1]
    incoming = "S"
    for i in range(len(word) + 1):
        outgoing = "N" if i == len(word) else ("E" if word[i] == "R" else "N")
        same_class = (incoming in "SE") == (outgoing in "SE")
        signs.append(signs[-1] if same_class else -signs[-1])
        incoming = "W" if outgoing == "E" else "S"
    runs = []
    for s in signs:
        if runs and runs[-1][0] == s:
            runs[-1][1] += 1
        else:
            runs.append([s, 1])
    return [r for _, r in runs]


@pytest.fixture(scope="session")
def fib():
    return FIB


def eigen_residual(diagonal, chis, lam) -> float:
    """``max|Mv - lam v| / max|v|`` for ``v_k = chi_k(lam)``, with ``chi_k`` evaluated exactly."""
    import numpy as np

    M = np.array([[diagonal[i] if i == j else (1 if abs(i - j) == 1 else 0)
                   for j in range(len(diagonal))] for i in range(len(diagonal))], dtype=float)
    lam = Fraction(lam)
    v = np.array([float(chis[k](lam)) for k in range(len(diagonal))])
    return float(np.abs(M @ v - float(lam) * v).max() / np.abs(v).max())
