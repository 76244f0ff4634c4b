"""Perfect matching counts: brute force, determinants and continued fractions."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .contfrac import matchings_from_boundary
from .graph import Edge, PlaneGraph, blacken, edge, neighbour_counts, rotate, rotation_roles
from .weighting import bipartite_matrix, weighting_for

Matching = tuple[Edge, ...]


class MatchingError(RuntimeError):
    pass


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("SNAKESPEC_THREADS", "1")))
    except ValueError:
        return 1


def _search(adj: list[list[int]], matched: list[bool], chosen: list[Edge], collect: bool, out: list) -> int:
    try:
        v = matched.index(False)
    except ValueError:
        if collect:
            out.append(tuple(sorted(chosen)))
        return 1
    matched[v] = True
    total = 0
    for u in adj[v]:
        if not matched[u]:
            matched[u] = True
            chosen.append(edge(u, v))
            total += _search(adj, matched, chosen, collect, out)
            chosen.pop()
            matched[u] = False
    matched[v] = False
    return total


def enumerate_matchings(
    g: PlaneGraph, collect: bool = False, threads: Optional[int] = None
) -> tuple[int, Optional[list[Matching]]]:
    """Count perfect matchings by backtracking on the lowest unmatched vertex.

    Returns ``(count, matchings)``; ``matchings`` is ``None`` unless
    ``collect`` is set, in which case it is sorted.  A graph without vertices
    has exactly one (empty) matching.  The first-level branches may run on
    up to ``threads`` workers (default from ``SNAKESPEC_THREADS``).
    """
    n = g.n_vertices
    if n == 0:
        return 1, ([()] if collect else None)
    adj = [sorted(g.neighbours(v)) for v in range(n)]
    workers = threads if threads is not None else _thread_cap()

    def branch(u: int) -> tuple[int, list]:
        matched = [False] * n
        matched[0] = matched[u] = True
        out: list = []
        return _search(adj, matched, [edge(0, u)], collect, out), out

    if workers > 1 and len(adj[0]) > 1:
        with ThreadPoolExecutor(max_workers=min(workers, len(adj[0]))) as pool:
            results = list(pool.map(branch, adj[0]))
    else:
        results = [branch(u) for u in adj[0]]
    count = sum(c for c, _ in results)
    if not collect:
        return count, None
    ms = sorted(m for _, lst in results for m in lst)
    return count, ms


def count_matchings(g: PlaneGraph) -> int:
    return enumerate_matchings(g)[0]


def count_via_determinant(g: PlaneGraph, kind: str = "auto") -> int:
    """``|det B|`` for a Kasteleyn weighting of ``g``."""
    B = bipartite_matrix(g, weighting_for(g, kind))
    if B.nrows != B.ncols:
        raise MatchingError("colour classes differ in size")
    return abs(B.det())


def boundary_counts(g: PlaneGraph) -> dict[str, int]:
    """Continued-fraction counts from both boundaries of ``black(g)``."""
    bg = blacken(g)
    return {side: matchings_from_boundary(neighbour_counts(bg, side)) for side in ("upper", "lower")}


def count_via_contfrac(g: PlaneGraph) -> int:
    counts = boundary_counts(g)
    if counts["upper"] != counts["lower"]:
        raise MatchingError(f"boundaries disagree: {counts}")
    return counts["upper"]


# ---------------------------------------------------------------------------
# Rotation bijection
# ---------------------------------------------------------------------------


def rotation_image(g: PlaneGraph, t: int, m: Matching) -> Matching:
    """Image of a matching of ``g`` in ``rotate(g, t)`` under the explicit bijection."""
    r = rotation_roles(g, t)
    A, B, C, D = r.A, r.B, r.C, r.D
    ms = set(m)
    if edge(A, D) in ms:
        return tuple(sorted(ms))
    if edge(A, B) not in ms:
        raise MatchingError(f"vertex A={A} is matched away from B and D")
    if edge(C, D) in ms:
        return tuple(sorted(ms))
    s = [x for x in r.S if edge(D, x) in ms]
    rj = [x for x in r.R if edge(C, x) in ms]
    if len(s) != 1 or len(rj) != 1:
        raise MatchingError("D or C is not matched into the tail")
    ms -= {edge(A, B), edge(D, s[0]), edge(C, rj[0])}
    ms |= {edge(C, D), edge(A, rj[0]), edge(B, s[0])}
    return tuple(sorted(ms))


def rotation_bijection_check(g: PlaneGraph, t: int) -> bool:
    """Check that the explicit map is a bijection onto the matchings of ``rotate(g, t)``.

    Raises ``MatchingError`` naming the first offending matching.
    """
    h = rotate(g, t)
    _, before = enumerate_matchings(g, collect=True)
    _, after = enumerate_matchings(h, collect=True)
    target = set(after)
    images = set()
    for m in before:
        img = rotation_image(g, t, m)
        if img not in target:
            raise MatchingError(f"image of {list(m)} is not a perfect matching of the rotated graph")
        if img in images:
            raise MatchingError(f"image of {list(m)} repeats an earlier image")
        images.add(img)
    if images != target:
        raise MatchingError("map misses some matchings of the rotated graph")
    return True


def legal_rotations(g: PlaneGraph) -> list[int]:
    out = []
    for t in range(1, g.n_tiles - 1):
        try:
            rotation_roles(g, t)
        except ValueError:
            continue
        out.append(t)
    return out
