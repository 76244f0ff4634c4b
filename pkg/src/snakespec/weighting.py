"""Kasteleyn sign weightings and the matrices built from them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .graph import Edge, GraphError, PlaneGraph, boundaries, edge, monochromatic_turns, shared_edges, tile_edges
from .matrix import IntMatrix


class WeightingError(ValueError):
    pass


class Weighting(Mapping):
    """Immutable map from edges to signs ``+1`` / ``-1``."""

    __slots__ = ("_w",)

    def __init__(self, weights: Mapping[Edge, int]):
        w = {}
        for (u, v), s in weights.items():
            if s not in (1, -1):
                raise WeightingError(f"weight of edge {(u, v)} must be +1 or -1, got {s}")
            w[edge(u, v)] = int(s)
        self._w = w

    def __getitem__(self, e: Edge) -> int:
        return self._w[edge(*e)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self._w))

    def __len__(self) -> int:
        return len(self._w)

    def __eq__(self, other):
        if isinstance(other, Weighting):
            return self._w == other._w
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._w.items()))

    def negatives(self) -> list[Edge]:
        return sorted(e for e, s in self._w.items() if s < 0)

    def to_json(self) -> list[dict]:
        return [{"edge": list(e), "weight": self._w[e]} for e in sorted(self._w)]

    def __repr__(self):
        return f"Weighting(negative={self.negatives()})"


def _check_total(g: PlaneGraph, w: Mapping[Edge, int]) -> None:
    if set(w) != set(g.edges):
        raise WeightingError("weighting is not defined on exactly the edges of the graph")


def rungs(g: PlaneGraph) -> list[Edge]:
    """Start edge, the glued edges in tile order, then the end edge."""
    b = boundaries(g)
    return [b.start_edge, *shared_edges(g), b.end_edge]


def snake_weighting(g: PlaneGraph) -> Weighting:
    """Boundary edges get +1; the rungs alternate +1, -1, ... from the start edge."""
    if g.generalised:
        raise WeightingError("the alternating rung weighting needs an unrotated snake graph")
    b = boundaries(g)
    w: dict[Edge, int] = {}
    for e in b.path_edges(b.upper) + b.path_edges(b.lower):
        w[e] = 1
    rs = rungs(g)
    if set(rs) & set(w) or len(set(rs)) != len(rs):
        raise WeightingError("rungs overlap the boundary paths")
    for i, e in enumerate(rs):
        w[e] = 1 if i % 2 == 0 else -1
    _check_total(g, w)
    return Weighting(w)


def _face_ok(k: int, negatives: int) -> bool:
    if k % 4 == 0:
        return negatives % 2 == 1
    if k % 4 == 2:
        return negatives % 2 == 0
    raise WeightingError(f"a bipartite graph cannot have a {k}-gon face")


def face_report(g: PlaneGraph, w: Mapping[Edge, int]) -> list[tuple[str, int, int, bool]]:
    """Per-face ``(name, size, negative count, ok)`` rows; the outer face is last."""
    _check_total(g, w)
    rows = []
    for i, t in enumerate(g.tiles):
        neg = sum(w[e] < 0 for e in tile_edges(t))
        rows.append((f"tile {i}", 4, neg, _face_ok(4, neg)))
    outer = g.outer_face()
    k = len(outer)
    neg = sum(w[edge(outer[i], outer[(i + 1) % k])] < 0 for i in range(k))
    rows.append(("outer", k, neg, _face_ok(k, neg)))
    return rows


def verify_kasteleyn(g: PlaneGraph, w: Mapping[Edge, int]) -> bool:
    return all(ok for *_, ok in face_report(g, w))


def generic_weighting(g: PlaneGraph) -> Weighting:
    """Kasteleyn weighting from a spanning tree of the dual graph.

    Start from all +1.  Walk a breadth-first tree of the dual rooted at the
    outer face and, leaves first, flip the tree edge above each tile whose
    parity is wrong.  The outer face then comes out right by a parity count
    whenever the vertex count is even.
    """
    if g.n_vertices % 2:
        raise WeightingError("odd vertex count: no Kasteleyn weighting fixes every face")
    OUTER = -1
    faces_of: dict[Edge, list[int]] = {e: [] for e in g.edges}
    for i, t in enumerate(g.tiles):
        for e in tile_edges(t):
            faces_of[e].append(i)
    for e, fs in faces_of.items():
        if len(fs) == 1:
            fs.append(OUTER)
        elif len(fs) != 2:
            raise WeightingError(f"edge {e} borders {len(fs)} tiles")
    adj: dict[int, list[tuple[int, Edge]]] = {OUTER: []}
    for i in range(g.n_tiles):
        adj[i] = []
    for e in sorted(faces_of):
        a, b = faces_of[e]
        adj[a].append((b, e))
        adj[b].append((a, e))

    parent: dict[int, Optional[Edge]] = {OUTER: None}
    order = []
    queue = deque([OUTER])
    while queue:
        f = queue.popleft()
        order.append(f)
        for h, e in adj[f]:
            if h not in parent:
                parent[h] = e
                queue.append(h)
    if len(parent) != g.n_tiles + 1:
        raise WeightingError("dual graph is disconnected")

    w = {e: 1 for e in g.edges}
    for f in reversed(order):
        if f == OUTER:
            continue
        neg = sum(w[e] < 0 for e in tile_edges(g.tiles[f]))
        if neg % 2 == 0:
            w[parent[f]] = -w[parent[f]]
    result = Weighting(w)
    if not verify_kasteleyn(g, result):
        raise WeightingError("face data inconsistent: outer face parity could not be met")
    return result


def gauge(w: Weighting, g: PlaneGraph, v: int) -> Weighting:
    """Flip the sign of every edge at ``v``."""
    if not 0 <= v < g.n_vertices:
        raise WeightingError(f"unknown vertex {v}")
    out = dict((e, w[e]) for e in w)
    for u in g.neighbours(v):
        e = edge(u, v)
        out[e] = -out[e]
    return Weighting(out)


def gauge_signs(g: PlaneGraph, w1: Mapping[Edge, int], w2: Mapping[Edge, int]) -> Optional[dict[int, int]]:
    """Vertex signs ``s`` with ``w2(u,v) = s(u) s(v) w1(u,v)``, or ``None``."""
    s: dict[int, int] = {}
    for root in range(g.n_vertices):
        if root in s:
            continue
        s[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbours(u):
                want = s[u] * w1[edge(u, v)] * w2[edge(u, v)]
                if v not in s:
                    s[v] = want
                    queue.append(v)
                elif s[v] != want:
                    return None
    return s


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


def vertex_order(g: PlaneGraph) -> tuple[list[int], list[int]]:
    """Black vertices along the upper then lower boundary, then whites by id."""
    b = boundaries(g)
    blacks = []
    for v in b.upper + b.lower:
        if g.black[v] and v not in blacks:
            blacks.append(v)
    blacks += [v for v in g.black_vertices() if v not in blacks]
    return blacks, g.white_vertices()


def adjacency_matrix(g: PlaneGraph, w: Mapping[Edge, int]) -> IntMatrix:
    _check_total(g, w)
    blacks, whites = vertex_order(g)
    order = blacks + whites
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    rows = [[0] * n for _ in range(n)]
    for (u, v) in g.edges:
        rows[idx[u]][idx[v]] = rows[idx[v]][idx[u]] = w[(u, v)]
    return IntMatrix.from_rows(rows, order, order)


def bipartite_matrix(g: PlaneGraph, w: Mapping[Edge, int]) -> IntMatrix:
    _check_total(g, w)
    blacks, whites = vertex_order(g)
    col = {v: j for j, v in enumerate(whites)}
    rows = [[0] * len(whites) for _ in blacks]
    for i, b in enumerate(blacks):
        for u in g.neighbours(b):
            rows[i][col[u]] = w[edge(b, u)]
    return IntMatrix.from_rows(rows, blacks, whites)


def oriented_adjacency(g: PlaneGraph, w: Mapping[Edge, int]) -> IntMatrix:
    """Skew matrix ``[[0, B], [-B^T, 0]]``: edges oriented black to white."""
    B = bipartite_matrix(g, w)
    nb, nw = B.shape
    n = nb + nw
    rows = [[0] * n for _ in range(n)]
    for i in range(nb):
        for j in range(nw):
            rows[i][nb + j] = B[i, j]
            rows[nb + j][i] = -B[i, j]
    labels = list(B.row_labels) + list(B.col_labels)
    return IntMatrix.from_rows(rows, labels, labels)


def gram_matrix(g: PlaneGraph, w: Mapping[Edge, int]) -> IntMatrix:
    B = bipartite_matrix(g, w)
    return B @ B.T


@dataclass(frozen=True)
class GramBlocks:
    """Tridiagonal blocks of ``B B^T`` for the upper and lower black vertices.

    ``signs`` records the diagonal +-1 change of basis on black vertices that
    turns every off-diagonal entry into +1.
    """

    B1: IntMatrix
    B2: IntMatrix
    upper_blacks: tuple[int, ...]
    lower_blacks: tuple[int, ...]
    signs: tuple[tuple[int, int], ...]

    @property
    def upper_diagonal(self) -> list[int]:
        return [self.B1[i, i] for i in range(self.B1.nrows)]

    @property
    def lower_diagonal(self) -> list[int]:
        return [self.B2[i, i] for i in range(self.B2.nrows)]

    def diagonal(self, side: str) -> list[int]:
        if side == "upper":
            return self.upper_diagonal
        if side == "lower":
            return self.lower_diagonal
        raise WeightingError(f"side must be 'upper' or 'lower', not {side!r}")

    def to_json(self) -> dict:
        return {
            "upper": self.B1.to_json(),
            "lower": self.B2.to_json(),
            "signs": {str(v): s for v, s in self.signs},
        }


def _normalised_block(M: IntMatrix, idx: list[int], labels: list[int]) -> tuple[IntMatrix, list[int]]:
    n = len(idx)
    block = [[M[idx[i], idx[j]] for j in range(n)] for i in range(n)]
    signs = [1] * n
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and block[i][j] != 0:
                raise WeightingError("block of B B^T is not tridiagonal")
        if i + 1 < n:
            if abs(block[i][i + 1]) != 1:
                raise WeightingError("off-diagonal entry of B B^T is not +-1")
            signs[i + 1] = signs[i] * block[i][i + 1]
    rows = [[signs[i] * signs[j] * block[i][j] for j in range(n)] for i in range(n)]
    return IntMatrix.from_rows(rows, labels, labels), signs


def gram_blocks(g: PlaneGraph, w: Mapping[Edge, int]) -> GramBlocks:
    colour = monochromatic_turns(g)
    if colour not in ("black", "none"):
        raise WeightingError(f"Gram blocks need black turns; turns are {colour}")
    if not verify_kasteleyn(g, w):
        raise WeightingError("weighting is not Kasteleyn")
    b = boundaries(g)
    up = [v for v in b.upper if g.black[v]]
    low = [v for v in b.lower if g.black[v]]
    blacks, _ = vertex_order(g)
    if len(up) + len(low) != len(blacks):
        raise WeightingError("black vertices off the boundary paths")
    M = gram_matrix(g, w)
    pos = {v: i for i, v in enumerate(blacks)}
    iu = [pos[v] for v in up]
    il = [pos[v] for v in low]
    for i in iu:
        for j in il:
            if M[i, j] != 0:
                raise WeightingError("upper and lower black vertices interact in B B^T")
    B1, s1 = _normalised_block(M, iu, up)
    B2, s2 = _normalised_block(M, il, low)
    for blk, vs in ((B1, up), (B2, low)):
        for i, v in enumerate(vs):
            if blk[i, i] != g.degree(v):
                raise GraphError("diagonal of B B^T differs from the vertex degree")
    signs = tuple(zip(up, s1)) + tuple(zip(low, s2))
    return GramBlocks(B1, B2, tuple(up), tuple(low), signs)


def weighting_for(g: PlaneGraph, kind: str = "auto") -> Weighting:
    """``snake`` (alternating rungs), ``generic`` (dual tree) or ``auto``."""
    if kind == "auto":
        kind = "generic" if g.generalised else "snake"
    if kind == "snake":
        return snake_weighting(g)
    if kind == "generic":
        return generic_weighting(g)
    raise WeightingError(f"unknown weighting kind {kind!r}")
