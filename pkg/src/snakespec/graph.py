"""Snake graphs, their special vertices and edges, and tile rotations.

A snake graph is described by a direction word over ``{R, U}``.  Tile 0 has
its lower-left corner at the origin; each letter places the next tile to the
right (``R``) or on top (``U``) of the current one.  Tiles are stored as
vertex 4-tuples in counter-clockwise order starting from the lower-left
corner, ``(LL, LR, UR, UL)``.  Rotations relabel tile corners but keep the
tuples counter-clockwise, so the planar embedding can always be rebuilt from
the tiles alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

Colour = Literal["black", "white"]
TurnColour = Literal["black", "white", "mixed", "none"]
Edge = tuple[int, int]
Tile = tuple[int, int, int, int]

LL, LR, UR, UL = range(4)


class GraphError(ValueError):
    """Raised for malformed graphs and illegal graph operations."""


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def tile_edges(tile: Tile) -> list[Edge]:
    return [edge(tile[i], tile[(i + 1) % 4]) for i in range(4)]


# ---------------------------------------------------------------------------
# Direction words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnakeWord:
    """Direction word of a snake graph; ``len(dirs) + 1`` tiles."""

    dirs: str = ""

    def __post_init__(self):
        bad = set(self.dirs) - {"R", "U"}
        if bad:
            raise GraphError(f"direction word may only contain R and U, got {sorted(bad)}")

    @classmethod
    def parse(cls, text: str) -> "SnakeWord":
        text = text.strip().upper()
        if text in ('""', "''", "."):
            text = ""
        return cls(text)

    @property
    def n_tiles(self) -> int:
        return len(self.dirs) + 1

    def __str__(self):
        return self.dirs


def horizontal(n: int) -> SnakeWord:
    """``H_n``: ``n`` tiles in a row."""
    if n < 1:
        raise GraphError("H_n needs n >= 1")
    return SnakeWord("R" * (n - 1))


def l_shaped(r: int, s: int) -> SnakeWord:
    """``r`` tiles to the right, then ``s - 1`` further tiles upwards."""
    if r < 1 or s < 1:
        raise GraphError("L-shaped snakes need r, s >= 1")
    return SnakeWord("R" * (r - 1) + "U" * (s - 1))


def staircase(m: int, n: int) -> SnakeWord:
    """``S_{m,n}``: ``m`` alternating straight runs ``R^{n-1}``, ``U^{n-1}``, ..."""
    if m < 1 or n < 2:
        raise GraphError("staircase needs m >= 1 and n >= 2")
    return SnakeWord("".join(("R" if i % 2 == 0 else "U") * (n - 1) for i in range(m)))


# ---------------------------------------------------------------------------
# Plane graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneGraph:
    """Snake or generalised snake graph with its planar embedding.

    ``rotation_system[v]`` lists the neighbours of ``v`` in counter-clockwise
    order.  ``upper_start`` is the endpoint of the start edge through which
    the upper boundary leaves the start edge.  Coordinates are exact for
    snake graphs and only indicative once a rotation has been applied.
    """

    coords: tuple[tuple[int, int], ...]
    black: tuple[bool, ...]
    tiles: tuple[Tile, ...]
    upper_start: int
    word: Optional[str] = None
    generalised: bool = False
    edges: frozenset = field(init=False, repr=False, compare=False)
    rotation_system: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nv = len(self.coords)
        if len(self.black) != nv:
            raise GraphError("colour table does not match vertex count")
        if not self.tiles:
            raise GraphError("a graph needs at least one tile")
        for t in self.tiles:
            if len(t) != 4 or len(set(t)) != 4 or not all(0 <= v < nv for v in t):
                raise GraphError(f"malformed tile {t}")
        es = frozenset(e for t in self.tiles for e in tile_edges(t))
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "rotation_system", _rotation_system(nv, self.tiles))

    # -- basic queries ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.coords)

    @property
    def n_tiles(self) -> int:
        return len(self.tiles)

    def colour(self, v: int) -> Colour:
        return "black" if self.black[v] else "white"

    def black_vertices(self) -> list[int]:
        return [v for v in range(self.n_vertices) if self.black[v]]

    def white_vertices(self) -> list[int]:
        return [v for v in range(self.n_vertices) if not self.black[v]]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.rotation_system[v]

    def degree(self, v: int) -> int:
        return len(self.rotation_system[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def tile_count(self) -> list[int]:
        """Number of tiles containing each vertex."""
        counts = [0] * self.n_vertices
        for t in self.tiles:
            for v in t:
                counts[v] += 1
        return counts

    def edge_tile_count(self) -> dict[Edge, int]:
        counts: dict[Edge, int] = {}
        for t in self.tiles:
            for e in tile_edges(t):
                counts[e] = counts.get(e, 0) + 1
        return counts

    def shared_edge(self, i: int, j: int) -> Optional[Edge]:
        """The edge common to tiles ``i`` and ``j``, if any."""
        ei = set(tile_edges(self.tiles[i]))
        common = [e for e in tile_edges(self.tiles[j]) if e in ei]
        if len(common) > 1:
            raise GraphError(f"tiles {i} and {j} share more than one edge")
        return common[0] if common else None

    def is_bipartite(self) -> bool:
        return all(self.black[u] != self.black[v] for u, v in self.edges)

    # -- embedding checks ------------------------------------------------

    def faces(self) -> list[list[int]]:
        """All faces of the embedding as vertex cycles, traced from darts."""
        rs = self.rotation_system
        pos = [{w: i for i, w in enumerate(r)} for r in rs]
        seen: set[tuple[int, int]] = set()
        faces = []
        for u, v in sorted(self.edges):
            for dart in ((u, v), (v, u)):
                if dart in seen:
                    continue
                cycle = []
                a, b = dart
                while (a, b) not in seen:
                    seen.add((a, b))
                    cycle.append(a)
                    ring = rs[b]
                    a, b = b, ring[(pos[b][a] - 1) % len(ring)]
                faces.append(cycle)
        return faces

    def outer_face(self) -> list[int]:
        tile_cycles = {_canonical_cycle(t) for t in self.tiles}
        outer = [f for f in self.faces() if _canonical_cycle(f) not in tile_cycles]
        if len(outer) != 1:
            raise GraphError(f"expected one non-tile face, found {len(outer)}")
        return outer[0]

    def validate(self) -> None:
        """Check bipartiteness, colour balance, tile gluing and the embedding."""
        if not self.is_bipartite():
            raise GraphError("graph is not properly 2-coloured")
        nb = sum(self.black)
        if 2 * nb != self.n_vertices:
            raise GraphError("colour classes have different sizes")
        for i in range(self.n_tiles - 1):
            if self.shared_edge(i, i + 1) is None:
                raise GraphError(f"tiles {i} and {i + 1} are not glued along an edge")
        fs = self.faces()
        tile_cycles = sorted(_canonical_cycle(t) for t in self.tiles)
        traced = sorted(_canonical_cycle(f) for f in fs)
        if any(c not in traced for c in tile_cycles) or len(fs) != self.n_tiles + 1:
            raise GraphError("bounded faces of the embedding are not the tiles")
        if self.n_vertices - len(self.edges) + len(fs) != 2:
            raise GraphError("embedding violates Euler's formula")
        outer = self.outer_face()
        outer_edges = {edge(outer[i], outer[(i + 1) % len(outer)]) for i in range(len(outer))}
        single = {e for e, c in self.edge_tile_count().items() if c == 1}
        if outer_edges != single or len(outer) != len(single):
            raise GraphError("outer face is not the cycle of unshared edges")

    # -- serialisation ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "generalised": self.generalised,
            "vertices": [
                {"id": v, "x": x, "y": y, "colour": self.colour(v)}
                for v, (x, y) in enumerate(self.coords)
            ],
            "edges": [list(e) for e in self.sorted_edges()],
            "tiles": [list(t) for t in self.tiles],
            "upper_start": self.upper_start,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "PlaneGraph":
        verts = sorted(data["vertices"], key=lambda d: d["id"])
        if [d["id"] for d in verts] != list(range(len(verts))):
            raise GraphError("vertex ids must be 0..n-1")
        for d in verts:
            if d["colour"] not in ("black", "white"):
                raise GraphError(f"unknown colour {d['colour']!r}")
        g = cls(
            coords=tuple((int(d["x"]), int(d["y"])) for d in verts),
            black=tuple(d["colour"] == "black" for d in verts),
            tiles=tuple(tuple(int(v) for v in t) for t in data["tiles"]),
            upper_start=int(data["upper_start"]),
            word=data.get("word"),
            generalised=bool(data.get("generalised", False)),
        )
        if "edges" in data:
            listed = {edge(int(u), int(v)) for u, v in data["edges"]}
            if listed != set(g.edges):
                raise GraphError("edge list does not match the tiles")
        g.validate()
        return g

    @classmethod
    def loads(cls, text: str) -> "PlaneGraph":
        return cls.from_json(json.loads(text))

    def to_dot(self, weights: Optional[dict] = None) -> str:
        lines = ["graph snake {", "  node [shape=circle, width=0.3, fixedsize=true];"]
        for v, (x, y) in enumerate(self.coords):
            style = "fillcolor=black, fontcolor=white" if self.black[v] else "fillcolor=white"
            lines.append(f'  {v} [pos="{x},{y}!", style=filled, {style}];')
        for u, v in self.sorted_edges():
            attr = ""
            if weights is not None:
                w = weights[(u, v)]
                attr = f' [label="{w:+d}"' + (", style=dashed" if w < 0 else "") + "]"
            lines.append(f"  {u} -- {v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def _rotation_system(nv: int, tiles: Sequence[Tile]) -> tuple[tuple[int, ...], ...]:
    # Around v, a counter-clockwise tile (u, v, w) occupies the wedge that
    # turns from w to u; chaining the wedges gives the cyclic order.
    succ: list[dict[int, int]] = [dict() for _ in range(nv)]
    for t in tiles:
        for i in range(4):
            u, v, w = t[i - 1], t[i], t[(i + 1) % 4]
            if w in succ[v]:
                raise GraphError(f"two tiles claim the same corner wedge at vertex {v}")
            succ[v][w] = u
    order = []
    for v in range(nv):
        s = succ[v]
        if not s:
            raise GraphError(f"vertex {v} lies on no tile")
        nbrs = set(s) | set(s.values())
        starts = [w for w in s if w not in set(s.values())]
        if len(starts) > 1:
            raise GraphError(f"vertex {v} touches the outer face more than once")
        cur = starts[0] if starts else min(s)
        ring = [cur]
        while cur in s and s[cur] != ring[0]:
            cur = s[cur]
            ring.append(cur)
        if set(ring) != nbrs or len(ring) != len(nbrs):
            raise GraphError(f"inconsistent wedges at vertex {v}")
        order.append(tuple(ring))
    return tuple(order)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _tile_origins(dirs: str) -> list[tuple[int, int]]:
    x = y = 0
    origins = [(0, 0)]
    for d in dirs:
        if d == "R":
            x += 1
        else:
            y += 1
        origins.append((x, y))
    return origins


def build_snake(spec: SnakeWord | str) -> PlaneGraph:
    """Build the snake graph of a direction word on the integer grid.

    Vertices are numbered in order of first appearance along the tiles.
    The colouring is the parity of ``x + y``; when all turns share a colour
    that colour is declared black, otherwise the origin is black.
    """
    if isinstance(spec, str):
        spec = SnakeWord.parse(spec)
    ids: dict[tuple[int, int], int] = {}
    tiles = []
    for ox, oy in _tile_origins(spec.dirs):
        corners = [(ox, oy), (ox + 1, oy), (ox + 1, oy + 1), (ox, oy + 1)]
        tile = []
        for p in corners:
            if p not in ids:
                ids[p] = len(ids)
            tile.append(ids[p])
        tiles.append(tuple(tile))
    coords = tuple(sorted(ids, key=ids.get))
    first = tiles[0]
    upper_start = first[LL] if spec.dirs[:1] == "U" else first[UL]
    even_black = tuple((x + y) % 2 == 0 for x, y in coords)
    g = PlaneGraph(coords, even_black, tuple(tiles), upper_start, word=spec.dirs)
    if monochromatic_turns(g) == "white":
        g = PlaneGraph(coords, tuple(not b for b in even_black), g.tiles, upper_start, word=spec.dirs)
    return g


# ---------------------------------------------------------------------------
# Turns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TurnReport:
    turns: tuple[tuple[int, int], ...]
    turning_tiles: tuple[int, ...]
    monochromatic: bool
    turn_colour: TurnColour

    def to_json(self) -> dict:
        return {
            "turns": [{"vertex": v, "arity": a} for v, a in self.turns],
            "turning_tiles": list(self.turning_tiles),
            "monochromatic": self.monochromatic,
            "turn_colour": self.turn_colour,
        }


def _snake_turns(g: PlaneGraph) -> list[int]:
    first, last = g.tiles[0], g.tiles[-1]
    excluded = {first[LL], first[LR], first[UL], last[UL], last[UR], last[LR]}
    return [v for v in range(g.n_vertices) if g.degree(v) in (2, 4) and v not in excluded]


def _generalised_turns(g: PlaneGraph) -> list[int]:
    counts = g.tile_count()
    end_vertices = set(g.tiles[0]) | set(g.tiles[-1])
    turns = {v for v in range(g.n_vertices) if counts[v] >= 3}
    for t in g.tiles:
        for i, v in enumerate(t):
            if v in turns and counts[v] >= 3:
                opp = t[(i + 2) % 4]
                if counts[opp] == 1 and opp not in end_vertices:
                    turns.add(opp)
    return sorted(turns)


def turn_vertices(g: PlaneGraph, rule: Optional[str] = None) -> list[int]:
    """Turn vertices by the degree rule (``"snake"``) or tile rule (``"generalised"``).

    By default the degree rule is used for grid snakes and the tile-membership
    rule after rotations.
    """
    if rule is None:
        rule = "generalised" if g.generalised else "snake"
    if rule == "snake":
        if g.generalised:
            raise GraphError("the degree rule only applies to snake graphs")
        return _snake_turns(g)
    if rule == "generalised":
        return _generalised_turns(g)
    raise GraphError(f"unknown turn rule {rule!r}")


def _colour_class(colours: Iterable[bool]) -> TurnColour:
    cs = set(colours)
    if not cs:
        return "none"
    if len(cs) == 2:
        return "mixed"
    return "black" if cs.pop() else "white"


def classify_turns(g: PlaneGraph, rule: Optional[str] = None) -> TurnReport:
    turns = turn_vertices(g, rule)
    turning = tuple(turning_corners(g))
    colour = _colour_class(g.black[v] for v in turns)
    return TurnReport(
        turns=tuple((v, g.degree(v)) for v in turns),
        turning_tiles=turning,
        monochromatic=colour in ("black", "white"),
        turn_colour=colour,
    )


def monochromatic_turns(g: PlaneGraph) -> TurnColour:
    return classify_turns(g).turn_colour


# ---------------------------------------------------------------------------
# Boundaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryDecomposition:
    upper: tuple[int, ...]
    lower: tuple[int, ...]
    start_edge: Edge
    end_edge: Edge
    internal_edges: frozenset
    external_edges: frozenset

    def path(self, side: str) -> tuple[int, ...]:
        if side == "upper":
            return self.upper
        if side == "lower":
            return self.lower
        raise GraphError(f"side must be 'upper' or 'lower', not {side!r}")

    @staticmethod
    def path_edges(path: Sequence[int]) -> list[Edge]:
        return [edge(path[i], path[i + 1]) for i in range(len(path) - 1)]

    def to_json(self) -> dict:
        return {
            "upper": list(self.upper),
            "lower": list(self.lower),
            "start_edge": list(self.start_edge),
            "end_edge": list(self.end_edge),
            "internal_edges": [list(e) for e in sorted(self.internal_edges)],
            "external_edges": [list(e) for e in sorted(self.external_edges)],
        }


def _free_pair(g: PlaneGraph, idx: int) -> Edge:
    counts = g.tile_count()
    t = g.tiles[idx]
    free = [v for v in t if counts[v] == 1]
    if len(free) != 2 or edge(*free) not in set(tile_edges(t)):
        raise GraphError(f"tile {idx} does not have a free outer edge")
    return edge(*free)


def shared_edges(g: PlaneGraph) -> list[Edge]:
    return [g.shared_edge(i, i + 1) for i in range(g.n_tiles - 1)]


def boundaries(g: PlaneGraph) -> BoundaryDecomposition:
    first, last = g.tiles[0], g.tiles[-1]
    shared = shared_edges(g)
    internal = set(shared) | {edge(first[LL], first[LR]), edge(last[UL], last[UR])}
    external = frozenset(g.edges - internal)
    if g.n_tiles == 1:
        t = first
        return BoundaryDecomposition(
            upper=(t[UL], t[UR]),
            lower=(t[LL], t[LR]),
            start_edge=edge(t[LL], t[UL]),
            end_edge=edge(t[LR], t[UR]),
            internal_edges=frozenset(internal),
            external_edges=external,
        )
    start = _free_pair(g, 0)
    end = _free_pair(g, g.n_tiles - 1)
    outer = g.outer_face()
    k = len(outer)
    # Walk the outer cycle from each start-edge endpoint away from the other.
    paths = []
    for a in start:
        other = start[0] if a == start[1] else start[1]
        i = outer.index(a)
        step = 1 if outer[(i - 1) % k] == other else -1
        if outer[(i - step) % k] != other:
            raise GraphError("start edge is not on the outer face")
        path = [a]
        j = i
        while path[-1] not in end:
            j = (j + step) % k
            path.append(outer[j])
        paths.append(tuple(path))
    if set(paths[0]) & set(paths[1]):
        raise GraphError("boundary paths intersect")
    if g.upper_start not in start:
        raise GraphError("upper boundary label is not a start-edge endpoint")
    upper, lower = paths if paths[0][0] == g.upper_start else paths[::-1]
    return BoundaryDecomposition(upper, lower, start, end, frozenset(internal), external)


def neighbour_counts(g: PlaneGraph, side: str) -> list[int]:
    """Degrees of the black vertices along one boundary path, in path order."""
    colour = monochromatic_turns(g)
    if colour not in ("black", "none"):
        raise GraphError(f"neighbour counts need black turns; turns are {colour}")
    path = boundaries(g).path(side)
    return [g.degree(v) for v in path if g.black[v]]


# ---------------------------------------------------------------------------
# Rotation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotationRoles:
    tile: int
    A: int
    B: int
    C: int
    D: int
    S: tuple[int, ...]
    R: tuple[int, ...]


def rotation_roles(g: PlaneGraph, t: int) -> RotationRoles:
    """Identify the corners and attachment vertices for a rotation at tile ``t``.

    ``C`` is the corner shared by the edges glued to the previous and the
    next tile, ``D`` the other end of the next-tile edge, ``B`` the other end
    of the previous-tile edge, and ``A`` the corner opposite ``C``.  ``S``
    and ``R`` are the later-tile neighbours of ``D`` and ``C``.
    """
    n = g.n_tiles
    if not 0 <= t < n:
        raise GraphError(f"tile index {t} out of range 0..{n - 1}")
    if t == 0 or t == n - 1:
        raise GraphError("the first and last tiles cannot be rotated")
    prev, nxt = g.shared_edge(t - 1, t), g.shared_edge(t, t + 1)
    if prev is None or nxt is None:
        raise GraphError(f"tile {t} is not glued to both neighbours")
    common = set(prev) & set(nxt)
    if len(common) != 1:
        raise GraphError(f"tile {t} is not a turning tile")
    (C,) = common
    D = nxt[0] if nxt[1] == C else nxt[1]
    B = prev[0] if prev[1] == C else prev[1]
    tile = g.tiles[t]
    A = tile[(tile.index(C) + 2) % 4]

    v0 = set(tile)
    v1 = {v for tt in g.tiles[:t] for v in tt} - v0
    v2 = {v for tt in g.tiles[t + 1:] for v in tt} - v0
    if v1 & v2 or len(v0) + len(v1) + len(v2) != g.n_vertices:
        raise GraphError(f"vertices around tile {t} do not split into head and tail")
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if a in v2 and b not in v2 and b not in (C, D):
                raise GraphError(f"tail attaches to tile {t} away from C and D")
            if a in v1 and b not in v1 and b not in (B, C):
                raise GraphError(f"head attaches to tile {t} away from B and C")
    S = tuple(sorted(s for s in g.neighbours(D) if s in v2))
    R = tuple(sorted(r for r in g.neighbours(C) if r in v2))
    return RotationRoles(t, A, B, C, D, S, R)


def rotate(g: PlaneGraph, t: int) -> PlaneGraph:
    """Move the tail attached at ``C, D`` of tile ``t`` over to ``A, B``."""
    roles = rotation_roles(g, t)
    A, B, C, D = roles.A, roles.B, roles.C, roles.D
    sub = {D: B, C: A}
    tiles = list(g.tiles[: t + 1]) + [tuple(sub.get(v, v) for v in tt) for tt in g.tiles[t + 1:]]
    out = PlaneGraph(g.coords, g.black, tuple(tiles), g.upper_start, g.word, generalised=True)
    expected = (set(g.edges) - {edge(D, s) for s in roles.S} - {edge(C, r) for r in roles.R}) | {
        edge(B, s) for s in roles.S
    } | {edge(A, r) for r in roles.R}
    if set(out.edges) != expected:
        raise GraphError(f"rotation at tile {t} did not produce the expected edge set")
    out.validate()
    return out


def turning_corners(g: PlaneGraph) -> dict[int, int]:
    """Map each turning tile to the corner where its two glued edges meet.

    A tile is turning when the edges it shares with the previous and the next
    tile are adjacent, i.e. where the snake changes direction.
    """
    out = {}
    for t in range(1, g.n_tiles - 1):
        prev, nxt = g.shared_edge(t - 1, t), g.shared_edge(t, t + 1)
        common = set(prev) & set(nxt)
        if len(common) == 1:
            out[t] = common.pop()
    return out


def white_turning_tiles(g: PlaneGraph) -> list[int]:
    return [t for t, c in turning_corners(g).items() if not g.black[c]]


def blacken(g: PlaneGraph, order: str = "forward") -> PlaneGraph:
    """Rotate at white turning tiles until every turn is black.

    Passes run over the interior tiles left to right (``order="forward"``)
    or right to left (``"reverse"``); a pass with no rotation ends the loop.
    """
    if order not in ("forward", "reverse"):
        raise GraphError(f"unknown order {order!r}")
    n = g.n_tiles
    for _ in range(max(n * n, 1)):
        changed = False
        idx = range(1, n - 1) if order == "forward" else range(n - 2, 0, -1)
        for t in idx:
            if t in white_turning_tiles(g):
                g = rotate(g, t)
                changed = True
        if not changed:
            break
    else:
        raise GraphError("blacken did not converge within the pass bound")
    colour = classify_turns(g, "generalised").turn_colour
    if colour not in ("black", "none"):
        raise GraphError(f"blacken left {colour} turns")
    return g


def same_edges(g: PlaneGraph, h: PlaneGraph) -> bool:
    return g.n_vertices == h.n_vertices and set(g.edges) == set(h.edges)


def blacken_checked(g: PlaneGraph) -> PlaneGraph:
    """``blacken`` run in both pass orders; raises if the results differ."""
    fwd = blacken(g, "forward")
    rev = blacken(g, "reverse")
    if not same_edges(fwd, rev):
        raise GraphError("blacken depends on the rotation order")
    return fwd


def all_words(max_len: int, min_len: int = 0) -> Iterable[str]:
    """Every direction word with length in ``[min_len, max_len]``."""
    from itertools import product

    for n in range(min_len, max_len + 1):
        for letters in product("RU", repeat=n):
            yield "".join(letters)
