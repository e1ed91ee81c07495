"""
Hourglass plabic graphs of plane partitions.

The web of a plane partition is the honeycomb dual of the triangular grid
inside the a x b x c hexagon, with the lozenge tiling read as a perfect
matching: matched dual edges are hourglasses, all others are simple.

Coordinates. A lattice point P(x, y, z) has planar coordinates
(X, Y) = (x - y, 2z - x - y), and its real position is (X*sqrt(3)/2, Y/2).
Every vertex is stored in the integer frame S = 8 * (3X, Y), in which
triangle centroids, edge midpoints, strand bend points and cut points are
all integral. The frame is an orientation-preserving linear image of the
real plane, so every orientation and containment test can run in it.

The graph itself is a networkx PlanarEmbedding over the vertex ids, with
each hourglass as a single edge. One extra node, OUTSIDE, is joined to the
boundary vertices in boundary order; its spokes stand in for the arcs of
the disk boundary, so faces touching the boundary close up through it.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from .config import get_threads
from .geometry import (
    Point,
    ccw_order,
    ear_point,
    left_normal,
    on_segment,
    segment_intersection,
    segment_param,
)
from .plane_partitions import (
    Box3,
    PlanePartition,
    PlanePartitionError,
    SymmetryClass,
    has_symmetry,
    toggle_cube,
)

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

BLACK = "black"
WHITE = "white"
INTERNAL = "internal"
BOUNDARY = "boundary"
SIMPLE = "simple"
HOURGLASS = "hourglass"

OUTSIDE = -1

# neighbour offsets of a triangle centroid in the S frame
WHITE_OFFSETS = (Point(-16, 0), Point(8, 8), Point(8, -8))
BLACK_OFFSETS = (Point(16, 0), Point(-8, 8), Point(-8, -8))

# the six triangles around a lattice point, clockwise from the upper right
HEXAGON_RING = (Point(8, 8), Point(16, 0), Point(8, -8), Point(-8, -8), Point(-16, 0), Point(-8, 8))

Dimer = Tuple[Point, Point]  # (white centroid, black centroid)
End = Tuple[int, int]  # (edge id, strand side): 0 simple, -1 right strand, +1 left strand

RESTRICTABLE = (SymmetryClass.SPP, SymmetryClass.CSPP, SymmetryClass.TSPP, SymmetryClass.TSSCPP)


class WebError(ValueError):
    """Malformed web or illegal web operation.

    internal is True when a construction invariant failed (a bug rather
    than bad input).
    """

    def __init__(self, message: str, internal: bool = False):
        super().__init__(message)
        self.internal = internal


def opposite(color: str) -> str:
    return WHITE if color == BLACK else BLACK


def lattice_to_frame(X: int, Y: int) -> Point:
    return Point(24 * X, 8 * Y)


def _g(x: int, y: int) -> Point:
    return Point(8 * x, 8 * y)


@dataclass(frozen=True)
class Vertex:
    id: int
    color: str
    position: Point
    kind: str


@dataclass(frozen=True)
class Edge:
    id: int
    black: int
    white: int
    kind: str

    def other(self, v: int) -> int:
        return self.white if v == self.black else self.black


@dataclass(frozen=True)
class Dart:
    """A directed edge; edge is None for the disk-boundary arc b_i -> b_(i-1)."""
    edge: Optional[int]
    tail: int
    head: int


@dataclass(frozen=True)
class Face:
    id: int
    darts: Tuple[Dart, ...]
    polygon: Tuple[Point, ...]
    point: Point
    is_base: bool
    center: Optional[Tuple[int, int]] = None

    @property
    def is_internal(self) -> bool:
        return all(d.edge is not None for d in self.darts)


@dataclass(frozen=True)
class HourglassWeb:
    box: Box3
    symmetry: Optional[SymmetryClass]
    matched: FrozenSet[Dimer]
    vertices: Tuple[Vertex, ...] = field(compare=False, repr=False)
    edges: Tuple[Edge, ...] = field(compare=False, repr=False)
    embedding: nx.PlanarEmbedding = field(compare=False, repr=False)
    rotation: Tuple[Tuple[End, ...], ...] = field(compare=False, repr=False)
    boundary: Tuple[int, ...] = field(compare=False, repr=False)
    boundary_params: Tuple[Tuple[int, object], ...] = field(compare=False, repr=False)
    outline: Tuple[Point, ...] = field(compare=False, repr=False)
    split_pairs: Tuple[int, ...] = field(compare=False, repr=False)
    heights: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, compare=False, repr=False)
    cache: Dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.boundary)

    def neighbors_ccw(self, v: int) -> List[int]:
        return list(reversed(list(self.embedding.neighbors_cw_order(v))))

    def incident(self, v: int) -> Tuple[int, ...]:
        """Edge ids at v in counterclockwise order, each hourglass once."""
        return tuple(self.embedding[v][w]["edge"] for w in self.neighbors_ccw(v) if w != OUTSIDE)

    def other(self, edge_id: int, v: int) -> int:
        return self.edges[edge_id].other(v)

    def boundary_edge(self, i: int) -> Edge:
        """Edge at boundary position i (0-indexed)."""
        return self.edges[self.rotation[self.boundary[i]][0][0]]

    def boundary_index(self) -> Dict[int, int]:
        if "boundary_index" not in self.cache:
            self.cache["boundary_index"] = {v: i for i, v in enumerate(self.boundary)}
        return self.cache["boundary_index"]

    def vertex_at(self, position: Point) -> Optional[Vertex]:
        if "by_position" not in self.cache:
            self.cache["by_position"] = {v.position: v for v in self.vertices}
        return self.cache["by_position"].get(position)

    def canonical_form(self) -> Tuple:
        return tuple(sorted((w.x, w.y, b.x, b.y) for w, b in self.matched))


def hexagon_corners(box: Box3) -> Dict[str, Point]:
    a, b, c = box.as_tuple()
    return {
        "T": _g(0, 2 * c),
        "UR": _g(3 * a, 2 * c - a),
        "LR": _g(3 * a, -a),
        "B": _g(3 * (a - b), -a - b),
        "LL": _g(-3 * b, -b),
        "UL": _g(-3 * b, 2 * c - b),
    }


def matched_dimers(p: PlanePartition) -> FrozenSet[Dimer]:
    """The perfect matching given by the lozenges of p.

    Each visible cube face is a lozenge covering one white and one black
    triangle: top faces of the stacks, and the walls facing the x and y
    directions.
    """
    a, b, c = p.box.as_tuple()
    dimers = set()
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            X, Y0 = i - j, 2 * p.p(i, j) - i - j
            dimers.add((_g(3 * X + 1, Y0 + 1), _g(3 * X - 1, Y0 + 1)))
    for j in range(1, b + 1):
        for k in range(1, c + 1):
            q = sum(1 for i in range(1, a + 1) if p.p(i, j) >= k)
            X0, Y0 = q - j, 2 * k - q - j
            dimers.add((_g(3 * X0 + 1, Y0 - 1), _g(3 * X0 + 2, Y0)))
    for i in range(1, a + 1):
        for k in range(1, c + 1):
            r = sum(1 for j in range(1, b + 1) if p.p(i, j) >= k)
            X0, Y0 = i - r, 2 * k - i - r
            dimers.add((_g(3 * X0 - 2, Y0), _g(3 * X0 - 1, Y0 - 1)))
    return frozenset(dimers)


def _triangles(matched: FrozenSet[Dimer]) -> Dict[Point, str]:
    tri = {}
    for w, b in matched:
        tri[w] = WHITE
        tri[b] = BLACK
    return tri


def _offsets(color: str):
    return WHITE_OFFSETS if color == WHITE else BLACK_OFFSETS


def _dedupe_cycle(points: List[Point]) -> List[Point]:
    out = [p for i, p in enumerate(points) if p != points[i - 1]]
    return out or points[:1]


def _kept(cls: SymmetryClass, p: Point) -> bool:
    if cls is SymmetryClass.SPP:
        return p.x > 0
    if cls is SymmetryClass.CSPP:
        return p.x > 0 and p.x + 3 * p.y > 0
    if cls is SymmetryClass.TSPP:
        return p.x > 0 and 3 * p.y - p.x > 0
    # the diagonal cut is displaced into the domain; vertices on it are dropped
    return p.x > 0 and p.y - p.x > 0


def _domain(box: Box3, cls: SymmetryClass) -> Tuple[List[Point], List[Tuple[Point, Point, Point]]]:
    """Outline (clockwise from T) and cut segments (start, end, split offset)."""
    k = hexagon_corners(box)
    origin = Point(0, 0)
    vertical = Point(0, 2)
    if cls is SymmetryClass.SPP:
        return [k["T"], k["UR"], k["LR"], k["B"]], [(k["B"], k["T"], vertical)]
    if cls is SymmetryClass.CSPP:
        return ([k["T"], k["UR"], k["LR"], origin],
                [(k["LR"], origin, Point(3, -1)), (origin, k["T"], vertical)])
    if cls is SymmetryClass.TSPP:
        return ([k["T"], k["UR"], origin],
                [(k["UR"], origin, Point(3, 1)), (origin, k["T"], vertical)])
    d = box.a // 2
    mid = _g(3 * d, 3 * d)
    return [k["T"], mid, origin], [(mid, origin, Point(1, 1)), (origin, k["T"], vertical)]


def _outline_position(p: Point, outline: List[Point]) -> Tuple[int, object]:
    m = len(outline)
    for s in range(m):
        a, b = outline[s], outline[(s + 1) % m]
        if on_segment(p, a, b):
            return (s, segment_param(p, a, b))
    raise WebError(f"Boundary vertex at {p} is not on the outline", internal=True)


def _cut_crossing(u: Point, v: Point, cuts) -> Tuple[Point, Point]:
    for a, b, t in cuts:
        if on_segment(v, a, b):
            return v, t
    for a, b, t in cuts:
        x = segment_intersection(u, v, a, b)
        if x is not None:
            return x, t
    raise WebError(f"Edge {u}-{v} leaves the domain without crossing a cut", internal=True)


def _embed(vertices: List[Vertex], edges: Tuple[Edge, ...], boundary: Tuple[int, ...]) -> nx.PlanarEmbedding:
    """Planar embedding with rotations read off the exact vertex positions.

    Raises:
        WebError: if two edges leave a vertex in the same direction or the
            rotations do not describe a planar graph
    """
    emb = nx.PlanarEmbedding()
    for v in vertices:
        emb.add_node(v.id, color=v.color, kind=v.kind, position=v.position)
    around: List[List[Tuple[int, int]]] = [[] for _ in vertices]
    for e in edges:
        around[e.black].append((e.white, e.id))
        around[e.white].append((e.black, e.id))
    for v, nbrs in enumerate(around):
        here = vertices[v].position
        try:
            order = ccw_order([vertices[w].position - here for w, _ in nbrs])
        except ValueError as err:
            raise WebError(f"Vertex {v}: {err}", internal=True)
        prev = None
        for i in order:
            w, e = nbrs[i]
            emb.add_half_edge(v, w, cw=prev)
            emb[v][w]["edge"] = e
            prev = w
    if boundary:
        emb.add_node(OUTSIDE, kind="outside")
        prev = None
        for b in boundary:
            if len(emb[b]) != 1:
                raise WebError(f"Boundary vertex {b} has degree {len(emb[b])}", internal=True)
            inner = next(iter(emb[b]))
            emb.add_half_edge(OUTSIDE, b, cw=prev)
            emb.add_half_edge(b, OUTSIDE, cw=inner)
            emb[OUTSIDE][b]["edge"] = None
            emb[b][OUTSIDE]["edge"] = None
            prev = b
    try:
        emb.check_structure()
    except nx.NetworkXException as err:
        raise WebError(f"Rotations are not planar: {err}", internal=True)
    return emb


def _strand_ring(emb: nx.PlanarEmbedding, edges: Tuple[Edge, ...], v: int) -> Tuple[End, ...]:
    """Strand ends at v counterclockwise; an hourglass gives its right strand, then its left."""
    ring: List[End] = []
    for w in reversed(list(emb.neighbors_cw_order(v))):
        e = emb[v][w]["edge"]
        if e is None:
            continue
        ring.extend([(e, 0)] if edges[e].kind == SIMPLE else [(e, -1), (e, 1)])
    return tuple(ring)


def _assemble(box: Box3, symmetry: Optional[SymmetryClass], matched: FrozenSet[Dimer],
              internal: Dict[Point, str], boundary: Dict[Point, str],
              edge_specs: List[Tuple[Point, Point, str]], outline: List[Point],
              splits: List[Tuple[Point, Point]], heights=None) -> HourglassWeb:
    """Number vertices and edges, order the boundary and build rotations."""
    params = {p: _outline_position(p, outline) for p in boundary}
    bpos = sorted(boundary, key=lambda p: params[p])
    ipos = sorted(internal, key=lambda p: (-p.y, p.x))
    ids = {p: i for i, p in enumerate(ipos)}
    for i, p in enumerate(bpos):
        ids[p] = len(ipos) + i

    vertices = [Vertex(ids[p], internal[p], p, INTERNAL) for p in ipos]
    vertices += [Vertex(ids[p], boundary[p], p, BOUNDARY) for p in bpos]

    keyed = sorted((ids[bk], ids[wh], kind) for bk, wh, kind in edge_specs)
    edges = tuple(Edge(i, bk, wh, kind) for i, (bk, wh, kind) in enumerate(keyed))

    boundary_ids = tuple(ids[p] for p in bpos)
    embedding = _embed(vertices, edges, boundary_ids)
    rotation = tuple(_strand_ring(embedding, edges, v.id) for v in vertices)

    for vtx in vertices:
        deg = len(rotation[vtx.id])
        if vtx.kind == BOUNDARY and deg != 1:
            raise WebError(f"Boundary vertex {vtx.id} has degree {deg}", internal=True)
        if vtx.kind == INTERNAL and deg != 4:
            raise WebError(f"Internal vertex {vtx.id} has degree {deg}", internal=True)

    order = {p: i for i, p in enumerate(bpos)}
    split_firsts = []
    for p1, p2 in splits:
        i, j = sorted((order[p1], order[p2]))
        if j != i + 1:
            raise WebError(f"Split pair at {p1}, {p2} is not adjacent on the boundary", internal=True)
        split_firsts.append(i)

    return HourglassWeb(
        box=box, symmetry=symmetry, matched=matched,
        vertices=tuple(vertices), edges=edges, embedding=embedding, rotation=rotation,
        boundary=boundary_ids, boundary_params=tuple(params[p] for p in bpos),
        outline=tuple(outline), split_pairs=tuple(sorted(split_firsts)),
        heights=heights,
    )


def web_from_dimers(box: Box3, matched: FrozenSet[Dimer], symmetry: Optional[SymmetryClass] = None,
                    heights=None) -> HourglassWeb:
    """Build the full web (symmetry None) or a fundamental-domain web from a dimer state."""
    triangles = _triangles(matched)
    keep = (lambda p: True) if symmetry is None else (lambda p: _kept(symmetry, p))
    if symmetry is None:
        k = hexagon_corners(box)
        outline = _dedupe_cycle([k["T"], k["UR"], k["LR"], k["B"], k["LL"], k["UL"]])
        cuts = []
    else:
        outline, cuts = _domain(box, symmetry)

    internal = {p: col for p, col in triangles.items() if keep(p)}
    boundary: Dict[Point, str] = {}
    edge_specs: List[Tuple[Point, Point, str]] = []
    splits: List[Tuple[Point, Point]] = []

    def add_boundary(p: Point, color: str) -> None:
        if p in boundary or p in internal:
            raise WebError(f"Two vertices placed at {p}", internal=True)
        boundary[p] = color

    def add_edge(u: Point, ucolor: str, v: Point, kind: str) -> None:
        edge_specs.append((u, v, kind) if ucolor == BLACK else (v, u, kind))

    for pos, color in sorted(triangles.items()):
        for off in _offsets(color):
            nb = pos + off
            if nb not in triangles:
                pend = pos + off.divide(2)
                if keep(pos) != keep(pend):
                    raise WebError(f"Pendant at {pend} is split from its triangle by a cut", internal=True)
                if keep(pos):
                    add_boundary(pend, opposite(color))
                    add_edge(pos, color, pend, SIMPLE)
                continue
            if color != BLACK:
                continue
            kind = HOURGLASS if (nb, pos) in matched else SIMPLE
            kb, kw = keep(pos), keep(nb)
            if kb and kw:
                add_edge(pos, BLACK, nb, kind)
            elif kb or kw:
                u, ucolor, v = (pos, BLACK, nb) if kb else (nb, WHITE, pos)
                x, t = _cut_crossing(u, v, cuts)
                if kind == SIMPLE:
                    add_boundary(x, opposite(ucolor))
                    add_edge(u, ucolor, x, SIMPLE)
                else:
                    p1, p2 = x + t, x - t
                    for p in (p1, p2):
                        add_boundary(p, opposite(ucolor))
                        add_edge(u, ucolor, p, SIMPLE)
                    splits.append((p1, p2))

    web = _assemble(box, symmetry, matched, internal, boundary, edge_specs, outline, splits, heights)
    logger.info(f"Built web for box {box.as_tuple()} domain {symmetry.value if symmetry else 'full'}: "
                f"{len(web.vertices)} vertices, {web.n} boundary")
    return web


def web_from_plane_partition(p: PlanePartition) -> HourglassWeb:
    return web_from_dimers(p.box, matched_dimers(p), None, p.heights)


def restrict_to_fundamental_domain(p: PlanePartition, cls: SymmetryClass) -> HourglassWeb:
    """Cut the web of a symmetric plane partition down to the class's wedge.

    The wedge runs clockwise from the ray O->T. Cut simple edges end at a new
    boundary vertex on the cut; cut hourglasses become a split pair of
    simple boundary edges, adjacent in boundary order.

    Raises:
        WebError: if the class has no fundamental domain here or p lacks the symmetry
    """
    if cls not in RESTRICTABLE:
        raise WebError(f"No fundamental domain for class {cls.value}")
    try:
        symmetric = has_symmetry(p, cls)
    except PlanePartitionError as e:
        raise WebError(str(e))
    if not symmetric:
        raise WebError(f"Plane partition {p.heights} is not {cls.value.upper()}")
    return web_from_dimers(p.box, matched_dimers(p), cls, p.heights)


def _ccw_corners(outline: Tuple[Point, ...], start, end) -> List[Point]:
    """Outline corners met walking counterclockwise from start to end."""
    (sa, ta), (sb, tb) = start, end
    m = len(outline)
    if sa == sb and ta > tb:
        return []
    corners, j = [], sa
    while True:
        corners.append(outline[j])
        if j == (sb + 1) % m:
            return corners
        j = (j - 1) % m


def cw_corners(outline: Tuple[Point, ...], start, end) -> List[Point]:
    """Outline corners met walking clockwise from start to end."""
    (sa, ta), (sb, tb) = start, end
    m = len(outline)
    if (sa, ta) == (sb, tb) or (sa == sb and ta < tb):
        return []
    corners, j = [], (sa + 1) % m
    while True:
        corners.append(outline[j])
        if j == sb:
            return corners
        j = (j + 1) % m


def hourglass_bump(tail: Point, head: Point) -> List[Point]:
    """Points of the strand envelope on the left of an hourglass, tail to head."""
    d = head - tail
    q, nrm = d.divide(4), left_normal(d).divide(8)
    return [tail + q + nrm, tail + q + q, tail + q + q + q + nrm]


def strand_points(web: HourglassWeb, edge_id: int, side: int, tail: int) -> List[Point]:
    """Polyline of one strand leaving tail, excluding tail itself."""
    e = web.edges[edge_id]
    head = e.other(tail)
    u, v = web.vertices[tail].position, web.vertices[head].position
    if e.kind == SIMPLE:
        return [v]
    d = v - u
    q, nrm = d.divide(4), left_normal(d).divide(8)
    m = u + q + q
    return [u + q + nrm.scale(side), m, m + q - nrm.scale(side), v]


def faces(web: HourglassWeb) -> List[Face]:
    """Faces of the web inside the disk, each hourglass counted as one edge.

    Darts are walked with the face on the left; at a boundary vertex the walk
    follows the disk boundary counterclockwise to the previous boundary
    vertex. The face through the arc b_1 -> b_n is the base face.
    """
    if "faces" in web.cache:
        return web.cache["faces"]
    bindex = web.boundary_index()
    emb = web.embedding
    base_dart = Dart(None, web.boundary[0], web.boundary[-1]) if web.n else None
    marked: Set[Tuple[int, int]] = set()
    result: List[Face] = []
    for v in sorted(emb.nodes):
        for w in emb.neighbors_cw_order(v):
            if (v, w) in marked:
                continue
            cycle = _face_darts(web, emb.traverse_face(v, w, marked))
            polygon = _face_polygon(web, cycle, bindex)
            try:
                point = ear_point(polygon)
            except ValueError as err:
                raise WebError(f"Face {len(result)}: {err}", internal=True)
            result.append(Face(len(result), cycle, tuple(polygon), point,
                               base_dart in cycle, _hexagon_center(web, cycle)))
    web.cache["faces"] = result
    web.cache["face_of_dart"] = {d: f.id for f in result for d in f.darts}
    return result


def _face_darts(web: HourglassWeb, nodes: List[int]) -> Tuple[Dart, ...]:
    """Darts of a traversed face, reoriented to keep the face on the left.

    traverse_face keeps the face on its right, so the node cycle is read
    backwards; a pass b -> OUTSIDE -> b' is the disk-boundary arc b -> b'.
    """
    cycle = [nodes[0]] + nodes[:0:-1]
    if cycle[0] == OUTSIDE:
        cycle = cycle[1:] + cycle[:1]
    m = len(cycle)
    darts = []
    for j, tail in enumerate(cycle):
        if tail == OUTSIDE:
            continue
        head = cycle[(j + 1) % m]
        if head == OUTSIDE:
            darts.append(Dart(None, tail, cycle[(j + 2) % m]))
        else:
            darts.append(Dart(web.embedding[tail][head]["edge"], tail, head))
    return tuple(darts)


def _face_polygon(web: HourglassWeb, cycle: Tuple[Dart, ...], bindex: Dict[int, int]) -> List[Point]:
    polygon: List[Point] = []
    for d in cycle:
        tail = web.vertices[d.tail].position
        polygon.append(tail)
        if d.edge is None:
            polygon.extend(_ccw_corners(web.outline, web.boundary_params[bindex[d.tail]],
                                        web.boundary_params[bindex[d.head]]))
        elif web.edges[d.edge].kind == HOURGLASS:
            polygon.extend(hourglass_bump(tail, web.vertices[d.head].position))
    return polygon


def _hexagon_center(web: HourglassWeb, cycle: Tuple[Dart, ...]) -> Optional[Tuple[int, int]]:
    """Lattice center of an internal hexagonal face, if it sits on a lattice point."""
    if len(cycle) != 6 or any(d.edge is None for d in cycle):
        return None
    sx = sum(web.vertices[d.tail].position.x for d in cycle)
    sy = sum(web.vertices[d.tail].position.y for d in cycle)
    if sx % (6 * 24) or sy % (6 * 8):
        return None
    return (sx // (6 * 24), sy // (6 * 8))


def face_of_dart(web: HourglassWeb, dart: Dart) -> Face:
    fs = faces(web)
    return fs[web.cache["face_of_dart"][dart]]


def base_face(web: HourglassWeb) -> Face:
    return next(f for f in faces(web) if f.is_base)


def benzene_faces(web: HourglassWeb) -> List[Face]:
    """Internal hexagonal faces whose edges alternate hourglass/simple."""
    found = []
    for f in faces(web):
        if not f.is_internal or len(f.darts) != 6 or f.center is None:
            continue
        kinds = [web.edges[d.edge].kind for d in f.darts]
        if all(kinds[i] != kinds[i - 1] for i in range(6)):
            found.append(f)
    return found


def cube_face(i: int, j: int, k: int) -> Tuple[int, int]:
    """Lattice center (X, Y) of the hexagon toggled by cube (i, j, k)."""
    return (i - j, 2 * k - i - j)


def _ring(center: Tuple[int, int]) -> List[Point]:
    c = lattice_to_frame(*center)
    return [c + off for off in HEXAGON_RING]


def _ring_dimers(center: Tuple[int, int]) -> FrozenSet[Dimer]:
    w1, k2, w3, k4, w5, k6 = _ring(center)
    return frozenset([(w1, k2), (w3, k2), (w3, k4), (w5, k4), (w5, k6), (w1, k6)])


def flippable_centers(matched: FrozenSet[Dimer],
                      symmetry: Optional[SymmetryClass] = None) -> List[Tuple[int, int]]:
    """Lattice centers of the flippable hexagons of a dimer state."""
    triangles = _triangles(matched)
    candidates = set()
    for pos, color in triangles.items():
        if color == WHITE:
            for off in (Point(8, 8), Point(8, -8), Point(-16, 0)):
                c = pos - off
                candidates.add((c.x // 24, c.y // 8))
    found = []
    for center in sorted(candidates):
        ring = _ring(center)
        if not all(p in triangles for p in ring):
            continue
        if symmetry is not None and not all(_kept(symmetry, p) for p in ring):
            continue
        w1, k2, w3, k4, w5, k6 = ring
        if {(w1, k2), (w3, k4), (w5, k6)} <= matched or {(w3, k2), (w5, k4), (w1, k6)} <= matched:
            found.append(center)
    return found


def _toggled_heights(web: HourglassWeb, center: Tuple[int, int]):
    if web.heights is None or web.symmetry is not None:
        return None
    p = PlanePartition(web.box, web.heights)
    X, Y = center
    for j in range(1, web.box.b + 1):
        i = j + X
        twice_k = Y + i + j
        if not 1 <= i <= web.box.a or twice_k % 2:
            continue
        k = twice_k // 2
        if not 1 <= k <= web.box.c:
            continue
        try:
            return toggle_cube(p, i, j, k).heights
        except PlanePartitionError:
            continue
    raise WebError(f"No cube toggles the hexagon at {center}", internal=True)


def apply_benzene(web: HourglassWeb, face: Face) -> HourglassWeb:
    """Rotate a flippable hexagon: its hourglasses and simple edges swap.

    Raises:
        WebError: if the face is not a benzene face of this web
    """
    if face.center is None or face.center not in {f.center for f in benzene_faces(web)}:
        raise WebError(f"Face {face.id} is not flippable")
    new_matched = web.matched.symmetric_difference(_ring_dimers(face.center))
    heights = _toggled_heights(web, face.center)
    return web_from_dimers(web.box, frozenset(new_matched), web.symmetry, heights)


def _flipped_states(state: FrozenSet[Dimer], symmetry: Optional[SymmetryClass]) -> List[FrozenSet[Dimer]]:
    return [frozenset(state.symmetric_difference(_ring_dimers(c))) for c in flippable_centers(state, symmetry)]


def benzene_class_states(web: HourglassWeb, threads: Optional[int] = None,
                         on_state: Optional[Callable[[], None]] = None) -> List[FrozenSet[Dimer]]:
    """Breadth-first closure of the dimer state under benzene moves.

    Each level of the search is expanded on a pool of threads workers
    (HOURGLASS_THREADS by default). States come out in breadth-first order
    whatever the worker count; on_state is called once per state.
    """
    start = web.matched
    visited = {start}
    order = [start]
    level = [start]
    if on_state:
        on_state()
    with ThreadPoolExecutor(max_workers=threads or get_threads()) as executor:
        while level:
            found = []
            for flipped in executor.map(lambda s: _flipped_states(s, web.symmetry), level):
                for nxt in flipped:
                    if nxt not in visited:
                        visited.add(nxt)
                        found.append(nxt)
                        if on_state:
                            on_state()
            order.extend(found)
            level = found
    logger.info(f"Benzene class of size {len(order)}")
    return order


def benzene_class(web: HourglassWeb) -> Set[HourglassWeb]:
    return {web_from_dimers(web.box, state, web.symmetry) for state in benzene_class_states(web)}


def _num(v) -> object:
    return v if isinstance(v, int) else str(v)


def web_to_json(web: HourglassWeb) -> Dict:
    return {
        "box": list(web.box.as_tuple()),
        "class": web.symmetry.value if web.symmetry else None,
        "heights": [list(r) for r in web.heights] if web.heights is not None else None,
        "matched": [list(t) for t in web.canonical_form()],
        "boundary": list(web.boundary),
        "split_pairs": list(web.split_pairs),
        "vertices": [{"id": v.id, "color": v.color, "kind": v.kind,
                      "position": [_num(v.position.x), _num(v.position.y)]} for v in web.vertices],
        "edges": [{"id": e.id, "ends": [e.black, e.white], "kind": e.kind} for e in web.edges],
    }


def web_from_json(data: Dict) -> HourglassWeb:
    """Rebuild a web from its provenance (box, class, dimer state)."""
    try:
        box = Box3(*data["box"])
        cls = SymmetryClass.from_name(data["class"]) if data.get("class") else None
        matched = frozenset((Point(w[0], w[1]), Point(w[2], w[3])) for w in data["matched"])
    except (KeyError, TypeError, IndexError) as e:
        raise WebError(f"Malformed web JSON: {e}")
    heights = data.get("heights")
    heights = tuple(tuple(r) for r in heights) if heights is not None else None
    return web_from_dimers(box, matched, cls, heights)
