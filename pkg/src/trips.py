"""
Trips, separation labels and boundary words of hourglass webs.

A trip enters a vertex along one strand end and leaves along the k-th end
counterclockwise from it: trip 1 uses k = 1 at black and k = 3 at white
vertices, trip 2 uses k = 2, trip 3 mirrors trip 1. Hourglass edges are
walked strand by strand.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple, Union

from .geometry import Point, close, inside_even_odd, on_segment
from .tableaux import LatticeWord
from .web_builder import (
    BLACK,
    BOUNDARY,
    HOURGLASS,
    SIMPLE,
    WHITE,
    Dart,
    HourglassWeb,
    base_face,
    cw_corners,
    face_of_dart,
    hexagon_corners,
    strand_points,
)

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

TURNS = {1: {BLACK: 1, WHITE: 3}, 2: {BLACK: 2, WHITE: 2}, 3: {BLACK: 3, WHITE: 1}}

Segment = Tuple[int, int, int]  # (edge id, strand side, tail vertex)
Label = Union[int, FrozenSet[int]]


class TripError(ValueError):
    """A trip that does not terminate or labels that are not proper."""

    def __init__(self, message: str, internal: bool = False):
        super().__init__(message)
        self.internal = internal


@dataclass(frozen=True)
class TripPath:
    index: int
    start: int
    end: int
    segments: Tuple[Segment, ...]
    points: Tuple[Point, ...]


def trip_path(web: HourglassWeb, start: int, a: int) -> TripPath:
    """Walk trip a from a boundary vertex until it reaches the boundary again.

    Raises:
        TripError: if a is not 1, 2 or 3, start is not a boundary vertex, or
            the walk runs longer than the number of strand ends allows
    """
    if a not in TURNS:
        raise TripError(f"Trip index must be 1, 2 or 3, got {a}")
    if web.vertices[start].kind != BOUNDARY:
        raise TripError(f"Vertex {start} is not a boundary vertex")
    limit = 4 * sum(len(r) for r in web.rotation)
    v = start
    end = web.rotation[v][0]
    segments: List[Segment] = []
    points = [web.vertices[v].position]
    while True:
        edge_id, side = end
        head = web.other(edge_id, v)
        segments.append((edge_id, side, v))
        points.extend(strand_points(web, edge_id, side, v))
        if web.vertices[head].kind == BOUNDARY:
            return TripPath(a, start, head, tuple(segments), tuple(points))
        if len(segments) > limit:
            logger.error(f"Trip {a} from vertex {start} did not terminate")
            raise TripError(f"Trip {a} from vertex {start} exceeded {limit} steps", internal=True)
        ring = web.rotation[head]
        k = TURNS[a][web.vertices[head].color]
        end = ring[(ring.index(end) + k) % len(ring)]
        v = head


def all_trips(web: HourglassWeb) -> Dict[Tuple[int, int], TripPath]:
    """Every trip of the web keyed by (index, start vertex); cached on the web."""
    if "trips" not in web.cache:
        web.cache["trips"] = {(a, b): trip_path(web, b, a) for a in TURNS for b in web.boundary}
    return web.cache["trips"]


def trip_permutation(web: HourglassWeb, a: int) -> Tuple[int, ...]:
    """1-indexed images of the boundary positions under trip a."""
    index = web.boundary_index()
    trips = all_trips(web)
    if a not in TURNS:
        raise TripError(f"Trip index must be 1, 2 or 3, got {a}")
    return tuple(index[trips[(a, b)].end] + 1 for b in web.boundary)


def _traversals(web: HourglassWeb) -> Dict[Segment, List[Tuple[int, int]]]:
    if "traversals" not in web.cache:
        through = defaultdict(list)
        for (a, b), path in all_trips(web).items():
            for seg in path.segments:
                through[seg].append((a, b))
        web.cache["traversals"] = through
    return web.cache["traversals"]


def closed_curve(web: HourglassWeb, path: TripPath) -> List[Point]:
    """Trip polyline closed up by the clockwise boundary arc from its end to its start."""
    index = web.boundary_index()
    corners = cw_corners(web.outline, web.boundary_params[index[path.end]],
                         web.boundary_params[index[path.start]])
    return close(list(path.points) + corners)


def separation_label_simple(web: HourglassWeb, edge_id: int) -> int:
    """1 + number of trips through the edge that separate its face from the base face.

    The face is the one on the right of the edge walked black to white.
    """
    edge = web.edges[edge_id]
    if edge.kind != SIMPLE:
        raise TripError(f"Edge {edge_id} is an hourglass; use separation_label_hourglass")
    passes = _traversals(web).get((edge_id, 0, edge.black), [])
    if len(passes) != 3:
        logger.error(f"Edge {edge_id} carries {len(passes)} black-to-white trips")
        raise TripError(f"Edge {edge_id} carries {len(passes)} black-to-white trips, expected 3",
                        internal=True)
    here = face_of_dart(web, Dart(edge_id, edge.white, edge.black)).point
    base = base_face(web).point
    trips = all_trips(web)
    count = 0
    for key in passes:
        curve = closed_curve(web, trips[key])
        if inside_even_odd(here, curve) != inside_even_odd(base, curve):
            count += 1
    return count + 1


def _simple_labels(web: HourglassWeb) -> Dict[int, int]:
    if "simple_labels" not in web.cache:
        web.cache["simple_labels"] = {e.id: separation_label_simple(web, e.id)
                                      for e in web.edges if e.kind == SIMPLE}
    return web.cache["simple_labels"]


def separation_label_hourglass(web: HourglassWeb, edge_id: int) -> FrozenSet[int]:
    """Complement of the other labels at an endpoint, checked at both endpoints."""
    edge = web.edges[edge_id]
    if edge.kind != HOURGLASS:
        raise TripError(f"Edge {edge_id} is simple; use separation_label_simple")
    simple = _simple_labels(web)
    sets = []
    for v in (edge.black, edge.white):
        used = set()
        for e in web.incident(v):
            if e == edge_id:
                continue
            if web.edges[e].kind != SIMPLE:
                raise TripError(f"Vertex {v} carries two hourglasses", internal=True)
            used.add(simple[e])
        sets.append(frozenset({1, 2, 3, 4} - used))
    if sets[0] != sets[1] or len(sets[0]) != 2:
        logger.error(f"Hourglass {edge_id}: endpoint complements {sorted(sets[0])} and {sorted(sets[1])}")
        raise TripError(f"Labels at hourglass {edge_id} are not proper: "
                        f"{sorted(sets[0])} at black end, {sorted(sets[1])} at white end", internal=True)
    return sets[0]


def separation_labels(web: HourglassWeb) -> Dict[int, Label]:
    if "labels" not in web.cache:
        labels: Dict[int, Label] = dict(_simple_labels(web))
        for e in web.edges:
            if e.kind == HOURGLASS:
                labels[e.id] = separation_label_hourglass(web, e.id)
        logger.info(f"Labelled {len(labels)} edges")
        web.cache["labels"] = labels
    return web.cache["labels"]


def boundary_word(web: HourglassWeb) -> LatticeWord:
    """Labels of the boundary edges in boundary order, negated at white vertices.

    Split pairs left by a fundamental-domain cut become pair tokens.
    """
    labels = _simple_labels(web)
    letters = []
    for i, v in enumerate(web.boundary):
        label = labels[web.boundary_edge(i).id]
        letters.append(-label if web.vertices[v].color == WHITE else label)
    return LatticeWord(4, tuple(letters), frozenset(web.split_pairs))


def _named_segments(web: HourglassWeb) -> List[Tuple[str, Point, Point]]:
    k = hexagon_corners(web.box)
    hexagon = [("NE", k["T"], k["UR"]), ("E", k["UR"], k["LR"]), ("SE", k["LR"], k["B"]),
               ("SW", k["B"], k["LL"]), ("W", k["LL"], k["UL"]), ("NW", k["UL"], k["T"])]
    if web.symmetry is None:
        return hexagon
    outline = web.outline
    cuts = [(f"cut{s}", outline[s], outline[(s + 1) % len(outline)]) for s in range(len(outline))]
    return hexagon[:3] + cuts


def side_of(web: HourglassWeb, vertex: int) -> str:
    """Name of the hexagon side (or cut) a boundary vertex sits on."""
    p = web.vertices[vertex].position
    for name, a, b in _named_segments(web):
        if a != b and on_segment(p, a, b):
            return name
    raise TripError(f"Vertex {vertex} is not on the outline", internal=True)


def side_routes(web: HourglassWeb, a: int) -> Dict[Tuple[str, str], int]:
    """How many trips of index a run from each side to each side."""
    trips = all_trips(web)
    return dict(Counter((side_of(web, b), side_of(web, trips[(a, b)].end)) for b in web.boundary))
