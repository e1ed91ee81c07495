"""
Proper edge colorings of hourglass webs and the invariant expansion at q = 1.

A coloring gives every simple edge one color and every hourglass two
colors from {1, 2, 3, 4}, with the sets at each vertex pairwise disjoint.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .trips import separation_labels
from .web_builder import BLACK, BOUNDARY, HOURGLASS, HourglassWeb

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

COLORS = (1, 2, 3, 4)
SIMPLE_OPTIONS = tuple(frozenset([c]) for c in COLORS)
HOURGLASS_OPTIONS = tuple(frozenset(s) for s in combinations(COLORS, 2))

ProperColoring = Dict[int, FrozenSet[int]]


@dataclass(frozen=True)
class InvariantMonomial:
    sign: int
    factors: Tuple[Tuple[int, FrozenSet[int], str], ...]  # (position, colors, family)

    def to_json(self) -> Dict:
        return {"sign": self.sign,
                "factors": [{"pos": pos, "family": fam, "colors": sorted(cols)}
                            for pos, cols, fam in self.factors]}


def coinv(seq: Sequence[int]) -> int:
    """Number of position pairs i < j with seq[i] <= seq[j]."""
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] <= seq[j])


def _options(web: HourglassWeb, edge_id: int):
    return HOURGLASS_OPTIONS if web.edges[edge_id].kind == HOURGLASS else SIMPLE_OPTIONS


def _mask(colors: FrozenSet[int]) -> int:
    return sum(1 << (c - 1) for c in colors)


def _backtrack(web: HourglassWeb) -> Iterator[ProperColoring]:
    used = [0] * len(web.vertices)
    chosen: ProperColoring = {}
    edges = web.edges

    def rec(k: int) -> Iterator[ProperColoring]:
        if k == len(edges):
            yield dict(chosen)
            return
        e = edges[k]
        for option in _options(web, e.id):
            m = _mask(option)
            if used[e.black] & m or used[e.white] & m:
                continue
            used[e.black] |= m
            used[e.white] |= m
            chosen[e.id] = option
            yield from rec(k + 1)
            used[e.black] ^= m
            used[e.white] ^= m
        chosen.pop(e.id, None)

    yield from rec(0)


def enumerate_colorings(web: HourglassWeb) -> List[ProperColoring]:
    """All proper colorings, in lexicographic order of (edge id, color set)."""
    found = list(_backtrack(web))
    logger.info(f"Enumerated {len(found)} colorings on {len(web.edges)} edges")
    return found


def count_colorings(web: HourglassWeb) -> int:
    """Count proper colorings with a dynamic program over an edge frontier.

    The state is the set of colors already used at each vertex that still
    has unprocessed edges, so no coloring is ever materialized.
    """
    last = {}
    for e in web.edges:
        last[e.black] = e.id
        last[e.white] = e.id
    states: Dict[Tuple[Tuple[int, int], ...], int] = {(): 1}
    for e in web.edges:
        nxt: Dict[Tuple[Tuple[int, int], ...], int] = defaultdict(int)
        for state, ways in states.items():
            masks = dict(state)
            mb, mw = masks.get(e.black, 0), masks.get(e.white, 0)
            for option in _options(web, e.id):
                m = _mask(option)
                if mb & m or mw & m:
                    continue
                new = dict(masks)
                new[e.black] = mb | m
                new[e.white] = mw | m
                for v in (e.black, e.white):
                    if last[v] == e.id:
                        del new[v]
                nxt[tuple(sorted(new.items()))] += ways
        states = nxt
    return sum(states.values())


def count_colorings_backtracking(web: HourglassWeb) -> int:
    """Count proper colorings by depth-first search, one edge at a time."""
    edges = web.edges
    masks = [[_mask(o) for o in _options(web, e.id)] for e in edges]
    used = [0] * len(web.vertices)

    def rec(k: int) -> int:
        if k == len(edges):
            return 1
        b, w = edges[k].black, edges[k].white
        total = 0
        for m in masks[k]:
            if (used[b] | used[w]) & m:
                continue
            used[b] |= m
            used[w] |= m
            total += rec(k + 1)
            used[b] ^= m
            used[w] ^= m
        return total

    return rec(0)


def _completions(free: int, pending: Sequence[Sequence[int]]) -> int:
    if not pending:
        return 1
    return sum(_completions(free & ~m, pending[1:]) for m in pending[0] if not m & ~free)


def count_colorings_exhaustive(web: HourglassWeb) -> int:
    """Count proper colorings by trying every assignment of the non-boundary edges.

    Boundary edges are filled in by counting the ways left at their inner
    vertex. The product grows as 6^h * 4^s, so this is for the smallest webs.
    """
    full = _mask(frozenset(COLORS))
    inner, pending = [], defaultdict(list)
    factor = 1
    for e in web.edges:
        options = [_mask(o) for o in _options(web, e.id)]
        ends = [v for v in (e.black, e.white) if web.vertices[v].kind != BOUNDARY]
        if len(ends) == 2:
            inner.append((e, options))
        elif ends:
            pending[ends[0]].append(options)
        else:
            factor *= len(options)
    total = 0
    for choice in product(*(options for _, options in inner)):
        used: Dict[int, int] = defaultdict(int)
        clash = False
        for (e, _), m in zip(inner, choice):
            if (used[e.black] | used[e.white]) & m:
                clash = True
                break
            used[e.black] |= m
            used[e.white] |= m
        if clash:
            continue
        ways = 1
        for v, opts in pending.items():
            ways *= _completions(full & ~used[v], opts)
            if not ways:
                break
        total += ways
    logger.info(f"Exhaustive count tried {len(inner)} inner edges")
    return total * factor


def is_proper(web: HourglassWeb, coloring: ProperColoring) -> bool:
    used = [0] * len(web.vertices)
    for e in web.edges:
        colors = coloring.get(e.id)
        if colors is None or len(colors) != (2 if e.kind == HOURGLASS else 1):
            return False
        m = _mask(colors)
        if used[e.black] & m or used[e.white] & m:
            return False
        used[e.black] |= m
        used[e.white] |= m
    return True


def separation_coloring(web: HourglassWeb) -> ProperColoring:
    """Separation labels read as a coloring."""
    return {e: (v if isinstance(v, frozenset) else frozenset([v]))
            for e, v in separation_labels(web).items()}


def boundary_colors(web: HourglassWeb, coloring: ProperColoring) -> Tuple[int, ...]:
    out = []
    for i in range(web.n):
        (c,) = coloring[web.boundary_edge(i).id]
        out.append(c)
    return tuple(out)


def monomial(web: HourglassWeb, coloring: ProperColoring) -> InvariantMonomial:
    """x-variables at black boundary vertices, y-variables at white ones."""
    seq = boundary_colors(web, coloring)
    factors = []
    for i, v in enumerate(web.boundary):
        family = "x" if web.vertices[v].color == BLACK else "y"
        factors.append((i + 1, frozenset([seq[i]]), family))
    return InvariantMonomial(-1 if coinv(seq) % 2 else 1, tuple(factors))


def invariant_at_q1(web: HourglassWeb) -> List[InvariantMonomial]:
    return [monomial(web, k) for k in enumerate_colorings(web)]
