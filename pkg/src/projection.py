"""
Projection of symmetric-class boundary words to rank 2 and rank 3.

The letters every word of a class shares are dropped and the rest shifted
down by the number of rows they filled. Rank-2 results are grown into
marked non-crossing matchings.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .plane_partitions import PlanePartition, SymmetryClass
from .symmetry_words import ClassWordSpec, validate_word
from .tableaux import LatticeWord, Token, is_yamanouchi, type_vector
from .trips import boundary_word
from .web_builder import restrict_to_fundamental_domain

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

PROJECTABLE = (SymmetryClass.SPP, SymmetryClass.TSPP, SymmetryClass.TSSCPP)

PLAIN = "plain"
WHITE_MID = "white"
BLACK_MID = "black"


class ProjectionError(ValueError):
    """Projection requested for an unsupported class or an unmatched word."""


@dataclass(frozen=True)
class ReducedWord:
    word: LatticeWord
    source: LatticeWord
    cls: SymmetryClass
    kept: Tuple[int, ...]  # letter positions of the source that survive

    def source_type_vector(self) -> Tuple[int, ...]:
        full = type_vector(self.source)
        return tuple(full[k] for k in self.kept)


@dataclass(frozen=True)
class MatchingPoint:
    color: str
    label: int


@dataclass(frozen=True)
class MatchingEdge:
    i: int
    j: int
    mark: str


@dataclass(frozen=True)
class MarkedNonCrossingMatching:
    points: Tuple[MatchingPoint, ...]
    edges: Tuple[MatchingEdge, ...]

    def edge_set(self) -> frozenset:
        return frozenset((e.i, e.j, e.mark) for e in self.edges)


def _shift(token: Token, by: int) -> Token:
    return tuple(x - by if x > 0 else x + by for x in token)


def _drop_positions(spec: ClassWordSpec, n_tokens: int) -> Tuple[set, int]:
    """Token positions every word of the class shares, and the row shift."""
    if spec.cls is SymmetryClass.SPP:
        a, c = spec.a, spec.c
        return set(range(a)) | set(range(a + c, 2 * a + c)), 2
    if spec.cls is SymmetryClass.TSPP:
        return set(range(spec.a)), 1
    d = spec.d
    alternation_twos = {d + 2 * k for k in range(d)}
    return set(range(d)) | alternation_twos | {n_tokens - 1}, 2


def project_word(spec: ClassWordSpec, word: LatticeWord) -> ReducedWord:
    """Drop the class's fixed letters and shift the rest down.

    Raises:
        ProjectionError: for CSPP, or a word that is not a word of the class
    """
    if spec.cls is SymmetryClass.CSPP:
        raise ProjectionError("The projection is undefined for cyclically symmetric plane partitions (CSPP)")
    if spec.cls not in PROJECTABLE:
        raise ProjectionError(f"No projection for class {spec.cls.value}")
    if not validate_word(spec, word):
        raise ProjectionError(f"Word is not a boundary word of {spec.describe()}")
    tokens = word.tokens()
    drop, shift = _drop_positions(spec, len(tokens))
    kept_tokens: List[Token] = []
    kept_letters: List[int] = []
    k = 0
    for t, tok in enumerate(tokens):
        if t not in drop:
            kept_tokens.append(_shift(tok, shift))
            kept_letters.extend(range(k, k + len(tok)))
        k += len(tok)
    reduced = LatticeWord.from_tokens(kept_tokens, 4 - shift)
    if not is_yamanouchi(reduced):
        logger.error(f"Projected word of {spec.describe()} is not Yamanouchi")
        raise ProjectionError(f"Projected word is not Yamanouchi at rank {reduced.rank}")
    return ReducedWord(reduced, word, spec.cls, tuple(kept_letters))


def _mark(opener: MatchingPoint, closer: MatchingPoint) -> str:
    labels = (opener.label, closer.label)
    if labels == (1, 2) and opener.color == closer.color == "black":
        return WHITE_MID
    if labels == (2, 1) and opener.color == closer.color == "white":
        return BLACK_MID
    return PLAIN


def sl2_growth(word: LatticeWord) -> MarkedNonCrossingMatching:
    """Connect the half-edges of a rank-2 word into a marked non-crossing matching.

    Unbarred 1 and barred 2 open an arc, unbarred 2 and barred 1 close the
    most recently opened one.

    Raises:
        ProjectionError: if the word is not rank 2 or leaves arcs unmatched
    """
    if word.rank != 2:
        raise ProjectionError(f"Growth needs a rank-2 word, got rank {word.rank}")
    points = tuple(MatchingPoint("black" if x > 0 else "white", abs(x)) for x in word.letters)
    stack: List[int] = []
    edges = []
    for pos, x in enumerate(word.letters, start=1):
        if x in (1, -2):
            stack.append(pos)
            continue
        if not stack:
            raise ProjectionError(f"Letter {x} at position {pos} has no open arc to close")
        i = stack.pop()
        edges.append(MatchingEdge(i, pos, _mark(points[i - 1], points[pos - 1])))
    if stack:
        raise ProjectionError(f"Positions {stack} are left unmatched")
    return MarkedNonCrossingMatching(points, tuple(sorted(edges, key=lambda e: e.i)))


def matching_validate(m: MarkedNonCrossingMatching) -> bool:
    """Perfect, non-crossing, and marked according to the endpoint labels."""
    n = len(m.points)
    seen = set()
    for e in m.edges:
        if not 1 <= e.i < e.j <= n or e.i in seen or e.j in seen:
            return False
        seen.update((e.i, e.j))
    if len(seen) != n:
        return False
    for e in m.edges:
        for f in m.edges:
            if e.i < f.i < e.j < f.j:
                return False
    return all(e.mark == _mark(m.points[e.i - 1], m.points[e.j - 1]) for e in m.edges)


def matching_to_json(m: MarkedNonCrossingMatching) -> Dict:
    return {
        "points": [{"color": p.color, "label": p.label} for p in m.points],
        "edges": [{"ends": [e.i, e.j], "mark": e.mark} for e in m.edges],
    }


def project_plane_partition(p: PlanePartition, cls: SymmetryClass
                            ) -> Tuple[LatticeWord, ReducedWord, Optional[MarkedNonCrossingMatching]]:
    """Restrict, read the boundary word, project it, and grow the matching at rank 2."""
    if cls is SymmetryClass.CSPP:
        raise ProjectionError("The projection is undefined for cyclically symmetric plane partitions (CSPP)")
    if cls not in PROJECTABLE:
        raise ProjectionError(f"No projection for class {cls.value}")
    word = boundary_word(restrict_to_fundamental_domain(p, cls))
    reduced = project_word(ClassWordSpec.for_box(cls, p.box), word)
    matching = sl2_growth(reduced.word) if reduced.word.rank == 2 else None
    return word, reduced, matching
